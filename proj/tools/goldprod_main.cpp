#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "goldprod/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    std::optional<goldprod::cli::CliConfig> cfg = goldprod::cli::parse_args(args, std::cout);
    if (!cfg) return goldprod::cli::kExitPass;  // help was printed
    return goldprod::cli::run_command(*cfg, std::cout, std::cerr);
  } catch (const goldprod::cli::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return goldprod::cli::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return goldprod::cli::kExitFail;
  }
}
