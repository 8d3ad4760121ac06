#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "goldprod/identities.hpp"

namespace goldprod::cli {

// Command-line misuse: unknown flag, missing value, malformed rational,
// out-of-domain x.  Mapped to exit code 2.
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

struct CliConfig {
  enum class Command { tabulate, verify, converge };
  enum class Target { mu, phi, lemma1, lemma2, theorem, general, special };
  enum class Format { text, csv, json };

  Command command = Command::verify;
  Target target = Target::theorem;

  std::uint64_t limit = 0;   // tabulate
  std::uint64_t terms = 0;   // verify / converge max-terms
  std::uint64_t stride = 1;  // converge

  long precision_bits = 128;
  long digits = 30;

  std::optional<EvalPoint> x;            // lemma1 / general / special
  FnKind fn = FnKind::phi;               // tabulate / verify lemma1
  std::optional<std::string> f_file;     // verify general
  std::optional<Rational> growth_c;      // verify general
  std::optional<SpecialVariant> variant; // verify special

  Format format = Format::text;
  std::optional<std::string> out;
};

// Exit codes of the goldprod executable.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;   // verification failure or runtime error
inline constexpr int kExitUsage = 2;  // bad invocation

// Parses and validates argv (program name excluded).  Returns nullopt when
// help was requested and printed.  Throws UsageError on bad usage.
std::optional<CliConfig> parse_args(const std::vector<std::string>& argv,
                                    std::ostream& out);

// Executes a validated config, printing reports to `out` and errors to
// `err`.  Returns kExitPass iff every pass flag is true.
int run_command(const CliConfig& cfg, std::ostream& out, std::ostream& err);

// Convergence trace: CSV `N,partial,abs_error,tail_bound`, one row per
// N in {stride, 2*stride, ..., max_terms}, decimals at cfg.digits.
// identity must be theorem (partial P_N vs e) or lemma2 (the phi-side sum
// vs tau).
void emit_trace(CliConfig::Target identity, std::uint64_t max_terms,
                std::uint64_t stride, const CliConfig& cfg, std::ostream& out);

// Custom-f table file: CSV lines "n,f(n)" with n contiguous from 1, or a
// JSON integer array when the path ends in .json.
ArithFnTable load_custom_table(const std::string& path);

}  // namespace goldprod::cli
