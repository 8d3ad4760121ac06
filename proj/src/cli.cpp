#include "goldprod/cli.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

namespace goldprod::cli {

namespace {

EvalPoint parse_point(const std::string& text, bool allow_inverse_tau) {
  try {
    if (text == "1/tau") {
      if (!allow_inverse_tau) {
        throw UsageError("--x must be a rational p/q for this command");
      }
      return EvalPoint::inverse_tau();
    }
    return EvalPoint::rational(Rational::parse(text));
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--x: ") + e.what());
  }
}

Rational parse_growth(const std::string& text) {
  try {
    Rational c = Rational::parse(text);
    if (c.sign() <= 0) throw UsageError("--growth-c must be positive");
    return c;
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--growth-c: ") + e.what());
  }
}

void check_numeric_ranges(const CliConfig& cfg) {
  if (cfg.precision_bits < 16 || cfg.precision_bits > (1L << 22)) {
    throw UsageError("--prec-bits must lie in [16, 4194304]");
  }
  if (cfg.digits < 1 || cfg.digits > 100000) {
    throw UsageError("--digits must lie in [1, 100000]");
  }
}

std::string fn_name(FnKind kind) {
  switch (kind) {
    case FnKind::mu: return "mu";
    case FnKind::phi: return "phi";
    case FnKind::one: return "one";
    case FnKind::custom: return "custom";
  }
  return "?";
}

void print_truncation(const TruncationReport& r, long digits, std::ostream& out) {
  const auto d = static_cast<std::size_t>(digits);
  out << "identity:       " << identity_tag_name(r.identity) << "\n"
      << "terms:          " << r.terms_used << "\n"
      << "precision_bits: " << r.precision.target_bits << "\n"
      << "partial:        " << r.partial.decimal(d) << "\n"
      << "target:         " << r.target.decimal(d) << "\n"
      << "abs_diff:       " << r.abs_diff.decimal(d) << "\n"
      << "tail_bound:     " << r.tail_bound.decimal(d) << "\n"
      << "status:         " << (r.pass ? "PASS" : "FAIL") << "\n";
}

void print_check(const char* label, const IdentityCheck& c, long digits,
                 std::ostream& out) {
  const auto d = static_cast<std::size_t>(digits);
  out << "check:          " << label << "\n"
      << "lhs:            " << c.lhs.decimal(d) << "\n"
      << "rhs:            " << c.rhs.decimal(d) << "\n"
      << "abs_diff:       " << c.abs_diff.decimal(d) << "\n"
      << "bound:          " << c.bound.decimal(d) << "\n"
      << "status:         " << (c.pass ? "PASS" : "FAIL") << "\n";
}

int run_tabulate(const CliConfig& cfg, std::ostream& out) {
  ArithFnTable table = cfg.fn == FnKind::mu ? sieve_mobius(cfg.limit)
                                            : sieve_totient(cfg.limit);
  std::ofstream file;
  std::ostream* os = &out;
  if (cfg.out) {
    file.open(*cfg.out);
    if (!file) throw std::runtime_error("cannot open output file: " + *cfg.out);
    os = &file;
  }

  const std::string name = fn_name(cfg.fn);
  switch (cfg.format) {
    case CliConfig::Format::text:
      for (std::uint64_t n = 1; n <= cfg.limit; ++n) {
        *os << n << " " << table[n].get_str() << "\n";
      }
      break;
    case CliConfig::Format::csv:
      *os << "n," << name << "\n";
      for (std::uint64_t n = 1; n <= cfg.limit; ++n) {
        *os << n << "," << table[n].get_str() << "\n";
      }
      break;
    case CliConfig::Format::json: {
      nlohmann::json j;
      j["fn"] = name;
      j["limit"] = cfg.limit;
      nlohmann::json values = nlohmann::json::array();
      for (std::uint64_t n = 1; n <= cfg.limit; ++n) {
        values.push_back(table[n].get_si());
      }
      j["values"] = std::move(values);
      *os << j.dump(2) << "\n";
      break;
    }
  }
  if (cfg.out && !*os) throw std::runtime_error("write failed: " + *cfg.out);
  return kExitPass;
}

int run_verify(const CliConfig& cfg, std::ostream& out) {
  PrecisionCtx ctx(cfg.precision_bits);
  switch (cfg.target) {
    case CliConfig::Target::lemma1: {
      ArithFnTable table = cfg.fn == FnKind::mu ? sieve_mobius(cfg.terms)
                                                : sieve_totient(cfg.terms);
      TruncationReport r = lemma1_sum(table, *cfg.x, cfg.terms, ctx);
      out << "x:              " << cfg.x->str() << "\n";
      print_truncation(r, cfg.digits, out);
      return r.pass ? kExitPass : kExitFail;
    }
    case CliConfig::Target::lemma2: {
      Lemma2Report r = lemma2_pair(cfg.terms, ctx);
      print_truncation(r.phi_sum, cfg.digits, out);
      out << "\n";
      print_truncation(r.mu_sum, cfg.digits, out);
      out << "\n";
      print_check("reciprocal_product", r.reciprocal_product, cfg.digits, out);
      bool pass = r.phi_sum.pass && r.mu_sum.pass && r.reciprocal_product.pass;
      out << "overall:        " << (pass ? "PASS" : "FAIL") << "\n";
      return pass ? kExitPass : kExitFail;
    }
    case CliConfig::Target::theorem: {
      TruncationReport log_r = theorem_log_sum(cfg.terms, ctx);
      TruncationReport prod_r = theorem_product(cfg.terms, ctx);
      print_truncation(log_r, cfg.digits, out);
      out << "\n";
      print_truncation(prod_r, cfg.digits, out);
      bool pass = log_r.pass && prod_r.pass;
      out << "overall:        " << (pass ? "PASS" : "FAIL") << "\n";
      return pass ? kExitPass : kExitFail;
    }
    case CliConfig::Target::special: {
      IdentityCheck c = special_exp_products(*cfg.variant, cfg.x->value(), cfg.terms, ctx);
      out << "x:              " << cfg.x->str() << "\n"
          << "terms:          " << cfg.terms << "\n";
      const char* label = *cfg.variant == SpecialVariant::exp_x ? "exp_x"
                          : *cfg.variant == SpecialVariant::exp_x_over_1mx
                              ? "exp_x_over_1mx"
                              : "exp_x2_over_1mx";
      print_check(label, c, cfg.digits, out);
      return c.pass ? kExitPass : kExitFail;
    }
    case CliConfig::Target::general: {
      ArithFnTable table = load_custom_table(*cfg.f_file);
      IdentityCheck c =
          general_identity_check(table, cfg.x->value(), cfg.terms, *cfg.growth_c, ctx);
      out << "x:              " << cfg.x->str() << "\n"
          << "terms:          " << cfg.terms << "\n"
          << "growth_c:       " << cfg.growth_c->str() << "\n";
      print_check("general_identity", c, cfg.digits, out);
      return c.pass ? kExitPass : kExitFail;
    }
    default:
      throw std::logic_error("run_verify: unhandled target");
  }
}

}  // namespace

std::optional<CliConfig> parse_args(const std::vector<std::string>& argv,
                                    std::ostream& out) {
  CliConfig cfg;
  std::string fn_s;
  std::string x_s;
  std::string format_s = "text";
  std::string variant_s;
  std::string identity_s;
  std::string growth_s;
  std::string f_file_s;
  std::string out_s;

  CLI::App app{"number-theoretic tables and certified identity checks"};
  app.require_subcommand(1);

  CLI::App* tab = app.add_subcommand("tabulate", "print mu or phi up to a limit");
  tab->add_option("--fn", fn_s, "function: mu or phi")
      ->required()
      ->check(CLI::IsMember({"mu", "phi"}));
  tab->add_option("--limit", cfg.limit, "largest n")
      ->required()
      ->check(CLI::Range(std::uint64_t{1}, kMaxSieveLimit));
  tab->add_option("--format", format_s, "text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  tab->add_option("--out", out_s, "write to this file instead of stdout");

  CLI::App* verify = app.add_subcommand("verify", "check one identity to precision");
  verify->require_subcommand(1);
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--prec-bits", cfg.precision_bits, "target precision in bits");
    sub->add_option("--digits", cfg.digits, "printed significant digits");
  };

  CLI::App* l1 = verify->add_subcommand("lemma1", "log-sum identity at rational x or 1/tau");
  l1->add_option("--fn", fn_s, "function: phi or mu")
      ->required()
      ->check(CLI::IsMember({"mu", "phi"}));
  l1->add_option("--x", x_s, "evaluation point p/q in (0,1), or 1/tau")->required();
  l1->add_option("--terms", cfg.terms, "truncation length")
      ->required()
      ->check(CLI::Range(std::uint64_t{1}, kMaxSieveLimit));
  add_common(l1);

  CLI::App* l2 = verify->add_subcommand("lemma2", "both golden-point sums and their product");
  l2->add_option("--terms", cfg.terms, "truncation length")
      ->required()
      ->check(CLI::Range(std::uint64_t{1}, kMaxSieveLimit));
  add_common(l2);

  CLI::App* thm = verify->add_subcommand("theorem", "log sum and product against e");
  thm->add_option("--terms", cfg.terms, "truncation length")
      ->required()
      ->check(CLI::Range(std::uint64_t{1}, kMaxSieveLimit));
  add_common(thm);

  CLI::App* spc = verify->add_subcommand("special", "closed-form exponential products");
  spc->add_option("--variant", variant_s, "exp_x, exp_x_over_1mx or exp_x2_over_1mx")
      ->required()
      ->check(CLI::IsMember({"exp_x", "exp_x_over_1mx", "exp_x2_over_1mx"}));
  spc->add_option("--x", x_s, "evaluation point p/q in (0,1)")->required();
  spc->add_option("--terms", cfg.terms, "truncation length")
      ->required()
      ->check(CLI::Range(std::uint64_t{1}, kMaxSieveLimit));
  add_common(spc);

  CLI::App* gen = verify->add_subcommand("general", "product/exp-sum identity for a custom f");
  gen->add_option("--f-file", f_file_s, "table file: csv n,f(n) or .json array")->required();
  gen->add_option("--growth-c", growth_s, "constant with |f(n)| <= C*n")->required();
  gen->add_option("--x", x_s, "evaluation point p/q in (0,1)")->required();
  gen->add_option("--terms", cfg.terms, "truncation length")
      ->required()
      ->check(CLI::Range(std::uint64_t{1}, kMaxSieveLimit));
  add_common(gen);

  CLI::App* conv = app.add_subcommand("converge", "partial-value trace as csv");
  conv->add_option("--identity", identity_s, "theorem or lemma2")
      ->required()
      ->check(CLI::IsMember({"theorem", "lemma2"}));
  conv->add_option("--max-terms", cfg.terms, "largest truncation length")
      ->required()
      ->check(CLI::Range(std::uint64_t{1}, kMaxSieveLimit));
  conv->add_option("--stride", cfg.stride, "step between rows")
      ->check(CLI::Range(std::uint64_t{1}, kMaxSieveLimit));
  conv->add_option("--out", out_s, "write to this file instead of stdout");
  add_common(conv);

  std::vector<std::string> reversed(argv.rbegin(), argv.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  check_numeric_ranges(cfg);
  if (!out_s.empty()) cfg.out = out_s;
  if (format_s == "text") cfg.format = CliConfig::Format::text;
  else if (format_s == "csv") cfg.format = CliConfig::Format::csv;
  else cfg.format = CliConfig::Format::json;

  if (tab->parsed()) {
    cfg.command = CliConfig::Command::tabulate;
    cfg.fn = fn_s == "mu" ? FnKind::mu : FnKind::phi;
    cfg.target = fn_s == "mu" ? CliConfig::Target::mu : CliConfig::Target::phi;
    return cfg;
  }

  if (conv->parsed()) {
    cfg.command = CliConfig::Command::converge;
    cfg.target = identity_s == "theorem" ? CliConfig::Target::theorem
                                         : CliConfig::Target::lemma2;
    return cfg;
  }

  cfg.command = CliConfig::Command::verify;
  if (l1->parsed()) {
    cfg.target = CliConfig::Target::lemma1;
    cfg.fn = fn_s == "mu" ? FnKind::mu : FnKind::phi;
    cfg.x = parse_point(x_s, /*allow_inverse_tau=*/true);
  } else if (l2->parsed()) {
    cfg.target = CliConfig::Target::lemma2;
  } else if (thm->parsed()) {
    cfg.target = CliConfig::Target::theorem;
  } else if (spc->parsed()) {
    cfg.target = CliConfig::Target::special;
    cfg.x = parse_point(x_s, /*allow_inverse_tau=*/false);
    if (variant_s == "exp_x") cfg.variant = SpecialVariant::exp_x;
    else if (variant_s == "exp_x_over_1mx") cfg.variant = SpecialVariant::exp_x_over_1mx;
    else cfg.variant = SpecialVariant::exp_x2_over_1mx;
  } else if (gen->parsed()) {
    cfg.target = CliConfig::Target::general;
    cfg.x = parse_point(x_s, /*allow_inverse_tau=*/false);
    cfg.f_file = f_file_s;
    cfg.growth_c = parse_growth(growth_s);
  } else {
    throw UsageError("missing verify subcommand");
  }
  return cfg;
}

int run_command(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  (void)err;
  switch (cfg.command) {
    case CliConfig::Command::tabulate:
      return run_tabulate(cfg, out);
    case CliConfig::Command::verify:
      return run_verify(cfg, out);
    case CliConfig::Command::converge: {
      std::ofstream file;
      std::ostream* os = &out;
      if (cfg.out) {
        file.open(*cfg.out);
        if (!file) throw std::runtime_error("cannot open output file: " + *cfg.out);
        os = &file;
      }
      emit_trace(cfg.target, cfg.terms, cfg.stride, cfg, *os);
      if (cfg.out && !file) throw std::runtime_error("write failed: " + *cfg.out);
      return kExitPass;
    }
  }
  throw std::logic_error("run_command: unhandled command");
}

void emit_trace(CliConfig::Target identity, std::uint64_t max_terms,
                std::uint64_t stride, const CliConfig& cfg, std::ostream& out) {
  if (identity != CliConfig::Target::theorem && identity != CliConfig::Target::lemma2) {
    throw std::invalid_argument("emit_trace: identity must be theorem or lemma2");
  }
  if (stride == 0) throw std::invalid_argument("emit_trace: stride must be >= 1");
  PrecisionCtx ctx(cfg.precision_bits);
  const auto d = static_cast<std::size_t>(cfg.digits);

  out << "N,partial,abs_error,tail_bound\n";
  for (std::uint64_t n = stride; n <= max_terms; n += stride) {
    TruncationReport r = identity == CliConfig::Target::theorem
                             ? theorem_product(n, ctx)
                             : lemma1_sum(sieve_totient(n), EvalPoint::inverse_tau(), n, ctx);
    out << n << "," << r.partial.decimal(d) << "," << r.abs_diff.decimal(d) << ","
        << r.tail_bound.decimal(d) << "\n";
  }
}

ArithFnTable load_custom_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open table file: " + path);

  std::vector<mpz_class> values;
  if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") {
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw std::runtime_error("bad json in " + path + ": " + e.what());
    }
    if (!j.is_array() || j.empty()) {
      throw std::runtime_error("table file must hold a non-empty json array: " + path);
    }
    for (const auto& el : j) {
      if (el.is_number_integer()) {
        values.emplace_back(static_cast<long>(el.get<long long>()));
      } else if (el.is_string()) {
        try {
          values.emplace_back(el.get<std::string>());
        } catch (const std::invalid_argument&) {
          throw std::runtime_error("non-integer entry in " + path);
        }
      } else {
        throw std::runtime_error("non-integer entry in " + path);
      }
    }
  } else {
    std::string line;
    std::uint64_t expect = 1;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line[0] == '#') continue;
      if (expect == 1 && line == "n,f(n)") continue;  // optional header
      std::size_t comma = line.find(',');
      if (comma == std::string::npos) {
        throw std::runtime_error("expected 'n,f(n)' line in " + path + ": " + line);
      }
      std::uint64_t n = 0;
      try {
        n = std::stoull(line.substr(0, comma));
      } catch (const std::exception&) {
        throw std::runtime_error("bad index in " + path + ": " + line);
      }
      if (n != expect) {
        throw std::runtime_error("indices must be contiguous from 1 in " + path +
                                 ", got " + line.substr(0, comma) + " expecting " +
                                 std::to_string(expect));
      }
      std::string value = line.substr(comma + 1);
      if (value.empty()) throw std::runtime_error("missing value in " + path + ": " + line);
      try {
        values.emplace_back(value);
      } catch (const std::invalid_argument&) {
        throw std::runtime_error("bad integer value in " + path + ": " + line);
      }
      ++expect;
    }
    if (values.empty()) throw std::runtime_error("no table rows in " + path);
  }
  return ArithFnTable::custom(std::move(values));
}

}  // namespace goldprod::cli
