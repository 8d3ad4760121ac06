// Python face of the library: thin wrappers that return plain dicts, ints,
// Fractions and decimal strings, so nothing gmp-flavoured leaks into python.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <vector>

#include "goldprod/arithfn.hpp"
#include "goldprod/bigreal.hpp"
#include "goldprod/golden.hpp"
#include "goldprod/identities.hpp"

namespace py = pybind11;
using namespace goldprod;

namespace {

py::int_ to_py_int(const mpz_class& v) {
  return py::reinterpret_steal<py::int_>(
      PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

py::object to_fraction(const Rational& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(r.str());
}

py::list table_to_list(const ArithFnTable& t) {
  py::list out;
  for (const mpz_class& v : t.values()) out.append(to_py_int(v));
  return out;
}

std::vector<mpz_class> list_to_values(const py::sequence& seq) {
  std::vector<mpz_class> values;
  values.reserve(seq.size());
  for (py::handle h : seq) {
    values.emplace_back(py::str(h).cast<std::string>());
  }
  return values;
}

EvalPoint point_from_string(const std::string& x) {
  if (x == "1/tau") return EvalPoint::inverse_tau();
  return EvalPoint::rational(Rational::parse(x));
}

py::dict truncation_to_dict(const TruncationReport& r, std::size_t digits) {
  py::dict d;
  d["identity"] = identity_tag_name(r.identity);
  d["terms"] = r.terms_used;
  d["precision_bits"] = r.precision.target_bits;
  d["partial"] = r.partial.decimal(digits);
  d["target"] = r.target.decimal(digits);
  d["abs_diff"] = r.abs_diff.decimal(digits);
  d["tail_bound"] = r.tail_bound.decimal(digits);
  d["pass"] = r.pass;
  return d;
}

py::dict check_to_dict(const IdentityCheck& c, std::size_t digits) {
  py::dict d;
  d["lhs"] = c.lhs.decimal(digits);
  d["rhs"] = c.rhs.decimal(digits);
  d["abs_diff"] = c.abs_diff.decimal(digits);
  d["bound"] = c.bound.decimal(digits);
  d["pass"] = c.pass;
  return d;
}

SpecialVariant variant_from_string(const std::string& name) {
  if (name == "exp_x") return SpecialVariant::exp_x;
  if (name == "exp_x_over_1mx") return SpecialVariant::exp_x_over_1mx;
  if (name == "exp_x2_over_1mx") return SpecialVariant::exp_x2_over_1mx;
  throw std::invalid_argument("unknown variant: " + name);
}

ArithFnTable table_from_fn(const std::string& fn, std::uint64_t limit) {
  if (fn == "mu") return sieve_mobius(limit);
  if (fn == "phi") return sieve_totient(limit);
  if (fn == "one") return ones_table(limit);
  throw std::invalid_argument("unknown fn: " + fn);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "number-theoretic tables and certified golden-ratio product identities";

  m.def(
      "mobius_range", [](std::uint64_t limit) { return table_to_list(sieve_mobius(limit)); },
      py::arg("limit"), "mu(1..limit)");
  m.def(
      "totient_range",
      [](std::uint64_t limit) { return table_to_list(sieve_totient(limit)); },
      py::arg("limit"), "phi(1..limit)");
  m.def(
      "dirichlet_one_convolve",
      [](const py::sequence& f) {
        return table_to_list(dirichlet_one_convolve(ArithFnTable::custom(list_to_values(f))));
      },
      py::arg("f"), "(1*f)(1..len(f)) for f given as f(1..n)");
  m.def(
      "totient_from_mobius",
      [](std::uint64_t n) { return to_py_int(totient_from_mobius(n, sieve_mobius(n))); },
      py::arg("n"), "phi(n) recovered from the mu divisor sum");
  m.def(
      "verify_divisor_sums",
      [](std::uint64_t limit) {
        DivisorSumReport r = verify_divisor_sums(limit);
        py::dict d;
        d["limit"] = r.limit;
        d["phi_identity_ok"] = r.phi_identity_ok;
        d["mu_identity_ok"] = r.mu_identity_ok;
        d["pass"] = r.pass();
        return d;
      },
      py::arg("limit"));

  m.def(
      "tau_power",
      [](long k) {
        GoldenNumber g = tau_power(k);
        return py::make_tuple(to_fraction(g.rational_part()), to_fraction(g.sqrt5_part()));
      },
      py::arg("k"), "tau^k as (a, b) with tau^k = a + b*sqrt(5)");
  m.def(
      "tau_decimal",
      [](long k, long prec_bits, std::size_t digits) {
        return golden_to_real(tau_power(k), prec_bits).decimal(digits);
      },
      py::arg("k"), py::arg("prec_bits") = 128, py::arg("digits") = 30);

  m.def(
      "lemma1",
      [](const std::string& fn, const std::string& x, std::uint64_t terms, long prec_bits,
         std::size_t digits) {
        PrecisionCtx ctx(prec_bits);
        TruncationReport r = lemma1_sum(table_from_fn(fn, terms), point_from_string(x),
                                        terms, ctx);
        return truncation_to_dict(r, digits);
      },
      py::arg("fn"), py::arg("x"), py::arg("terms"), py::arg("prec_bits") = 128,
      py::arg("digits") = 30);
  m.def(
      "lemma2",
      [](std::uint64_t terms, long prec_bits, std::size_t digits) {
        PrecisionCtx ctx(prec_bits);
        Lemma2Report r = lemma2_pair(terms, ctx);
        py::dict d;
        d["phi_sum"] = truncation_to_dict(r.phi_sum, digits);
        d["mu_sum"] = truncation_to_dict(r.mu_sum, digits);
        d["reciprocal_product"] = check_to_dict(r.reciprocal_product, digits);
        d["pass"] =
            r.phi_sum.pass && r.mu_sum.pass && r.reciprocal_product.pass;
        return d;
      },
      py::arg("terms"), py::arg("prec_bits") = 128, py::arg("digits") = 30);
  m.def(
      "theorem_log_sum",
      [](std::uint64_t terms, long prec_bits, std::size_t digits) {
        PrecisionCtx ctx(prec_bits);
        return truncation_to_dict(theorem_log_sum(terms, ctx), digits);
      },
      py::arg("terms"), py::arg("prec_bits") = 128, py::arg("digits") = 30);
  m.def(
      "theorem_product",
      [](std::uint64_t terms, long prec_bits, std::size_t digits) {
        PrecisionCtx ctx(prec_bits);
        return truncation_to_dict(theorem_product(terms, ctx), digits);
      },
      py::arg("terms"), py::arg("prec_bits") = 128, py::arg("digits") = 30);
  m.def(
      "special_product",
      [](const std::string& variant, const std::string& x, std::uint64_t terms,
         long prec_bits, std::size_t digits) {
        PrecisionCtx ctx(prec_bits);
        IdentityCheck c = special_exp_products(variant_from_string(variant),
                                               Rational::parse(x), terms, ctx);
        return check_to_dict(c, digits);
      },
      py::arg("variant"), py::arg("x"), py::arg("terms"), py::arg("prec_bits") = 128,
      py::arg("digits") = 30);
  m.def(
      "general_identity",
      [](const py::sequence& f, const std::string& x, const std::string& growth_c,
         std::uint64_t terms, long prec_bits, std::size_t digits) {
        PrecisionCtx ctx(prec_bits);
        IdentityCheck c =
            general_identity_check(ArithFnTable::custom(list_to_values(f)),
                                   Rational::parse(x), terms, Rational::parse(growth_c), ctx);
        return check_to_dict(c, digits);
      },
      py::arg("f"), py::arg("x"), py::arg("growth_c"), py::arg("terms"),
      py::arg("prec_bits") = 128, py::arg("digits") = 30);
  m.def(
      "formal_coefficients",
      [](const std::string& fn, std::uint64_t degree) {
        std::vector<Rational> coeffs = formal_coefficients(table_from_fn(fn, degree), degree);
        py::list out;
        for (const Rational& c : coeffs) out.append(to_fraction(c));
        return out;
      },
      py::arg("fn"), py::arg("degree"),
      "coefficients of x^1..x^degree of the formal log expansion");
}
