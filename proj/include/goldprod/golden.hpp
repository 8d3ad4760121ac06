#pragma once

#include <cstdint>
#include <string>

#include "goldprod/bigreal.hpp"
#include "goldprod/rational.hpp"

namespace goldprod {

// Exact element a + b*sqrt(5) of the quadratic field Q(sqrt5).  The
// representation is unique because sqrt5 is irrational, so equality is
// componentwise.  tau = (1+sqrt5)/2 and every quantity 1 - tau^-k live here
// with zero error; rounding happens only on conversion to BigReal.
class GoldenNumber {
 public:
  GoldenNumber() = default;  // zero
  GoldenNumber(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}
  explicit GoldenNumber(Rational a) : a_(std::move(a)) {}

  static GoldenNumber tau() { return {Rational(1, 2), Rational(1, 2)}; }
  static GoldenNumber one() { return GoldenNumber{Rational(1)}; }

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt5_part() const { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }

  // Exact sign of the real number a + b*sqrt5 (compares a^2 against 5 b^2
  // when the components disagree in sign).
  int sign() const;

  GoldenNumber operator-() const { return {-a_, -b_}; }
  GoldenNumber& operator+=(const GoldenNumber& o);
  GoldenNumber& operator-=(const GoldenNumber& o);
  GoldenNumber& operator*=(const GoldenNumber& o);

  friend GoldenNumber operator+(GoldenNumber x, const GoldenNumber& y) { return x += y; }
  friend GoldenNumber operator-(GoldenNumber x, const GoldenNumber& y) { return x -= y; }
  friend GoldenNumber operator*(GoldenNumber x, const GoldenNumber& y) { return x *= y; }

  // Reciprocal via the conjugate: 1/(a+b*sqrt5) = (a-b*sqrt5)/(a^2-5b^2).
  // Throws std::domain_error on zero.  The norm a^2-5b^2 cannot vanish for a
  // nonzero element (sqrt5 is irrational), asserted rather than branched on.
  GoldenNumber inverse() const;

  friend bool operator==(const GoldenNumber& x, const GoldenNumber& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const GoldenNumber& x, const GoldenNumber& y) { return !(x == y); }

  std::string str() const;  // e.g. "1/2 + 1/2*sqrt5"

 private:
  Rational a_;
  Rational b_;
};

enum class GoldenOp { add, sub, mul };

GoldenNumber golden_arith(GoldenOp op, const GoldenNumber& g1, const GoldenNumber& g2);

inline GoldenNumber golden_tau() { return GoldenNumber::tau(); }
inline GoldenNumber golden_inverse(const GoldenNumber& g) { return g.inverse(); }

// Exact tau^k via the closed form tau^k = F(k)*tau + F(k-1), Fibonacci
// numbers extended to negative index by F(-m) = (-1)^(m+1) F(m).  This keeps
// the rational components as small as they can be.  |k| <= kTauPowerMaxExp.
inline constexpr long kTauPowerMaxExp = 1000000;
GoldenNumber tau_power(long k);

// Binary powering over the field; the cross-check path for tau_power
// (both must agree bit-exactly) and the general g^n when g is not tau.
GoldenNumber golden_pow(const GoldenNumber& g, long n);

// Rounded conversion to BigReal, within 1 ulp at precision_bits for the
// default nearest rounding.  Directed modes (RNDU/RNDD) yield guaranteed
// upper/lower bounds, used when computing certified tail bounds.
BigReal golden_to_real(const GoldenNumber& g, long precision_bits,
                       mpfr_rnd_t rnd = MPFR_RNDN);

inline BigReal golden_to_real(const GoldenNumber& g, const PrecisionCtx& ctx) {
  return golden_to_real(g, ctx.working_bits());
}

}  // namespace goldprod
