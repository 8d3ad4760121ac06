#pragma once

#include <mpfr.h>

#include <cstdint>
#include <span>
#include <string>

#include "goldprod/rational.hpp"

namespace goldprod {

// Precision policy for one evaluation, passed by value; there is no ambient
// rounding mode or global precision anywhere in this library.
//
// Error accounting (no interval arithmetic): every primitive below rounds
// correctly at working_bits() = target_bits + guard_bits.  An evaluation of M
// correctly-rounded operations on values of comparable magnitude accumulates
// relative error at most M * 2^(1-working_bits).  With
//   guard_bits = 64 + ceil(log2(M))
// that is at most 2^(-target_bits-63), so any public result is accurate to
// target_bits with 2^63 headroom to spare.  Sums in this project have at most
// ~10^5 terms (a few times that in operations), hence the default term hint.
struct PrecisionCtx {
  long target_bits;
  long guard_bits;

  static constexpr std::uint64_t kDefaultTermHint = 100000;

  explicit PrecisionCtx(long target, std::uint64_t term_hint = kDefaultTermHint);

  long working_bits() const { return target_bits + guard_bits; }
};

// Arbitrary-precision real number.  Wraps one mpfr value; the precision the
// value was produced at travels with it.  Only finite values can be
// constructed or produced: anything that would yield NaN or an infinity is a
// hard error in the operation instead.
class BigReal {
 public:
  explicit BigReal(long precision_bits);
  BigReal(const BigReal& o);
  BigReal(BigReal&& o) noexcept;
  BigReal& operator=(const BigReal& o);
  BigReal& operator=(BigReal&& o) noexcept;
  ~BigReal();

  static BigReal of_long(long v, long precision_bits);
  static BigReal of_rational(const Rational& r, long precision_bits,
                             mpfr_rnd_t rnd = MPFR_RNDN);

  long precision_bits() const { return mpfr_get_prec(v_); }
  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }

  // 2^(E - precision_bits) scaled by n, where E is the binary exponent:
  // the spacing of representable values around *this.
  BigReal ulp(long n = 1) const;

  BigReal abs() const;
  BigReal neg() const;
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  // Round-to-nearest decimal rendering with `digits` significant digits.
  // Fixed notation (sign, integer part, '.', fraction digits) for
  // |x| in [1e-3, 1e9), "0" for zero, d.ddd...e<exp> otherwise.
  std::string decimal(std::size_t digits) const;

  friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) != 0; }
  friend bool operator<(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

 private:
  mpfr_t v_;
};

enum class RealOp { add, sub, mul, div, sqrt };

// Basic arithmetic, correctly rounded to nearest at ctx.working_bits()
// (error <= 1/2 ulp).  div rejects a zero divisor, sqrt a negative operand.
BigReal real_add(const BigReal& a, const BigReal& b, const PrecisionCtx& ctx);
BigReal real_sub(const BigReal& a, const BigReal& b, const PrecisionCtx& ctx);
BigReal real_mul(const BigReal& a, const BigReal& b, const PrecisionCtx& ctx);
BigReal real_div(const BigReal& a, const BigReal& b, const PrecisionCtx& ctx);
BigReal real_sqrt(const BigReal& a, const PrecisionCtx& ctx);

// Enum-dispatched form of the above; sqrt takes one operand, the rest two.
BigReal real_eval(RealOp op, std::span<const BigReal> operands, const PrecisionCtx& ctx);

// Natural logarithm, x > 0.  Within 2 ulp at working precision (mpfr is
// correctly rounded, so in fact within 1/2 ulp).
BigReal real_ln(const BigReal& x, const PrecisionCtx& ctx);

// Exponential.  |x| <= kExpArgBound; within 2 ulp at working precision.
inline constexpr long kExpArgBound = 1L << 30;
BigReal real_exp(const BigReal& x, const PrecisionCtx& ctx);

// base^exponent = exp(exponent * ln base), within 4 ulp at working precision.
// exponent 0 short-circuits to exactly 1, exponent 1 returns base unchanged.
// Requires base > 0 (or exponent 0 with base != 0).
BigReal real_pow_rational(const BigReal& base, const Rational& exponent,
                          const PrecisionCtx& ctx);

struct SeriesResult {
  BigReal value;       // sum_{j=1..terms} y^j / j
  BigReal tail_bound;  // y^(terms+1) / ((terms+1)(1-y)), rounded up
};

// Truncated Maclaurin series of -log(1-y) for 0 < y < 1, summed ascending.
// Independent cross-check path for real_ln; never used as the primary log.
//
// Tail bound proof: for 0 < y < 1,
//   sum_{j>K} y^j/j <= 1/(K+1) * sum_{j>K} y^j = y^(K+1) / ((K+1)(1-y)).
SeriesResult neg_log1m_series(const BigReal& y, std::uint64_t terms,
                              const PrecisionCtx& ctx);

// Conservative certified budget for accumulated rounding error of one
// evaluation at ctx: (1 + |a| + |b|) * 2^(-target_bits), rounded up.  By the
// accounting above the true rounding error is below this by a factor ~2^63.
BigReal rounding_budget(const BigReal& a, const BigReal& b, const PrecisionCtx& ctx);

}  // namespace goldprod
