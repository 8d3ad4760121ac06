#include "goldprod/bigreal.hpp"

#include <cassert>
#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace goldprod {

namespace {

long ceil_log2(std::uint64_t n) {
  long bits = 0;
  std::uint64_t v = 1;
  while (v < n) {
    v <<= 1;
    ++bits;
  }
  return bits;
}

void require_finite(mpfr_srcptr v, const char* op) {
  if (!mpfr_number_p(v)) throw std::domain_error(std::string(op) + ": non-finite result");
}

}  // namespace

PrecisionCtx::PrecisionCtx(long target, std::uint64_t term_hint)
    : target_bits(target), guard_bits(64 + ceil_log2(term_hint < 2 ? 2 : term_hint)) {
  if (target < 16) throw std::invalid_argument("PrecisionCtx: target_bits must be >= 16");
  assert(guard_bits >= 32);
}

BigReal::BigReal(long precision_bits) {
  if (precision_bits < MPFR_PREC_MIN) {
    throw std::invalid_argument("BigReal: precision too small");
  }
  mpfr_init2(v_, precision_bits);
  mpfr_set_zero(v_, 1);
}

BigReal::BigReal(const BigReal& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);  // same precision: exact
}

BigReal::BigReal(BigReal&& o) noexcept {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_swap(v_, o.v_);
}

BigReal& BigReal::operator=(const BigReal& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(v_); }

BigReal BigReal::of_long(long v, long precision_bits) {
  BigReal r(precision_bits);
  mpfr_set_si(r.v_, v, MPFR_RNDN);
  return r;
}

BigReal BigReal::of_rational(const Rational& r, long precision_bits, mpfr_rnd_t rnd) {
  BigReal out(precision_bits);
  mpfr_set_q(out.v_, r.raw().get_mpq_t(), rnd);
  return out;
}

BigReal BigReal::ulp(long n) const {
  BigReal r(precision_bits());
  if (is_zero()) {
    mpfr_set_zero(r.v_, 1);
    return r;
  }
  mpfr_set_si(r.v_, n, MPFR_RNDN);
  mpfr_mul_2si(r.v_, r.v_, mpfr_get_exp(v_) - precision_bits(), MPFR_RNDN);
  return r;
}

BigReal BigReal::abs() const {
  BigReal r(precision_bits());
  mpfr_abs(r.v_, v_, MPFR_RNDN);
  return r;
}

BigReal BigReal::neg() const {
  BigReal r(precision_bits());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

std::string BigReal::decimal(std::size_t digits) const {
  if (digits == 0) throw std::invalid_argument("BigReal::decimal: digits must be >= 1");
  if (is_zero()) return "0";

  mpfr_exp_t exp10 = 0;
  char* raw = mpfr_get_str(nullptr, &exp10, 10, digits, v_, MPFR_RNDN);
  if (raw == nullptr) throw std::runtime_error("BigReal::decimal: mpfr_get_str failed");
  std::string mant(raw);
  mpfr_free_str(raw);

  std::string sign;
  if (!mant.empty() && mant.front() == '-') {
    sign = "-";
    mant.erase(mant.begin());
  }

  // mant is d1 d2 ... dk with value 0.d1d2...dk * 10^exp10.
  std::string body;
  if (exp10 >= -2 && exp10 <= 9) {  // |x| in [1e-3, 1e9): fixed notation
    if (exp10 <= 0) {
      body = "0." + std::string(static_cast<std::size_t>(-exp10), '0') + mant;
    } else if (static_cast<std::size_t>(exp10) < mant.size()) {
      body = mant.substr(0, static_cast<std::size_t>(exp10)) + "." +
             mant.substr(static_cast<std::size_t>(exp10));
    } else {
      body = mant + std::string(static_cast<std::size_t>(exp10) - mant.size(), '0') + ".0";
    }
  } else {
    body = mant.substr(0, 1);
    if (mant.size() > 1) body += "." + mant.substr(1);
    long e = static_cast<long>(exp10) - 1;
    body += "e" + std::string(e >= 0 ? "+" : "-") + std::to_string(e >= 0 ? e : -e);
  }
  return sign + body;
}

// ---------------------------------------------------------------------------
// arithmetic
// ---------------------------------------------------------------------------

BigReal real_add(const BigReal& a, const BigReal& b, const PrecisionCtx& ctx) {
  BigReal r(ctx.working_bits());
  mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

BigReal real_sub(const BigReal& a, const BigReal& b, const PrecisionCtx& ctx) {
  BigReal r(ctx.working_bits());
  mpfr_sub(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

BigReal real_mul(const BigReal& a, const BigReal& b, const PrecisionCtx& ctx) {
  BigReal r(ctx.working_bits());
  mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  require_finite(r.raw(), "real_mul");
  return r;
}

BigReal real_div(const BigReal& a, const BigReal& b, const PrecisionCtx& ctx) {
  if (b.is_zero()) throw std::domain_error("real_div: division by zero");
  BigReal r(ctx.working_bits());
  mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  require_finite(r.raw(), "real_div");
  return r;
}

BigReal real_sqrt(const BigReal& a, const PrecisionCtx& ctx) {
  if (a.sign() < 0) throw std::domain_error("real_sqrt: negative operand");
  BigReal r(ctx.working_bits());
  mpfr_sqrt(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}

BigReal real_eval(RealOp op, std::span<const BigReal> operands, const PrecisionCtx& ctx) {
  auto need = [&](std::size_t n) {
    if (operands.size() != n) {
      throw std::invalid_argument("real_eval: wrong operand count");
    }
  };
  switch (op) {
    case RealOp::add: need(2); return real_add(operands[0], operands[1], ctx);
    case RealOp::sub: need(2); return real_sub(operands[0], operands[1], ctx);
    case RealOp::mul: need(2); return real_mul(operands[0], operands[1], ctx);
    case RealOp::div: need(2); return real_div(operands[0], operands[1], ctx);
    case RealOp::sqrt: need(1); return real_sqrt(operands[0], ctx);
  }
  throw std::invalid_argument("real_eval: unknown op");
}

BigReal real_ln(const BigReal& x, const PrecisionCtx& ctx) {
  if (x.sign() <= 0) throw std::domain_error("real_ln: argument must be positive");
  BigReal r(ctx.working_bits());
  mpfr_log(r.raw(), x.raw(), MPFR_RNDN);
  require_finite(r.raw(), "real_ln");
  return r;
}

BigReal real_exp(const BigReal& x, const PrecisionCtx& ctx) {
  if (mpfr_cmp_si(x.abs().raw(), kExpArgBound) > 0) {
    throw std::domain_error("real_exp: |argument| exceeds overflow bound");
  }
  BigReal r(ctx.working_bits());
  mpfr_exp(r.raw(), x.raw(), MPFR_RNDN);
  require_finite(r.raw(), "real_exp");
  return r;
}

BigReal real_pow_rational(const BigReal& base, const Rational& exponent,
                          const PrecisionCtx& ctx) {
  if (exponent.is_zero()) {
    if (base.is_zero()) throw std::domain_error("real_pow_rational: 0^0");
    return BigReal::of_long(1, ctx.working_bits());
  }
  if (exponent == Rational(1)) return base;
  if (base.sign() <= 0) {
    throw std::domain_error("real_pow_rational: base must be positive");
  }

  // exp(exponent * ln base), evaluated 64 bits above working precision so
  // the absolute error of t = exponent*ln(base) (which becomes the relative
  // error of exp t) stays far below 1 ulp at working precision.
  long inner = ctx.working_bits() + 64;
  BigReal t(inner);
  mpfr_log(t.raw(), base.raw(), MPFR_RNDN);
  mpfr_mul_q(t.raw(), t.raw(), exponent.raw().get_mpq_t(), MPFR_RNDN);
  if (mpfr_cmp_si(t.abs().raw(), kExpArgBound) > 0) {
    throw std::domain_error("real_pow_rational: exponent*ln(base) exceeds overflow bound");
  }
  BigReal e(inner);
  mpfr_exp(e.raw(), t.raw(), MPFR_RNDN);
  BigReal r(ctx.working_bits());
  mpfr_set(r.raw(), e.raw(), MPFR_RNDN);
  require_finite(r.raw(), "real_pow_rational");
  return r;
}

SeriesResult neg_log1m_series(const BigReal& y, std::uint64_t terms, const PrecisionCtx& ctx) {
  if (terms == 0) throw std::invalid_argument("neg_log1m_series: terms must be >= 1");
  if (y.sign() <= 0 || mpfr_cmp_ui(y.raw(), 1) >= 0) {
    throw std::domain_error("neg_log1m_series: y must satisfy 0 < y < 1");
  }
  long w = ctx.working_bits();

  // sum_{j=1..terms} y^j / j, ascending j, fixed order.
  BigReal sum(w), power(w), term(w);
  mpfr_set_zero(sum.raw(), 1);
  mpfr_set_ui(power.raw(), 1, MPFR_RNDN);
  for (std::uint64_t j = 1; j <= terms; ++j) {
    mpfr_mul(power.raw(), power.raw(), y.raw(), MPFR_RNDN);
    mpfr_div_ui(term.raw(), power.raw(), j, MPFR_RNDN);
    mpfr_add(sum.raw(), sum.raw(), term.raw(), MPFR_RNDN);
  }

  // Tail bound y^(terms+1)/((terms+1)(1-y)), every step rounded outward.
  BigReal tail(w), denom(w);
  mpfr_pow_ui(tail.raw(), y.raw(), terms + 1, MPFR_RNDU);
  mpfr_ui_sub(denom.raw(), 1, y.raw(), MPFR_RNDD);  // 1-y from below keeps the quotient above
  mpfr_mul_ui(denom.raw(), denom.raw(), terms + 1, MPFR_RNDD);
  mpfr_div(tail.raw(), tail.raw(), denom.raw(), MPFR_RNDU);
  require_finite(tail.raw(), "neg_log1m_series tail");

  return {std::move(sum), std::move(tail)};
}

BigReal rounding_budget(const BigReal& a, const BigReal& b, const PrecisionCtx& ctx) {
  BigReal s(64);
  mpfr_abs(s.raw(), a.raw(), MPFR_RNDU);
  BigReal babs = b.abs();
  mpfr_add(s.raw(), s.raw(), babs.raw(), MPFR_RNDU);
  mpfr_add_ui(s.raw(), s.raw(), 1, MPFR_RNDU);
  mpfr_mul_2si(s.raw(), s.raw(), -ctx.target_bits, MPFR_RNDU);
  return s;
}

}  // namespace goldprod
