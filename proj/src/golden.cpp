#include "goldprod/golden.hpp"

#include <cassert>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace goldprod {

int GoldenNumber::sign() const {
  int sa = a_.sign();
  int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Components disagree: a + b*sqrt5 has the sign of whichever of a^2 and
  // 5 b^2 dominates, attributed to the corresponding component.
  Rational a2 = a_ * a_;
  Rational b25 = b_ * b_ * Rational(5);
  if (a2 == b25) return 0;  // only at a=b=0, unreachable here (sqrt5 irrational)
  return a2 > b25 ? sa : sb;
}

GoldenNumber& GoldenNumber::operator+=(const GoldenNumber& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

GoldenNumber& GoldenNumber::operator-=(const GoldenNumber& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

GoldenNumber& GoldenNumber::operator*=(const GoldenNumber& o) {
  // (a+b*sqrt5)(c+d*sqrt5) = (ac+5bd) + (ad+bc)*sqrt5
  Rational a = a_ * o.a_ + Rational(5) * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

GoldenNumber GoldenNumber::inverse() const {
  if (is_zero()) throw std::domain_error("GoldenNumber::inverse: zero");
  Rational norm = a_ * a_ - Rational(5) * b_ * b_;
  assert(!norm.is_zero());  // impossible for rational a,b not both zero
  return {a_ / norm, -b_ / norm};
}

std::string GoldenNumber::str() const {
  std::ostringstream os;
  os << a_.str();
  if (!b_.is_zero()) {
    os << (b_.sign() < 0 ? " - " : " + ") << b_.abs().str() << "*sqrt5";
  }
  return os.str();
}

GoldenNumber golden_arith(GoldenOp op, const GoldenNumber& g1, const GoldenNumber& g2) {
  switch (op) {
    case GoldenOp::add: return g1 + g2;
    case GoldenOp::sub: return g1 - g2;
    case GoldenOp::mul: return g1 * g2;
  }
  throw std::invalid_argument("golden_arith: unknown op");
}

GoldenNumber tau_power(long k) {
  if (k > kTauPowerMaxExp || k < -kTauPowerMaxExp) {
    throw std::invalid_argument("tau_power: |k| exceeds supported bound");
  }
  if (k == 0) return GoldenNumber::one();

  unsigned long m = k > 0 ? static_cast<unsigned long>(k) : static_cast<unsigned long>(-k);
  mpz_class fm, fm1;  // F(m), F(m-1)
  mpz_fib2_ui(fm.get_mpz_t(), fm1.get_mpz_t(), m);

  if (k > 0) {
    // tau^m = F(m)*tau + F(m-1) = (F(m)/2 + F(m-1)) + (F(m)/2)*sqrt5
    return {Rational(fm, 2) + Rational(fm1), Rational(fm, 2)};
  }
  // tau^-m = F(-m)*tau + F(-m-1) with F(-m) = (-1)^(m+1) F(m) and
  // F(-m-1) = (-1)^m F(m+1).
  mpz_class fmp1 = fm + fm1;  // F(m+1)
  bool m_even = (m % 2 == 0);
  mpz_class c_tau = m_even ? mpz_class(-fm) : fm;
  mpz_class c_one = m_even ? fmp1 : mpz_class(-fmp1);
  return {Rational(c_tau, 2) + Rational(c_one), Rational(c_tau, 2)};
}

GoldenNumber golden_pow(const GoldenNumber& g, long n) {
  if (n == 0) return GoldenNumber::one();
  GoldenNumber base = n > 0 ? g : g.inverse();
  unsigned long e = n > 0 ? static_cast<unsigned long>(n) : static_cast<unsigned long>(-n);
  GoldenNumber acc = GoldenNumber::one();
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

namespace {

// Bits in the numerator of r, as a crude magnitude estimate for guard sizing.
long num_bits(const Rational& r) {
  return static_cast<long>(mpz_sizeinbase(r.num().get_mpz_t(), 2));
}

// One directed-rounding pass at precision `bits`.  Every step is monotone in
// the requested direction, so the result is a guaranteed bound regardless of
// cancellation between a and b*sqrt5 (only tightness suffers).
void convert_directed(mpfr_ptr out, const GoldenNumber& g, long bits, mpfr_rnd_t rnd) {
  assert(rnd == MPFR_RNDU || rnd == MPFR_RNDD);
  mpfr_set_q(out, g.rational_part().raw().get_mpq_t(), rnd);
  if (g.sqrt5_part().is_zero()) return;

  // b*sqrt5 needs sqrt5 pushed toward rnd when b > 0 and away when b < 0.
  mpfr_rnd_t srnd = rnd;
  if (g.sqrt5_part().sign() < 0) srnd = (rnd == MPFR_RNDU) ? MPFR_RNDD : MPFR_RNDU;
  mpfr_t s5;
  mpfr_init2(s5, bits);
  mpfr_sqrt_ui(s5, 5, srnd);
  mpfr_mul_q(s5, s5, g.sqrt5_part().raw().get_mpq_t(), rnd);
  mpfr_add(out, out, s5, rnd);
  mpfr_clear(s5);
}

}  // namespace

BigReal golden_to_real(const GoldenNumber& g, long precision_bits, mpfr_rnd_t rnd) {
  if (precision_bits < 16) throw std::invalid_argument("golden_to_real: precision too small");
  BigReal out(precision_bits);
  if (g.is_zero()) return out;
  if (g.is_rational()) {
    mpfr_set_q(out.raw(), g.rational_part().raw().get_mpq_t(), rnd);
    return out;
  }
  if (rnd == MPFR_RNDU || rnd == MPFR_RNDD) {
    convert_directed(out.raw(), g, precision_bits, rnd);
    return out;
  }
  if (g.rational_part().is_zero()) {
    // Pure b*sqrt5: no cancellation, two roundings at p+32 then one final.
    long w = precision_bits + 32;
    mpfr_t s5;
    mpfr_init2(s5, w);
    mpfr_sqrt_ui(s5, 5, MPFR_RNDN);
    mpfr_mul_q(s5, s5, g.sqrt5_part().raw().get_mpq_t(), MPFR_RNDN);
    mpfr_set(out.raw(), s5, MPFR_RNDN);
    mpfr_clear(s5);
    return out;
  }

  // Nearest rounding with the 1-ulp contract.  a and b*sqrt5 may cancel
  // almost completely (the components of tau^-k are Fibonacci-sized while
  // the value is tiny), so widen the working precision until the absolute
  // error bound 4*2^(eM - w) -- three roundings on intermediates no larger
  // than 2^eM -- is below a quarter ulp of the result, then round once.
  long guard = 64 + std::max(num_bits(g.rational_part()), num_bits(g.sqrt5_part()));
  for (;;) {
    long w = precision_bits + guard;
    mpfr_t acc, t, s5;
    mpfr_init2(acc, w);
    mpfr_init2(t, w);
    mpfr_init2(s5, w);
    mpfr_set_q(acc, g.rational_part().raw().get_mpq_t(), MPFR_RNDN);
    mpfr_sqrt_ui(s5, 5, MPFR_RNDN);
    mpfr_mul_q(t, s5, g.sqrt5_part().raw().get_mpq_t(), MPFR_RNDN);
    mpfr_exp_t max_e = std::max(mpfr_get_exp(acc), mpfr_get_exp(t));
    mpfr_add(acc, acc, t, MPFR_RNDN);
    bool ok = !mpfr_zero_p(acc) && (max_e + 2 - w) < (mpfr_get_exp(acc) - precision_bits - 2);
    if (ok) mpfr_set(out.raw(), acc, MPFR_RNDN);
    mpfr_clear(acc);
    mpfr_clear(t);
    mpfr_clear(s5);
    if (ok) return out;
    guard *= 2;
    if (guard > (1L << 26)) {
      throw std::runtime_error("golden_to_real: failed to converge");  // unreachable for g != 0
    }
  }
}

}  // namespace goldprod
