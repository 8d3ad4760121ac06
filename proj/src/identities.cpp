#include "goldprod/identities.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "goldprod/errors.hpp"

namespace goldprod {

namespace {

// Directed-rounding helpers used when assembling certified bounds.  Inputs
// are themselves upper bounds (or exact), so rounding up preserves validity.
BigReal add_up(const BigReal& a, const BigReal& b, long prec) {
  BigReal out(prec);
  mpfr_add(out.raw(), a.raw(), b.raw(), MPFR_RNDU);
  return out;
}

BigReal mul_up(const BigReal& a, const BigReal& b, long prec) {
  BigReal out(prec);
  mpfr_mul(out.raw(), a.raw(), b.raw(), MPFR_RNDU);
  return out;
}

BigReal expm1_up(const BigReal& a, long prec) {
  BigReal out(prec);
  mpfr_expm1(out.raw(), a.raw(), MPFR_RNDU);
  return out;
}

BigReal max_of(const BigReal& a, const BigReal& b, long prec) {
  BigReal out(prec);
  mpfr_max(out.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return out;
}

// acc += r * x at acc's precision, round to nearest.
void add_scaled_q(BigReal& acc, const Rational& r, const BigReal& x) {
  BigReal term(mpfr_get_prec(acc.raw()));
  mpfr_mul_q(term.raw(), x.raw(), r.raw().get_mpq_t(), MPFR_RNDN);
  mpfr_add(acc.raw(), acc.raw(), term.raw(), MPFR_RNDN);
}

void require_terms(std::uint64_t K, std::uint64_t table_limit) {
  if (K == 0) throw std::invalid_argument("identity evaluation: terms must be >= 1");
  if (K > table_limit) {
    throw std::invalid_argument("identity evaluation: terms " + std::to_string(K) +
                                " exceed the table limit " + std::to_string(table_limit));
  }
}

// Effective growth constant: |f(k)| <= C * k for all k <= K, checked exactly.
Rational effective_growth(const ArithFnTable& f, std::uint64_t K,
                          const std::optional<Rational>& growth_c) {
  Rational C;
  if (growth_c) {
    C = *growth_c;
    if (C.sign() <= 0) throw std::invalid_argument("growth constant must be positive");
  } else {
    if (f.kind() == FnKind::custom) {
      throw std::invalid_argument("custom tables require an explicit growth constant");
    }
    C = Rational(1);  // |mu| <= 1 <= k, phi(k) <= k, ones <= k
  }
  for (std::uint64_t k = 1; k <= K; ++k) {
    // |f(k)| * den(C) <= num(C) * k
    mpz_class lhs = abs(f[k]) * C.den();
    mpz_class rhs = C.num() * mpz_class(static_cast<unsigned long>(k));
    if (lhs > rhs) {
      throw std::invalid_argument("growth bound |f(k)| <= C*k fails at k = " +
                                  std::to_string(k));
    }
  }
  return C;
}

// Exact golden-number form of sum_{n>N} n x^n = x^(N+1) ((N+1) - N x) / (1-x)^2,
// the series tail that controls the exp-sum truncation for |g(n)| <= C n.
GoldenNumber weighted_geometric_tail(const EvalPoint& x, std::uint64_t N,
                                     const Rational& C) {
  GoldenNumber xg = x.as_golden();
  GoldenNumber d = x.one_minus_power(1);  // 1 - x, positive
  mpz_class nz(static_cast<unsigned long>(N));
  GoldenNumber np1{Rational(mpz_class(nz + 1))};
  GoldenNumber n{Rational(nz)};
  return GoldenNumber(C) * x.power(N + 1) * (np1 - n * xg) * (d * d).inverse();
}

}  // namespace

EvalPoint EvalPoint::rational(Rational x) {
  if (x.sign() <= 0 || x >= Rational(1)) {
    throw std::invalid_argument("evaluation point must satisfy 0 < x < 1, got " + x.str());
  }
  return EvalPoint(false, std::move(x));
}

const Rational& EvalPoint::value() const {
  if (inverse_tau_) throw std::logic_error("EvalPoint::value: point is 1/tau, not rational");
  return value_;
}

GoldenNumber EvalPoint::as_golden() const {
  if (inverse_tau_) return tau_power(-1);
  return GoldenNumber{value_};
}

GoldenNumber EvalPoint::power(std::uint64_t k) const {
  if (inverse_tau_) {
    if (k > static_cast<std::uint64_t>(kTauPowerMaxExp)) {
      throw std::invalid_argument("EvalPoint::power: exponent too large");
    }
    return tau_power(-static_cast<long>(k));
  }
  return GoldenNumber{value_.pow(k)};
}

GoldenNumber EvalPoint::one_minus_power(std::uint64_t k) const {
  return GoldenNumber::one() - power(k);
}

std::string EvalPoint::str() const { return inverse_tau_ ? "1/tau" : value_.str(); }

const char* identity_tag_name(IdentityTag tag) {
  switch (tag) {
    case IdentityTag::lemma1_phi: return "lemma1_phi";
    case IdentityTag::lemma1_mu: return "lemma1_mu";
    case IdentityTag::lemma1_custom: return "lemma1_custom";
    case IdentityTag::lemma2_phi: return "lemma2_phi";
    case IdentityTag::lemma2_mu: return "lemma2_mu";
    case IdentityTag::theorem_log: return "theorem_log";
    case IdentityTag::theorem_product: return "theorem_product";
  }
  throw InternalError("identity_tag_name: unknown tag");
}

BigReal lemma1_tail_bound(const EvalPoint& x, std::uint64_t K, const Rational& C,
                          const PrecisionCtx& ctx) {
  if (C.sign() <= 0) throw std::invalid_argument("lemma1_tail_bound: C must be positive");
  GoldenNumber d = x.one_minus_power(1);  // 1 - x
  GoldenNumber exact = GoldenNumber(C) * x.power(K + 1) * (d * d).inverse();
  // Exact value, one upward rounding: a certified upper bound.
  return golden_to_real(exact, ctx.working_bits(), MPFR_RNDU);
}

TruncationReport lemma1_sum(const ArithFnTable& f, const EvalPoint& x, std::uint64_t K,
                            const PrecisionCtx& ctx, std::optional<Rational> growth_c) {
  require_terms(K, f.limit());
  const Rational C = effective_growth(f, K, growth_c);
  const long w = ctx.working_bits();

  // -sum_{k<=K} f(k)/k log(1 - x^k), ascending k for reproducibility.
  BigReal partial(w);
  for (std::uint64_t k = 1; k <= K; ++k) {
    const mpz_class& fk = f[k];
    if (sgn(fk) == 0) continue;
    BigReal base = golden_to_real(x.one_minus_power(k), w);
    BigReal lnb = real_ln(base, ctx);
    Rational coeff{mpz_class(-fk), mpz_class(static_cast<unsigned long>(k))};
    add_scaled_q(partial, coeff, lnb);
  }

  IdentityTag tag;
  BigReal target(w);
  BigReal tail = lemma1_tail_bound(x, K, C, ctx);
  switch (f.kind()) {
    case FnKind::phi: {
      tag = x.is_inverse_tau() ? IdentityTag::lemma2_phi : IdentityTag::lemma1_phi;
      GoldenNumber t = x.as_golden() * x.one_minus_power(1).inverse();  // x/(1-x)
      target = golden_to_real(t, w);
      break;
    }
    case FnKind::mu: {
      tag = x.is_inverse_tau() ? IdentityTag::lemma2_mu : IdentityTag::lemma1_mu;
      target = golden_to_real(x.as_golden(), w);
      break;
    }
    case FnKind::one:
    case FnKind::custom: {
      tag = IdentityTag::lemma1_custom;
      // Truncated exp-sum target sum_{n<=K} (1*f)(n)/n x^n, exact before one
      // rounding; its own tail (terms n > K, |(1*f)(n)/n| <= C n) is added to
      // the bound so the report still certifies the full identity.
      std::vector<mpz_class> head(f.values().begin(), f.values().begin() + K);
      ArithFnTable conv = dirichlet_one_convolve(ArithFnTable::custom(std::move(head)));
      GoldenNumber acc;
      for (std::uint64_t n = 1; n <= K; ++n) {
        const mpz_class& gn = conv[n];
        if (sgn(gn) == 0) continue;
        Rational coeff{gn, mpz_class(static_cast<unsigned long>(n))};
        acc += GoldenNumber(coeff) * x.power(n);
      }
      target = golden_to_real(acc, w);
      BigReal exp_tail =
          golden_to_real(weighted_geometric_tail(x, K, C), w, MPFR_RNDU);
      tail = add_up(tail, exp_tail, w);
      break;
    }
    default:
      throw InternalError("lemma1_sum: unhandled table kind");
  }

  BigReal diff = real_sub(partial, target, ctx).abs();
  BigReal budget = rounding_budget(partial, target, ctx);
  bool pass = diff <= add_up(tail, budget, w);
  return TruncationReport{tag, K, ctx, std::move(partial), std::move(target),
                          std::move(diff), std::move(tail), pass};
}

Lemma2Report lemma2_pair(std::uint64_t K, const PrecisionCtx& ctx) {
  const EvalPoint x = EvalPoint::inverse_tau();
  TruncationReport phi_r = lemma1_sum(sieve_totient(K), x, K, ctx);
  TruncationReport mu_r = lemma1_sum(sieve_mobius(K), x, K, ctx);
  const long w = ctx.working_bits();

  // Product of the two partials against tau * (1/tau) = 1.  With
  // |p - tau| <= E1 and |q - 1/tau| <= E2 (tail + rounding each),
  //   |pq - 1| <= E1 |q| + tau E2,
  // everything below assembled with upward rounding, plus the budget for the
  // one multiplication that forms pq.
  BigReal product = real_mul(phi_r.partial, mu_r.partial, ctx);
  BigReal one = BigReal::of_long(1, w);
  BigReal diff = real_sub(product, one, ctx).abs();

  BigReal e1 = add_up(phi_r.tail_bound, rounding_budget(phi_r.partial, phi_r.target, ctx), w);
  BigReal e2 = add_up(mu_r.tail_bound, rounding_budget(mu_r.partial, mu_r.target, ctx), w);
  BigReal tau_up = golden_to_real(GoldenNumber::tau(), w, MPFR_RNDU);
  BigReal bound = add_up(mul_up(e1, mu_r.partial.abs(), w), mul_up(tau_up, e2, w), w);
  bound = add_up(bound, rounding_budget(product, one, ctx), w);
  bool pass = diff <= bound;

  IdentityCheck check{std::move(product), std::move(one), std::move(diff),
                      std::move(bound), pass};
  return Lemma2Report{std::move(phi_r), std::move(mu_r), std::move(check)};
}

TruncationReport theorem_log_sum(std::uint64_t N, const PrecisionCtx& ctx) {
  require_terms(N, kMaxSieveLimit);
  const long w = ctx.working_bits();
  ArithFnTable mu = sieve_mobius(N);
  ArithFnTable phi = sieve_totient(N);

  // sum_{k<=N} (mu(k)-phi(k))/k log(1 - tau^-k); the k = 1 coefficient
  // vanishes, which is what makes the whole sum converge.
  BigReal partial(w);
  for (std::uint64_t k = 2; k <= N; ++k) {
    mpz_class ck = mu[k] - phi[k];
    if (sgn(ck) == 0) continue;
    BigReal base = golden_to_real(GoldenNumber::one() - tau_power(-static_cast<long>(k)), w);
    BigReal lnb = real_ln(base, ctx);
    add_scaled_q(partial, Rational{ck, mpz_class(static_cast<unsigned long>(k))}, lnb);
  }

  BigReal target = BigReal::of_long(1, w);
  // 2 tau^(3-N), exact in the field, one upward rounding.
  BigReal tail = golden_to_real(GoldenNumber(Rational(2)) * tau_power(3 - static_cast<long>(N)),
                                w, MPFR_RNDU);
  BigReal diff = real_sub(partial, target, ctx).abs();
  bool pass = diff <= add_up(tail, rounding_budget(partial, target, ctx), w);
  return TruncationReport{IdentityTag::theorem_log, N, ctx, std::move(partial),
                          std::move(target), std::move(diff), std::move(tail), pass};
}

TruncationReport theorem_product(std::uint64_t N, const PrecisionCtx& ctx) {
  TruncationReport log_r = theorem_log_sum(N, ctx);
  const long w = ctx.working_bits();

  BigReal partial = real_exp(log_r.partial, ctx);
  BigReal target = real_exp(BigReal::of_long(1, w), ctx);  // e

  // |P_N - e| = e |exp(log P_N - 1) - 1| <= e (exp(B') - 1) where B' bounds
  // |log P_N - 1| including the log-side rounding budget; assembled upward.
  BigReal bprime = add_up(log_r.tail_bound,
                          rounding_budget(log_r.partial, log_r.target, ctx), w);
  BigReal e_up(w);
  mpfr_exp(e_up.raw(), BigReal::of_long(1, w).raw(), MPFR_RNDU);
  BigReal tail = mul_up(e_up, expm1_up(bprime, w), w);

  BigReal diff = real_sub(partial, target, ctx).abs();
  bool pass = diff <= add_up(tail, rounding_budget(partial, target, ctx), w);
  return TruncationReport{IdentityTag::theorem_product, N, ctx, std::move(partial),
                          std::move(target), std::move(diff), std::move(tail), pass};
}

BigReal theorem_product_direct(std::uint64_t N, const PrecisionCtx& ctx) {
  require_terms(N, kMaxSieveLimit);
  const long w = ctx.working_bits();
  ArithFnTable mu = sieve_mobius(N);
  ArithFnTable phi = sieve_totient(N);

  BigReal product = BigReal::of_long(1, w);
  for (std::uint64_t n = 2; n <= N; ++n) {
    mpz_class cn = mu[n] - phi[n];
    if (sgn(cn) == 0) continue;
    BigReal base = golden_to_real(GoldenNumber::one() - tau_power(-static_cast<long>(n)), w);
    Rational expo{cn, mpz_class(static_cast<unsigned long>(n))};
    product = real_mul(product, real_pow_rational(base, expo, ctx), ctx);
  }
  return product;
}

IdentityCheck general_identity_check(const ArithFnTable& f, const Rational& x,
                                     std::uint64_t N, const Rational& C,
                                     const PrecisionCtx& ctx) {
  const EvalPoint pt = EvalPoint::rational(x);
  require_terms(N, f.limit());
  const Rational growth = effective_growth(f, N, C);
  const long w = ctx.working_bits();

  // Left side: prod_{n<=N} (1-x^n)^(-f(n)/n) via its logarithm.
  BigReal log_lhs(w);
  Rational xp{1};
  for (std::uint64_t n = 1; n <= N; ++n) {
    xp *= x;
    const mpz_class& fn = f[n];
    if (sgn(fn) == 0) continue;
    BigReal base = BigReal::of_rational(Rational(1) - xp, w);
    BigReal lnb = real_ln(base, ctx);
    add_scaled_q(log_lhs, Rational{mpz_class(-fn), mpz_class(static_cast<unsigned long>(n))},
                 lnb);
  }
  BigReal lhs = real_exp(log_lhs, ctx);

  // Right side: exp(sum_{n<=N} (1*f)(n)/n x^n), each term an exact rational.
  std::vector<mpz_class> head(f.values().begin(), f.values().begin() + N);
  ArithFnTable conv = dirichlet_one_convolve(ArithFnTable::custom(std::move(head)));
  BigReal s(w);
  xp = Rational{1};
  for (std::uint64_t n = 1; n <= N; ++n) {
    xp *= x;
    const mpz_class& gn = conv[n];
    if (sgn(gn) == 0) continue;
    Rational term = Rational{gn, mpz_class(static_cast<unsigned long>(n))} * xp;
    mpfr_add_q(s.raw(), s.raw(), term.raw().get_mpq_t(), MPFR_RNDN);
  }
  BigReal rhs = real_exp(s, ctx);

  // Both truncations sit within exp-distance T1 + T2 of the same limit (see
  // header), plus the log-side rounding budget; upward-rounded throughout.
  BigReal t1 = lemma1_tail_bound(pt, N, growth, ctx);
  BigReal t2 = golden_to_real(weighted_geometric_tail(pt, N, growth), w, MPFR_RNDU);
  BigReal gap = add_up(add_up(t1, t2, w), rounding_budget(log_lhs, s, ctx), w);
  BigReal bound = mul_up(max_of(lhs, rhs, w), expm1_up(gap, w), w);
  bound = add_up(bound, rounding_budget(lhs, rhs, ctx), w);

  BigReal diff = real_sub(lhs, rhs, ctx).abs();
  bool pass = diff <= bound;
  return IdentityCheck{std::move(lhs), std::move(rhs), std::move(diff), std::move(bound),
                       pass};
}

IdentityCheck special_exp_products(SpecialVariant variant, const Rational& x,
                                   std::uint64_t N, const PrecisionCtx& ctx) {
  const EvalPoint pt = EvalPoint::rational(x);
  require_terms(N, kMaxSieveLimit);
  const long w = ctx.working_bits();

  // f and the closed-form exponent per variant; |f(n)| <= C n.
  std::vector<mpz_class> values(N);
  Rational exponent;
  Rational C;
  switch (variant) {
    case SpecialVariant::exp_x: {
      ArithFnTable mu = sieve_mobius(N);
      for (std::uint64_t n = 1; n <= N; ++n) values[n - 1] = mu[n];
      exponent = x;
      C = Rational(1);
      break;
    }
    case SpecialVariant::exp_x_over_1mx: {
      ArithFnTable phi = sieve_totient(N);
      for (std::uint64_t n = 1; n <= N; ++n) values[n - 1] = phi[n];
      exponent = x / (Rational(1) - x);
      C = Rational(1);
      break;
    }
    case SpecialVariant::exp_x2_over_1mx: {
      ArithFnTable mu = sieve_mobius(N);
      ArithFnTable phi = sieve_totient(N);
      for (std::uint64_t n = 1; n <= N; ++n) values[n - 1] = phi[n] - mu[n];
      exponent = x * x / (Rational(1) - x);
      C = Rational(2);
      break;
    }
  }
  ArithFnTable f = ArithFnTable::custom(std::move(values));

  BigReal log_lhs(w);
  Rational xp{1};
  for (std::uint64_t n = 1; n <= N; ++n) {
    xp *= x;
    const mpz_class& fn = f[n];
    if (sgn(fn) == 0) continue;
    BigReal base = BigReal::of_rational(Rational(1) - xp, w);
    BigReal lnb = real_ln(base, ctx);
    add_scaled_q(log_lhs, Rational{mpz_class(-fn), mpz_class(static_cast<unsigned long>(n))},
                 lnb);
  }
  BigReal lhs = real_exp(log_lhs, ctx);

  BigReal exponent_real = BigReal::of_rational(exponent, w);
  BigReal rhs = real_exp(exponent_real, ctx);

  // The full log sum equals the exponent exactly, so the truncated log sits
  // within T1 of it; then |lhs - rhs| <= max * (exp(T1 + budget) - 1).
  BigReal t1 = lemma1_tail_bound(pt, N, C, ctx);
  BigReal gap = add_up(t1, rounding_budget(log_lhs, exponent_real, ctx), w);
  BigReal bound = mul_up(max_of(lhs, rhs, w), expm1_up(gap, w), w);
  bound = add_up(bound, rounding_budget(lhs, rhs, ctx), w);

  BigReal diff = real_sub(lhs, rhs, ctx).abs();
  bool pass = diff <= bound;
  return IdentityCheck{std::move(lhs), std::move(rhs), std::move(diff), std::move(bound),
                       pass};
}

std::vector<Rational> formal_coefficients(const ArithFnTable& f, std::uint64_t degree) {
  require_terms(degree, f.limit());

  // Expand sum_k (f(k)/k) sum_j x^(kj)/j mod x^(degree+1): the x^(kj) term
  // contributes f(k)/(kj).
  std::vector<Rational> coeffs(degree);
  for (std::uint64_t k = 1; k <= degree; ++k) {
    const mpz_class& fk = f[k];
    if (sgn(fk) == 0) continue;
    for (std::uint64_t j = 1; k * j <= degree; ++j) {
      coeffs[k * j - 1] += Rational{fk, mpz_class(static_cast<unsigned long>(k * j))};
    }
  }

  // Independent route: coefficient n must be (1*f)(n)/n.
  std::vector<mpz_class> head(f.values().begin(), f.values().begin() + degree);
  ArithFnTable conv = dirichlet_one_convolve(ArithFnTable::custom(std::move(head)));
  for (std::uint64_t n = 1; n <= degree; ++n) {
    Rational expected{conv[n], mpz_class(static_cast<unsigned long>(n))};
    if (coeffs[n - 1] != expected) {
      throw InternalError("formal_coefficients: grouping mismatch at degree " +
                          std::to_string(n));
    }
  }
  return coeffs;
}

}  // namespace goldprod
