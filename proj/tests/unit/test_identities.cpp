#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "goldprod/identities.hpp"
#include "oracle_constants.hpp"
#include "test_support.hpp"

using goldprod::ArithFnTable;
using goldprod::BigReal;
using goldprod::EvalPoint;
using goldprod::GoldenNumber;
using goldprod::IdentityCheck;
using goldprod::IdentityTag;
using goldprod::PrecisionCtx;
using goldprod::Rational;
using goldprod::SpecialVariant;
using goldprod::TruncationReport;
using goldprod::golden_to_real;
using goldprod::tau_power;
using testsupport::close;
using testsupport::dist;
using testsupport::from_decimal;
using testsupport::pow2;

TEST_CASE("evaluation points") {
  EvalPoint half = EvalPoint::rational(Rational(1, 2));
  CHECK(half.str() == "1/2");
  CHECK(!half.is_inverse_tau());
  CHECK(half.value() == Rational(1, 2));
  CHECK(half.power(3) == GoldenNumber(Rational(1, 8)));
  CHECK(half.one_minus_power(2) == GoldenNumber(Rational(3, 4)));

  EvalPoint it = EvalPoint::inverse_tau();
  CHECK(it.str() == "1/tau");
  CHECK(it.is_inverse_tau());
  CHECK(it.as_golden() == tau_power(-1));
  CHECK(it.power(2) == tau_power(-2));
  CHECK(it.one_minus_power(2) == tau_power(-1));  // 1 - tau^-2 = 1/tau
  CHECK_THROWS_AS(it.value(), std::logic_error);

  CHECK_THROWS_AS(EvalPoint::rational(Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(EvalPoint::rational(Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(EvalPoint::rational(Rational(3, 2)), std::invalid_argument);
  CHECK_THROWS_AS(EvalPoint::rational(Rational(-1, 2)), std::invalid_argument);
}

TEST_CASE("identity tag names") {
  CHECK(std::string(goldprod::identity_tag_name(IdentityTag::lemma1_phi)) == "lemma1_phi");
  CHECK(std::string(goldprod::identity_tag_name(IdentityTag::lemma2_mu)) == "lemma2_mu");
  CHECK(std::string(goldprod::identity_tag_name(IdentityTag::theorem_product)) ==
        "theorem_product");
}

TEST_CASE("tail bound closed forms") {
  PrecisionCtx ctx(256);
  EvalPoint half = EvalPoint::rational(Rational(1, 2));
  // C x^(K+1)/(1-x)^2 at x=1/2 is dyadic, so the upward rounding is exact:
  // K=10 -> 2^-11 * 4 = 2^-9, K=0 -> 2^-1 * 4 = 2.
  CHECK(goldprod::lemma1_tail_bound(half, 10, Rational(1), ctx) == pow2(-9));
  CHECK(goldprod::lemma1_tail_bound(half, 0, Rational(1), ctx) == pow2(1));
  CHECK(goldprod::lemma1_tail_bound(half, 10, Rational(3), ctx) ==
        BigReal::of_rational(Rational(3, 512), 64));

  // x = 1/tau: (1-x)^2 = tau^-4, so the bound collapses to tau^(3-K)... with
  // K=100 and C=1 that is tau^-97.  The bound is rounded upward from exact
  // field components of size ~2^67, so it may sit ~2^(67-337) above the true
  // value; allow that slack.
  BigReal t = goldprod::lemma1_tail_bound(EvalPoint::inverse_tau(), 100, Rational(1), ctx);
  CHECK(close(t, from_decimal(oracle::kTauPowM97), pow2(-260)));

  CHECK_THROWS_AS(goldprod::lemma1_tail_bound(half, 5, Rational(0), ctx),
                  std::invalid_argument);
  CHECK_THROWS_AS(goldprod::lemma1_tail_bound(half, 5, Rational(-1), ctx),
                  std::invalid_argument);
}

TEST_CASE("lemma1 truncations at x = 1/2") {
  PrecisionCtx ctx(256);
  EvalPoint half = EvalPoint::rational(Rational(1, 2));

  TruncationReport phi_r = goldprod::lemma1_sum(goldprod::sieve_totient(8), half, 8, ctx);
  CHECK(phi_r.identity == IdentityTag::lemma1_phi);
  CHECK(phi_r.terms_used == 8);
  CHECK(phi_r.target == BigReal::of_long(1, 64));  // x/(1-x) = 1 exactly
  CHECK(close(phi_r.partial, from_decimal(oracle::kLemma1PhiHalfK8), pow2(-218)));
  CHECK(phi_r.tail_bound == pow2(-7));  // 2^-9 * 4
  CHECK(phi_r.pass);
  CHECK(phi_r.abs_diff <= phi_r.tail_bound);

  TruncationReport mu_r = goldprod::lemma1_sum(goldprod::sieve_mobius(8), half, 8, ctx);
  CHECK(mu_r.identity == IdentityTag::lemma1_mu);
  CHECK(mu_r.target == BigReal::of_rational(Rational(1, 2), 64));  // exactly x
  CHECK(close(mu_r.partial, from_decimal(oracle::kLemma1MuHalfK8), pow2(-218)));
  CHECK(mu_r.pass);

  CHECK_THROWS_AS(goldprod::lemma1_sum(goldprod::sieve_totient(8), half, 0, ctx),
                  std::invalid_argument);
  CHECK_THROWS_AS(goldprod::lemma1_sum(goldprod::sieve_totient(8), half, 9, ctx),
                  std::invalid_argument);
}

TEST_CASE("lemma1 with the ones table targets the divisor exp-sum") {
  PrecisionCtx ctx(128);
  EvalPoint third = EvalPoint::rational(Rational(1, 3));
  TruncationReport r = goldprod::lemma1_sum(goldprod::ones_table(16), third, 16, ctx);
  CHECK(r.identity == IdentityTag::lemma1_custom);
  // Target is sum_{n<=16} d(n)/n x^n; the report certifies the truncated sum
  // against it within tail + budget.
  CHECK(r.pass);
  CHECK(r.tail_bound.sign() == 1);
}

TEST_CASE("lemma1 growth validation for custom tables") {
  PrecisionCtx ctx(128);
  EvalPoint third = EvalPoint::rational(Rational(1, 3));
  std::vector<mpz_class> vals = {mpz_class(1), mpz_class(-2), mpz_class(3), mpz_class(4)};
  ArithFnTable f = ArithFnTable::custom(vals);
  CHECK_THROWS_AS(goldprod::lemma1_sum(f, third, 4, ctx), std::invalid_argument);  // no C
  CHECK(goldprod::lemma1_sum(f, third, 4, ctx, Rational(1)).pass);
  std::vector<mpz_class> steep = {mpz_class(1), mpz_class(50)};
  CHECK_THROWS_AS(
      goldprod::lemma1_sum(ArithFnTable::custom(steep), third, 2, ctx, Rational(1)),
      std::invalid_argument);  // |f(2)| = 50 > 1*2
  CHECK_THROWS_AS(goldprod::lemma1_sum(f, third, 4, ctx, Rational(0)),
                  std::invalid_argument);
}

TEST_CASE("lemma2 pair at K = 8 against reference digits") {
  PrecisionCtx ctx(256);
  goldprod::Lemma2Report r = goldprod::lemma2_pair(8, ctx);
  CHECK(r.phi_sum.identity == IdentityTag::lemma2_phi);
  CHECK(r.mu_sum.identity == IdentityTag::lemma2_mu);
  CHECK(close(r.phi_sum.partial, from_decimal(oracle::kLemma2PhiK8), pow2(-218)));
  CHECK(close(r.mu_sum.partial, from_decimal(oracle::kLemma2MuK8), pow2(-218)));
  CHECK(close(r.phi_sum.target, from_decimal(oracle::kTau), pow2(-218)));
  CHECK(close(r.mu_sum.target, from_decimal(oracle::kInvTau), pow2(-218)));
  CHECK(r.phi_sum.pass);
  CHECK(r.mu_sum.pass);
  CHECK(r.reciprocal_product.pass);
  CHECK(r.reciprocal_product.rhs == BigReal::of_long(1, 64));
}

TEST_CASE("lemma2 at K = 1 reports internal consistency") {
  // One term proves nothing about convergence; the report must still be
  // internally consistent: both partials are -1 * log(1 - 1/tau) = 2 ln tau,
  // the bounds are the K=1 tails, and pass mirrors diff <= tail + budget.
  PrecisionCtx ctx(128);
  goldprod::Lemma2Report r = goldprod::lemma2_pair(1, ctx);
  BigReal two_ln_tau = real_mul(BigReal::of_long(2, 64), from_decimal(oracle::kLnTau), ctx);
  CHECK(close(r.phi_sum.partial, two_ln_tau, pow2(-120)));
  CHECK(close(r.mu_sum.partial, two_ln_tau, pow2(-120)));
  // tail = tau^-2/(tau^-2)^2 = tau^2 ~ 2.618 covers both gaps
  CHECK(r.phi_sum.pass == (r.phi_sum.abs_diff <= real_add(r.phi_sum.tail_bound,
        rounding_budget(r.phi_sum.partial, r.phi_sum.target, ctx), ctx)));
  CHECK(r.phi_sum.pass);
  CHECK(r.mu_sum.pass);
  CHECK(r.reciprocal_product.pass);
}

TEST_CASE("theorem log sum") {
  PrecisionCtx ctx(256);
  // N = 1: the k=1 coefficient mu(1)-phi(1) vanishes, so the partial is 0.
  TruncationReport first = goldprod::theorem_log_sum(1, ctx);
  CHECK(first.partial.is_zero());
  CHECK(first.target == BigReal::of_long(1, 64));
  CHECK(first.pass);  // tail 2 tau^2 ~ 5.2 comfortably covers |0 - 1|

  TruncationReport r10 = goldprod::theorem_log_sum(10, ctx);
  CHECK(close(r10.partial, from_decimal(oracle::kTheoremLogN10), pow2(-218)));
  CHECK(r10.pass);

  TruncationReport r100 = goldprod::theorem_log_sum(100, ctx);
  // Tail bound 2 tau^-97 is rounded up from ~2^67-sized field components.
  CHECK(close(r100.tail_bound, from_decimal(oracle::kTwoTauPowM97), pow2(-260)));
  CHECK(r100.abs_diff <= r100.tail_bound);
  CHECK(r100.pass);
}

TEST_CASE("theorem product") {
  PrecisionCtx ctx(256);
  TruncationReport p1 = goldprod::theorem_product(1, ctx);
  CHECK(p1.partial == BigReal::of_long(1, 64));  // exp(0), exactly 1

  TruncationReport p2 = goldprod::theorem_product(2, ctx);
  CHECK(close(p2.partial, from_decimal(oracle::kTau), pow2(-218)));  // (1-tau^-2)^-1

  TruncationReport p10 = goldprod::theorem_product(10, ctx);
  CHECK(close(p10.partial, from_decimal(oracle::kTheoremProdN10), pow2(-218)));
  CHECK(close(p10.target, from_decimal(oracle::kE), pow2(-218)));
  CHECK(p10.pass);

  TruncationReport p100 = goldprod::theorem_product(100, ctx);
  CHECK(close(p100.abs_diff, from_decimal(oracle::kTheoremProdN100AbsErr), pow2(-280)));
  CHECK(p100.abs_diff <= p100.tail_bound);
  CHECK(p100.pass);
}

TEST_CASE("theorem error shrinks monotonically with the tail") {
  PrecisionCtx ctx(256);
  BigReal prev_tail = BigReal::of_long(1000, 64);
  for (std::uint64_t n = 10; n <= 100; n += 10) {
    TruncationReport r = goldprod::theorem_product(n, ctx);
    CHECK(r.tail_bound < prev_tail);  // 2 tau^(3-N) strictly decreasing
    prev_tail = r.tail_bound;
  }
  for (std::uint64_t k : {25u, 50u, 100u}) {
    TruncationReport doubled = goldprod::theorem_product(2 * k, ctx);
    TruncationReport single = goldprod::theorem_product(k, ctx);
    CHECK(doubled.abs_diff <= single.tail_bound);
  }
}

TEST_CASE("product equals exponential of the log sum") {
  for (std::uint64_t n : {10u, 50u, 100u}) {
    PrecisionCtx ctx(192);
    TruncationReport log_r = goldprod::theorem_log_sum(n, ctx);
    TruncationReport prod_r = goldprod::theorem_product(n, ctx);
    CHECK(real_exp(log_r.partial, ctx) == prod_r.partial);  // same path, bit-identical

    // Independent route: multiply the factors out one by one.
    BigReal direct = goldprod::theorem_product_direct(n, ctx);
    CHECK(dist(direct, prod_r.partial) <=
          rounding_budget(direct, prod_r.partial, ctx));
  }
}

TEST_CASE("formal coefficients") {
  std::vector<Rational> phi_c = goldprod::formal_coefficients(goldprod::sieve_totient(50), 50);
  REQUIRE(phi_c.size() == 50);
  for (const Rational& c : phi_c) CHECK(c == Rational(1));  // sum_{d|n} phi(d) = n

  std::vector<Rational> mu_c = goldprod::formal_coefficients(goldprod::sieve_mobius(50), 50);
  REQUIRE(mu_c.size() == 50);
  CHECK(mu_c[0] == Rational(1));
  for (std::size_t i = 1; i < mu_c.size(); ++i) CHECK(mu_c[i] == Rational(0));

  // f = 1: coefficient n is d(n)/n.
  std::vector<Rational> one_c = goldprod::formal_coefficients(goldprod::ones_table(4), 4);
  CHECK(one_c == std::vector<Rational>{Rational(1), Rational(1), Rational(2, 3),
                                       Rational(3, 4)});

  CHECK_THROWS_AS(goldprod::formal_coefficients(goldprod::ones_table(4), 5),
                  std::invalid_argument);
  CHECK_THROWS_AS(goldprod::formal_coefficients(goldprod::ones_table(4), 0),
                  std::invalid_argument);
}

TEST_CASE("formal expansion matches the analytic sum under equal truncation") {
  // Summing f(k)/k * series(x^k) with floor(K/k) series terms keeps exactly
  // the monomials x^n, n <= K, so it must agree with the coefficient route up
  // to accumulated rounding.
  PrecisionCtx ctx(128);
  const std::uint64_t K = 20;
  const Rational x(1, 3);
  for (goldprod::FnKind kind : {goldprod::FnKind::phi, goldprod::FnKind::mu}) {
    ArithFnTable f = kind == goldprod::FnKind::phi ? goldprod::sieve_totient(K)
                                                   : goldprod::sieve_mobius(K);
    BigReal analytic(ctx.working_bits());
    for (std::uint64_t k = 1; k <= K; ++k) {
      if (sgn(f[k]) == 0) continue;
      BigReal y = BigReal::of_rational(x.pow(k), ctx.working_bits());
      goldprod::SeriesResult s = neg_log1m_series(y, K / k, ctx);
      BigReal coeff = BigReal::of_rational(Rational(f[k], mpz_class(static_cast<unsigned long>(k))),
                                           ctx.working_bits());
      analytic = real_add(analytic, real_mul(coeff, s.value, ctx), ctx);
    }

    std::vector<Rational> coeffs = goldprod::formal_coefficients(f, K);
    Rational exact;
    Rational xp(1);
    for (std::uint64_t n = 1; n <= K; ++n) {
      xp *= x;
      exact += coeffs[n - 1] * xp;
    }
    BigReal formal = BigReal::of_rational(exact, ctx.working_bits());
    CHECK(dist(analytic, formal) <= rounding_budget(analytic, formal, ctx));
  }
}

TEST_CASE("general identity check at x = 1/2") {
  PrecisionCtx ctx(192);
  const Rational half(1, 2);
  const std::uint64_t N = 64;

  IdentityCheck mu_check =
      goldprod::general_identity_check(goldprod::sieve_mobius(N), half, N, Rational(1), ctx);
  CHECK(mu_check.pass);
  CHECK(close(mu_check.lhs, from_decimal(oracle::kExpHalf), pow2(-60)));  // e^x

  IdentityCheck phi_check =
      goldprod::general_identity_check(goldprod::sieve_totient(N), half, N, Rational(1), ctx);
  CHECK(phi_check.pass);
  CHECK(close(phi_check.lhs, from_decimal(oracle::kE), pow2(-58)));  // e^(x/(1-x))

  // f = phi - mu as a custom table: product converges to e^(x^2/(1-x)).
  goldprod::ArithFnTable mu = goldprod::sieve_mobius(N);
  goldprod::ArithFnTable phi = goldprod::sieve_totient(N);
  std::vector<mpz_class> diff(N);
  for (std::uint64_t n = 1; n <= N; ++n) diff[n - 1] = phi[n] - mu[n];
  IdentityCheck mix_check = goldprod::general_identity_check(
      ArithFnTable::custom(std::move(diff)), half, N, Rational(2), ctx);
  CHECK(mix_check.pass);
  CHECK(close(mix_check.lhs, from_decimal(oracle::kExpHalf), pow2(-58)));
}

TEST_CASE("general identity check on random bounded tables") {
  PrecisionCtx ctx(128);
  std::mt19937_64 rng(26433832795ull);
  const std::uint64_t N = 64;
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<mpz_class> vals(N);
    for (std::uint64_t n = 1; n <= N; ++n) {
      std::uniform_int_distribution<long> d(-static_cast<long>(n), static_cast<long>(n));
      vals[n - 1] = d(rng);
    }
    IdentityCheck c = goldprod::general_identity_check(ArithFnTable::custom(std::move(vals)),
                                                       Rational(1, 3), N, Rational(1), ctx);
    CHECK(c.pass);
  }
}

TEST_CASE("general identity check rejects bad arguments") {
  PrecisionCtx ctx(128);
  ArithFnTable f = goldprod::sieve_mobius(8);
  CHECK_THROWS_AS(goldprod::general_identity_check(f, Rational(3, 2), 8, Rational(1), ctx),
                  std::invalid_argument);
  CHECK_THROWS_AS(goldprod::general_identity_check(f, Rational(1, 2), 9, Rational(1), ctx),
                  std::invalid_argument);
  std::vector<mpz_class> steep = {mpz_class(1), mpz_class(500)};
  CHECK_THROWS_AS(goldprod::general_identity_check(ArithFnTable::custom(steep), Rational(1, 2),
                                                   2, Rational(1), ctx),
                  std::invalid_argument);
}

TEST_CASE("special product variants") {
  PrecisionCtx ctx(192);
  const std::uint64_t N = 64;
  struct Expect {
    SpecialVariant variant;
    const char* target_half;
    const char* target_third;
  };
  const Expect table[] = {
      {SpecialVariant::exp_x, oracle::kExpHalf, oracle::kExpThird},
      {SpecialVariant::exp_x_over_1mx, oracle::kE, oracle::kExpHalf},
      {SpecialVariant::exp_x2_over_1mx, oracle::kExpHalf, oracle::kExpSixth},
  };
  for (const Expect& e : table) {
    IdentityCheck at_half = goldprod::special_exp_products(e.variant, Rational(1, 2), N, ctx);
    CHECK(at_half.pass);
    CHECK(close(at_half.rhs, from_decimal(e.target_half), pow2(-180)));

    IdentityCheck at_third = goldprod::special_exp_products(e.variant, Rational(1, 3), N, ctx);
    CHECK(at_third.pass);
    CHECK(close(at_third.rhs, from_decimal(e.target_third), pow2(-180)));
  }
  CHECK_THROWS_AS(
      goldprod::special_exp_products(SpecialVariant::exp_x, Rational(2), 16, ctx),
      std::invalid_argument);
}
