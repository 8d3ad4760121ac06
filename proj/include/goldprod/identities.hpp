#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "goldprod/arithfn.hpp"
#include "goldprod/bigreal.hpp"
#include "goldprod/golden.hpp"

namespace goldprod {

// Point x of the Lambert-type sums.  Either an exact rational in (0,1) or
// the exact 1/tau, so that every power x^k is formed in Q or Q(sqrt5) with
// zero error before any rounding.
class EvalPoint {
 public:
  static EvalPoint rational(Rational x);  // requires 0 < x < 1
  static EvalPoint inverse_tau() { return EvalPoint(true, Rational()); }

  bool is_inverse_tau() const { return inverse_tau_; }
  const Rational& value() const;  // rational form only

  GoldenNumber as_golden() const;
  GoldenNumber power(std::uint64_t k) const;            // exact x^k
  GoldenNumber one_minus_power(std::uint64_t k) const;  // exact 1 - x^k

  std::string str() const;  // "p/q" or "1/tau"

 private:
  EvalPoint(bool inv_tau, Rational v) : inverse_tau_(inv_tau), value_(std::move(v)) {}
  bool inverse_tau_;
  Rational value_;
};

enum class IdentityTag {
  lemma1_phi,      // -sum phi(k)/k log(1-x^k) = x/(1-x)
  lemma1_mu,       // -sum mu(k)/k  log(1-x^k) = x
  lemma1_custom,   // same sum, arbitrary f, exp-sum target
  lemma2_phi,      // the x = 1/tau case, target tau
  lemma2_mu,       // the x = 1/tau case, target 1/tau
  theorem_log,     // sum (mu-phi)/k log(1-tau^-k) = 1
  theorem_product  // prod (1-tau^-n)^((mu-phi)/n) = e
};

const char* identity_tag_name(IdentityTag tag);

// One verified truncated evaluation.  tail_bound is a proven upper bound on
// the sum of all omitted terms (never a heuristic); pass records
// abs_diff <= tail_bound + rounding budget.
struct TruncationReport {
  IdentityTag identity;
  std::uint64_t terms_used;
  PrecisionCtx precision;
  BigReal partial;
  BigReal target;
  BigReal abs_diff;
  BigReal tail_bound;
  bool pass;
};

struct IdentityCheck {
  BigReal lhs;
  BigReal rhs;
  BigReal abs_diff;
  BigReal bound;
  bool pass;
};

// Certified upper bound on the tail sum_{k>K} |f(k)|/k * -log(1-x^k) for any
// f with |f(k)|/k <= C, rounded up.
//
// Proof of the bound C * x^(K+1) / (1-x)^2: for 0 < x < 1 and k >= 1,
//   -log(1-x^k) = sum_j x^(kj)/j <= sum_j x^(kj) = x^k/(1-x^k) <= x^k/(1-x),
// so the tail is at most C/(1-x) * sum_{k>K} x^k = C x^(K+1)/(1-x)^2.
BigReal lemma1_tail_bound(const EvalPoint& x, std::uint64_t K, const Rational& C,
                          const PrecisionCtx& ctx);

// Truncated -sum_{k=1..K} f(k)/k * log(1 - x^k) with each 1-x^k formed
// exactly, summed in ascending k.  Target:
//   phi -> x/(1-x)   (exact in Q(sqrt5), so tau itself when x = 1/tau)
//   mu  -> x
//   one/custom -> the truncated exp-sum  sum_{n<=K} (1*f)(n)/n x^n, with the
//   target's own tail folded into tail_bound.
// custom requires growth_c with |f(k)| <= growth_c * k validated against the
// table; phi/mu/one use C = 1.
TruncationReport lemma1_sum(const ArithFnTable& f, const EvalPoint& x, std::uint64_t K,
                            const PrecisionCtx& ctx,
                            std::optional<Rational> growth_c = std::nullopt);

struct Lemma2Report {
  TruncationReport phi_sum;         // target tau
  TruncationReport mu_sum;          // target 1/tau
  IdentityCheck reciprocal_product; // phi_sum.partial * mu_sum.partial vs 1
};

// Both Lemma-2 sums at the exact point x = 1/tau, plus the product of the
// two partials checked against 1.
Lemma2Report lemma2_pair(std::uint64_t K, const PrecisionCtx& ctx);

// sum_{k=1..N} (mu(k)-phi(k))/k * log(1 - tau^-k), target 1.
//
// Tail bound 2 tau^3 tau^-N: |mu(k)-phi(k)|/k <= (k+1)/k <= 2, and with
// y = tau^-k <= 1/tau,  -log(1-y) <= y/(1-y) <= tau^-k / (1-1/tau)
// = tau^2 tau^-k  (1 - 1/tau = tau^-2);  summing the geometric series,
//   tail <= 2 tau^2 * tau^-(N+1) / (1-1/tau) = 2 tau^3 tau^-N.
TruncationReport theorem_log_sum(std::uint64_t N, const PrecisionCtx& ctx);

// Partial product P_N = prod_{n=1..N} (1 - tau^-n)^((mu(n)-phi(n))/n),
// evaluated in log space (exponent * ln base summed, one final exp), target
// e.  Tail bound: |log P_N - 1| <= B = 2 tau^3 tau^-N gives
// |P_N - e| = e|e^(log P_N - 1) - 1| <= e (e^B - 1), rounded up.
TruncationReport theorem_product(std::uint64_t N, const PrecisionCtx& ctx);

// Cross-check path: the same partial product multiplied out factor by factor
// with real_pow_rational.  Meant for small N.
BigReal theorem_product_direct(std::uint64_t N, const PrecisionCtx& ctx);

// Both sides of  prod_{n<=N} (1-x^n)^(-f(n)/n)  =  exp(sum_{n<=N} (1*f)(n)/n x^n)
// at working precision, with a certified bound on how far apart the two
// truncations may legitimately be.  Requires 0 < x < 1 and |f(n)| <= C*n,
// validated against the table.
//
// Bound: log LHS_N is the lemma1 sum, so |log LHS_N - log L| <= T1 =
// C x^(N+1)/(1-x)^2.  For the exponent sum, |(1*f)(n)| <= C sigma(n) and
// sigma(n) <= n(1+ln n) <= n*n, so |(1*f)(n)/n| <= C n and
//   |S_N - S| <= T2 = C sum_{n>N} n x^n = C x^(N+1) ((N+1) - N x)/(1-x)^2.
// Since log L = S exactly, |log LHS_N - S_N| <= T1 + T2 and
//   |LHS_N - RHS_N| <= max(LHS_N, RHS_N) * (e^(T1+T2) - 1),
// to which the rounding budget is added.
IdentityCheck general_identity_check(const ArithFnTable& f, const Rational& x,
                                     std::uint64_t N, const Rational& C,
                                     const PrecisionCtx& ctx);

enum class SpecialVariant { exp_x, exp_x_over_1mx, exp_x2_over_1mx };

// The three closing product identities: f = mu, phi, phi - mu, with targets
// exp(x), exp(x/(1-x)), exp(x^2/(1-x)) in closed form.  lhs is the truncated
// product, rhs the closed-form target; the bound covers the product's tail
// (via lemma1_tail_bound, C = 1, 1, 2 respectively) plus rounding.
IdentityCheck special_exp_products(SpecialVariant variant, const Rational& x,
                                   std::uint64_t N, const PrecisionCtx& ctx);

// Exact coefficients of x^1..x^degree in sum_k (f(k)/k) sum_j x^(kj)/j as a
// polynomial mod x^(degree+1).  Coefficient n must equal (1*f)(n)/n; that is
// asserted against the convolution route and a mismatch raises InternalError.
std::vector<Rational> formal_coefficients(const ArithFnTable& f, std::uint64_t degree);

}  // namespace goldprod
