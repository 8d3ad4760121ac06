#include "goldprod/arithfn.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "goldprod/errors.hpp"

namespace goldprod {

namespace {

void check_limit(std::uint64_t limit) {
  if (limit == 0) throw std::invalid_argument("sieve: limit must be >= 1");
  if (limit > kMaxSieveLimit) {
    throw std::invalid_argument("sieve: limit " + std::to_string(limit) +
                                " exceeds the supported bound " + std::to_string(kMaxSieveLimit));
  }
}

// Primes p <= limit by plain Eratosthenes; used only to validate phi-table
// invariants, so it is deliberately a different code path from the linear
// sieve that produced the values.
std::vector<bool> prime_flags(std::uint64_t limit) {
  std::vector<bool> is_prime(limit + 1, true);
  is_prime[0] = false;
  if (limit >= 1) is_prime[1] = false;
  for (std::uint64_t p = 2; p * p <= limit; ++p) {
    if (!is_prime[p]) continue;
    for (std::uint64_t m = p * p; m <= limit; m += p) is_prime[m] = false;
  }
  return is_prime;
}

// Linear sieve over 1..limit: each composite is crossed off exactly once by
// its smallest prime factor, giving mu and phi in O(N).
struct SieveData {
  std::vector<std::int8_t> mu;
  std::vector<std::uint64_t> phi;
};

SieveData linear_sieve(std::uint64_t limit) {
  SieveData out;
  out.mu.assign(limit + 1, 0);
  out.phi.assign(limit + 1, 0);
  std::vector<std::uint32_t> primes;
  std::vector<bool> composite(limit + 1, false);

  out.mu[1] = 1;
  out.phi[1] = 1;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (!composite[i]) {
      primes.push_back(static_cast<std::uint32_t>(i));
      out.mu[i] = -1;
      out.phi[i] = i - 1;
    }
    for (std::uint32_t p : primes) {
      std::uint64_t m = i * p;
      if (m > limit) break;
      composite[m] = true;
      if (i % p == 0) {
        out.mu[m] = 0;             // p^2 | m
        out.phi[m] = out.phi[i] * p;
        break;
      }
      out.mu[m] = -out.mu[i];
      out.phi[m] = out.phi[i] * (p - 1);
    }
  }
  return out;
}

}  // namespace

ArithFnTable::ArithFnTable(FnKind kind, std::vector<mpz_class> values)
    : kind_(kind), values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("ArithFnTable: empty value sequence");
  if (values_.size() > kMaxSieveLimit) {
    throw std::invalid_argument("ArithFnTable: size exceeds the supported bound");
  }
  switch (kind_) {
    case FnKind::mu:
      if (values_[0] != 1) throw std::invalid_argument("mu table: value[1] must be 1");
      for (const mpz_class& v : values_) {
        if (v < -1 || v > 1) {
          throw std::invalid_argument("mu table: values must lie in {-1,0,1}");
        }
      }
      break;
    case FnKind::phi: {
      if (values_[0] != 1) throw std::invalid_argument("phi table: value[1] must be 1");
      std::vector<bool> is_prime = prime_flags(values_.size());
      for (std::uint64_t n = 1; n <= values_.size(); ++n) {
        const mpz_class& v = values_[n - 1];
        if (v < 1 || v > n) {
          throw std::invalid_argument("phi table: value[" + std::to_string(n) +
                                      "] outside [1, n]");
        }
        if (is_prime[n] && v != n - 1) {
          throw std::invalid_argument("phi table: value at prime " + std::to_string(n) +
                                      " must be n-1");
        }
      }
      break;
    }
    case FnKind::one:
      for (const mpz_class& v : values_) {
        if (v != 1) throw std::invalid_argument("ones table: every value must be 1");
      }
      break;
    case FnKind::custom:
      break;
  }
}

const mpz_class& ArithFnTable::at(std::uint64_t n) const {
  if (n == 0 || n > values_.size()) {
    throw std::out_of_range("ArithFnTable::at: index " + std::to_string(n) +
                            " outside 1.." + std::to_string(values_.size()));
  }
  return values_[n - 1];
}

ArithFnTable sieve_mobius(std::uint64_t limit) {
  check_limit(limit);
  SieveData data = linear_sieve(limit);
  std::vector<mpz_class> values(limit);
  for (std::uint64_t n = 1; n <= limit; ++n) values[n - 1] = static_cast<long>(data.mu[n]);
  return {FnKind::mu, std::move(values)};
}

ArithFnTable sieve_totient(std::uint64_t limit) {
  check_limit(limit);
  SieveData data = linear_sieve(limit);
  std::vector<mpz_class> values(limit);
  for (std::uint64_t n = 1; n <= limit; ++n) {
    values[n - 1] = static_cast<unsigned long>(data.phi[n]);
  }
  return {FnKind::phi, std::move(values)};
}

ArithFnTable ones_table(std::uint64_t limit) {
  check_limit(limit);
  std::vector<mpz_class> values(limit, mpz_class(1));
  return {FnKind::one, std::move(values)};
}

ArithFnTable dirichlet_one_convolve(const ArithFnTable& f) {
  const std::uint64_t n = f.limit();
  std::vector<mpz_class> g(n, mpz_class(0));
  for (std::uint64_t d = 1; d <= n; ++d) {
    const mpz_class& fd = f[d];
    if (sgn(fd) == 0) continue;
    for (std::uint64_t m = d; m <= n; m += d) g[m - 1] += fd;
  }
  return ArithFnTable::custom(std::move(g));
}

mpz_class totient_from_mobius(std::uint64_t n, const ArithFnTable& mu_table) {
  if (mu_table.kind() != FnKind::mu) {
    throw std::invalid_argument("totient_from_mobius: table kind must be mu");
  }
  if (n == 0 || n > mu_table.limit()) {
    throw std::invalid_argument("totient_from_mobius: n outside table range");
  }
  // n * sum_{d|n} mu(d)/d, exact.
  Rational sum;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    std::uint64_t e = n / d;
    sum += Rational(mu_table[d], mpz_class(static_cast<unsigned long>(d)));
    if (e != d) sum += Rational(mu_table[e], mpz_class(static_cast<unsigned long>(e)));
  }
  Rational result = Rational(mpz_class(static_cast<unsigned long>(n))) * sum;
  if (!result.is_integer()) {
    throw InternalError("totient_from_mobius: non-integral divisor sum at n = " +
                        std::to_string(n) + " (broken mu table)");
  }
  return result.num();
}

DivisorSumReport verify_divisor_sums(std::uint64_t limit) {
  check_limit(limit);
  return verify_divisor_sums(sieve_totient(limit), sieve_mobius(limit));
}

DivisorSumReport verify_divisor_sums(const ArithFnTable& phi_table,
                                     const ArithFnTable& mu_table) {
  if (phi_table.kind() != FnKind::phi || mu_table.kind() != FnKind::mu) {
    throw std::invalid_argument("verify_divisor_sums: expected a phi table and a mu table");
  }
  if (phi_table.limit() != mu_table.limit()) {
    throw std::invalid_argument("verify_divisor_sums: table limits differ");
  }
  const std::uint64_t limit = phi_table.limit();

  DivisorSumReport report;
  report.limit = limit;
  report.phi_identity_ok = true;
  report.mu_identity_ok = true;

  ArithFnTable phi_conv = dirichlet_one_convolve(phi_table);
  for (std::uint64_t n = 1; n <= limit; ++n) {
    if (phi_conv[n] != static_cast<unsigned long>(n)) {
      report.phi_identity_ok = false;
      report.first_phi_counterexample = n;
      break;
    }
  }

  ArithFnTable mu_conv = dirichlet_one_convolve(mu_table);
  for (std::uint64_t n = 1; n <= limit; ++n) {
    const long expected = (n == 1) ? 1 : 0;
    if (mu_conv[n] != expected) {
      report.mu_identity_ok = false;
      report.first_mu_counterexample = n;
      break;
    }
  }
  return report;
}

}  // namespace goldprod
