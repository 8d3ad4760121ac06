#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "goldprod/rational.hpp"

namespace goldprod {

enum class FnKind { mu, phi, one, custom };

// Largest accepted sieve/table limit.  A table stores one mpz per index; at
// this size that is roughly 0.7 GB including limb storage, which fits the
// smallest machines this is expected to run on.
inline constexpr std::uint64_t kMaxSieveLimit = std::uint64_t{1} << 24;

// Values f(1..N) of an arithmetic function, index n holding f(n) as an exact
// integer.  Immutable after construction and safe to share across threads.
// Construction validates the per-kind invariants:
//   mu:  every value in {-1,0,1}, value[1] = 1
//   phi: 1 <= value[n] <= n, value[1] = 1, value[p] = p-1 for prime p
//   one: every value = 1
class ArithFnTable {
 public:
  ArithFnTable(FnKind kind, std::vector<mpz_class> values);

  static ArithFnTable custom(std::vector<mpz_class> values) {
    return {FnKind::custom, std::move(values)};
  }

  FnKind kind() const { return kind_; }
  std::uint64_t limit() const { return values_.size(); }

  // 1-based access, matching f(n).
  const mpz_class& operator[](std::uint64_t n) const { return values_[n - 1]; }
  const mpz_class& at(std::uint64_t n) const;  // range-checked

  std::span<const mpz_class> values() const { return values_; }  // 0-based storage

 private:
  FnKind kind_;
  std::vector<mpz_class> values_;
};

// mu(1..limit) by linear sieve with smallest-prime-factor bookkeeping, O(N).
// limit must be in [1, kMaxSieveLimit].
ArithFnTable sieve_mobius(std::uint64_t limit);

// phi(1..limit) by the same linear sieve; phi(1) = 1.
ArithFnTable sieve_totient(std::uint64_t limit);

// The constant function 1, as a table.
ArithFnTable ones_table(std::uint64_t limit);

// g(n) = sum_{d|n} f(d) for all n <= f.limit(), i.e. the Dirichlet
// convolution 1*f.  Iterates d then multiples of d: O(N log N) additions.
ArithFnTable dirichlet_one_convolve(const ArithFnTable& f);

// n * sum_{d|n} mu(d)/d in exact rational arithmetic, proven integral before
// returning; equals phi(n).  A non-integral sum means the mu table is broken
// and raises InternalError.
mpz_class totient_from_mobius(std::uint64_t n, const ArithFnTable& mu_table);

struct DivisorSumReport {
  std::uint64_t limit = 0;
  bool phi_identity_ok = false;  // (1*phi)(n) = n for all n <= limit
  bool mu_identity_ok = false;   // (1*mu)(n) = [n=1] for all n <= limit
  std::optional<std::uint64_t> first_phi_counterexample;
  std::optional<std::uint64_t> first_mu_counterexample;

  bool pass() const { return phi_identity_ok && mu_identity_ok; }
};

// Checks both divisor-sum identities up to `limit` with freshly sieved
// tables.  Failures are reported, never thrown.
DivisorSumReport verify_divisor_sums(std::uint64_t limit);

// Same check against caller-supplied tables (fault-injection surface).
// phi_table.kind() must be phi and mu_table.kind() mu, equal limits.
DivisorSumReport verify_divisor_sums(const ArithFnTable& phi_table,
                                     const ArithFnTable& mu_table);

}  // namespace goldprod
