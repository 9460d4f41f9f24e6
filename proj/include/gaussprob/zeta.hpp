#pragma once

// Truncated evaluation of zeta(s), L(s, chi_4) and the Dedekind zeta function
// of Q(i) at integer arguments s >= 2. Every value carries a rigorous bound on
// its truncation error; floating-point rounding is not included in the bound.

#include <cstdint>
#include <vector>

namespace gaussprob {

struct TruncatedValue {
    double value = 0.0;
    /// Bound on |exact - value| from truncation alone.
    double tail_bound = 0.0;

    bool contains(double x) const;
};

/// Product of two bounded values with first-order-plus-cross error propagation.
TruncatedValue operator*(const TruncatedValue& a, const TruncatedValue& b);

/// 1/x. The bound is infinite when the interval around x reaches zero.
TruncatedValue reciprocal(const TruncatedValue& x);

/// Primes <= limit in ascending order (sieve of Eratosthenes).
/// Throws std::invalid_argument for limit < 2 and std::length_error above
/// kMaxSieveLimit.
std::vector<std::uint64_t> sieve_primes(std::uint64_t limit);

inline constexpr std::uint64_t kMaxSieveLimit = std::uint64_t{1} << 32;

/// All primes up to `limit`, sieved once and shared read-only.
struct PrimeTable {
    std::uint64_t limit = 0;
    std::vector<std::uint64_t> primes;

    static PrimeTable up_to(std::uint64_t limit);
};

/// The nonprincipal Dirichlet character mod 4: 1, 0, -1, 0 on n = 1, 2, 3, 0 (mod 4).
int chi(std::int64_t n);

/// prod_{p <= P} (1 - p^-s)^-1.
TruncatedValue zeta_euler(int s, const PrimeTable& primes);
TruncatedValue zeta_euler(int s, std::uint64_t prime_limit);

/// sum_{n <= N} n^-s, tail bounded by N^(1-s)/(s-1).
TruncatedValue zeta_series(int s, std::uint64_t n_limit);

/// sum_{odd n <= N} chi(n) n^-s, tail bounded by the first omitted term.
TruncatedValue dirichlet_L(int s, std::uint64_t n_limit);

/// prod_{p <= P} (1 - chi(p) p^-s)^-1.
TruncatedValue dirichlet_L_euler(int s, const PrimeTable& primes);

struct ZetaLimits {
    std::uint64_t prime_limit = 1'000'000;
    std::uint64_t n_limit = 10'000'000;
};

/// zeta(s) * L(s, chi) with zeta from the Euler product over primes <=
/// prime_limit and L from the alternating series up to n_limit.
TruncatedValue dedekind_zeta_Qi(int s, const ZetaLimits& limits = {});

/// (1 - 1/4) prod_{p = 1 mod 4} (1 - p^-2)^2 prod_{p = 3 mod 4} (1 - p^-4)
/// over primes <= prime_limit; converges to 1/zeta_Q(i)(2) from above.
TruncatedValue coprime_constant_product(const PrimeTable& primes);
TruncatedValue coprime_constant_product(std::uint64_t prime_limit);

/// 1/zeta(k) as prod_{p <= P} (1 - p^-k).
TruncatedValue rational_coprime_constant(int k, const ZetaLimits& limits = {});

}  // namespace gaussprob
