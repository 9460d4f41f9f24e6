#include "gaussprob/zeta.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace gaussprob {

namespace {

void require_s(int s, const char* what) {
    if (s < 2) throw std::invalid_argument(std::string(what) + ": s must be >= 2, got " + std::to_string(s));
}

long double inv_pow(std::uint64_t n, int s) {
    const long double x = static_cast<long double>(n);
    long double power = 1.0L;
    for (int i = 0; i < s; ++i) power *= x;
    return 1.0L / power;
}

// sum_{n > P} n^-s <= P^(1-s)/(s-1).
double integral_tail(std::uint64_t limit, int s) {
    return static_cast<double>(std::pow(static_cast<long double>(limit), 1 - s) / (s - 1));
}

// Neumaier-compensated running sum.
class CompensatedSum {
public:
    void add(long double x) {
        const long double t = sum_ + x;
        if (std::fabs(sum_) >= std::fabs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    long double value() const { return sum_ + comp_; }

private:
    long double sum_ = 0.0L;
    long double comp_ = 0.0L;
};

}  // namespace

bool TruncatedValue::contains(double x) const { return std::fabs(x - value) <= tail_bound; }

TruncatedValue operator*(const TruncatedValue& a, const TruncatedValue& b) {
    return {a.value * b.value,
            std::fabs(a.value) * b.tail_bound + std::fabs(b.value) * a.tail_bound + a.tail_bound * b.tail_bound};
}

TruncatedValue reciprocal(const TruncatedValue& x) {
    const double v = std::fabs(x.value);
    if (v <= x.tail_bound) return {1.0 / x.value, std::numeric_limits<double>::infinity()};
    return {1.0 / x.value, x.tail_bound / (v * (v - x.tail_bound))};
}

std::vector<std::uint64_t> sieve_primes(std::uint64_t limit) {
    if (limit < 2) throw std::invalid_argument("sieve_primes: limit must be >= 2");
    if (limit > kMaxSieveLimit)
        throw std::length_error("sieve_primes: limit " + std::to_string(limit) + " exceeds memory budget");
    // Odd numbers only: index k stands for 2k+1.
    std::vector<bool> composite(limit / 2 + 1, false);
    std::vector<std::uint64_t> primes{2};
    for (std::uint64_t n = 3; n <= limit; n += 2) {
        if (composite[n / 2]) continue;
        primes.push_back(n);
        if (n > limit / n) continue;
        for (std::uint64_t m = n * n; m <= limit; m += 2 * n) composite[m / 2] = true;
    }
    return primes;
}

PrimeTable PrimeTable::up_to(std::uint64_t limit) { return {limit, sieve_primes(limit)}; }

int chi(std::int64_t n) {
    switch (((n % 4) + 4) % 4) {
        case 1: return 1;
        case 3: return -1;
        default: return 0;
    }
}

TruncatedValue zeta_euler(int s, const PrimeTable& primes) {
    require_s(s, "zeta_euler");
    long double product = 1.0L;
    for (std::uint64_t p : primes.primes) product /= 1.0L - inv_pow(p, s);
    // Omitted log-factors: 0 <= -log(1 - p^-s) <= 2 p^-s.
    const double log_tail = 2.0 * integral_tail(primes.limit, s);
    const double value = static_cast<double>(product);
    return {value, value * std::expm1(log_tail)};
}

TruncatedValue zeta_euler(int s, std::uint64_t prime_limit) {
    require_s(s, "zeta_euler");
    return zeta_euler(s, PrimeTable::up_to(prime_limit));
}

TruncatedValue zeta_series(int s, std::uint64_t n_limit) {
    require_s(s, "zeta_series");
    if (n_limit < 1) throw std::invalid_argument("zeta_series: n_limit must be >= 1");
    CompensatedSum sum;
    for (std::uint64_t n = n_limit; n >= 1; --n) sum.add(inv_pow(n, s));
    return {static_cast<double>(sum.value()), integral_tail(n_limit, s)};
}

TruncatedValue dirichlet_L(int s, std::uint64_t n_limit) {
    require_s(s, "dirichlet_L");
    if (n_limit < 1) throw std::invalid_argument("dirichlet_L: n_limit must be >= 1");
    const std::uint64_t last_odd = n_limit % 2 == 1 ? n_limit : n_limit - 1;
    CompensatedSum sum;
    for (std::uint64_t n = last_odd; n >= 1; n -= 2) {
        sum.add(chi(static_cast<std::int64_t>(n)) * inv_pow(n, s));
        if (n == 1) break;
    }
    return {static_cast<double>(sum.value()), static_cast<double>(inv_pow(last_odd + 2, s))};
}

TruncatedValue dirichlet_L_euler(int s, const PrimeTable& primes) {
    require_s(s, "dirichlet_L_euler");
    long double product = 1.0L;
    for (std::uint64_t p : primes.primes) {
        const int c = chi(static_cast<std::int64_t>(p));
        if (c != 0) product /= 1.0L - c * inv_pow(p, s);
    }
    // |log(1 - chi(p) p^-s)| <= 2 p^-s.
    const double log_tail = 2.0 * integral_tail(primes.limit, s);
    const double value = static_cast<double>(product);
    return {value, value * std::expm1(log_tail)};
}

TruncatedValue dedekind_zeta_Qi(int s, const ZetaLimits& limits) {
    require_s(s, "dedekind_zeta_Qi");
    return zeta_euler(s, limits.prime_limit) * dirichlet_L(s, limits.n_limit);
}

TruncatedValue coprime_constant_product(const PrimeTable& primes) {
    long double product = 1.0L;
    for (std::uint64_t p : primes.primes) {
        const long double q = inv_pow(p, 2);
        switch (p % 4) {
            case 1: product *= (1.0L - q) * (1.0L - q); break;
            case 3: product *= 1.0L - q * q; break;
            default: product *= 1.0L - q; break;  // p = 2, ramified
        }
    }
    // Each omitted factor lies in [exp(-4 p^-2), 1]; the truncation overestimates.
    const double log_tail = 4.0 * integral_tail(primes.limit, 2);
    const double value = static_cast<double>(product);
    return {value, -value * std::expm1(-log_tail)};
}

TruncatedValue coprime_constant_product(std::uint64_t prime_limit) {
    return coprime_constant_product(PrimeTable::up_to(prime_limit));
}

TruncatedValue rational_coprime_constant(int k, const ZetaLimits& limits) {
    if (k < 2) throw std::invalid_argument("rational_coprime_constant: k must be >= 2, got " + std::to_string(k));
    const PrimeTable primes = PrimeTable::up_to(limits.prime_limit);
    long double product = 1.0L;
    for (std::uint64_t p : primes.primes) product *= 1.0L - inv_pow(p, k);
    const double log_tail = 2.0 * integral_tail(primes.limit, k);
    const double value = static_cast<double>(product);
    return {value, -value * std::expm1(-log_tail)};
}

}  // namespace gaussprob
