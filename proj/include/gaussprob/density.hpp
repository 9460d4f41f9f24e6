#pragma once

// Natural-density estimators for coprimality and divisibility events over
// square boxes [-N, N]^2 in Z[i] and [-N, N] in Z.
//
// Exhaustive counts are exact integers and do not depend on the number of
// worker threads. Monte Carlo results depend only on (seed, samples, radius):
// sample j draws from its own counter-derived stream.

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "gaussprob/gaussian.hpp"

namespace gaussprob {

enum class SamplingMode { Exhaustive, MonteCarlo };
enum class Ring { Gaussian, Rational };

std::string_view to_string(SamplingMode mode);
std::string_view to_string(Ring ring);

struct DensityEstimate {
    std::uint64_t hits = 0;
    std::uint64_t trials = 0;
    double estimate = 0.0;
    std::optional<double> std_error;  // Monte Carlo only
    std::int64_t region_radius = 0;
    SamplingMode mode = SamplingMode::Exhaustive;
    std::optional<std::uint64_t> seed;
};

struct MonteCarloOptions {
    std::uint64_t samples = 1'000'000;
    std::uint64_t seed = 0;
};

/// Worker count: `requested` if nonzero, else $GAUSSPROB_THREADS, else the
/// hardware concurrency.
unsigned resolve_threads(unsigned requested = 0);

/// Largest radius accepted by the Gaussian estimators.
inline constexpr std::int64_t kMaxRadius = std::int64_t{1} << 30;

/// Counts coprime ordered pairs (z1, z2) over the box; trials = (2N+1)^4.
DensityEstimate gaussian_pair_density_exhaustive(std::int64_t radius, unsigned threads = 0);

/// Uniform i.i.d. pairs from the box.
DensityEstimate gaussian_pair_density_mc(std::uint64_t samples, std::int64_t radius, std::uint64_t seed,
                                         unsigned threads = 0);

/// Density of gcd(x_1, ..., x_k) = 1 over [-N, N]^k.
DensityEstimate rational_tuple_density(int k, std::int64_t radius, SamplingMode mode,
                                       const MonteCarloOptions& mc = {}, unsigned threads = 0);

/// Exact fraction of z in the box divisible by the Gaussian prime d.
/// Throws std::invalid_argument if d is not prime.
DensityEstimate divisibility_frequency(const GaussianInt& d, std::int64_t radius);

/// Exact fraction of ordered pairs (z1, z2) in the box with d | z1 and d | z2.
DensityEstimate pair_divisibility_frequency(const GaussianInt& d, std::int64_t radius);

struct EstimatorConfig {
    Ring ring = Ring::Gaussian;
    int k = 2;  // tuple size, rational ring only
    SamplingMode mode = SamplingMode::Exhaustive;
    MonteCarloOptions mc;
    unsigned threads = 0;
};

/// Coprimality density for `config` at one radius.
DensityEstimate estimate_density(const EstimatorConfig& config, std::int64_t radius);

struct ConvergenceRow {
    std::int64_t radius = 0;
    double estimate = 0.0;
    double abs_error = 0.0;
};

/// One row per radius. Throws std::invalid_argument unless radii is nonempty
/// and strictly ascending.
std::vector<ConvergenceRow> convergence_table(std::span<const std::int64_t> radii, const EstimatorConfig& config,
                                              double target);

}  // namespace gaussprob
