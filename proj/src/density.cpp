#include "gaussprob/density.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>

#include "parallel.hpp"
#include "random.hpp"

namespace gaussprob {

namespace {

// Monte Carlo samples per scheduling task.
constexpr std::uint64_t kSampleChunk = 1 << 16;

void require_radius(std::int64_t radius, const char* what) {
    if (radius < 0) throw std::invalid_argument(std::string(what) + ": radius must be >= 0");
    if (radius > kMaxRadius) throw std::invalid_argument(std::string(what) + ": radius exceeds " +
                                                         std::to_string(kMaxRadius));
}

std::uint64_t checked_pow(std::uint64_t base, int exponent, const char* what) {
    std::uint64_t r = 1;
    for (int i = 0; i < exponent; ++i) {
        if (__builtin_mul_overflow(r, base, &r))
            throw std::overflow_error(std::string(what) + ": trial count overflows 64 bits");
    }
    return r;
}

DensityEstimate exhaustive_result(std::uint64_t hits, std::uint64_t trials, std::int64_t radius) {
    DensityEstimate e;
    e.hits = hits;
    e.trials = trials;
    e.estimate = static_cast<double>(hits) / static_cast<double>(trials);
    e.region_radius = radius;
    e.mode = SamplingMode::Exhaustive;
    return e;
}

DensityEstimate mc_result(std::uint64_t hits, std::uint64_t trials, std::int64_t radius, std::uint64_t seed) {
    DensityEstimate e;
    e.hits = hits;
    e.trials = trials;
    e.estimate = static_cast<double>(hits) / static_cast<double>(trials);
    e.std_error = std::sqrt(e.estimate * (1.0 - e.estimate) / static_cast<double>(trials));
    e.region_radius = radius;
    e.mode = SamplingMode::MonteCarlo;
    e.seed = seed;
    return e;
}

template <typename Sample>
std::uint64_t count_samples(std::uint64_t samples, unsigned threads, Sample sample) {
    const std::uint64_t chunks = (samples + kSampleChunk - 1) / kSampleChunk;
    return detail::parallel_sum(chunks, resolve_threads(threads), [&](std::uint64_t c) {
        const std::uint64_t begin = c * kSampleChunk;
        const std::uint64_t end = std::min(samples, begin + kSampleChunk);
        std::uint64_t hits = 0;
        for (std::uint64_t j = begin; j < end; ++j) hits += sample(j) ? 1 : 0;
        return hits;
    });
}

// Number of tuples in [-N, N]^(k - depth) extending a prefix with gcd g.
std::uint64_t count_coprime_extensions(std::int64_t g, int remaining, std::int64_t radius,
                                       std::uint64_t side) {
    if (g == 1) return checked_pow(side, remaining, "rational_tuple_density");
    if (remaining == 0) return 0;
    std::uint64_t hits = 0;
    for (std::int64_t x = -radius; x <= radius; ++x)
        hits += count_coprime_extensions(rational_gcd(g, x), remaining - 1, radius, side);
    return hits;
}

std::uint64_t count_multiples_in_box(const GaussianInt& d, std::int64_t radius) {
    std::uint64_t count = 0;
    for (std::int64_t x = -radius; x <= radius; ++x)
        for (std::int64_t y = -radius; y <= radius; ++y) count += divides(d, {x, y}) ? 1 : 0;
    return count;
}

}  // namespace

std::string_view to_string(SamplingMode mode) {
    return mode == SamplingMode::Exhaustive ? "exhaustive" : "mc";
}

std::string_view to_string(Ring ring) { return ring == Ring::Gaussian ? "gauss" : "rational"; }

unsigned resolve_threads(unsigned requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("GAUSSPROB_THREADS")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v > 0 && v <= 1024) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

DensityEstimate gaussian_pair_density_exhaustive(std::int64_t radius, unsigned threads) {
    require_radius(radius, "gaussian_pair_density_exhaustive");
    const std::uint64_t side = 2 * static_cast<std::uint64_t>(radius) + 1;
    const std::uint64_t trials = checked_pow(side, 4, "gaussian_pair_density_exhaustive");
    const std::uint64_t cells = side * side;
    // One task per z1; z2 sweeps the whole box.
    const std::uint64_t hits = detail::parallel_sum(cells, resolve_threads(threads), [&](std::uint64_t cell) {
        const GaussianInt z1{static_cast<std::int64_t>(cell / side) - radius,
                             static_cast<std::int64_t>(cell % side) - radius};
        std::uint64_t local = 0;
        for (std::int64_t x = -radius; x <= radius; ++x)
            for (std::int64_t y = -radius; y <= radius; ++y) local += is_coprime(z1, {x, y}) ? 1 : 0;
        return local;
    });
    return exhaustive_result(hits, trials, radius);
}

DensityEstimate gaussian_pair_density_mc(std::uint64_t samples, std::int64_t radius, std::uint64_t seed,
                                         unsigned threads) {
    if (samples == 0) throw std::invalid_argument("gaussian_pair_density_mc: samples must be >= 1");
    require_radius(radius, "gaussian_pair_density_mc");
    const std::uint64_t hits = count_samples(samples, threads, [&](std::uint64_t j) {
        auto rng = detail::SplitMix64::stream(seed, j);
        const std::int64_t a = rng.symmetric(radius);
        const std::int64_t b = rng.symmetric(radius);
        const std::int64_t c = rng.symmetric(radius);
        const std::int64_t d = rng.symmetric(radius);
        return is_coprime({a, b}, {c, d});
    });
    return mc_result(hits, samples, radius, seed);
}

DensityEstimate rational_tuple_density(int k, std::int64_t radius, SamplingMode mode, const MonteCarloOptions& mc,
                                       unsigned threads) {
    if (k < 2) throw std::invalid_argument("rational_tuple_density: k must be >= 2");
    if (radius < 0) throw std::invalid_argument("rational_tuple_density: radius must be >= 0");
    if (radius > INT64_MAX / 4) throw std::invalid_argument("rational_tuple_density: radius too large");
    const std::uint64_t side = 2 * static_cast<std::uint64_t>(radius) + 1;

    if (mode == SamplingMode::Exhaustive) {
        const std::uint64_t trials = checked_pow(side, k, "rational_tuple_density");
        const std::uint64_t hits = detail::parallel_sum(side, resolve_threads(threads), [&](std::uint64_t i) {
            const std::int64_t first = static_cast<std::int64_t>(i) - radius;
            return count_coprime_extensions(first < 0 ? -first : first, k - 1, radius, side);
        });
        return exhaustive_result(hits, trials, radius);
    }

    if (mc.samples == 0) throw std::invalid_argument("rational_tuple_density: samples must be >= 1");
    const std::uint64_t hits = count_samples(mc.samples, threads, [&](std::uint64_t j) {
        auto rng = detail::SplitMix64::stream(mc.seed, j);
        std::int64_t g = 0;
        for (int i = 0; i < k; ++i) g = rational_gcd(g, rng.symmetric(radius));
        return g == 1;
    });
    return mc_result(hits, mc.samples, radius, mc.seed);
}

DensityEstimate divisibility_frequency(const GaussianInt& d, std::int64_t radius) {
    if (!classify(d).is_prime())
        throw std::invalid_argument("divisibility_frequency: " + to_string(d) + " is not a Gaussian prime");
    require_radius(radius, "divisibility_frequency");
    const std::uint64_t side = 2 * static_cast<std::uint64_t>(radius) + 1;
    return exhaustive_result(count_multiples_in_box(d, radius), checked_pow(side, 2, "divisibility_frequency"),
                             radius);
}

DensityEstimate pair_divisibility_frequency(const GaussianInt& d, std::int64_t radius) {
    const DensityEstimate single = divisibility_frequency(d, radius);
    // The pair box is a product, so both-divide pairs number exactly hits^2.
    std::uint64_t hits, trials;
    if (__builtin_mul_overflow(single.hits, single.hits, &hits) ||
        __builtin_mul_overflow(single.trials, single.trials, &trials))
        throw std::overflow_error("pair_divisibility_frequency: trial count overflows 64 bits");
    return exhaustive_result(hits, trials, radius);
}

DensityEstimate estimate_density(const EstimatorConfig& config, std::int64_t radius) {
    if (config.ring == Ring::Rational) return rational_tuple_density(config.k, radius, config.mode, config.mc, config.threads);
    if (config.mode == SamplingMode::Exhaustive) return gaussian_pair_density_exhaustive(radius, config.threads);
    return gaussian_pair_density_mc(config.mc.samples, radius, config.mc.seed, config.threads);
}

std::vector<ConvergenceRow> convergence_table(std::span<const std::int64_t> radii, const EstimatorConfig& config,
                                              double target) {
    if (radii.empty()) throw std::invalid_argument("convergence_table: radii must be nonempty");
    for (std::size_t i = 1; i < radii.size(); ++i)
        if (radii[i] <= radii[i - 1]) throw std::invalid_argument("convergence_table: radii must be strictly ascending");
    std::vector<ConvergenceRow> rows;
    rows.reserve(radii.size());
    for (std::int64_t r : radii) {
        const DensityEstimate e = estimate_density(config, r);
        rows.push_back({r, e.estimate, std::fabs(e.estimate - target)});
    }
    return rows;
}

}  // namespace gaussprob
