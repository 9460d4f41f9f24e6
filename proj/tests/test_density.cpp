#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "gaussprob/density.hpp"
#include "gaussprob/zeta.hpp"
#include "oracles.hpp"

using namespace gaussprob;

namespace {

constexpr double kGaussTarget = 0.663700804613853460721431657617;

std::vector<GaussianInt> box(std::int64_t n) {
    std::vector<GaussianInt> out;
    for (std::int64_t x = -n; x <= n; ++x)
        for (std::int64_t y = -n; y <= n; ++y) out.push_back({x, y});
    return out;
}

}  // namespace

TEST_CASE("exhaustive Gaussian density at tiny radii") {
    const DensityEstimate zero = gaussian_pair_density_exhaustive(0, 1);
    CHECK(zero.trials == 1);
    CHECK(zero.hits == 0);
    CHECK(zero.estimate == 0.0);
    CHECK_FALSE(zero.std_error.has_value());
    CHECK(zero.mode == SamplingMode::Exhaustive);

    const DensityEstimate one = gaussian_pair_density_exhaustive(1, 1);
    CHECK(one.trials == 81);
    std::uint64_t expected = 0;
    for (const auto& a : box(1))
        for (const auto& b : box(1)) expected += oracle::coprime_by_search(a, b) ? 1 : 0;
    CHECK(one.hits == expected);
    CHECK(one.estimate == doctest::Approx(static_cast<double>(expected) / 81.0));
    CHECK(one.region_radius == 1);

    CHECK_THROWS_AS(gaussian_pair_density_exhaustive(-1), std::invalid_argument);
}

TEST_CASE("exhaustive density equals brute-force common-divisor count for N <= 3") {
    for (std::int64_t n = 0; n <= 3; ++n) {
        std::uint64_t expected = 0;
        const auto pts = box(n);
        for (const auto& a : pts)
            for (const auto& b : pts) expected += oracle::coprime_by_search(a, b) ? 1 : 0;
        CAPTURE(n);
        CHECK(gaussian_pair_density_exhaustive(n, 2).hits == expected);
    }
}

TEST_CASE("exhaustive hit count is invariant under swapping and unit multiplication") {
    const std::int64_t n = 10;
    const std::uint64_t hits = gaussian_pair_density_exhaustive(n, 1).hits;
    const auto pts = box(n);
    std::uint64_t swapped = 0;
    std::vector<std::uint64_t> by_unit(4, 0);
    for (const auto& a : pts)
        for (const auto& b : pts) {
            swapped += is_coprime(b, a) ? 1 : 0;
            for (int u = 0; u < 4; ++u) by_unit[u] += is_coprime(kUnits[u] * a, kUnits[(u + 1) % 4] * b) ? 1 : 0;
        }
    CHECK(swapped == hits);
    for (int u = 0; u < 4; ++u) CHECK(by_unit[u] == hits);
}

TEST_CASE("exhaustive counts do not depend on worker count") {
    const DensityEstimate base = gaussian_pair_density_exhaustive(6, 1);
    for (unsigned t : {1u, 2u, 3u, 8u}) {
        const DensityEstimate e = gaussian_pair_density_exhaustive(6, t);
        CHECK(e.hits == base.hits);
        CHECK(e.trials == base.trials);
    }
}

TEST_CASE("Monte Carlo Gaussian density") {
    const DensityEstimate a = gaussian_pair_density_mc(50'000, 1'000'000, 42, 1);
    const DensityEstimate b = gaussian_pair_density_mc(50'000, 1'000'000, 42, 4);
    CHECK(a.hits == b.hits);
    CHECK(a.seed == std::optional<std::uint64_t>(42));
    REQUIRE(a.std_error.has_value());
    CHECK(*a.std_error == doctest::Approx(std::sqrt(a.estimate * (1 - a.estimate) / 50'000.0)));
    CHECK(std::fabs(a.estimate - kGaussTarget) < 5 * *a.std_error);

    const DensityEstimate c = gaussian_pair_density_mc(50'000, 1'000'000, 43, 1);
    CHECK(c.hits != a.hits);

    const DensityEstimate single = gaussian_pair_density_mc(1, 1000, 9, 1);
    CHECK((single.estimate == 0.0 || single.estimate == 1.0));
    CHECK_THROWS_AS(gaussian_pair_density_mc(0, 10, 1), std::invalid_argument);
}

TEST_CASE("Monte Carlo calibration over 20 seeds") {
    int covered = 0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const DensityEstimate e = gaussian_pair_density_mc(100'000, 1'000'000, seed, 0);
        if (std::fabs(e.estimate - kGaussTarget) <= 3 * *e.std_error) ++covered;
    }
    CHECK(covered >= 18);
}

TEST_CASE("rational tuple density") {
    const DensityEstimate k2 = rational_tuple_density(2, 1, SamplingMode::Exhaustive);
    CHECK(k2.hits == 8);
    CHECK(k2.trials == 9);

    // k = 3 over {-2..2}^3 by direct triple loop.
    std::uint64_t expected = 0;
    for (int x = -2; x <= 2; ++x)
        for (int y = -2; y <= 2; ++y)
            for (int z = -2; z <= 2; ++z) expected += rational_gcd(rational_gcd(x, y), z) == 1 ? 1 : 0;
    const DensityEstimate k3 = rational_tuple_density(3, 2, SamplingMode::Exhaustive);
    CHECK(k3.hits == expected);
    CHECK(k3.trials == 125);

    const DensityEstimate k2_big = rational_tuple_density(2, 300, SamplingMode::Exhaustive, {}, 3);
    CHECK(k2_big.hits == rational_tuple_density(2, 300, SamplingMode::Exhaustive, {}, 1).hits);
    CHECK(std::fabs(k2_big.estimate - 0.6079271018540267) < 0.005);

    const DensityEstimate mc = rational_tuple_density(3, 1'000'000, SamplingMode::MonteCarlo, {200'000, 5});
    CHECK(std::fabs(mc.estimate - 0.8319073725807075) < 4 * *mc.std_error);
    CHECK(mc.hits == rational_tuple_density(3, 1'000'000, SamplingMode::MonteCarlo, {200'000, 5}, 2).hits);

    CHECK_THROWS_AS(rational_tuple_density(1, 5, SamplingMode::Exhaustive), std::invalid_argument);
    CHECK_THROWS_AS(rational_tuple_density(20, 1000, SamplingMode::Exhaustive), std::overflow_error);
}

TEST_CASE("divisibility frequency") {
    const DensityEstimate split = divisibility_frequency({2, 1}, 500);
    CHECK(std::fabs(split.estimate - 0.2) <= 10.0 / 500);

    const DensityEstimate ramified = divisibility_frequency({1, 1}, 500);
    std::uint64_t even = 0;
    for (int a = -500; a <= 500; ++a)
        for (int b = -500; b <= 500; ++b) even += ((a + b) % 2 == 0) ? 1 : 0;
    CHECK(ramified.hits == even);
    CHECK(ramified.estimate == doctest::Approx(0.5).epsilon(1e-3));

    const DensityEstimate inert_pair = pair_divisibility_frequency({3, 0}, 500);
    CHECK(std::fabs(inert_pair.estimate - 1.0 / 81) <= 3.0 / 500);
    CHECK(std::fabs((1 - inert_pair.estimate) - (1 - 1.0 / 81)) <= 3.0 / 500);
    const std::uint64_t multiples_of_3 = 333;  // -498..498 step 3
    CHECK(inert_pair.hits == multiples_of_3 * multiples_of_3 * multiples_of_3 * multiples_of_3);

    CHECK_THROWS_AS(divisibility_frequency({3, 1}, 10), std::invalid_argument);
    CHECK_THROWS_AS(divisibility_frequency({1, 0}, 10), std::invalid_argument);
}

TEST_CASE("convergence_table") {
    const std::vector<std::int64_t> one{1};
    const auto rows = convergence_table(one, {}, 0.0);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].abs_error == rows[0].estimate);

    const std::vector<std::int64_t> radii{10, 20};
    const auto table = convergence_table(radii, {}, kGaussTarget);
    REQUIRE(table.size() == 2);
    CHECK(table[0].radius == 10);
    CHECK(table[1].estimate == gaussian_pair_density_exhaustive(20).estimate);
    CHECK(table[1].abs_error == doctest::Approx(std::fabs(table[1].estimate - kGaussTarget)));

    CHECK_THROWS_AS(convergence_table(std::vector<std::int64_t>{}, {}, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(convergence_table(std::vector<std::int64_t>{5, 5}, {}, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(convergence_table(std::vector<std::int64_t>{5, 3}, {}, 0.0), std::invalid_argument);
}

TEST_CASE("resolve_threads") {
    CHECK(resolve_threads(3) == 3);
    setenv("GAUSSPROB_THREADS", "5", 1);
    CHECK(resolve_threads(0) == 5);
    setenv("GAUSSPROB_THREADS", "junk", 1);
    CHECK(resolve_threads(0) >= 1);
    unsetenv("GAUSSPROB_THREADS");
    CHECK(resolve_threads(0) >= 1);
}
