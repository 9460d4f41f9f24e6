#include <doctest.h>

#include <bitset>
#include <cstdint>
#include <random>
#include <stdexcept>

#include "gaussprob/gaussian.hpp"
#include "oracles.hpp"

using namespace gaussprob;

TEST_CASE("norm") {
    CHECK(norm({2, 1}) == 5);
    CHECK(norm({0, 0}) == 0);
    CHECK(norm({1, 1}) == 2);
    CHECK(norm({-3, 4}) == 25);
    CHECK_THROWS_AS(norm({INT64_MAX, 0}), std::overflow_error);
    CHECK_THROWS_AS(norm({std::int64_t{3'100'000'000}, std::int64_t{3'100'000'000}}), std::overflow_error);
}

TEST_CASE("checked arithmetic reports overflow") {
    CHECK_THROWS_AS(GaussianInt(INT64_MAX, 0) + GaussianInt(1, 0), std::overflow_error);
    CHECK_THROWS_AS(-GaussianInt(INT64_MIN, 0), std::overflow_error);
    CHECK_THROWS_AS(GaussianInt(std::int64_t{1} << 40, 0) * GaussianInt(std::int64_t{1} << 40, 0), std::overflow_error);
    CHECK(GaussianInt(2, 1) * GaussianInt(2, -1) == GaussianInt(5, 0));
    CHECK(mul_i({2, 1}) == GaussianInt(-1, 2));
}

TEST_CASE("norm is multiplicative on random pairs") {
    std::mt19937_64 rng(20261015);
    std::uniform_int_distribution<std::int64_t> coord(-(1 << 14), 1 << 14);
    for (int i = 0; i < 100'000; ++i) {
        const GaussianInt w{coord(rng), coord(rng)}, z{coord(rng), coord(rng)};
        const __int128 lhs = norm(w * z);
        const __int128 rhs = static_cast<__int128>(norm(w)) * norm(z);
        REQUIRE(lhs == rhs);
    }
}

TEST_CASE("divides") {
    CHECK(divides({1, 2}, {5, 0}));
    CHECK(divides({3, 0}, {3, 3}));
    CHECK(oracle::divides_by_search({2, 1}, {1, 1}) == false);
    CHECK_FALSE(divides({2, 1}, {1, 1}));
    CHECK(divides({7, -3}, {0, 0}));
    CHECK_THROWS_AS(divides({0, 0}, {1, 0}), std::invalid_argument);
}

TEST_CASE("divides agrees with quotient search") {
    const auto small = oracle::ball(50);
    for (const auto& d : small)
        for (const auto& z : small) REQUIRE(divides(d, z) == oracle::divides_by_search(d, z));
}

TEST_CASE("divrem remainder is smaller than the divisor") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> big(-(std::int64_t{1} << 40), std::int64_t{1} << 40);
    std::uniform_int_distribution<std::int64_t> small(-1000, 1000);
    for (int i = 0; i < 20'000; ++i) {
        const GaussianInt z{big(rng), big(rng)};
        GaussianInt d{small(rng), small(rng)};
        if (d.is_zero()) d = {1, 1};
        const DivRem qr = divrem(z, d);
        REQUIRE(qr.quot * d + qr.rem == z);
        REQUIRE(2 * norm(qr.rem) <= norm(d));
    }
}

TEST_CASE("canonical_associate") {
    CHECK(canonical_associate({-3, 0}) == GaussianInt(3, 0));
    CHECK(canonical_associate({-1, 2}) == GaussianInt(2, 1));
    CHECK(canonical_associate({0, 0}) == GaussianInt(0, 0));
    CHECK(canonical_associate({0, -1}) == GaussianInt(1, 0));
    for (const auto& z : oracle::ball(100)) {
        const GaussianInt c = canonical_associate(z);
        REQUIRE(c.re > 0);
        REQUIRE(c.im >= 0);
        int hits = 0;
        for (const auto& u : kUnits) hits += (u * z == c) ? 1 : 0;
        REQUIRE(hits == 1);
    }
}

TEST_CASE("gcd examples") {
    CHECK(gcd({5, 0}, {3, 0}) == GaussianInt(1, 0));
    CHECK(gcd({2, 1}, {5, 0}) == GaussianInt(2, 1));
    // 4+2i = 2(2+i): the common divisor of largest norm is 2, not 1+i.
    CHECK(oracle::max_common_divisor_norm({4, 2}, {2, 0}) == 4);
    CHECK(gcd({4, 2}, {2, 0}) == GaussianInt(2, 0));
    CHECK(gcd({0, 7}, {0, 0}) == GaussianInt(7, 0));
    CHECK_THROWS_AS(gcd({0, 0}, {0, 0}), std::invalid_argument);
}

TEST_CASE("gcd handles large components through the wide path") {
    const GaussianInt p{std::int64_t{1'100'000'001}, std::int64_t{-1'000'000'000}};
    const GaussianInt a = p * GaussianInt(0, 1);
    const GaussianInt b = p * GaussianInt(1, 1);
    CHECK(norm(gcd(a, b)) == norm(p));
    CHECK(gcd(a, b) == canonical_associate(p));
}

TEST_CASE("gcd is commutative and invariant under associates") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::int64_t> coord(-10'000, 10'000);
    for (int i = 0; i < 20'000; ++i) {
        const GaussianInt a{coord(rng), coord(rng)}, b{coord(rng), coord(rng)};
        if (a.is_zero() && b.is_zero()) continue;
        const GaussianInt g = gcd(a, b);
        REQUIRE(gcd(b, a) == g);
        for (const auto& u : kUnits) {
            REQUIRE(gcd(u * a, b) == g);
            REQUIRE(gcd(a, u * b) == g);
        }
    }
}

TEST_CASE("gcd is the greatest common divisor for all norms <= 200") {
    // Every divisor of z with norm(z) <= 200 lies in the ball, so divisor sets
    // are bitsets over it.
    const auto elems = oracle::ball(200);
    REQUIRE(elems.size() < 1024);
    std::vector<std::bitset<1024>> divisor_sets(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = 0; j < elems.size(); ++j)
            if (oracle::divides_algebraic(elems[j], elems[i])) divisor_sets[i].set(j);
    auto index_of = [&](const GaussianInt& z) {
        for (std::size_t k = 0; k < elems.size(); ++k)
            if (elems[k] == z) return k;
        FAIL("not in ball");
        return std::size_t{0};
    };
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (std::size_t j = 0; j < elems.size(); ++j) {
            const GaussianInt g = gcd(elems[i], elems[j]);
            const std::size_t gi = index_of(g);
            const auto common = divisor_sets[i] & divisor_sets[j];
            REQUIRE(common.test(gi));                        // g divides both
            REQUIRE((common & ~divisor_sets[gi]).none());    // common divisors divide g
        }
    }
}

TEST_CASE("is_coprime") {
    CHECK_FALSE(is_coprime({1, 1}, {1, -1}));
    CHECK(oracle::coprime_by_search({2, 1}, {2, -1}));
    CHECK(is_coprime({2, 1}, {2, -1}));
    CHECK_FALSE(is_coprime({0, 0}, {0, 0}));
    CHECK(is_coprime({0, 0}, {0, 1}));
    CHECK_FALSE(is_coprime({0, 0}, {3, 0}));
    for (const auto& a : oracle::ball(30))
        for (const auto& b : oracle::ball(30)) REQUIRE(is_coprime(a, b) == oracle::coprime_by_search(a, b));
}

TEST_CASE("classify examples") {
    CHECK(classify({3, 0}) == PrimeClass{PrimeTag::Inert, 3});
    CHECK(classify({1, 1}) == PrimeClass{PrimeTag::Ramified, 2});
    CHECK(classify({2, 1}) == PrimeClass{PrimeTag::Split, 5});
    CHECK(classify({3, 1}).tag == PrimeTag::Composite);
    CHECK(divides({1, 1}, {3, 1}));
    CHECK(classify({0, 0}).tag == PrimeTag::Zero);
    CHECK(classify({0, -1}).tag == PrimeTag::Unit);
    CHECK(classify({0, -7}) == PrimeClass{PrimeTag::Inert, 7});
    CHECK(classify({5, 0}).tag == PrimeTag::Composite);
    CHECK(classify({2, 0}).tag == PrimeTag::Composite);
    CHECK(classify({9, 0}).tag == PrimeTag::Composite);
}

TEST_CASE("classify agrees with brute-force divisor search for norm <= 2000") {
    for (const auto& z : oracle::ball(2000)) {
        const PrimeClass c = classify(z);
        REQUIRE(c.is_prime() == oracle::is_prime_by_search(z));
        if (c.tag == PrimeTag::Split) {
            REQUIRE(*c.rational_prime % 4 == 1);
            REQUIRE(*c.rational_prime == norm(z));
        }
        if (c.tag == PrimeTag::Inert) {
            REQUIRE(*c.rational_prime % 4 == 3);
            REQUIRE(canonical_associate(z) == GaussianInt(*c.rational_prime, 0));
        }
        if (c.tag == PrimeTag::Ramified) REQUIRE(norm(z) == 2);
    }
}

TEST_CASE("Fermat two-squares cross-check for p <= 10^4") {
    for (std::int64_t p = 3; p <= 10'000; ++p) {
        if (!is_rational_prime(p)) continue;
        if (p % 4 == 3) {
            REQUIRE(classify({p, 0}).tag == PrimeTag::Inert);
            continue;
        }
        bool found = false;
        for (std::int64_t a = 1; a * a < p && !found; ++a) {
            const std::int64_t b = oracle::isqrt(p - a * a);
            if (a * a + b * b == p) {
                found = true;
                REQUIRE(classify({a, b}) == PrimeClass{PrimeTag::Split, p});
            }
        }
        REQUIRE(found);
    }
}

TEST_CASE("rational helpers") {
    CHECK(rational_gcd(12, -18) == 6);
    CHECK(rational_gcd(0, 0) == 0);
    CHECK(rational_gcd(0, -5) == 5);
    CHECK_THROWS_AS(rational_gcd(INT64_MIN, 0), std::overflow_error);
    CHECK(is_rational_prime(2));
    CHECK_FALSE(is_rational_prime(1));
    CHECK_FALSE(is_rational_prime(-7));
    CHECK(is_rational_prime(1'000'000'007));
}

TEST_CASE("to_string") {
    CHECK(to_string(GaussianInt(1, 1)) == "1+1i");
    CHECK(to_string(GaussianInt(1, 0)) == "1");
    CHECK(to_string(GaussianInt(2, -5)) == "2-5i");
    CHECK(to_string(GaussianInt(0, 3)) == "3i");
    CHECK(to_string(PrimeTag::Split) == "split");
}
