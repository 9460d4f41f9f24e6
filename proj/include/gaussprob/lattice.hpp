#pragma once

// Multiplicity lattices of Gaussian integers and lattice-point counting on
// their square fundamental cells. All geometry is exact integer arithmetic.

#include <array>
#include <cstdint>

#include "gaussprob/gaussian.hpp"

namespace gaussprob {

/// The sublattice g*Z[i] with basis (g, i*g).
class MultiplicityLattice {
public:
    /// Throws std::invalid_argument for g = 0.
    explicit MultiplicityLattice(GaussianInt generator);

    const GaussianInt& generator() const { return generator_; }
    std::array<GaussianInt, 2> basis() const { return {generator_, mul_i(generator_)}; }

    bool contains(const GaussianInt& z) const;

private:
    GaussianInt generator_;
};

/// The square cell with corner `base` and side vectors (g, i*g), with
/// vertices base, base+g, base+g+ig, base+ig in counterclockwise order.
class FundamentalDomain {
public:
    /// Throws std::invalid_argument for g = 0.
    FundamentalDomain(GaussianInt generator, GaussianInt base_vertex = {});

    const GaussianInt& generator() const { return generator_; }
    const GaussianInt& base_vertex() const { return base_; }
    std::array<GaussianInt, 4> vertices() const;

    /// Euclidean area, equal to norm(generator).
    std::int64_t area() const { return norm(generator_); }

private:
    GaussianInt generator_;
    GaussianInt base_;
};

/// Integer points on the closed boundary, each counted once.
std::int64_t count_boundary_points(const FundamentalDomain& domain);

/// Integer points strictly inside the square.
std::int64_t count_interior_points(const FundamentalDomain& domain);

struct PickReport {
    std::int64_t area = 0;      // the cell area is always an integer
    std::int64_t interior = 0;  // I
    std::int64_t boundary = 0;  // B

    /// A == I + B/2 - 1, checked as 2A == 2I + B - 2.
    bool holds() const { return 2 * area == 2 * interior + boundary - 2; }
};

PickReport pick_identity_check(const FundamentalDomain& domain);

/// True iff the segment p1-p2 carries no lattice points besides its ends,
/// i.e. gcd(|dx|, |dy|) = 1. Throws std::invalid_argument for p1 == p2.
bool is_primitive_segment(const GaussianInt& p1, const GaussianInt& p2);

}  // namespace gaussprob
