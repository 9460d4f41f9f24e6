#include "gaussprob/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace gaussprob {

namespace {

enum class Location { Outside, Boundary, Interior };

// Twice the signed area of (b - a, p - a); positive when p is left of a->b.
__int128 cross(const GaussianInt& a, const GaussianInt& b, std::int64_t px, std::int64_t py) {
    const __int128 ex = static_cast<__int128>(b.re) - a.re;
    const __int128 ey = static_cast<__int128>(b.im) - a.im;
    const __int128 qx = static_cast<__int128>(px) - a.re;
    const __int128 qy = static_cast<__int128>(py) - a.im;
    return ex * qy - ey * qx;
}

Location locate(const std::array<GaussianInt, 4>& v, std::int64_t x, std::int64_t y) {
    bool on_edge = false;
    for (std::size_t i = 0; i < 4; ++i) {
        const __int128 c = cross(v[i], v[(i + 1) % 4], x, y);
        if (c < 0) return Location::Outside;
        if (c == 0) on_edge = true;
    }
    return on_edge ? Location::Boundary : Location::Interior;
}

struct Counts {
    std::int64_t interior = 0;
    std::int64_t boundary = 0;
};

Counts scan(const FundamentalDomain& domain) {
    const auto v = domain.vertices();
    auto [xmin, xmax] = std::minmax({v[0].re, v[1].re, v[2].re, v[3].re});
    auto [ymin, ymax] = std::minmax({v[0].im, v[1].im, v[2].im, v[3].im});
    Counts counts;
    for (std::int64_t x = xmin; x <= xmax; ++x) {
        for (std::int64_t y = ymin; y <= ymax; ++y) {
            switch (locate(v, x, y)) {
                case Location::Interior: ++counts.interior; break;
                case Location::Boundary: ++counts.boundary; break;
                case Location::Outside: break;
            }
        }
    }
    return counts;
}

}  // namespace

MultiplicityLattice::MultiplicityLattice(GaussianInt generator) : generator_(generator) {
    if (generator_.is_zero()) throw std::invalid_argument("lattice: generator must be nonzero");
}

bool MultiplicityLattice::contains(const GaussianInt& z) const { return divides(generator_, z); }

FundamentalDomain::FundamentalDomain(GaussianInt generator, GaussianInt base_vertex)
    : generator_(generator), base_(base_vertex) {
    if (generator_.is_zero()) throw std::invalid_argument("fundamental domain: generator must be nonzero");
    vertices();  // overflow check
}

std::array<GaussianInt, 4> FundamentalDomain::vertices() const {
    const GaussianInt ig = mul_i(generator_);
    return {base_, base_ + generator_, base_ + generator_ + ig, base_ + ig};
}

std::int64_t count_boundary_points(const FundamentalDomain& domain) { return scan(domain).boundary; }

std::int64_t count_interior_points(const FundamentalDomain& domain) { return scan(domain).interior; }

PickReport pick_identity_check(const FundamentalDomain& domain) {
    const Counts counts = scan(domain);
    return {domain.area(), counts.interior, counts.boundary};
}

bool is_primitive_segment(const GaussianInt& p1, const GaussianInt& p2) {
    if (p1 == p2) throw std::invalid_argument("is_primitive_segment: endpoints must differ");
    const GaussianInt d = p2 - p1;
    return rational_gcd(d.re, d.im) == 1;
}

}  // namespace gaussprob
