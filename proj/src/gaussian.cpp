#include "gaussprob/gaussian.hpp"

#include <cstdlib>
#include <stdexcept>
#include <type_traits>

namespace gaussprob {

namespace {

using Wide = __int128;

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("gaussian: int64 overflow in addition");
    return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("gaussian: int64 overflow in subtraction");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("gaussian: int64 overflow in multiplication");
    return r;
}

std::int64_t narrow(Wide v) {
    if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("gaussian: int64 overflow");
    return static_cast<std::int64_t>(v);
}

// floor(num / den) for den > 0.
template <typename T>
T floor_div(T num, T den) {
    T q = num / den;
    if (num % den != 0 && num < 0) --q;
    return q;
}

// Components small enough that all intermediates of divrem fit in int64.
constexpr std::int64_t kNarrowBound = std::int64_t{1} << 30;

bool narrow_ok(const GaussianInt& z) {
    return z.re <= kNarrowBound && z.re >= -kNarrowBound && z.im <= kNarrowBound && z.im >= -kNarrowBound;
}

template <typename T>
DivRem divrem_impl(const GaussianInt& z, const GaussianInt& d) {
    const T dr = d.re, di = d.im, zr = z.re, zi = z.im;
    const T n = dr * dr + di * di;
    // z * conj(d) / n, rounded to nearest per component.
    const T num_re = zr * dr + zi * di;
    const T num_im = zi * dr - zr * di;
    const T qr = floor_div<T>(2 * num_re + n, 2 * n);
    const T qi = floor_div<T>(2 * num_im + n, 2 * n);
    const T rr = zr - (qr * dr - qi * di);
    const T ri = zi - (qr * di + qi * dr);
    if constexpr (std::is_same_v<T, std::int64_t>) {
        return {{qr, qi}, {rr, ri}};
    } else {
        return {{narrow(qr), narrow(qi)}, {narrow(rr), narrow(ri)}};
    }
}

}  // namespace

GaussianInt operator+(const GaussianInt& a, const GaussianInt& b) {
    return {checked_add(a.re, b.re), checked_add(a.im, b.im)};
}

GaussianInt operator-(const GaussianInt& a, const GaussianInt& b) {
    return {checked_sub(a.re, b.re), checked_sub(a.im, b.im)};
}

GaussianInt operator-(const GaussianInt& a) {
    return {checked_sub(0, a.re), checked_sub(0, a.im)};
}

GaussianInt operator*(const GaussianInt& a, const GaussianInt& b) {
    return {checked_sub(checked_mul(a.re, b.re), checked_mul(a.im, b.im)),
            checked_add(checked_mul(a.re, b.im), checked_mul(a.im, b.re))};
}

GaussianInt conj(const GaussianInt& z) { return {z.re, checked_sub(0, z.im)}; }

GaussianInt mul_i(const GaussianInt& z) { return {checked_sub(0, z.im), z.re}; }

std::int64_t norm(const GaussianInt& z) {
    return checked_add(checked_mul(z.re, z.re), checked_mul(z.im, z.im));
}

bool is_unit(const GaussianInt& z) {
    return (z.im == 0 && (z.re == 1 || z.re == -1)) || (z.re == 0 && (z.im == 1 || z.im == -1));
}

DivRem divrem(const GaussianInt& z, const GaussianInt& d) {
    if (d.is_zero()) throw std::invalid_argument("gaussian: division by zero");
    if (narrow_ok(z) && narrow_ok(d)) return divrem_impl<std::int64_t>(z, d);
    norm(d);  // overflow check; the wide path needs norm(d) < 2^63
    return divrem_impl<Wide>(z, d);
}

bool divides(const GaussianInt& d, const GaussianInt& z) {
    if (d.is_zero()) throw std::invalid_argument("divides: divisor must be nonzero");
    return divrem(z, d).rem.is_zero();
}

GaussianInt canonical_associate(const GaussianInt& z) {
    if (z.re > 0 && z.im >= 0) return z;
    if (z.re <= 0 && z.im > 0) return {z.im, checked_sub(0, z.re)};   // * -i
    if (z.re < 0 && z.im <= 0) return {checked_sub(0, z.re), checked_sub(0, z.im)};
    if (z.re >= 0 && z.im < 0) return {checked_sub(0, z.im), z.re};   // * i
    return z;  // zero
}

GaussianInt gcd(GaussianInt a, GaussianInt b) {
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd: gcd(0, 0) is undefined");
    norm(a);
    norm(b);
    while (!b.is_zero()) {
        GaussianInt r = divrem(a, b).rem;
        a = b;
        b = r;
    }
    return canonical_associate(a);
}

bool is_coprime(const GaussianInt& z1, const GaussianInt& z2) {
    if (z1.is_zero() && z2.is_zero()) return false;
    // Any common divisor has norm dividing both norms.
    if (rational_gcd(norm(z1), norm(z2)) == 1) return true;
    return norm(gcd(z1, z2)) == 1;
}

std::int64_t rational_gcd(std::int64_t a, std::int64_t b) {
    std::uint64_t x = a < 0 ? 0 - static_cast<std::uint64_t>(a) : static_cast<std::uint64_t>(a);
    std::uint64_t y = b < 0 ? 0 - static_cast<std::uint64_t>(b) : static_cast<std::uint64_t>(b);
    while (y != 0) {
        std::uint64_t t = x % y;
        x = y;
        y = t;
    }
    if (x > static_cast<std::uint64_t>(INT64_MAX)) throw std::overflow_error("rational_gcd: result exceeds int64");
    return static_cast<std::int64_t>(x);
}

bool is_rational_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (std::int64_t f = 5; f <= n / f; f += 6) {
        if (n % f == 0 || n % (f + 2) == 0) return false;
    }
    return true;
}

PrimeClass classify(const GaussianInt& z) {
    const std::int64_t n = norm(z);
    if (n == 0) return {PrimeTag::Zero, std::nullopt};
    if (n == 1) return {PrimeTag::Unit, std::nullopt};
    if (n == 2) return {PrimeTag::Ramified, 2};
    if (z.re != 0 && z.im != 0) {
        // An odd prime that is a sum of two nonzero squares is 1 mod 4.
        if (is_rational_prime(n)) return {PrimeTag::Split, n};
        return {PrimeTag::Composite, std::nullopt};
    }
    const std::int64_t a = z.re != 0 ? std::llabs(z.re) : std::llabs(z.im);
    if (a % 4 == 3 && is_rational_prime(a)) return {PrimeTag::Inert, a};
    return {PrimeTag::Composite, std::nullopt};
}

std::string_view to_string(PrimeTag tag) {
    switch (tag) {
        case PrimeTag::Zero: return "zero";
        case PrimeTag::Unit: return "unit";
        case PrimeTag::Split: return "split";
        case PrimeTag::Inert: return "inert";
        case PrimeTag::Ramified: return "ramified";
        case PrimeTag::Composite: return "composite";
    }
    return "unknown";
}

std::string to_string(const GaussianInt& z) {
    if (z.im == 0) return std::to_string(z.re);
    if (z.re == 0) return std::to_string(z.im) + "i";
    std::string s = std::to_string(z.re);
    if (z.im > 0) s += '+';
    s += std::to_string(z.im);
    s += 'i';
    return s;
}

}  // namespace gaussprob
