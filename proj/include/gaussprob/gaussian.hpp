#pragma once

// Exact arithmetic in the Gaussian integers Z[i].
//
// Components are checked 64-bit integers. Every operation that could leave
// the int64 range throws std::overflow_error instead of wrapping.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace gaussprob {

struct GaussianInt {
    std::int64_t re = 0;
    std::int64_t im = 0;

    constexpr GaussianInt() = default;
    constexpr GaussianInt(std::int64_t real) : re(real) {}
    constexpr GaussianInt(std::int64_t real, std::int64_t imag) : re(real), im(imag) {}

    constexpr bool is_zero() const { return re == 0 && im == 0; }

    friend constexpr bool operator==(const GaussianInt&, const GaussianInt&) = default;
};

/// The four units, in the order 1, i, -1, -i.
inline constexpr GaussianInt kUnits[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

GaussianInt operator+(const GaussianInt& a, const GaussianInt& b);
GaussianInt operator-(const GaussianInt& a, const GaussianInt& b);
GaussianInt operator-(const GaussianInt& a);
GaussianInt operator*(const GaussianInt& a, const GaussianInt& b);

GaussianInt conj(const GaussianInt& z);

/// Multiplication by i, i.e. (re, im) -> (-im, re).
GaussianInt mul_i(const GaussianInt& z);

/// re^2 + im^2. Throws std::overflow_error if the result exceeds int64.
std::int64_t norm(const GaussianInt& z);

bool is_unit(const GaussianInt& z);

/// Quotient and remainder with |remainder|^2 <= norm(d)/2 (nearest-integer
/// rounding of z/d). Throws std::invalid_argument for d = 0.
struct DivRem {
    GaussianInt quot;
    GaussianInt rem;
};
DivRem divrem(const GaussianInt& z, const GaussianInt& d);

/// True iff z = d*c for some Gaussian integer c. d = 0 is an error.
bool divides(const GaussianInt& d, const GaussianInt& z);

/// The unique associate u*z lying in {re > 0, im >= 0}; 0 maps to 0.
GaussianInt canonical_associate(const GaussianInt& z);

/// Canonical greatest common divisor. gcd(0, 0) throws std::invalid_argument.
GaussianInt gcd(GaussianInt a, GaussianInt b);

/// True iff gcd(z1, z2) is a unit. (0, 0) is not coprime.
bool is_coprime(const GaussianInt& z1, const GaussianInt& z2);

enum class PrimeTag { Zero, Unit, Split, Inert, Ramified, Composite };

struct PrimeClass {
    PrimeTag tag = PrimeTag::Zero;
    /// The rational prime lying under a prime element; empty otherwise.
    std::optional<std::int64_t> rational_prime;

    bool is_prime() const {
        return tag == PrimeTag::Split || tag == PrimeTag::Inert || tag == PrimeTag::Ramified;
    }
    friend bool operator==(const PrimeClass&, const PrimeClass&) = default;
};

PrimeClass classify(const GaussianInt& z);

std::string_view to_string(PrimeTag tag);

/// Renders as "a", "bi" or "a+bi" / "a-bi", e.g. "1+1i", "3", "2-5i".
std::string to_string(const GaussianInt& z);

/// Deterministic trial-division primality test on rational integers.
bool is_rational_prime(std::int64_t n);

/// Rational-integer gcd of absolute values, gcd(0, 0) = 0.
std::int64_t rational_gcd(std::int64_t a, std::int64_t b);

}  // namespace gaussprob
