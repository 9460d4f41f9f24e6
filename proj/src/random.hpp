#pragma once

#include <cstdint>
#include <limits>

namespace gaussprob::detail {

// SplitMix64. Used as a counter-based source: stream j of seed s starts
// from mix(s, j), so samples can be drawn in any order or partition.
class SplitMix64 {
public:
    using result_type = std::uint64_t;

    explicit SplitMix64(std::uint64_t state) : state_(state) {}

    static SplitMix64 stream(std::uint64_t seed, std::uint64_t index) {
        SplitMix64 g(seed);
        return SplitMix64(g() ^ finalize(index + 0x632be59bd9b4e019ULL));
    }

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()() { return finalize(state_ += 0x9e3779b97f4a7c15ULL); }

    /// Uniform integer in [0, bound), bound > 0 (Lemire's multiply-shift with rejection).
    std::uint64_t below(std::uint64_t bound) {
        unsigned __int128 m = static_cast<unsigned __int128>((*this)()) * bound;
        auto low = static_cast<std::uint64_t>(m);
        if (low < bound) {
            const std::uint64_t threshold = (0 - bound) % bound;
            while (low < threshold) {
                m = static_cast<unsigned __int128>((*this)()) * bound;
                low = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    /// Uniform integer in [-radius, radius].
    std::int64_t symmetric(std::int64_t radius) {
        return static_cast<std::int64_t>(below(2 * static_cast<std::uint64_t>(radius) + 1)) - radius;
    }

private:
    static std::uint64_t finalize(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

}  // namespace gaussprob::detail
