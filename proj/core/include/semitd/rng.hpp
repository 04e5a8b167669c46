#ifndef SEMITD_RNG_HPP
#define SEMITD_RNG_HPP

#include <cstdint>

namespace semitd {

/// Deterministic 64-bit generator (splitmix64). The state advances by the
/// constant 0x9e3779b97f4a7c15 and each output is finalized with two
/// xor-shift-multiply rounds (0xbf58476d1ce4e5b9, 0x94d049bb133111eb).
/// Identical seeds give identical streams on every platform, which is what
/// makes generated test corpora reproducible.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept
    {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, bound) via 128-bit multiply-shift; bound > 0.
    std::uint64_t below(std::uint64_t bound) noexcept
    {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double unit() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

} // namespace semitd

#endif
