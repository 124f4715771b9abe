#ifndef PFROB_RNG_HPP
#define PFROB_RNG_HPP

#include <cstdint>

namespace pfrob
{

// SplitMix64. Its output is fixed by the seed on every platform, unlike the
// standard distributions, so seeded runs reproduce exactly.
class SeededRng
{
public:
    explicit SeededRng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next()
    {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform on [lo, hi] by rejection; requires lo <= hi.
    std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi)
    {
        const std::uint64_t span = hi - lo;
        if (span == UINT64_MAX) {
            return next();
        }
        const std::uint64_t range = span + 1;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return lo + x % range;
    }

    std::int64_t uniform_signed(std::int64_t lo, std::int64_t hi)
    {
        return lo + static_cast<std::int64_t>(uniform(0, static_cast<std::uint64_t>(hi - lo)));
    }

private:
    std::uint64_t state_;
};

inline constexpr std::uint64_t kDefaultSeed = 0x70F1A5EEDULL;

} // namespace pfrob

#endif
