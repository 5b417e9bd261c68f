#ifndef WVC_RNG_HPP
#define WVC_RNG_HPP

#include <array>
#include <cstdint>
#include <limits>

namespace wvc {

/// SplitMix64 step. Used to expand a 64-bit seed into generator state and to
/// derive per-trial streams.
constexpr auto splitmix64(std::uint64_t& state) noexcept -> std::uint64_t
{
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// xoshiro256** (Blackman & Vigna), state seeded by four SplitMix64 outputs of
/// the user seed. The draw sequence is a pure function of the seed on every
/// platform; all derived draws (below, coin, unit) are implemented here rather
/// than through <random> distributions, whose algorithms are unspecified.
///
/// Trial t of an experiment with base seed s uses seed s + t.
class Rng {
public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed) noexcept : seed_(seed)
    {
        std::uint64_t sm = seed;
        for (auto& s : state_) { s = splitmix64(sm); }
    }

    static constexpr auto min() noexcept -> result_type { return 0; }
    static constexpr auto max() noexcept -> result_type { return std::numeric_limits<result_type>::max(); }

    [[nodiscard]] auto seed() const noexcept -> std::uint64_t { return seed_; }

    auto operator()() noexcept -> result_type
    {
        auto const result = rotl(state_[1] * 5, 7) * 9;
        auto const t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform integer in [0, bound), bound >= 1. Lemire's multiply-shift with
    /// rejection, so the distribution is exact.
    auto below(std::uint64_t bound) noexcept -> std::uint64_t
    {
        auto m = static_cast<unsigned __int128>((*this)()) * bound;
        auto low = static_cast<std::uint64_t>(m);
        if (low < bound) {
            auto const threshold = (0 - bound) % bound;
            while (low < threshold) {
                m = static_cast<unsigned __int128>((*this)()) * bound;
                low = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    /// Fair coin.
    auto coin() noexcept -> bool { return ((*this)() >> 63) != 0; }

    /// Uniform double in [0, 1) with 53 random bits.
    auto unit() noexcept -> double
    {
        return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
    }

private:
    static constexpr auto rotl(std::uint64_t x, int k) noexcept -> std::uint64_t
    {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t seed_;
    std::array<std::uint64_t, 4> state_{};
};

} // namespace wvc

#endif
