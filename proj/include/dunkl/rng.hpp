#pragma once

#include <cstdint>
#include <string_view>

namespace dunkl {

/// Deterministic splittable RNG (splitmix64 core). Identical sequences on
/// every platform, unlike the standard-library distributions.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64()
    {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double next_double()
    {
        return double(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform in [a, b).
    double uniform(double a, double b) { return a + (b - a) * next_double(); }

    /// Split off an independent stream labeled by `tag`.
    SplitMix64 split(std::string_view tag) const
    {
        std::uint64_t h = 0xcbf29ce484222325ULL ^ state_;
        for (char c : tag) {
            h ^= std::uint64_t(static_cast<unsigned char>(c));
            h *= 0x100000001b3ULL;
        }
        return SplitMix64(h);
    }

    std::uint64_t state() const { return state_; }

  private:
    std::uint64_t state_;
};

} // namespace dunkl
