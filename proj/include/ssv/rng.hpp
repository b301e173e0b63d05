#pragma once

#include <cstdint>
#include <vector>

namespace ssv {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

/// Deterministic 64-bit generator (SplitMix64). Pure integer arithmetic, so
/// a given seed yields the same draw sequence on every platform. Substreams
/// are derived by hashing seed ^ tag, never by sharing state.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : seed_(seed), state_(seed) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t position() const { return position_; }

    std::uint64_t next_u64() {
        ++position_;
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0,1), 53 significant bits.
    double uniform01() { return double(next_u64() >> 11) * (1.0 / 9007199254740992.0); }

    /// Uniform double in [a,b]; a == b returns a without consuming entropy loss.
    double uniform(double a, double b);

    /// Uniform integer in [0,n) via 128-bit multiply-shift (fixed algorithm,
    /// platform-independent).
    std::uint64_t uniform_index(std::uint64_t n) {
        return std::uint64_t((static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    /// Substream with tag: state = splitmix_hash(seed ^ tag).
    SeededRng split(std::uint64_t tag) const;

private:
    std::uint64_t seed_;
    std::uint64_t state_;
    std::uint64_t position_ = 0;
};

/// One-step SplitMix64 avalanche, used for seed splitting.
std::uint64_t splitmix_hash(std::uint64_t x);

/// M points uniform on the closed disk |xi| <= C. Radius by inverse CDF
/// (C*sqrt(u)), angle uniform; two draws per point, radius first.
std::vector<Vec2> sample_uniform_disk(SeededRng& rng, double C, std::int64_t M);

/// M i.i.d. uniform draws on [a,b].
std::vector<double> sample_uniform_interval(SeededRng& rng, double a, double b, std::int64_t M);

}  // namespace ssv
