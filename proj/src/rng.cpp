#include "ssv/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace ssv {

std::uint64_t splitmix_hash(std::uint64_t x) {
    std::uint64_t z = x + 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double SeededRng::uniform(double a, double b) {
    double u = uniform01();
    return a + (b - a) * u;
}

SeededRng SeededRng::split(std::uint64_t tag) const {
    return SeededRng(splitmix_hash(seed_ ^ tag));
}

std::vector<Vec2> sample_uniform_disk(SeededRng& rng, double C, std::int64_t M) {
    if (C < 0.0) throw std::invalid_argument("sample_uniform_disk: negative radius");
    if (M < 0) throw std::invalid_argument("sample_uniform_disk: negative count");
    std::vector<Vec2> pts(static_cast<std::size_t>(M));
    constexpr double two_pi = 6.283185307179586476925286766559;
    for (auto& p : pts) {
        double r = C * std::sqrt(rng.uniform01());
        double theta = two_pi * rng.uniform01();
        p.x = r * std::cos(theta);
        p.y = r * std::sin(theta);
    }
    return pts;
}

std::vector<double> sample_uniform_interval(SeededRng& rng, double a, double b, std::int64_t M) {
    if (a > b) throw std::invalid_argument("sample_uniform_interval: a > b");
    if (M < 0) throw std::invalid_argument("sample_uniform_interval: negative count");
    std::vector<double> v(static_cast<std::size_t>(M));
    for (auto& x : v) x = rng.uniform(a, b);
    return v;
}

}  // namespace ssv
