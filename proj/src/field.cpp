#include "ssv/field.hpp"

#include <cmath>
#include <stdexcept>

namespace ssv {

std::size_t ScalarFieldSnapshot::expected_size() const {
    if (const auto* g1 = std::get_if<Grid1D>(&grid)) return static_cast<std::size_t>(g1->n);
    const auto& g2 = std::get<Grid2D>(grid);
    return static_cast<std::size_t>(g2.n) * static_cast<std::size_t>(g2.n);
}

void ScalarFieldSnapshot::validate() const {
    if (const auto* g1 = std::get_if<Grid1D>(&grid)) {
        if (g1->n < 2) throw std::invalid_argument("Grid1D: n must be >= 2");
        if (!(g1->x_min < g1->x_max)) throw std::invalid_argument("Grid1D: x_min must be < x_max");
    } else {
        const auto& g2 = std::get<Grid2D>(grid);
        if (g2.n < 8 || g2.n % 2 != 0)
            throw std::invalid_argument("Grid2D: n must be even and >= 8");
        if (!(g2.half_width > 0.0)) throw std::invalid_argument("Grid2D: half_width must be > 0");
    }
    if (t < 0.0) throw std::invalid_argument("snapshot: time must be >= 0");
    if (values.size() != expected_size())
        throw std::invalid_argument("snapshot: values length does not match grid");
    for (double v : values)
        if (!std::isfinite(v)) throw std::invalid_argument("snapshot: non-finite value");
}

void FieldSeries::validate() const {
    if (snapshots.empty()) throw std::invalid_argument("series: empty");
    snapshots.front().validate();
    for (std::size_t i = 1; i < snapshots.size(); ++i) {
        snapshots[i].validate();
        if (!(snapshots[i].t > snapshots[i - 1].t))
            throw std::invalid_argument("series: times must be strictly increasing");
        if (snapshots[i].grid != snapshots.front().grid)
            throw std::invalid_argument("series: snapshots must share one grid");
    }
}

}  // namespace ssv
