#pragma once

#include <cstddef>
#include <variant>
#include <vector>

namespace ssv {

/// Uniform 1D grid with both endpoints included: node i at
/// x_min + i*(x_max-x_min)/(n-1).
struct Grid1D {
    int n = 0;
    double x_min = 0.0;
    double x_max = 0.0;

    double dx() const { return (x_max - x_min) / (n - 1); }
    double node(int i) const { return x_min + i * dx(); }
    bool operator==(const Grid1D&) const = default;
};

/// Periodic square box [-L,L]^2 for the spectral solver. n nodes per axis at
/// x_i = -L + i*(2L/n); the +L edge is the periodic image of -L.
struct Grid2D {
    int n = 0;
    double half_width = 0.0;

    double dx() const { return 2.0 * half_width / n; }
    double node(int i) const { return -half_width + i * dx(); }
    bool operator==(const Grid2D&) const = default;
};

/// Fixed self-similar sampling radius C > 0; the window is |xi| <= C.
struct Window {
    double C = 0.0;
};

/// One scalar field (vorticity or velocity) sampled at a single time.
/// 2D values are row-major: values[j*n + i] at (x_i, y_j).
struct ScalarFieldSnapshot {
    std::variant<Grid1D, Grid2D> grid;
    double t = 0.0;
    std::vector<double> values;

    int dim() const { return std::holds_alternative<Grid1D>(grid) ? 1 : 2; }
    std::size_t expected_size() const;

    /// Enforces size match and finiteness of all values.
    void validate() const;
};

/// Time-ordered snapshots on one shared grid; the reference solution object.
struct FieldSeries {
    std::vector<ScalarFieldSnapshot> snapshots;

    double t_front() const { return snapshots.front().t; }
    double t_back() const { return snapshots.back().t; }

    /// Strictly increasing times, identical grids, valid snapshots.
    void validate() const;
};

}  // namespace ssv
