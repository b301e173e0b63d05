#include "ssv/interpolate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ssv {

namespace {

// Clamped cell lookup: returns the lower node index i with frac in [0,1],
// rejecting queries outside [node(0), node(n-1)] by a half-ulp-scale margin.
void locate(double q, double lo, double dx, int n, int& i, double& frac) {
    double hi = lo + (n - 1) * dx;
    double tol = 1e-12 * std::max(1.0, std::max(std::abs(lo), std::abs(hi)));
    if (q < lo - tol || q > hi + tol) throw std::out_of_range("interpolation query outside grid");
    double s = (q - lo) / dx;
    i = static_cast<int>(std::floor(s));
    if (i < 0) i = 0;
    if (i > n - 2) i = n - 2;
    frac = s - i;
    if (frac < 0.0) frac = 0.0;
    if (frac > 1.0) frac = 1.0;
}

}  // namespace

double bilinear_sample(const ScalarFieldSnapshot& snap, Vec2 p) {
    const auto& g = std::get<Grid2D>(snap.grid);
    // The usable box stops at the last node, one spacing short of +L.
    double lo = -g.half_width, dx = g.dx();
    int ix, iy;
    double fx, fy;
    locate(p.x, lo, dx, g.n, ix, fx);
    locate(p.y, lo, dx, g.n, iy, fy);
    const double* v = snap.values.data();
    std::size_t n = static_cast<std::size_t>(g.n);
    double v00 = v[iy * n + ix], v10 = v[iy * n + ix + 1];
    double v01 = v[(iy + 1) * n + ix], v11 = v[(iy + 1) * n + ix + 1];
    double a = v00 + fx * (v10 - v00);
    double b = v01 + fx * (v11 - v01);
    return a + fy * (b - a);
}

double bilinear_sample(const ScalarFieldSnapshot& snap, double x) {
    const auto& g = std::get<Grid1D>(snap.grid);
    int i;
    double f;
    locate(x, g.x_min, g.dx(), g.n, i, f);
    return snap.values[i] + f * (snap.values[i + 1] - snap.values[i]);
}

namespace {

// Bracketing pair for time t; exact hits return (k,k) with weight 0.
void locate_time(const FieldSeries& series, double t, std::size_t& k, double& w) {
    const auto& s = series.snapshots;
    double tol = 1e-12 * std::max(1.0, std::abs(s.back().t));
    if (t < s.front().t - tol || t > s.back().t + tol)
        throw std::out_of_range("time outside stored series");
    auto it = std::lower_bound(s.begin(), s.end(), t,
                               [](const ScalarFieldSnapshot& a, double v) { return a.t < v; });
    if (it == s.end()) {
        k = s.size() - 2;
        w = 1.0;
        return;
    }
    std::size_t j = static_cast<std::size_t>(it - s.begin());
    if (s[j].t == t || j == 0) {
        k = (j == s.size() - 1 && j > 0) ? j - 1 : j;
        w = (j == s.size() - 1 && j > 0) ? 1.0 : 0.0;
        if (s[j].t == t && j < s.size() - 1) {
            k = j;
            w = 0.0;
        }
        return;
    }
    k = j - 1;
    w = (t - s[k].t) / (s[k + 1].t - s[k].t);
    if (w < 0.0) w = 0.0;
    if (w > 1.0) w = 1.0;
}

}  // namespace

double space_time_sample(const FieldSeries& series, Vec2 p, double t) {
    if (series.snapshots.size() == 1) return bilinear_sample(series.snapshots[0], p);
    std::size_t k;
    double w;
    locate_time(series, t, k, w);
    double a = bilinear_sample(series.snapshots[k], p);
    if (w == 0.0) return a;
    double b = bilinear_sample(series.snapshots[k + 1], p);
    return a + w * (b - a);
}

double space_time_sample(const FieldSeries& series, double x, double t) {
    if (series.snapshots.size() == 1) return bilinear_sample(series.snapshots[0], x);
    std::size_t k;
    double w;
    locate_time(series, t, k, w);
    double a = bilinear_sample(series.snapshots[k], x);
    if (w == 0.0) return a;
    double b = bilinear_sample(series.snapshots[k + 1], x);
    return a + w * (b - a);
}

ScalarFieldSnapshot temporal_interpolate(const FieldSeries& series, double t) {
    if (series.snapshots.size() == 1) {
        double tol = 1e-12 * std::max(1.0, std::abs(series.snapshots[0].t));
        if (std::abs(t - series.snapshots[0].t) > tol)
            throw std::out_of_range("time outside stored series");
        return series.snapshots[0];
    }
    std::size_t k;
    double w;
    locate_time(series, t, k, w);
    ScalarFieldSnapshot out = series.snapshots[k];
    out.t = t;
    if (w != 0.0) {
        const auto& hi = series.snapshots[k + 1].values;
        for (std::size_t i = 0; i < out.values.size(); ++i)
            out.values[i] += w * (hi[i] - out.values[i]);
    }
    return out;
}

}  // namespace ssv
