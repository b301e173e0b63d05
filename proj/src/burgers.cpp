#include "ssv/burgers.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "ssv/profiles.hpp"

namespace ssv {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

// erf(hi) - erf(lo) without cancellation when both arguments sit in the
// same saturated tail.
double erf_diff(double hi, double lo) {
    if (lo > 0.5 && hi > 0.5) return std::erfc(lo) - std::erfc(hi);
    if (lo < -0.5 && hi < -0.5) return std::erfc(-hi) - std::erfc(-lo);
    return std::erf(hi) - std::erf(lo);
}

}  // namespace

double Burgers1dConfig::effective_dt() const {
    double dx = grid.dx();
    double step = dt > 0.0 ? dt : 0.5 * dx * dx;
    long per_out = std::max(1L, static_cast<long>(std::ceil(dt_out / step - 1e-12)));
    return dt_out / static_cast<double>(per_out);
}

void Burgers1dConfig::validate() const {
    if (grid.n < 2) throw std::invalid_argument("burgers: grid n must be >= 2");
    if (!(grid.x_min < grid.x_max)) throw std::invalid_argument("burgers: empty domain");
    if (scheme == BurgersScheme::CentralFd && dt < 0.0)
        throw std::invalid_argument("burgers: negative dt");
    if (!(t_end > 0.0)) throw std::invalid_argument("burgers: t_end must be > 0");
    if (!(dt_out > 0.0)) throw std::invalid_argument("burgers: cadence must be > 0");
    if (dt > 0.0 && dt > dt_out) throw std::invalid_argument("burgers: cadence below dt");
}

// phi(x,t) for the bipolar box via the heat evolution of
// phi0 = exp(-(1/2) int_{-inf}^x u0); phi0 is piecewise exponential, so each
// piece contributes  e^{c x + c^2 t} * (erf-window)  terms.
double solve_burgers_cole_hopf(double x, double t) {
    if (t < 0.0) throw std::invalid_argument("cole_hopf: t must be >= 0");
    if (t == 0.0) return burgers_initial_bipolar_box(x);

    double rt = std::sqrt(t);
    double inv2rt = 1.0 / (2.0 * rt);
    double em = std::exp(-0.5);  // boundary value of phi0 on [-1,1]

    // c = 0 pieces: y < -1 and y > 1.
    double T1 = 0.5 * std::erfc((x + 1.0) * inv2rt);
    double T4 = 0.5 * std::erfc((1.0 - x) * inv2rt);
    // c = -1/2 on [-1,0] and c = +1/2 on [0,1].
    double A2 = em * std::exp(-0.5 * x + 0.25 * t);
    double B2 = 0.5 * erf_diff((t - x) * inv2rt, (t - 1.0 - x) * inv2rt);
    double A3 = em * std::exp(0.5 * x + 0.25 * t);
    double B3 = 0.5 * erf_diff((1.0 - x - t) * inv2rt, (-x - t) * inv2rt);

    double phi = T1 + A2 * B2 + A3 * B3 + T4;
    if (!(phi > 1e-300))
        throw std::runtime_error("cole_hopf: phi underflow (catastrophic cancellation)");

    auto gauss = [&](double s) { return std::exp(-s * s / (4.0 * t)) / (2.0 * std::sqrt(kPi * t)); };
    double dT1 = -gauss(x + 1.0);
    double dT4 = gauss(1.0 - x);
    double dB2 = -(gauss(t - x) - gauss(t - 1.0 - x));
    double dB3 = -(gauss(1.0 - x - t) - gauss(-x - t));
    double phi_x = dT1 + (-0.5) * A2 * B2 + A2 * dB2 + 0.5 * A3 * B3 + A3 * dB3 + dT4;

    return -2.0 * phi_x / phi;
}

FieldSeries cole_hopf_series(const Burgers1dConfig& cfg) {
    cfg.validate();
    long n_out = std::lround(cfg.t_end / cfg.dt_out);
    FieldSeries series;
    series.snapshots.reserve(static_cast<std::size_t>(n_out) + 1);
    for (long k = 0; k <= n_out; ++k) {
        double t = k * cfg.dt_out;
        ScalarFieldSnapshot s{cfg.grid, t, std::vector<double>(cfg.grid.n)};
#pragma omp parallel for schedule(static)
        for (int i = 0; i < cfg.grid.n; ++i) s.values[i] = solve_burgers_cole_hopf(cfg.grid.node(i), t);
        series.snapshots.push_back(std::move(s));
    }
    series.validate();
    return series;
}

void burgers_fd_rhs(const std::vector<double>& u, double dx, std::vector<double>& out,
                    bool parallel) {
    std::size_t n = u.size();
    out.resize(n);
    out[0] = 0.0;
    out[n - 1] = 0.0;
    double inv_dx2 = 1.0 / (dx * dx);
    double inv_4dx = 1.0 / (4.0 * dx);
#pragma omp parallel for if (parallel) schedule(static)
    for (std::size_t i = 1; i < n - 1; ++i) {
        double diff = (u[i + 1] - 2.0 * u[i] + u[i - 1]) * inv_dx2;
        double flux = (u[i + 1] * u[i + 1] - u[i - 1] * u[i - 1]) * inv_4dx;
        out[i] = diff - flux;
    }
}

FieldSeries solve_burgers_fd(const ScalarFieldSnapshot& u0, const Burgers1dConfig& cfg) {
    cfg.validate();
    u0.validate();
    if (!std::holds_alternative<Grid1D>(u0.grid) || std::get<Grid1D>(u0.grid) != cfg.grid)
        throw std::invalid_argument("burgers_fd: initial snapshot grid does not match config");

    double dx = cfg.grid.dx();
    double dt = cfg.effective_dt();
    long per_out = std::lround(cfg.dt_out / dt);
    long n_out = std::lround(cfg.t_end / cfg.dt_out);

    std::vector<double> u = u0.values;
    u.front() = 0.0;
    u.back() = 0.0;
    double limit = 0.0;
    for (double v : u) limit = std::max(limit, std::abs(v));
    limit *= 10.0;

    FieldSeries series;
    series.snapshots.reserve(static_cast<std::size_t>(n_out) + 1);
    series.snapshots.push_back({u0.grid, 0.0, u});

    std::size_t n = u.size();
    std::vector<double> k1(n), k2(n), k3(n), k4(n), tmp(n);
    for (long out = 1; out <= n_out; ++out) {
        for (long s = 0; s < per_out; ++s) {
            burgers_fd_rhs(u, dx, k1);
#pragma omp parallel for schedule(static)
            for (std::size_t i = 0; i < n; ++i) tmp[i] = u[i] + 0.5 * dt * k1[i];
            burgers_fd_rhs(tmp, dx, k2);
#pragma omp parallel for schedule(static)
            for (std::size_t i = 0; i < n; ++i) tmp[i] = u[i] + 0.5 * dt * k2[i];
            burgers_fd_rhs(tmp, dx, k3);
#pragma omp parallel for schedule(static)
            for (std::size_t i = 0; i < n; ++i) tmp[i] = u[i] + dt * k3[i];
            burgers_fd_rhs(tmp, dx, k4);
#pragma omp parallel for schedule(static)
            for (std::size_t i = 0; i < n; ++i)
                u[i] += dt / 6.0 * (k1[i] + 2.0 * (k2[i] + k3[i]) + k4[i]);
        }
        double m = 0.0;
        for (double v : u) m = std::max(m, std::abs(v));
        if (!std::isfinite(m) || (limit > 0.0 && m > limit)) {
            char buf[96];
            std::snprintf(buf, sizeof(buf), "burgers_fd: instability at t=%.4f (max|u|=%.3e)",
                          out * cfg.dt_out, m);
            throw std::runtime_error(buf);
        }
        series.snapshots.push_back({u0.grid, out * cfg.dt_out, u});
    }
    series.validate();
    return series;
}

}  // namespace ssv
