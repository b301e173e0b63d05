#include "ssv/ns2d.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace ssv {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
}

void Ns2dConfig::validate() const {
    if (grid.n < 8 || grid.n % 2 != 0)
        throw std::invalid_argument("ns2d: grid n must be even and >= 8");
    if (!(grid.half_width > 0.0)) throw std::invalid_argument("ns2d: box half-width must be > 0");
    if (!(dt > 0.0)) throw std::invalid_argument("ns2d: dt must be > 0");
    if (!(t_end > 0.0)) throw std::invalid_argument("ns2d: t_end must be > 0");
    if (!(dt_out >= dt)) throw std::invalid_argument("ns2d: output cadence below dt");
}

std::pair<ScalarFieldSnapshot, ScalarFieldSnapshot> biot_savart(const ScalarFieldSnapshot& omega) {
    omega.validate();
    if (!std::holds_alternative<Grid2D>(omega.grid))
        throw std::invalid_argument("biot_savart: 2D snapshot required");
    const auto& g = std::get<Grid2D>(omega.grid);
    Fft2d fft(g.n);
    cvec w_hat, u1_hat, u2_hat;
    fft.forward(omega.values, w_hat);
    velocity_from_vorticity(w_hat, g.n, g.half_width, u1_hat, u2_hat);
    ScalarFieldSnapshot u1{omega.grid, omega.t, {}}, u2{omega.grid, omega.t, {}};
    fft.inverse(u1_hat, u1.values);
    fft.inverse(u2_hat, u2.values);
    return {std::move(u1), std::move(u2)};
}

Ns2dKernel::Ns2dKernel(const Ns2dConfig& c) : cfg(c), fft(c.grid.n) {
    std::size_t nn = static_cast<std::size_t>(c.grid.n) * c.grid.n;
    u1.resize(nn);
    u2.resize(nn);
    wx.resize(nn);
    wy.resize(nn);
    prod.resize(nn);
}

// N(w_hat) = -FFT[u . grad(w)], dealiased. Also reports max|u| when asked.
void Ns2dKernel::rhs(const cvec& w_hat, cvec& out, bool parallel, double* umax) {
    int n = cfg.grid.n;
    double L = cfg.grid.half_width;
    if (!cfg.advection) {
        out.assign(w_hat.size(), std::complex<double>(0.0, 0.0));
        if (umax) *umax = 0.0;
        return;
    }
    velocity_from_vorticity(w_hat, n, L, u1_hat, u2_hat, parallel);
    spectral_gradient(w_hat, n, L, wx_hat, wy_hat, parallel);
    fft.inverse(u1_hat, u1);
    fft.inverse(u2_hat, u2);
    fft.inverse(wx_hat, wx);
    fft.inverse(wy_hat, wy);
    std::size_t nn = u1.size();
    if (umax) {
        double m = 0.0;
        // max reduction is order-independent, safe to parallelize
#pragma omp parallel for if (parallel) schedule(static) reduction(max : m)
        for (std::size_t i = 0; i < nn; ++i) {
            double s = u1[i] * u1[i] + u2[i] * u2[i];
            if (s > m) m = s;
        }
        *umax = std::sqrt(m);
    }
#pragma omp parallel for if (parallel) schedule(static)
    for (std::size_t i = 0; i < nn; ++i) prod[i] = -(u1[i] * wx[i] + u2[i] * wy[i]);
    fft.forward(prod, out);
    if (cfg.dealias) apply_two_thirds_mask(out, n, parallel);
}

FieldSeries solve_ns2d(const ScalarFieldSnapshot& omega0, const Ns2dConfig& cfg) {
    cfg.validate();
    omega0.validate();
    if (!std::holds_alternative<Grid2D>(omega0.grid) || std::get<Grid2D>(omega0.grid) != cfg.grid)
        throw std::invalid_argument("ns2d: initial snapshot grid does not match config");
    if (omega0.t != 0.0) throw std::invalid_argument("ns2d: initial snapshot must be at t = 0");

    int n = cfg.grid.n;
    double L = cfg.grid.half_width;
    std::size_t nn = static_cast<std::size_t>(n) * n;
    int nk = n / 2 + 1;

    Ns2dKernel kern(cfg);
    cvec w_hat;
    kern.fft.forward(omega0.values, w_hat);
    if (cfg.dealias) apply_two_thirds_mask(w_hat, n);

    // Exact diffusion factors for a half and a full step.
    cvec e_half(w_hat.size()), e_full(w_hat.size());
    double k0 = kPi / L;
    for (int j = 0; j < n; ++j) {
        double ky = k0 * signed_mode(j, n);
        for (int i = 0; i < nk; ++i) {
            double kx = k0 * i;
            double k2 = kx * kx + ky * ky;
            e_half[static_cast<std::size_t>(j) * nk + i] = std::exp(-k2 * cfg.dt / 2.0);
            e_full[static_cast<std::size_t>(j) * nk + i] = std::exp(-k2 * cfg.dt);
        }
    }

    // CFL bound documented for the config: dt * max|u| <= cfl_limit * dx.
    double dx = cfg.grid.dx();
    auto check_cfl = [&](double umax, long step) {
        if (umax * cfg.dt > cfg.cfl_limit * dx) {
            char buf[160];
            std::snprintf(buf, sizeof(buf),
                          "ns2d: CFL violation at step %ld (max|u|=%.3e, dt=%.3e, dx=%.3e)", step,
                          umax, cfg.dt, dx);
            throw std::runtime_error(buf);
        }
    };

    long steps_per_out = std::lround(cfg.dt_out / cfg.dt);
    if (std::abs(steps_per_out * cfg.dt - cfg.dt_out) > 1e-9 * cfg.dt_out)
        throw std::invalid_argument("ns2d: dt must divide the output cadence");
    long n_out = std::lround(cfg.t_end / cfg.dt_out);
    long total_steps = steps_per_out * n_out;

    FieldSeries series;
    series.snapshots.reserve(static_cast<std::size_t>(n_out) + 1);
    auto emit = [&](double t) {
        ScalarFieldSnapshot s{omega0.grid, t, {}};
        kern.fft.inverse(w_hat, s.values);
        series.snapshots.push_back(std::move(s));
    };
    emit(0.0);

    cvec a(w_hat.size()), b(w_hat.size()), c(w_hat.size()), d(w_hat.size()), tmp(w_hat.size());
    std::size_t ns = w_hat.size();

    for (long step = 0; step < total_steps; ++step) {
        double umax = 0.0;
        kern.rhs(w_hat, a, true, &umax);
        check_cfl(umax, step);

#pragma omp parallel for schedule(static)
        for (std::size_t i = 0; i < ns; ++i) tmp[i] = e_half[i] * (w_hat[i] + 0.5 * cfg.dt * a[i]);
        kern.rhs(tmp, b, true);

#pragma omp parallel for schedule(static)
        for (std::size_t i = 0; i < ns; ++i) tmp[i] = e_half[i] * w_hat[i] + 0.5 * cfg.dt * b[i];
        kern.rhs(tmp, c, true);

#pragma omp parallel for schedule(static)
        for (std::size_t i = 0; i < ns; ++i)
            tmp[i] = e_full[i] * w_hat[i] + cfg.dt * e_half[i] * c[i];
        kern.rhs(tmp, d, true);

#pragma omp parallel for schedule(static)
        for (std::size_t i = 0; i < ns; ++i) {
            w_hat[i] = e_full[i] * w_hat[i] +
                       cfg.dt / 6.0 *
                           (e_full[i] * a[i] + 2.0 * e_half[i] * (b[i] + c[i]) + d[i]);
        }

        if (!std::isfinite(w_hat[0].real()) || !std::isfinite(w_hat[1].real())) {
            char buf[96];
            std::snprintf(buf, sizeof(buf), "ns2d: non-finite state at step %ld", step + 1);
            throw std::runtime_error(buf);
        }
        if ((step + 1) % steps_per_out == 0) emit(((step + 1) / steps_per_out) * cfg.dt_out);
    }
    series.validate();
    return series;
}

}  // namespace ssv
