#pragma once

#include <utility>

#include "ssv/field.hpp"
#include "ssv/spectral.hpp"

namespace ssv {

enum class NsIntegrator { Rk4IntegratingFactor };

struct Ns2dConfig {
    Grid2D grid{256, 20.0};
    double dt = 2.5e-3;
    double t_end = 5.0;
    double dt_out = 0.01;  // snapshot cadence
    bool dealias = true;
    NsIntegrator integrator = NsIntegrator::Rk4IntegratingFactor;
    bool advection = true;  // test hook: off reduces Eq. to the heat equation
    double cfl_limit = 0.5;

    void validate() const;
};

/// Velocity from vorticity by spectral Biot-Savart inversion on the periodic
/// box; the k=0 mode is set to zero (the torus carries no mean flow).
/// Output is discretely divergence-free by construction.
std::pair<ScalarFieldSnapshot, ScalarFieldSnapshot> biot_savart(const ScalarFieldSnapshot& omega);

/// Pseudo-spectral vorticity solve of  dt(w) + u.grad(w) = lap(w)  with
/// integrating-factor RK4 and 2/3-rule dealiasing. Snapshots at the output
/// cadence, starting with the (dealiased) initial field at t = omega0.t = 0.
/// Aborts on CFL violation or non-finite values.
FieldSeries solve_ns2d(const ScalarFieldSnapshot& omega0, const Ns2dConfig& cfg);

/// One advection RHS evaluation in spectral space (exposed for the
/// serial/parallel twin tests and the benchmark).
struct Ns2dKernel {
    explicit Ns2dKernel(const Ns2dConfig& cfg);
    void rhs(const cvec& w_hat, cvec& out, bool parallel, double* umax = nullptr);

    Ns2dConfig cfg;
    Fft2d fft;
    std::vector<double> u1, u2, wx, wy, prod;
    cvec u1_hat, u2_hat, wx_hat, wy_hat;
};

}  // namespace ssv
