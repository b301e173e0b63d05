#pragma once

#include "ssv/rng.hpp"

namespace ssv {

/// Initial vorticity omega0 = A1 exp(-|x-c1|^2/s1^2) + A2 exp(-|x-c2|^2/s2^2).
struct TwoGaussianParams {
    double A1 = 1.0;
    double A2 = 0.6;
    double x1 = -1.5, y1 = 0.5;
    double x2 = 1.0, y2 = -0.8;
    double sigma1 = 1.0;
    double sigma2 = 1.3;
};

struct DiffusionWaveParams {
    double M = 1.0;
};

/// Oseen vortex G(xi) = (1/4pi) exp(-|xi|^2/4); unit mass, fixed point of the
/// rescaled vorticity equation.
double oseen_vortex(Vec2 xi);

/// Analytic gradient and Laplacian of G, for stationarity/orthogonality
/// checks.
Vec2 oseen_vortex_grad(Vec2 xi);
double oseen_vortex_laplacian(Vec2 xi);

/// Tangential velocity of the Oseen vortex:
///   U(xi) = (1/2pi) (xi_perp/|xi|^2) (1 - e^{-|xi|^2/4}),  U(0) = 0.
Vec2 oseen_velocity(Vec2 xi);

/// Diffusion-wave profile of total mass M:
///   (1/sqrt(pi)) * a * e^{-xi^2/4} / (1 - a*Phi(xi/2)),  a = 1 - e^{-M/2},
/// with Phi(z) = (1 + erf z)/2. Normalized so the integral equals M.
/// Reports failure (non-finite) if the denominator degenerates.
double diffusion_wave(double xi, double M);

/// Two-Gaussian initial vorticity field.
double ns_initial_two_gaussians(double x, double y, const TwoGaussianParams& p = {});

/// Bipolar box: 1 on (-1,0), -1 on (0,1), 0 for |x| >= 1 and at the jump set.
double burgers_initial_bipolar_box(double x);

/// Lamb-Oseen vorticity: alpha/(4pi(t+1)) * exp(-|x|^2/(4(t+1))).
double lamb_oseen_exact(Vec2 x, double t, double alpha);

}  // namespace ssv
