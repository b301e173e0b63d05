#include "ssv/profiles.hpp"

#include <cmath>
#include <stdexcept>

namespace ssv {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kInv4Pi = 1.0 / (4.0 * kPi);
constexpr double kInv2Pi = 1.0 / (2.0 * kPi);
}  // namespace

double oseen_vortex(Vec2 xi) {
    double r2 = xi.x * xi.x + xi.y * xi.y;
    return kInv4Pi * std::exp(-0.25 * r2);
}

Vec2 oseen_vortex_grad(Vec2 xi) {
    double g = oseen_vortex(xi);
    return {-0.5 * xi.x * g, -0.5 * xi.y * g};
}

double oseen_vortex_laplacian(Vec2 xi) {
    double r2 = xi.x * xi.x + xi.y * xi.y;
    return (0.25 * r2 - 1.0) * oseen_vortex(xi);
}

Vec2 oseen_velocity(Vec2 xi) {
    double r2 = xi.x * xi.x + xi.y * xi.y;
    if (r2 == 0.0) return {0.0, 0.0};
    // -expm1(-r2/4)/r2 tends to 1/4 smoothly as r -> 0.
    double factor = kInv2Pi * (-std::expm1(-0.25 * r2)) / r2;
    return {-xi.y * factor, xi.x * factor};
}

double diffusion_wave(double xi, double M) {
    double a = -std::expm1(-0.5 * M);  // 1 - e^{-M/2}
    if (a == 0.0) return 0.0;
    double phi = 0.5 * (1.0 + std::erf(0.5 * xi));
    double denom = 1.0 - a * phi;
    if (!(denom > 0.0) || !std::isfinite(denom))
        throw std::domain_error("diffusion_wave: denominator not positive");
    double inv_sqrt_pi = 1.0 / std::sqrt(kPi);
    double value = inv_sqrt_pi * a * std::exp(-0.25 * xi * xi) / denom;
    if (!std::isfinite(value)) throw std::domain_error("diffusion_wave: non-finite value");
    return value;
}

double ns_initial_two_gaussians(double x, double y, const TwoGaussianParams& p) {
    double d1 = (x - p.x1) * (x - p.x1) + (y - p.y1) * (y - p.y1);
    double d2 = (x - p.x2) * (x - p.x2) + (y - p.y2) * (y - p.y2);
    return p.A1 * std::exp(-d1 / (p.sigma1 * p.sigma1)) +
           p.A2 * std::exp(-d2 / (p.sigma2 * p.sigma2));
}

double burgers_initial_bipolar_box(double x) {
    if (x > -1.0 && x < 0.0) return 1.0;
    if (x > 0.0 && x < 1.0) return -1.0;
    return 0.0;
}

double lamb_oseen_exact(Vec2 x, double t, double alpha) {
    if (t < 0.0) throw std::invalid_argument("lamb_oseen_exact: t must be >= 0");
    double tp1 = t + 1.0;
    double r2 = x.x * x.x + x.y * x.y;
    return alpha * kInv4Pi / tp1 * std::exp(-r2 / (4.0 * tp1));
}

}  // namespace ssv
