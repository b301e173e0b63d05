#include "ssv/transforms.hpp"

#include <cmath>
#include <stdexcept>

namespace ssv {

namespace {
void require_nonneg(double v, const char* what) {
    if (v < 0.0) throw std::invalid_argument(std::string(what) + " must be >= 0");
}
}  // namespace

SsvCoord2 phys_to_ssv(const PhysCoord2& p) {
    require_nonneg(p.t, "phys_to_ssv: t");
    double s = std::sqrt(p.t + 1.0);
    return {{p.x.x / s, p.x.y / s}, std::log1p(p.t)};
}

SsvCoord1 phys_to_ssv(const PhysCoord1& p) {
    require_nonneg(p.t, "phys_to_ssv: t");
    return {p.x / std::sqrt(p.t + 1.0), std::log1p(p.t)};
}

PhysCoord2 ssv_to_phys(const SsvCoord2& c) {
    require_nonneg(c.tau, "ssv_to_phys: tau");
    double t = std::expm1(c.tau);
    double s = std::sqrt(t + 1.0);
    return {{s * c.xi.x, s * c.xi.y}, t};
}

PhysCoord1 ssv_to_phys(const SsvCoord1& c) {
    require_nonneg(c.tau, "ssv_to_phys: tau");
    double t = std::expm1(c.tau);
    return {std::sqrt(t + 1.0) * c.xi, t};
}

double ns_amp_phys_to_ssv(double omega, double t) {
    require_nonneg(t, "ns_amp_phys_to_ssv: t");
    return (t + 1.0) * omega;
}

double ns_amp_ssv_to_phys(double Omega, double tau) {
    require_nonneg(tau, "ns_amp_ssv_to_phys: tau");
    return std::exp(-tau) * Omega;
}

double burgers_amp_phys_to_ssv(double u, double t) {
    require_nonneg(t, "burgers_amp_phys_to_ssv: t");
    return std::sqrt(t + 1.0) * u;
}

double burgers_amp_ssv_to_phys(double w, double tau) {
    require_nonneg(tau, "burgers_amp_ssv_to_phys: tau");
    return std::exp(-0.5 * tau) * w;
}

double map_ssv_prediction_to_physical_ns(double Omega_hat, double t) {
    require_nonneg(t, "map_ssv_prediction_to_physical_ns: t");
    return Omega_hat / (t + 1.0);
}

double map_ssv_prediction_to_physical_burgers(double w_hat, double t) {
    require_nonneg(t, "map_ssv_prediction_to_physical_burgers: t");
    return w_hat / std::sqrt(t + 1.0);
}

}  // namespace ssv
