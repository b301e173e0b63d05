#pragma once

#include "ssv/rng.hpp"

namespace ssv {

/// Self-similar coordinates: xi = x/sqrt(t+1), tau = log(t+1).
struct SsvCoord2 {
    Vec2 xi;
    double tau = 0.0;
};
struct SsvCoord1 {
    double xi = 0.0;
    double tau = 0.0;
};

struct PhysCoord2 {
    Vec2 x;
    double t = 0.0;
};
struct PhysCoord1 {
    double x = 0.0;
    double t = 0.0;
};

SsvCoord2 phys_to_ssv(const PhysCoord2& p);
SsvCoord1 phys_to_ssv(const PhysCoord1& p);
PhysCoord2 ssv_to_phys(const SsvCoord2& s);
PhysCoord1 ssv_to_phys(const SsvCoord1& s);

/// Vorticity amplitude maps: Omega = (t+1)*omega, omega = e^{-tau}*Omega.
double ns_amp_phys_to_ssv(double omega, double t);
double ns_amp_ssv_to_phys(double Omega, double tau);

/// Burgers amplitude maps: w = sqrt(t+1)*u, u = e^{-tau/2}*w.
double burgers_amp_phys_to_ssv(double u, double t);
double burgers_amp_ssv_to_phys(double w, double tau);

/// Physical-space prediction from an SSV-head evaluation at (x/sqrt(t+1),
/// log(t+1)): the NS field scales by (t+1)^{-1}, Burgers by (t+1)^{-1/2}.
double map_ssv_prediction_to_physical_ns(double Omega_hat, double t);
double map_ssv_prediction_to_physical_burgers(double w_hat, double t);

}  // namespace ssv
