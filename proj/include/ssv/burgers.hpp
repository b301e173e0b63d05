#pragma once

#include "ssv/field.hpp"

namespace ssv {

enum class BurgersScheme { ColeHopfExact, CentralFd };

struct Burgers1dConfig {
    Grid1D grid{2048, -15.0, 15.0};
    double dt = 0.0;  // 0: auto from the diffusive stability bound
    double t_end = 5.0;
    double dt_out = 0.01;
    BurgersScheme scheme = BurgersScheme::ColeHopfExact;

    /// Effective step: dt if set, else 0.5*dx^2 rounded down so that it
    /// divides the output cadence exactly.
    double effective_dt() const;
    void validate() const;
};

/// Exact solution of  dt(u) + d_x(u^2/2) = d_xx(u)  for the bipolar box
/// initial data, via Cole-Hopf: u = -2 d_x log(phi) with phi a closed-form
/// combination of error functions. t = 0 returns the initial profile.
double solve_burgers_cole_hopf(double x, double t);

/// Cole-Hopf solution tabulated on the reference grid at the output cadence.
FieldSeries cole_hopf_series(const Burgers1dConfig& cfg);

/// Second-order central finite differences, conservative flux form for the
/// advection term, classic RK4 in time, zero Dirichlet ends. Aborts if
/// max|u| grows beyond 10x its initial value.
FieldSeries solve_burgers_fd(const ScalarFieldSnapshot& u0, const Burgers1dConfig& cfg);

/// One FD right-hand side sweep (twin kernel for tests/bench).
void burgers_fd_rhs(const std::vector<double>& u, double dx, std::vector<double>& out,
                    bool parallel = true);

}  // namespace ssv
