#pragma once

#include <complex>
#include <vector>

#include "ssv/field.hpp"

struct fftw_plan_s;

namespace ssv {

using cvec = std::vector<std::complex<double>>;

/// Real-to-complex 2D FFT pair on an n x n periodic box, FFTW-backed.
/// Plans use FFTW_ESTIMATE so planning is deterministic; executing on the
/// owned buffers is not thread-safe, one Fft2d per solve.
class Fft2d {
public:
    explicit Fft2d(int n);
    ~Fft2d();
    Fft2d(const Fft2d&) = delete;
    Fft2d& operator=(const Fft2d&) = delete;

    int n() const { return n_; }
    int nk() const { return n_ / 2 + 1; }
    std::size_t spectral_size() const { return static_cast<std::size_t>(n_) * nk(); }

    /// values (n*n, row-major) -> coefficients (n*(n/2+1)), unnormalized.
    void forward(const std::vector<double>& real_in, cvec& spec_out);

    /// coefficients -> values, including the 1/n^2 normalization.
    /// The input is copied internally (FFTW c2r destroys its input).
    void inverse(const cvec& spec_in, std::vector<double>& real_out);

private:
    int n_;
    fftw_plan_s* fwd_;
    fftw_plan_s* inv_;
    double* real_buf_;
    void* spec_buf_;
};

/// Signed integer mode index along a full axis: j <= n/2 ? j : j-n.
inline int signed_mode(int j, int n) { return j <= n / 2 ? j : j - n; }

/// Spectral helpers for the [-L,L]^2 box (period 2L, k = pi*m/L). All are
/// pointwise loops, OpenMP-parallel when `parallel` is set; a serial pass
/// gives bit-identical output.
void velocity_from_vorticity(const cvec& w_hat, int n, double L, cvec& u1_hat, cvec& u2_hat,
                             bool parallel = true);
void spectral_gradient(const cvec& w_hat, int n, double L, cvec& dx_hat, cvec& dy_hat,
                       bool parallel = true);
void apply_two_thirds_mask(cvec& spec, int n, bool parallel = true);

/// Spectral divergence max-norm of (u1,u2); diagnostic for the Biot-Savart
/// construction.
double spectral_divergence_max(const cvec& u1_hat, const cvec& u2_hat, int n, double L);

}  // namespace ssv
