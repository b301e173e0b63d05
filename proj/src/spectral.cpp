#include "ssv/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstring>
#include <mutex>
#include <stdexcept>

namespace ssv {

namespace {
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}
constexpr double kPi = 3.14159265358979323846264338327950288;
}  // namespace

Fft2d::Fft2d(int n) : n_(n) {
    if (n < 8 || n % 2 != 0) throw std::invalid_argument("Fft2d: n must be even and >= 8");
    real_buf_ = fftw_alloc_real(static_cast<std::size_t>(n) * n);
    auto* spec = fftw_alloc_complex(spectral_size());
    spec_buf_ = spec;
    std::lock_guard<std::mutex> lock(planner_mutex());
    fwd_ = fftw_plan_dft_r2c_2d(n, n, real_buf_, spec, FFTW_ESTIMATE);
    inv_ = fftw_plan_dft_c2r_2d(n, n, spec, real_buf_, FFTW_ESTIMATE);
    if (!fwd_ || !inv_) throw std::runtime_error("Fft2d: plan creation failed");
}

Fft2d::~Fft2d() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(fwd_);
    fftw_destroy_plan(inv_);
    fftw_free(real_buf_);
    fftw_free(static_cast<fftw_complex*>(spec_buf_));
}

void Fft2d::forward(const std::vector<double>& real_in, cvec& spec_out) {
    std::size_t nn = static_cast<std::size_t>(n_) * n_;
    if (real_in.size() != nn) throw std::invalid_argument("Fft2d::forward: size mismatch");
    std::memcpy(real_buf_, real_in.data(), nn * sizeof(double));
    auto* spec = static_cast<fftw_complex*>(spec_buf_);
    fftw_execute_dft_r2c(fwd_, real_buf_, spec);
    spec_out.resize(spectral_size());
    std::memcpy(spec_out.data(), spec, spectral_size() * sizeof(fftw_complex));
}

void Fft2d::inverse(const cvec& spec_in, std::vector<double>& real_out) {
    if (spec_in.size() != spectral_size()) throw std::invalid_argument("Fft2d::inverse: size mismatch");
    auto* spec = static_cast<fftw_complex*>(spec_buf_);
    std::memcpy(spec, spec_in.data(), spectral_size() * sizeof(fftw_complex));
    fftw_execute_dft_c2r(inv_, spec, real_buf_);
    std::size_t nn = static_cast<std::size_t>(n_) * n_;
    real_out.resize(nn);
    double scale = 1.0 / static_cast<double>(nn);
    for (std::size_t i = 0; i < nn; ++i) real_out[i] = real_buf_[i] * scale;
}

void velocity_from_vorticity(const cvec& w_hat, int n, double L, cvec& u1_hat, cvec& u2_hat,
                             bool parallel) {
    int nk = n / 2 + 1;
    u1_hat.resize(w_hat.size());
    u2_hat.resize(w_hat.size());
    double k0 = kPi / L;
#pragma omp parallel for if (parallel) schedule(static)
    for (int j = 0; j < n; ++j) {
        double ky = k0 * signed_mode(j, n);
        for (int i = 0; i < nk; ++i) {
            double kx = k0 * i;
            double k2 = kx * kx + ky * ky;
            std::size_t idx = static_cast<std::size_t>(j) * nk + i;
            if (k2 == 0.0) {
                u1_hat[idx] = 0.0;
                u2_hat[idx] = 0.0;
                continue;
            }
            // u = grad^perp(psi), laplacian(psi) = w:
            //   u1_hat = i*ky*w_hat/k2,  u2_hat = -i*kx*w_hat/k2
            std::complex<double> iw(-w_hat[idx].imag(), w_hat[idx].real());
            u1_hat[idx] = iw * (ky / k2);
            u2_hat[idx] = iw * (-kx / k2);
        }
    }
}

void spectral_gradient(const cvec& w_hat, int n, double L, cvec& dx_hat, cvec& dy_hat,
                       bool parallel) {
    int nk = n / 2 + 1;
    dx_hat.resize(w_hat.size());
    dy_hat.resize(w_hat.size());
    double k0 = kPi / L;
#pragma omp parallel for if (parallel) schedule(static)
    for (int j = 0; j < n; ++j) {
        double ky = k0 * signed_mode(j, n);
        for (int i = 0; i < nk; ++i) {
            double kx = k0 * i;
            std::size_t idx = static_cast<std::size_t>(j) * nk + i;
            std::complex<double> iw(-w_hat[idx].imag(), w_hat[idx].real());
            dx_hat[idx] = iw * kx;
            dy_hat[idx] = iw * ky;
        }
    }
}

void apply_two_thirds_mask(cvec& spec, int n, bool parallel) {
    int nk = n / 2 + 1;
    int cutoff = n / 3;
#pragma omp parallel for if (parallel) schedule(static)
    for (int j = 0; j < n; ++j) {
        int my = std::abs(signed_mode(j, n));
        for (int i = 0; i < nk; ++i) {
            if (i > cutoff || my > cutoff) spec[static_cast<std::size_t>(j) * nk + i] = 0.0;
        }
    }
}

double spectral_divergence_max(const cvec& u1_hat, const cvec& u2_hat, int n, double L) {
    int nk = n / 2 + 1;
    double k0 = kPi / L;
    double worst = 0.0;
    for (int j = 0; j < n; ++j) {
        double ky = k0 * signed_mode(j, n);
        for (int i = 0; i < nk; ++i) {
            double kx = k0 * i;
            std::size_t idx = static_cast<std::size_t>(j) * nk + i;
            std::complex<double> div =
                std::complex<double>(0.0, kx) * u1_hat[idx] + std::complex<double>(0.0, ky) * u2_hat[idx];
            worst = std::max(worst, std::abs(div));
        }
    }
    return worst;
}

}  // namespace ssv
