#pragma once

#include <complex>
#include <cstdint>

#include "mockform/config.hpp"

namespace mockform {

/// Γ(z) for complex z (Lanczos, reflection for Re z < 1/2).
std::complex<double> gamma_complex(std::complex<double> z);
/// 1/Γ(z), exactly zero at z = 0, −1, −2, ...
std::complex<double> rgamma_complex(std::complex<double> z);

/// Γ(s,x) = ∫_x^∞ e^{−t} t^{s−1} dt.
double inc_gamma_upper(double s, double x);

struct OmegaArgs {
    double y;
    std::complex<double> alpha;
    std::complex<double> beta;
};

/// Ω(y,α,β) = y^β/Γ(β) ∫_0^∞ e^{−yu}(u+1)^{α−1}u^{β−1} du, with Ω(y,α,0) = 1.
/// For Re β ≤ 0 the symmetry Ω(y,α,β) = Ω(y,1−β,1−α) is used.
std::complex<double> omega(const OmegaArgs& args, const EvalConfig& cfg = {});

/// ξ(y;α,β;t) = ∫ e^{−2πitx}(x+iy)^{−α}(x−iy)^{−β} dx via its closed forms.
std::complex<double> xi_kernel(double y, std::complex<double> alpha, std::complex<double> beta, double t,
                               const EvalConfig& cfg = {});

/// ρ_h^{k+1/2}(s,v), the h-th Fourier coefficient of Σ_n (τ+n)^{−k−1/2}|τ+n|^{−2s}
/// without the factor e^{2πihτ}.
std::complex<double> rho(std::int64_t h, int k, double s, double v, const EvalConfig& cfg = {});

/// ρ_h^{k+1/2}(s,v)·e^{−2πhv}, with the exponentials merged so large |h|v does not overflow.
std::complex<double> rho_folded(std::int64_t h, int k, double s, double v, const EvalConfig& cfg = {});

} // namespace mockform
