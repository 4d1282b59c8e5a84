#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "mockform/class_numbers.hpp"
#include "mockform/config.hpp"
#include "mockform/eisenstein.hpp"
#include "mockform/exact_rational.hpp"

namespace mockform {

struct HarmonicFormValue {
    std::complex<double> value;
    std::complex<double> holomorphic_part;    // includes the constant −1/12
    std::complex<double> nonholomorphic_part; // includes 1/(8π√v)
    double truncation_tail;
};

/// Θ(τ) = Σ_n q^{n²}.
std::complex<double> theta(const UpperHalfPoint& tau, const EvalConfig& cfg = {});
/// 2e^{−2πv(N+1)²}/(1−e^{−2πv}), the tail of Θ after |n| ≤ N.
double theta_tail_bound(double v, std::int64_t N);

/// 𝓗(τ) = −1/12 + ΣH(n)qⁿ + (1/4√π)Σ nΓ(−1/2,4πn²v)q^{−n²} + 1/(8π√v), v ≥ 0.05.
/// Throws DomainError naming the required N if the table cannot reach cfg.target_tol.
HarmonicFormValue zagier_H(const UpperHalfPoint& tau, const EvalConfig& cfg, const ClassNumberTable& table);
/// Same, with the table taken from shared_table().
HarmonicFormValue zagier_H(const UpperHalfPoint& tau, const EvalConfig& cfg = {});
/// Smallest N with Σ_{n>N} n e^{−2πvn} ≤ tol (H(n) ≤ n).
std::int64_t zagier_H_terms(double v, double tol);

/// The s → 0 limit of the coefficient of q^h = e^{2πihτ} in H_{3/2}(τ,s).
std::complex<double> alpha_limit(std::int64_t h, double v);

/// ξ_k f = 2iv^k·conj(½(f_u + i f_v)), fourth-order central differences with step fd_step·v.
std::complex<double> xi_shadow_fd(const Evaluator& f, double k_weight, const UpperHalfPoint& tau,
                                  const EvalConfig& cfg = {});

/// coefficient·π^{pi_half_power/2}·q^{exponent}.
struct ShadowTerm {
    std::int64_t exponent;
    ExactRational coefficient;
    int pi_half_power;
};

/// c⁻(0)v^{1−k} + Σ_{n>0} c⁻(−n)Γ(1−k,4πnv)q^{−n}, coefficients in the same π-scaled form.
struct NonholomorphicData {
    ExactRational c0;
    int c0_pi_half_power;
    /// coefficient of c⁻(−n) for n = 1..size; n^{k−1} must be rational where it is non-zero.
    std::vector<ExactRational> coefficients;
    int coefficient_pi_half_power;
};

/// Shadow q-expansion of a weight 2−k form from its nonholomorphic data, 2k odd:
/// (k−1)conj c⁻(0) − (4π)^{k−1}Σ conj c⁻(−n)n^{k−1}qⁿ.
std::vector<ShadowTerm> apply_shadow_formula(int two_k, const NonholomorphicData& data);
/// The nonholomorphic data of 𝓗 up to q^{−max_exponent}.
NonholomorphicData zagier_nonholomorphic_data(std::int64_t max_exponent);
/// apply_shadow_formula on zagier_nonholomorphic_data, exponents 0..max_exponent.
std::vector<ShadowTerm> xi_shadow_analytic(std::int64_t max_exponent = 400);

/// Δ_k f = −v²(f_uu + f_vv) + ikv(f_u + i f_v), five-point stencils with step √fd_step·v.
std::complex<double> laplacian_fd(const Evaluator& f, double k_weight, const UpperHalfPoint& tau,
                                  const EvalConfig& cfg = {});

/// E₂*(τ) = 1 − 24Σσ₁(n)qⁿ − 3/(πv).
std::complex<double> e2_star(const UpperHalfPoint& tau, const EvalConfig& cfg = {});

struct LimitEstimate {
    std::complex<double> value;
    std::complex<double> spread; // difference of the last two extrapolants
    std::vector<std::complex<double>> samples;
};

/// Polynomial extrapolation to s = 0 of −(1−i)/48·E_{−h}(1+2s)ρ_h(s,v), h ≠ 0.
/// Throws ConvergenceError when the last two extrapolants disagree.
LimitEstimate s_limit_check(std::int64_t h, double v, const std::vector<double>& s_samples,
                            const EvalConfig& cfg = {});

} // namespace mockform
