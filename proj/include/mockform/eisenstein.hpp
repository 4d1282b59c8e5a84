#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <random>

#include "mockform/arithmetic.hpp"
#include "mockform/config.hpp"

namespace mockform {

struct UpperHalfPoint {
    double u = 0;
    double v = 1;

    UpperHalfPoint() = default;
    UpperHalfPoint(double u_, double v_);
    static UpperHalfPoint from_complex(std::complex<double> z);
    std::complex<double> tau() const { return {u, v}; }
};

/// Integer matrix (a b; c d) of determinant 1.
struct SL2Matrix {
    std::int64_t a = 1, b = 0, c = 0, d = 1;

    SL2Matrix() = default;
    SL2Matrix(std::int64_t a_, std::int64_t b_, std::int64_t c_, std::int64_t d_);
    SL2Matrix operator*(const SL2Matrix& o) const;
    SL2Matrix inverse() const { return {d, -b, -c, a}; }
    std::complex<double> apply(std::complex<double> z) const;
    UpperHalfPoint apply(const UpperHalfPoint& p) const;
    bool operator==(const SL2Matrix&) const = default;
};

/// Element of Γ₀(4): determinant 1 and 4 | c.
struct Gamma04Matrix : SL2Matrix {
    Gamma04Matrix() = default;
    Gamma04Matrix(std::int64_t a_, std::int64_t b_, std::int64_t c_, std::int64_t d_);
    explicit Gamma04Matrix(const SL2Matrix& m);
    Gamma04Matrix operator*(const Gamma04Matrix& o) const;
    Gamma04Matrix inverse() const { return Gamma04Matrix(SL2Matrix::inverse()); }
};

/// √(cτ+d), principal branch.
std::complex<double> j_factor(const SL2Matrix& g, const UpperHalfPoint& tau);
/// (c/d)ε_d^{−1} as an exact eighth root of unity.
EighthRoot v_theta_root(const Gamma04Matrix& g);
std::complex<double> v_theta(const Gamma04Matrix& g);
/// J(γ,τ) = v_θ(γ) j(γ,τ).
std::complex<double> theta_automorphy(const Gamma04Matrix& g, const UpperHalfPoint& tau);
/// |J(γ₁γ₂,τ) − J(γ₁,γ₂τ)J(γ₂,τ)|.
double j_cocycle_residual(const Gamma04Matrix& g1, const Gamma04Matrix& g2, const UpperHalfPoint& tau);

/// j(g1, g2τ)·j(g2, τ)/j(g1g2, τ), rounded to ±1.
/// Throws ConvergenceError if the raw value is farther than 1e−10 from ±1.
int cocycle_sigma(const SL2Matrix& g1, const SL2Matrix& g2, const UpperHalfPoint& tau);

/// |sign(b)(−b/a)ε_a^{−1} − (c/d)ε_d^{−1}|, evaluated exactly (so 0 or at least 0.76).
double lemma22_residual(const Gamma04Matrix& g);
/// |Σ(γ,γ′) − Σ(S^{−1}γ,γ′)| with S = (0 −1; 1 0).
double lemma23_residual(const Gamma04Matrix& g, const Gamma04Matrix& gp, const UpperHalfPoint& tau);

/// Random product of 1..max_len letters from (1 1; 0 1), (1 0; 4 1) and their inverses.
Gamma04Matrix random_gamma04_word(std::mt19937_64& rng, int max_len = 12);

enum class EisensteinKind { E, F, H };

/// Truncated lattice sum: odd m ≤ M, |n| ≤ ceil(M(1+|τ|)), gcd(m,n) = 1.
/// F(τ) = τ^{−k−1/2}|τ|^{−2s}E(−1/(4τ)); H = ζ(1−2k)2^{−2k−1}[(1+i^{2k+1})E + i^{2k+1}F].
std::complex<double> eisenstein_direct(EisensteinKind kind, int k, double s, const UpperHalfPoint& tau,
                                       const EvalConfig& cfg = {});
/// Rough size of the dropped lattice terms of eisenstein_direct (integral comparison).
double eisenstein_direct_tail(int k, double s, const UpperHalfPoint& tau, const EvalConfig& cfg = {});

/// Fourier expansion truncated at |h| ≤ H. For H the coefficients use closed forms of E_n;
/// for E and F the odd/even Dirichlet series are summed to c ≤ 2M.
std::complex<double> eisenstein_fourier(int k, double s, const UpperHalfPoint& tau, const EvalConfig& cfg = {},
                                        EisensteinKind kind = EisensteinKind::H);

using Evaluator = std::function<std::complex<double>(const UpperHalfPoint&)>;

/// |f(gτ) − (c/d)ε_d^{−2k−1}(cτ+d)^{k+1/2}|cτ+d|^{2s} f(τ)|.
double modularity_residual(const Evaluator& f, int k, double s, const Gamma04Matrix& g, const UpperHalfPoint& tau,
                           const EvalConfig& cfg = {});

} // namespace mockform
