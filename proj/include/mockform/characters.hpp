#pragma once

#include <complex>
#include <cstdint>

#include "mockform/config.hpp"
#include "mockform/exact_rational.hpp"

namespace mockform {

/// Real character χ_d(a) = (d/a) for a fundamental discriminant d (d = 1 gives the constant 1).
class CharacterHandle {
public:
    explicit CharacterHandle(std::int64_t d);

    std::int64_t discriminant() const { return d_; }
    std::int64_t modulus() const { return d_ < 0 ? -d_ : d_; }
    bool is_even() const { return d_ > 0; }
    bool is_principal() const { return d_ == 1; }
    int operator()(std::int64_t a) const;

private:
    std::int64_t d_;
};

int chi(const CharacterHandle& h, std::int64_t a);

/// Σ_{b mod |d|} χ(b) e^{2πib/|d|} by direct summation.
std::complex<double> gauss_sum_tau(const CharacterHandle& h);

/// L(s, χ_d): s > 1 for d = 1, s > 0 otherwise.
double l_numeric(const CharacterHandle& h, double s, const EvalConfig& cfg = {});

/// L(s, χ_d) continued to any complex s (s ≠ 1 when d = 1), by Euler–Maclaurin
/// on each residue class.
std::complex<double> l_continued(const CharacterHandle& h, std::complex<double> s);
/// d/ds L(s, χ_d) for real s.
double l_derivative(const CharacterHandle& h, double s);

/// L(1−r, χ_d) = −B_{r,χ}/r exactly.
ExactRational l_exact_neg(const CharacterHandle& h, unsigned r);
/// B_{r,χ} via integer power sums of χ.
ExactRational generalized_bernoulli(const CharacterHandle& h, unsigned r);

/// |L(s,χ) − ω N^{1/2−s} π^{s−1/2} G(s) L(1−s,χ)|, G the parity-dependent gamma ratio.
double functional_equation_residual(const CharacterHandle& h, double s, const EvalConfig& cfg = {});

} // namespace mockform
