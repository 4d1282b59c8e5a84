#pragma once

#include <complex>
#include <cstdint>
#include <utility>

#include "mockform/config.hpp"

namespace mockform {

/// λ(a,c): i^{(1−c)/2}(a/c) for c odd, a even; i^{a/2}(c/a) for a odd, c even; else 0.
std::complex<double> zagier_lambda(std::int64_t a, std::int64_t c);

/// γ_c(n) = c^{−1/2} Σ_{a=1}^{2c} λ(a,c) e^{−πina/c}.
std::complex<double> gamma_c(std::int64_t c, std::int64_t n);

/// Υ_m^k(h) = ε_m^{−2k−1} m^{−1/2} Σ_{n mod m} (n/m) e^{2πinh/m}, m odd.
std::complex<double> upsilon(std::int64_t m, std::int64_t k, std::int64_t h);

struct DirichletSeriesValue {
    std::complex<double> value;
    std::int64_t terms_used;
    double tail_bound;
};

/// Truncation of E_n(s) at odd c ≤ M and even c ≤ 2M, with a rigorous tail bound.
DirichletSeriesValue e_n_partial(std::int64_t n, std::complex<double> s, std::int64_t M);

/// (Σ_{c odd ≤ M} γ_c(n)c^{−s}, Σ_{c even ≤ 2M} γ_c(n)(c/2)^{−s}).
std::pair<std::complex<double>, std::complex<double>> e_n_odd_even(std::int64_t n, std::complex<double> s,
                                                                   std::int64_t M);

/// E_n(s) in closed form for real s > 1.
double e_n_closed(std::int64_t n, double s, const EvalConfig& cfg = {});

} // namespace mockform
