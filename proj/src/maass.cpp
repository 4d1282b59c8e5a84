#include "mockform/maass.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "mockform/cache.hpp"
#include "mockform/errors.hpp"
#include "mockform/special_functions.hpp"
#include "mockform/zagier_series.hpp"

namespace mockform {

using cplx = std::complex<double>;

namespace {

constexpr double pi = std::numbers::pi;
// the series below are cheap, so they are always run well past double precision
constexpr double fine_tol = 1e-18;

// e^{2πi m τ} for integer m, phase reduced before scaling
cplx q_power(std::int64_t m, const UpperHalfPoint& tau)
{
    double frac = std::fmod(static_cast<double>(m) * tau.u, 1.0);
    return std::polar(std::exp(-2 * pi * static_cast<double>(m) * tau.v), 2 * pi * frac);
}

double holomorphic_tail(double v, std::int64_t N)
{
    // Σ_{n>N} n x^n
    const double x = std::exp(-2 * pi * v);
    const double n1 = static_cast<double>(N + 1);
    return std::pow(x, n1) * (n1 - static_cast<double>(N) * x) / ((1 - x) * (1 - x));
}

// n/(4√π)·x^{−3/2}e^{−x/2}, x = 4πn²v, bounds |nΓ(−1/2,x)q^{−n²}|/(4√π)
double nonholomorphic_term_bound(std::int64_t n, double v)
{
    const double x = 4 * pi * static_cast<double>(n * n) * v;
    return static_cast<double>(n) / (4 * std::sqrt(pi)) * std::pow(x, -1.5) * std::exp(-x / 2);
}

cplx first_derivative(const Evaluator& f, const UpperHalfPoint& tau, cplx dir, double h)
{
    auto at = [&](double t) { return f(UpperHalfPoint::from_complex(tau.tau() + t * dir)); };
    return (at(-2 * h) - 8.0 * at(-h) + 8.0 * at(h) - at(2 * h)) / (12 * h);
}

cplx second_derivative(const Evaluator& f, const UpperHalfPoint& tau, cplx dir, double h, cplx f0)
{
    auto at = [&](double t) { return f(UpperHalfPoint::from_complex(tau.tau() + t * dir)); };
    return (-at(2 * h) + 16.0 * at(h) - 30.0 * f0 + 16.0 * at(-h) - at(-2 * h)) / (12 * h * h);
}

} // namespace

double theta_tail_bound(double v, std::int64_t N)
{
    const double n1 = static_cast<double>(N + 1);
    return 2 * std::exp(-2 * pi * v * n1 * n1) / (1 - std::exp(-2 * pi * v));
}

cplx theta(const UpperHalfPoint& tau, const EvalConfig&)
{
    std::int64_t N = 0;
    while (theta_tail_bound(tau.v, N) > fine_tol)
        ++N;
    cplx acc = 0;
    for (std::int64_t n = N; n >= 1; --n)
        acc += q_power(n * n, tau);
    return 1.0 + 2.0 * acc;
}

std::int64_t zagier_H_terms(double v, double tol)
{
    if (!(v > 0) || !(tol > 0))
        throw std::invalid_argument("zagier_H_terms: v and tol must be positive");
    std::int64_t N = 0;
    while (holomorphic_tail(v, N) > tol)
        N = N < 16 ? N + 1 : N + N / 8;
    return N;
}

HarmonicFormValue zagier_H(const UpperHalfPoint& tau, const EvalConfig& cfg, const ClassNumberTable& table)
{
    if (tau.v < 0.05)
        throw DomainError("zagier_H: v = " + std::to_string(tau.v) + " is below the truncation floor 0.05");
    const std::int64_t needed = zagier_H_terms(tau.v, cfg.target_tol);
    if (table.max_n() < needed)
        throw DomainError("zagier_H: class number table stops at " + std::to_string(table.max_n())
                          + ", need N >= " + std::to_string(needed));
    const std::int64_t N = std::min(table.max_n(), std::max(needed, zagier_H_terms(tau.v, fine_tol)));

    cplx hol = 0;
    for (std::int64_t n = N; n >= 1; --n) {
        const double h = table.value(n);
        if (h != 0)
            hol += h * q_power(n, tau);
    }
    hol += -1.0 / 12;

    std::int64_t M = 1;
    while (nonholomorphic_term_bound(M, tau.v) > fine_tol * 1e-3)
        ++M;
    cplx nonhol = 0;
    for (std::int64_t n = M; n >= 1; --n) {
        const double x = 4 * pi * static_cast<double>(n * n) * tau.v;
        const double mag = static_cast<double>(n) / (4 * std::sqrt(pi)) * inc_gamma_upper(-0.5, x) * std::exp(x / 2);
        const double frac = std::fmod(static_cast<double>(n * n) * tau.u, 1.0);
        nonhol += std::polar(mag, -2 * pi * frac);
    }
    nonhol += 1 / (8 * pi * std::sqrt(tau.v));

    double nonhol_tail = 0;
    for (std::int64_t n = M + 1; n <= M + 64; ++n)
        nonhol_tail += nonholomorphic_term_bound(n, tau.v);

    return {hol + nonhol, hol, nonhol, holomorphic_tail(tau.v, N) + nonhol_tail};
}

HarmonicFormValue zagier_H(const UpperHalfPoint& tau, const EvalConfig& cfg)
{
    if (tau.v < 0.05)
        throw DomainError("zagier_H: v = " + std::to_string(tau.v) + " is below the truncation floor 0.05");
    auto table = shared_table(zagier_H_terms(tau.v, fine_tol), cfg);
    return zagier_H(tau, cfg, *table);
}

cplx alpha_limit(std::int64_t h, double v)
{
    if (!(v > 0))
        throw std::invalid_argument("alpha_limit: v must be positive");
    if (h == 0)
        return -1.0 / 12 + 1 / (8 * pi * std::sqrt(v));
    if (h > 0)
        return hurwitz(h).to_double();
    const auto f = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(-h))));
    if (f * f != -h)
        return 0.0;
    const double fd = static_cast<double>(f);
    return fd / (4 * std::sqrt(pi)) * inc_gamma_upper(-0.5, 4 * pi * fd * fd * v);
}

cplx xi_shadow_fd(const Evaluator& f, double k_weight, const UpperHalfPoint& tau, const EvalConfig& cfg)
{
    const double h = cfg.fd_step * tau.v;
    const cplx fu = first_derivative(f, tau, 1.0, h);
    const cplx fv = first_derivative(f, tau, cplx(0, 1), h);
    const cplx dbar = 0.5 * (fu + cplx(0, 1) * fv);
    return cplx(0, 2) * std::pow(tau.v, k_weight) * std::conj(dbar);
}

cplx laplacian_fd(const Evaluator& f, double k_weight, const UpperHalfPoint& tau, const EvalConfig& cfg)
{
    const double h = std::sqrt(cfg.fd_step) * tau.v;
    const cplx f0 = f(tau);
    const cplx fu = first_derivative(f, tau, 1.0, h);
    const cplx fv = first_derivative(f, tau, cplx(0, 1), h);
    const cplx fuu = second_derivative(f, tau, 1.0, h, f0);
    const cplx fvv = second_derivative(f, tau, cplx(0, 1), h, f0);
    const double v = tau.v;
    return -v * v * (fuu + fvv) + cplx(0, k_weight * v) * (fu + cplx(0, 1) * fv);
}

std::vector<ShadowTerm> apply_shadow_formula(int two_k, const NonholomorphicData& data)
{
    if (two_k % 2 == 0)
        throw std::invalid_argument("apply_shadow_formula: only half-integral k is supported");
    // k − 1 = m/2 with m odd; (4π)^{m/2} = 2^m π^{m/2}
    const int m = two_k - 2;
    auto pow_rational = [](std::int64_t base, int e) {
        ExactRational r(1);
        for (int i = 0; i < std::abs(e); ++i)
            r = r * ExactRational(base);
        return e < 0 ? ExactRational(1) / r : r;
    };
    std::vector<ShadowTerm> out;
    out.push_back({0, ExactRational(m, 2) * data.c0, data.c0_pi_half_power});
    const int pi_power = m + data.coefficient_pi_half_power;
    for (std::size_t i = 0; i < data.coefficients.size(); ++i) {
        const auto n = static_cast<std::int64_t>(i + 1);
        const ExactRational& c = data.coefficients[i];
        if (c.is_zero()) {
            out.push_back({n, ExactRational(0), pi_power});
            continue;
        }
        const auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(n))));
        if (r * r != n)
            throw std::invalid_argument("apply_shadow_formula: n^{k-1} is irrational at n = " + std::to_string(n));
        out.push_back({n, ExactRational(-1) * pow_rational(2 * r, m) * c, pi_power});
    }
    return out;
}

NonholomorphicData zagier_nonholomorphic_data(std::int64_t max_exponent)
{
    if (max_exponent < 0)
        throw std::invalid_argument("zagier_nonholomorphic_data: max_exponent must be non-negative");
    // c⁻(0) = 1/(8π), c⁻(−n²) = n/(4√π)
    NonholomorphicData d{ExactRational(1, 8), -2, {}, -1};
    d.coefficients.assign(static_cast<std::size_t>(max_exponent), ExactRational(0));
    for (std::int64_t r = 1; r * r <= max_exponent; ++r)
        d.coefficients[static_cast<std::size_t>(r * r - 1)] = ExactRational(r, 4);
    return d;
}

std::vector<ShadowTerm> xi_shadow_analytic(std::int64_t max_exponent)
{
    return apply_shadow_formula(1, zagier_nonholomorphic_data(max_exponent));
}

cplx e2_star(const UpperHalfPoint& tau, const EvalConfig&)
{
    // σ₁(n) ≤ n², and n²xⁿ is decreasing once (n+1)²x < n²
    const double x = std::exp(-2 * pi * tau.v);
    std::int64_t N = 1;
    for (;; ++N) {
        const double n1 = static_cast<double>(N + 1);
        const double ratio = x * ((n1 + 1) / n1) * ((n1 + 1) / n1);
        if (ratio < 1 && 24 * n1 * n1 * std::pow(x, n1) / (1 - ratio) < fine_tol)
            break;
    }
    std::vector<double> sigma1(static_cast<std::size_t>(N + 1), 0.0);
    for (std::int64_t d = 1; d <= N; ++d)
        for (std::int64_t n = d; n <= N; n += d)
            sigma1[static_cast<std::size_t>(n)] += static_cast<double>(d);
    cplx acc = 0;
    for (std::int64_t n = N; n >= 1; --n)
        acc += sigma1[static_cast<std::size_t>(n)] * q_power(n, tau);
    return 1.0 - 24.0 * acc - 3 / (pi * tau.v);
}

LimitEstimate s_limit_check(std::int64_t h, double v, const std::vector<double>& s_samples, const EvalConfig& cfg)
{
    if (h == 0)
        throw std::invalid_argument("s_limit_check: h = 0 is handled analytically by alpha_limit");
    if (s_samples.size() < 2)
        throw std::invalid_argument("s_limit_check: need at least two samples");
    for (std::size_t i = 0; i < s_samples.size(); ++i) {
        if (!(s_samples[i] > 0 && s_samples[i] <= 0.01))
            throw std::invalid_argument("s_limit_check: samples must lie in (0, 0.01]");
        for (std::size_t j = 0; j < i; ++j)
            if (s_samples[i] == s_samples[j])
                throw std::invalid_argument("s_limit_check: samples must be distinct");
    }

    LimitEstimate est;
    const cplx pref = -cplx(1, -1) / 48.0;
    for (double s : s_samples)
        est.samples.push_back(pref * e_n_closed(-h, 1 + 2 * s, cfg) * rho(h, 1, s, v, cfg));

    // Neville's scheme at s = 0; p[i] ends up using samples i..n−1
    const std::size_t n = s_samples.size();
    std::vector<cplx> p = est.samples;
    cplx previous = p[n - 2];
    for (std::size_t m = 1; m < n; ++m) {
        for (std::size_t i = 0; i + m < n; ++i) {
            const double xi = s_samples[i], xj = s_samples[i + m];
            p[i] = (xj * p[i] - xi * p[i + 1]) / (xj - xi);
        }
        if (m == n - 2)
            previous = p[0];
    }
    est.value = p[0];
    est.spread = est.value - previous;
    const double allowed = 1e-4 * std::max(1.0, std::abs(est.value));
    if (!(std::abs(est.spread) <= allowed))
        throw ConvergenceError("s_limit_check: extrapolation to s = 0 unstable for h = " + std::to_string(h)
                                   + ", last two extrapolants differ by " + std::to_string(std::abs(est.spread)),
                               std::abs(est.spread));
    return est;
}

} // namespace mockform
