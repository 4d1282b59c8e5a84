#include "mockform/special_functions.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "mockform/errors.hpp"
#include "mockform/quadrature.hpp"

namespace mockform {

using cplx = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLanczosG = 7;
constexpr double kLanczos[9] = {0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
                                771.32342877765313,   -176.61502916214059,   12.507343278686905,
                                -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_nonpositive_integer(cplx z)
{
    return z.imag() == 0 && z.real() <= 0 && std::floor(z.real()) == z.real();
}

cplx principal_pow(cplx base, cplx e)
{
    if (base == cplx(0, 0))
        return e == cplx(0, 0) ? cplx(1, 0) : cplx(0, 0);
    return std::exp(e * std::log(base));
}

// i^e with the principal logarithm, log i = iπ/2
cplx i_pow(cplx e)
{
    return std::exp(e * cplx(0, kPi / 2));
}

double cf_upper_gamma(double s, double x)
{
    // modified Lentz for Γ(s,x) e^{x} x^{−s}
    const double tiny = 1e-300;
    double b = x + 1 - s, c = 1 / tiny, d = 1 / b, h = d;
    for (int i = 1; i < 10000; ++i) {
        double an = -i * (i - s);
        b += 2;
        d = an * d + b;
        if (std::abs(d) < tiny)
            d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny)
            c = tiny;
        d = 1 / d;
        double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1) < 1e-16)
            return std::exp(-x + s * std::log(x)) * h;
    }
    throw ConvergenceError("inc_gamma_upper: continued fraction did not converge", std::abs(h));
}

double lower_series(double s, double x)
{
    // γ(s,x) = x^s e^{−x} Σ x^n / (s(s+1)…(s+n)), s > 0
    double term = 1 / s, sum = term;
    for (int n = 1; n < 10000; ++n) {
        term *= x / (s + n);
        sum += term;
        if (std::abs(term) < std::abs(sum) * 1e-17)
            break;
    }
    return std::exp(-x + s * std::log(x)) * sum;
}

double exp_integral_e1(double x)
{
    if (x >= 1)
        return cf_upper_gamma(0, x);
    double sum = 0, term = 1;
    for (int k = 1; k < 200; ++k) {
        term *= -x / k;
        sum -= term / k;
        if (std::abs(term) < 1e-18)
            break;
    }
    return -std::numbers::egamma - std::log(x) + sum;
}

} // namespace

cplx gamma_complex(cplx z)
{
    if (is_nonpositive_integer(z))
        throw DomainError("gamma_complex: pole");
    if (z.real() < 0.5)
        return kPi / (std::sin(kPi * z) * gamma_complex(1.0 - z));
    z -= 1;
    cplx x = kLanczos[0];
    for (int i = 1; i < 9; ++i)
        x += kLanczos[i] / (z + static_cast<double>(i));
    cplx t = z + kLanczosG + 0.5;
    return std::sqrt(2 * kPi) * std::exp((z + 0.5) * std::log(t) - t) * x;
}

cplx rgamma_complex(cplx z)
{
    if (is_nonpositive_integer(z))
        return 0;
    if (z.imag() == 0 && z.real() < 170)
        return 1.0 / std::tgamma(z.real());
    return 1.0 / gamma_complex(z);
}

double inc_gamma_upper(double s, double x)
{
    if (x < 0 || std::isnan(x))
        throw std::invalid_argument("inc_gamma_upper: x must be non-negative");
    if (x == 0) {
        if (s <= 0)
            throw DomainError("inc_gamma_upper: diverges at x = 0 for s <= 0");
        return std::tgamma(s);
    }
    if (s == 0.5)
        return std::sqrt(kPi) * std::erfc(std::sqrt(x));
    if (s == -0.5) {
        if (x < 1.5)
            return 2 * std::exp(-x) / std::sqrt(x) - 2 * std::sqrt(kPi) * std::erfc(std::sqrt(x));
        return cf_upper_gamma(s, x);
    }
    if (x >= 1 && x > s - 1)
        return cf_upper_gamma(s, x);
    if (s > 0)
        return std::tgamma(s) - lower_series(s, x);
    if (s == 0)
        return exp_integral_e1(x);
    // Γ(s,x) = (Γ(s+1,x) − x^s e^{−x}) / s
    return (inc_gamma_upper(s + 1, x) - std::exp(-x + s * std::log(x))) / s;
}

cplx omega(const OmegaArgs& args, const EvalConfig& cfg)
{
    const double y = args.y;
    const cplx alpha = args.alpha, beta = args.beta;
    if (!(y > 0))
        throw DomainError("omega: y must be positive");
    if (beta == cplx(0, 0))
        return 1;
    if (beta.real() <= 0) {
        if ((1.0 - alpha).real() > 0)
            return omega({y, 1.0 - beta, 1.0 - alpha}, cfg);
        throw DomainError("omega: need Re(beta) > 0 or Re(alpha) < 1");
    }

    // with t = yu:  Ω = Γ(β)^{−1} ∫_0^∞ e^{−t}(1+t/y)^{α−1} t^{β−1} dt
    const double b = beta.real();
    const cplx am1 = alpha - 1.0;
    auto body = [&](double t) { return std::exp(-t + am1 * std::log1p(t / y)); };

    QuadratureResult head;
    cplx head_scale = 1;
    if (b < 1) {
        // t = w^{1/b} removes the t^{β−1} singularity
        const double ib = beta.imag() / b;
        head = integrate_gk15(
            [&](double w) {
                if (w <= 0)
                    return cplx(0, 0);
                const double lw = std::log(w);
                return body(std::exp(lw / b)) * std::exp(cplx(0, ib * lw));
            },
            0.0, 1.0, cfg.quad_tol * b, cfg.quad_tol);
        head_scale = 1.0 / b;
    } else {
        head = integrate_gk15([&](double t) { return body(t) * std::exp((beta - 1.0) * std::log(t)); }, 0.0, 1.0,
                              cfg.quad_tol, cfg.quad_tol);
    }
    // t = 1 − log w on [1,∞)
    QuadratureResult tail = integrate_gk15(
        [&](double w) {
            if (w <= 0)
                return cplx(0, 0);
            const double t = 1 - std::log(w);
            return std::exp(am1 * std::log1p(t / y) + (beta - 1.0) * std::log(t)) * std::exp(-1.0);
        },
        0.0, 1.0, cfg.quad_tol, cfg.quad_tol);

    if (!head.converged || !tail.converged) {
        const double achieved = std::abs(head_scale) * head.error + tail.error;
        std::ostringstream msg;
        msg << "omega: quadrature did not converge at y=" << y << " alpha=" << alpha << " beta=" << beta
            << " (error estimate " << achieved << ")";
        throw ConvergenceError(msg.str(), achieved);
    }
    return rgamma_complex(beta) * (head_scale * head.value + tail.value);
}

cplx xi_kernel(double y, cplx alpha, cplx beta, double t, const EvalConfig& cfg)
{
    if (!(y > 0))
        throw DomainError("xi_kernel: y must be positive");
    const cplx phase = i_pow(beta - alpha);
    const double two_pi = 2 * kPi;
    if (t > 0) {
        cplx ra = rgamma_complex(alpha);
        if (ra == cplx(0, 0))
            return 0;
        return phase * principal_pow(two_pi, alpha) * ra * principal_pow(2 * y, -beta)
             * principal_pow(t, alpha - 1.0) * std::exp(-two_pi * y * t) * omega({4 * kPi * y * t, alpha, beta}, cfg);
    }
    if (t < 0) {
        cplx rb = rgamma_complex(beta);
        if (rb == cplx(0, 0))
            return 0;
        const double at = -t;
        return phase * principal_pow(two_pi, beta) * rb * principal_pow(2 * y, -alpha)
             * principal_pow(at, beta - 1.0) * std::exp(-two_pi * y * at) * omega({4 * kPi * y * at, beta, alpha}, cfg);
    }
    cplx r = rgamma_complex(alpha) * rgamma_complex(beta);
    if (r == cplx(0, 0))
        return 0;
    return phase * principal_pow(two_pi, alpha + beta) * r * gamma_complex(alpha + beta - 1.0)
         * principal_pow(4 * kPi * y, 1.0 - alpha - beta);
}

namespace {

// ρ_h multiplied by e^{−2πhv·fold}
cplx rho_impl(std::int64_t h, int k, double s, double v, const EvalConfig& cfg, bool fold)
{
    if (!(v > 0))
        throw DomainError("rho: v must be positive");
    if (s < 0)
        throw DomainError("rho: s must be non-negative");
    const double kh = k + 0.5;
    const double hd = static_cast<double>(h);
    if (h > 0) {
        cplx pre = i_pow(-kh) * std::pow(2 * kPi, kh) * std::pow(kPi, s) / std::tgamma(kh + s)
                 * std::pow(hd, kh - 1 + s) * std::pow(v, -s);
        if (fold)
            pre *= std::exp(-2 * kPi * hd * v);
        return pre * omega({4 * kPi * hd * v, kh + s, s}, cfg);
    }
    if (h == 0) {
        if (s == 0)
            return 0; // 1/Γ(s) vanishes
        return i_pow(-kh) * 2.0 * kPi / std::tgamma(kh + s) / std::tgamma(s) * std::tgamma(k - 0.5 + 2 * s)
             * std::pow(2 * v, -k + 0.5 - 2 * s);
    }
    if (s == 0)
        return 0;
    const double mh = -hd;
    const double ex = fold ? 2 * kPi * hd * v : 4 * kPi * hd * v;
    return std::pow(2.0, -kh) * i_pow(-kh) * std::pow(kPi, s) / std::tgamma(s) * std::pow(mh, s - 1)
         * std::pow(v, -kh - s) * std::exp(ex) * omega({4 * kPi * mh * v, s, kh + s}, cfg);
}

} // namespace

cplx rho(std::int64_t h, int k, double s, double v, const EvalConfig& cfg)
{
    return rho_impl(h, k, s, v, cfg, false);
}

cplx rho_folded(std::int64_t h, int k, double s, double v, const EvalConfig& cfg)
{
    return rho_impl(h, k, s, v, cfg, true);
}

} // namespace mockform
