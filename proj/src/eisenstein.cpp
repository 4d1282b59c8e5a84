#include "mockform/eisenstein.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mockform/errors.hpp"
#include "mockform/special_functions.hpp"
#include "mockform/zagier_series.hpp"

namespace mockform {

using cplx = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;

cplx i_pow(double e)
{
    return std::polar(1.0, e * kPi / 2);
}

// z^{−w}|z|^{−2s} with the principal branch
cplx weight_power(cplx z, double w, double s)
{
    const double r = std::abs(z);
    return std::polar(std::exp(-(w + 2 * s) * std::log(r)), -w * std::arg(z));
}

cplx pairwise_sum(const std::vector<cplx>& xs, std::size_t lo, std::size_t hi)
{
    if (hi - lo <= 8) {
        cplx acc = 0;
        for (std::size_t i = lo; i < hi; ++i)
            acc += xs[i];
        return acc;
    }
    std::size_t mid = lo + (hi - lo) / 2;
    return pairwise_sum(xs, lo, mid) + pairwise_sum(xs, mid, hi);
}

} // namespace

UpperHalfPoint::UpperHalfPoint(double u_, double v_) : u(u_), v(v_)
{
    if (!(v > 0) || !std::isfinite(u) || !std::isfinite(v))
        throw std::invalid_argument("UpperHalfPoint: need finite u and v > 0");
}

UpperHalfPoint UpperHalfPoint::from_complex(cplx z)
{
    return {z.real(), z.imag()};
}

SL2Matrix::SL2Matrix(std::int64_t a_, std::int64_t b_, std::int64_t c_, std::int64_t d_) : a(a_), b(b_), c(c_), d(d_)
{
    if (a * d - b * c != 1)
        throw std::invalid_argument("SL2Matrix: determinant must be 1");
}

SL2Matrix SL2Matrix::operator*(const SL2Matrix& o) const
{
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

cplx SL2Matrix::apply(cplx z) const
{
    return (static_cast<double>(a) * z + static_cast<double>(b)) / (static_cast<double>(c) * z + static_cast<double>(d));
}

UpperHalfPoint SL2Matrix::apply(const UpperHalfPoint& p) const
{
    return UpperHalfPoint::from_complex(apply(p.tau()));
}

Gamma04Matrix::Gamma04Matrix(std::int64_t a_, std::int64_t b_, std::int64_t c_, std::int64_t d_)
    : SL2Matrix(a_, b_, c_, d_)
{
    if (c % 4 != 0)
        throw std::invalid_argument("Gamma04Matrix: c must be divisible by 4");
}

Gamma04Matrix::Gamma04Matrix(const SL2Matrix& m) : Gamma04Matrix(m.a, m.b, m.c, m.d) {}

Gamma04Matrix Gamma04Matrix::operator*(const Gamma04Matrix& o) const
{
    return Gamma04Matrix(SL2Matrix::operator*(o));
}

cplx j_factor(const SL2Matrix& g, const UpperHalfPoint& tau)
{
    return std::sqrt(static_cast<double>(g.c) * tau.tau() + static_cast<double>(g.d));
}

EighthRoot v_theta_root(const Gamma04Matrix& g)
{
    return EighthRoot::from_sign(kronecker(g.c, g.d)) * epsilon_root(g.d).inverse();
}

cplx v_theta(const Gamma04Matrix& g)
{
    return v_theta_root(g).value();
}

cplx theta_automorphy(const Gamma04Matrix& g, const UpperHalfPoint& tau)
{
    return v_theta(g) * j_factor(g, tau);
}

double j_cocycle_residual(const Gamma04Matrix& g1, const Gamma04Matrix& g2, const UpperHalfPoint& tau)
{
    return std::abs(theta_automorphy(g1 * g2, tau) - theta_automorphy(g1, g2.apply(tau)) * theta_automorphy(g2, tau));
}

int cocycle_sigma(const SL2Matrix& g1, const SL2Matrix& g2, const UpperHalfPoint& tau)
{
    const cplx raw = j_factor(g1, g2.apply(tau)) * j_factor(g2, tau) / j_factor(g1 * g2, tau);
    const int sign = raw.real() >= 0 ? 1 : -1;
    const double dev = std::abs(raw - static_cast<double>(sign));
    if (dev > 1e-10) {
        std::ostringstream msg;
        msg << "cocycle_sigma: value " << raw << " is not +-1";
        throw ConvergenceError(msg.str(), dev);
    }
    return sign;
}

double lemma22_residual(const Gamma04Matrix& g)
{
    if (g.b == 0)
        throw std::invalid_argument("lemma22_residual: needs b != 0");
    const EighthRoot lhs = EighthRoot::from_sign(g.b > 0 ? 1 : -1) * EighthRoot::from_sign(kronecker(-g.b, g.a))
                         * epsilon_root(g.a).inverse();
    return std::abs(lhs.value() - v_theta(g));
}

double lemma23_residual(const Gamma04Matrix& g, const Gamma04Matrix& gp, const UpperHalfPoint& tau)
{
    const SL2Matrix s_inv(0, 1, -1, 0);
    return std::abs(cocycle_sigma(g, gp, tau) - cocycle_sigma(s_inv * g, gp, tau));
}

Gamma04Matrix random_gamma04_word(std::mt19937_64& rng, int max_len)
{
    if (max_len < 1)
        throw std::invalid_argument("random_gamma04_word: max_len must be positive");
    static const Gamma04Matrix letters[4] = {{1, 1, 0, 1}, {1, -1, 0, 1}, {1, 0, 4, 1}, {1, 0, -4, 1}};
    std::uniform_int_distribution<int> len_dist(1, max_len), letter(0, 3);
    Gamma04Matrix g;
    const int len = len_dist(rng);
    for (int i = 0; i < len; ++i)
        g = g * letters[letter(rng)];
    return g;
}

namespace {

cplx lattice_e(int k, double s, cplx tau, const EvalConfig& cfg)
{
    const double w = k + 0.5;
    const std::int64_t M = cfg.lattice_bound;
    const auto nmax = static_cast<std::int64_t>(std::ceil(static_cast<double>(M) * (1 + std::abs(tau))));
    std::vector<cplx> rows;
    std::vector<int> symbol;
    for (std::int64_t m = 1; m <= M; m += 2) {
        symbol.assign(static_cast<std::size_t>(m), 0);
        for (std::int64_t r = 0; r < m; ++r)
            symbol[static_cast<std::size_t>(r)] = kronecker(r, m);
        const cplx mt = static_cast<double>(m) * tau;
        cplx row = 0;
        for (std::int64_t n = -nmax; n <= nmax; ++n) {
            const std::int64_t r = ((n % m) + m) % m;
            const int sym = symbol[static_cast<std::size_t>(r)];
            if (sym == 0)
                continue;
            const cplx t = weight_power(mt + static_cast<double>(n), w, s);
            row += sym > 0 ? t : -t;
        }
        rows.push_back(epsilon_root(m).pow(-2 * k - 1).value() * row);
    }
    return pairwise_sum(rows, 0, rows.size());
}

void check_direct_domain(int k, double s)
{
    if (k < 1)
        throw DomainError("eisenstein: k must be >= 1");
    if (!(k + 0.5 + 2 * s > 2))
        throw DomainError("eisenstein_direct: lattice sum needs k + 1/2 + 2s > 2");
}

} // namespace

cplx eisenstein_direct(EisensteinKind kind, int k, double s, const UpperHalfPoint& tau, const EvalConfig& cfg)
{
    check_direct_domain(k, s);
    const cplx t = tau.tau();
    auto f_value = [&]() {
        const cplx image = -1.0 / (4.0 * t);
        return weight_power(t, k + 0.5, s) * lattice_e(k, s, image, cfg);
    };
    switch (kind) {
    case EisensteinKind::E:
        return lattice_e(k, s, t, cfg);
    case EisensteinKind::F:
        return f_value();
    case EisensteinKind::H: {
        const double zeta = zeta_exact_neg(static_cast<unsigned>(k)).to_double();
        const cplx ik = i_pow(2.0 * k + 1);
        return zeta / std::pow(2.0, 2 * k + 1) * ((1.0 + ik) * lattice_e(k, s, t, cfg) + ik * f_value());
    }
    }
    throw std::logic_error("eisenstein_direct: unknown kind");
}

double eisenstein_direct_tail(int k, double s, const UpperHalfPoint& tau, const EvalConfig& cfg)
{
    check_direct_domain(k, s);
    const double sigma = k + 0.5 + 2 * s;
    const double R = static_cast<double>(cfg.lattice_bound) * tau.v;
    // lattice {mτ+n : m odd} has density 1/(2v)
    return kPi / tau.v * std::pow(R, 2 - sigma) / (sigma - 2);
}

cplx eisenstein_fourier(int k, double s, const UpperHalfPoint& tau, const EvalConfig& cfg, EisensteinKind kind)
{
    if (k < 1)
        throw DomainError("eisenstein_fourier: k must be >= 1");
    if (s < 0)
        throw DomainError("eisenstein_fourier: s must be >= 0");
    const double arg = k + 2 * s;
    const std::int64_t H = cfg.fourier_bound;
    const int sign = (k % 2) ? -1 : 1;
    auto phase = [&](std::int64_t h) { return std::polar(1.0, 2 * kPi * static_cast<double>(h) * tau.u); };

    if (kind == EisensteinKind::H) {
        if (!(arg > 1))
            throw DomainError("eisenstein_fourier: k + 2s must exceed 1 (the k = 1, s = 0 limit is handled by "
                              "the completed form of weight 3/2)");
        const double zeta = zeta_exact_neg(static_cast<unsigned>(k)).to_double();
        cplx total = zeta * std::pow(2.0, 4 * s);
        const cplx pre = (1.0 + i_pow(2.0 * k + 1)) * zeta / std::pow(2.0, 2 * k);
        for (std::int64_t h = -H; h <= H; ++h) {
            const double e = e_n_closed(sign * h, arg, cfg);
            if (e == 0)
                continue;
            total += pre * e * rho_folded(h, k, s, tau.v, cfg) * phase(h);
        }
        return total;
    }

    if (!(arg > 1.5))
        throw DomainError("eisenstein_fourier: partial Dirichlet sums need k + 2s > 3/2");
    cplx total = 0;
    if (kind == EisensteinKind::F)
        total = -i_pow(2.0 * k + 1) * std::pow(2.0, 2 * k + 1 + 4 * s);
    const cplx even_pre = 1.0 + i_pow(2.0 * k - 1);
    for (std::int64_t h = -H; h <= H; ++h) {
        auto [odd, even] = e_n_odd_even(sign * h, arg, cfg.lattice_bound);
        const cplx coeff = kind == EisensteinKind::E ? odd : even_pre * even;
        total += coeff * rho_folded(h, k, s, tau.v, cfg) * phase(h);
    }
    return total;
}

double modularity_residual(const Evaluator& f, int k, double s, const Gamma04Matrix& g, const UpperHalfPoint& tau,
                           const EvalConfig&)
{
    const cplx ctd = static_cast<double>(g.c) * tau.tau() + static_cast<double>(g.d);
    const EighthRoot mult = EighthRoot::from_sign(kronecker(g.c, g.d)) * epsilon_root(g.d).pow(-2 * k - 1);
    // (cτ+d)^{k+1/2}|cτ+d|^{2s} is the reciprocal of weight_power
    const cplx factor = 1.0 / weight_power(ctd, k + 0.5, s);
    return std::abs(f(g.apply(tau)) - mult.value() * factor * f(tau));
}

} // namespace mockform
