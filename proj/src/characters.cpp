#include "mockform/characters.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "mockform/arithmetic.hpp"
#include "mockform/errors.hpp"

namespace mockform {

using cplx = std::complex<double>;

CharacterHandle::CharacterHandle(std::int64_t d) : d_(d)
{
    if (!is_fundamental_discriminant(d))
        throw std::invalid_argument("CharacterHandle: " + std::to_string(d) + " is not a fundamental discriminant");
}

int CharacterHandle::operator()(std::int64_t a) const
{
    return kronecker(d_, a);
}

int chi(const CharacterHandle& h, std::int64_t a)
{
    return h(a);
}

cplx gauss_sum_tau(const CharacterHandle& h)
{
    const std::int64_t N = h.modulus();
    cplx acc = 0;
    for (std::int64_t b = 0; b < N; ++b) {
        int c = h(b);
        if (c != 0)
            acc += static_cast<double>(c) * std::polar(1.0, 2 * std::numbers::pi * b / N);
    }
    return acc;
}

namespace {

// few direct terms and many correction terms: the direct part cancels badly for s < 0
constexpr std::int64_t kDirectTerms = 16;
constexpr int kCorrections = 8;
constexpr double kB2j[kCorrections] = {1.0 / 6,       -1.0 / 30, 1.0 / 42, -1.0 / 30,
                                       5.0 / 66,      -691.0 / 2730, 7.0 / 6,  -3617.0 / 510};

cplx expm1_over(cplx t, cplx L)
{
    // (e^{tL} − 1)/t, finite at t = 0
    cplx z = t * L;
    if (std::abs(z) < 1e-2) {
        cplx term = L, sum = 0;
        for (int n = 1; n <= 8; ++n) {
            sum += term;
            term *= z / static_cast<double>(n + 1);
        }
        return sum;
    }
    return (std::exp(z) - 1.0) / t;
}

// Σ_{a=1}^{N} w(a) Σ_{n≥0} (a+nN)^{−s}; the weights sum to zero unless N = 1.
cplx residue_class_series(const CharacterHandle& h, cplx s)
{
    const std::int64_t N = h.modulus();
    const double Nd = static_cast<double>(N);
    const bool principal = h.is_principal();
    // left of the line the direct terms grow, fewer of them keeps the cancellation small
    const std::int64_t direct = s.real() < 0 ? 6 : kDirectTerms;
    cplx total = 0;
    for (std::int64_t a = 1; a <= N; ++a) {
        int w = h(a);
        if (w == 0)
            continue;
        cplx part = 0;
        for (std::int64_t n = direct - 1; n >= 0; --n)
            part += std::exp(-s * std::log(static_cast<double>(a + n * N)));
        const double X = static_cast<double>(a + direct * N);
        const double L = std::log(X);
        if (principal)
            part += std::exp((1.0 - s) * L) / (Nd * (s - 1.0));
        else
            part -= expm1_over(1.0 - s, L) / Nd; // the constant −1/(N(s−1)) cancels across a
        part += 0.5 * std::exp(-s * L);
        cplx poch = s; // (s)_{2j−1}
        double fact = 1, Npow = Nd;
        for (int j = 1; j <= kCorrections; ++j) {
            fact *= (2 * j - 1) * (2 * j);
            part += kB2j[j - 1] / fact * poch * Npow * std::exp((-s - static_cast<double>(2 * j - 1)) * L);
            poch *= (s + static_cast<double>(2 * j - 1)) * (s + static_cast<double>(2 * j));
            Npow *= Nd * Nd;
        }
        total += static_cast<double>(w) * part;
    }
    return total;
}

} // namespace

cplx l_continued(const CharacterHandle& h, cplx s)
{
    if (h.is_principal() && s == cplx(1, 0))
        throw DomainError("l_continued: pole of zeta at s = 1");
    return residue_class_series(h, s);
}

double l_derivative(const CharacterHandle& h, double s)
{
    const double step = 1e-20;
    return residue_class_series(h, cplx(s, step)).imag() / step;
}

double l_numeric(const CharacterHandle& h, double s, const EvalConfig& cfg)
{
    if (h.is_principal()) {
        if (!(s > 1))
            throw DomainError("l_numeric: need s > 1 for the trivial character");
        return zeta_numeric(s, cfg);
    }
    if (!(s > 0))
        throw DomainError("l_numeric: need s > 0");
    return residue_class_series(h, cplx(s, 0)).real();
}

ExactRational generalized_bernoulli(const CharacterHandle& h, unsigned r)
{
    const std::int64_t N = h.modulus();
    // S_m = Σ_{a=1}^{N} χ(a) a^m for m ≤ r
    std::vector<mpz_class> S(r + 1, 0);
    const bool small = std::pow(static_cast<double>(N), r + 1.0) < 4e18;
    if (small) {
        std::vector<std::int64_t> s64(r + 1, 0);
        for (std::int64_t a = 1; a <= N; ++a) {
            int c = h(a);
            if (c == 0)
                continue;
            std::int64_t p = 1;
            for (unsigned m = 0; m <= r; ++m) {
                s64[m] += c * p;
                p *= a;
            }
        }
        for (unsigned m = 0; m <= r; ++m)
            S[m] = mpz_class(static_cast<long>(s64[m]));
    } else {
        for (std::int64_t a = 1; a <= N; ++a) {
            int c = h(a);
            if (c == 0)
                continue;
            mpz_class p = 1;
            for (unsigned m = 0; m <= r; ++m) {
                if (c > 0)
                    S[m] += p;
                else
                    S[m] -= p;
                p *= static_cast<long>(a);
            }
        }
    }
    // B_{r,χ} = Σ_j C(r,j) B_j N^{j−1} S_{r−j}
    ExactRational total(0);
    ExactRational Npow(1, N); // N^{j−1}
    for (unsigned j = 0; j <= r; ++j) {
        total += ExactRational(mpz_class(binomial(r, j) * S[r - j])) * bernoulli(j) * Npow;
        Npow *= ExactRational(N);
    }
    return total;
}

ExactRational l_exact_neg(const CharacterHandle& h, unsigned r)
{
    if (r == 0)
        throw std::invalid_argument("l_exact_neg: r must be >= 1");
    return -generalized_bernoulli(h, r) / ExactRational(static_cast<std::int64_t>(r));
}

double functional_equation_residual(const CharacterHandle& h, double s, const EvalConfig& cfg)
{
    if (h.is_principal())
        throw std::invalid_argument("functional_equation_residual: needs a nontrivial character");
    const double pi = std::numbers::pi;
    const double N = static_cast<double>(h.modulus());
    const bool odd = !h.is_even();
    const cplx tau = gauss_sum_tau(h);
    const cplx omega = tau / ((odd ? cplx(0, 1) : cplx(1, 0)) * std::sqrt(N));

    const double lhs = l_numeric(h, s, cfg);
    const cplx pre = omega * std::pow(N, 0.5 - s) * std::pow(pi, s - 0.5);

    const double s0 = std::round(s);
    cplx rhs;
    if (std::abs(s - s0) < 1e-12 && s0 >= 1) {
        const auto r = static_cast<unsigned>(s0);
        const bool removable = odd ? (r % 2 == 0) : (r % 2 == 1);
        if (removable) {
            // the gamma pole meets the trivial zero of L(1−s); take the limit
            const int n = odd ? static_cast<int>(r / 2) - 1 : static_cast<int>((r - 1) / 2);
            const double denom = odd ? std::tgamma((s0 + 1) / 2) : std::tgamma(s0 / 2);
            const double sign = (n % 2) ? -1.0 : 1.0;
            rhs = pre / denom * sign * 2.0 / std::tgamma(n + 1.0) * l_derivative(h, 1 - s0);
        } else {
            const double G = odd ? std::tgamma(1 - s0 / 2) / std::tgamma((s0 + 1) / 2)
                                 : std::tgamma((1 - s0) / 2) / std::tgamma(s0 / 2);
            rhs = pre * G * l_exact_neg(h, r).to_double();
        }
    } else {
        const double G = odd ? std::tgamma(1 - s / 2) / std::tgamma((s + 1) / 2)
                             : std::tgamma((1 - s) / 2) / std::tgamma(s / 2);
        rhs = pre * G * l_continued(h, cplx(1 - s, 0)).real();
    }
    return std::abs(cplx(lhs, 0) - rhs);
}

} // namespace mockform
