#include "mockform/zagier_series.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "mockform/arithmetic.hpp"
#include "mockform/characters.hpp"
#include "mockform/class_numbers.hpp"
#include "mockform/errors.hpp"

namespace mockform {

using cplx = std::complex<double>;

namespace {

std::int64_t posmod(std::int64_t a, std::int64_t m)
{
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

// λ(a,c) as (sign, eighth-root exponent); sign 0 when λ vanishes
std::pair<int, int> lambda_parts(std::int64_t a, std::int64_t c)
{
    if (c % 2 != 0 && a % 2 == 0)
        return {kronecker(a, c), static_cast<int>(posmod(1 - c, 8))};
    if (a % 2 != 0 && c % 2 == 0)
        return {kronecker(c, a), static_cast<int>(posmod(a, 8))};
    return {0, 0};
}

} // namespace

cplx zagier_lambda(std::int64_t a, std::int64_t c)
{
    if (a < 1 || c < 1)
        throw std::invalid_argument("zagier_lambda: a, c must be positive");
    auto [sgn, e] = lambda_parts(a, c);
    return static_cast<double>(sgn) * EighthRoot{e}.value();
}

cplx gamma_c(std::int64_t c, std::int64_t n)
{
    if (c < 1)
        throw std::invalid_argument("gamma_c: c must be positive");
    const std::int64_t two_c = 2 * c, eight_c = 8 * c;
    const std::int64_t nr = posmod(n, two_c);
    cplx acc = 0;
    for (std::int64_t a = (c % 2 ? 2 : 1); a <= two_c; a += 2) {
        auto [sgn, e] = lambda_parts(a, c);
        if (sgn == 0)
            continue;
        // phase e^{πi e/4} e^{−πi n a/c} = e^{2πi num/(8c)}
        const std::int64_t na = (nr * a) % two_c;
        const std::int64_t num = posmod(e * c - 4 * na, eight_c);
        acc += static_cast<double>(sgn) * std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(num) / eight_c);
    }
    return acc / std::sqrt(static_cast<double>(c));
}

cplx upsilon(std::int64_t m, std::int64_t k, std::int64_t h)
{
    if (m < 1 || m % 2 == 0)
        throw std::invalid_argument("upsilon: m must be odd and positive");
    cplx acc = 0;
    const std::int64_t hr = posmod(h, m);
    for (std::int64_t n = 0; n < m; ++n) {
        int c = kronecker(n, m);
        if (c == 0)
            continue;
        acc += static_cast<double>(c) * std::polar(1.0, 2 * std::numbers::pi * static_cast<double>((n * hr) % m) / m);
    }
    return epsilon_root(m).pow(-2 * k - 1).value() * acc / std::sqrt(static_cast<double>(m));
}

std::pair<cplx, cplx> e_n_odd_even(std::int64_t n, cplx s, std::int64_t M)
{
    if (M < 1)
        throw std::invalid_argument("e_n_odd_even: M must be positive");
    if (!(s.real() > 1.5))
        throw DomainError("e_n_odd_even: need Re(s) > 3/2");
    cplx odd = 0, even = 0;
    for (std::int64_t c = 2 * M; c >= 1; --c) {
        if (c % 2) {
            if (c <= M)
                odd += gamma_c(c, n) * std::exp(-s * std::log(static_cast<double>(c)));
        } else {
            even += gamma_c(c, n) * std::exp(-s * std::log(static_cast<double>(c / 2)));
        }
    }
    return {odd, even};
}

DirichletSeriesValue e_n_partial(std::int64_t n, cplx s, std::int64_t M)
{
    auto [odd, even] = e_n_odd_even(n, s, M);
    const double sigma = s.real() - 1.5;
    DirichletSeriesValue out;
    out.value = 0.5 * (odd + even);
    out.terms_used = (M + 1) / 2 + M;
    out.tail_bound = 4 * std::pow(static_cast<double>(M), -sigma) / sigma;
    return out;
}

double e_n_closed(std::int64_t n, double s, const EvalConfig& cfg)
{
    if (!(s > 1))
        throw DomainError("e_n_closed: need s > 1");
    const std::int64_t r = posmod(n, 4);
    if (r == 2 || r == 3)
        return 0.0;
    const double z2s = zeta_numeric(2 * s, cfg);
    if (n == 0)
        return zeta_numeric(2 * s - 1, cfg) / z2s;
    auto [d, f] = fundamental_discriminant(n);
    CharacterHandle h(d);
    return l_numeric(h, s, cfg) / z2s * t_chi_real(s, h, f) / std::pow(static_cast<double>(f), 2 * s - 1);
}

} // namespace mockform
