#include "mockform/arithmetic.hpp"

#include <cmath>
#include <algorithm>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>

#include "mockform/errors.hpp"

namespace mockform {

int kronecker(std::int64_t a, std::int64_t n)
{
    if (n == 0)
        return (a == 1 || a == -1) ? 1 : 0;

    int result = 1;
    std::uint64_t m;
    if (n < 0) {
        m = static_cast<std::uint64_t>(0) - static_cast<std::uint64_t>(n);
        if (a < 0)
            result = -1;
    } else {
        m = static_cast<std::uint64_t>(n);
    }

    int twos = 0;
    while ((m & 1) == 0) {
        m >>= 1;
        ++twos;
    }
    if (twos > 0) {
        if ((a & 1) == 0)
            return 0;
        // (a/2) = (2/|a|) for odd a
        int r8 = static_cast<int>(((a % 8) + 8) % 8);
        if ((twos & 1) && (r8 == 3 || r8 == 5))
            result = -result;
    }
    if (m == 1)
        return result;

    // Jacobi symbol (a/m), m odd > 1
    std::uint64_t x = static_cast<std::uint64_t>(((a % static_cast<std::int64_t>(m)) + static_cast<std::int64_t>(m))
                                                 % static_cast<std::int64_t>(m));
    while (x != 0) {
        while ((x & 1) == 0) {
            x >>= 1;
            std::uint64_t r = m & 7;
            if (r == 3 || r == 5)
                result = -result;
        }
        std::swap(x, m);
        if ((x & 3) == 3 && (m & 3) == 3)
            result = -result;
        x %= m;
    }
    return m == 1 ? result : 0;
}

EighthRoot EighthRoot::from_sign(int sign)
{
    if (sign == 1)
        return {0};
    if (sign == -1)
        return {4};
    throw std::invalid_argument("EighthRoot::from_sign: expected +1 or -1");
}

EighthRoot EighthRoot::pow(std::int64_t e) const
{
    std::int64_t r = (static_cast<std::int64_t>(k) * (e % 8)) % 8;
    return {static_cast<int>((r + 8) % 8)};
}

std::complex<double> EighthRoot::value() const
{
    static const double h = std::numbers::sqrt2 / 2;
    switch (k & 7) {
    case 0: return {1, 0};
    case 1: return {h, h};
    case 2: return {0, 1};
    case 3: return {-h, h};
    case 4: return {-1, 0};
    case 5: return {-h, -h};
    case 6: return {0, -1};
    default: return {h, -h};
    }
}

EighthRoot epsilon_root(std::int64_t d)
{
    if (d % 2 == 0)
        throw std::invalid_argument("epsilon: d must be odd, got " + std::to_string(d));
    return ((d % 4) + 4) % 4 == 1 ? EighthRoot{0} : EighthRoot{2};
}

std::complex<double> epsilon(std::int64_t d)
{
    return epsilon_root(d).value();
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n)
{
    if (n < 1)
        throw std::invalid_argument("factorize: n must be positive");
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e)
            out.emplace_back(p, e);
    }
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

std::vector<std::int64_t> divisors(std::int64_t n)
{
    std::vector<std::int64_t> ds{1};
    for (auto [p, e] : factorize(n)) {
        std::size_t base = ds.size();
        std::int64_t pk = 1;
        for (int i = 0; i < e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j)
                ds.push_back(ds[j] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

int moebius(std::int64_t n)
{
    if (n < 1)
        throw std::invalid_argument("moebius: n must be positive");
    int mu = 1;
    for (auto [p, e] : factorize(n)) {
        if (e > 1)
            return 0;
        mu = -mu;
    }
    return mu;
}

mpz_class sigma(unsigned k, std::int64_t n)
{
    if (n < 1)
        throw std::invalid_argument("sigma: n must be positive");
    mpz_class total = 0;
    for (std::int64_t d : divisors(n)) {
        mpz_class t;
        mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(d), k);
        total += t;
    }
    return total;
}

double sigma_real(double k, std::int64_t n)
{
    if (n < 1)
        throw std::invalid_argument("sigma_real: n must be positive");
    double total = 0;
    for (std::int64_t d : divisors(n))
        total += std::pow(static_cast<double>(d), k);
    return total;
}

namespace {

bool squarefree(std::int64_t n)
{
    for (auto [p, e] : factorize(n < 0 ? -n : n))
        if (e > 1)
            return false;
    return true;
}

std::int64_t mod4(std::int64_t n)
{
    return ((n % 4) + 4) % 4;
}

} // namespace

bool is_fundamental_discriminant(std::int64_t d)
{
    if (d == 1)
        return true;
    if (d == 0)
        return false;
    if (mod4(d) == 1)
        return squarefree(d);
    if (mod4(d) == 0) {
        std::int64_t m = d / 4;
        return (mod4(m) == 2 || mod4(m) == 3) && squarefree(m);
    }
    return false;
}

DiscriminantFactorization fundamental_discriminant(std::int64_t n)
{
    if (n == 0 || mod4(n) == 2 || mod4(n) == 3)
        throw std::invalid_argument("fundamental_discriminant: need nonzero n = 0,1 mod 4, got "
                                    + std::to_string(n));
    std::int64_t core = n < 0 ? -1 : 1;
    std::int64_t g = 1;
    for (auto [p, e] : factorize(n < 0 ? -n : n)) {
        if (e % 2)
            core *= p;
        for (int i = 0; i < e / 2; ++i)
            g *= p;
    }
    if (mod4(core) == 1)
        return {core, g};
    return {4 * core, g / 2};
}

mpz_class binomial(unsigned n, unsigned k)
{
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

ExactRational bernoulli(unsigned n)
{
    static std::mutex mu;
    static std::vector<ExactRational> table{ExactRational(1)};
    std::lock_guard<std::mutex> lock(mu);
    while (table.size() <= n) {
        unsigned m = static_cast<unsigned>(table.size());
        ExactRational acc(0);
        for (unsigned k = 0; k < m; ++k)
            acc += ExactRational(binomial(m + 1, k)) * table[k];
        table.push_back(-acc / ExactRational(static_cast<std::int64_t>(m + 1)));
    }
    return table[n];
}

ExactRational bernoulli_polynomial(unsigned n, const ExactRational& x)
{
    // Horner in x over the coefficients C(n,k)B_{n-k}
    ExactRational acc(0);
    for (unsigned k = 0; k <= n; ++k)
        acc = acc * x + ExactRational(binomial(n, k)) * bernoulli(k);
    return acc;
}

ExactRational zeta_exact_neg(unsigned r)
{
    if (r == 0)
        throw std::invalid_argument("zeta_exact_neg: r must be >= 1");
    return -bernoulli(2 * r) / ExactRational(static_cast<std::int64_t>(2 * r));
}

double zeta_numeric(double s, const EvalConfig& cfg)
{
    if (!(s > 1))
        throw DomainError("zeta_numeric: need s > 1");
    static const double b2j[] = {1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30};
    static const double b10 = 5.0 / 66;

    auto poch = [s](int m) {
        double p = 1;
        for (int i = 0; i < m; ++i)
            p *= s + i;
        return p;
    };

    std::int64_t N = 32;
    // remainder after the B_8 term is bounded by the next term
    double fact10 = 3628800.0;
    while (b10 / fact10 * poch(9) * std::pow(static_cast<double>(N), -s - 9) > cfg.quad_tol * 1e-6)
        N *= 2;

    double sum = 0;
    for (std::int64_t n = N - 1; n >= 1; --n)
        sum += std::pow(static_cast<double>(n), -s);
    double x = static_cast<double>(N);
    sum += std::pow(x, 1 - s) / (s - 1) + 0.5 * std::pow(x, -s);
    double fact = 1;
    for (int j = 1; j <= 4; ++j) {
        fact *= (2 * j - 1) * (2 * j);
        sum += b2j[j - 1] / fact * poch(2 * j - 1) * std::pow(x, -s - 2 * j + 1);
    }
    return sum;
}

} // namespace mockform
