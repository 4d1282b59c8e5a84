#include "mockform/class_numbers.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "mockform/arithmetic.hpp"
#include "mockform/errors.hpp"

namespace mockform {

namespace {

std::int64_t mod4(std::int64_t n)
{
    return ((n % 4) + 4) % 4;
}

std::int64_t isqrt(std::int64_t n)
{
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n)
        --r;
    while ((r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

} // namespace

bool QuadraticForm::is_reduced() const
{
    if (a <= 0)
        return false;
    std::int64_t ab = b < 0 ? -b : b;
    if (!(ab <= a && a <= c))
        return false;
    if ((ab == a || a == c) && b < 0)
        return false;
    return true;
}

std::vector<QuadraticForm> reduced_forms(std::int64_t N)
{
    if (N <= 0 || mod4(N) == 1 || mod4(N) == 2)
        throw std::invalid_argument("reduced_forms: need N > 0 with N = 0,3 mod 4, got " + std::to_string(N));
    std::vector<QuadraticForm> out;
    const std::int64_t bmax = isqrt(N / 3);
    for (std::int64_t b = -bmax; b <= bmax; ++b) {
        if (mod4(b * b + N) != 0)
            continue;
        const std::int64_t ac = (b * b + N) / 4;
        const std::int64_t b_abs = b < 0 ? -b : b;
        for (std::int64_t a = std::max<std::int64_t>(b_abs, 1); a * a <= ac; ++a) {
            if (ac % a)
                continue;
            QuadraticForm q{a, b, ac / a};
            if (q.is_reduced())
                out.push_back(q);
        }
    }
    std::sort(out.begin(), out.end(), [](const QuadraticForm& x, const QuadraticForm& y) {
        return x.a != y.a ? x.a < y.a : x.b > y.b;
    });
    return out;
}

ExactRational hurwitz(std::int64_t N)
{
    if (N < 0)
        throw std::invalid_argument("hurwitz: N must be non-negative");
    if (N == 0)
        return ExactRational(-1, 12);
    if (mod4(N) == 1 || mod4(N) == 2)
        return ExactRational(0);
    // count in sixths: weight 1/2 for (a,0,a), 1/3 for (a,a,a)
    std::int64_t sixths = 0;
    for (const auto& q : reduced_forms(N)) {
        if (q.b == 0 && q.a == q.c)
            sixths += 3;
        else if (q.a == q.b && q.b == q.c)
            sixths += 2;
        else
            sixths += 6;
    }
    return ExactRational(sixths, 6);
}

ExactRational t_chi(unsigned s, const CharacterHandle& h, std::int64_t f)
{
    if (f < 1)
        throw std::invalid_argument("t_chi: f must be positive");
    if (s < 1)
        throw std::invalid_argument("t_chi: s must be positive");
    mpz_class total = 0;
    for (std::int64_t a : divisors(f)) {
        int mu = moebius(a);
        int c = h(a);
        if (mu == 0 || c == 0)
            continue;
        mpz_class apow;
        mpz_ui_pow_ui(apow.get_mpz_t(), static_cast<unsigned long>(a), s - 1);
        mpz_class term = apow * sigma(2 * s - 1, f / a);
        if (mu * c > 0)
            total += term;
        else
            total -= term;
    }
    return ExactRational(total);
}

double t_chi_real(double s, const CharacterHandle& h, std::int64_t f)
{
    if (f < 1)
        throw std::invalid_argument("t_chi_real: f must be positive");
    double total = 0;
    for (std::int64_t a : divisors(f)) {
        int w = moebius(a) * h(a);
        if (w == 0)
            continue;
        total += w * std::pow(static_cast<double>(a), s - 1) * sigma_real(2 * s - 1, f / a);
    }
    return total;
}

ExactRational cohen_h(unsigned r, std::int64_t N)
{
    if (r < 1)
        throw std::invalid_argument("cohen_h: r must be positive");
    if (N < 0)
        throw std::invalid_argument("cohen_h: N must be non-negative");
    if (N == 0)
        return zeta_exact_neg(r);
    const std::int64_t D = (r % 2) ? -N : N;
    if (mod4(D) == 2 || mod4(D) == 3)
        return ExactRational(0);
    auto [d, f] = fundamental_discriminant(D);
    CharacterHandle h(d);
    return l_exact_neg(h, r) * t_chi(r, h, f);
}

ClassNumberTable::ClassNumberTable(std::vector<ExactRational> values) : values_(std::move(values))
{
    if (values_.empty())
        throw std::invalid_argument("ClassNumberTable: empty");
    if (values_[0] != ExactRational(-1, 12))
        throw std::invalid_argument("ClassNumberTable: H(0) must be -1/12");
    doubles_.reserve(values_.size());
    for (std::size_t n = 0; n < values_.size(); ++n) {
        const auto& v = values_[n];
        if (n > 0) {
            if ((n % 4 == 1 || n % 4 == 2) && !v.is_zero())
                throw std::invalid_argument("ClassNumberTable: H(" + std::to_string(n) + ") must vanish");
            if ((n % 4 == 0 || n % 4 == 3) && v.sign() <= 0)
                throw std::invalid_argument("ClassNumberTable: H(" + std::to_string(n) + ") must be positive");
            if (6 % v.denominator() != 0)
                throw std::invalid_argument("ClassNumberTable: bad denominator at n = " + std::to_string(n));
        }
        doubles_.push_back(v.to_double());
    }
}

const ExactRational& ClassNumberTable::at(std::int64_t n) const
{
    if (n < 0 || n > max_n())
        throw std::out_of_range("ClassNumberTable: n = " + std::to_string(n) + " outside table of max_n = "
                                + std::to_string(max_n()));
    return values_[static_cast<std::size_t>(n)];
}

ClassNumberTable build_table(std::int64_t max_n, const EvalConfig&)
{
    if (max_n < 0)
        throw std::invalid_argument("build_table: max_n must be non-negative");
    std::vector<ExactRational> values;
    values.reserve(static_cast<std::size_t>(max_n + 1));
    for (std::int64_t n = 0; n <= max_n; ++n) {
        ExactRational h = hurwitz(n);
        ExactRational c = cohen_h(1, n);
        if (h != c)
            throw CrossCheckError("build_table: enumeration gives H(" + std::to_string(n) + ") = " + h.to_string()
                                      + " but the L-value formula gives " + c.to_string(),
                                  n);
        values.push_back(std::move(h));
    }
    return ClassNumberTable(std::move(values));
}

} // namespace mockform
