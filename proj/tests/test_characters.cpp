#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "mockform/arithmetic.hpp"
#include "mockform/characters.hpp"

using namespace mockform;

namespace {

constexpr double pi = std::numbers::pi;

// Σ χ(n)n^{−s} summed in full periods, then averaged over two partial sums to damp the oscillation
double l_brute(std::int64_t d, double s)
{
    const std::int64_t m = d < 0 ? -d : d;
    double acc = 0, prev = 0;
    const std::int64_t N = 200000 / m * m;
    for (std::int64_t n = 1; n <= N; ++n) {
        prev = acc;
        acc += kronecker(d, n) * std::pow(static_cast<double>(n), -s);
    }
    return 0.5 * (acc + prev);
}

} // namespace

TEST(Character, Validation)
{
    EXPECT_THROW(CharacterHandle(-12), std::invalid_argument);
    EXPECT_THROW(CharacterHandle(6), std::invalid_argument);
    const CharacterHandle h(-4);
    EXPECT_EQ(h.modulus(), 4);
    EXPECT_FALSE(h.is_even());
    EXPECT_EQ(h(3), -1);
    EXPECT_EQ(chi(h, 5), 1);
    EXPECT_TRUE(CharacterHandle(1).is_principal());
}

TEST(Character, GaussSum)
{
    for (std::int64_t d : {-3, -4, 5, 8, -7, 12, -8, 13, -15, 21}) {
        const CharacterHandle h(d);
        const double r = std::sqrt(std::abs(static_cast<double>(d)));
        const std::complex<double> want = d > 0 ? std::complex<double>(r, 0) : std::complex<double>(0, r);
        EXPECT_NEAR(std::abs(gauss_sum_tau(h) - want), 0, 1e-12) << d;
    }
}

TEST(LFunction, KnownValues)
{
    EXPECT_NEAR(l_numeric(CharacterHandle(-4), 2), 0.91596559417721901505, 1e-13);
    EXPECT_NEAR(l_numeric(CharacterHandle(-3), 1), pi / (3 * std::sqrt(3.0)), 1e-13);
    EXPECT_NEAR(l_numeric(CharacterHandle(5), 1), 2 * std::log((1 + std::sqrt(5.0)) / 2) / std::sqrt(5.0), 1e-13);
    EXPECT_NEAR(l_numeric(CharacterHandle(-4), 3), 0.96894614625936938048, 1e-13);
    EXPECT_NEAR(l_numeric(CharacterHandle(1), 2), pi * pi / 6, 1e-13);
    EXPECT_NEAR(l_continued(CharacterHandle(-4), -0.5).real(), 0.27517974122882025012, 1e-12);
    EXPECT_NEAR(l_derivative(CharacterHandle(-4), -1), 0.58312180806163756028, 1e-10);
}

TEST(LFunction, AgreesWithDirectSum)
{
    for (std::int64_t d : {-3, -4, 5, 8, -7, 12})
        for (double s : {1.5, 2.0, 3.0})
            EXPECT_NEAR(l_numeric(CharacterHandle(d), s), l_brute(d, s), 1e-6) << d << " " << s;
}

TEST(LFunction, ExactNegativeValues)
{
    EXPECT_EQ(l_exact_neg(CharacterHandle(1), 1), ExactRational(-1, 2));
    EXPECT_EQ(l_exact_neg(CharacterHandle(1), 2), ExactRational(-1, 12));
    EXPECT_EQ(l_exact_neg(CharacterHandle(-4), 1), ExactRational(1, 2));
    EXPECT_EQ(l_exact_neg(CharacterHandle(5), 2), ExactRational(-2, 5));
    EXPECT_EQ(l_exact_neg(CharacterHandle(-3), 1), ExactRational(1, 3));
    // odd characters vanish at negative even integers, even ones at negative odd integers
    EXPECT_TRUE(l_exact_neg(CharacterHandle(-4), 2).is_zero());
    EXPECT_TRUE(l_exact_neg(CharacterHandle(5), 1).is_zero());
}

TEST(LFunction, ExactMatchesContinuation)
{
    for (std::int64_t d : {-3, -4, 5, 8, -7})
        for (unsigned r = 1; r <= 4; ++r)
            EXPECT_NEAR(l_continued(CharacterHandle(d), 1.0 - r).real(), l_exact_neg(CharacterHandle(d), r).to_double(),
                        1e-9)
                << d << " " << r;
}

TEST(LFunction, FunctionalEquation)
{
    for (std::int64_t d : {-4, -3, 5, 8, -7, 12, -8, 13})
        for (double s : {1.0, 1.5, 2.0, 3.0})
            EXPECT_LT(functional_equation_residual(CharacterHandle(d), s), 1e-8) << d << " " << s;
}
