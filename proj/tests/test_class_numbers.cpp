#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "mockform/arithmetic.hpp"
#include "mockform/class_numbers.hpp"
#include "mockform/errors.hpp"

using namespace mockform;

TEST(ReducedForms, SmallDiscriminants)
{
    auto f3 = reduced_forms(3);
    ASSERT_EQ(f3.size(), 1u);
    EXPECT_EQ(f3[0], (QuadraticForm{1, 1, 1}));
    auto f23 = reduced_forms(23);
    ASSERT_EQ(f23.size(), 3u);
    EXPECT_EQ(f23[0], (QuadraticForm{1, 1, 6}));
    EXPECT_EQ(f23[1], (QuadraticForm{2, 1, 3}));
    EXPECT_EQ(f23[2], (QuadraticForm{2, -1, 3}));
    for (std::int64_t N = 3; N < 500; ++N) {
        if (N % 4 == 1 || N % 4 == 2) {
            EXPECT_THROW(reduced_forms(N), std::invalid_argument);
            continue;
        }
        for (const auto& q : reduced_forms(N)) {
            EXPECT_TRUE(q.is_reduced());
            EXPECT_EQ(q.discriminant(), -N);
        }
    }
}

TEST(Hurwitz, KnownValues)
{
    EXPECT_EQ(hurwitz(0), ExactRational(-1, 12));
    EXPECT_EQ(hurwitz(3), ExactRational(1, 3));
    EXPECT_EQ(hurwitz(4), ExactRational(1, 2));
    EXPECT_EQ(hurwitz(7), ExactRational(1));
    EXPECT_EQ(hurwitz(12), ExactRational(4, 3));
    EXPECT_EQ(hurwitz(23), ExactRational(3));
    EXPECT_TRUE(hurwitz(1).is_zero());
    EXPECT_TRUE(hurwitz(6).is_zero());
    EXPECT_THROW(hurwitz(-1), std::invalid_argument);
}

// Kronecker–Hurwitz: Σ_r H(4n − r²) = 2σ₁(n) − Σ_{d|n} min(d, n/d), with H(0) = −1/12
TEST(Hurwitz, ClassNumberRelation)
{
    for (std::int64_t n = 1; n <= 300; ++n) {
        ExactRational lhs(0);
        for (std::int64_t r = -40; r <= 40; ++r)
            if (4 * n - r * r >= 0)
                lhs += hurwitz(4 * n - r * r);
        std::int64_t mins = 0, sig = 0;
        for (std::int64_t d = 1; d <= n; ++d)
            if (n % d == 0) {
                mins += std::min(d, n / d);
                sig += d;
            }
        EXPECT_EQ(lhs, ExactRational(2 * sig - mins)) << n;
    }
}

TEST(Cohen, MatchesHurwitzForR1)
{
    for (std::int64_t N = 0; N <= 600; ++N)
        ASSERT_EQ(cohen_h(1, N), hurwitz(N)) << N;
}

TEST(Cohen, WeightFiveHalvesCoefficients)
{
    EXPECT_EQ(cohen_h(2, 0), ExactRational(1, 120));
    EXPECT_EQ(cohen_h(2, 1), ExactRational(-1, 12));
    EXPECT_EQ(cohen_h(2, 4), ExactRational(-7, 12));
    EXPECT_EQ(cohen_h(2, 5), ExactRational(-2, 5));
    EXPECT_EQ(cohen_h(2, 8), ExactRational(-1));
    EXPECT_EQ(cohen_h(2, 9), ExactRational(-25, 12));
    EXPECT_TRUE(cohen_h(2, 2).is_zero());
    EXPECT_TRUE(cohen_h(2, 3).is_zero());
}

TEST(TChi, TrivialConductor)
{
    const CharacterHandle h(-4);
    EXPECT_EQ(t_chi(1, h, 1), ExactRational(1));
    // f = p prime: σ_{2s−1}(p) − χ(p)p^{s−1}
    EXPECT_EQ(t_chi(2, h, 3), ExactRational(1 + 27 - (-1) * 3));
    EXPECT_NEAR(t_chi_real(2.0, h, 3), 31.0, 1e-12);
}

TEST(Table, InvariantsAndBounds)
{
    const auto t = build_table(2000);
    EXPECT_EQ(t.max_n(), 2000);
    EXPECT_EQ(t.at(0), ExactRational(-1, 12));
    for (std::int64_t n = 1; n <= t.max_n(); ++n) {
        // zagier_H's tail bound relies on H(n) ≤ n
        EXPECT_LE(t.value(n), static_cast<double>(n));
        EXPECT_EQ(t.at(n), hurwitz(n));
    }
    EXPECT_THROW(t.at(2001), std::out_of_range);
}

TEST(Table, RejectsBadValues)
{
    EXPECT_THROW(ClassNumberTable({ExactRational(0)}), std::invalid_argument);
    EXPECT_THROW(ClassNumberTable({ExactRational(-1, 12), ExactRational(1)}), std::invalid_argument);
    EXPECT_THROW(ClassNumberTable({ExactRational(-1, 12), ExactRational(0), ExactRational(0), ExactRational(-1)}),
                 std::invalid_argument);
    EXPECT_THROW(build_table(-1), std::invalid_argument);
}
