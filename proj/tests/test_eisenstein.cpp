#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "mockform/class_numbers.hpp"
#include "mockform/eisenstein.hpp"
#include "mockform/errors.hpp"
#include "mockform/maass.hpp"

using namespace mockform;
using cplx = std::complex<double>;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST(Matrices, Validation)
{
    EXPECT_THROW(SL2Matrix(1, 1, 1, 1), std::invalid_argument);
    EXPECT_THROW(Gamma04Matrix(1, 0, 2, 1), std::invalid_argument);
    EXPECT_THROW(UpperHalfPoint(0, 0), std::invalid_argument);
    const Gamma04Matrix g(-3, -1, 4, 1);
    EXPECT_EQ(g * g.inverse(), Gamma04Matrix());
    const cplx z(0.2, 0.9);
    EXPECT_NEAR(std::abs(g.apply(z) - (-3.0 * z - 1.0) / (4.0 * z + 1.0)), 0, 1e-15);
}

TEST(Multiplier, ThetaTransformation)
{
    // Θ(γτ) = v_θ(γ)(cτ+d)^{1/2}Θ(τ)
    std::mt19937_64 rng(7);
    const UpperHalfPoint pts[] = {{0.1, 0.9}, {-0.25, 0.35}, {0.3, 0.6}};
    int checked = 0;
    for (int i = 0; i < 200 && checked < 40; ++i) {
        const Gamma04Matrix g = random_gamma04_word(rng, 4);
        for (const auto& p : pts) {
            const UpperHalfPoint gp = g.apply(p);
            if (gp.v < 0.05)
                continue;
            ++checked;
            EXPECT_NEAR(std::abs(theta(gp) - theta_automorphy(g, p) * theta(p)), 0, 1e-10);
        }
    }
    EXPECT_GE(checked, 20);
}

TEST(Multiplier, KnownValues)
{
    EXPECT_NEAR(std::abs(v_theta(Gamma04Matrix(1, 0, 4, 1)) - 1.0), 0, 1e-15);
    // d = −1: (c/−1)ε_{−1}^{−1}
    EXPECT_EQ(v_theta_root(Gamma04Matrix(-1, 0, 0, -1)), EighthRoot::from_sign(kronecker(0, -1)) * epsilon_root(-1).inverse());
}

TEST(Multiplier, CocycleAndSigma)
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> du(-1, 1), dv(0.3, 2);
    for (int i = 0; i < 100; ++i) {
        const Gamma04Matrix g1 = random_gamma04_word(rng), g2 = random_gamma04_word(rng);
        const UpperHalfPoint p(du(rng), dv(rng));
        EXPECT_LT(j_cocycle_residual(g1, g2, p), 1e-10);
        const int sigma = cocycle_sigma(g1, g2, p);
        EXPECT_TRUE(sigma == 1 || sigma == -1);
    }
}

TEST(Multiplier, SignRuleCounterexamples)
{
    // the sign(b) identity fails for these Γ₀(4) members
    EXPECT_GT(lemma22_residual(Gamma04Matrix(1, -1, -4, 5)), 0.5);
    EXPECT_GT(lemma22_residual(Gamma04Matrix(-3, -1, 4, 1)), 0.5);
    EXPECT_NEAR(lemma22_residual(Gamma04Matrix(1, 1, 0, 1)), 0, 1e-15);
    EXPECT_THROW(lemma22_residual(Gamma04Matrix(1, 0, 4, 1)), std::invalid_argument);
    EXPECT_NEAR(lemma23_residual(Gamma04Matrix(1, 1, 0, 1), Gamma04Matrix(1, 0, -4, 1), {-0.5092423490579228, 1.0893123033629588}),
                2.0, 1e-12);
}

TEST(Eisenstein, DirectMatchesFourier)
{
    for (auto [k, s] : {std::pair{1, 1.0}, std::pair{2, 1.0}}) {
        const UpperHalfPoint p(0.3, 0.7);
        const cplx d = eisenstein_direct(EisensteinKind::H, k, s, p);
        const cplx f = eisenstein_fourier(k, s, p, {}, EisensteinKind::H);
        EXPECT_LT(std::abs(d - f) / std::abs(d), 5e-3) << k;
        for (auto kind : {EisensteinKind::E, EisensteinKind::F}) {
            const cplx dk = eisenstein_direct(kind, k, s, p), fk = eisenstein_fourier(k, s, p, {}, kind);
            EXPECT_LT(std::abs(dk - fk) / std::abs(dk), 5e-3);
        }
    }
}

TEST(Eisenstein, ModularityOfFourierPaths)
{
    const Gamma04Matrix T(1, 1, 0, 1), U(1, 0, 4, 1);
    const UpperHalfPoint p(-0.25, 0.3);
    for (auto kind : {EisensteinKind::E, EisensteinKind::F})
        for (const auto& g : {T, U}) {
            Evaluator f = [&](const UpperHalfPoint& z) { return eisenstein_fourier(2, 1.0, z, {}, kind); };
            EXPECT_LT(modularity_residual(f, 2, 1.0, g, p), 1e-3);
        }
}

TEST(Eisenstein, WeightFiveHalvesIsCohenSeries)
{
    const UpperHalfPoint p(0.2, 0.8);
    cplx series = 0;
    for (std::int64_t n = 40; n >= 0; --n)
        series += cohen_h(2, n).to_double() * std::exp(cplx(0, 2 * pi * static_cast<double>(n)) * p.tau());
    EXPECT_LT(std::abs(eisenstein_fourier(2, 0.0, p) - series), 1e-10);
}

TEST(Eisenstein, Domain)
{
    EXPECT_THROW(eisenstein_fourier(1, 0.0, {0, 1}), DomainError);
    EXPECT_GT(eisenstein_direct_tail(2, 1.0, {0, 1}), 0);
}
