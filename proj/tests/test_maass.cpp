#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <numbers>

#include <boost/math/special_functions/gamma.hpp>

#include "mockform/cache.hpp"
#include "mockform/errors.hpp"
#include "mockform/maass.hpp"

using namespace mockform;
using cplx = std::complex<double>;

namespace {

constexpr double pi = std::numbers::pi;

class CacheEnv : public ::testing::Environment {
public:
    void SetUp() override { set_cache_path(std::filesystem::temp_directory_path() / "mockform-test-maass-v1.txt"); }
};
const auto* const cache_env = ::testing::AddGlobalTestEnvironment(new CacheEnv);

cplx H(double u, double v)
{
    return zagier_H({u, v}).value;
}

const Evaluator h_eval = [](const UpperHalfPoint& z) { return zagier_H(z).value; };

} // namespace

TEST(Theta, Values)
{
    // Θ(i/2) = π^{1/4}/Γ(3/4), and Θ(i) = Θ(i/2)·√(2+√2)/2
    const double half = std::pow(pi, 0.25) / boost::math::tgamma(0.75);
    EXPECT_NEAR(theta({0, 0.5}).real(), half, 1e-15);
    EXPECT_NEAR(theta({0, 1}).real(), half * std::sqrt(2 + std::sqrt(2.0)) / 2, 1e-15);
    EXPECT_NEAR(std::abs(theta({0, 10}) - (1 + 2 * std::exp(-20 * pi))), 0, 1e-15);
    EXPECT_NEAR(std::abs(theta({1.3, 0.7}) - theta({0.3, 0.7})), 0, 1e-14);
    EXPECT_LT(theta_tail_bound(1.0, 5), 1e-30);
}

TEST(ZagierH, Goldens)
{
    EXPECT_NEAR(std::abs(H(0, 1) - (-0.043539277118024746966)), 0, 1e-15);
    EXPECT_NEAR(std::abs(H(0.3, 0.7) - cplx(-0.035793963881929266284, -0.000055047583012738405513)), 0, 1e-15);
}

TEST(ZagierH, LargeImaginaryPart)
{
    const auto h = zagier_H({0, 10});
    const double want = -1.0 / 12 + 1 / (8 * pi * std::sqrt(10.0)) + (1.0 / 3) * std::exp(-60 * pi);
    EXPECT_NEAR(h.value.real(), want, 1e-17);
    EXPECT_EQ(h.value, h.holomorphic_part + h.nonholomorphic_part);
    EXPECT_LT(h.truncation_tail, 1e-17);
}

TEST(ZagierH, Errors)
{
    EXPECT_THROW(zagier_H({0, 0.04}), DomainError);
    const ClassNumberTable small = build_table(10);
    try {
        zagier_H({0, 0.1}, {}, small);
        FAIL() << "expected DomainError";
    } catch (const DomainError& e) {
        EXPECT_NE(std::string(e.what()).find("need N >= " + std::to_string(zagier_H_terms(0.1, 1e-10))), std::string::npos);
    }
}

TEST(ZagierH, Modularity)
{
    for (const Gamma04Matrix& g : {Gamma04Matrix(1, 1, 0, 1), Gamma04Matrix(1, 0, 4, 1), Gamma04Matrix(-3, -1, 4, 1)})
        for (const UpperHalfPoint& p : {UpperHalfPoint(-0.25, 0.3), UpperHalfPoint(-0.2, 0.4), UpperHalfPoint(-0.3, 0.35)}) {
            ASSERT_GE(std::min(p.v, g.apply(p).v), 0.08);
            EXPECT_LT(modularity_residual(h_eval, 1, 0.0, g, p), 1e-6);
        }
}

TEST(ZagierH, ConstantTermAverage)
{
    cplx acc = 0;
    const int K = 64;
    for (int j = 0; j < K; ++j)
        acc += H(static_cast<double>(j) / K, 1.0);
    EXPECT_NEAR(std::abs(acc / static_cast<double>(K) - (-1.0 / 12 + 1 / (8 * pi))), 0, 1e-10);
}

TEST(ZagierH, FourierCoefficientsMatchAlpha)
{
    const double v = 0.1;
    const int K = 256;
    std::vector<cplx> vals(K);
    for (int j = 0; j < K; ++j)
        vals[j] = H(static_cast<double>(j) / K, v);
    for (std::int64_t h = -9; h <= 9; ++h) {
        cplx c = 0;
        for (int j = 0; j < K; ++j)
            c += vals[j] * std::polar(1.0, -2 * pi * static_cast<double>(h * j) / K);
        c *= std::exp(2 * pi * static_cast<double>(h) * v) / K;
        EXPECT_NEAR(std::abs(c - alpha_limit(h, v)), 0, 1e-8) << h;
    }
}

TEST(Alpha, Cases)
{
    EXPECT_NEAR(alpha_limit(0, 1).real(), -1.0 / 12 + 1 / (8 * pi), 1e-16);
    EXPECT_EQ(alpha_limit(4, 1), cplx(0.5));
    EXPECT_EQ(alpha_limit(3, 2), cplx(1.0 / 3));
    EXPECT_EQ(alpha_limit(-2, 1), cplx(0));
    EXPECT_NEAR(alpha_limit(-1, 1).real() / 9.9315561422970434044e-9, 1, 1e-13);
    EXPECT_NEAR(alpha_limit(-4, 1).real() / 1.1374510890628938878e-25, 1, 1e-12);
}

TEST(Shadow, HolomorphicKernel)
{
    Evaluator f = [](const UpperHalfPoint& z) { return theta(z); };
    EXPECT_LT(std::abs(xi_shadow_fd(f, 0.5, {0.3, 0.7})), 1e-6);
}

TEST(Shadow, FiniteDifferenceGoldens)
{
    EXPECT_NEAR(std::abs(xi_shadow_fd(h_eval, 1.5, {0, 1}) - (-0.0199686710723938995699)), 0, 1e-9);
    EXPECT_NEAR(std::abs(xi_shadow_fd(h_eval, 1.5, {0.3, 0.7}) - cplx(-0.0197431459479547187, -0.000465415002444963)), 0,
                1e-9);
}

TEST(Shadow, IsMinusThetaOver16Pi)
{
    for (const UpperHalfPoint& p : {UpperHalfPoint(0.1, 0.4), UpperHalfPoint(0.6, 1.3), UpperHalfPoint(0.9, 2.7)}) {
        const cplx xi = xi_shadow_fd(h_eval, 1.5, p);
        EXPECT_LT(std::abs(xi + theta(p) / (16 * pi)), 1e-8);
        // the −Θ/16 normalization is off by the factor π
        EXPECT_GT(std::abs(xi + theta(p) / 16.0), 1e-2);
    }
}

TEST(Shadow, E2StarConstant)
{
    Evaluator f = [](const UpperHalfPoint& z) { return e2_star(z); };
    for (const UpperHalfPoint& p : {UpperHalfPoint(0, 1), UpperHalfPoint(0.3, 0.7), UpperHalfPoint(-0.4, 1.6)})
        EXPECT_NEAR(std::abs(xi_shadow_fd(f, 2, p) - 3 / pi), 0, 1e-6);
}

TEST(Shadow, AnalyticStream)
{
    const auto terms = xi_shadow_analytic(400);
    ASSERT_EQ(terms.size(), 401u);
    for (const auto& t : terms) {
        const auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(t.exponent))));
        if (t.exponent == 0)
            EXPECT_EQ(t.coefficient, ExactRational(-1, 16));
        else if (r * r == t.exponent)
            EXPECT_EQ(t.coefficient, ExactRational(-1, 8));
        else
            EXPECT_TRUE(t.coefficient.is_zero());
        EXPECT_EQ(t.pi_half_power, -2);
    }
    NonholomorphicData bad{ExactRational(1), 0, {ExactRational(0), ExactRational(1)}, 0};
    EXPECT_THROW(apply_shadow_formula(1, bad), std::invalid_argument);
    EXPECT_THROW(apply_shadow_formula(2, bad), std::invalid_argument);
}

TEST(Laplacian, Kernels)
{
    EXPECT_LT(std::abs(laplacian_fd(h_eval, 1.5, {0.3, 0.7})), 1e-4);
    EXPECT_LT(std::abs(laplacian_fd(h_eval, 1.5, {0.8, 1.9})), 1e-4);
    Evaluator vpow = [](const UpperHalfPoint& z) { return cplx(std::pow(z.v, -0.5)); };
    EXPECT_LT(std::abs(laplacian_fd(vpow, 1.5, {0.2, 0.8})), 1e-6);
    Evaluator q3 = [](const UpperHalfPoint& z) { return std::exp(cplx(0, 2 * pi * 3) * z.tau()); };
    EXPECT_LT(std::abs(laplacian_fd(q3, 1.5, {0.2, 0.8})), 1e-6);
}

TEST(E2Star, Values)
{
    EXPECT_NEAR(std::abs(e2_star({0, 1})), 0, 1e-15);
    EXPECT_NEAR(std::abs(e2_star({0.3, 0.7}) - cplx(-0.26430454738439707192, -0.27422813727583508287)), 0, 1e-14);
    EXPECT_NEAR(std::abs(e2_star({0, 100}) - (1 - 3 / (100 * pi))), 0, 1e-10);
    for (cplx t : {cplx(0, 1), cplx(1, 1), cplx(0.5, 0.8)})
        EXPECT_LT(std::abs(e2_star(UpperHalfPoint::from_complex(-1.0 / t)) - t * t * e2_star(UpperHalfPoint::from_complex(t))),
                  1e-8);
}

TEST(Limits, SToZero)
{
    for (std::int64_t h : {3, 4, -1, -4, -5}) {
        const auto est = s_limit_check(h, 1.0, {0.004, 0.002, 0.001});
        EXPECT_LT(std::abs(est.value - alpha_limit(h, 1.0)), 1e-3) << h;
        EXPECT_EQ(est.samples.size(), 3u);
    }
    EXPECT_THROW(s_limit_check(0, 1.0, {0.002, 0.001}), std::invalid_argument);
    EXPECT_THROW(s_limit_check(3, 1.0, {0.02, 0.001}), std::invalid_argument);
    EXPECT_THROW(s_limit_check(3, 1.0, {0.001}), std::invalid_argument);
}
