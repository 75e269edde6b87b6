#include <zetaforge/quadrature.hpp>
#include <zetaforge/specialfn.hpp>

#include <gtest/gtest.h>

#include <numbers>

using namespace zetaforge;

namespace {
constexpr double pi = std::numbers::pi;
constexpr double ln2 = std::numbers::ln2;
const double catalan = 0.91596559417721901505;
const double zeta3 = 1.2020569031595942854;
}  // namespace

TEST(Adaptive, Basics)
{
    auto one = adaptive_integrate([](double) { return 1.0; }, 0, 1);
    EXPECT_NEAR(one.value, 1, 1e-15);
    EXPECT_GT(one.evaluations, 0u);
    EXPECT_GE(one.est_error, 0);
    EXPECT_NEAR(adaptive_integrate([](double t) { return std::log(t); }, 0, 1, 1e-13, true).value, -1, 1e-13);
    auto q = adaptive_integrate([](double t) { return std::log(t) / (t - 1); }, 0, 1, 1e-13, true, true);
    EXPECT_NEAR(q.value, pi * pi / 6, 1e-12);
}

TEST(Adaptive, Errors)
{
    EXPECT_THROW(adaptive_integrate([](double t) { return t; }, 1, 0), domain_error);
    // 1/sqrt-free but wildly oscillating: runs out of panels
    auto nasty = [](double t) { return std::sin(1 / (t + 1e-9)); };
    EXPECT_THROW(adaptive_integrate(nasty, 0, 1, 1e-14, false, false, 20), convergence_error);
}

TEST(Adaptive, Additivity)
{
    auto f = [](double t) { return std::exp(-t) * std::log(t); };
    auto whole = adaptive_integrate(f, 0, 2, 1e-13, true);
    auto left = adaptive_integrate(f, 0, 0.7, 1e-13, true);
    auto right = adaptive_integrate(f, 0.7, 2, 1e-13);
    const double err = whole.est_error + left.est_error + right.est_error;
    EXPECT_NEAR(whole.value, left.value + right.value, std::max(2 * err, 1e-15));
}

TEST(CotMoment, Examples)
{
    EXPECT_NEAR(cot_moment(1, 0.5).value, 0.5 * ln2, 1e-13);
    EXPECT_NEAR(cot_moment(1, 0.25).value, ln2 / 8 + catalan / (2 * pi), 1e-13);
    EXPECT_NEAR(cot_moment(2, 0.5).value, 0.25 * ln2 - 7 * zeta3 / (8 * pi * pi), 1e-13);
    EXPECT_THROW(cot_moment(1, 1.0), domain_error);
    EXPECT_THROW(cot_moment(3, 0.5), domain_error);
}

TEST(CotMoment, SmallArgumentSeries)
{
    EXPECT_NEAR(pi_u_cot_pi_u(0.0), 1.0, 0);
    EXPECT_NEAR(pi_u_cot_pi_u(9.99e-4), pi * 9.99e-4 / std::tan(pi * 9.99e-4), 1e-15);
}

TEST(LogSine, Examples)
{
    EXPECT_NEAR(log_sine_integral(0.5).value, 0, 1e-13);
    EXPECT_NEAR(log_sine_integral(0.25).value, -catalan / (2 * pi), 1e-13);
    EXPECT_NEAR(log_sine_integral(1).value, 0, 1e-13);
    // int_0^{pi/4} log sin t dt
    auto q = adaptive_integrate([](double t) { return std::log(std::sin(t)); }, 0, pi / 4, 1e-13, true);
    EXPECT_NEAR(q.value, -pi / 4 * ln2 - catalan / 2, 1e-13);
}

TEST(LogSine, IntegrationByParts)
{
    for (double x : {0.2, 0.3}) {
        auto ls = adaptive_integrate([](double u) { return std::log(std::sin(pi * u)); }, 0, x, 1e-13, true);
        EXPECT_NEAR(cot_moment(1, x).value + ls.value - x * std::log(std::sin(pi * x)), 0, 1e-9);
    }
}

TEST(LogSine, Fourier)
{
    const double x = 0.3;
    auto ls = adaptive_integrate([](double u) { return std::log(std::sin(pi * u)); }, 0, x, 1e-13, true);
    const double f = clausen(2, 2 * pi * x);
    EXPECT_NEAR(ls.value + x * ln2 + f / (2 * pi), 0, 1e-8);
}
