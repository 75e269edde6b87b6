// Reference values below were produced with mpmath at 30 digits.
#include <zetaforge/quadrature.hpp>
#include <zetaforge/specialfn.hpp>

#include <gtest/gtest.h>

#include <numbers>

using namespace zetaforge;

namespace {
constexpr double pi = std::numbers::pi;
constexpr double ln2 = std::numbers::ln2;
const double euler = 0.57721566490153286061;
const double zeta3 = 1.2020569031595942854;
const double catalan = 0.91596559417721901505;
}  // namespace

TEST(Constants, Invariants)
{
    const auto& c = constants();
    EXPECT_DOUBLE_EQ(c.zeta_prime_neg1, 1.0 / 12 - c.log_glaisher);
    EXPECT_DOUBLE_EQ(c.zeta_prime_neg2, -c.zeta3 / (4 * pi * pi));
    EXPECT_NEAR(std::exp(c.log_glaisher), 1.2824271291006226369, 1e-15);
    EXPECT_NEAR(std::exp(c.log_glaisher), 1.28242713, 5e-9);
    EXPECT_NEAR(c.zeta_prime_neg1, -0.165421143700450929, 1e-16);
}

TEST(Constants, RecomputedFromSeries)
{
    for (const auto& chk : verify_constants()) EXPECT_NEAR(chk.recomputed, chk.embedded, 1e-12) << chk.name;
}

TEST(Digamma, Examples)
{
    EXPECT_NEAR(digamma(1).value, -euler, 1e-14);
    EXPECT_NEAR(digamma(0.5).value, -euler - 2 * ln2, 1e-14);
    EXPECT_NEAR(digamma(2).value, 1 - euler, 1e-14);
    EXPECT_THROW(digamma(0), domain_error);
    EXPECT_THROW(digamma(-1.5), domain_error);
}

TEST(Digamma, Asymptotic)
{
    EXPECT_NEAR(digamma(10).value, digamma(9).value + 1.0 / 9, 1e-13);
    EXPECT_NEAR(digamma_asymptotic(1e6) - std::log(1e6), -5.0000008333333333e-7, 1e-14);
    EXPECT_NEAR(digamma_asymptotic(8), digamma(8).value, 1e-11);
    EXPECT_THROW(digamma_asymptotic(7), domain_error);
}

TEST(Digamma, Reflection)
{
    for (double u : {0.1, 0.3, 0.45})
        EXPECT_NEAR(digamma(1 - u).value - digamma(u).value, pi / std::tan(pi * u), 1e-9) << u;
}

TEST(Digamma, Recurrence)
{
    for (int i = 0; i < 20; ++i) {
        const double u = 0.15 + 0.6 * i;
        EXPECT_NEAR(digamma(u + 1).value - digamma(u).value - 1 / u, 0, 1e-11) << u;
    }
}

TEST(Polygamma, Examples)
{
    EXPECT_NEAR(polygamma(1, 1).value, pi * pi / 6, 1e-14);
    EXPECT_NEAR(polygamma(2, 1).value, -2 * zeta3, 1e-14);
    EXPECT_NEAR(polygamma(3, 1).value, 6 * std::pow(pi, 4) / 90, 1e-13);
    EXPECT_NEAR(polygamma(1, 0.25).value, 17.197329154507110, 1e-12);
    EXPECT_THROW(polygamma(0, 1), domain_error);
}

TEST(LogGamma, Examples)
{
    EXPECT_NEAR(log_gamma(1).value, 0, 1e-15);
    EXPECT_NEAR(log_gamma(0.5).value, 0.5 * std::log(pi), 1e-14);
    EXPECT_NEAR(log_gamma(5).value, std::log(24.0), 1e-14);
    EXPECT_NEAR(log_gamma(0.1).value, 2.2527126517342059599, 1e-13);
}

TEST(LogGamma, Stirling)
{
    EXPECT_NEAR(log_gamma_stirling(10), std::log(362880.0), 1e-12);
    EXPECT_NEAR(log_gamma_stirling(8), log_gamma(8).value, 1e-10);
    EXPECT_GT(log_gamma_stirling(20), log_gamma_stirling(10));
}

TEST(Hurwitz, Examples)
{
    EXPECT_NEAR(hurwitz_zeta(2, 1).value, pi * pi / 6, 1e-14);
    EXPECT_NEAR(hurwitz_zeta(0, 0.3).value, 0.2, 1e-15);
    EXPECT_NEAR(hurwitz_zeta(3, 0.5).value, 7 * zeta3, 1e-13);
    EXPECT_NEAR(hurwitz_zeta(-0.5, 0.3).value, 0.093358815084915321, 1e-13);
    EXPECT_NEAR(hurwitz_zeta(-3, 0.25).value, -to_double(bernoulli_poly(4, make_rational(1, 4))) / 4, 1e-16);
    EXPECT_THROW(hurwitz_zeta(1, 0.5), domain_error);
}

TEST(Hurwitz, EulerMaclaurinOracle)
{
    EXPECT_NEAR(hurwitz_zeta_em(3, 0.7), 3.2174964370954618, 1e-14);
    EXPECT_NEAR(hurwitz_zeta_em(2.5, 4), hurwitz_zeta(2.5, 4).value, 1e-13);
}

TEST(Hurwitz, Duplication)
{
    const double s = 3, a = 0.7;
    const double r = std::pow(2, s) * hurwitz_zeta(s, 2 * a).value - hurwitz_zeta(s, a).value -
                     hurwitz_zeta(s, a + 0.5).value;
    EXPECT_NEAR(r, 0, 1e-9);
}

TEST(HurwitzDeriv, Examples)
{
    EXPECT_NEAR(hurwitz_zeta_deriv(0, 1.5).value, log_gamma(1.5).value - 0.5 * std::log(2 * pi), 1e-13);
    EXPECT_NEAR(hurwitz_zeta_deriv(-1, 1).value, constants().zeta_prime_neg1, 1e-13);
    EXPECT_NEAR(hurwitz_zeta_deriv(0, 0.5).value, -0.5 * ln2, 1e-14);
    EXPECT_NEAR(hurwitz_zeta_deriv(-3, 0.3).value, -0.012762444161095845, 1e-13);
    EXPECT_THROW(hurwitz_zeta_deriv(-4, 0.5), domain_error);
    EXPECT_THROW(hurwitz_zeta_deriv(0.5, 0.5), domain_error);
}

TEST(HurwitzDeriv, Lerch)
{
    for (double u : {0.25, 0.5, 1.0, 1.5, 3.0})
        EXPECT_NEAR(log_gamma(u).value - hurwitz_zeta_deriv(0, u).value - 0.5 * std::log(2 * pi), 0, 1e-8) << u;
}

TEST(HurwitzDeriv, StepLaw)
{
    for (double u : {0.3, 1.7, 4.0})
        EXPECT_NEAR(hurwitz_zeta_deriv(0, u + 1).value - hurwitz_zeta_deriv(0, u).value - std::log(u), 0, 1e-8);
}

TEST(HurwitzDeriv, SpecialTable)
{
    EXPECT_NEAR(hurwitz_deriv_special(2, 0.5), 0.02283634279379495, 1e-15);
    EXPECT_NEAR(hurwitz_deriv_special(1, 0.25) - hurwitz_deriv_special(1, 0.75), catalan / (2 * pi), 1e-15);
    EXPECT_DOUBLE_EQ(hurwitz_deriv_special(1, 2), constants().zeta_prime_neg1);
    EXPECT_THROW(hurwitz_deriv_special(2, 0.25), domain_error);
    for (auto [n, x] : {std::pair{1u, 0.5}, {2u, 0.5}, {1u, 0.25}, {1u, 0.75}, {0u, 0.5}, {2u, 2.0}})
        EXPECT_NEAR(hurwitz_deriv_special(n, x), hurwitz_zeta_deriv(-double(n), x).value, 1e-12) << n << " " << x;
}

TEST(HurwitzDeriv, ReflectionAgainstFourier)
{
    for (double x : {1.0 / 6, 1.0 / 3}) {
        double four = 0;
        for (int n = 1; n <= 200000; ++n) four += std::cos(2 * n * pi * x) / (double(n) * n * n);
        const double r = hurwitz_zeta_deriv(-2, x).value + hurwitz_zeta_deriv(-2, 1 - x).value +
                         2 / (4 * pi * pi) * four;
        EXPECT_NEAR(r, 0, 1e-8) << x;
    }
}

TEST(VanishingMoment, HalfIntegerS)
{
    auto z = [](double u) { return hurwitz_zeta(-0.5, u).value; };
    EXPECT_NEAR(adaptive_integrate(z, 0, 1, 1e-10, true, false).value, 0, 1e-7);
    EXPECT_NEAR(adaptive_integrate(z, 1, 2, 1e-10).value, 1 / (-0.5 - 1), 1e-7);
}

TEST(BarnesG, Examples)
{
    EXPECT_NEAR(barnes_g_log(2), 0, 1e-13);
    EXPECT_NEAR(barnes_g_log(3), 0, 1e-13);
    EXPECT_NEAR(barnes_g_log(0.5), -0.25 * std::log(pi) + 1.5 * constants().zeta_prime_neg1 + ln2 / 24, 1e-13);
    EXPECT_NEAR(barnes_g_log(0.5), -0.50543305448969538, 1e-13);
    // G(u+1) = Gamma(u) G(u)
    EXPECT_NEAR(barnes_g_log(1.7), log_gamma(0.7).value + barnes_g_log(0.7), 1e-12);
}

TEST(TripleGamma, Examples)
{
    EXPECT_NEAR(triple_gamma_log(0.5), 7 * zeta3 / (32 * pi * pi) - std::log(pi) / 16, 1e-13);
    EXPECT_NEAR(triple_gamma_log(0), 0, 1e-14);
    // Gamma_3(2) = Gamma_3(1)/Gamma_2(1) = 1
    EXPECT_NEAR(triple_gamma_log(1), 0, 1e-13);
    // Gamma_3(1+x+1) = Gamma_3(1+x)/Gamma_2(1+x), Gamma_2 = 1/G
    const double x = 0.3;
    EXPECT_NEAR(triple_gamma_log(x + 1), triple_gamma_log(x) + barnes_g_log(1 + x), 1e-12);
}

TEST(Clausen, Examples)
{
    EXPECT_NEAR(clausen(2, pi / 2), catalan, 1e-15);
    EXPECT_NEAR(clausen(3, pi / 2), -3 * zeta3 / 32, 1e-15);
    EXPECT_NEAR(clausen(3, 0), zeta3, 1e-15);
    EXPECT_NEAR(clausen(5, 0), 1.0369277551433699263, 1e-15);
    EXPECT_NEAR(clausen(2, 0.3), 0.661567010220201, 1e-14);
    EXPECT_NEAR(clausen(2, 1), 1.0139591323607685, 1e-14);
    EXPECT_NEAR(clausen(3, 2), -0.46797147208497103, 1e-14);
    EXPECT_NEAR(clausen(4, 5), -0.98224881953099551, 1e-14);
    EXPECT_NEAR(clausen(3, 0.1), 1.1830436304608268, 1e-14);
    // odd symmetry of the sine type
    EXPECT_NEAR(clausen(2, 2 * pi - 0.3), -clausen(2, 0.3), 1e-14);
    EXPECT_THROW(clausen(1, 0.5), domain_error);
}

TEST(Clausen, BranchesAgree)
{
    // the log series is used below 0.5, summation by parts above
    for (unsigned n : {2u, 3u, 4u}) EXPECT_NEAR(clausen(n, 0.4999999), clausen(n, 0.5000001), 1e-6);
}

TEST(Polylog, Examples)
{
    EXPECT_NEAR(polylog(2, 0.5).value, pi * pi / 12 - 0.5 * ln2 * ln2, 1e-15);
    EXPECT_EQ(polylog(3, 0).value, 0);
    EXPECT_NEAR(polylog(2, -1).value, -pi * pi / 12, 1e-15);
    EXPECT_NEAR(polylog(3, 0.9).value, 1.0496589501864399, 1e-14);
    EXPECT_NEAR(polylog(3, -0.7).value, -0.64866632128523546, 1e-14);
    EXPECT_NEAR(polylog(1, 0.3).value, -std::log(0.7), 1e-15);
    EXPECT_THROW(polylog(1, 1), domain_error);
    EXPECT_THROW(polylog(2, 1.5), domain_error);
}

TEST(IncompleteGamma, Examples)
{
    EXPECT_NEAR(incomplete_gamma0(1), 0.21938393439552027, 1e-15);
    EXPECT_NEAR(incomplete_gamma0(0.3), 0.90567665167584674, 1e-15);
    EXPECT_NEAR(incomplete_gamma0(5), 0.0011482955912753258, 1e-17);
    EXPECT_NEAR(incomplete_gamma0(1e-6) + std::log(1e-6) + euler, 0, 2e-6);
    // quadrature oracle
    auto q = adaptive_integrate([](double t) { return std::exp(-1 / t) / t; }, 0, 1, 1e-14);
    EXPECT_NEAR(incomplete_gamma0(1), q.value, 1e-13);
    EXPECT_THROW(incomplete_gamma0(0), domain_error);
}

TEST(Stieltjes, Examples)
{
    EXPECT_NEAR(stieltjes(0, 1).value, euler, 1e-14);
    EXPECT_NEAR(stieltjes(0, 2).value, euler - 1, 1e-14);
    EXPECT_NEAR(stieltjes(1, 1).value, -0.072815845483676725, 1e-13);
}

TEST(AlternatingZeta, Values)
{
    EXPECT_NEAR(alternating_zeta(2).value, pi * pi / 12, 1e-15);
    EXPECT_NEAR(alternating_zeta(5).value, 0.97211977044690931, 1e-15);
}
