#include <zetaforge/hassekernel.hpp>

#include <gtest/gtest.h>

#include <numbers>

using namespace zetaforge;
using boost::multiprecision::log;
using boost::multiprecision::pow;

TEST(DifferenceTable, Rows)
{
    DifferenceTable<Rational> t({Rational(1), Rational(4), Rational(9), Rational(16)});
    EXPECT_EQ(t.entry(1, 0), 3);
    EXPECT_EQ(t.entry(2, 1), 2);
    EXPECT_EQ(t.entry(3, 0), 0);
    EXPECT_EQ(t.alternating(1), -3);
    EXPECT_THROW(t.entry(4, 0), std::out_of_range);
}

TEST(ForwardDifference, BinomialSign)
{
    // sum_k C(4,k)(-1)^k/(k+1) = 1/5
    std::vector<double> s;
    for (int k = 0; k <= 4; ++k) s.push_back(1.0 / (k + 1));
    EXPECT_NEAR(forward_difference(s, 4), 0.2, 1e-15);
    EXPECT_NEAR(forward_difference({1, 2, 4}, 1), -1.0, 0);
    EXPECT_THROW(forward_difference({1, 2}, 2), std::out_of_range);
}

TEST(ForwardDifference, HighOrderIsExactOnTheSamples)
{
    // order 50 on rounded data: compare with the same samples in rationals
    std::vector<double> s;
    DifferenceTable<Rational> exact;
    for (int k = 0; k <= 50; ++k) {
        s.push_back(1.0 / (k + 1));
        exact.push(Rational(s.back()));
    }
    EXPECT_DOUBLE_EQ(forward_difference(s, 50), to_double(exact.alternating(50)));
    // moderate order stays close to the exact-data value 1/(n+1)
    EXPECT_NEAR(forward_difference(s, 20), 1.0 / 21, 1e-9);
}

TEST(HasseSum, Zeta2)
{
    auto f = [](const wide& x) { return wide(1 / x); };
    auto df = [](const wide& x) { return wide(-1 / (x * x)); };
    const auto r = hasse_sum(f, df, 1.0);
    EXPECT_TRUE(r.converged);
    EXPECT_LE(r.terms_used, 60u);
    EXPECT_NEAR(r.value, std::numbers::pi * std::numbers::pi / 6, 1e-14);
}

TEST(HasseSum, EulerGammaNumericDerivative)
{
    const auto r = hasse_sum([](const wide& x) { return wide(log(x)); }, 1.0);
    EXPECT_TRUE(r.converged);
    EXPECT_NEAR(r.value, -0.57721566490153286, 1e-14);
}

TEST(HasseSum, RawSeriesIsSlow)
{
    PrecisionPolicy p;
    auto f = [](const wide& x) { return wide(1 / x); };
    const auto r = hasse_sum(f, 1.0, p.raw());
    EXPECT_FALSE(r.converged);
    EXPECT_GT(std::abs(r.value - std::numbers::pi * std::numbers::pi / 6), 1e-3);
}

TEST(SondowSum, Log2)
{
    auto f = [](const wide& x) { return wide(1 / (x + 1)); };
    const auto r = sondow_sum(f, 0.5);
    EXPECT_TRUE(r.converged);
    EXPECT_NEAR(r.value, std::numbers::ln2, 1e-15);
    EXPECT_THROW(sondow_sum(f, 1.0), domain_error);
}

TEST(HasseSum, ExactPolynomialGivesBernoulli)
{
    // S[x^3](1/4) = B_3(1/4)
    std::vector<Rational> c{0, 0, 0, 1};
    EXPECT_EQ(hasse_sum_exact_polynomial(c, make_rational(1, 4)), bernoulli_poly(3, make_rational(1, 4)));
    EXPECT_EQ(hasse_sum_exact_polynomial(c, make_rational(1, 4)), make_rational(3, 64));
}

TEST(Policy, Validation)
{
    PrecisionPolicy p;
    p.n_max = 0;
    EXPECT_THROW(p.validate(), std::invalid_argument);
    p = {};
    p.rel_tol = -1;
    EXPECT_THROW(p.validate(), std::invalid_argument);
    EXPECT_EQ(PrecisionPolicy{}.raw().lift_floor, 0.0);
}
