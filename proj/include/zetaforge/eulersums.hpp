// Finite binomial-harmonic identities in exact arithmetic, and infinite
// Euler sums sum_k P(H_k, H_k^(2), ...)/k^q by direct summation with an
// Euler-Maclaurin tail.
#pragma once

#include "quadrature.hpp"
#include "specialfn.hpp"

#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

namespace zetaforge {

/// sum_{k=1}^n C(n,k)(-1)^{k+1}/k^s.
inline Rational finite_S(std::size_t n, std::size_t s)
{
    Rational total = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        Rational term(binomial(n, k), boost::multiprecision::pow(BigInteger(k), static_cast<unsigned>(s)));
        if (k % 2) total += term;
        else total -= term;
    }
    return total;
}

/// sum over 1 <= i_1 <= ... <= i_depth <= n of 1/(i_1 ... i_depth).
inline Rational nested_harmonic(std::size_t n, std::size_t depth)
{
    // level[m] = sum over chains ending at or below m
    std::vector<Rational> level(n + 1, Rational(1));
    for (std::size_t d = 1; d <= depth; ++d) {
        std::vector<Rational> next(n + 1, Rational(0));
        for (std::size_t m = 1; m <= n; ++m) next[m] = next[m - 1] + level[m] / Rational(m);
        level = std::move(next);
    }
    return level[n];
}

struct FiniteIdentity {
    std::string name;
    std::size_t n_min = 1;
    std::function<Rational(std::size_t)> lhs;
    std::function<Rational(std::size_t)> rhs;
};

namespace detail {

inline Rational H(std::size_t n, std::size_t r = 1) { return harmonic(n, r); }

inline Rational signed_binomial(std::size_t n, std::size_t k)
{
    Rational b(binomial(n, k));
    return k % 2 ? b : Rational(-b);  // C(n,k)(-1)^{k+1}
}

/// k!/(k (1+x)...(k+x))
inline Rational apery_term(std::size_t k, const Rational& x)
{
    Rational p = 1;
    for (std::size_t i = 1; i <= k; ++i) p *= Rational(i) / (Rational(i) + x);
    return p / Rational(k);
}

}  // namespace detail

/// The exact identities of the finite family, each a pair of functions of n.
inline std::vector<FiniteIdentity> finite_identity_bank()
{
    using detail::H;
    using detail::signed_binomial;
    std::vector<FiniteIdentity> bank;
    bank.push_back({"S_n(1) = H_n", 1, [](std::size_t n) { return finite_S(n, 1); },
                    [](std::size_t n) { return H(n); }});
    bank.push_back({"S_n(2) = (H_n^2 + H_n^(2))/2", 1, [](std::size_t n) { return finite_S(n, 2); },
                    [](std::size_t n) { return (H(n) * H(n) + H(n, 2)) / 2; }});
    for (std::size_t s = 1; s <= 4; ++s)
        bank.push_back({"S_n(" + std::to_string(s) + ") = nested harmonic depth " + std::to_string(s), 1,
                        [s](std::size_t n) { return finite_S(n, s); },
                        [s](std::size_t n) { return nested_harmonic(n, s); }});
    bank.push_back({"S_n(3) = (sum H_k^2/k + sum H_k^(2)/k)/2", 1, [](std::size_t n) { return finite_S(n, 3); },
                    [](std::size_t n) {
                        Rational a = 0;
                        for (std::size_t k = 1; k <= n; ++k) a += (H(k) * H(k) + H(k, 2)) / Rational(k);
                        return a / 2;
                    }});
    bank.push_back({"Spiess 1", 1,
                    [](std::size_t n) {
                        Rational a = 0;
                        for (std::size_t k = 1; k <= n; ++k) a += Rational(1) / Rational(k * (n - k + 1));
                        return a;
                    },
                    [](std::size_t n) { return Rational(2) / Rational(n + 1) * H(n); }});
    bank.push_back({"Spiess 2", 1,
                    [](std::size_t n) {
                        Rational a = 0;
                        for (std::size_t k = 2; k <= n; ++k) a += Rational(2) / Rational(k * (n - k + 1)) * H(k - 1);
                        return a;
                    },
                    [](std::size_t n) { return Rational(3) / Rational(n + 1) * (H(n) * H(n) - H(n, 2)); }});
    bank.push_back({"Spiess 3", 1,
                    [](std::size_t n) {
                        Rational a = 0;
                        for (std::size_t k = 2; k <= n; ++k)
                            a += Rational(4) / Rational(k * (n - k + 1)) * H(k - 1) * H(n - k);
                        return a;
                    },
                    [](std::size_t n) {
                        const Rational h = H(n);
                        return Rational(4) / Rational(n + 1) * (h * h * h - 3 * h * H(n, 2) + 2 * H(n, 3));
                    }});
    bank.push_back({"sum C(n,k)(-1)^{k+1} H_k/k = H_n^(2)", 1,
                    [](std::size_t n) {
                        Rational a = 0;
                        for (std::size_t k = 1; k <= n; ++k) a += signed_binomial(n, k) * H(k) / Rational(k);
                        return a;
                    },
                    [](std::size_t n) { return H(n, 2); }});
    bank.push_back({"sum C(n,k)(-1)^{k+1} (1/k) sum_{j<=k} H_j/j = H_n^(3)", 1,
                    [](std::size_t n) {
                        Rational a = 0, inner = 0;
                        for (std::size_t k = 1; k <= n; ++k) {
                            inner += H(k) / Rational(k);
                            a += signed_binomial(n, k) * inner / Rational(k);
                        }
                        return a;
                    },
                    [](std::size_t n) { return H(n, 3); }});
    bank.push_back({"sum H_k^(2)/k = sum C(n,k)(-1)^{k+1} H_k/k^2", 1,
                    [](std::size_t n) {
                        Rational a = 0;
                        for (std::size_t k = 1; k <= n; ++k) a += H(k, 2) / Rational(k);
                        return a;
                    },
                    [](std::size_t n) {
                        Rational a = 0;
                        for (std::size_t k = 1; k <= n; ++k) a += signed_binomial(n, k) * H(k) / Rational(k * k);
                        return a;
                    }});
    for (const Rational& x : {make_rational(1, 2), make_rational(2), make_rational(3)})
        bank.push_back({"Apery telescoping x = " + x.str(), 1,
                        [x](std::size_t n) {
                            Rational a = 0;
                            for (std::size_t k = 1; k <= n; ++k) a += detail::apery_term(k, x);
                            return a;
                        },
                        [x](std::size_t n) { return Rational(1) / x - detail::apery_term(n, x) * Rational(n) / x; }});
    return bank;
}

enum class EulerPattern { Linear, Square, Cube, Mixed12, CubeShifted };

/// Linear(p,q): H^(p)_k/k^q.  Square, Cube: (H_k)^2, (H_k)^3 over k^q.
/// Mixed12: H_k H_k^(2)/k^q.  CubeShifted: (H_k)^3/(k+1)^q.
struct EulerSumKey {
    EulerPattern pattern = EulerPattern::Linear;
    unsigned p = 1;
    unsigned q = 2;

    static EulerSumKey linear(unsigned p, unsigned q) { return {EulerPattern::Linear, p, q}; }
    static EulerSumKey square(unsigned q) { return {EulerPattern::Square, 0, q}; }
    static EulerSumKey cube(unsigned q) { return {EulerPattern::Cube, 0, q}; }
    static EulerSumKey mixed12(unsigned q) { return {EulerPattern::Mixed12, 0, q}; }
    static EulerSumKey cube_shifted(unsigned q) { return {EulerPattern::CubeShifted, 0, q}; }

    std::string str() const
    {
        switch (pattern) {
        case EulerPattern::Linear: return "Linear(" + std::to_string(p) + "," + std::to_string(q) + ")";
        case EulerPattern::Square: return "Square(" + std::to_string(q) + ")";
        case EulerPattern::Cube: return "Cube(" + std::to_string(q) + ")";
        case EulerPattern::Mixed12: return "Mixed12(" + std::to_string(q) + ")";
        case EulerPattern::CubeShifted: return "CubeShifted(" + std::to_string(q) + ")";
        }
        return "?";
    }
};

struct TailEstimate {
    double partial = 0;
    double correction = 0;
    double bound = 0;

    double value() const { return partial + correction; }
};

/// Closed forms: odd-weight linear sums by the Flajolet-Salvy formula
/// (zeta(1) read as zero), plus a table of even-weight and nonlinear values.
inline double euler_sum_closed(const EulerSumKey& key)
{
    auto z = [](int m) { return m == 1 ? 0.0 : riemann_zeta_int(m); };
    const double z2 = z(2), z3 = z(3), z4 = z(4), z5 = z(5);
    const unsigned q = key.q;
    switch (key.pattern) {
    case EulerPattern::Linear: {
        const unsigned p = key.p;
        if (p == 2 && q == 2) return 1.75 * z4;
        if (p == 1 && q == 3) return 1.25 * z4;
        if (q < 2 || p < 1 || (p + q) % 2 == 0) break;
        const unsigned m = p + q;
        const double sp = p % 2 ? -1.0 : 1.0;  // (-1)^p
        auto C = [](unsigned n, unsigned k) { return to_double(Rational(binomial(n, k))); };
        double v = z(static_cast<int>(m)) * (0.5 - 0.5 * sp * C(m - 1, p) - 0.5 * sp * C(m - 1, q)) +
                   0.5 * (1 - sp) * z(static_cast<int>(p)) * z(static_cast<int>(q));
        for (unsigned k = 1; k <= p / 2; ++k)
            v += sp * C(m - 2 * k - 1, q - 1) * z(static_cast<int>(2 * k)) * z(static_cast<int>(m - 2 * k));
        for (unsigned k = 1; k <= q / 2; ++k)
            v += sp * C(m - 2 * k - 1, p - 1) * z(static_cast<int>(2 * k)) * z(static_cast<int>(m - 2 * k));
        return v;
    }
    case EulerPattern::Square:
        if (q == 2) return 4.25 * z4;
        if (q == 3) return 3.5 * z5 - z2 * z3;
        break;
    case EulerPattern::Cube:
        if (q == 2) return 10 * z5 + z2 * z3;
        break;
    case EulerPattern::Mixed12:
        if (q == 2) return z5 + z2 * z3;
        break;
    case EulerPattern::CubeShifted:
        if (q == 2) return 7.5 * z5 + z2 * z3;
        break;
    }
    throw domain_error("euler_sum_closed: no closed form for " + key.str());
}

namespace detail {

/// Smooth extension of (H_x^(1), ..., H_x^(4)) to real x >= 1.
inline std::array<double, 5> smooth_harmonics(double x)
{
    std::array<double, 5> h{};
    h[1] = (x + 1 >= 8 ? digamma_asymptotic(x + 1) : digamma(x + 1).value) + constants().euler_gamma;
    for (int r = 2; r <= 4; ++r) h[r] = riemann_zeta_int(r) - hurwitz_zeta_em(r, x + 1);
    return h;
}

}  // namespace detail

/// sum_{k>=a} f(k) ~ int_a^inf f + f(a)/2 - f'(a)/12 + f'''(a)/720, for f
/// smooth and decaying on [a, inf).  partial is left at zero; bound is the
/// size of the next Euler-Maclaurin term.
template <class F>
TailEstimate euler_maclaurin_tail(F&& f, double a)
{
    const double fa = f(a);
    // int_a^inf f(x) dx with x = a/t
    auto g = [&](double t) { return f(a / t) * a / (t * t); };
    const double scale = std::abs(fa) * a + 1e-300;
    const QuadResult in = adaptive_integrate(g, 0.0, 1.0, 1e-14 * scale, true, false);
    double h = 1e-3 * a;
    const double d1 = (f(a + h) - f(a - h)) / (2 * h);
    h = 0.05 * a;
    const double d3 = (f(a + 2 * h) - 2 * f(a + h) + 2 * f(a - h) - f(a - 2 * h)) / (2 * h * h * h);
    h = 0.1 * a;
    const double d5 = (-f(a - 3 * h) + 4 * f(a - 2 * h) - 5 * f(a - h) + 5 * f(a + h) - 4 * f(a + 2 * h) +
                       f(a + 3 * h)) /
                      (2 * std::pow(h, 5));
    TailEstimate t;
    t.correction = in.value + 0.5 * fa - d1 / 12 + d3 / 720;
    t.bound = std::abs(d5) / 30240 + in.est_error;
    return t;
}

/// sum_{k>=1} g(H_k, k) where g takes the array (_, H^(1), .., H^(4)) and k.
/// The first `terms` summands are added directly with compensated running
/// harmonic numbers; the rest by euler_maclaurin_tail on the smooth extension.
template <class G>
TailEstimate harmonic_series(G&& g, std::size_t terms)
{
    constexpr double eps = std::numeric_limits<double>::epsilon();
    std::array<double, 5> h{}, hc{};
    double sum = 0, comp = 0;
    for (std::size_t k = 1; k <= terms; ++k) {
        const double dk = static_cast<double>(k);
        double p = 1;
        for (int r = 1; r <= 4; ++r) {
            p /= dk;
            const double y = p - hc[r];
            const double t = h[r] + y;
            hc[r] = (t - h[r]) - y;
            h[r] = t;
        }
        const double y = g(h, dk) - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    TailEstimate est =
        euler_maclaurin_tail([&g](double x) { return g(detail::smooth_harmonics(x), x); }, static_cast<double>(terms + 1));
    est.partial = sum;
    est.bound += 64 * eps * (std::abs(sum) + 1);
    return est;
}

namespace detail {

inline double euler_summand(const EulerSumKey& key, const std::array<double, 5>& h, double k)
{
    const double q = key.q;
    switch (key.pattern) {
    case EulerPattern::Linear: return h[key.p] / std::pow(k, q);
    case EulerPattern::Square: return h[1] * h[1] / std::pow(k, q);
    case EulerPattern::Cube: return h[1] * h[1] * h[1] / std::pow(k, q);
    case EulerPattern::Mixed12: return h[1] * h[2] / std::pow(k, q);
    case EulerPattern::CubeShifted: return h[1] * h[1] * h[1] / std::pow(k + 1, q);
    }
    return 0;
}

}  // namespace detail

/// Direct partial sum of `terms` summands plus tail correction.
inline TailEstimate euler_sum_numeric(const EulerSumKey& key, std::size_t terms, const PrecisionPolicy& policy = {})
{
    policy.validate();
    if (terms < 1000) throw domain_error("euler_sum_numeric needs at least 1000 terms");
    if (key.q < 2 || (key.pattern == EulerPattern::Linear && (key.p < 1 || key.p > 4)))
        throw domain_error("euler_sum_numeric: unsupported key " + key.str());
    return harmonic_series([&key](const std::array<double, 5>& h, double k) { return detail::euler_summand(key, h, k); },
                           terms);
}

/// zeta_a(s) for s = 2..5 as sum_n P_s(H_n, ..)/(n 2^n), where P_s is the
/// cycle-index polynomial of S_{s-1} in the harmonic numbers.
inline SeriesResult zeta_a_harmonic(unsigned s, const PrecisionPolicy& policy = {})
{
    policy.validate();
    if (s < 2 || s > 5) throw domain_error("zeta_a_harmonic supports s = 2..5");
    double h1 = 0, h2 = 0, h3 = 0, h4 = 0;
    double sum = 0, w = 1;
    std::size_t quiet = 0;
    SeriesResult r;
    for (std::size_t n = 1; n <= 200; ++n) {
        const double dn = static_cast<double>(n);
        h1 += 1 / dn;
        h2 += 1 / (dn * dn);
        h3 += 1 / (dn * dn * dn);
        h4 += 1 / (dn * dn * dn * dn);
        w *= 0.5;
        double poly = 0;
        switch (s) {
        case 2: poly = h1; break;
        case 3: poly = 0.5 * (h1 * h1 + h2); break;
        case 4: poly = h1 * h1 * h1 / 6 + 0.5 * h1 * h2 + h3 / 3; break;
        case 5:
            poly = (h1 * h1 * h1 * h1 + 6 * h1 * h1 * h2 + 8 * h1 * h3 + 3 * h2 * h2 + 6 * h4) / 24;
            break;
        }
        const double term = poly * w / dn;
        sum += term;
        r.terms_used = n;
        if (std::abs(term) <= std::max(policy.abs_tol, policy.rel_tol * std::abs(sum))) {
            r.est_error = std::max(r.est_error, std::abs(term));
            if (++quiet >= policy.stabilization_count) {
                r.converged = true;
                break;
            }
        } else {
            quiet = 0;
            r.est_error = 0;
        }
    }
    r.value = sum;
    return r;
}

namespace detail {

/// Gamma(x+1/2)/(sqrt(pi) Gamma(x+1)) for x >= 1000.
inline double central_binomial_ratio(double x)
{
    const double i = 1 / x;
    const double s = 1 + i * (-1.0 / 8 + i * (1.0 / 128 + i * (5.0 / 1024 + i * (-21.0 / 32768 +
                                                                                i * (-399.0 / 262144 + i * 869.0 / 4194304)))));
    return s / std::sqrt(std::numbers::pi * x);
}

}  // namespace detail

/// sum_{k>=1} [(2k)!/(2^{2k} (k!)^2)]^3 sum_{j<k} 1/(2j+1).
inline TailEstimate morley_sum(std::size_t terms = 10000)
{
    if (terms < 1000) throw domain_error("morley_sum needs at least 1000 terms");
    double c = 1, odd = 0, sum = 0, comp = 0;
    for (std::size_t k = 1; k <= terms; ++k) {
        c *= (2.0 * k - 1) / (2.0 * k);
        odd += 1 / (2.0 * k - 1);
        const double y = c * c * c * odd - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    auto f = [](double x) {
        const double r = detail::central_binomial_ratio(x);
        const double odd_sum = digamma_asymptotic(2 * x + 1) - 0.5 * digamma_asymptotic(x + 1) + 0.5 * constants().euler_gamma;
        return r * r * r * odd_sum;
    };
    TailEstimate est = euler_maclaurin_tail(f, static_cast<double>(terms + 1));
    est.partial = sum;
    est.bound += 64 * std::numeric_limits<double>::epsilon() * (sum + 1);
    return est;
}

/// zeta(p+1) = (-1)^p sum_k (-1)^k s(k,p)/(k k!), with the summand rewritten
/// as e_{p-1}(1, 1/2, .., 1/(k-1))/k^2 so it can be run to large k.  p = 2, 3.
inline TailEstimate shen_series(unsigned p, std::size_t terms)
{
    if (p != 2 && p != 3) throw domain_error("shen_series supports p = 2 or 3");
    return harmonic_series(
        [p](const std::array<double, 5>& h, double k) {
            const double a = h[1] - 1 / k;          // H_{k-1}
            const double b = h[2] - 1 / (k * k);    // H_{k-1}^(2)
            const double e = p == 2 ? a : 0.5 * (a * a - b);
            return e / (k * k);
        },
        terms);
}

/// The exact Stirling-number form of the summand above, for small k.
inline Rational shen_term_exact(unsigned p, std::size_t k)
{
    Rational t(stirling1(k, p), factorial(k) * BigInteger(k));
    if ((p + k) % 2) t = -t;
    return t;
}

}  // namespace zetaforge
