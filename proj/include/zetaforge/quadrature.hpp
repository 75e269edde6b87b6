// Adaptive Gauss-Kronrod (7/15) integration with quadratic endpoint
// substitution, plus the cotangent-moment and log-sine integrals.
#pragma once

#include "hassekernel.hpp"

#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <queue>
#include <vector>

namespace zetaforge {

struct QuadResult {
    double value = 0;
    double est_error = 0;
    std::size_t evaluations = 0;
};

namespace detail {

// Kronrod abscissae (descending, last is the centre) and weights; every
// other abscissa is a Gauss node.
inline constexpr std::array<double, 8> kronrod_x = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kronrod_w = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> gauss_w = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a, b, value, err, resabs;
    bool operator<(const Panel& o) const { return err < o.err; }
};

template <class G>
Panel gk15(G& g, double a, double b)
{
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = g(c);
    double k = fc * kronrod_w[7];
    double gs = fc * gauss_w[3];
    double absk = std::abs(fc) * kronrod_w[7];
    for (std::size_t i = 0; i < 7; ++i) {
        const double dx = h * kronrod_x[i];
        const double f1 = g(c - dx);
        const double f2 = g(c + dx);
        k += kronrod_w[i] * (f1 + f2);
        absk += kronrod_w[i] * (std::abs(f1) + std::abs(f2));
        if (i % 2 == 1) gs += gauss_w[i / 2] * (f1 + f2);
    }
    return {a, b, k * h, std::abs((k - gs) * h), absk * std::abs(h)};
}

template <class G>
QuadResult adapt(G& g, double a, double b, double tol, std::size_t max_panels)
{
    constexpr double eps = std::numeric_limits<double>::epsilon();
    std::priority_queue<Panel> heap;
    heap.push(gk15(g, a, b));
    std::size_t panels = 1;
    double total = heap.top().value;
    double err = heap.top().err;
    while (err > tol) {
        Panel worst = heap.top();
        // A panel whose Gauss/Kronrod gap is at rounding level cannot be
        // improved by splitting.
        if (worst.err <= 50 * eps * worst.resabs) break;
        if (panels >= max_panels)
            throw convergence_error("quadrature tolerance not reached within panel budget");
        heap.pop();
        const double m = 0.5 * (worst.a + worst.b);
        Panel left = gk15(g, worst.a, m);
        Panel right = gk15(g, m, worst.b);
        total += left.value + right.value - worst.value;
        err += left.err + right.err - worst.err;
        heap.push(left);
        heap.push(right);
        ++panels;
    }
    // Re-add from the pieces to shed the running-update drift.
    double value = 0, e = 0, comp = 0;
    std::size_t count = 0;
    while (!heap.empty()) {
        const Panel p = heap.top();
        heap.pop();
        const double y = p.value - comp;
        const double t = value + y;
        comp = (t - value) - y;
        value = t;
        e += p.err;
        ++count;
    }
    (void)total;
    return {value, e, (2 * count - 1) * 15};
}

}  // namespace detail

/// Integral of f over [a,b].  A flagged endpoint is approached through
/// t = a + (b-a) s^2 (or the mirror image), which turns logarithmic and
/// square-root endpoint behaviour into smooth integrands.
template <class F>
QuadResult adaptive_integrate(F&& f, double a, double b, double tol = 1e-13, bool singular_left = false,
                              bool singular_right = false, std::size_t max_panels = 10000)
{
    if (!(a < b)) throw domain_error("integration interval must satisfy a < b");
    if (!(tol > 0)) throw domain_error("tolerance must be positive");
    const double w = b - a;
    if (singular_left && singular_right) {
        const double m = a + 0.5 * w;
        QuadResult l = adaptive_integrate(f, a, m, 0.5 * tol, true, false, max_panels / 2);
        QuadResult r = adaptive_integrate(f, m, b, 0.5 * tol, false, true, max_panels / 2);
        return {l.value + r.value, l.est_error + r.est_error, l.evaluations + r.evaluations};
    }
    if (singular_left) {
        auto g = [&](double s) { return 2 * w * s * f(a + w * s * s); };
        return detail::adapt(g, 0.0, 1.0, tol, max_panels);
    }
    if (singular_right) {
        auto g = [&](double s) { return 2 * w * s * f(b - w * s * s); };
        return detail::adapt(g, 0.0, 1.0, tol, max_panels);
    }
    auto g = [&](double t) { return f(t); };
    return detail::adapt(g, a, b, tol, max_panels);
}

/// pi u cot(pi u), continuous at u = 0.
inline double pi_u_cot_pi_u(double u)
{
    constexpr double pi = std::numbers::pi;
    if (std::abs(u) < 1e-3) {
        // 1 - 2 sum zeta(2k) u^{2k}
        const double u2 = u * u;
        const double z2 = pi * pi / 6, z4 = std::pow(pi, 4) / 90, z6 = std::pow(pi, 6) / 945;
        return 1 - 2 * u2 * (z2 + u2 * (z4 + u2 * z6));
    }
    return pi * u / std::tan(pi * u);
}

/// int_0^x pi u^n cot(pi u) du for n in {1, 2} and 0 < x < 1.
inline QuadResult cot_moment(int n, double x, double tol = 1e-14)
{
    if (n != 1 && n != 2) throw domain_error("cot_moment supports n = 1 or 2");
    if (!(x > 0 && x < 1)) throw domain_error("cot_moment needs 0 < x < 1");
    auto f = [n](double u) { return (n == 1 ? 1.0 : u) * pi_u_cot_pi_u(u); };
    return adaptive_integrate(f, 0.0, x, tol);
}

/// int_0^x log(2 sin pi u) du for 0 < x <= 1.
inline QuadResult log_sine_integral(double x, double tol = 1e-14)
{
    if (!(x > 0 && x <= 1)) throw domain_error("log_sine_integral needs 0 < x <= 1");
    auto f = [](double u) { return std::log(2 * std::sin(std::numbers::pi * u)); };
    return adaptive_integrate(f, 0.0, x, tol, true, x == 1.0);
}

}  // namespace zetaforge
