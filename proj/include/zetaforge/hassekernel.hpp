// Forward-difference tables and the weighted difference series
//   sum_n w(n) D^n f(x),   D^n f(x) = sum_k C(n,k) (-1)^k f(x+k)
// with w(n) = 1/(n+1) (Hasse) or w(n) = v^{n+1} (Sondow).
//
// Samples and differences are carried in 50-digit binary floating point.
// Order-n differences of smooth data lose about n bits, which binary64
// cannot absorb past n ~ 40; the wide type keeps every entry good to well
// below 1e-20 for the orders used here.  Results come back as binary64.
#pragma once

#include "exactmath.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace zetaforge {

using wide = boost::multiprecision::cpp_bin_float_50;

struct PrecisionPolicy {
    double rel_tol = 1e-15;
    double abs_tol = 1e-16;
    std::size_t n_max = 60;
    std::size_t stabilization_count = 5;
    // Before summing, the argument is lifted to at least this value with
    // S f(u) = S f(u+1) - f'(u).  Zero turns the lift off (raw series).
    double lift_floor = 20.0;

    void validate() const
    {
        if (!(rel_tol > 0) || !(abs_tol > 0)) throw std::invalid_argument("tolerances must be positive");
        if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
        if (stabilization_count < 1) throw std::invalid_argument("stabilization_count must be >= 1");
        if (!(lift_floor >= 0)) throw std::invalid_argument("lift_floor must be >= 0");
    }

    PrecisionPolicy raw() const
    {
        PrecisionPolicy p = *this;
        p.lift_floor = 0;
        return p;
    }
};

struct SeriesResult {
    double value = 0;
    std::size_t terms_used = 0;
    double est_error = 0;
    bool converged = false;
};

class convergence_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

inline double to_double(const wide& w) { return static_cast<double>(w); }

/// Triangular table; row 0 is the samples, row n entry j is
/// row(n-1)[j+1] - row(n-1)[j].  Rows grow as samples are appended.
template <class T>
class DifferenceTable {
public:
    DifferenceTable() = default;

    explicit DifferenceTable(const std::vector<T>& samples)
    {
        for (const auto& s : samples) push(s);
    }

    void push(const T& sample)
    {
        const std::size_t m = rows_.empty() ? 0 : rows_[0].size();
        if (rows_.size() <= m) rows_.emplace_back();
        rows_[0].push_back(sample);
        for (std::size_t n = 1; n <= m; ++n) {
            const auto& up = rows_[n - 1];
            rows_[n].push_back(up[m - n + 1] - up[m - n]);
        }
    }

    std::size_t samples() const { return rows_.empty() ? 0 : rows_[0].size(); }

    const T& entry(std::size_t n, std::size_t j) const
    {
        if (n >= rows_.size() || j >= rows_[n].size()) throw std::out_of_range("difference table entry");
        return rows_[n][j];
    }

    /// Alternating-sign difference sum_k C(n,k)(-1)^k f(k) at shift 0.
    T alternating(std::size_t n) const
    {
        const T& e = entry(n, 0);
        return (n & 1u) ? T(-e) : e;
    }

private:
    std::vector<std::vector<T>> rows_;
};

/// sum_k C(n,k)(-1)^k samples[k] by iterated differencing.  The table is
/// formed in the wide type, where differences of binary64 data stay exact
/// up to order ~100.
inline double forward_difference(const std::vector<double>& samples, std::size_t n)
{
    if (n >= samples.size()) throw std::out_of_range("difference order exceeds samples");
    std::vector<wide> row(samples.begin(), samples.begin() + static_cast<std::ptrdiff_t>(n + 1));
    for (std::size_t level = 1; level <= n; ++level)
        for (std::size_t j = 0; j + level <= n; ++j) row[j] = row[j + 1] - row[j];
    wide d = row[0];
    if (n & 1u) d = -d;
    return to_double(d);
}

template <class F>
concept WideFunction = std::invocable<F, const wide&>;

namespace detail {

struct WideRun {
    wide value = 0;
    std::size_t terms = 0;
    wide err = 0;
    bool converged = false;
};

// offset is subtracted from the running sum before the relative test, so
// the tolerance applies to the caller's final value.
template <class F, class W>
WideRun difference_series(F& f, const wide& x0, W weight, const PrecisionPolicy& pol, const wide& offset = 0)
{
    using boost::multiprecision::abs;
    WideRun run;
    std::vector<wide> diag;
    diag.reserve(pol.n_max + 1);
    std::size_t quiet = 0;
    wide last = 0;
    for (std::size_t n = 0; n <= pol.n_max; ++n) {
        wide carry = f(x0 + n);
        for (std::size_t j = 0; j < diag.size(); ++j) {
            wide next = carry - diag[j];
            diag[j] = carry;
            carry = next;
        }
        diag.push_back(carry);
        if (n & 1u) carry = -carry;
        const wide term = weight(n) * carry;
        run.value += term;
        run.terms = n + 1;
        last = abs(term);
        const wide threshold = std::max<wide>(wide(pol.abs_tol), wide(pol.rel_tol) * abs(run.value - offset));
        if (last <= threshold) {
            run.err = std::max(run.err, last);
            if (++quiet >= pol.stabilization_count) {
                run.converged = true;
                return run;
            }
        } else {
            quiet = 0;
            run.err = 0;
        }
    }
    run.err = last;
    return run;
}

/// Fourth-order derivative estimate in the wide type.
template <class F>
wide numeric_derivative(F& f, const wide& x)
{
    using boost::multiprecision::abs;
    const wide h = wide(1e-10) * std::max<wide>(wide(1), abs(x));
    if (x > 2 * h)
        return (8 * (f(x + h) - f(x - h)) - (f(x + 2 * h) - f(x - 2 * h))) / (12 * h);
    return (-25 * f(x) + 48 * f(x + h) - 36 * f(x + 2 * h) + 16 * f(x + 3 * h) - 3 * f(x + 4 * h)) / (12 * h);
}

template <class F, class DF>
SeriesResult lifted_hasse(F& f, DF& df, double shift, const PrecisionPolicy& pol)
{
    pol.validate();
    if (!std::isfinite(shift)) throw domain_error("shift must be finite");
    std::size_t lift = 0;
    if (pol.lift_floor > 0 && shift < pol.lift_floor)
        lift = static_cast<std::size_t>(std::ceil(pol.lift_floor - shift));
    const wide u(shift);
    wide correction = 0;
    for (std::size_t j = 0; j < lift; ++j) correction += df(u + j);
    auto run = difference_series(f, u + lift, [](std::size_t n) { return wide(1) / (n + 1); }, pol, correction);
    SeriesResult r;
    r.value = to_double(wide(run.value - correction));
    r.terms_used = run.terms;
    r.est_error = to_double(run.err);
    r.converged = run.converged;
    return r;
}

}  // namespace detail

/// sum_n 1/(n+1) D^n[f](shift), with f evaluated at the absolute argument
/// x = shift + k.  df is the derivative of f, used by the argument lift.
template <WideFunction F, WideFunction DF>
SeriesResult hasse_sum(F&& f, DF&& df, double shift, const PrecisionPolicy& policy = {})
{
    return detail::lifted_hasse(f, df, shift, policy);
}

template <WideFunction F>
SeriesResult hasse_sum(F&& f, double shift, const PrecisionPolicy& policy = {})
{
    auto df = [&f](const wide& x) { return detail::numeric_derivative(f, x); };
    return detail::lifted_hasse(f, df, shift, policy);
}

/// sum_n v^{n+1} D^n[f](shift).  Geometric weight; no lift is needed.
template <WideFunction F>
SeriesResult sondow_sum(F&& f, double v, const PrecisionPolicy& policy = {}, double shift = 0.0)
{
    policy.validate();
    if (!(v > 0 && v < 1)) throw domain_error("sondow weight must lie in (0,1)");
    const wide wv(v);
    auto run = detail::difference_series(
        f, wide(shift), [&wv](std::size_t n) { return boost::multiprecision::pow(wv, static_cast<int>(n + 1)); }, policy);
    SeriesResult r;
    r.value = to_double(run.value);
    r.terms_used = run.terms;
    r.est_error = to_double(run.err);
    r.converged = run.converged;
    return r;
}

/// Exact sum_{n<=d} 1/(n+1) D^n[p](shift) for p(x) = sum_i coeffs[i] x^i,
/// sampled at x = shift + k.  With p(x) = x^d this is B_d(shift).
inline Rational hasse_sum_exact_polynomial(const std::vector<Rational>& coeffs, const Rational& shift)
{
    if (coeffs.empty()) return 0;
    const std::size_t d = coeffs.size() - 1;
    auto p = [&coeffs](const Rational& x) {
        Rational acc = 0;
        for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
        return acc;
    };
    DifferenceTable<Rational> table;
    for (std::size_t k = 0; k <= d; ++k) table.push(p(shift + Rational(k)));
    Rational total = 0;
    for (std::size_t n = 0; n <= d; ++n) total += table.alternating(n) / Rational(n + 1);
    return total;
}

}  // namespace zetaforge
