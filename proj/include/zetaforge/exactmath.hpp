// Exact integer/rational arithmetic and the classical combinatorial families.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace zetaforge {

using BigInteger = boost::multiprecision::cpp_int;
// cpp_rational reduces to lowest terms with a positive denominator after
// every operation, so equality is structural.
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(long long num, long long den = 1)
{
    if (den == 0) throw std::domain_error("zero denominator");
    if (den < 0) return Rational(-BigInteger(num), -BigInteger(den));
    return Rational(BigInteger(num), BigInteger(den));
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline BigInteger factorial(std::size_t n)
{
    BigInteger r = 1;
    for (std::size_t i = 2; i <= n; ++i) r *= i;
    return r;
}

inline BigInteger binomial(std::size_t n, std::size_t k)
{
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInteger r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

/// Signed Stirling numbers of the first kind, x(x-1)...(x-n+1) = sum s(n,j) x^j.
/// Whole rows are cached; s(n+1,k) = s(n,k-1) - n s(n,k).
class StirlingTable {
public:
    BigInteger operator()(std::size_t n, std::size_t k)
    {
        std::lock_guard<std::mutex> lock(mu_);
        while (rows_.size() <= n) extend();
        if (k > n) return 0;
        return rows_[n][k];
    }

    std::vector<BigInteger> row(std::size_t n)
    {
        std::lock_guard<std::mutex> lock(mu_);
        while (rows_.size() <= n) extend();
        return rows_[n];
    }

private:
    void extend()
    {
        if (rows_.empty()) {
            rows_.push_back({BigInteger(1)});
            return;
        }
        const auto& prev = rows_.back();
        const std::size_t n = rows_.size() - 1;
        std::vector<BigInteger> next(n + 2);
        for (std::size_t k = 0; k <= n + 1; ++k) {
            BigInteger v = 0;
            if (k >= 1) v += prev[k - 1];
            if (k <= n) v -= BigInteger(n) * prev[k];
            next[k] = std::move(v);
        }
        rows_.push_back(std::move(next));
    }

    std::mutex mu_;
    std::vector<std::vector<BigInteger>> rows_;
};

inline StirlingTable& stirling_table()
{
    static StirlingTable t;
    return t;
}

inline BigInteger stirling1(std::size_t n, std::size_t k) { return stirling_table()(n, k); }

namespace detail {

inline Rational rational_pow(const Rational& x, std::size_t p)
{
    Rational r = 1;
    Rational b = x;
    while (p) {
        if (p & 1u) r *= b;
        p >>= 1;
        if (p) b *= b;
    }
    return r;
}

}  // namespace detail

/// B_m from sum_{n<=m} 1/(n+1) sum_k C(n,k)(-1)^k k^m.  B_1 = -1/2.
inline Rational bernoulli_number(std::size_t m)
{
    static std::mutex mu;
    static std::map<std::size_t, Rational> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(m);
        if (it != cache.end()) return it->second;
    }
    Rational total = 0;
    for (std::size_t n = 0; n <= m; ++n) {
        BigInteger inner = 0;
        for (std::size_t k = 0; k <= n; ++k) {
            BigInteger term = binomial(n, k) * boost::multiprecision::pow(BigInteger(k), static_cast<unsigned>(m));
            if (k & 1u) inner -= term;
            else inner += term;
        }
        total += Rational(inner, BigInteger(n + 1));
    }
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(m, total);
    return total;
}

/// B_m(x) = sum_{n<=m} 1/(n+1) sum_k C(n,k)(-1)^k (x+k)^m.
inline Rational bernoulli_poly(std::size_t m, const Rational& x)
{
    Rational total = 0;
    for (std::size_t n = 0; n <= m; ++n) {
        Rational inner = 0;
        for (std::size_t k = 0; k <= n; ++k) {
            Rational term = Rational(binomial(n, k)) * detail::rational_pow(x + Rational(k), m);
            if (k & 1u) inner -= term;
            else inner += term;
        }
        total += inner / Rational(n + 1);
    }
    return total;
}

/// E_p(u) = sum_{n<=p} 2^{-n} sum_k C(n,k)(-1)^k (u+k)^p.
inline Rational euler_poly(std::size_t p, const Rational& u)
{
    Rational total = 0;
    BigInteger two_n = 1;
    for (std::size_t n = 0; n <= p; ++n) {
        Rational inner = 0;
        for (std::size_t k = 0; k <= n; ++k) {
            Rational term = Rational(binomial(n, k)) * detail::rational_pow(u + Rational(k), p);
            if (k & 1u) inner -= term;
            else inner += term;
        }
        total += inner / Rational(two_n);
        two_n *= 2;
    }
    return total;
}

/// Grow-on-demand cache of H_n^{(r)}, keyed by order r.
class HarmonicTable {
public:
    Rational operator()(std::size_t n, std::size_t r)
    {
        if (r == 0) throw std::domain_error("harmonic order must be >= 1");
        std::lock_guard<std::mutex> lock(mu_);
        auto& col = values_[r];
        if (col.empty()) col.push_back(Rational(0));
        while (col.size() <= n) {
            const std::size_t k = col.size();
            col.push_back(col.back() + Rational(BigInteger(1), boost::multiprecision::pow(BigInteger(k), static_cast<unsigned>(r))));
        }
        return col[n];
    }

    std::size_t max_n(std::size_t r)
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = values_.find(r);
        return it == values_.end() || it->second.empty() ? 0 : it->second.size() - 1;
    }

private:
    std::mutex mu_;
    std::map<std::size_t, std::vector<Rational>> values_;
};

inline HarmonicTable& harmonic_table()
{
    static HarmonicTable t;
    return t;
}

inline Rational harmonic(std::size_t n, std::size_t r = 1) { return harmonic_table()(n, r); }

}  // namespace zetaforge
