// Catalogue of identities as LHS/RHS evaluator pairs, and the suite runner.
//
// Numeric records evaluate both sides at a short list of points and take
// the worst |lhs - rhs|.  Exact records compare rationals over a list of
// cases (usually n = 1..30) and pass only on equality.
#pragma once

#include "eulersums.hpp"
#include "quadrature.hpp"
#include "specialfn.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <ctime>
#include <functional>
#include <iomanip>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace zetaforge {

enum class Group { FINITE, HASSE, EULER, LOGSERIES, HURWITZ, INTEGRAL };
enum class Cost { FAST, SLOW };
enum class Status { PASS, FAIL, NO_CONVERGE };

inline const char* to_string(Group g)
{
    switch (g) {
    case Group::FINITE: return "FINITE";
    case Group::HASSE: return "HASSE";
    case Group::EULER: return "EULER";
    case Group::LOGSERIES: return "LOGSERIES";
    case Group::HURWITZ: return "HURWITZ";
    case Group::INTEGRAL: return "INTEGRAL";
    }
    return "?";
}

inline const char* to_string(Cost c) { return c == Cost::FAST ? "FAST" : "SLOW"; }

inline const char* to_string(Status s)
{
    switch (s) {
    case Status::PASS: return "PASS";
    case Status::FAIL: return "FAIL";
    case Status::NO_CONVERGE: return "NO_CONVERGE";
    }
    return "?";
}

inline std::optional<Group> parse_group(const std::string& s)
{
    for (Group g : {Group::FINITE, Group::HASSE, Group::EULER, Group::LOGSERIES, Group::HURWITZ, Group::INTEGRAL})
        if (s == to_string(g)) return g;
    return std::nullopt;
}

inline std::optional<Cost> parse_cost(const std::string& s)
{
    if (s == "FAST") return Cost::FAST;
    if (s == "SLOW") return Cost::SLOW;
    return std::nullopt;
}

/// One side of an identity at one point.
struct Side {
    double value = 0;
    std::size_t terms = 0;
    bool converged = true;
};

inline Side operator+(Side a, const Side& b) { return {a.value + b.value, a.terms + b.terms, a.converged && b.converged}; }
inline Side operator-(Side a, const Side& b) { return {a.value - b.value, a.terms + b.terms, a.converged && b.converged}; }
inline Side operator+(Side a, double b) { return {a.value + b, a.terms, a.converged}; }
inline Side operator-(Side a, double b) { return {a.value - b, a.terms, a.converged}; }
inline Side operator*(double k, Side a) { return {k * a.value, a.terms, a.converged}; }
inline Side operator+(double b, Side a) { return a + b; }
inline Side operator-(double b, Side a) { return {b - a.value, a.terms, a.converged}; }

inline Side side(const SeriesResult& r) { return {r.value, r.terms_used, r.converged}; }
inline Side side(const QuadResult& q) { return {q.value, q.evaluations, true}; }
inline Side side(const TailEstimate& t, std::size_t terms) { return {t.value(), terms, true}; }
inline Side side(double v) { return {v, 0, true}; }

using Evaluator = std::function<Side(double point, const PrecisionPolicy&)>;
using ExactCase = std::function<std::pair<Rational, Rational>(std::size_t)>;

struct IdentityRecord {
    std::string id;
    Group group = Group::HASSE;
    std::string reference;
    double tolerance = 0;  // zero for exact records
    Cost cost = Cost::FAST;
    std::vector<double> points{0.0};
    Evaluator lhs;
    Evaluator rhs;
    std::size_t exact_cases = 0;
    ExactCase exact_case;

    bool exact() const { return static_cast<bool>(exact_case); }
};

struct IdentityOutcome {
    std::string id;
    Group group = Group::HASSE;
    double lhs_value = 0;
    double rhs_value = 0;
    double residual = 0;
    double tolerance = 0;
    Status status = Status::FAIL;
    double elapsed = 0;
    std::size_t terms = 0;
    std::string note;
};

class unknown_id : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Natural order on ids: digit runs compare as numbers.
inline bool id_less(const std::string& a, const std::string& b)
{
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (std::isdigit(static_cast<unsigned char>(a[i])) && std::isdigit(static_cast<unsigned char>(b[j]))) {
            std::size_t ie = i, je = j;
            while (ie < a.size() && std::isdigit(static_cast<unsigned char>(a[ie]))) ++ie;
            while (je < b.size() && std::isdigit(static_cast<unsigned char>(b[je]))) ++je;
            const unsigned long long x = std::stoull(a.substr(i, ie - i)), y = std::stoull(b.substr(j, je - j));
            if (x != y) return x < y;
            i = ie;
            j = je;
        } else {
            if (a[i] != b[j]) return a[i] < b[j];
            ++i;
            ++j;
        }
    }
    return a.size() - i < b.size() - j;
}

class Catalogue {
public:
    void add(IdentityRecord r)
    {
        if (index_.count(r.id)) throw std::logic_error("duplicate identity id " + r.id);
        if (!r.exact() && !(r.tolerance > 0)) throw std::logic_error("tolerance must be positive for " + r.id);
        if (!r.exact() && (!r.lhs || !r.rhs || r.points.empty())) throw std::logic_error("incomplete record " + r.id);
        index_[r.id] = records_.size();
        records_.push_back(std::move(r));
    }

    const std::vector<IdentityRecord>& records() const { return records_; }
    std::size_t size() const { return records_.size(); }

    const IdentityRecord& at(const std::string& id) const
    {
        auto it = index_.find(id);
        if (it == index_.end()) throw unknown_id("unknown identity id: " + id);
        return records_[it->second];
    }

    bool contains(const std::string& id) const { return index_.count(id) > 0; }

private:
    std::vector<IdentityRecord> records_;
    std::map<std::string, std::size_t> index_;
};

namespace detail {

inline double pi() { return std::numbers::pi; }
inline double zeta_int(int m) { return riemann_zeta_int(m); }

/// psi(u) by upward recurrence into the asymptotic range; independent of
/// the Hasse series and used as the oracle for it.
inline double digamma_ref(double u)
{
    double shift = 0;
    while (u < 10) {
        shift += 1 / u;
        u += 1;
    }
    return digamma_asymptotic(u) - shift;
}

inline double log_g(double u, const PrecisionPolicy& p) { return barnes_g_log(u, p); }

inline Side zd(double s, double u, const PrecisionPolicy& p) { return side(hurwitz_zeta_deriv(s, u, p)); }

inline Side quad(const std::function<double(double)>& f, double a, double b, bool sl = false, bool sr = false,
                 double tol = 1e-12)
{
    return side(adaptive_integrate(f, a, b, tol, sl, sr));
}

/// Hasse sum of f with an analytic derivative, at shift u.
template <class F, class DF>
Side hasse(F f, DF df, double u, const PrecisionPolicy& p)
{
    return side(hasse_sum(std::move(f), std::move(df), u, p));
}

inline Rational rpow(const Rational& x, std::size_t k) { return rational_pow(x, k); }

inline Rational falling_sum(std::size_t n, const std::function<Rational(std::size_t)>& a)
{
    Rational s = 0;
    for (std::size_t k = 1; k <= n; ++k) s += a(k);
    return s;
}

inline Rational sgn_binom(std::size_t n, std::size_t k)
{
    Rational b(binomial(n, k));
    return k % 2 ? b : Rational(-b);  // C(n,k)(-1)^{k+1}
}

// --- exact family --------------------------------------------------------

inline void add_exact(Catalogue& c, std::string id, std::string ref, std::size_t cases, ExactCase f)
{
    IdentityRecord r;
    r.id = std::move(id);
    r.group = Group::FINITE;
    r.reference = std::move(ref);
    r.tolerance = 0;
    r.points.clear();
    r.exact_cases = cases;
    r.exact_case = std::move(f);
    c.add(std::move(r));
}

/// Cases n = n_min..30 from a bank entry.
inline ExactCase from_bank(const FiniteIdentity& b)
{
    return [b](std::size_t i) {
        const std::size_t n = b.n_min + i;
        return std::make_pair(b.lhs(n), b.rhs(n));
    };
}

inline void register_finite(Catalogue& c)
{
    using boost::multiprecision::pow;
    const auto bank = finite_identity_bank();
    auto n30 = [](const FiniteIdentity& b) { return 31 - b.n_min; };
    add_exact(c, "E4.1.7", "alternating binomial sum of 1/k equals the harmonic number", n30(bank[0]), from_bank(bank[0]));
    add_exact(c, "E4.1.15", "S_n(2) in harmonic numbers", n30(bank[1]), from_bank(bank[1]));
    add_exact(c, "E4.1.18a", "Dilcher: S_n(s) as a nested harmonic sum, s = 1..4", 120, [bank](std::size_t i) {
        const auto& b = bank[2 + i / 30];
        const std::size_t n = 1 + i % 30;
        return std::make_pair(b.lhs(n), b.rhs(n));
    });
    add_exact(c, "E4.1.22c", "S_n(3) through sums of H_k^2/k and H_k^(2)/k", n30(bank[6]), from_bank(bank[6]));
    add_exact(c, "E4.1.22d", "Spiess convolution identities, orders 1 to 3", 90, [bank](std::size_t i) {
        const auto& b = bank[7 + i / 30];
        const std::size_t n = 1 + i % 30;
        return std::make_pair(b.lhs(n), b.rhs(n));
    });
    add_exact(c, "E4.1.23b", "binomial transform of H_k/k", n30(bank[10]), from_bank(bank[10]));
    add_exact(c, "E4.1.25", "binomial transform of the depth-two nested sum", n30(bank[11]), from_bank(bank[11]));
    add_exact(c, "E4.1.27", "sum of H_k^(2)/k as a binomial transform", n30(bank[12]), from_bank(bank[12]));
    add_exact(c, "E4.2.2a", "Apery-type telescoping sum at x = 1/2, 2, 3", 90, [bank](std::size_t i) {
        const auto& b = bank[13 + i / 30];
        const std::size_t n = 1 + i % 30;
        return std::make_pair(b.lhs(n), b.rhs(n));
    });

    const Rational third = make_rational(1, 3);
    add_exact(c, "E4.1.6", "finite logarithmic integral in two forms, t = 1/3 and t = 2", 60, [third](std::size_t i) {
        const Rational t = i < 30 ? third : Rational(2);
        const std::size_t n = 1 + i % 30;
        Rational a = 0, b = 0;
        for (std::size_t k = 1; k <= n; ++k) {
            a += sgn_binom(n, k) * rpow(t, k) / Rational(k);
            b += (1 - rpow(1 - t, k)) / Rational(k);
        }
        return std::make_pair(a, b);
    });
    add_exact(c, "E4.1.13", "S_n(2) as the sum of H_k/k", 30, [](std::size_t i) {
        const std::size_t n = i + 1;
        return std::make_pair(finite_S(n, 2), falling_sum(n, [](std::size_t k) { return harmonic(k) / Rational(k); }));
    });
    add_exact(c, "E4.1.14", "sum of H_k/k in closed form", 30, [](std::size_t i) {
        const std::size_t n = i + 1;
        return std::make_pair(falling_sum(n, [](std::size_t k) { return harmonic(k) / Rational(k); }),
                              (harmonic(n) * harmonic(n) + harmonic(n, 2)) / 2);
    });
    add_exact(c, "E4.1.23a", "binomial transform of partial logarithmic sums, x = 1/3", 30, [third](std::size_t i) {
        const std::size_t n = i + 1;
        Rational a = 0, inner = 0, b = 0;
        for (std::size_t k = 1; k <= n; ++k) {
            inner += (rpow(1 - third, k) - 1) / Rational(k);
            a += sgn_binom(n, k) * inner / Rational(k);
            b -= rpow(third, k) / Rational(k * k);
        }
        return std::make_pair(a, b);
    });
    add_exact(c, "E4.1.24", "depth-three version of the previous sum, t = 1/3", 30, [third](std::size_t i) {
        const std::size_t n = i + 1;
        Rational a = 0, in1 = 0, in2 = 0, b = harmonic(n, 3);
        for (std::size_t k = 1; k <= n; ++k) {
            in1 += rpow(1 - third, k) / Rational(k);
            in2 += in1 / Rational(k);
            a += sgn_binom(n, k) * in2 / Rational(k);
            b -= rpow(third, k) / Rational(k * k * k);
        }
        return std::make_pair(a, b);
    });
    add_exact(c, "E4.1.26", "'t Woord relation for a binomial transform, a_k = 1/(k+1)^2", 30, [](std::size_t i) {
        const std::size_t n = i + 1;
        auto a = [](std::size_t k) { return Rational(1) / Rational((k + 1) * (k + 1)); };
        Rational lhs = 0, rhs = 0;
        for (std::size_t m = 1; m <= n; ++m) {
            Rational bm = 0;
            for (std::size_t k = 1; k <= m; ++k) bm += Rational(binomial(m, k)) * a(k);
            lhs += bm / Rational(m);
            rhs += Rational(binomial(n, m)) * a(m) / Rational(m);
        }
        return std::make_pair(lhs, rhs);
    });
    add_exact(c, "E4.2.1", "binomial sum of 1/(k+x) as a ratio of factorials, x = 1/2 and 3", 60, [](std::size_t i) {
        const Rational x = i < 30 ? make_rational(1, 2) : Rational(3);
        const std::size_t n = 1 + i % 30;
        Rational a = 0, den = x;
        for (std::size_t k = 0; k <= n; ++k) {
            const Rational b(binomial(n, k));
            a += (k % 2 ? Rational(-b) : b) / (Rational(k) + x);
            if (k) den *= Rational(k) + x;
        }
        return std::make_pair(a, Rational(factorial(n)) / den);
    });
    add_exact(c, "E4.2.3", "g(1) = 1/(n+1)", 30, [](std::size_t i) {
        const std::size_t n = i + 1;
        std::vector<Rational> s;
        for (std::size_t k = 0; k <= n; ++k) s.push_back(Rational(1) / Rational(k + 1));
        return std::make_pair(DifferenceTable<Rational>(s).alternating(n), Rational(1) / Rational(n + 1));
    });
    // sum_k C(n,k)(-1)^k/(1+k)^{p+1} for p = 1, 2, 3
    auto moment = [](std::size_t n, std::size_t p) {
        std::vector<Rational> s;
        for (std::size_t k = 0; k <= n; ++k) s.push_back(Rational(1) / rpow(Rational(k + 1), p + 1));
        return DifferenceTable<Rational>(s).alternating(n);
    };
    add_exact(c, "E4.2.16", "first derivative of g at 1 in harmonic numbers", 30, [moment](std::size_t i) {
        const std::size_t n = i + 1;
        return std::make_pair(moment(n, 1), harmonic(n + 1) / Rational(n + 1));
    });
    add_exact(c, "E4.2.29", "second derivative of g at 1 in harmonic numbers", 30, [moment](std::size_t i) {
        const std::size_t n = i + 1;
        const Rational h = harmonic(n + 1), h2 = harmonic(n + 1, 2);
        return std::make_pair(2 * moment(n, 2), (h * h + h2) / Rational(n + 1));
    });
    add_exact(c, "E4.2.36b", "third derivative of g at 1 in harmonic numbers", 30, [moment](std::size_t i) {
        const std::size_t n = i + 1;
        const Rational h = harmonic(n + 1), h2 = harmonic(n + 1, 2), h3 = harmonic(n + 1, 3);
        return std::make_pair(6 * moment(n, 3), (h * h * h + 3 * h * h2 + 2 * h3) / Rational(n + 1));
    });
    add_exact(c, "E4.3.41", "s(k,3) in harmonic numbers", 28, [](std::size_t i) {
        const std::size_t k = i + 3;
        const Rational h = harmonic(k - 1), h2 = harmonic(k - 1, 2);
        Rational rhs = Rational(factorial(k - 1)) / 2 * (h * h - h2);
        if (k % 2 == 0) rhs = -rhs;
        return std::make_pair(Rational(stirling1(k, 3)), rhs);
    });
    add_exact(c, "E4.3.66g", "rising factorial from Stirling numbers of the first kind, x = 3/2", 30,
              [](std::size_t i) {
                  const std::size_t n = i + 1;
                  const Rational x = make_rational(3, 2);
                  Rational rising = 1, poly = 0;
                  for (std::size_t j = 0; j < n; ++j) rising *= x + Rational(j);
                  for (std::size_t k = 0; k <= n; ++k) {
                      Rational t = Rational(stirling1(n, k)) * rpow(x, k);
                      poly += (n + k) % 2 ? Rational(-t) : t;
                  }
                  return std::make_pair(rising, poly);
              });
    add_exact(c, "E4.3.112a", "Bernoulli polynomial as a Hasse sum of (u+k)^p, u = 1/3, p = 0..30", 31,
              [](std::size_t p) {
                  std::vector<Rational> cf(p + 1, Rational(0));
                  cf[p] = 1;
                  const Rational u = make_rational(1, 3);
                  return std::make_pair(hasse_sum_exact_polynomial(cf, u), bernoulli_poly(p, u));
              });
    add_exact(c, "E4.3.112b", "Euler polynomial as a geometric difference sum, u = 1/3, p = 0..30", 31,
              [](std::size_t p) {
                  const Rational u = make_rational(1, 3);
                  DifferenceTable<Rational> t;
                  for (std::size_t k = 0; k <= p; ++k) t.push(rpow(u + Rational(k), p));
                  Rational s = 0, w = 1;
                  for (std::size_t n = 0; n <= p; ++n) {
                      s += w * t.alternating(n);
                      w /= 2;
                  }
                  return std::make_pair(s, euler_poly(p, u));
              });
    add_exact(c, "E4.3.112c", "Bernoulli numbers as Hasse sums of k^p and of (1+k)^p", 60, [](std::size_t i) {
        const std::size_t p = i < 31 ? i : i - 29;  // second half: p = 2..30
        std::vector<Rational> cf(p + 1, Rational(0));
        cf[p] = 1;
        const Rational shift = i < 31 ? Rational(0) : Rational(1);
        return std::make_pair(hasse_sum_exact_polynomial(cf, shift), bernoulli_number(p));
    });
}

// --- numeric records -----------------------------------------------------

struct NumericEntry {
    std::string id;
    Group group;
    std::string ref;
    double tol;
    std::vector<double> points;
    Evaluator lhs, rhs;
    Cost cost = Cost::FAST;
};

inline void add_numeric(Catalogue& c, NumericEntry s)
{
    IdentityRecord r;
    r.id = std::move(s.id);
    r.group = s.group;
    r.reference = std::move(s.ref);
    r.tolerance = s.tol;
    r.cost = s.cost;
    r.points = std::move(s.points);
    r.lhs = std::move(s.lhs);
    r.rhs = std::move(s.rhs);
    c.add(std::move(r));
}

inline Evaluator constant(double v)
{
    return [v](double, const PrecisionPolicy&) { return side(v); };
}

inline void register_hasse(Catalogue& c)
{
    using boost::multiprecision::log;
    using boost::multiprecision::pow;
    const auto& k = constants();
    const double tol = 1e-10;
    const double pi2 = k.pi * k.pi;

    add_numeric(c, {"E4.2.4", Group::HASSE, "Sondow series for zeta_a(1) = log 2", tol, {0},
                    [](double, const PrecisionPolicy& p) {
                        return side(sondow_sum([](const wide& x) { return wide(1 / (x + 1)); }, 0.5, p));
                    },
                    constant(std::numbers::ln2)});
    add_numeric(c, {"E4.2.17", Group::HASSE, "alternating zeta as a v = 1/2 difference series, s = 2..5", tol,
                    {2, 3, 4, 5}, [](double s, const PrecisionPolicy& p) { return side(alternating_zeta(s, p)); },
                    [](double s, const PrecisionPolicy&) {
                        return side((1 - std::pow(2.0, 1 - s)) * zeta_int(static_cast<int>(s)));
                    }});
    add_numeric(c, {"E4.2.21", Group::HASSE, "sum of H_n/(n 2^n) equals pi^2/12", tol, {0},
                    [](double, const PrecisionPolicy& p) { return side(zeta_a_harmonic(2, p)); }, constant(pi2 / 12)});
    add_numeric(c, {"E4.2.22", Group::HASSE, "Hasse series for zeta(s) against Euler-Maclaurin, s = 1.5, 2.5, 3.5",
                    tol, {1.5, 2.5, 3.5},
                    [](double s, const PrecisionPolicy& p) {
                        const wide e(1 - s);
                        auto r = hasse_sum([e](const wide& x) { return wide(pow(x, e)); },
                                           [e](const wide& x) { return wide(e * pow(x, e - 1)); }, 1.0, p);
                        return (1 / (s - 1)) * side(r);
                    },
                    [](double s, const PrecisionPolicy&) { return side(hurwitz_zeta_em(s, 1.0)); }});
    add_numeric(c, {"E4.2.23", Group::HASSE, "Hasse series of 1/x at 1 gives zeta(2)", tol, {0},
                    [](double, const PrecisionPolicy& p) {
                        return hasse([](const wide& x) { return wide(1 / x); },
                                     [](const wide& x) { return wide(-1 / (x * x)); }, 1.0, p);
                    },
                    constant(pi2 / 6)});
    add_numeric(c, {"E4.2.30b", Group::HASSE, "zeta_a(3) from (H_n^2 + H_n^(2))/(n 2^n)", tol, {0},
                    [](double, const PrecisionPolicy& p) { return side(zeta_a_harmonic(3, p)); },
                    constant(0.75 * k.zeta3)});
    add_numeric(c, {"E4.2.38", Group::HASSE, "zeta_a(4) from S_n(3)/(n 2^n)", tol, {0},
                    [](double, const PrecisionPolicy& p) { return side(zeta_a_harmonic(4, p)); },
                    constant(0.875 * zeta_int(4))});
    add_numeric(c, {"E4.2.52", Group::HASSE, "zeta_a(s) from S_n(s-1)/(n 2^n), s = 2..5", tol, {2, 3, 4, 5},
                    [](double s, const PrecisionPolicy& p) {
                        return side(zeta_a_harmonic(static_cast<unsigned>(s), p));
                    },
                    [](double s, const PrecisionPolicy&) {
                        return side((1 - std::pow(2.0, 1 - s)) * zeta_int(static_cast<int>(s)));
                    }});
    add_numeric(c, {"E4.3.36", Group::HASSE, "polygamma at 1 from the Hasse series, orders 1 to 4", tol, {1, 2, 3, 4},
                    [](double q, const PrecisionPolicy& p) { return side(polygamma(static_cast<unsigned>(q), 1.0, p)); },
                    [](double q, const PrecisionPolicy&) {
                        const int m = static_cast<int>(q);
                        const double f = std::tgamma(q + 1) * zeta_int(m + 1);
                        return side(m % 2 ? f : -f);
                    }});
    add_numeric(c, {"E4.3.71", Group::HASSE, "zeta(p+2) as a Hasse sum of (1+j)^{-p-1}, p = 1..3", tol, {1, 2, 3},
                    [](double q, const PrecisionPolicy& p) {
                        const int e = -static_cast<int>(q) - 1;
                        auto r = hasse_sum([e](const wide& x) { return wide(pow(x, e)); },
                                           [e](const wide& x) { return wide(e * pow(x, e - 1)); }, 1.0, p);
                        return (1 / (q + 1)) * side(r);
                    },
                    [](double q, const PrecisionPolicy&) { return side(zeta_int(static_cast<int>(q) + 2)); }});
    add_numeric(c, {"E4.3.110", Group::HASSE, "zeta(-m,u) by the Hasse series against Bernoulli polynomials, u = 0.3",
                    tol, {1, 2, 3},
                    [](double m, const PrecisionPolicy& p) {
                        const int e = static_cast<int>(m) + 1;
                        auto r = hasse_sum([e](const wide& x) { return wide(pow(x, e)); },
                                           [e](const wide& x) { return wide(e * pow(x, e - 1)); }, 0.3, p);
                        return (-1.0 / e) * side(r);
                    },
                    [](double m, const PrecisionPolicy&) {
                        const std::size_t e = static_cast<std::size_t>(m) + 1;
                        return side(-to_double(bernoulli_poly(e, make_rational(3, 10))) / static_cast<double>(e));
                    }});
    // (m, u) pairs encoded as 10 m + 2u
    add_numeric(c, {"E4.3.112e", Group::HASSE, "Stieltjes constants from log powers", tol, {2, 1, 12, 11, 22},
                    [](double code, const PrecisionPolicy& p) {
                        const unsigned m = static_cast<unsigned>(code / 10);
                        const double u = (code - 10 * m) / 2;
                        return side(stieltjes(m, u, p));
                    },
                    [](double code, const PrecisionPolicy&) {
                        const int m = static_cast<int>(code / 10);
                        const double u = (code - 10 * m) / 2;
                        if (m == 0) return side(-digamma_ref(u));
                        if (m == 1 && u == 1) return side(-0.072815845483676724861);
                        if (m == 1) return side(-1.3534596808049415177);
                        return side(-0.0096903631928723184845);
                    }});
}

inline void register_euler(Catalogue& c)
{
    constexpr std::size_t K = 100000;
    const double tol = 1e-8;
    const double z2 = zeta_int(2), z3 = zeta_int(3), z4 = zeta_int(4), z5 = zeta_int(5);
    auto numeric = [](EulerSumKey key) {
        return [key](double, const PrecisionPolicy& p) { return side(euler_sum_numeric(key, K, p), K); };
    };
    auto series = [](auto g) {
        return [g](double, const PrecisionPolicy&) { return side(harmonic_series(g, K), K); };
    };
    add_numeric(c, {"E4.2.33", Group::EULER, "sum of H_k/k^2 equals 2 zeta(3)", tol, {0},
                    numeric(EulerSumKey::linear(1, 2)), constant(2 * z3)});
    add_numeric(c, {"E4.2.34", Group::EULER, "sum of H_{k-1}/k^2 equals zeta(3)", tol, {0},
                    series([](const std::array<double, 5>& h, double k) { return (h[1] - 1 / k) / (k * k); }),
                    constant(z3)});
    add_numeric(c, {"E4.2.42", Group::EULER, "sum of H_k^2/k^2 equals 17/4 zeta(4)", tol, {0},
                    numeric(EulerSumKey::square(2)), constant(4.25 * z4)});
    add_numeric(c, {"E4.2.43", Group::EULER, "sum of H_k^(2)/k^2 equals 7/4 zeta(4)", tol, {0},
                    numeric(EulerSumKey::linear(2, 2)), constant(1.75 * z4)});
    add_numeric(c, {"E4.2.44", Group::EULER, "sum of (H_k^2 + H_k^(2))/k^2 equals 6 zeta(4)", tol, {0},
                    series([](const std::array<double, 5>& h, double k) { return (h[1] * h[1] + h[2]) / (k * k); }),
                    constant(6 * z4)});
    add_numeric(c, {"E4.2.45", Group::EULER, "sum of S_n(2)/n^2 equals 3 zeta(4)", tol, {0},
                    series([](const std::array<double, 5>& h, double k) {
                        return 0.5 * (h[1] * h[1] + h[2]) / (k * k);
                    }),
                    constant(3 * z4)});
    add_numeric(c, {"E4.2.46", Group::EULER, "sum of H_n (zeta(2) - H_{n-1}^(2))/n equals 3 zeta(4)", tol, {0},
                    series([](const std::array<double, 5>& h, double k) {
                        return h[1] / k * hurwitz_zeta_em(2, k);
                    }),
                    constant(3 * z4)});
    add_numeric(c, {"E4.2.47a", Group::EULER, "zeta(5) from the cubic harmonic polynomial over n^2", tol, {0},
                    series([](const std::array<double, 5>& h, double k) {
                        return (h[1] * h[1] * h[1] + 3 * h[1] * h[2] + 2 * h[3]) / (24 * k * k);
                    }),
                    constant(z5)});
    add_numeric(c, {"E4.2.50", Group::EULER, "Flajolet-Salvy formula for odd-weight linear sums", tol,
                    {0, 1, 2, 3, 4, 5},
                    [](double i, const PrecisionPolicy& p) {
                        static const EulerSumKey keys[] = {EulerSumKey::linear(1, 2), EulerSumKey::linear(1, 4),
                                                           EulerSumKey::linear(2, 3), EulerSumKey::linear(3, 2),
                                                           EulerSumKey::linear(2, 5), EulerSumKey::linear(4, 3)};
                        return side(euler_sum_numeric(keys[static_cast<int>(i)], K, p), K);
                    },
                    [](double i, const PrecisionPolicy&) {
                        static const EulerSumKey keys[] = {EulerSumKey::linear(1, 2), EulerSumKey::linear(1, 4),
                                                           EulerSumKey::linear(2, 3), EulerSumKey::linear(3, 2),
                                                           EulerSumKey::linear(2, 5), EulerSumKey::linear(4, 3)};
                        return side(euler_sum_closed(keys[static_cast<int>(i)]));
                    }});
    add_numeric(c, {"E4.2.51", Group::EULER, "zeta(s+2) from S_n(s)/n^2, s = 1..3", tol, {1, 2, 3},
                    [](double s, const PrecisionPolicy&) {
                        const int si = static_cast<int>(s);
                        auto g = [si](const std::array<double, 5>& h, double k) {
                            double e = h[1];
                            if (si == 2) e = 0.5 * (h[1] * h[1] + h[2]);
                            if (si == 3) e = (h[1] * h[1] * h[1] + 3 * h[1] * h[2] + 2 * h[3]) / 6;
                            return e / (k * k);
                        };
                        return (1 / (s + 1)) * side(harmonic_series(g, K), K);
                    },
                    [](double s, const PrecisionPolicy&) { return side(zeta_int(static_cast<int>(s) + 2)); }});
    add_numeric(c, {"E4.3.43", Group::EULER, "psi'''(1) as a sum of (H_{k-1}^2 - H_{k-1}^(2))/k^2", tol, {0},
                    series([](const std::array<double, 5>& h, double k) {
                        const double a = h[1] - 1 / k, b = h[2] - 1 / (k * k);
                        return 3 * (a * a - b) / (k * k);
                    }),
                    constant(6 * z4)});
    add_numeric(c, {"E4.3.50", Group::EULER, "Shen: zeta(p+1) from Stirling numbers, p = 2, 3", tol, {2, 3},
                    [](double q, const PrecisionPolicy&) { return side(shen_series(static_cast<unsigned>(q), K), K); },
                    [](double q, const PrecisionPolicy&) { return side(zeta_int(static_cast<int>(q) + 1)); }});
    add_numeric(c, {"E4.3.60a", Group::EULER, "psi''''(1) as a sum of cubic harmonic terms over k^2", tol, {0},
                    series([](const std::array<double, 5>& h, double k) {
                        const double a = h[1] - 1 / k, b = h[2] - 1 / (k * k), d = h[3] - 1 / (k * k * k);
                        return -4 * (a * a * a - 3 * a * b + 2 * d) / (k * k);
                    }),
                    constant(-24 * z5)});
    add_numeric(c, {"E4.3.60c", Group::EULER, "sum of H_k H_k^(2)/k^2", tol, {0}, numeric(EulerSumKey::mixed12(2)),
                    constant(z5 + z2 * z3)});
    add_numeric(c, {"E4.3.60d", Group::EULER, "sum of H_k^3/k^2", tol, {0}, numeric(EulerSumKey::cube(2)),
                    constant(10 * z5 + z2 * z3)});
    add_numeric(c, {"E4.3.60e", Group::EULER, "sum of H_k^2/k^3", tol, {0}, numeric(EulerSumKey::square(3)),
                    constant(3.5 * z5 - z2 * z3)});
    add_numeric(c, {"E4.3.60f", Group::EULER, "sum of H_k^3/(k+1)^2", tol, {0}, numeric(EulerSumKey::cube_shifted(2)),
                    constant(7.5 * z5 + z2 * z3)});
    add_numeric(c, {"E4.3.65iv", Group::EULER, "psi^(5)(1) as a sum of quartic harmonic terms over k^2", tol, {0},
                    series([](const std::array<double, 5>& h, double k) {
                        const double a = h[1], b = h[2];
                        return (a * a * a * a + 6 * a * a * b + 3 * b * b + 8 * a * h[3] + 6 * h[4]) / (k * k);
                    }),
                    constant(120 * zeta_int(6))});
    add_numeric(c, {"E4.3.71c", Group::EULER, "Gosper: sum of H_k x^k/k! via the incomplete gamma function", tol,
                    {0.5, 1, 2},
                    [](double x, const PrecisionPolicy&) {
                        double s = 0, h = 0, t = 1;
                        std::size_t n = 0;
                        for (int k = 1; k <= 80; ++k, ++n) {
                            h += 1.0 / k;
                            t *= x / k;
                            s += h * t;
                        }
                        return Side{s, n, true};
                    },
                    [](double x, const PrecisionPolicy&) {
                        return side(std::exp(x) * (std::log(x) + incomplete_gamma0(x) + constants().euler_gamma));
                    }});
}

inline void register_logseries(Catalogue& c)
{
    using boost::multiprecision::log;
    using boost::multiprecision::pow;
    const auto& k = constants();
    const double tol = 1e-6;
    const double g = k.euler_gamma, l2p = k.log_2pi, ln2 = std::numbers::ln2;

    // S[f] at shift 0 for the integrands below; f(0) is taken as its limit.
    auto at0 = [](auto f, auto df) {
        return [f, df](double, const PrecisionPolicy& p) { return hasse(f, df, 0.0, p); };
    };
    add_numeric(c, {"E4.3.73a", Group::LOGSERIES, "Hasse sum of log(1+j) is -gamma", tol, {0},
                    at0([](const wide& x) { return wide(log(1 + x)); }, [](const wide& x) { return wide(1 / (1 + x)); }),
                    constant(-g)});
    add_numeric(c, {"E4.3.74", Group::LOGSERIES, "digamma as the Hasse sum of log(u+j)", tol, {0.5, 1.5, 3},
                    [](double u, const PrecisionPolicy& p) {
                        return hasse([](const wide& x) { return wide(log(x)); },
                                     [](const wide& x) { return wide(1 / x); }, u, p);
                    },
                    [](double u, const PrecisionPolicy&) { return side(digamma_ref(u)); }});
    add_numeric(c, {"E4.3.74b", Group::LOGSERIES, "Hasse sum of log(n+1+j) is H_n - gamma", tol, {1, 2, 3, 4, 5},
                    [](double n, const PrecisionPolicy& p) {
                        return hasse([](const wide& x) { return wide(log(x)); },
                                     [](const wide& x) { return wide(1 / x); }, n + 1, p);
                    },
                    [g](double n, const PrecisionPolicy&) {
                        return side(to_double(harmonic(static_cast<std::size_t>(n))) - g);
                    }});
    add_numeric(c, {"E4.3.75", Group::LOGSERIES, "log Gamma from the series of j log((x+j)/(1+j))", tol, {0.5, 2.5},
                    [g](double xv, const PrecisionPolicy& p) {
                        const wide xw(xv);
                        auto s = hasse([xw](const wide& j) { return wide(j * log((xw + j) / (1 + j))); },
                                       [xw](const wide& j) {
                                           return wide(log((xw + j) / (1 + j)) + j / (xw + j) - j / (1 + j));
                                       },
                                       0.0, p);
                        return s + (xv * digamma_ref(xv) + g - (xv - 1));
                    },
                    [](double xv, const PrecisionPolicy&) { return side(std::lgamma(xv)); }});
    auto j_log = [](double a, double b, double cst) {
        // S[j log((a + b j)/(cst (1 + j)))]
        return [a, b, cst](double, const PrecisionPolicy& p) {
            const wide A(a), B(b), C(cst);
            return hasse([A, B, C](const wide& j) { return wide(j * log((A + B * j) / (C * (1 + j)))); },
                         [A, B, C](const wide& j) {
                             return wide(log((A + B * j) / (C * (1 + j))) + B * j / (A + B * j) - j / (1 + j));
                         },
                         0.0, p);
        };
    };
    add_numeric(c, {"E4.3.76", Group::LOGSERIES, "series of j log((2+j)/(1+j)) is gamma - 1", tol, {0},
                    j_log(2, 1, 1), constant(g - 1)});
    add_numeric(c, {"E4.3.76b", Group::LOGSERIES, "series of j log((1+2j)/(2(1+j)))", tol, {0}, j_log(1, 2, 2),
                    constant(0.5 * (std::log(k.pi) - 1 - g) + ln2)});
    add_numeric(c, {"E4.3.76c", Group::LOGSERIES, "series of j log((1+2j)/(1+j))", tol, {0}, j_log(1, 2, 1),
                    constant(0.5 * (l2p - g - 1))});
    add_numeric(c, {"E4.3.76e", Group::LOGSERIES, "Hasse sum of j is -1/2", tol, {0},
                    at0([](const wide& x) { return x; }, [](const wide&) { return wide(1); }), constant(-0.5)});
    add_numeric(c, {"E4.3.77a", Group::LOGSERIES, "series of j^2 log(j/(1+j))", tol, {0},
                    at0([](const wide& x) { return x == 0 ? wide(0) : wide(x * x * log(x / (1 + x))); },
                        [](const wide& x) { return x == 0 ? wide(0) : wide(2 * x * log(x / (1 + x)) + x / (1 + x)); }),
                    constant(g + 1 - l2p)});
    add_numeric(c, {"E4.3.78", Group::LOGSERIES, "series of j^2 log((2+j)/(1+j))", tol, {0},
                    at0([](const wide& x) { return wide(x * x * log((2 + x) / (1 + x))); },
                        [](const wide& x) {
                            return wide(2 * x * log((2 + x) / (1 + x)) + x * x / (2 + x) - x * x / (1 + x));
                        }),
                    constant(l2p - 3 * g)});
    auto sq_log_u = [](double u, const PrecisionPolicy& p) {
        const wide U(u);
        return hasse([U](const wide& x) { return wide(x * x * log((U + x) / (1 + x))); },
                     [U](const wide& x) { return wide(2 * x * log((U + x) / (1 + x)) + x * x / (U + x) - x * x / (1 + x)); },
                     0.0, p);
    };
    add_numeric(c, {"E4.3.84a", Group::LOGSERIES, "series of j^2 log((u+j)/(1+j)) through Barnes G", tol,
                    {0.5, 1.5, 3}, sq_log_u, [g, l2p](double u, const PrecisionPolicy& p) {
                        return side((u - 1) * l2p - 2 * log_g(1 + u, p) + u * u * digamma_ref(u) + g -
                                    0.5 * (u - 1) * (3 * u + 2));
                    }});
    add_numeric(c, {"E4.3.118", Group::LOGSERIES, "series of k log(1+k)", tol, {0},
                    at0([](const wide& x) { return wide(x * log(1 + x)); },
                        [](const wide& x) { return wide(log(1 + x) + x / (1 + x)); }),
                    constant(0.5 + g - 0.5 * l2p)});
    add_numeric(c, {"E4.3.121d", Group::LOGSERIES, "series of k log(2k+1) is gamma/2", tol, {0},
                    at0([](const wide& x) { return wide(x * log(2 * x + 1)); },
                        [](const wide& x) { return wide(log(2 * x + 1) + 2 * x / (2 * x + 1)); }),
                    constant(0.5 * g)});
    add_numeric(c, {"E4.3.121e", Group::LOGSERIES, "series of k log((2k+1)/(k+1))", tol, {0}, j_log(1, 2, 1),
                    constant(0.5 * (l2p - g - 1))});
    add_numeric(c, {"E4.3.122", Group::LOGSERIES, "series of log(2k+1) is -gamma - log 2", tol, {0},
                    at0([](const wide& x) { return wide(log(2 * x + 1)); },
                        [](const wide& x) { return wide(2 / (2 * x + 1)); }),
                    constant(-g - ln2)});
    auto sq_log1 = [](double shift) {
        return [shift](double, const PrecisionPolicy& p) {
            return hasse([](const wide& x) { return wide(x * x * log(x)); },
                         [](const wide& x) { return wide(2 * x * log(x) + x); }, shift, p);
        };
    };
    add_numeric(c, {"E4.3.128", Group::LOGSERIES, "zeta'(-1) from the series of (1+k)^2 log(1+k)", tol, {0},
                    [sq_log1](double, const PrecisionPolicy& p) { return -1.0 / 24 + 0.5 * sq_log1(1.0)(0, p); },
                    constant(k.zeta_prime_neg1)});
    add_numeric(c, {"E4.3.128a", Group::LOGSERIES, "log of the Glaisher constant from the same series", tol, {0},
                    [sq_log1](double, const PrecisionPolicy& p) { return 0.125 - 0.5 * sq_log1(1.0)(0, p); },
                    constant(k.log_glaisher)});
    add_numeric(c, {"E4.3.128c", Group::LOGSERIES, "series of (2+k)^2 log(2+k)", tol, {0},
                    [sq_log1](double, const PrecisionPolicy& p) { return sq_log1(2.0)(0, p); },
                    constant(2 * k.zeta_prime_neg1 + 13.0 / 12)});
    add_numeric(c, {"E4.3.133c", Group::LOGSERIES, "zeta(3) from the series of (1+k)^3 log(1+k)", tol, {0},
                    [&k](double, const PrecisionPolicy& p) {
                        auto s = hasse([](const wide& x) { return wide(x * x * x * log(x)); },
                                       [](const wide& x) { return wide(x * x * (3 * log(x) + 1)); }, 1.0, p);
                        return (-4.0 / 3 * k.pi * k.pi) * s;
                    },
                    constant(k.zeta3)});
    add_numeric(c, {"E4.3.136", Group::LOGSERIES, "shifting (1+k)^{2-s} log(1+k) to k^{2-s} log k, s = 0, 1/2", tol,
                    {0, 0.5},
                    [](double s, const PrecisionPolicy& p) {
                        const wide e(2 - s);
                        return hasse([e](const wide& x) { return wide(pow(x, e) * log(x)); },
                                     [e](const wide& x) { return wide(pow(x, e - 1) * (e * log(x) + 1)); }, 1.0, p);
                    },
                    [](double s, const PrecisionPolicy& p) {
                        const wide e(2 - s);
                        return hasse([e](const wide& x) { return x == 0 ? wide(0) : wide(pow(x, e) * log(x)); },
                                     [e](const wide& x) {
                                         return x == 0 ? wide(0) : wide(pow(x, e - 1) * (e * log(x) + 1));
                                     },
                                     0.0, p);
                    }});
    add_numeric(c, {"E4.3.137", Group::LOGSERIES, "series of k^2 log k is 2 zeta'(-1) + 1/12", tol, {0},
                    [sq_log1](double, const PrecisionPolicy& p) {
                        return hasse([](const wide& x) { return x == 0 ? wide(0) : wide(x * x * log(x)); },
                                     [](const wide& x) { return x == 0 ? wide(0) : wide(2 * x * log(x) + x); }, 0.0,
                                     p);
                    },
                    constant(2 * k.zeta_prime_neg1 + 1.0 / 12)});
}

inline void register_hurwitz(Catalogue& c)
{
    const auto& k = constants();
    const double tol = 1e-8;
    const double pi = k.pi, pi2 = pi * pi, l2p = k.log_2pi, ln2 = std::numbers::ln2;

    add_numeric(c, {"E4.3.116", Group::HURWITZ, "Lerch: log Gamma(u) = zeta'(0,u) + log(2 pi)/2", tol,
                    {0.25, 0.5, 1.5, 2.5, 5}, [](double u, const PrecisionPolicy&) { return side(std::lgamma(u)); },
                    [l2p](double u, const PrecisionPolicy& p) { return zd(0, u, p) + 0.5 * l2p; }});
    add_numeric(c, {"E4.3.121a", Group::HURWITZ, "log u as a difference of zeta'(0, .)", tol, {0.3, 2, 7},
                    [](double u, const PrecisionPolicy&) { return side(std::log(u)); },
                    [](double u, const PrecisionPolicy& p) { return zd(0, u + 1, p) - zd(0, u, p); }});
    add_numeric(c, {"E4.3.122a", Group::HURWITZ, "zeta'(0,1/2) = -log(2)/2", tol, {0},
                    [](double, const PrecisionPolicy& p) { return zd(0, 0.5, p); }, constant(-0.5 * ln2)});
    add_numeric(c, {"E4.3.126", Group::HURWITZ, "Gosper/Vardi functional equation for log G(u+1)", tol,
                    {0.5, 1.5, 2, 3},
                    [](double u, const PrecisionPolicy&) {
                        // log G(1+u), 30 digits
                        if (u == 0.5) return side(0.066931888435004704274028685868);
                        if (u == 1.5) return side(-0.053850349200240518071489759914);
                        if (u == 2) return side(0.0);
                        return side(std::numbers::ln2);
                    },
                    [&k](double u, const PrecisionPolicy& p) {
                        return side(u * std::lgamma(u) + k.zeta_prime_neg1) - zd(-1, u, p);
                    }});
    add_numeric(c, {"E4.3.129c", Group::HURWITZ, "sum of k log k through zeta'(-1, n+1)", tol, {1, 2, 3, 4, 5},
                    [](double n, const PrecisionPolicy&) {
                        double s = 0;
                        for (int j = 1; j <= static_cast<int>(n); ++j) s += j * std::log(static_cast<double>(j));
                        return side(s);
                    },
                    [&k](double n, const PrecisionPolicy& p) { return zd(-1, n + 1, p) - k.zeta_prime_neg1; }});
    add_numeric(c, {"E4.3.129d", Group::HURWITZ, "zeta'(-1,2) = zeta'(-1)", tol, {0},
                    [](double, const PrecisionPolicy& p) { return zd(-1, 2, p); }, constant(k.zeta_prime_neg1)});
    add_numeric(c, {"E4.3.140", Group::HURWITZ, "zeta'(-1,1/2) in terms of zeta'(-1)", tol, {0},
                    [](double, const PrecisionPolicy& p) { return zd(-1, 0.5, p); },
                    constant(-ln2 / 24 - 0.5 * k.zeta_prime_neg1)});
    add_numeric(c, {"E4.3.160b", Group::HURWITZ, "zeta'(-1,1/4) - zeta'(-1,3/4) = G/(2 pi)", tol, {0},
                    [](double, const PrecisionPolicy& p) { return zd(-1, 0.25, p) - zd(-1, 0.75, p); },
                    constant(k.catalan / (2 * pi))});
    add_numeric(c, {"E4.3.161a", Group::HURWITZ, "zeta'(-1,1/4) and zeta'(-1,3/4) separately", tol, {0.25, 0.75},
                    [](double u, const PrecisionPolicy& p) { return zd(-1, u, p); },
                    [&k, pi](double u, const PrecisionPolicy&) {
                        const double a = k.catalan / (4 * pi);
                        return side((u < 0.5 ? a : -a) - k.zeta_prime_neg1 / 8);
                    }});
    add_numeric(c, {"E4.3.166", Group::HURWITZ, "zeta'(-2,y) + zeta'(-2,1-y) as a cosine series", tol, {0.2, 0.3},
                    [](double y, const PrecisionPolicy& p) { return zd(-2, y, p) + zd(-2, 1 - y, p); },
                    [pi](double y, const PrecisionPolicy&) {
                        return side(-2 / (4 * pi * pi) * clausen(3, 2 * pi * y));
                    }});
    add_numeric(c, {"E4.3.168d", Group::HURWITZ, "zeta'(-2,1/2) = 3 zeta(3)/(16 pi^2)", tol, {0},
                    [](double, const PrecisionPolicy& p) { return zd(-2, 0.5, p); },
                    constant(3 * k.zeta3 / (16 * pi2))});
    add_numeric(c, {"E4.3.172", Group::HURWITZ, "zeta'(-2,1/4) + zeta'(-2,3/4) = 3 zeta(3)/(64 pi^2)", tol, {0},
                    [](double, const PrecisionPolicy& p) { return zd(-2, 0.25, p) + zd(-2, 0.75, p); },
                    constant(3 * k.zeta3 / (64 * pi2))});
    add_numeric(c, {"E4.3.173", Group::HURWITZ, "quarter-point pair as a quarter of zeta'(-2,1/2)", tol, {0},
                    [](double, const PrecisionPolicy& p) { return zd(-2, 0.25, p) + zd(-2, 0.75, p); },
                    [](double, const PrecisionPolicy& p) { return 0.25 * zd(-2, 0.5, p); }});
    add_numeric(c, {"E4.3.175", Group::HURWITZ, "Cl_{2n+1}(pi/2) in terms of zeta(2n+1), n = 1, 2", tol, {1, 2},
                    [pi](double n, const PrecisionPolicy&) {
                        return side(clausen(2 * static_cast<unsigned>(n) + 1, pi / 2));
                    },
                    [](double n, const PrecisionPolicy&) {
                        const int m = static_cast<int>(n);
                        return side((1 - std::ldexp(1.0, 2 * m)) / std::ldexp(1.0, 4 * m + 1) * zeta_int(2 * m + 1));
                    }});
    add_numeric(c, {"E4.3.178", Group::HURWITZ, "quarter-point difference as Cl_2(pi/2)/(2 pi)", tol, {0},
                    [](double, const PrecisionPolicy& p) { return zd(-1, 0.25, p) - zd(-1, 0.75, p); },
                    [pi](double, const PrecisionPolicy&) { return side(clausen(2, pi / 2) / (2 * pi)); }});
    add_numeric(c, {"E4.3.74di", Group::HURWITZ, "duplication formula for zeta(s,a), a = 0.3", tol, {2, 3.5, -1.5},
                    [](double s, const PrecisionPolicy& p) { return std::pow(2.0, s) * side(hurwitz_zeta(s, 0.6, p)); },
                    [](double s, const PrecisionPolicy& p) {
                        return side(hurwitz_zeta(s, 0.3, p)) + side(hurwitz_zeta(s, 0.8, p));
                    }});
    add_numeric(c, {"E4.3.152b", Group::HURWITZ, "zeta'(-2,x) relation through Barnes G and the triple gamma",
                    tol, {0.5, 1.5},
                    [&k](double x, const PrecisionPolicy& p) {
                        const double b3 = to_double(bernoulli_poly(3, Rational(x)));
                        return side(x * k.zeta_prime_neg1 + b3 / 12 + 0.5 * k.zeta_prime_neg2) - 0.5 * zd(-2, x, p);
                    },
                    [&k](double x, const PrecisionPolicy& p) {
                        return side((0.125 - k.log_glaisher) * x - x * x / 8 + x * x * x / 12 +
                                    0.5 * x * x * std::log(x) - 0.5 * x * x * std::lgamma(1 + x) +
                                    (x - 0.5) * log_g(1 + x, p) - triple_gamma_log(x, p));
                    }});
    add_numeric(c, {"E4.3.152d", Group::HURWITZ, "log Gamma_3(3/2) in closed form", tol, {0},
                    [](double, const PrecisionPolicy& p) { return side(triple_gamma_log(0.5, p)); },
                    constant(7 * k.zeta3 / (32 * pi2) - std::log(pi) / 16)});
    add_numeric(c, {"E4.3.152f", Group::HURWITZ, "triple gamma recurrence against Barnes G", tol, {1.5, 2.5},
                    [](double x, const PrecisionPolicy& p) {
                        return side(triple_gamma_log(x, p) - triple_gamma_log(x - 1, p));
                    },
                    [](double x, const PrecisionPolicy& p) { return side(log_g(x, p)); }});
}

// Integrands for the integral representations.  With L = log t and
// a = u - 1 the brackets cancel to O(L) near t = 1, where they are summed
// from their Taylor series in L instead.
inline double bracket97(double t, double u)
{
    const double a = u - 1, L = std::log(t);
    if (std::abs(L) < 0.05) {
        double s = 0, am = 1, f = 1, Lm = 1;
        for (int m = 1; m < 25; ++m) {
            am *= a;
            f *= m;
            Lm *= L;
            s += Lm * (am * a / (f * (m + 1)) - u * am / f);
        }
        return s;
    }
    return std::expm1(a * L) / L - (u * std::exp(a * L) - 1);
}

inline double bracket105(double t, double u)
{
    const double a = u - 1, L = std::log(t);
    if (std::abs(L) < 0.05) {
        double s = 0, am = 1, f = 1, Lm = 1;
        for (int m = 1; m < 25; ++m) {
            am *= a;
            f *= m;
            Lm *= L;
            s += Lm * am * (u * u / f - 2 * u * a / (f * (m + 1)) + 2 * a * a / (f * (m + 1) * (m + 2)));
        }
        return s;
    }
    const double e = std::exp(a * L);
    return (u * u * e - 1) - 2 * (u * e - 1) / L + 2 * std::expm1(a * L) / (L * L);
}

inline void register_integral(Catalogue& c)
{
    const auto& k = constants();
    const double tol = 1e-8;
    const double pi = k.pi, pi2 = pi * pi, l2p = k.log_2pi, la = k.log_glaisher, g = k.euler_gamma;
    const double ln2 = std::numbers::ln2;

    auto lgam = [](const PrecisionPolicy& p) {
        return [p](double u) { return log_gamma(u, p).value; };
    };
    auto psi1 = [](const PrecisionPolicy& p) {  // psi(1+t)
        return [p](double t) { return digamma(1 + t, p).value; };
    };

    add_numeric(c, {"E4.3.85", Group::INTEGRAL, "Alexeiewsky: integral of log Gamma through Barnes G", tol, {0.5, 1.5},
                    [lgam](double u, const PrecisionPolicy& p) { return quad(lgam(p), 0, u, true); },
                    [l2p](double u, const PrecisionPolicy& p) {
                        return side(0.5 * u * (1 - u) + 0.5 * u * l2p - log_g(u + 1, p) + u * std::lgamma(u));
                    }, Cost::SLOW});
    add_numeric(c, {"E4.3.87", Group::INTEGRAL, "Kinkelin: log G(1+u)/G(1-u) from the cotangent moment", tol,
                    {0.25, 0.5},
                    [l2p](double u, const PrecisionPolicy&) { return side(u * l2p) - side(cot_moment(1, u)); },
                    [](double u, const PrecisionPolicy& p) { return side(log_g(1 + u, p) - log_g(1 - u, p)); }});
    add_numeric(c, {"E4.3.87a", Group::INTEGRAL, "moment of psi(1+t) t^2 via the triple gamma", tol, {0.5, 1},
                    [psi1](double x, const PrecisionPolicy& p) {
                        auto f = psi1(p);
                        return quad([f](double t) { return t * t * f(t); }, 0, x);
                    },
                    [la, l2p](double x, const PrecisionPolicy& p) {
                        return side(2 * triple_gamma_log(x, p) + log_g(1 + x, p) + (-0.25 + 2 * la) * x +
                                    (-0.5 * l2p + 0.25) * x * x + 0.5 * x * x * x);
                    }});
    add_numeric(c, {"E4.3.87ai", Group::INTEGRAL, "moment of t log Gamma(1+t) via the triple gamma", tol, {0.5, 1},
                    [](double x, const PrecisionPolicy& p) {
                        return 2.0 * quad([p](double t) { return t * log_gamma(1 + t, p).value; }, 0, x);
                    },
                    [la, l2p](double x, const PrecisionPolicy& p) {
                        return side((0.25 - 2 * la) * x + (0.5 * l2p - 0.25) * x * x - 0.5 * x * x * x +
                                    x * x * std::lgamma(1 + x) - log_g(1 + x, p) - 2 * triple_gamma_log(x, p));
                    }});
    add_numeric(c, {"E4.3.87c", Group::INTEGRAL, "integral of log G(1+t)", tol, {0.5, 1},
                    [](double x, const PrecisionPolicy& p) {
                        return quad([p](double t) { return log_g(1 + t, p); }, 0, x);
                    },
                    [la, l2p](double x, const PrecisionPolicy& p) {
                        return side((0.25 - 2 * la) * x + 0.25 * l2p * x * x - x * x * x / 6 +
                                    (x - 1) * log_g(1 + x, p) - 2 * triple_gamma_log(x, p));
                    }});
    add_numeric(c, {"E4.3.97", Group::INTEGRAL, "log Gamma(u) - u psi(u) as an integral over (0,1)", tol,
                    {0.5, 1.5, 2},
                    [g](double u, const PrecisionPolicy&) { return side(std::lgamma(u) - u * digamma_ref(u) - g); },
                    [](double u, const PrecisionPolicy&) {
                        return -1.0 * quad([u](double t) { return bracket97(t, u) / (1 - t); }, 0, 1, u < 1, false);
                    }});
    add_numeric(c, {"E4.3.98a", Group::INTEGRAL, "log Gamma(u) as an integral over (0,1)", tol, {0.5, 1.5, 3},
                    [](double u, const PrecisionPolicy&) { return side(std::lgamma(u)); },
                    [](double u, const PrecisionPolicy&) {
                        const double a = u - 1;
                        auto f = [a](double t) {
                            const double L = std::log(t);
                            // (t^a - 1 - a(t-1)) / ((t-1) L)
                            if (std::abs(L) < 0.05) {
                                double num = 0, em1 = std::expm1(L), am = 1, Lm = 1, fm = 1;
                                for (int m = 1; m < 25; ++m) {
                                    am *= a;
                                    Lm *= L;
                                    fm *= m;
                                    num += (am - a) * Lm / fm;
                                }
                                return num / (em1 * L);
                            }
                            return (std::expm1(a * L) - a * std::expm1(L)) / (std::expm1(L) * L);
                        };
                        return quad(f, 0, 1, u < 1, false);
                    }});
    add_numeric(c, {"E4.3.102a", Group::INTEGRAL, "zeta_a(p+1) as an integral of log^p t/(1+t), p = 1..3", tol,
                    {1, 2, 3}, [](double q, const PrecisionPolicy& p) { return side(alternating_zeta(q + 1, p)); },
                    [](double q, const PrecisionPolicy&) {
                        const int n = static_cast<int>(q);
                        const double scale = (n % 2 ? -1.0 : 1.0) / std::tgamma(q + 1);
                        return scale * quad([n](double t) { return std::pow(std::log(t), n) / (1 + t); }, 0, 1, true);
                    }});
    add_numeric(c, {"E4.3.103", Group::INTEGRAL, "series of k^2 log((k+u)/(k+1)) as an integral", tol, {0.5, 1.5, 2},
                    [](double u, const PrecisionPolicy& p) {
                        using boost::multiprecision::log;
                        const wide U(u);
                        return hasse([U](const wide& x) { return wide(x * x * log((U + x) / (1 + x))); },
                                     [U](const wide& x) {
                                         return wide(2 * x * log((U + x) / (1 + x)) + x * x / (U + x) - x * x / (1 + x));
                                     },
                                     0.0, p);
                    },
                    [](double u, const PrecisionPolicy&) {
                        return -0.5 * (u - 1) * (u + 2) -
                               quad([u](double t) { return bracket105(t, u) / (1 - t); }, 0, 1, u < 1, false);
                    }});
    add_numeric(c, {"E4.3.105a", Group::INTEGRAL, "Barnes G combination as an integral over (0,1)", tol,
                    {0.5, 1.5, 2},
                    [g, l2p](double u, const PrecisionPolicy& p) {
                        return side((u - 1) * l2p - 2 * log_g(1 + u, p) + u * u * digamma_ref(u) + g - u * (u - 1));
                    },
                    [](double u, const PrecisionPolicy&) {
                        return -1.0 * quad([u](double t) { return bracket105(t, u) / (1 - t); }, 0, 1, u < 1, false);
                    }});
    add_numeric(c, {"E4.3.129", Group::INTEGRAL, "Gosper's integral of log Gamma from 1 to x", 1e-7, {2, 2.5},
                    [lgam](double x, const PrecisionPolicy& p) { return quad(lgam(p), 1, x); },
                    [&k, l2p](double x, const PrecisionPolicy& p) {
                        return zd(-1, x, p) + (0.5 * x * (1 - x) + 0.5 * (x - 1) * l2p - k.zeta_prime_neg1);
                    }});
    add_numeric(c, {"E4.3.129a", Group::INTEGRAL, "Gosper's integral of log Gamma from 0 to x", 1e-7,
                    {0.25, 0.5, 1.5},
                    [lgam](double x, const PrecisionPolicy& p) { return quad(lgam(p), 0, x, true); },
                    [&k, l2p](double x, const PrecisionPolicy& p) {
                        return zd(-1, x, p) + (0.5 * x * (1 - x) + 0.5 * x * l2p - k.zeta_prime_neg1);
                    }, Cost::SLOW});
    // (n, x) encoded as n + x with x in (0,1)
    add_numeric(c, {"E4.3.131", Group::INTEGRAL, "integrals of zeta'(1-n,u) over (0,x)", tol, {1.5, 2.5, 2.3},
                    [](double code, const PrecisionPolicy& p) {
                        const int n = static_cast<int>(code);
                        const double x = code - n;
                        return static_cast<double>(n) *
                               quad([n, p](double u) { return hurwitz_zeta_deriv(1 - n, u, p).value; }, 0, x, n == 1);
                    },
                    [](double code, const PrecisionPolicy& p) {
                        const int n = static_cast<int>(code);
                        const double x = code - n;
                        const Rational rx(x);
                        const std::size_t m = static_cast<std::size_t>(n + 1);
                        const double b = to_double(bernoulli_number(m) - bernoulli_poly(m, rx)) / (n * (n + 1.0));
                        return zd(-n, x, p) - zd(-n, 1.0, p) + b;
                    }, Cost::SLOW});
    add_numeric(c, {"E4.3.134a", Group::INTEGRAL, "zeta(s,u) integrates to zero over (0,1)", tol, {-1.5, -0.5, 0.5},
                    [](double s, const PrecisionPolicy& p) {
                        return quad([s, p](double u) { return hurwitz_zeta(s, u, p).value; }, 0, 1, s > 0);
                    },
                    constant(0), Cost::SLOW});
    add_numeric(c, {"E4.3.135a", Group::INTEGRAL, "zeta(s,u) over (1,2) integrates to 1/(s-1)", tol, {2, 3, -0.5},
                    [](double s, const PrecisionPolicy& p) {
                        return quad([s, p](double u) { return hurwitz_zeta(s, u, p).value; }, 1, 2);
                    },
                    [](double s, const PrecisionPolicy&) { return side(1 / (s - 1)); }});
    add_numeric(c, {"E4.3.149", Group::INTEGRAL, "zeta'(1-n,u) integrates to zero over (0,1), n = 1, 2", tol, {1, 2},
                    [](double n, const PrecisionPolicy& p) {
                        const double s = 1 - n;
                        return quad([s, p](double u) { return hurwitz_zeta_deriv(s, u, p).value; }, 0, 1, n == 1);
                    },
                    constant(0), Cost::SLOW});
    add_numeric(c, {"E4.3.151", Group::INTEGRAL, "integral of log G(u+1) over (0,1)", tol, {0},
                    [](double, const PrecisionPolicy& p) {
                        return quad([p](double u) { return log_g(u + 1, p); }, 0, 1);
                    },
                    constant(0.25 * l2p + 1.0 / 12 - 2 * la)});
    auto z1diff = [](double x, const PrecisionPolicy& p) { return zd(-1, x, p) - zd(-1, 1 - x, p); };
    add_numeric(c, {"E4.3.158", Group::INTEGRAL, "first cotangent moment through zeta'(-1, .)", tol, {0.25, 0.4},
                    [](double x, const PrecisionPolicy&) { return side(cot_moment(1, x)); },
                    [z1diff, pi](double x, const PrecisionPolicy& p) {
                        return z1diff(x, p) + x * std::log(2 * std::sin(pi * x));
                    }});
    add_numeric(c, {"E4.3.158a", Group::INTEGRAL, "log-sine integral through zeta'(-1, .)", tol, {0.25, 0.4},
                    [](double x, const PrecisionPolicy&) { return side(log_sine_integral(x)); },
                    [z1diff](double x, const PrecisionPolicy& p) { return -1.0 * z1diff(x, p); }});
    add_numeric(c, {"E4.3.160", Group::INTEGRAL, "integral of log sin over (0, pi/4)", tol, {0},
                    [pi, ln2](double, const PrecisionPolicy&) {
                        return pi * (side(log_sine_integral(0.25)) - 0.25 * ln2);
                    },
                    constant(-pi / 4 * ln2 - 0.5 * k.catalan)});
    auto z2sum = [](double x, const PrecisionPolicy& p) { return zd(-2, x, p) + zd(-2, 1 - x, p); };
    add_numeric(c, {"E4.3.168a", Group::INTEGRAL, "second cotangent moment through zeta'(-2, .)", tol, {0.25, 0.4},
                    [](double x, const PrecisionPolicy&) { return side(cot_moment(2, x)); },
                    [z1diff, z2sum, pi, &k](double x, const PrecisionPolicy& p) {
                        return -1.0 * z2sum(x, p) + 2 * x * z1diff(x, p) +
                               (x * x * std::log(2 * std::sin(pi * x)) - k.zeta3 / (2 * pi * pi));
                    }});
    add_numeric(c, {"E4.3.168c", Group::INTEGRAL, "second cotangent moment at 1/2", tol, {0},
                    [](double, const PrecisionPolicy&) { return side(cot_moment(2, 0.5)); },
                    [&k, pi2, ln2](double, const PrecisionPolicy& p) {
                        return -2.0 * zd(-2, 0.5, p) + (0.25 * ln2 - k.zeta3 / (2 * pi2));
                    }});
    add_numeric(c, {"E4.3.171", Group::INTEGRAL, "second cotangent moment at 1/4", tol, {0},
                    [](double, const PrecisionPolicy&) { return side(cot_moment(2, 0.25)); },
                    [&k, pi2, ln2](double, const PrecisionPolicy& p) {
                        return -1.0 * (zd(-2, 0.25, p) + zd(-2, 0.75, p)) + 0.5 * (zd(-1, 0.25, p) - zd(-1, 0.75, p)) +
                               (ln2 / 32 - k.zeta3 / (2 * pi2));
                    }});
    // psi(x) = psi(1+x) - 1/x keeps the integrands below bounded at 0
    add_numeric(c, {"E4.3.181", Group::INTEGRAL, "digamma moments of antisymmetric weights as cotangent integrals",
                    tol, {1, 2},
                    [psi1](double which, const PrecisionPolicy& p) {
                        auto ps = psi1(p);
                        if (which == 1)
                            return quad([ps](double x) {
                                return (1 - x) * std::cos(std::numbers::pi * x) * (x * ps(x) - 1);
                            }, 0, 1);
                        return quad([ps](double x) { return (1 - x) * (x - 0.5) * (x * ps(x) - 1); }, 0, 1);
                    },
                    [](double which, const PrecisionPolicy&) {
                        // -pi int_0^{1/2} f cot(pi x) = -int_0^{1/2} (f/x) (pi x cot pi x)
                        if (which == 1)
                            return -1.0 * quad([](double x) {
                                return (1 - x) * std::cos(std::numbers::pi * x) * pi_u_cot_pi_u(x);
                            }, 0, 0.5);
                        return -1.0 * quad([](double x) { return (1 - x) * (x - 0.5) * pi_u_cot_pi_u(x); }, 0, 0.5);
                    }});
    add_numeric(c, {"E4.3.182", Group::INTEGRAL, "Glasser's digamma integral with x(1-x) cos(pi x)", 1e-9, {0},
                    [psi1](double, const PrecisionPolicy& p) {
                        auto ps = psi1(p);
                        return quad([ps](double x) {
                            return (1 - x) * std::cos(std::numbers::pi * x) * (x * ps(x) - 1);
                        }, 0, 1);
                    },
                    constant((2 - 3.5 * k.zeta3) / pi2)});
    add_numeric(c, {"E4.3.183", Group::INTEGRAL, "integral of x psi(x+1) over (0,1)", tol, {0},
                    [psi1](double, const PrecisionPolicy& p) {
                        auto ps = psi1(p);
                        return quad([ps](double x) { return x * ps(x); }, 0, 1);
                    },
                    constant(1 - 0.5 * l2p)});
    add_numeric(c, {"E4.3.183a", Group::INTEGRAL, "Choi-Srivastava moments of psi, n = 1, 2", tol, {1, 2},
                    [psi1](double n, const PrecisionPolicy& p) {
                        auto ps = psi1(p);
                        const int m = static_cast<int>(n);
                        return quad([ps, m](double x) { return std::pow(x, m - 1) * (x * ps(x) - 1); }, 0, 1);
                    },
                    [l2p, la](double n, const PrecisionPolicy&) {
                        return side(n == 1 ? -0.5 * l2p : -0.5 * l2p + 2 * la);
                    }});
    auto tg_integral = [](const PrecisionPolicy& p) {
        return quad([p](double x) { return triple_gamma_log(x, p); }, 0, 1);
    };
    add_numeric(c, {"E4.3.183b", Group::INTEGRAL, "B_3 moment of psi through the triple gamma integral", tol, {0},
                    [psi1](double, const PrecisionPolicy& p) {
                        auto ps = psi1(p);
                        // B_3(x) psi(x) = B_3(x) psi(1+x) - (x^2 - 3x/2 + 1/2)
                        return quad([ps](double x) {
                            const double b3 = x * (x - 0.5) * (x - 1);
                            return b3 * ps(x) - (x * x - 1.5 * x + 0.5);
                        }, 0, 1);
                    },
                    [tg_integral, l2p](double, const PrecisionPolicy& p) {
                        return -2.0 * tg_integral(p) - l2p / 12;
                    }});
    add_numeric(c, {"E4.3.184", Group::INTEGRAL, "integral of log Gamma_3(x+1) over (0,1)", 1e-7, {0},
                    [tg_integral](double, const PrecisionPolicy& p) { return tg_integral(p); },
                    constant(-l2p / 24 + 3 * k.zeta3 / (8 * pi2))});
    add_numeric(c, {"E4.3.66fviii", Group::INTEGRAL, "integral of (zeta(2) - Li_2(v))/(1-v) is 2 zeta(3)", tol, {0},
                    [pi2](double, const PrecisionPolicy&) {
                        return quad([pi2](double v) { return (pi2 / 6 - polylog(2, v).value) / (1 - v); }, 0, 1, false,
                                    true);
                    },
                    constant(2 * k.zeta3)});
    add_numeric(c, {"E4.3.71f", Group::INTEGRAL, "zeta(3) as an integral of dilogarithms over (0,1)", tol, {0},
                    [pi2](double, const PrecisionPolicy&) {
                        auto f = [pi2](double t) {
                            // Li_2(-(1-t)/t) + zeta(2) + log(1-t) log t - Li_2(t); the argument
                            // -(1-t)/t leaves [-1,1] for t < 1/2, where the inversion formula is used
                            const double y = -(1 - t) / t;
                            double li;
                            if (y >= -1) {
                                li = polylog(2, y).value;
                            } else {
                                const double l = std::log(-y);
                                li = -pi2 / 6 - 0.5 * l * l - polylog(2, 1 / y).value;
                            }
                            return (li + pi2 / 6 + std::log1p(-t) * std::log(t) - polylog(2, t).value) / (1 - t);
                        };
                        return quad(f, 0, 1, true, true);
                    },
                    constant(k.zeta3)});
}

}  // namespace detail

/// The built-in catalogue; built once.
inline const Catalogue& register_builtin()
{
    static const Catalogue cat = [] {
        Catalogue c;
        detail::register_finite(c);
        detail::register_hasse(c);
        detail::register_euler(c);
        detail::register_logseries(c);
        detail::register_hurwitz(c);
        detail::register_integral(c);
        return c;
    }();
    return cat;
}

struct RunOptions {
    PrecisionPolicy policy{};
    // Replaces the tolerance of numeric records when set.
    std::optional<double> tolerance;
};

inline IdentityOutcome evaluate(const IdentityRecord& r, const RunOptions& opt = {})
{
    const auto t0 = std::chrono::steady_clock::now();
    IdentityOutcome o;
    o.id = r.id;
    o.group = r.group;
    o.tolerance = r.exact() ? 0.0 : opt.tolerance.value_or(r.tolerance);
    try {
        opt.policy.validate();
        if (r.exact()) {
            bool equal = true;
            for (std::size_t i = 0; i < r.exact_cases; ++i) {
                const auto [a, b] = r.exact_case(i);
                o.lhs_value = to_double(a);
                o.rhs_value = to_double(b);
                o.terms = i + 1;
                if (a != b) {
                    equal = false;
                    o.residual = std::max(std::abs(to_double(Rational(a - b))), std::numeric_limits<double>::min());
                    o.note = "case " + std::to_string(i) + " differs";
                    break;
                }
            }
            o.status = equal ? Status::PASS : Status::FAIL;
        } else {
            bool converged = true;
            o.residual = -1;
            for (double x : r.points) {
                const Side a = r.lhs(x, opt.policy);
                const Side b = r.rhs(x, opt.policy);
                converged = converged && a.converged && b.converged;
                o.terms += a.terms + b.terms;
                double d = std::abs(a.value - b.value);
                if (!std::isfinite(d)) d = std::numeric_limits<double>::infinity();
                if (d > o.residual) {
                    o.residual = d;
                    o.lhs_value = a.value;
                    o.rhs_value = b.value;
                }
            }
            if (!converged)
                o.status = Status::NO_CONVERGE;
            else
                o.status = o.residual <= o.tolerance ? Status::PASS : Status::FAIL;
        }
    } catch (const convergence_error& e) {
        o.status = Status::NO_CONVERGE;
        o.residual = std::numeric_limits<double>::quiet_NaN();
        o.note = e.what();
    } catch (const std::exception& e) {
        o.status = Status::FAIL;
        o.residual = std::numeric_limits<double>::quiet_NaN();
        o.note = e.what();
    }
    o.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return o;
}

inline IdentityOutcome check(const std::string& id, const RunOptions& opt = {})
{
    return evaluate(register_builtin().at(id), opt);
}

struct SuiteFilter {
    std::optional<Group> group;
    std::optional<Cost> cost;

    bool accepts(const IdentityRecord& r) const
    {
        return (!group || r.group == *group) && (!cost || r.cost == *cost);
    }
};

struct SuiteReport {
    std::vector<IdentityOutcome> outcomes;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t no_converge = 0;
    std::string timestamp;
    RunOptions options;
    double elapsed = 0;
};

inline std::string utc_timestamp()
{
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return os.str();
}

/// Runs the matching records on a small pool of threads and sorts the
/// outcomes by id.
inline SuiteReport run_suite(const SuiteFilter& filter = {}, const RunOptions& opt = {}, unsigned workers = 0)
{
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<const IdentityRecord*> todo;
    for (const auto& r : register_builtin().records())
        if (filter.accepts(r)) todo.push_back(&r);

    SuiteReport rep;
    rep.options = opt;
    rep.timestamp = utc_timestamp();
    rep.outcomes.resize(todo.size());
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(todo.size(), 1)));
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < todo.size(); i = next++) rep.outcomes[i] = evaluate(*todo[i], opt);
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();

    std::sort(rep.outcomes.begin(), rep.outcomes.end(),
              [](const IdentityOutcome& a, const IdentityOutcome& b) { return id_less(a.id, b.id); });
    for (const auto& o : rep.outcomes) {
        if (o.status == Status::PASS) ++rep.passed;
        if (o.status == Status::FAIL) ++rep.failed;
        if (o.status == Status::NO_CONVERGE) ++rep.no_converge;
    }
    rep.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

/// 0 all pass, 1 any failure, 3 non-convergence without failure.
inline int exit_code(const SuiteReport& rep)
{
    if (rep.failed) return 1;
    if (rep.no_converge) return 3;
    return 0;
}

// --- diagnostics ---------------------------------------------------------

/// Relations that are reported but never judged.
struct Diagnostic {
    std::string id;
    std::string description;
    std::vector<std::pair<std::string, double>> values;
    double residual = 0;  // |values[0] - values[1]|
};

inline std::vector<Diagnostic> run_diagnostics(const PrecisionPolicy& policy = {})
{
    const auto& k = constants();
    const double pi = k.pi, pi2 = pi * pi;
    std::vector<Diagnostic> out;
    auto push = [&out](std::string id, std::string what, std::vector<std::pair<std::string, double>> v) {
        Diagnostic d{std::move(id), std::move(what), std::move(v), 0};
        d.residual = d.values.size() >= 2 ? std::abs(d.values[0].second - d.values[1].second) : 0;
        out.push_back(std::move(d));
    };
    auto guarded = [](auto f) {
        try {
            return f();
        } catch (const std::exception&) {
            return std::numeric_limits<double>::quiet_NaN();
        }
    };

    {
        const double lhs = morley_sum(10000).value();
        const double g14 = std::tgamma(0.25), g34 = std::tgamma(0.75);
        push("D4.3.54", "Morley-type central binomial sum against the printed right side",
             {{"sum", lhs},
              {"printed", pi / 24 * (6 * pi - std::sqrt(2.0) * g14) / std::pow(g34, 4)},
              {"gamma(1/4)^4 reading", pi / 24 * (6 * pi - std::sqrt(2.0) * std::pow(g14, 4)) / std::pow(g34, 4)},
              {"gamma(1/4) gamma(3/4) reading", pi / 24 * (6 * pi - std::sqrt(2.0) * g14 * g34) / std::pow(g34, 4)}});
    }
    {
        PrecisionPolicy raw = policy.raw();
        const double series = guarded([&] {
            using boost::multiprecision::log;
            return hasse_sum([](const wide& x) { return x == 0 ? wide(0) : wide(x * log(x)); }, 0.0, raw).value;
        });
        push("D4.3.109a", "limit of zeta'(0,u) - zeta(0,u) at u -> 0 against the series of k log k",
             {{"series (raw, n_max terms)", series},
              {"u = 1e-3", hurwitz_zeta_deriv(0, 1e-3, policy).value - hurwitz_zeta(0, 1e-3, policy).value},
              {"u = 1e-6", hurwitz_zeta_deriv(0, 1e-6, policy).value - hurwitz_zeta(0, 1e-6, policy).value}});
    }
    push("D4.3.126a", "functional equation at u = -1/2 needs log Gamma(-1/2), and Gamma(-1/2) < 0",
         {{"Gamma(-1/2)", std::tgamma(-0.5)}, {"-2 sqrt(pi)", -2 * std::sqrt(pi)}});
    for (double u : {10.0, 20.0}) {
        const double exact = barnes_g_log(u + 1, policy);
        const double base = 0.5 * u * k.log_2pi + k.zeta_prime_neg1 - 0.75 * u * u + 0.5 * (u * u - 1.0 / 6) * std::log(u);
        push("D4.3.128d-u" + std::to_string(static_cast<int>(u)),
             "log G(u+1) against two asymptotic forms (with and without -u/4 + 1/24)",
             {{"log G(u+1)", exact}, {"with extra terms", base - 0.25 * u + 1.0 / 24}, {"without", base}});
    }
    {
        double tail = 0;
        for (std::size_t j = 1; j <= 30; ++j)
            tail += riemann_zeta_int(static_cast<int>(2 * j)) / (std::ldexp(1.0, 2 * static_cast<int>(j)) * (1.0 + j));
        const double quadv = 4 * guarded([] {
            return adaptive_integrate([](double x) { return x * x / std::tan(x); }, 0.0, std::numbers::pi / 2, 1e-13)
                .value;
        });
        push("Dcot-n2", "Ramanujan cotangent moment at n = 2 against the table form",
             {{"Ramanujan route", pi2 * std::numbers::ln2 - k.zeta3},
              {"table form", pi2 * (0.5 - tail)},
              {"quadrature 4 int x^2 cot x", quadv}});
    }
    push("D4.3.173", "quarter-point pair against zeta'(-2,1/2) with no factor",
         {{"pair", hurwitz_zeta_deriv(-2, 0.25, policy).value + hurwitz_zeta_deriv(-2, 0.75, policy).value},
          {"zeta'(-2,1/2)", hurwitz_zeta_deriv(-2, 0.5, policy).value}});
    {
        const double x = 0.5;
        const double la = k.log_glaisher;
        const double lg = log_gamma(1 + x, policy).value;
        const double d1 = hurwitz_zeta_deriv(-1, 1 + x, policy).value;
        const double d2 = hurwitz_zeta_deriv(-2, 1 + x, policy).value;
        const double printed = -1.0 / 24 + 0.5 * la + k.zeta3 / (8 * pi2) + (1.0 / 12 - la) * x +
                               0.5 * (x * x - x) * lg + 2 * (x - 0.5) * d1 + 0.5 * d2;
        push("D4.3.152i", "triple gamma at x = 1/2 by the printed formula against the closed form",
             {{"printed formula", printed},
              {"closed form", 7 * k.zeta3 / (32 * pi2) - std::log(pi) / 16},
              {"implemented", triple_gamma_log(x, policy)}});
    }
    {
        using boost::multiprecision::pow;
        const double s = guarded([&] {
            return hasse_sum([](const wide& x) { return wide(pow(x, -2)); },
                             [](const wide& x) { return wide(-2 * pow(x, -3)); }, 1.0, policy)
                .value;
        });
        push("D4.3.71", "zeta(3) against the Hasse sum of (1+j)^{-2} with the factor 1/p at p = 1",
             {{"zeta(3)", k.zeta3}, {"with 1/p", s}, {"with 1/(p+1)", s / 2}});
    }
    return out;
}

// --- serialization -------------------------------------------------------

inline nlohmann::ordered_json policy_json(const RunOptions& opt)
{
    nlohmann::ordered_json j;
    j["rel_tol"] = opt.policy.rel_tol;
    j["abs_tol"] = opt.policy.abs_tol;
    j["n_max"] = opt.policy.n_max;
    j["stabilization_count"] = opt.policy.stabilization_count;
    j["lift_floor"] = opt.policy.lift_floor;
    if (opt.tolerance)
        j["tolerance_override"] = *opt.tolerance;
    else
        j["tolerance_override"] = nullptr;
    return j;
}

inline nlohmann::ordered_json outcome_json(const IdentityOutcome& o)
{
    nlohmann::ordered_json j;
    j["id"] = o.id;
    j["group"] = to_string(o.group);
    j["status"] = to_string(o.status);
    j["lhs"] = o.lhs_value;
    j["rhs"] = o.rhs_value;
    j["residual"] = o.residual;
    j["tolerance"] = o.tolerance;
    j["terms"] = o.terms;
    j["seconds"] = o.elapsed;
    return j;
}

inline std::string to_json(const SuiteReport& rep, const std::vector<Diagnostic>* diags = nullptr)
{
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["policy"] = policy_json(rep.options);
    j["outcomes"] = nlohmann::ordered_json::array();
    for (const auto& o : rep.outcomes) j["outcomes"].push_back(outcome_json(o));
    j["summary"] = {{"total", rep.outcomes.size()},
                    {"pass", rep.passed},
                    {"fail", rep.failed},
                    {"no_converge", rep.no_converge}};
    j["timestamp"] = rep.timestamp;
    if (diags) {
        j["diagnostics"] = nlohmann::ordered_json::array();
        for (const auto& d : *diags) {
            nlohmann::ordered_json e;
            e["id"] = d.id;
            e["description"] = d.description;
            e["residual"] = d.residual;
            e["values"] = nlohmann::ordered_json::object();
            for (const auto& [name, v] : d.values) e["values"][name] = v;
            j["diagnostics"].push_back(e);
        }
    }
    return j.dump(2);
}

inline std::string format_double(double v)
{
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

inline std::string to_csv(const SuiteReport& rep)
{
    std::ostringstream os;
    os << "id,group,status,lhs,rhs,residual,tolerance,terms,seconds\n";
    for (const auto& o : rep.outcomes)
        os << o.id << ',' << to_string(o.group) << ',' << to_string(o.status) << ',' << format_double(o.lhs_value) << ','
           << format_double(o.rhs_value) << ',' << format_double(o.residual) << ',' << format_double(o.tolerance) << ','
           << o.terms << ',' << format_double(o.elapsed) << '\n';
    return os.str();
}

/// Operations in the other modules that stand for an equation in the
/// coverage manifest.
inline const std::vector<std::string>& module_operations()
{
    static const std::vector<std::string> ops = {
        "exactmath::harmonic",          "exactmath::stirling1",         "exactmath::bernoulli_poly",
        "exactmath::euler_poly",        "hassekernel::forward_difference", "hassekernel::hasse_sum",
        "hassekernel::sondow_sum",      "specialfn::digamma",           "specialfn::polygamma",
        "specialfn::log_gamma",         "specialfn::log_gamma_stirling", "specialfn::hurwitz_zeta",
        "specialfn::hurwitz_zeta_deriv", "specialfn::barnes_g_log",     "specialfn::triple_gamma_log",
        "specialfn::clausen",           "specialfn::polylog",           "specialfn::incomplete_gamma0",
        "specialfn::stieltjes",         "eulersums::finite_S",          "eulersums::euler_sum_closed",
        "eulersums::euler_sum_numeric", "eulersums::zeta_a_harmonic",   "eulersums::morley_sum",
        "eulersums::shen_series",       "quadrature::cot_moment",       "quadrature::log_sine_integral",
        "identityreg::run_diagnostics",
    };
    return ops;
}

}  // namespace zetaforge
