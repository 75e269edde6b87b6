// zetaforge: constants, special functions, and the identity suite from the shell.
//
// Exit codes: 0 ok, 1 identity failure, 2 usage or domain error,
// 3 non-convergence, 4 I/O failure.

#include <zetaforge/identityreg.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

using namespace zetaforge;

namespace {

enum Exit { OK = 0, FAILED = 1, USAGE = 2, NO_CONV = 3, IO = 4 };

struct CliConfig {
    std::optional<double> tolerance;
    std::optional<std::size_t> n_max;
    std::string group;
    std::string cost;
    std::string json_path;
    std::string csv_path;
    bool quiet = false;
};

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

PrecisionPolicy policy_from(const CliConfig& cfg)
{
    PrecisionPolicy p;
    std::optional<std::size_t> n = cfg.n_max;
    if (!n) {
        if (const char* env = std::getenv("ZETAFORGE_NMAX")) {
            try {
                n = std::stoul(env);
            } catch (const std::exception&) {
                throw usage_error(std::string("ZETAFORGE_NMAX is not a count: ") + env);
            }
        }
    }
    if (n) {
        if (*n == 0) throw usage_error("n_max must be positive");
        p.n_max = *n;
    }
    return p;
}

RunOptions options_from(const CliConfig& cfg)
{
    RunOptions o;
    o.policy = policy_from(cfg);
    if (cfg.tolerance) {
        if (!(*cfg.tolerance > 0)) throw usage_error("tolerance must be positive");
        o.tolerance = cfg.tolerance;
    }
    return o;
}

std::string sig(double v, int digits)
{
    std::ostringstream os;
    os << std::setprecision(digits) << v;
    return os.str();
}

int cmd_const(const std::string& name, int digits)
{
    const auto& k = constants();
    struct Entry {
        double value;
        const char* source;
    };
    const std::map<std::string, Entry> table = {
        {"gamma", {k.euler_gamma, "E4.3.73a"}},
        {"catalan", {k.catalan, "E4.3.160b"}},
        {"glaisher", {std::exp(k.log_glaisher), "E4.3.128a"}},
        {"zeta3", {k.zeta3, "E4.3.133c"}},
        {"zeta_prime_neg1", {k.zeta_prime_neg1, "E4.3.128"}},
        {"zeta_prime_neg2", {k.zeta_prime_neg2, "E4.3.168d"}},
    };
    auto it = table.find(name);
    if (it == table.end()) throw usage_error("unknown constant: " + name);
    if (digits < 1 || digits > 15) throw usage_error("digits must be between 1 and 15");
    std::cout << name << ' ' << sig(it->second.value, digits) << "  (checked by " << it->second.source << ")\n";
    return OK;
}

int print_series(const SeriesResult& r)
{
    std::cout << "value      " << sig(r.value, 16) << '\n'
              << "est_error  " << sig(r.est_error, 3) << '\n'
              << "terms      " << r.terms_used << '\n'
              << "converged  " << (r.converged ? "yes" : "no") << '\n';
    return r.converged ? OK : NO_CONV;
}

int cmd_eval(const std::string& fn, const std::vector<double>& a, const PrecisionPolicy& p)
{
    auto need = [&](std::size_t n) {
        if (a.size() != n)
            throw usage_error(fn + " takes " + std::to_string(n) + " argument" + (n == 1 ? "" : "s"));
    };
    auto index = [](double x) {
        if (x < 0 || x != std::floor(x)) throw usage_error("expected a non-negative integer, got " + sig(x, 6));
        return static_cast<unsigned>(x);
    };
    if (fn == "digamma") return need(1), print_series(digamma(a[0], p));
    if (fn == "polygamma") return need(2), print_series(polygamma(index(a[0]), a[1], p));
    if (fn == "loggamma") return need(1), print_series(log_gamma(a[0], p));
    if (fn == "hurwitz") return need(2), print_series(hurwitz_zeta(a[0], a[1], p));
    if (fn == "hurwitz_deriv") return need(2), print_series(hurwitz_zeta_deriv(a[0], a[1], p));
    if (fn == "barnesg") return need(1), print_series({barnes_g_log(a[0], p), 0, 0, true});
    if (fn == "clausen") return need(2), print_series({clausen(index(a[0]), a[1]), 0, 0, true});
    if (fn == "polylog") return need(2), print_series(polylog(index(a[0]), a[1]));
    if (fn == "stieltjes") return need(2), print_series(stieltjes(index(a[0]), a[1], p));
    throw usage_error("unknown function: " + fn);
}

void print_outcome(const IdentityOutcome& o)
{
    std::cout << std::left << std::setw(14) << o.id << std::setw(10) << to_string(o.group) << std::setw(12)
              << to_string(o.status) << "residual " << std::setw(11) << sig(o.residual, 3) << " tolerance "
              << sig(o.tolerance, 3);
    if (!o.note.empty()) std::cout << "  (" << o.note << ')';
    std::cout << '\n';
}

int status_code(Status s)
{
    if (s == Status::FAIL) return FAILED;
    if (s == Status::NO_CONVERGE) return NO_CONV;
    return OK;
}

int cmd_check(const std::string& id, const CliConfig& cfg)
{
    IdentityOutcome o;
    try {
        o = check(id, options_from(cfg));
    } catch (const unknown_id& e) {
        throw usage_error(e.what());
    }
    print_outcome(o);
    std::cout << "lhs " << sig(o.lhs_value, 17) << "\nrhs " << sig(o.rhs_value, 17) << '\n';
    return status_code(o.status);
}

SuiteFilter filter_from(const CliConfig& cfg)
{
    SuiteFilter f;
    if (!cfg.group.empty()) {
        f.group = parse_group(cfg.group);
        if (!f.group) throw usage_error("unknown group: " + cfg.group);
    }
    if (!cfg.cost.empty()) {
        f.cost = parse_cost(cfg.cost);
        if (!f.cost) throw usage_error("unknown cost class: " + cfg.cost);
    }
    return f;
}

bool write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path);
    if (!out) return false;
    out << text;
    out.close();
    return static_cast<bool>(out);
}

int cmd_suite(const CliConfig& cfg)
{
    const SuiteReport rep = run_suite(filter_from(cfg), options_from(cfg));
    if (!cfg.quiet)
        for (const auto& o : rep.outcomes) print_outcome(o);
    std::cout << rep.outcomes.size() << " identities: " << rep.passed << " pass, " << rep.failed << " fail, "
              << rep.no_converge << " no-converge\n";
    if (!cfg.json_path.empty()) {
        const auto diags = run_diagnostics(rep.options.policy);
        if (!write_file(cfg.json_path, to_json(rep, &diags))) {
            std::cerr << "cannot write " << cfg.json_path << '\n';
            return IO;
        }
    }
    if (!cfg.csv_path.empty() && !write_file(cfg.csv_path, to_csv(rep))) {
        std::cerr << "cannot write " << cfg.csv_path << '\n';
        return IO;
    }
    return exit_code(rep);
}

int cmd_list(const CliConfig& cfg)
{
    const SuiteFilter f = filter_from(cfg);
    for (const auto& r : register_builtin().records()) {
        if (!f.accepts(r)) continue;
        std::cout << std::left << std::setw(14) << r.id << std::setw(10) << to_string(r.group) << std::setw(8)
                  << (r.exact() ? std::string("exact") : sig(r.tolerance, 2)) << std::setw(6) << to_string(r.cost)
                  << r.reference << '\n';
    }
    return OK;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"zetaforge: Hasse-series identities, Euler sums and Hurwitz-zeta derivatives"};
    app.require_subcommand(1);
    app.fallthrough();

    CliConfig cfg;
    app.add_option("--tol", cfg.tolerance, "replace the pass tolerance of numeric records");
    app.add_option("--nmax", cfg.n_max, "maximum Hasse terms (also ZETAFORGE_NMAX)");
    app.add_option("--group", cfg.group, "FINITE, HASSE, EULER, LOGSERIES, HURWITZ or INTEGRAL");
    app.add_option("--cost", cfg.cost, "FAST or SLOW");
    app.add_option("--json", cfg.json_path, "write the suite report as JSON");
    app.add_option("--csv", cfg.csv_path, "write the suite report as CSV");
    app.add_flag("--quiet", cfg.quiet, "summary line only");

    std::string name, fn, id;
    int digits = 10;
    std::vector<double> args;

    auto* c_const = app.add_subcommand("const", "print a constant");
    c_const->add_option("name", name, "gamma, catalan, glaisher, zeta3, zeta_prime_neg1, zeta_prime_neg2")->required();
    c_const->add_option("digits", digits, "significant digits, 1 to 15");

    auto* c_eval = app.add_subcommand("eval", "evaluate a special function");
    c_eval->add_option("fn", fn, "digamma, polygamma, loggamma, hurwitz, hurwitz_deriv, barnesg, clausen, polylog, stieltjes")
        ->required();
    c_eval->add_option("args", args, "arguments")->allow_extra_args();
    c_eval->positionals_at_end(false);

    auto* c_check = app.add_subcommand("check", "check one identity");
    c_check->add_option("id", id)->required();

    auto* c_suite = app.add_subcommand("suite", "run the identity suite");
    auto* c_list = app.add_subcommand("list", "list the catalogue");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? OK : USAGE;
    }

    try {
        if (*c_const) return cmd_const(name, digits);
        if (*c_eval) return cmd_eval(fn, args, policy_from(cfg));
        if (*c_check) return cmd_check(id, cfg);
        if (*c_suite) return cmd_suite(cfg);
        if (*c_list) return cmd_list(cfg);
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return USAGE;
    } catch (const zetaforge::domain_error& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return USAGE;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return USAGE;
    } catch (const convergence_error& e) {
        std::cerr << "no convergence: " << e.what() << '\n';
        return NO_CONV;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return USAGE;
    }
    return USAGE;
}
