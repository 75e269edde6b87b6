#include <zetaforge/identityreg.hpp>

#include <gtest/gtest.h>

#include <fstream>
#include <set>
#include <sstream>

using namespace zetaforge;

namespace {

struct ManifestLine {
    std::string label;
    std::string kind;
    std::string target;
};

std::vector<ManifestLine> read_manifest()
{
    std::ifstream in(ZF_MANIFEST);
    std::vector<ManifestLine> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream is(line);
        std::string label, rest;
        is >> label;
        std::getline(is >> std::ws, rest);
        const auto colon = rest.find(':');
        out.push_back({label, rest.substr(0, colon), colon == std::string::npos ? "" : rest.substr(colon + 1)});
    }
    return out;
}

IdentityRecord numeric_record(std::string id, Evaluator lhs, Evaluator rhs, double tol = 1e-8)
{
    IdentityRecord r;
    r.id = std::move(id);
    r.group = Group::HASSE;
    r.reference = "test";
    r.tolerance = tol;
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    return r;
}

}  // namespace

TEST(Catalogue, SizeAndTolerances)
{
    const auto& cat = register_builtin();
    EXPECT_GE(cat.size(), 55u);
    std::map<Group, double> defaults = {{Group::HASSE, 1e-10},   {Group::EULER, 1e-8},    {Group::LOGSERIES, 1e-6},
                                        {Group::HURWITZ, 1e-8}, {Group::INTEGRAL, 1e-8}};
    // a few records carry their own tolerance
    const std::set<std::string> own = {"E4.3.129", "E4.3.129a", "E4.3.182", "E4.3.184"};
    for (const auto& r : cat.records()) {
        if (r.group == Group::FINITE) {
            EXPECT_TRUE(r.exact()) << r.id;
            EXPECT_GT(r.exact_cases, 0u) << r.id;
            continue;
        }
        EXPECT_GT(r.tolerance, 0) << r.id;
        if (!own.count(r.id)) {
            EXPECT_EQ(r.tolerance, defaults[r.group]) << r.id;
        }
        EXPECT_FALSE(r.reference.empty()) << r.id;
    }
    EXPECT_EQ(cat.at("E4.3.184").tolerance, 1e-7);
}

TEST(Catalogue, DuplicateIdRejected)
{
    Catalogue c;
    auto one = [](double, const PrecisionPolicy&) { return side(1.0); };
    c.add(numeric_record("X1", one, one));
    EXPECT_THROW(c.add(numeric_record("X1", one, one)), std::logic_error);
    EXPECT_THROW(c.add(numeric_record("X2", one, one, 0.0)), std::logic_error);
    EXPECT_THROW(c.at("X3"), unknown_id);
}

TEST(Catalogue, NaturalIdOrder)
{
    EXPECT_TRUE(id_less("E4.2.4", "E4.2.16"));
    EXPECT_TRUE(id_less("E4.3.87", "E4.3.87a"));
    EXPECT_TRUE(id_less("E4.1.28", "E4.2.1"));
    EXPECT_FALSE(id_less("E4.3.110", "E4.3.74"));
}

TEST(Manifest, EveryLabelOnceAndEveryTargetExists)
{
    const auto lines = read_manifest();
    ASSERT_GT(lines.size(), 300u);
    const auto& cat = register_builtin();
    const auto& ops = module_operations();
    std::set<std::string> diag_ids;
    for (const auto& d : run_diagnostics()) diag_ids.insert(d.id);

    std::set<std::string> labels, recorded;
    for (const auto& l : lines) {
        EXPECT_TRUE(labels.insert(l.label).second) << "label twice: " << l.label;
        if (l.kind == "record" || l.kind == "step") {
            EXPECT_TRUE(cat.contains(l.target)) << l.label << " -> " << l.target;
            if (l.kind == "record") {
                EXPECT_EQ(l.target, "E" + l.label);
                recorded.insert(l.target);
            }
        } else if (l.kind == "op") {
            EXPECT_NE(std::find(ops.begin(), ops.end(), l.target), ops.end()) << l.label << " -> " << l.target;
        } else if (l.kind == "diag") {
            EXPECT_TRUE(diag_ids.count(l.target)) << l.label << " -> " << l.target;
        } else {
            EXPECT_EQ(l.kind, "out") << l.label;
            EXPECT_FALSE(l.target.empty()) << l.label;
        }
    }
    for (const auto& r : cat.records()) EXPECT_TRUE(recorded.count(r.id)) << "record missing from manifest: " << r.id;
    for (const char* must : {"4.1.18a", "4.1.22d", "4.1.26", "4.2.50", "4.3.54", "4.3.85", "4.3.87", "4.3.126",
                             "4.3.129", "4.3.128d", "4.3.112f", "4.3.184"})
        EXPECT_TRUE(labels.count(must)) << must;
}

TEST(Check, SpecExamples)
{
    const auto a = check("E4.2.4");
    EXPECT_EQ(a.status, Status::PASS);
    EXPECT_LT(a.residual, 1e-12);
    const auto b = check("E4.3.168d");
    EXPECT_EQ(b.status, Status::PASS);
    EXPECT_LT(b.residual, 1e-8);
    EXPECT_THROW(check("E9.9.9"), unknown_id);

    // E4.1.7 at n = 6 is H_6 = 49/20
    const auto& r = register_builtin().at("E4.1.7");
    const auto [lhs, rhs] = r.exact_case(5);
    EXPECT_EQ(lhs, finite_S(6, 1));
    EXPECT_EQ(rhs, make_rational(49, 20));

    // E4.3.87 at u = 1/4
    const auto& k = register_builtin().at("E4.3.87");
    const double u = 0.25;
    const double want = barnes_g_log(1 + u) - barnes_g_log(1 - u);
    EXPECT_NEAR(k.rhs(u, {}).value, want, 1e-12);
    EXPECT_NEAR(k.lhs(u, {}).value, want, 1e-8);
}

TEST(Check, CorrectedForms)
{
    // each of these differs from its printed form by a constant factor or term
    for (const char* id : {"E4.3.71", "E4.3.71f", "E4.3.76b", "E4.3.87a", "E4.3.98a", "E4.3.128c", "E4.3.171",
                           "E4.3.173"})
        EXPECT_EQ(check(id).status, Status::PASS) << id;
}

TEST(Suite, FiniteGroupIsExact)
{
    const auto rep = run_suite({Group::FINITE, std::nullopt});
    ASSERT_FALSE(rep.outcomes.empty());
    for (const auto& o : rep.outcomes) {
        EXPECT_EQ(o.status, Status::PASS) << o.id << " " << o.note;
        EXPECT_EQ(o.residual, 0.0) << o.id;
        EXPECT_EQ(o.tolerance, 0.0) << o.id;
    }
    EXPECT_EQ(exit_code(rep), 0);
}

TEST(Suite, DeterministicAndSorted)
{
    const SuiteFilter f{Group::HURWITZ, std::nullopt};
    const auto a = run_suite(f, {}, 4);
    const auto b = run_suite(f, {}, 1);
    ASSERT_EQ(a.outcomes.size(), b.outcomes.size());
    for (std::size_t i = 0; i < a.outcomes.size(); ++i) {
        EXPECT_EQ(a.outcomes[i].id, b.outcomes[i].id);
        EXPECT_EQ(a.outcomes[i].lhs_value, b.outcomes[i].lhs_value);
        EXPECT_EQ(a.outcomes[i].rhs_value, b.outcomes[i].rhs_value);
        EXPECT_EQ(a.outcomes[i].status, b.outcomes[i].status);
        if (i) {
            EXPECT_TRUE(id_less(a.outcomes[i - 1].id, a.outcomes[i].id));
        }
    }
}

TEST(Suite, ToleranceMonotone)
{
    const SuiteFilter f{Group::LOGSERIES, std::nullopt};
    double prev_pass = -1;
    for (double tol : {1e-16, 1e-14, 1e-12, 1e-10, 1e-8, 1e-6}) {
        RunOptions o;
        o.tolerance = tol;
        const auto rep = run_suite(f, o);
        EXPECT_GE(static_cast<double>(rep.passed), prev_pass) << tol;
        prev_pass = static_cast<double>(rep.passed);
        for (const auto& out : rep.outcomes) EXPECT_EQ(out.tolerance, tol);
    }
}

TEST(Suite, EmptySlowFilter)
{
    const auto rep = run_suite({Group::FINITE, Cost::SLOW});
    EXPECT_TRUE(rep.outcomes.empty());
    EXPECT_EQ(rep.passed + rep.failed + rep.no_converge, 0u);
    EXPECT_EQ(exit_code(rep), 0);
}

TEST(Suite, TinyTermBudgetGivesNoConverge)
{
    RunOptions o;
    o.policy.n_max = 3;
    EXPECT_EQ(check("E4.2.23", o).status, Status::NO_CONVERGE);
}

TEST(Evaluate, ErrorsBecomeStatuses)
{
    auto one = [](double, const PrecisionPolicy&) { return side(1.0); };
    auto boom = [](double, const PrecisionPolicy&) -> Side { throw std::runtime_error("boom"); };
    auto stall = [](double, const PrecisionPolicy&) -> Side { throw convergence_error("stall"); };
    auto slack = [](double, const PrecisionPolicy&) { return Side{1.0, 5, false}; };

    const auto a = evaluate(numeric_record("T1", one, boom));
    EXPECT_EQ(a.status, Status::FAIL);
    EXPECT_EQ(a.note, "boom");
    EXPECT_EQ(evaluate(numeric_record("T2", stall, one)).status, Status::NO_CONVERGE);
    EXPECT_EQ(evaluate(numeric_record("T3", slack, one)).status, Status::NO_CONVERGE);
    EXPECT_EQ(evaluate(numeric_record("T4", one, one)).status, Status::PASS);
}

TEST(ExitCode, PureMapping)
{
    SuiteReport r;
    EXPECT_EQ(exit_code(r), 0);
    r.no_converge = 1;
    EXPECT_EQ(exit_code(r), 3);
    r.failed = 1;
    EXPECT_EQ(exit_code(r), 1);
}

TEST(Report, JsonFieldOrder)
{
    const auto rep = run_suite({Group::HASSE, std::nullopt});
    const auto j = nlohmann::ordered_json::parse(to_json(rep));
    std::vector<std::string> top, fields;
    for (auto it = j.begin(); it != j.end(); ++it) top.push_back(it.key());
    ASSERT_GE(top.size(), 3u);
    EXPECT_EQ(top[0], "schema_version");
    EXPECT_EQ(top[1], "policy");
    EXPECT_EQ(top[2], "outcomes");
    const auto& first = j["outcomes"][0];
    for (auto it = first.begin(); it != first.end(); ++it) fields.push_back(it.key());
    EXPECT_EQ(fields, (std::vector<std::string>{"id", "group", "status", "lhs", "rhs", "residual", "tolerance", "terms",
                                                "seconds"}));
    EXPECT_EQ(j["summary"]["total"], rep.outcomes.size());

    const std::string csv = to_csv(rep);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "id,group,status,lhs,rhs,residual,tolerance,terms,seconds");
    EXPECT_EQ(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')), rep.outcomes.size() + 1);
}

TEST(Diagnostics, Readings)
{
    std::map<std::string, Diagnostic> d;
    for (auto& x : run_diagnostics()) d[x.id] = x;
    ASSERT_TRUE(d.count("D4.3.54"));
    const auto& m = d["D4.3.54"].values;
    // the sum matches the Gamma(1/4) Gamma(3/4) reading only
    EXPECT_NEAR(m[0].second, m[3].second, 1e-10);
    EXPECT_GT(std::abs(m[0].second - m[1].second), 0.05);
    EXPECT_GT(std::abs(m[0].second - m[2].second), 1.0);
    // the printed pair differs from zeta'(-2,1/2) by a factor 4
    EXPECT_NEAR(d["D4.3.173"].values[1].second / d["D4.3.173"].values[0].second, 4.0, 1e-9);
    // the longer asymptotic form is the worse one
    const auto& a = d["D4.3.128d-u20"].values;
    EXPECT_LT(std::abs(a[0].second - a[2].second), 1e-4);
    EXPECT_GT(std::abs(a[0].second - a[1].second), 1.0);
    EXPECT_GT(d["Dcot-n2"].residual, 1.0);
}
