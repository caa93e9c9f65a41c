#include <doctest.h>

#include <random>
#include <set>

#include "stpapriv/checks.hpp"
#include "stpapriv/parser.hpp"
#include "stpapriv/report.hpp"
#include "stpapriv/structure.hpp"

#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace stpapriv;
using namespace testsupport;

TEST_CASE("property: parse(format(m)) reproduces every expressible model") {
    std::mt19937 rng(20260823);
    for (int i = 0; i < 60; ++i) {
        auto m = random_model(rng, {.dsl_expressible = true});
        auto text = format(m);
        auto r = parse(text, "gen.stpa");
        REQUIRE_MESSAGE(r.model, "iteration " << i << "\n" << text);
        CHECK_MESSAGE(r.diagnostics.empty(), "iteration " << i);
        CHECK_MESSAGE(*r.model == m, "iteration " << i << "\n" << text);
        CHECK(format(*r.model) == text);
    }
}

TEST_CASE("property: load_json(export_json(m)) is the identity") {
    std::mt19937 rng(7);
    for (int i = 0; i < 60; ++i) {
        // also exercise fields the textual grammar cannot carry
        auto m = random_model(rng, {.dsl_expressible = (i % 2 == 0)});
        auto doc = export_json(m);
        auto r = load_json(doc);
        REQUIRE_MESSAGE(r.model, "iteration " << i << "\n" << doc);
        CHECK(r.diagnostics.empty());
        CHECK_MESSAGE(*r.model == m, "iteration " << i);
        CHECK(export_json(*r.model) == doc);
    }
}

TEST_CASE("property: every stored link is visible from both endpoints") {
    std::mt19937 rng(99);
    for (int i = 0; i < 40; ++i) {
        auto m = random_model(rng);
        for (const auto& l : m.links()) {
            auto out = m.neighbors(l.from, l.kind, Direction::Outgoing);
            auto in = m.neighbors(l.to, l.kind, Direction::Incoming);
            CHECK(std::count(out.begin(), out.end(), l.to) == 1);
            CHECK(std::count(in.begin(), in.end(), l.from) == 1);
        }
    }
}

TEST_CASE("property: loop finder agrees with the brute-force oracle") {
    std::mt19937 rng(4242);
    for (int i = 0; i < 120; ++i) {
        auto s = random_structure(rng, 7);
        auto got = find_feedback_loops(s);
        auto want = brute_force_feedback_loops(s);
        CHECK_MESSAGE(got == want, "iteration " << i << ", " << s.nodes.size() << " nodes, "
                                                << s.edges.size() << " edges");
        // open loops are exactly the control actions outside every loop
        std::set<std::string> in_loop;
        for (const auto& loop : got)
            for (const auto& id : loop) in_loop.insert(id);
        std::vector<std::string> expected_open;
        for (const auto& e : s.edges)
            if (e.kind == EdgeKind::ControlAction && !in_loop.count(e.id))
                expected_open.push_back(e.id);
        CHECK(detect_open_loops(s) == expected_open);
    }
}

TEST_CASE("property: trace matrix agrees with the chain oracle") {
    std::mt19937 rng(11);
    for (int i = 0; i < 60; ++i) {
        auto m = random_model(rng, {.dsl_expressible = false});
        CHECK_MESSAGE(traceability_matrix(m) == brute_force_trace_rows(m), "iteration " << i);
    }
}

TEST_CASE("property: checks are deterministic and override-stable") {
    std::mt19937 rng(5150);
    for (int i = 0; i < 30; ++i) {
        auto m = random_model(rng);
        auto a = run_checks(m);
        auto b = run_checks(m);
        REQUIRE(a.size() == b.size());
        for (std::size_t j = 0; j < a.size(); ++j) {
            CHECK(a[j].code == b[j].code);
            CHECK(a[j].message == b[j].message);
            CHECK(a[j].severity == b[j].severity);
        }
        // overrides change severities, never the finding set
        RuleConfig cfg;
        cfg.severity_overrides["R012"] = Severity::Info;
        auto c = run_checks(m, cfg);
        REQUIRE(c.size() == a.size());
        std::multiset<std::string> before, after;
        for (const auto& d : a) before.insert(d.code + d.message);
        for (const auto& d : c) after.insert(d.code + d.message);
        CHECK(before == after);
    }
}

TEST_CASE("property: exported DOT stays inside the documented subset") {
    std::mt19937 rng(321);
    for (int i = 0; i < 40; ++i) {
        auto s = random_structure(rng, 6);
        CHECK_MESSAGE(validate_dot(export_dot(s)), "iteration " << i);
    }
}

TEST_CASE("full-coverage model survives both round trips") {
    auto dsl = full_coverage_model(true);
    auto r = parse(format(dsl), "cov.stpa");
    REQUIRE(r.model);
    CHECK(*r.model == dsl);

    auto rich = full_coverage_model(false);
    auto back = load_json(export_json(rich));
    REQUIRE(back.model);
    CHECK(*back.model == rich);
    // optional fields the grammar cannot carry survive the JSON trip
    CHECK(back.model->stakeholders()[0].role_note == "note");
    CHECK(back.model->constraints()[1].origin == ConstraintOrigin::NegationSuggested);
    CHECK(back.model->pccas()[0].rationale == "because");
}
