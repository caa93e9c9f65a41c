#include <doctest.h>

#include <set>

#include "stpapriv/derive.hpp"
#include "stpapriv/parser.hpp"

using namespace stpapriv;

namespace {

AnalysisModel two_action_model() {
    AnalysisModel m("m");
    m.add(Node{"C", NodeKind::Controller, "controller"});
    m.add(Node{"P", NodeKind::ControlledProcess, "process"});
    m.add(Edge{"CA1", EdgeKind::ControlAction, "send analytics data", "C", "P", {}});
    m.add(Edge{"CA2", EdgeKind::ControlAction, "export report", "C", "P", {}});
    m.add(Edge{"FB1", EdgeKind::Feedback, "status", "P", "C", {}});
    return m;
}

} // namespace

TEST_CASE("suggest_constraints negates exactly the unprevented vulnerabilities") {
    AnalysisModel m("m");
    m.add(Vulnerability{"VS1", "General therapy data includes detailed blood sugar values."});
    m.add(Vulnerability{"VS2", "Location traces are retained indefinitely."});
    m.add(PrivacyConstraint{"PC1", "keep it short"});
    m.link(LinkKind::Prevents, "PC1", "VS2");

    auto s = suggest_constraints(m);
    REQUIRE(s.size() == 1);
    CHECK(s[0].kind == Suggestion::Kind::Constraint);
    CHECK(s[0].statement == "The system must prevent the state: General therapy data includes "
                            "detailed blood sugar values.");
    CHECK(s[0].seeds == std::vector<std::string>{"VS1"});
    CHECK_FALSE(s[0].category);

    m.link(LinkKind::Prevents, "PC1", "VS1");
    CHECK(suggest_constraints(m).empty()); // idempotent once adopted
}

TEST_CASE("candidate matrix covers four categories per action") {
    auto m = two_action_model();
    auto c = generate_pcca_candidates(m);
    CHECK(c.size() == 8); // 4 x 2 control actions, feedback excluded

    // all four templates appear for CA1, built from the action label
    std::set<GuideCategory> seen;
    for (const auto& s : c) {
        REQUIRE(s.category);
        if (s.seeds.front() == "CA1") {
            seen.insert(*s.category);
            CHECK(s.statement.find("'send analytics data'") != std::string::npos);
        }
    }
    CHECK(seen.size() == 4);

    const Suggestion* np = nullptr;
    for (const auto& s : c)
        if (s.seeds.front() == "CA1" && s.category == GuideCategory::NotProvided) np = &s;
    REQUIRE(np);
    CHECK(np->statement == "Not providing 'send analytics data' when <condition>");
}

TEST_CASE("existing (action, category) pairs are excluded") {
    auto m = two_action_model();
    m.add(Pcca{"X1", "already screened", "CA1", GuideCategory::NotProvided,
               Assessment::NotApplicable});
    auto c = generate_pcca_candidates(m);
    CHECK(c.size() == 7);
    for (const auto& s : c)
        CHECK_FALSE((s.seeds.front() == "CA1" && s.category == GuideCategory::NotProvided));
}

TEST_CASE("adopting every candidate drives the generator to zero") {
    auto m = two_action_model();
    int i = 0;
    for (const auto& s : generate_pcca_candidates(m))
        m.add(Pcca{"X" + std::to_string(++i), s.statement, s.seeds.front(), *s.category});
    CHECK(generate_pcca_candidates(m).empty());
}

TEST_CASE("corresponding constraints target unlinked hazardous PCCAs only") {
    auto m = two_action_model();
    m.add(PrivacyConstraint{"PC1", "limit analytics"});
    m.add(Pcca{"X1", "analytics data sent without consent", "CA1",
               GuideCategory::ProvidedCausesVulnerability, Assessment::Hazardous});
    m.add(Pcca{"X2", "report withheld", "CA2", GuideCategory::NotProvided,
               Assessment::Hazardous});
    m.add(Pcca{"X3", "benign", "CA2", GuideCategory::WrongTimingOrOrder,
               Assessment::NotApplicable});
    m.link(LinkKind::Violates, "X2", "PC1");

    auto s = derive_corresponding_constraints(m);
    REQUIRE(s.size() == 1);
    CHECK(s[0].statement == "The system must not reach: analytics data sent without consent");
    CHECK(s[0].seeds == std::vector<std::string>{"X1"});
}

TEST_CASE("rendered DSL snippets parse and avoid id collisions") {
    AnalysisModel m("m");
    m.add(Vulnerability{"VS1", "state with \"quotes\" and back\\slash"});
    m.add(PrivacyConstraint{"PC_VS1", "occupies the obvious fresh id"});

    auto snippets = render_suggestions_dsl(m, suggest_constraints(m));
    CHECK(snippets.find("constraint PC_VS1_2 ") != std::string::npos);
    CHECK(snippets.find("  prevents VS1\n") != std::string::npos);

    // paste the suggestion into the source model and re-parse
    auto text = format(m) + "\n" + snippets;
    auto r = parse(text, "adopted.stpa");
    REQUIRE(r.model);
    CHECK(r.model->has_link(LinkKind::Prevents, "PC_VS1_2", "VS1"));
    CHECK(suggest_constraints(*r.model).empty());
}

TEST_CASE("rendered PCCA candidates parse as unassessed pccas") {
    auto m = two_action_model();
    auto snippets = render_suggestions_dsl(m, generate_pcca_candidates(m));
    auto r = parse(format(m) + "\n" + snippets, "adopted.stpa");
    REQUIRE(r.model);
    CHECK(r.model->pccas().size() == 8);
    for (const auto& p : r.model->pccas()) CHECK(p.assessment == Assessment::Unassessed);
    CHECK(generate_pcca_candidates(*r.model).empty());
}

TEST_CASE("suggestion JSON lists kind, statement, seeds, category") {
    auto m = two_action_model();
    auto json = render_suggestions_json(generate_pcca_candidates(m));
    CHECK(json.find("\"kind\": \"pcca_candidate\"") != std::string::npos);
    CHECK(json.find("\"category\": \"not_provided\"") != std::string::npos);
    CHECK(json.find("\"seeds\"") != std::string::npos);
    CHECK(render_suggestions_json({}) == "[]\n");
}
