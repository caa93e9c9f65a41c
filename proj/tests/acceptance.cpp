// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Criteria 2, 4, 8, and 9 drive the installed CLI binary; the rest
// exercise the library directly.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

#include "stpapriv/checks.hpp"
#include "stpapriv/derive.hpp"
#include "stpapriv/parser.hpp"
#include "stpapriv/report.hpp"
#include "stpapriv/structure.hpp"

#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace stpapriv;
using namespace testsupport;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string output;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(STPAPRIV_CLI) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {};
    CliResult r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

AnalysisModel fixture_model() {
    auto r = parse(read_file(STPAPRIV_FIXTURE), "ehealth.stpa");
    if (!r.model) throw std::runtime_error("fixture failed to parse");
    return std::move(*r.model);
}

std::string why; // detail appended to a FAIL line

bool expect(bool ok, const std::string& detail) {
    if (!ok && why.empty()) why = detail;
    return ok;
}

// --- criterion 1: fixture fidelity ------------------------------------------

bool criterion1() {
    auto m = fixture_model();
    auto s = stats(m);
    bool ok = expect(s.counts.at(ArtifactKind::Consequence) == 12, "consequences != 12");
    ok &= expect(s.counts.at(ArtifactKind::Vulnerability) == 16, "vulnerabilities != 16");
    ok &= expect(s.linddun_histogram.at(LinddunCategory::InformationDisclosure) == 8,
                 "information_disclosure != 8");
    ok &= expect(s.linddun_histogram.at(LinddunCategory::Unawareness) == 2, "unawareness != 2");
    ok &= expect(s.linddun_histogram.at(LinddunCategory::Linkability) == 2, "linkability != 2");
    ok &= expect(s.linddun_histogram.at(LinddunCategory::Identifiability) == 2,
                 "identifiability != 2");
    // every consequence is linked to at least one vulnerable state
    for (const auto& c : m.consequences())
        ok &= expect(!m.neighbors(c.id, LinkKind::CausedBy, Direction::Outgoing).empty(),
                     c.id + " has no vulnerable-state link");
    auto cli = run_cli(std::string("report stats \"") + STPAPRIV_FIXTURE + "\"");
    ok &= expect(cli.exit_code == 0, "report stats exit != 0");
    ok &= expect(cli.output.find("consequences=12\n") != std::string::npos,
                 "stats output lacks consequences=12");
    return ok;
}

// --- criterion 2: clean check, under a second -------------------------------

bool criterion2() {
    auto start = std::chrono::steady_clock::now();
    auto cli = run_cli(std::string("check \"") + STPAPRIV_FIXTURE + "\"");
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    bool ok = expect(cli.exit_code == 0, "check exit != 0");
    ok &= expect(cli.output.find("error[") == std::string::npos, "check printed an error");
    ok &= expect(ms < 1000, "check took " + std::to_string(ms) + " ms");
    return ok;
}

// --- criterion 3: mutation sensitivity --------------------------------------

bool criterion3() {
    auto baseline_model = fixture_model();
    std::multiset<std::string> baseline;
    for (const auto& d : run_checks(baseline_model)) baseline.insert(d.code + "|" + d.message);

    struct Mutation {
        LinkKind kind;
        const char* from;
        const char* to;
        const char* expected;
    };
    const Mutation mutations[] = {
        {LinkKind::CausedBy, "AC6", "VS10", "R010"},
        {LinkKind::Prevents, "PC3", "VS3", "R012"},
        {LinkKind::EnforcedBy, "PC1", "CA7", "R013"},
        {LinkKind::Violates, "PCCA2", "PC7", "R022"},
        {LinkKind::Explains, "SC4", "PCCA9", "R030"},
    };

    bool ok = true;
    for (const auto& mu : mutations) {
        auto m = fixture_model();
        m.unlink(mu.kind, mu.from, mu.to);
        bool hit = false;
        for (const auto& d : run_checks(m)) {
            if (baseline.count(d.code + "|" + d.message)) continue; // pre-existing
            if (d.code == mu.expected) {
                hit = true;
            } else {
                ok &= expect(d.severity != Severity::Error,
                             std::string("mutation for ") + mu.expected +
                                 " raised unexpected error " + d.code);
            }
        }
        ok &= expect(hit, std::string("mutation did not raise ") + mu.expected);
    }
    return ok;
}

// --- criterion 4: candidate count law ---------------------------------------

bool criterion4() {
    // strip every pcca (and the links that touch them) via the interchange form
    auto doc = nlohmann::ordered_json::parse(export_json(fixture_model()));
    std::set<std::string> pcca_ids;
    for (const auto& p : doc["pccas"]) pcca_ids.insert(p["id"].get<std::string>());
    doc["pccas"] = nlohmann::ordered_json::array();
    nlohmann::ordered_json kept = nlohmann::ordered_json::array();
    for (const auto& l : doc["links"]) {
        if (pcca_ids.count(l["from"].get<std::string>()) ||
            pcca_ids.count(l["to"].get<std::string>()))
            continue;
        kept.push_back(l);
    }
    doc["links"] = std::move(kept);

    auto r = load_json(doc.dump());
    bool ok = expect(bool(r.model), "stripped model failed to load");
    if (!ok) return false;

    auto actions = control_actions(r.model->structure()).size();
    auto candidates = generate_pcca_candidates(*r.model);
    ok &= expect(candidates.size() == 4 * actions,
                 "expected " + std::to_string(4 * actions) + " candidates, got " +
                     std::to_string(candidates.size()));

    // the CLI agrees
    std::string tmp = "/tmp/stpapriv_stripped.json";
    std::ofstream(tmp) << doc.dump(2) << "\n";
    auto cli = run_cli("derive pcca " + tmp + " --format json");
    std::size_t emitted = 0, pos = 0;
    while ((pos = cli.output.find("\"kind\": \"pcca_candidate\"", pos)) != std::string::npos) {
        ++emitted;
        pos += 10;
    }
    ok &= expect(cli.exit_code == 0 && emitted == 4 * actions,
                 "CLI emitted " + std::to_string(emitted) + " candidates");

    // adopting every candidate drives re-derivation to zero
    int i = 0;
    for (const auto& s : candidates)
        r.model->add(Pcca{"ADOPTED" + std::to_string(++i), s.statement, s.seeds.front(),
                          *s.category});
    ok &= expect(generate_pcca_candidates(*r.model).empty(), "re-derivation not empty");
    return ok;
}

// --- criterion 5: negation-template seeding ---------------------------------

bool criterion5() {
    auto m = fixture_model();
    const auto vs3 = m.vulnerability("VS3");
    bool ok = expect(bool(vs3), "fixture lacks VS3");
    if (!ok) return false;
    m.unlink(LinkKind::Prevents, "PC3", "VS3");
    for (const auto& s : suggest_constraints(m)) {
        if (s.seeds == std::vector<std::string>{"VS3"}) {
            ok &= expect(s.statement == "The system must prevent the state: " + vs3->statement,
                         "unexpected suggestion statement");
            return ok;
        }
    }
    return expect(false, "no suggestion seeded by VS3");
}

// --- criterion 6: round-trip properties over 200 models ---------------------

bool criterion6() {
    std::mt19937 rng(600);
    std::set<ArtifactKind> kinds;
    std::set<LinkKind> link_kinds;
    std::set<LinddunCategory> linddun;
    std::set<GuideCategory> categories;
    std::set<Assessment> assessments;
    std::set<ConstraintOrigin> origins;
    std::set<NodeKind> node_kinds;
    std::set<EdgeKind> edge_kinds;

    bool ok = true;
    for (int i = 0; i < 200 && ok; ++i) {
        bool expressible = (i % 2 == 0);
        AnalysisModel m = (i == 0)   ? full_coverage_model(true)
                          : (i == 1) ? full_coverage_model(false)
                                     : random_model(rng, {.dsl_expressible = expressible});
        for (const auto& c : m.consequences()) {
            kinds.insert(ArtifactKind::Consequence);
            for (auto t : c.linddun) linddun.insert(t);
        }
        if (!m.goals().empty()) kinds.insert(ArtifactKind::Goal);
        if (!m.stakeholders().empty()) kinds.insert(ArtifactKind::Stakeholder);
        if (!m.vulnerabilities().empty()) kinds.insert(ArtifactKind::Vulnerability);
        if (!m.requirements().empty()) kinds.insert(ArtifactKind::Requirement);
        if (!m.scenarios().empty()) kinds.insert(ArtifactKind::Scenario);
        for (const auto& c : m.constraints()) {
            kinds.insert(ArtifactKind::Constraint);
            origins.insert(c.origin);
        }
        for (const auto& n : m.structure().nodes) {
            kinds.insert(ArtifactKind::Node);
            node_kinds.insert(n.kind);
        }
        for (const auto& e : m.structure().edges) {
            kinds.insert(e.kind == EdgeKind::ControlAction ? ArtifactKind::ControlAction
                                                           : ArtifactKind::Feedback);
            edge_kinds.insert(e.kind);
        }
        for (const auto& p : m.pccas()) {
            kinds.insert(ArtifactKind::Pcca);
            categories.insert(p.category);
            assessments.insert(p.assessment);
        }
        for (const auto& l : m.links()) link_kinds.insert(l.kind);

        auto doc = export_json(m);
        auto jr = load_json(doc);
        ok &= expect(jr.model && *jr.model == m && export_json(*jr.model) == doc,
                     "JSON round trip failed at model " + std::to_string(i));
        if (expressible || i == 0) {
            auto text = format(m);
            auto pr = parse(text, "gen.stpa");
            ok &= expect(pr.model && pr.diagnostics.empty() && *pr.model == m,
                         "DSL round trip failed at model " + std::to_string(i));
        }
    }
    ok &= expect(kinds.size() == 11, "artifact kind coverage incomplete");
    ok &= expect(link_kinds.size() == 5, "link kind coverage incomplete");
    ok &= expect(linddun.size() == 7, "LINDDUN coverage incomplete");
    ok &= expect(categories.size() == 4, "guide category coverage incomplete");
    ok &= expect(assessments.size() == 3, "assessment coverage incomplete");
    ok &= expect(origins.size() == 2, "origin coverage incomplete");
    ok &= expect(node_kinds.size() == 5, "node kind coverage incomplete");
    ok &= expect(edge_kinds.size() == 2, "edge kind coverage incomplete");
    return ok;
}

// --- criterion 7: feedback-loop oracle --------------------------------------

bool criterion7() {
    std::mt19937 rng(700);
    bool ok = true;
    for (int i = 0; i < 100 && ok; ++i) {
        auto s = random_structure(rng, 12);
        auto got = find_feedback_loops(s);
        ok &= expect(got == brute_force_feedback_loops(s),
                     "loop mismatch at structure " + std::to_string(i));
        std::set<std::string> in_loop;
        for (const auto& loop : got)
            for (const auto& id : loop) in_loop.insert(id);
        std::vector<std::string> open;
        for (const auto& e : s.edges)
            if (e.kind == EdgeKind::ControlAction && !in_loop.count(e.id)) open.push_back(e.id);
        ok &= expect(detect_open_loops(s) == open,
                     "open-loop complement mismatch at structure " + std::to_string(i));
    }
    return ok;
}

// --- criterion 8: byte determinism of every subcommand ----------------------

bool criterion8() {
    const std::string f = std::string("\"") + STPAPRIV_FIXTURE + "\"";
    const std::string invocations[] = {
        "check " + f,
        "check " + f + " --format json",
        "derive constraints " + f,
        "derive pcca " + f + " --format json",
        "derive corresponding " + f,
        "report stats " + f,
        "report stats " + f + " --format json",
        "report trace " + f,
        "report trace " + f + " --format csv",
        "export dot " + f,
        "export json " + f,
        "rules",
    };
    bool ok = true;
    for (const auto& inv : invocations) {
        auto a = run_cli(inv);
        auto b = run_cli(inv);
        ok &= expect(a.exit_code == b.exit_code && a.output == b.output,
                     "nondeterministic output for: " + inv);
        ok &= expect(a.exit_code == 0, "exit != 0 for: " + inv);
    }
    return ok;
}

// --- criterion 9: scale bound -----------------------------------------------

bool criterion9() {
    // 10,000 artifacts (3,000 consequences + 3,000 vulnerabilities +
    // 3,000 constraints + 1,000 scenarios) and 20,000 links
    AnalysisModel m("scale");
    const int n = 3000;
    for (int i = 0; i < n; ++i) {
        m.add(AdverseConsequence{"AC" + std::to_string(i), "consequence " + std::to_string(i),
                                 {LinddunCategory::InformationDisclosure}});
        m.add(Vulnerability{"VS" + std::to_string(i), "state " + std::to_string(i)});
        m.add(PrivacyConstraint{"PC" + std::to_string(i), "limit " + std::to_string(i)});
    }
    for (int i = 0; i < 1000; ++i)
        m.add(CausalScenario{"SC" + std::to_string(i), "scenario " + std::to_string(i)});
    std::size_t links = 0;
    for (int i = 0; i < n; ++i) {
        for (int k : {0, 1, 2}) {
            m.link(LinkKind::CausedBy, "AC" + std::to_string(i),
                   "VS" + std::to_string((i + k) % n));
            m.link(LinkKind::Prevents, "PC" + std::to_string(i),
                   "VS" + std::to_string((i + 7 * k) % n));
        }
    }
    for (int i = 0; i < 2000; ++i)
        m.link(LinkKind::CausedBy, "AC" + std::to_string(i), "VS" + std::to_string((i + 5) % n));
    links = m.links().size();
    bool ok = expect(m.artifact_count() == 10000, "artifact count != 10000");
    ok &= expect(links == 20000, "link count " + std::to_string(links) + " != 20000");

    std::string tmp = "/tmp/stpapriv_scale.json";
    std::ofstream(tmp) << export_json(m);
    auto start = std::chrono::steady_clock::now();
    auto cli = run_cli("check " + tmp);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    ok &= expect(cli.exit_code <= 1, "scale check failed to run");
    ok &= expect(ms < 5000, "scale check took " + std::to_string(ms) + " ms");
    return ok;
}

} // namespace

int main() {
    struct Entry {
        int number;
        const char* title;
        bool (*fn)();
    };
    const Entry entries[] = {
        {1, "fixture fidelity", criterion1},
        {2, "clean check under one second", criterion2},
        {3, "mutation sensitivity", criterion3},
        {4, "candidate count law", criterion4},
        {5, "negation-template seeding", criterion5},
        {6, "round-trip properties", criterion6},
        {7, "feedback-loop oracle", criterion7},
        {8, "byte determinism", criterion8},
        {9, "scale bound", criterion9},
    };
    int failures = 0;
    for (const auto& e : entries) {
        why.clear();
        bool ok = false;
        try {
            ok = e.fn();
        } catch (const std::exception& ex) {
            why = ex.what();
        }
        if (ok) {
            std::cout << "PASS criterion " << e.number << ": " << e.title << "\n";
        } else {
            ++failures;
            std::cout << "FAIL criterion " << e.number << ": " << e.title
                      << (why.empty() ? "" : " (" + why + ")") << "\n";
        }
    }
    return failures == 0 ? 0 : 1;
}
