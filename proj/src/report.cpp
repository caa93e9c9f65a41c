#include "stpapriv/report.hpp"

#include <algorithm>

namespace stpapriv {

Stats stats(const AnalysisModel& m) {
    Stats s;
    for (auto kind :
         {ArtifactKind::Goal, ArtifactKind::Stakeholder, ArtifactKind::Consequence,
          ArtifactKind::Vulnerability, ArtifactKind::Constraint, ArtifactKind::Requirement,
          ArtifactKind::Node, ArtifactKind::ControlAction, ArtifactKind::Feedback,
          ArtifactKind::Pcca, ArtifactKind::Scenario})
        s.counts[kind] = 0;
    s.counts[ArtifactKind::Goal] = m.goals().size();
    s.counts[ArtifactKind::Stakeholder] = m.stakeholders().size();
    s.counts[ArtifactKind::Consequence] = m.consequences().size();
    s.counts[ArtifactKind::Vulnerability] = m.vulnerabilities().size();
    s.counts[ArtifactKind::Constraint] = m.constraints().size();
    s.counts[ArtifactKind::Requirement] = m.requirements().size();
    s.counts[ArtifactKind::Node] = m.structure().nodes.size();
    s.counts[ArtifactKind::Pcca] = m.pccas().size();
    s.counts[ArtifactKind::Scenario] = m.scenarios().size();
    for (const auto& e : m.structure().edges)
        ++s.counts[e.kind == EdgeKind::ControlAction ? ArtifactKind::ControlAction
                                                     : ArtifactKind::Feedback];

    for (auto c : kAllLinddun) s.linddun_histogram[c] = 0;
    for (const auto& c : m.consequences())
        for (auto tag : c.linddun) ++s.linddun_histogram[tag];

    for (auto c : kAllGuideCategories) s.pcca_by_category[c] = 0;
    for (const auto& p : m.pccas()) {
        ++s.pcca_by_category[p.category];
        if (p.assessment == Assessment::Unassessed) ++s.unassessed_pccas;
    }
    return s;
}

std::vector<TraceRow> traceability_matrix(const AnalysisModel& m) {
    std::vector<TraceRow> rows;
    for (const auto& c : m.consequences()) {
        auto vulnerabilities = m.neighbors(c.id, LinkKind::CausedBy, Direction::Outgoing);
        if (vulnerabilities.empty()) {
            rows.push_back({std::nullopt, std::nullopt, std::nullopt, std::nullopt, c.id});
            continue;
        }
        for (const auto& v : vulnerabilities) {
            auto constraints = m.neighbors(v, LinkKind::Prevents, Direction::Incoming);
            if (constraints.empty()) {
                rows.push_back({std::nullopt, std::nullopt, std::nullopt, v, c.id});
                continue;
            }
            for (const auto& k : constraints) {
                auto pccas = m.neighbors(k, LinkKind::Violates, Direction::Incoming);
                if (pccas.empty()) {
                    rows.push_back({std::nullopt, std::nullopt, k, v, c.id});
                    continue;
                }
                for (const auto& p : pccas) {
                    auto scenarios = m.neighbors(p, LinkKind::Explains, Direction::Incoming);
                    if (scenarios.empty()) {
                        rows.push_back({std::nullopt, p, k, v, c.id});
                        continue;
                    }
                    for (const auto& sc : scenarios) rows.push_back({sc, p, k, v, c.id});
                }
            }
        }
    }
    std::sort(rows.begin(), rows.end(), [](const TraceRow& a, const TraceRow& b) {
        if (a.consequence != b.consequence) return a.consequence < b.consequence;
        if (a.vulnerability != b.vulnerability) return a.vulnerability < b.vulnerability;
        if (a.constraint != b.constraint) return a.constraint < b.constraint;
        if (a.pcca != b.pcca) return a.pcca < b.pcca;
        return a.scenario < b.scenario;
    });
    return rows;
}

namespace {

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string cell(const std::optional<std::string>& v) { return v ? *v : std::string(); }

} // namespace

std::string render_matrix(const std::vector<TraceRow>& rows, MatrixFormat format) {
    std::string out;
    if (format == MatrixFormat::Csv) {
        out = "scenario,pcca,constraint,vulnerability,consequence\r\n";
        for (const auto& r : rows) {
            out += csv_quote(cell(r.scenario)) + "," + csv_quote(cell(r.pcca)) + "," +
                   csv_quote(cell(r.constraint)) + "," + csv_quote(cell(r.vulnerability)) + "," +
                   csv_quote(r.consequence) + "\r\n";
        }
        return out;
    }
    out = "| scenario | pcca | constraint | vulnerability | consequence |\n";
    out += "| --- | --- | --- | --- | --- |\n";
    for (const auto& r : rows) {
        out += "| " + cell(r.scenario) + " | " + cell(r.pcca) + " | " + cell(r.constraint) +
               " | " + cell(r.vulnerability) + " | " + r.consequence + " |\n";
    }
    return out;
}

} // namespace stpapriv
