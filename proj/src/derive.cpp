#include "stpapriv/derive.hpp"

#include <json.hpp>
#include <set>

#include "stpapriv/structure.hpp"

namespace stpapriv {

namespace {

std::string candidate_statement(GuideCategory category, const std::string& label) {
    switch (category) {
        case GuideCategory::NotProvided:
            return "Not providing '" + label + "' when <condition>";
        case GuideCategory::ProvidedCausesVulnerability:
            return "Providing '" + label + "' when <condition>";
        case GuideCategory::WrongTimingOrOrder:
            return "Providing '" + label + "' too early, too late, or out of order relative to <event>";
        case GuideCategory::StoppedTooSoonOrAppliedTooLong:
            return "Stopping '" + label + "' too soon or applying it too long";
    }
    return "";
}

const char* category_suffix(GuideCategory c) {
    switch (c) {
        case GuideCategory::NotProvided: return "np";
        case GuideCategory::ProvidedCausesVulnerability: return "pcv";
        case GuideCategory::WrongTimingOrOrder: return "wto";
        case GuideCategory::StoppedTooSoonOrAppliedTooLong: return "sts";
    }
    return "x";
}

} // namespace

std::vector<Suggestion> suggest_constraints(const AnalysisModel& model) {
    std::vector<Suggestion> out;
    for (const auto& v : model.vulnerabilities()) {
        if (!model.neighbors(v.id, LinkKind::Prevents, Direction::Incoming).empty()) continue;
        out.push_back({Suggestion::Kind::Constraint,
                       "The system must prevent the state: " + v.statement,
                       {v.id},
                       std::nullopt});
    }
    return out;
}

std::vector<Suggestion> generate_pcca_candidates(const AnalysisModel& model) {
    std::set<std::pair<std::string, GuideCategory>> covered;
    for (const auto& p : model.pccas()) covered.emplace(p.action, p.category);

    std::vector<Suggestion> out;
    for (const auto& action : control_actions(model.structure())) {
        for (auto category : kAllGuideCategories) {
            if (covered.count({action.id, category})) continue;
            out.push_back({Suggestion::Kind::PccaCandidate,
                           candidate_statement(category, action.label),
                           {action.id},
                           category});
        }
    }
    return out;
}

std::vector<Suggestion> derive_corresponding_constraints(const AnalysisModel& model) {
    std::vector<Suggestion> out;
    for (const auto& p : model.pccas()) {
        if (p.assessment != Assessment::Hazardous) continue;
        if (!model.neighbors(p.id, LinkKind::Violates, Direction::Outgoing).empty()) continue;
        out.push_back({Suggestion::Kind::Constraint,
                       "The system must not reach: " + p.statement,
                       {p.id},
                       std::nullopt});
    }
    return out;
}

namespace {

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

std::string fresh_id(const AnalysisModel& model, std::set<std::string>& taken,
                     const std::string& base) {
    std::string id = base;
    for (int n = 2; model.kind_of(id) || taken.count(id); ++n)
        id = base + "_" + std::to_string(n);
    taken.insert(id);
    return id;
}

} // namespace

std::string render_suggestions_dsl(const AnalysisModel& model,
                                   const std::vector<Suggestion>& suggestions) {
    std::set<std::string> taken;
    std::string out;
    for (const auto& s : suggestions) {
        if (!out.empty()) out += "\n";
        const std::string& seed = s.seeds.front();
        if (s.kind == Suggestion::Kind::Constraint) {
            std::string id = fresh_id(model, taken, "PC_" + seed);
            out += "constraint " + id + " " + quote(s.statement) + "\n";
            // Only vulnerability seeds can carry the prevents sugar; a
            // constraint derived from a hazardous PCCA is linked by editing
            // that pcca's violates clause instead.
            if (model.kind_of(seed) == ArtifactKind::Vulnerability)
                out += "  prevents " + seed + "\n";
            else
                out += "# derived from " + seed + "; add '" + id +
                       "' to that pcca's violates clause\n";
        } else {
            std::string id =
                fresh_id(model, taken, "PCCA_" + seed + "_" + category_suffix(*s.category));
            out += "pcca " + id + " " + quote(s.statement) + "\n";
            out += "  action " + seed + "\n";
            out += "  category " + std::string(to_string(*s.category)) + "\n";
        }
    }
    return out;
}

std::string render_suggestions_json(const std::vector<Suggestion>& suggestions) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& s : suggestions) {
        nlohmann::ordered_json o;
        o["kind"] = s.kind == Suggestion::Kind::Constraint ? "constraint" : "pcca_candidate";
        o["statement"] = s.statement;
        o["seeds"] = s.seeds;
        if (s.category) o["category"] = to_string(*s.category);
        arr.push_back(std::move(o));
    }
    return arr.dump(2) + "\n";
}

} // namespace stpapriv
