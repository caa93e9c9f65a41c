#include "stpapriv/model.hpp"

#include <algorithm>

namespace stpapriv {

const char* to_string(LinddunCategory c) {
    switch (c) {
        case LinddunCategory::Linkability: return "linkability";
        case LinddunCategory::Identifiability: return "identifiability";
        case LinddunCategory::NonRepudiation: return "non_repudiation";
        case LinddunCategory::Detectability: return "detectability";
        case LinddunCategory::InformationDisclosure: return "information_disclosure";
        case LinddunCategory::Unawareness: return "unawareness";
        case LinddunCategory::NonCompliance: return "non_compliance";
    }
    return "?";
}

const char* to_string(GuideCategory c) {
    switch (c) {
        case GuideCategory::NotProvided: return "not_provided";
        case GuideCategory::ProvidedCausesVulnerability: return "provided_causes_vulnerability";
        case GuideCategory::WrongTimingOrOrder: return "wrong_timing_or_order";
        case GuideCategory::StoppedTooSoonOrAppliedTooLong: return "stopped_too_soon_or_applied_too_long";
    }
    return "?";
}

const char* to_string(Assessment a) {
    switch (a) {
        case Assessment::Hazardous: return "hazardous";
        case Assessment::NotApplicable: return "not_applicable";
        case Assessment::Unassessed: return "unassessed";
    }
    return "?";
}

const char* to_string(ConstraintOrigin o) {
    switch (o) {
        case ConstraintOrigin::AnalystAuthored: return "analyst";
        case ConstraintOrigin::NegationSuggested: return "suggested";
    }
    return "?";
}

const char* to_string(NodeKind k) {
    switch (k) {
        case NodeKind::Controller: return "controller";
        case NodeKind::ControlledProcess: return "process";
        case NodeKind::Sensor: return "sensor";
        case NodeKind::Actuator: return "actuator";
        case NodeKind::ExternalEntity: return "entity";
    }
    return "?";
}

const char* to_string(EdgeKind k) {
    switch (k) {
        case EdgeKind::ControlAction: return "action";
        case EdgeKind::Feedback: return "feedback";
    }
    return "?";
}

const char* to_string(LinkKind k) {
    switch (k) {
        case LinkKind::CausedBy: return "caused_by";
        case LinkKind::Prevents: return "prevents";
        case LinkKind::EnforcedBy: return "enforced_by";
        case LinkKind::Violates: return "violates";
        case LinkKind::Explains: return "explains";
    }
    return "?";
}

const char* to_string(ArtifactKind k) {
    switch (k) {
        case ArtifactKind::Goal: return "goal";
        case ArtifactKind::Stakeholder: return "stakeholder";
        case ArtifactKind::Consequence: return "consequence";
        case ArtifactKind::Vulnerability: return "vulnerability";
        case ArtifactKind::Constraint: return "constraint";
        case ArtifactKind::Requirement: return "requirement";
        case ArtifactKind::Node: return "node";
        case ArtifactKind::ControlAction: return "control_action";
        case ArtifactKind::Feedback: return "feedback";
        case ArtifactKind::Pcca: return "pcca";
        case ArtifactKind::Scenario: return "scenario";
    }
    return "?";
}

std::optional<LinddunCategory> parse_linddun(std::string_view s) {
    for (auto c : kAllLinddun)
        if (s == to_string(c)) return c;
    if (s == "unwareness") return LinddunCategory::Unawareness; // spelling variant
    return std::nullopt;
}

std::optional<GuideCategory> parse_guide_category(std::string_view s) {
    for (auto c : kAllGuideCategories)
        if (s == to_string(c)) return c;
    return std::nullopt;
}

std::optional<Assessment> parse_assessment(std::string_view s) {
    for (auto a : {Assessment::Hazardous, Assessment::NotApplicable, Assessment::Unassessed})
        if (s == to_string(a)) return a;
    return std::nullopt;
}

std::optional<NodeKind> parse_node_kind(std::string_view s) {
    for (auto k : {NodeKind::Controller, NodeKind::ControlledProcess, NodeKind::Sensor,
                   NodeKind::Actuator, NodeKind::ExternalEntity})
        if (s == to_string(k)) return k;
    return std::nullopt;
}

std::optional<LinkKind> parse_link_kind(std::string_view s) {
    for (auto k : kAllLinkKinds)
        if (s == to_string(k)) return k;
    return std::nullopt;
}

bool is_valid_id(std::string_view id) {
    if (id.empty()) return false;
    auto alpha = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); };
    auto tail = [&](char c) { return alpha(c) || (c >= '0' && c <= '9') || c == '_' || c == '-'; };
    if (!alpha(id.front())) return false;
    return std::all_of(id.begin() + 1, id.end(), tail);
}

ArtifactKind link_from_kind(LinkKind k) {
    switch (k) {
        case LinkKind::CausedBy: return ArtifactKind::Consequence;
        case LinkKind::Prevents: return ArtifactKind::Constraint;
        case LinkKind::EnforcedBy: return ArtifactKind::Constraint;
        case LinkKind::Violates: return ArtifactKind::Pcca;
        case LinkKind::Explains: return ArtifactKind::Scenario;
    }
    return ArtifactKind::Goal;
}

ArtifactKind link_to_kind(LinkKind k) {
    switch (k) {
        case LinkKind::CausedBy: return ArtifactKind::Vulnerability;
        case LinkKind::Prevents: return ArtifactKind::Vulnerability;
        case LinkKind::EnforcedBy: return ArtifactKind::ControlAction;
        case LinkKind::Violates: return ArtifactKind::Constraint;
        case LinkKind::Explains: return ArtifactKind::Pcca;
    }
    return ArtifactKind::Goal;
}

// ---------------------------------------------------------------------------

AnalysisModel::AnalysisModel(std::string name) : name_(std::move(name)) {
    if (name_.empty())
        throw ModelError(ErrorKind::InvalidArgument, "model name must be non-empty");
}

AnalysisModel new_model(std::string name) { return AnalysisModel(std::move(name)); }

void AnalysisModel::require_statement(const std::string& id, const std::string& statement) {
    if (statement.empty())
        throw ModelError(ErrorKind::InvalidArgument,
                         "artifact '" + id + "' has an empty statement");
}

void AnalysisModel::register_id(const std::string& id, ArtifactKind kind) {
    if (!is_valid_id(id))
        throw ModelError(ErrorKind::InvalidArgument, "invalid identifier '" + id + "'");
    std::size_t pos = 0;
    switch (kind) {
        case ArtifactKind::Goal: pos = goals_.size(); break;
        case ArtifactKind::Stakeholder: pos = stakeholders_.size(); break;
        case ArtifactKind::Consequence: pos = consequences_.size(); break;
        case ArtifactKind::Vulnerability: pos = vulnerabilities_.size(); break;
        case ArtifactKind::Constraint: pos = constraints_.size(); break;
        case ArtifactKind::Requirement: pos = requirements_.size(); break;
        case ArtifactKind::Node: pos = structure_.nodes.size(); break;
        case ArtifactKind::ControlAction:
        case ArtifactKind::Feedback: pos = structure_.edges.size(); break;
        case ArtifactKind::Pcca: pos = pccas_.size(); break;
        case ArtifactKind::Scenario: pos = scenarios_.size(); break;
    }
    auto [it, inserted] = index_.emplace(id, IndexEntry{kind, pos});
    if (!inserted)
        throw ModelError(ErrorKind::DuplicateId, "duplicate identifier '" + id + "'");
}

void AnalysisModel::add(Goal g) {
    require_statement(g.id, g.statement);
    register_id(g.id, ArtifactKind::Goal);
    goals_.push_back(std::move(g));
}

void AnalysisModel::add(Stakeholder s) {
    if (s.name.empty())
        throw ModelError(ErrorKind::InvalidArgument,
                         "stakeholder '" + s.id + "' has an empty name");
    register_id(s.id, ArtifactKind::Stakeholder);
    stakeholders_.push_back(std::move(s));
}

void AnalysisModel::add(AdverseConsequence c) {
    require_statement(c.id, c.statement);
    register_id(c.id, ArtifactKind::Consequence);
    consequences_.push_back(std::move(c));
}

void AnalysisModel::add(Vulnerability v) {
    require_statement(v.id, v.statement);
    register_id(v.id, ArtifactKind::Vulnerability);
    vulnerabilities_.push_back(std::move(v));
}

void AnalysisModel::add(PrivacyConstraint c) {
    require_statement(c.id, c.statement);
    register_id(c.id, ArtifactKind::Constraint);
    constraints_.push_back(std::move(c));
}

void AnalysisModel::add(DesignRequirement r) {
    require_statement(r.id, r.statement);
    register_id(r.id, ArtifactKind::Requirement);
    requirements_.push_back(std::move(r));
}

void AnalysisModel::add(Node n) {
    if (n.label.empty())
        throw ModelError(ErrorKind::InvalidArgument, "node '" + n.id + "' has an empty label");
    register_id(n.id, ArtifactKind::Node);
    structure_.nodes.push_back(std::move(n));
}

void AnalysisModel::add(Edge e) {
    if (e.label.empty())
        throw ModelError(ErrorKind::InvalidArgument, "edge '" + e.id + "' has an empty label");
    for (const std::string* ep : {&e.from, &e.to}) {
        auto k = kind_of(*ep);
        if (!k)
            throw ModelError(ErrorKind::DanglingReference,
                             "edge '" + e.id + "' references unknown node '" + *ep + "'");
        if (*k != ArtifactKind::Node)
            throw ModelError(ErrorKind::LinkSignature,
                             "edge '" + e.id + "' endpoint '" + *ep + "' is not a node");
    }
    register_id(e.id, e.kind == EdgeKind::ControlAction ? ArtifactKind::ControlAction
                                                        : ArtifactKind::Feedback);
    structure_.edges.push_back(std::move(e));
}

void AnalysisModel::add(Pcca p) {
    require_statement(p.id, p.statement);
    auto k = kind_of(p.action);
    if (!k)
        throw ModelError(ErrorKind::DanglingReference,
                         "pcca '" + p.id + "' references unknown action '" + p.action + "'");
    if (*k != ArtifactKind::ControlAction)
        throw ModelError(ErrorKind::LinkSignature,
                         "pcca '" + p.id + "' action '" + p.action +
                             "' is not a control-action edge");
    for (const auto& existing : pccas_)
        if (existing.action == p.action && existing.category == p.category &&
            existing.statement == p.statement)
            throw ModelError(ErrorKind::InvalidArgument,
                             "pcca '" + p.id + "' duplicates (action, category, statement) of '" +
                                 existing.id + "'");
    register_id(p.id, ArtifactKind::Pcca);
    pccas_.push_back(std::move(p));
}

void AnalysisModel::add(CausalScenario s) {
    require_statement(s.id, s.statement);
    register_id(s.id, ArtifactKind::Scenario);
    scenarios_.push_back(std::move(s));
}

void AnalysisModel::link(LinkKind kind, const std::string& from, const std::string& to) {
    auto fk = kind_of(from);
    auto tk = kind_of(to);
    if (!fk)
        throw ModelError(ErrorKind::DanglingReference, "unknown identifier '" + from + "'");
    if (!tk)
        throw ModelError(ErrorKind::DanglingReference, "unknown identifier '" + to + "'");
    if (*fk != link_from_kind(kind) || *tk != link_to_kind(kind))
        throw ModelError(ErrorKind::LinkSignature,
                         std::string(to_string(kind)) + " link requires " +
                             to_string(link_from_kind(kind)) + " -> " +
                             to_string(link_to_kind(kind)) + ", got " + to_string(*fk) + " -> " +
                             to_string(*tk));
    if (has_link(kind, from, to)) return;
    links_.push_back({kind, from, to});
}

bool AnalysisModel::unlink(LinkKind kind, const std::string& from, const std::string& to) {
    auto it = std::find(links_.begin(), links_.end(), Link{kind, from, to});
    if (it == links_.end()) return false;
    links_.erase(it);
    return true;
}

bool AnalysisModel::has_link(LinkKind kind, const std::string& from, const std::string& to) const {
    return std::find(links_.begin(), links_.end(), Link{kind, from, to}) != links_.end();
}

std::optional<ArtifactKind> AnalysisModel::kind_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second.kind;
}

#define STPAPRIV_LOOKUP(method, Kind, collection)                                   \
    auto it = index_.find(id);                                                      \
    if (it == index_.end() || it->second.kind != ArtifactKind::Kind) return nullptr; \
    return &collection[it->second.pos]

const Goal* AnalysisModel::goal(const std::string& id) const {
    STPAPRIV_LOOKUP(goal, Goal, goals_);
}
const Stakeholder* AnalysisModel::stakeholder(const std::string& id) const {
    STPAPRIV_LOOKUP(stakeholder, Stakeholder, stakeholders_);
}
const AdverseConsequence* AnalysisModel::consequence(const std::string& id) const {
    STPAPRIV_LOOKUP(consequence, Consequence, consequences_);
}
const Vulnerability* AnalysisModel::vulnerability(const std::string& id) const {
    STPAPRIV_LOOKUP(vulnerability, Vulnerability, vulnerabilities_);
}
const PrivacyConstraint* AnalysisModel::constraint(const std::string& id) const {
    STPAPRIV_LOOKUP(constraint, Constraint, constraints_);
}
const DesignRequirement* AnalysisModel::requirement(const std::string& id) const {
    STPAPRIV_LOOKUP(requirement, Requirement, requirements_);
}
const Node* AnalysisModel::node(const std::string& id) const {
    STPAPRIV_LOOKUP(node, Node, structure_.nodes);
}
const Pcca* AnalysisModel::pcca(const std::string& id) const {
    STPAPRIV_LOOKUP(pcca, Pcca, pccas_);
}
const CausalScenario* AnalysisModel::scenario(const std::string& id) const {
    STPAPRIV_LOOKUP(scenario, Scenario, scenarios_);
}

#undef STPAPRIV_LOOKUP

const Edge* AnalysisModel::edge(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return nullptr;
    if (it->second.kind != ArtifactKind::ControlAction &&
        it->second.kind != ArtifactKind::Feedback)
        return nullptr;
    return &structure_.edges[it->second.pos];
}

std::vector<std::string> AnalysisModel::neighbors(const std::string& id, LinkKind kind,
                                                  Direction direction) const {
    if (!kind_of(id))
        throw ModelError(ErrorKind::NotFound, "unknown identifier '" + id + "'");
    std::vector<std::string> out;
    for (const auto& l : links_) {
        if (l.kind != kind) continue;
        if (direction == Direction::Outgoing && l.from == id) out.push_back(l.to);
        if (direction == Direction::Incoming && l.to == id) out.push_back(l.from);
    }
    return out;
}

bool AnalysisModel::operator==(const AnalysisModel& other) const {
    if (name_ != other.name_) return false;
    if (goals_ != other.goals_ || stakeholders_ != other.stakeholders_ ||
        consequences_ != other.consequences_ || vulnerabilities_ != other.vulnerabilities_ ||
        constraints_ != other.constraints_ || requirements_ != other.requirements_ ||
        structure_ != other.structure_ || pccas_ != other.pccas_ ||
        scenarios_ != other.scenarios_)
        return false;
    auto a = links_;
    auto b = other.links_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

} // namespace stpapriv
