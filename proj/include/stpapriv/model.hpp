#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace stpapriv {

// ---------------------------------------------------------------------------
// Enumerations

enum class LinddunCategory {
    Linkability,
    Identifiability,
    NonRepudiation,
    Detectability,
    InformationDisclosure,
    Unawareness,
    NonCompliance,
};

enum class GuideCategory {
    NotProvided,
    ProvidedCausesVulnerability,
    WrongTimingOrOrder,
    StoppedTooSoonOrAppliedTooLong,
};

enum class Assessment { Hazardous, NotApplicable, Unassessed };

enum class ConstraintOrigin { AnalystAuthored, NegationSuggested };

enum class NodeKind { Controller, ControlledProcess, Sensor, Actuator, ExternalEntity };

enum class EdgeKind { ControlAction, Feedback };

enum class LinkKind { CausedBy, Prevents, EnforcedBy, Violates, Explains };

enum class ArtifactKind {
    Goal,
    Stakeholder,
    Consequence,
    Vulnerability,
    Constraint,
    Requirement,
    Node,
    ControlAction,
    Feedback,
    Pcca,
    Scenario,
};

const char* to_string(LinddunCategory c);
const char* to_string(GuideCategory c);
const char* to_string(Assessment a);
const char* to_string(ConstraintOrigin o);
const char* to_string(NodeKind k);
const char* to_string(EdgeKind k);
const char* to_string(LinkKind k);
const char* to_string(ArtifactKind k);

// Parsers accept the DSL/JSON spelling ("information_disclosure", ...).
// LINDDUN parsing also accepts "unwareness" as an alias for unawareness.
std::optional<LinddunCategory> parse_linddun(std::string_view s);
std::optional<GuideCategory> parse_guide_category(std::string_view s);
std::optional<Assessment> parse_assessment(std::string_view s);
std::optional<NodeKind> parse_node_kind(std::string_view s);
std::optional<LinkKind> parse_link_kind(std::string_view s);

inline constexpr LinddunCategory kAllLinddun[] = {
    LinddunCategory::Linkability,       LinddunCategory::Identifiability,
    LinddunCategory::NonRepudiation,    LinddunCategory::Detectability,
    LinddunCategory::InformationDisclosure, LinddunCategory::Unawareness,
    LinddunCategory::NonCompliance,
};

inline constexpr GuideCategory kAllGuideCategories[] = {
    GuideCategory::NotProvided,
    GuideCategory::ProvidedCausesVulnerability,
    GuideCategory::WrongTimingOrOrder,
    GuideCategory::StoppedTooSoonOrAppliedTooLong,
};

inline constexpr LinkKind kAllLinkKinds[] = {
    LinkKind::CausedBy, LinkKind::Prevents, LinkKind::EnforcedBy,
    LinkKind::Violates, LinkKind::Explains,
};

// ---------------------------------------------------------------------------
// Artifacts

/// `[A-Za-z][A-Za-z0-9_-]*`
bool is_valid_id(std::string_view id);

struct Goal {
    std::string id;
    std::string statement;
    bool operator==(const Goal&) const = default;
};

struct Stakeholder {
    std::string id;
    std::string name;
    std::optional<std::string> role_note;
    bool operator==(const Stakeholder&) const = default;
};

struct AdverseConsequence {
    std::string id;
    std::string statement;
    std::set<LinddunCategory> linddun;
    bool operator==(const AdverseConsequence&) const = default;
};

struct Vulnerability {
    std::string id;
    std::string statement;
    bool operator==(const Vulnerability&) const = default;
};

struct PrivacyConstraint {
    std::string id;
    std::string statement;
    ConstraintOrigin origin = ConstraintOrigin::AnalystAuthored;
    bool operator==(const PrivacyConstraint&) const = default;
};

struct DesignRequirement {
    std::string id;
    std::string statement;
    bool operator==(const DesignRequirement&) const = default;
};

struct Node {
    std::string id;
    NodeKind kind = NodeKind::Controller;
    std::string label;
    bool operator==(const Node&) const = default;
};

struct Edge {
    std::string id;
    EdgeKind kind = EdgeKind::ControlAction;
    std::string label;
    std::string from;
    std::string to;
    std::set<std::string> data_tags;
    bool operator==(const Edge&) const = default;
};

struct ControlStructure {
    std::vector<Node> nodes;
    std::vector<Edge> edges;
    bool operator==(const ControlStructure&) const = default;
};

struct Pcca {
    std::string id;
    std::string statement;
    std::string action; // id of a ControlAction edge
    GuideCategory category = GuideCategory::NotProvided;
    Assessment assessment = Assessment::Unassessed;
    std::optional<std::string> rationale;
    bool operator==(const Pcca&) const = default;
};

struct CausalScenario {
    std::string id;
    std::string statement;
    bool operator==(const CausalScenario&) const = default;
};

struct Link {
    LinkKind kind = LinkKind::CausedBy;
    std::string from;
    std::string to;
    bool operator==(const Link&) const = default;
    bool operator<(const Link& o) const {
        if (kind != o.kind) return kind < o.kind;
        if (from != o.from) return from < o.from;
        return to < o.to;
    }
};

// Endpoint signature of each link kind.
ArtifactKind link_from_kind(LinkKind k);
ArtifactKind link_to_kind(LinkKind k);

// ---------------------------------------------------------------------------
// Errors

enum class ErrorKind {
    InvalidArgument,
    DuplicateId,
    DanglingReference,
    LinkSignature,
    NotFound,
};

class ModelError : public std::runtime_error {
public:
    ModelError(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

// ---------------------------------------------------------------------------
// AnalysisModel

enum class Direction { Outgoing, Incoming };

/// The complete in-memory analysis. One flat identifier namespace covers
/// every artifact including control-structure nodes and edges. Construction
/// is single-threaded; once built the model is treated as immutable and all
/// read operations are safe to run concurrently.
class AnalysisModel {
public:
    explicit AnalysisModel(std::string name);

    const std::string& name() const { return name_; }
    const std::optional<std::string>& description() const { return description_; }
    void set_description(std::string text) { description_ = std::move(text); }

    const std::vector<Goal>& goals() const { return goals_; }
    const std::vector<Stakeholder>& stakeholders() const { return stakeholders_; }
    const std::vector<AdverseConsequence>& consequences() const { return consequences_; }
    const std::vector<Vulnerability>& vulnerabilities() const { return vulnerabilities_; }
    const std::vector<PrivacyConstraint>& constraints() const { return constraints_; }
    const std::vector<DesignRequirement>& requirements() const { return requirements_; }
    const ControlStructure& structure() const { return structure_; }
    const std::vector<Pcca>& pccas() const { return pccas_; }
    const std::vector<CausalScenario>& scenarios() const { return scenarios_; }
    const std::vector<Link>& links() const { return links_; }

    // Mutators. All throw ModelError: InvalidArgument on an invariant
    // violation, DuplicateId on an identifier collision. An empty LINDDUN
    // tag set is tolerated (rule R040 flags it) so that screening rules
    // stay reachable for API-built models.
    void add(Goal g);
    void add(Stakeholder s);
    void add(AdverseConsequence c);
    void add(Vulnerability v);
    void add(PrivacyConstraint c);
    void add(DesignRequirement r);
    void add(Node n);
    void add(Edge e);       // endpoints must be declared nodes
    void add(Pcca p);       // action must be a ControlAction edge
    void add(CausalScenario s);

    /// Inserts a typed link. Re-inserting an existing (kind, from, to)
    /// triple is a no-op. Throws DanglingReference / LinkSignature.
    void link(LinkKind kind, const std::string& from, const std::string& to);

    /// Removes a link if present; returns whether it was. Used to build
    /// mutated model variants in tooling and tests.
    bool unlink(LinkKind kind, const std::string& from, const std::string& to);

    std::optional<ArtifactKind> kind_of(const std::string& id) const;

    const Goal* goal(const std::string& id) const;
    const Stakeholder* stakeholder(const std::string& id) const;
    const AdverseConsequence* consequence(const std::string& id) const;
    const Vulnerability* vulnerability(const std::string& id) const;
    const PrivacyConstraint* constraint(const std::string& id) const;
    const DesignRequirement* requirement(const std::string& id) const;
    const Node* node(const std::string& id) const;
    const Edge* edge(const std::string& id) const;
    const Pcca* pcca(const std::string& id) const;
    const CausalScenario* scenario(const std::string& id) const;

    bool has_link(LinkKind kind, const std::string& from, const std::string& to) const;

    /// Link neighbors of `id` in link-table declaration order.
    /// Throws NotFound when `id` does not resolve.
    std::vector<std::string> neighbors(const std::string& id, LinkKind kind,
                                       Direction direction) const;

    std::size_t artifact_count() const { return index_.size(); }

    /// Structural equality. The link table compares as a set; the free-form
    /// description annotation is not part of the comparison (it has no
    /// serialized form).
    bool operator==(const AnalysisModel& other) const;

private:
    void register_id(const std::string& id, ArtifactKind kind);
    static void require_statement(const std::string& id, const std::string& statement);

    std::string name_;
    std::optional<std::string> description_;
    std::vector<Goal> goals_;
    std::vector<Stakeholder> stakeholders_;
    std::vector<AdverseConsequence> consequences_;
    std::vector<Vulnerability> vulnerabilities_;
    std::vector<PrivacyConstraint> constraints_;
    std::vector<DesignRequirement> requirements_;
    ControlStructure structure_;
    std::vector<Pcca> pccas_;
    std::vector<CausalScenario> scenarios_;
    std::vector<Link> links_;

    struct IndexEntry {
        ArtifactKind kind;
        std::size_t pos; // index into the kind's collection
    };
    std::unordered_map<std::string, IndexEntry> index_;
};

/// Empty model with the given name. Throws InvalidArgument on an empty name.
AnalysisModel new_model(std::string name);

} // namespace stpapriv
