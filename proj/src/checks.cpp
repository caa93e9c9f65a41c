#include "stpapriv/checks.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "stpapriv/structure.hpp"

namespace stpapriv {

const std::vector<RuleInfo>& list_rules() {
    static const std::vector<RuleInfo> rules = {
        {"R001", Severity::Error, "dangling reference in a link", "all steps"},
        {"R010", Severity::Warning, "adverse consequence has no linked vulnerability",
         "Step 0.4"},
        {"R011", Severity::Warning, "vulnerability is linked to no adverse consequence",
         "Step 0.4"},
        {"R012", Severity::Error, "vulnerability has no privacy constraint preventing it",
         "Step 0.5"},
        {"R013", Severity::Warning, "privacy constraint is enforced by no control action",
         "Step 1.2"},
        {"R020", Severity::Warning, "control action has no PCCA in any guide category",
         "Step 1.2"},
        {"R021", Severity::Warning, "PCCA has not been assessed", "Step 1.2"},
        {"R022", Severity::Error, "hazardous PCCA violates no privacy constraint", "Step 1.2"},
        {"R030", Severity::Warning, "hazardous PCCA has no explaining causal scenario",
         "Step 2"},
        {"R031", Severity::Warning, "causal scenario explains no PCCA", "Step 2"},
        {"R040", Severity::Warning, "adverse consequence carries no LINDDUN category",
         "Step 0.2"},
        {"R050", Severity::Info, "open-loop control action (no feedback path)", "Step 0.7"},
        {"R051", Severity::Info, "self-loop edge in the control structure", "Step 0.7"},
    };
    return rules;
}

namespace {

Severity default_severity(const std::string& code) {
    for (const auto& r : list_rules())
        if (r.code == code) return r.default_severity;
    return Severity::Error;
}

int severity_rank(Severity s) {
    switch (s) {
        case Severity::Error: return 0;
        case Severity::Warning: return 1;
        case Severity::Info: return 2;
    }
    return 3;
}

class Collector {
public:
    explicit Collector(const RuleConfig& config) : config_(config) {}

    void emit(const char* code, std::string message, std::vector<std::string> related) {
        Severity sev = default_severity(code);
        if (auto it = config_.severity_overrides.find(code);
            it != config_.severity_overrides.end())
            sev = it->second;
        diags_.push_back({code, sev, std::move(message), std::nullopt, std::move(related)});
    }

    std::vector<Diagnostic> finish() {
        std::stable_sort(diags_.begin(), diags_.end(),
                         [](const Diagnostic& a, const Diagnostic& b) {
                             int ra = severity_rank(a.severity), rb = severity_rank(b.severity);
                             if (ra != rb) return ra < rb;
                             if (a.code != b.code) return a.code < b.code;
                             const std::string& ia =
                                 a.related_ids.empty() ? std::string() : a.related_ids.front();
                             const std::string& ib =
                                 b.related_ids.empty() ? std::string() : b.related_ids.front();
                             return ia < ib;
                         });
        return std::move(diags_);
    }

private:
    const RuleConfig& config_;
    std::vector<Diagnostic> diags_;
};

// Per-artifact link degrees, built in one pass so large models stay cheap.
struct Degrees {
    std::unordered_map<std::string, std::size_t> out[5];
    std::unordered_map<std::string, std::size_t> in[5];

    explicit Degrees(const AnalysisModel& m) {
        for (const auto& l : m.links()) {
            ++out[static_cast<int>(l.kind)][l.from];
            ++in[static_cast<int>(l.kind)][l.to];
        }
    }
    std::size_t outgoing(const std::string& id, LinkKind k) const {
        auto& map = out[static_cast<int>(k)];
        auto it = map.find(id);
        return it == map.end() ? 0 : it->second;
    }
    std::size_t incoming(const std::string& id, LinkKind k) const {
        auto& map = in[static_cast<int>(k)];
        auto it = map.find(id);
        return it == map.end() ? 0 : it->second;
    }
};

} // namespace

std::vector<Diagnostic> run_checks(const AnalysisModel& model, const RuleConfig& config) {
    for (const auto& [code, sev] : config.severity_overrides) {
        (void)sev;
        bool known = std::any_of(list_rules().begin(), list_rules().end(),
                                 [&](const RuleInfo& r) { return r.code == code; });
        if (!known)
            throw ModelError(ErrorKind::InvalidArgument,
                             "severity override for unknown rule code '" + code + "'");
    }

    Collector out(config);
    Degrees degrees(model);

    // R001 — defense-in-depth re-check of every stored link.
    for (const auto& l : model.links()) {
        for (const std::string* ep : {&l.from, &l.to}) {
            if (!model.kind_of(*ep))
                out.emit("R001",
                         std::string(to_string(l.kind)) + " link references unknown '" + *ep +
                             "'",
                         {*ep});
        }
    }

    for (const auto& c : model.consequences()) {
        if (degrees.outgoing(c.id, LinkKind::CausedBy) == 0)
            out.emit("R010",
                     "adverse consequence '" + c.id + "' is linked to no vulnerability", {c.id});
        if (c.linddun.empty())
            out.emit("R040", "adverse consequence '" + c.id + "' carries no LINDDUN category",
                     {c.id});
    }

    for (const auto& v : model.vulnerabilities()) {
        if (degrees.incoming(v.id, LinkKind::CausedBy) == 0)
            out.emit("R011", "vulnerability '" + v.id + "' is linked to no adverse consequence",
                     {v.id});
        if (degrees.incoming(v.id, LinkKind::Prevents) == 0)
            out.emit("R012", "vulnerability '" + v.id + "' has no privacy constraint preventing it",
                     {v.id});
    }

    for (const auto& c : model.constraints()) {
        if (degrees.outgoing(c.id, LinkKind::EnforcedBy) == 0)
            out.emit("R013", "privacy constraint '" + c.id + "' is enforced by no control action",
                     {c.id});
    }

    std::unordered_map<std::string, std::size_t> pccas_per_action;
    for (const auto& p : model.pccas()) ++pccas_per_action[p.action];
    for (const auto& e : model.structure().edges) {
        if (e.kind == EdgeKind::ControlAction && pccas_per_action[e.id] == 0)
            out.emit("R020", "control action '" + e.id + "' has no PCCA in any guide category",
                     {e.id});
        if (e.from == e.to)
            out.emit("R051", "edge '" + e.id + "' is a self-loop on '" + e.from + "'", {e.id});
    }

    for (const auto& p : model.pccas()) {
        if (p.assessment == Assessment::Unassessed)
            out.emit("R021", "PCCA '" + p.id + "' has not been assessed", {p.id});
        if (p.assessment == Assessment::Hazardous) {
            if (degrees.outgoing(p.id, LinkKind::Violates) == 0)
                out.emit("R022", "hazardous PCCA '" + p.id + "' violates no privacy constraint",
                         {p.id});
            if (degrees.incoming(p.id, LinkKind::Explains) == 0)
                out.emit("R030", "hazardous PCCA '" + p.id + "' has no explaining causal scenario",
                         {p.id});
        }
    }

    for (const auto& s : model.scenarios()) {
        if (degrees.outgoing(s.id, LinkKind::Explains) == 0)
            out.emit("R031", "causal scenario '" + s.id + "' explains no PCCA", {s.id});
    }

    for (const auto& id : detect_open_loops(model.structure()))
        out.emit("R050", "control action '" + id + "' is open-loop (no feedback path)", {id});

    return out.finish();
}

} // namespace stpapriv
