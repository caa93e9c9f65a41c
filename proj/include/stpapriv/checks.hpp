#pragma once

#include <map>
#include <string>
#include <vector>

#include "stpapriv/diagnostics.hpp"
#include "stpapriv/model.hpp"

namespace stpapriv {

struct RuleInfo {
    std::string code;
    Severity default_severity;
    std::string description;
    std::string step; // method step the rule operationalizes
};

/// The complete rule table, stable order. Codes are frozen: new rules
/// append, existing ones are never renumbered.
const std::vector<RuleInfo>& list_rules();

struct RuleConfig {
    std::map<std::string, Severity> severity_overrides; // known codes only
    bool strict = false; // warnings gate the exit code (CLI concern)
};

/// Evaluates every rule over the model. Diagnostics are the output, not
/// failures; they come back sorted by (severity desc, code, first related
/// id) and identical runs produce identical output.
/// Throws InvalidArgument when an override names an unknown rule code.
std::vector<Diagnostic> run_checks(const AnalysisModel& model, const RuleConfig& config = {});

} // namespace stpapriv
