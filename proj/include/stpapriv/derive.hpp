#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stpapriv/model.hpp"

namespace stpapriv {

/// Advisory artifact scaffold. The tool suggests, the analyst edits and
/// adopts into the source file; nothing here mutates a model.
struct Suggestion {
    enum class Kind { Constraint, PccaCandidate };
    Kind kind = Kind::Constraint;
    std::string statement;
    std::vector<std::string> seeds;          // artifacts it was derived from
    std::optional<GuideCategory> category;   // present iff PccaCandidate

    bool operator==(const Suggestion&) const = default;
};

/// One negation-template constraint per vulnerability that nothing prevents
/// yet, in vulnerability declaration order.
std::vector<Suggestion> suggest_constraints(const AnalysisModel& model);

/// The four-category candidate matrix: one candidate per (control action,
/// guide category) pair not already covered by an existing PCCA. For a
/// PCCA-free model this is exactly 4 x |control actions| entries.
std::vector<Suggestion> generate_pcca_candidates(const AnalysisModel& model);

/// One constraint per hazardous PCCA that violates no constraint yet.
std::vector<Suggestion> derive_corresponding_constraints(const AnalysisModel& model);

/// Paste-ready DSL snippets (`constraint ...` / `pcca ...` items). Generated
/// identifiers are deterministic and avoid collisions with the model.
std::string render_suggestions_dsl(const AnalysisModel& model,
                                   const std::vector<Suggestion>& suggestions);

std::string render_suggestions_json(const std::vector<Suggestion>& suggestions);

} // namespace stpapriv
