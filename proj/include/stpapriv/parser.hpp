#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stpapriv/diagnostics.hpp"
#include "stpapriv/model.hpp"

namespace stpapriv {

struct ParseResult {
    std::optional<AnalysisModel> model; // present iff no Error diagnostics
    std::vector<Diagnostic> diagnostics;
};

/// Parses the `.stpa` DSL. Never aborts on the first problem: after a syntax
/// error the parser resynchronizes at the next top-level keyword, so a file
/// with several independent mistakes reports all of them.
ParseResult parse(std::string_view source, std::string file_name);

/// Canonical text form: artifacts grouped by kind in method-step order,
/// declaration order preserved within a kind, clauses indented two spaces,
/// one blank line between artifacts. parse(format(m)) reproduces m.
std::string format(const AnalysisModel& model);

/// Inverse of export_json for schema_version 1. Problems are reported as
/// Error diagnostics (J-codes) without spans.
ParseResult load_json(std::string_view source);

} // namespace stpapriv
