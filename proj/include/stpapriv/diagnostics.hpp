#pragma once

#include <optional>
#include <string>
#include <vector>

namespace stpapriv {

enum class Severity { Error, Warning, Info };

const char* to_string(Severity s);

/// Half-open is not used here: spans are inclusive, 1-based, and columns
/// count Unicode scalar values (not bytes).
struct SourceSpan {
    std::string file;
    unsigned start_line = 1;
    unsigned start_col = 1;
    unsigned end_line = 1;
    unsigned end_col = 1;

    bool operator==(const SourceSpan&) const = default;
};

struct Diagnostic {
    std::string code;     // "P001", "R012", "J002", ...
    Severity severity = Severity::Error;
    std::string message;
    std::optional<SourceSpan> span;
    std::vector<std::string> related_ids;
};

/// `file:line:col: severity[code]: message`, or without the position part
/// when the diagnostic carries no span.
std::string render_diagnostic(const Diagnostic& d, const std::string& fallback_file);

bool has_errors(const std::vector<Diagnostic>& diags);

} // namespace stpapriv
