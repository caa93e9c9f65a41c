#include "stpapriv/diagnostics.hpp"

#include <algorithm>

namespace stpapriv {

const char* to_string(Severity s) {
    switch (s) {
        case Severity::Error: return "error";
        case Severity::Warning: return "warning";
        case Severity::Info: return "info";
    }
    return "?";
}

std::string render_diagnostic(const Diagnostic& d, const std::string& fallback_file) {
    std::string out;
    if (d.span) {
        out = d.span->file + ":" + std::to_string(d.span->start_line) + ":" +
              std::to_string(d.span->start_col);
    } else {
        out = fallback_file;
    }
    out += ": ";
    out += to_string(d.severity);
    out += "[" + d.code + "]: " + d.message;
    return out;
}

bool has_errors(const std::vector<Diagnostic>& diags) {
    return std::any_of(diags.begin(), diags.end(),
                       [](const Diagnostic& d) { return d.severity == Severity::Error; });
}

} // namespace stpapriv
