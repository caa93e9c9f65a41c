#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "stpapriv/checks.hpp"
#include "stpapriv/derive.hpp"
#include "stpapriv/parser.hpp"
#include "stpapriv/report.hpp"
#include "stpapriv/structure.hpp"

namespace {

using namespace stpapriv;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitClean = 0;
constexpr int kExitDiagnostics = 1;
constexpr int kExitUsage = 2;

struct Input {
    std::string text;
    std::string display_name;
};

// `-` reads standard input.
std::optional<Input> read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return Input{buf.str(), "<stdin>"};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "stpapriv: cannot read '" << path << "'\n";
        return std::nullopt;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return Input{buf.str(), path};
}

bool looks_like_json(const std::string& text) {
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') continue;
        return c == '{';
    }
    return false;
}

ParseResult parse_input(const Input& input) {
    if (looks_like_json(input.text)) return load_json(input.text);
    return parse(input.text, input.display_name);
}

ordered_json diagnostic_json(const Diagnostic& d) {
    ordered_json o;
    o["code"] = d.code;
    o["severity"] = to_string(d.severity);
    o["message"] = d.message;
    if (d.span) {
        o["span"] = ordered_json{{"file", d.span->file},
                                 {"start_line", d.span->start_line},
                                 {"start_col", d.span->start_col},
                                 {"end_line", d.span->end_line},
                                 {"end_col", d.span->end_col}};
    }
    o["related_ids"] = d.related_ids;
    return o;
}

void print_diagnostics(const std::vector<Diagnostic>& diags, const std::string& file,
                       bool as_json) {
    if (as_json) {
        ordered_json arr = ordered_json::array();
        for (const auto& d : diags) arr.push_back(diagnostic_json(d));
        std::cout << arr.dump(2) << "\n";
        return;
    }
    for (const auto& d : diags) std::cout << render_diagnostic(d, file) << "\n";
}

int diagnostics_exit_code(const std::vector<Diagnostic>& diags, bool strict) {
    bool warnings = false;
    for (const auto& d : diags) {
        if (d.severity == Severity::Error) return kExitDiagnostics;
        if (d.severity == Severity::Warning) warnings = true;
    }
    return (strict && warnings) ? kExitDiagnostics : kExitClean;
}

// Loads and parses; on parse errors prints them like `check` and reports
// exit 1 through `code`.
std::optional<AnalysisModel> load_or_fail(const std::string& path, int& code) {
    auto input = read_input(path);
    if (!input) {
        code = kExitUsage;
        return std::nullopt;
    }
    ParseResult result = parse_input(*input);
    if (!result.model) {
        print_diagnostics(result.diagnostics, input->display_name, false);
        code = kExitDiagnostics;
        return std::nullopt;
    }
    return std::move(result.model);
}

int cmd_check(const std::string& path, bool strict, const std::string& fmt) {
    auto input = read_input(path);
    if (!input) return kExitUsage;
    ParseResult result = parse_input(*input);
    if (!result.model) {
        print_diagnostics(result.diagnostics, input->display_name, fmt == "json");
        return kExitDiagnostics;
    }
    RuleConfig config;
    config.strict = strict;
    auto diags = run_checks(*result.model, config);
    // parse-time warnings come first, then rule findings
    std::vector<Diagnostic> all = result.diagnostics;
    all.insert(all.end(), diags.begin(), diags.end());
    print_diagnostics(all, input->display_name, fmt == "json");
    return diagnostics_exit_code(all, strict);
}

int cmd_derive(const std::string& path, const std::string& what, const std::string& fmt) {
    int code = kExitClean;
    auto model = load_or_fail(path, code);
    if (!model) return code;
    std::vector<Suggestion> suggestions;
    if (what == "constraints") suggestions = suggest_constraints(*model);
    else if (what == "pcca") suggestions = generate_pcca_candidates(*model);
    else suggestions = derive_corresponding_constraints(*model);
    if (fmt == "json") std::cout << render_suggestions_json(suggestions);
    else std::cout << render_suggestions_dsl(*model, suggestions);
    return kExitClean;
}

const char* plural(ArtifactKind k) {
    switch (k) {
        case ArtifactKind::Goal: return "goals";
        case ArtifactKind::Stakeholder: return "stakeholders";
        case ArtifactKind::Consequence: return "consequences";
        case ArtifactKind::Vulnerability: return "vulnerabilities";
        case ArtifactKind::Constraint: return "constraints";
        case ArtifactKind::Requirement: return "requirements";
        case ArtifactKind::Node: return "nodes";
        case ArtifactKind::ControlAction: return "control_actions";
        case ArtifactKind::Feedback: return "feedbacks";
        case ArtifactKind::Pcca: return "pccas";
        case ArtifactKind::Scenario: return "scenarios";
    }
    return "?";
}

int cmd_report_stats(const AnalysisModel& model, const std::string& fmt) {
    Stats s = stats(model);
    if (fmt == "json") {
        ordered_json o;
        o["counts"] = ordered_json::object();
        for (const auto& [kind, n] : s.counts) o["counts"][plural(kind)] = n;
        o["linddun_histogram"] = ordered_json::object();
        for (const auto& [cat, n] : s.linddun_histogram)
            o["linddun_histogram"][to_string(cat)] = n;
        o["pcca_by_category"] = ordered_json::object();
        for (const auto& [cat, n] : s.pcca_by_category) o["pcca_by_category"][to_string(cat)] = n;
        o["unassessed_pccas"] = s.unassessed_pccas;
        std::cout << o.dump(2) << "\n";
        return kExitClean;
    }
    std::vector<std::pair<std::string, std::size_t>> entries;
    for (const auto& [kind, n] : s.counts) entries.emplace_back(plural(kind), n);
    for (const auto& [cat, n] : s.linddun_histogram)
        entries.emplace_back(std::string("linddun.") + to_string(cat), n);
    for (const auto& [cat, n] : s.pcca_by_category)
        entries.emplace_back(std::string("pcca_by_category.") + to_string(cat), n);
    entries.emplace_back("unassessed_pccas", s.unassessed_pccas);
    if (fmt == "csv") {
        std::cout << "metric,value\r\n";
        for (const auto& [k, v] : entries) std::cout << k << "," << v << "\r\n";
    } else if (fmt == "markdown") {
        std::cout << "| metric | value |\n| --- | --- |\n";
        for (const auto& [k, v] : entries) std::cout << "| " << k << " | " << v << " |\n";
    } else {
        for (const auto& [k, v] : entries) std::cout << k << "=" << v << "\n";
    }
    return kExitClean;
}

int cmd_report_trace(const AnalysisModel& model, const std::string& fmt) {
    auto rows = traceability_matrix(model);
    if (fmt == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& r : rows) {
            ordered_json o;
            o["scenario"] = r.scenario ? ordered_json(*r.scenario) : ordered_json(nullptr);
            o["pcca"] = r.pcca ? ordered_json(*r.pcca) : ordered_json(nullptr);
            o["constraint"] = r.constraint ? ordered_json(*r.constraint) : ordered_json(nullptr);
            o["vulnerability"] =
                r.vulnerability ? ordered_json(*r.vulnerability) : ordered_json(nullptr);
            o["consequence"] = r.consequence;
            arr.push_back(std::move(o));
        }
        std::cout << arr.dump(2) << "\n";
        return kExitClean;
    }
    std::cout << render_matrix(rows, fmt == "csv" ? MatrixFormat::Csv : MatrixFormat::Markdown);
    return kExitClean;
}

int cmd_rules() {
    for (const auto& r : list_rules()) {
        std::printf("%s  %-7s  %-55s  %s\n", r.code.c_str(), to_string(r.default_severity),
                    r.description.c_str(), r.step.c_str());
    }
    return kExitClean;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Machine-checkable STPA-Priv privacy analysis models"};
    app.require_subcommand(1);

    std::string file;
    bool strict = false;
    std::string format;
    std::string what;

    auto* check = app.add_subcommand("check", "run the rule suite over a model file");
    check->add_option("file", file, "model file (`-` for stdin)")->required();
    check->add_flag("--strict", strict, "treat warnings as errors at exit-code level");
    check->add_option("--format", format, "text|json")
        ->default_val("text")
        ->check(CLI::IsMember({"text", "json"}));

    auto* derive = app.add_subcommand("derive", "generate suggested artifacts");
    derive->add_option("what", what, "constraints|pcca|corresponding")
        ->required()
        ->check(CLI::IsMember({"constraints", "pcca", "corresponding"}));
    derive->add_option("file", file, "model file (`-` for stdin)")->required();
    derive->add_option("--format", format, "dsl|json")
        ->default_val("dsl")
        ->check(CLI::IsMember({"dsl", "json"}));

    auto* report = app.add_subcommand("report", "traceability and statistics reports");
    report->add_option("what", what, "trace|stats")
        ->required()
        ->check(CLI::IsMember({"trace", "stats"}));
    report->add_option("file", file, "model file (`-` for stdin)")->required();
    report->add_option("--format", format, "markdown|csv|json")
        ->check(CLI::IsMember({"markdown", "csv", "json"}));

    auto* exportc = app.add_subcommand("export", "DOT or JSON export");
    exportc->add_option("what", what, "dot|json")
        ->required()
        ->check(CLI::IsMember({"dot", "json"}));
    exportc->add_option("file", file, "model file (`-` for stdin)")->required();

    auto* rules = app.add_subcommand("rules", "list the rule table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (rules->parsed()) return cmd_rules();
    if (check->parsed()) return cmd_check(file, strict, format);

    if (derive->parsed()) return cmd_derive(file, what, format);

    int code = kExitClean;
    auto model = load_or_fail(file, code);
    if (!model) return code;

    if (report->parsed()) {
        if (what == "stats") return cmd_report_stats(*model, format);
        return cmd_report_trace(*model, format.empty() ? "markdown" : format);
    }
    if (exportc->parsed()) {
        if (what == "dot") {
            std::cout << export_dot(model->structure());
        } else {
            std::cout << export_json(*model);
        }
        return kExitClean;
    }
    return kExitUsage;
}
