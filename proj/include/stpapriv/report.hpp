#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stpapriv/model.hpp"

namespace stpapriv {

struct Stats {
    std::map<ArtifactKind, std::size_t> counts;
    std::map<LinddunCategory, std::size_t> linddun_histogram; // tag occurrences
    std::map<GuideCategory, std::size_t> pcca_by_category;
    std::size_t unassessed_pccas = 0;
};

Stats stats(const AnalysisModel& model);

/// One row per maximal chain ending at a consequence:
/// scenario -explains-> pcca -violates-> constraint -prevents-> vulnerability
/// <-caused_by- consequence. Missing upstream artifacts leave cells empty.
struct TraceRow {
    std::optional<std::string> scenario;
    std::optional<std::string> pcca;
    std::optional<std::string> constraint;
    std::optional<std::string> vulnerability;
    std::string consequence;

    bool operator==(const TraceRow&) const = default;
};

std::vector<TraceRow> traceability_matrix(const AnalysisModel& model);

enum class MatrixFormat { Markdown, Csv };

std::string render_matrix(const std::vector<TraceRow>& rows, MatrixFormat format);

/// schema_version 1 interchange document; byte-stable for equal models.
std::string export_json(const AnalysisModel& model);

} // namespace stpapriv
