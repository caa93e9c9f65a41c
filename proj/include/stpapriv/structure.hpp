#pragma once

#include <string>
#include <vector>

#include "stpapriv/model.hpp"

namespace stpapriv {

/// All ControlAction edges in declaration order.
std::vector<Edge> control_actions(const ControlStructure& structure);

/// A feedback loop: a directed simple cycle through at least one
/// ControlAction and at least one Feedback edge, reported as its edge-id
/// sequence rotated so the lexicographically smallest edge id comes first.
using Loop = std::vector<std::string>;

/// Loops sorted lexicographically; independent of declaration order.
std::vector<Loop> find_feedback_loops(const ControlStructure& structure);

/// ControlAction edges that participate in no feedback loop, in declaration
/// order. Open-loop control is legitimate here and surfaced as Info only.
std::vector<std::string> detect_open_loops(const ControlStructure& structure);

/// Graphviz digraph: node shape by kind, ControlAction edges solid,
/// Feedback edges dashed. Byte-stable for equal structures.
std::string export_dot(const ControlStructure& structure);

} // namespace stpapriv
