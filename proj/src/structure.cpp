#include "stpapriv/structure.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace stpapriv {

std::vector<Edge> control_actions(const ControlStructure& structure) {
    std::vector<Edge> out;
    for (const auto& e : structure.edges)
        if (e.kind == EdgeKind::ControlAction) out.push_back(e);
    return out;
}

namespace {

struct Adjacency {
    std::vector<std::string> node_ids; // sorted
    // per node index: (edge id, edge kind, target node index), sorted by edge id
    std::vector<std::vector<std::tuple<std::string, EdgeKind, std::size_t>>> out;
};

Adjacency build_adjacency(const ControlStructure& s) {
    Adjacency adj;
    for (const auto& n : s.nodes) adj.node_ids.push_back(n.id);
    std::sort(adj.node_ids.begin(), adj.node_ids.end());
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < adj.node_ids.size(); ++i) index[adj.node_ids[i]] = i;
    adj.out.resize(adj.node_ids.size());
    for (const auto& e : s.edges)
        adj.out[index.at(e.from)].emplace_back(e.id, e.kind, index.at(e.to));
    for (auto& lst : adj.out) std::sort(lst.begin(), lst.end());
    return adj;
}

void rotate_canonical(Loop& loop) {
    auto smallest = std::min_element(loop.begin(), loop.end());
    std::rotate(loop.begin(), smallest, loop.end());
}

} // namespace

std::vector<Loop> find_feedback_loops(const ControlStructure& structure) {
    Adjacency adj = build_adjacency(structure);
    const std::size_t n = adj.node_ids.size();
    std::vector<Loop> loops;

    // Simple-cycle enumeration: a cycle is discovered exactly once from its
    // smallest node index, so only nodes >= start are entered.
    std::vector<bool> on_path(n, false);
    std::vector<std::string> edge_path;
    bool has_action = false, has_feedback = false;

    auto dfs = [&](auto&& self, std::size_t start, std::size_t node) -> void {
        on_path[node] = true;
        for (const auto& [edge_id, kind, target] : adj.out[node]) {
            if (target < start) continue;
            edge_path.push_back(edge_id);
            bool was_action = has_action, was_feedback = has_feedback;
            if (kind == EdgeKind::ControlAction) has_action = true;
            else has_feedback = true;
            if (target == start) {
                if (has_action && has_feedback) {
                    Loop loop = edge_path;
                    rotate_canonical(loop);
                    loops.push_back(std::move(loop));
                }
            } else if (!on_path[target]) {
                self(self, start, target);
            }
            has_action = was_action;
            has_feedback = was_feedback;
            edge_path.pop_back();
        }
        on_path[node] = false;
    };

    for (std::size_t start = 0; start < n; ++start) dfs(dfs, start, start);
    std::sort(loops.begin(), loops.end());
    return loops;
}

std::vector<std::string> detect_open_loops(const ControlStructure& structure) {
    std::set<std::string> looped;
    for (const auto& loop : find_feedback_loops(structure))
        looped.insert(loop.begin(), loop.end());
    std::vector<std::string> out;
    for (const auto& e : structure.edges)
        if (e.kind == EdgeKind::ControlAction && !looped.count(e.id)) out.push_back(e.id);
    return out;
}

namespace {

std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

const char* dot_shape(NodeKind k) {
    switch (k) {
        case NodeKind::Controller: return "box";
        case NodeKind::ControlledProcess: return "ellipse";
        case NodeKind::Sensor: return "diamond";
        case NodeKind::Actuator: return "trapezium";
        case NodeKind::ExternalEntity: return "box";
    }
    return "box";
}

} // namespace

std::string export_dot(const ControlStructure& structure) {
    std::string out = "digraph \"control_structure\" {\n";
    for (const auto& n : structure.nodes) {
        out += "  " + dot_quote(n.id) + " [label=" + dot_quote(n.label) +
               ", shape=" + dot_shape(n.kind);
        if (n.kind == NodeKind::ExternalEntity) out += ", style=dashed";
        out += "];\n";
    }
    for (const auto& e : structure.edges) {
        out += "  " + dot_quote(e.from) + " -> " + dot_quote(e.to) +
               " [label=" + dot_quote(e.label) +
               (e.kind == EdgeKind::ControlAction ? ", style=solid" : ", style=dashed") + "];\n";
    }
    out += "}\n";
    return out;
}

} // namespace stpapriv
