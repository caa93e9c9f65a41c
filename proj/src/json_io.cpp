#include <json.hpp>

#include "stpapriv/parser.hpp"
#include "stpapriv/report.hpp"

namespace stpapriv {

using json = nlohmann::ordered_json;

namespace {

json artifact_obj(const std::string& id, const std::string& statement) {
    return json{{"id", id}, {"statement", statement}};
}

struct LoadFailure {
    std::string code;
    std::string message;
};

[[noreturn]] void fail(std::string code, std::string message) {
    throw LoadFailure{std::move(code), std::move(message)};
}

const json& member(const json& obj, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) fail("J003", std::string("missing key '") + key + "'");
    return *it;
}

std::string str_member(const json& obj, const char* key) {
    const json& v = member(obj, key);
    if (!v.is_string()) fail("J003", std::string("key '") + key + "' must be a string");
    return v.get<std::string>();
}

const json& array_member(const json& obj, const char* key) {
    const json& v = member(obj, key);
    if (!v.is_array()) fail("J003", std::string("key '") + key + "' must be an array");
    return v;
}

template <typename Enum, typename Parser>
Enum enum_member(const json& obj, const char* key, Parser parser, const char* what) {
    std::string s = str_member(obj, key);
    auto v = parser(s);
    if (!v) fail("J003", std::string("unknown ") + what + " '" + s + "'");
    return *v;
}

AnalysisModel load_model(const json& doc) {
    if (!doc.is_object()) fail("J003", "document must be a JSON object");
    const json& version = member(doc, "schema_version");
    if (!version.is_number_integer() || version.get<int>() != 1)
        fail("J002", "unsupported schema version " + version.dump());

    AnalysisModel model(str_member(doc, "model"));
    if (auto it = doc.find("description"); it != doc.end() && it->is_string())
        model.set_description(it->get<std::string>());

    try {
        for (const json& g : array_member(doc, "goals"))
            model.add(Goal{str_member(g, "id"), str_member(g, "statement")});
        for (const json& s : array_member(doc, "stakeholders")) {
            Stakeholder st{str_member(s, "id"), str_member(s, "name"), std::nullopt};
            if (auto it = s.find("role_note"); it != s.end() && it->is_string())
                st.role_note = it->get<std::string>();
            model.add(std::move(st));
        }
        for (const json& c : array_member(doc, "consequences")) {
            AdverseConsequence ac{str_member(c, "id"), str_member(c, "statement"), {}};
            for (const json& tag : array_member(c, "linddun")) {
                if (!tag.is_string()) fail("J003", "LINDDUN tags must be strings");
                auto cat = parse_linddun(tag.get<std::string>());
                if (!cat)
                    fail("J003", "unknown LINDDUN category '" + tag.get<std::string>() + "'");
                ac.linddun.insert(*cat);
            }
            model.add(std::move(ac));
        }
        for (const json& v : array_member(doc, "vulnerabilities"))
            model.add(Vulnerability{str_member(v, "id"), str_member(v, "statement")});
        for (const json& c : array_member(doc, "constraints")) {
            PrivacyConstraint pc{str_member(c, "id"), str_member(c, "statement"),
                                 ConstraintOrigin::AnalystAuthored};
            if (auto it = c.find("origin"); it != c.end()) {
                std::string o = it->get<std::string>();
                if (o == "suggested") pc.origin = ConstraintOrigin::NegationSuggested;
                else if (o != "analyst") fail("J003", "unknown constraint origin '" + o + "'");
            }
            model.add(std::move(pc));
        }
        for (const json& r : array_member(doc, "requirements"))
            model.add(DesignRequirement{str_member(r, "id"), str_member(r, "statement")});

        const json& structure = member(doc, "structure");
        for (const json& n : array_member(structure, "nodes")) {
            model.add(Node{str_member(n, "id"),
                           enum_member<NodeKind>(n, "kind", parse_node_kind, "node kind"),
                           str_member(n, "label")});
        }
        for (const json& e : array_member(structure, "edges")) {
            std::string kind = str_member(e, "kind");
            if (kind != "action" && kind != "feedback")
                fail("J003", "unknown edge kind '" + kind + "'");
            Edge edge{str_member(e, "id"),
                      kind == "action" ? EdgeKind::ControlAction : EdgeKind::Feedback,
                      str_member(e, "label"), str_member(e, "from"), str_member(e, "to"), {}};
            for (const json& tag : array_member(e, "data")) {
                if (!tag.is_string()) fail("J003", "data tags must be strings");
                edge.data_tags.insert(tag.get<std::string>());
            }
            model.add(std::move(edge));
        }

        for (const json& p : array_member(doc, "pccas")) {
            Pcca pcca{str_member(p, "id"), str_member(p, "statement"), str_member(p, "action"),
                      enum_member<GuideCategory>(p, "category", parse_guide_category,
                                                 "guide category"),
                      enum_member<Assessment>(p, "assessment", parse_assessment, "assessment"),
                      std::nullopt};
            if (auto it = p.find("rationale"); it != p.end() && it->is_string())
                pcca.rationale = it->get<std::string>();
            model.add(std::move(pcca));
        }
        for (const json& s : array_member(doc, "scenarios"))
            model.add(CausalScenario{str_member(s, "id"), str_member(s, "statement")});

        for (const json& l : array_member(doc, "links")) {
            model.link(enum_member<LinkKind>(l, "kind", parse_link_kind, "link kind"),
                       str_member(l, "from"), str_member(l, "to"));
        }
    } catch (const ModelError& e) {
        fail("J003", e.what());
    }
    return model;
}

} // namespace

std::string export_json(const AnalysisModel& m) {
    json doc;
    doc["schema_version"] = 1;
    doc["model"] = m.name();
    if (m.description()) doc["description"] = *m.description();

    doc["goals"] = json::array();
    for (const auto& g : m.goals()) doc["goals"].push_back(artifact_obj(g.id, g.statement));

    doc["stakeholders"] = json::array();
    for (const auto& s : m.stakeholders()) {
        json o{{"id", s.id}, {"name", s.name}};
        if (s.role_note) o["role_note"] = *s.role_note;
        doc["stakeholders"].push_back(std::move(o));
    }

    doc["consequences"] = json::array();
    for (const auto& c : m.consequences()) {
        json o = artifact_obj(c.id, c.statement);
        o["linddun"] = json::array();
        for (auto cat : c.linddun) o["linddun"].push_back(to_string(cat));
        doc["consequences"].push_back(std::move(o));
    }

    doc["vulnerabilities"] = json::array();
    for (const auto& v : m.vulnerabilities())
        doc["vulnerabilities"].push_back(artifact_obj(v.id, v.statement));

    doc["constraints"] = json::array();
    for (const auto& c : m.constraints()) {
        json o = artifact_obj(c.id, c.statement);
        o["origin"] = to_string(c.origin);
        doc["constraints"].push_back(std::move(o));
    }

    doc["requirements"] = json::array();
    for (const auto& r : m.requirements())
        doc["requirements"].push_back(artifact_obj(r.id, r.statement));

    json nodes = json::array();
    for (const auto& n : m.structure().nodes)
        nodes.push_back(json{{"id", n.id}, {"kind", to_string(n.kind)}, {"label", n.label}});
    json edges = json::array();
    for (const auto& e : m.structure().edges) {
        json o{{"id", e.id},     {"kind", to_string(e.kind)}, {"label", e.label},
               {"from", e.from}, {"to", e.to}};
        o["data"] = json::array();
        for (const auto& tag : e.data_tags) o["data"].push_back(tag);
        edges.push_back(std::move(o));
    }
    doc["structure"] = json{{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};

    doc["pccas"] = json::array();
    for (const auto& p : m.pccas()) {
        json o{{"id", p.id},
               {"statement", p.statement},
               {"action", p.action},
               {"category", to_string(p.category)},
               {"assessment", to_string(p.assessment)}};
        if (p.rationale) o["rationale"] = *p.rationale;
        doc["pccas"].push_back(std::move(o));
    }

    doc["scenarios"] = json::array();
    for (const auto& s : m.scenarios())
        doc["scenarios"].push_back(artifact_obj(s.id, s.statement));

    doc["links"] = json::array();
    for (const auto& l : m.links())
        doc["links"].push_back(json{{"kind", to_string(l.kind)}, {"from", l.from}, {"to", l.to}});

    return doc.dump(2) + "\n";
}

ParseResult load_json(std::string_view source) {
    ParseResult result;
    json doc = json::parse(source, nullptr, /*allow_exceptions=*/false);
    if (doc.is_discarded()) {
        result.diagnostics.push_back(
            {"J001", Severity::Error, "malformed JSON document", std::nullopt, {}});
        return result;
    }
    try {
        result.model = load_model(doc);
    } catch (const LoadFailure& f) {
        result.diagnostics.push_back({f.code, Severity::Error, f.message, std::nullopt, {}});
    }
    return result;
}

} // namespace stpapriv
