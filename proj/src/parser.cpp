#include "stpapriv/parser.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <variant>

namespace stpapriv {
namespace {

// ---------------------------------------------------------------------------
// Lexer

struct Token {
    enum Kind { Word, String, Comma, End } kind = End;
    std::string text; // word spelling or decoded string value
    SourceSpan span;
};

constexpr const char* kTopLevelKeywords[] = {
    "model",   "goal",    "stakeholder", "consequence", "vulnerability", "constraint",
    "requirement", "controller", "process", "sensor", "actuator", "entity",
    "action",  "feedback", "pcca",       "scenario",
};

bool is_top_level_keyword(const std::string& w) {
    return std::find(std::begin(kTopLevelKeywords), std::end(kTopLevelKeywords), w) !=
           std::end(kTopLevelKeywords);
}

class Lexer {
public:
    Lexer(std::string_view src, std::string file, std::vector<Diagnostic>& diags)
        : src_(src), file_(std::move(file)), diags_(diags) {}

    std::vector<Token> run() {
        if (src_.size() >= 3 && src_.substr(0, 3) == "\xEF\xBB\xBF") {
            error("P004", "byte order mark is not allowed; save the file as plain UTF-8",
                  point_span());
            pos_ += 3;
        }
        std::vector<Token> tokens;
        while (true) {
            skip_trivia();
            if (pos_ >= src_.size()) break;
            char c = src_[pos_];
            if (c == ',') {
                tokens.push_back({Token::Comma, ",", point_span()});
                advance();
            } else if (c == '"') {
                tokens.push_back(lex_string());
            } else if (is_word_start(c)) {
                tokens.push_back(lex_word());
            } else {
                error("P004", std::string("invalid character '") + printable(c) + "'",
                      point_span());
                advance();
            }
        }
        tokens.push_back({Token::End, "", point_span()});
        return tokens;
    }

private:
    static bool is_word_start(char c) {
        return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z');
    }
    static bool is_word_char(char c) {
        return is_word_start(c) || (c >= '0' && c <= '9') || c == '_' || c == '-';
    }
    static std::string printable(char c) {
        if (c >= 0x20 && c < 0x7F) return std::string(1, c);
        char buf[8];
        std::snprintf(buf, sizeof buf, "\\x%02X", static_cast<unsigned char>(c));
        return buf;
    }

    SourceSpan point_span() const { return {file_, line_, col_, line_, col_}; }

    // Consumes one Unicode scalar value, updating line/col. Invalid UTF-8
    // bytes count as one column each and are reported once per run.
    void advance() {
        unsigned char b = src_[pos_];
        std::size_t len = 1;
        if (b >= 0xF0) len = 4;
        else if (b >= 0xE0) len = 3;
        else if (b >= 0xC0) len = 2;
        bool valid = pos_ + len <= src_.size();
        for (std::size_t i = 1; valid && i < len; ++i)
            valid = (static_cast<unsigned char>(src_[pos_ + i]) & 0xC0) == 0x80;
        if (b >= 0x80 && (b < 0xC0 || !valid)) {
            if (!utf8_reported_) {
                error("P004", "invalid UTF-8 byte sequence", point_span());
                utf8_reported_ = true;
            }
            len = 1;
        }
        if (b == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        pos_ += len;
    }

    void skip_trivia() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else {
                break;
            }
        }
    }

    Token lex_word() {
        SourceSpan span = point_span();
        std::string text;
        while (pos_ < src_.size() && is_word_char(src_[pos_])) {
            text += src_[pos_];
            span.end_line = line_;
            span.end_col = col_;
            advance();
        }
        return {Token::Word, std::move(text), span};
    }

    Token lex_string() {
        SourceSpan span = point_span();
        advance(); // opening quote
        std::string value;
        while (true) {
            if (pos_ >= src_.size()) {
                error("P002", "unterminated string", span);
                break;
            }
            char c = src_[pos_];
            if (c == '"') {
                span.end_line = line_;
                span.end_col = col_;
                advance();
                break;
            }
            if (c == '\\') {
                SourceSpan esc = point_span();
                advance();
                if (pos_ >= src_.size()) {
                    error("P002", "unterminated string", span);
                    break;
                }
                char e = src_[pos_];
                if (e == '"' || e == '\\') {
                    value += e;
                } else {
                    error("P003", std::string("unknown escape sequence '\\") + e + "'", esc);
                    value += e;
                }
                advance();
            } else {
                // copy one whole scalar value
                std::size_t before = pos_;
                advance();
                value.append(src_.substr(before, pos_ - before));
            }
        }
        return {Token::String, std::move(value), span};
    }

    void error(const char* code, std::string msg, SourceSpan span) {
        diags_.push_back({code, Severity::Error, std::move(msg), std::move(span), {}});
    }

    std::string_view src_;
    std::string file_;
    std::vector<Diagnostic>& diags_;
    std::size_t pos_ = 0;
    unsigned line_ = 1;
    unsigned col_ = 1;
    bool utf8_reported_ = false;
};

// ---------------------------------------------------------------------------
// Parsed items (staging before model assembly, so references may be forward)

struct Ref {
    std::string id;
    SourceSpan span;
};

struct Str {
    std::string value;
    SourceSpan span;
};

struct ItemGoal { Ref id; Str text; };
struct ItemStakeholder { Ref id; Str text; };
struct ItemConsequence {
    Ref id;
    Str text;
    std::set<LinddunCategory> tags;
    std::vector<Ref> caused_by;
};
struct ItemVulnerability { Ref id; Str text; };
struct ItemConstraint {
    Ref id;
    Str text;
    std::vector<Ref> prevents;
    std::vector<Ref> enforced_by;
};
struct ItemRequirement { Ref id; Str text; };
struct ItemNode { Ref id; NodeKind kind; Str text; };
struct ItemEdge {
    Ref id;
    EdgeKind kind;
    Str text;
    Ref from;
    Ref to;
    std::set<std::string> data;
};
struct ItemPcca {
    Ref id;
    Str text;
    Ref action;
    GuideCategory category;
    std::vector<Ref> violates;
    Assessment assessment = Assessment::Unassessed;
};
struct ItemScenario {
    Ref id;
    Str text;
    std::vector<Ref> explains;
};

using Item = std::variant<ItemGoal, ItemStakeholder, ItemConsequence, ItemVulnerability,
                          ItemConstraint, ItemRequirement, ItemNode, ItemEdge, ItemPcca,
                          ItemScenario>;

// ---------------------------------------------------------------------------
// Parser

class Parser {
public:
    Parser(std::vector<Token> tokens, std::string file, std::vector<Diagnostic>& diags)
        : tokens_(std::move(tokens)), file_(std::move(file)), diags_(diags) {}

    ParseResult run() {
        std::string model_name = "<invalid>";
        if (at_word("model")) {
            next();
            if (auto s = expect_string()) model_name = s->value;
            if (model_name.empty()) {
                error("P009", "model name must be non-empty", tokens_[pos_ - 1].span);
                model_name = "<invalid>";
            }
        } else {
            error("P001", "expected 'model' header", peek().span);
        }
        while (peek().kind != Token::End) parse_item();
        return assemble(model_name);
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& next() { return tokens_[pos_++]; }
    bool at_word(std::string_view w) const {
        return peek().kind == Token::Word && peek().text == w;
    }

    void error(const char* code, std::string msg, SourceSpan span,
               std::vector<std::string> related = {}) {
        diags_.push_back(
            {code, Severity::Error, std::move(msg), std::move(span), std::move(related)});
    }

    // Skips tokens until the next top-level keyword (or end of input).
    void synchronize() {
        while (peek().kind != Token::End) {
            if (peek().kind == Token::Word && is_top_level_keyword(peek().text)) return;
            next();
        }
    }

    std::optional<Ref> expect_id() {
        if (peek().kind != Token::Word || !is_valid_id(peek().text)) {
            error("P001", "expected an identifier", peek().span);
            return std::nullopt;
        }
        const Token& t = next();
        return Ref{t.text, t.span};
    }

    std::optional<Str> expect_string() {
        if (peek().kind != Token::String) {
            error("P001", "expected a quoted string", peek().span);
            return std::nullopt;
        }
        const Token& t = next();
        return Str{t.text, t.span};
    }

    bool expect_keyword(const char* kw) {
        if (!at_word(kw)) {
            error("P001", std::string("expected '") + kw + "'", peek().span);
            return false;
        }
        next();
        return true;
    }

    std::optional<std::vector<Ref>> parse_id_list() {
        std::vector<Ref> out;
        auto first = expect_id();
        if (!first) return std::nullopt;
        out.push_back(*first);
        while (peek().kind == Token::Comma) {
            next();
            auto r = expect_id();
            if (!r) return std::nullopt;
            out.push_back(*r);
        }
        return out;
    }

    void parse_item() {
        if (peek().kind != Token::Word) {
            error("P001", "expected a keyword", peek().span);
            next();
            synchronize();
            return;
        }
        const std::string kw = peek().text;
        if (!is_top_level_keyword(kw)) {
            error("P010", "unknown keyword '" + kw + "'", peek().span);
            next();
            synchronize();
            return;
        }
        if (kw == "model") {
            error("P001", "duplicate 'model' header", peek().span);
            next();
            synchronize();
            return;
        }
        next();
        bool ok = false;
        if (kw == "goal") ok = parse_simple<ItemGoal>();
        else if (kw == "stakeholder") ok = parse_simple<ItemStakeholder>();
        else if (kw == "consequence") ok = parse_consequence();
        else if (kw == "vulnerability") ok = parse_simple<ItemVulnerability>();
        else if (kw == "constraint") ok = parse_constraint();
        else if (kw == "requirement") ok = parse_simple<ItemRequirement>();
        else if (kw == "action") ok = parse_edge(EdgeKind::ControlAction);
        else if (kw == "feedback") ok = parse_edge(EdgeKind::Feedback);
        else if (kw == "pcca") ok = parse_pcca();
        else if (kw == "scenario") ok = parse_scenario();
        else ok = parse_node(*parse_node_kind(kw));
        if (!ok) synchronize();
    }

    template <typename T>
    bool parse_simple() {
        auto id = expect_id();
        if (!id) return false;
        auto text = expect_string();
        if (!text) return false;
        items_.push_back(T{*id, *text});
        return true;
    }

    bool parse_node(NodeKind kind) {
        auto id = expect_id();
        if (!id) return false;
        auto text = expect_string();
        if (!text) return false;
        items_.push_back(ItemNode{*id, kind, *text});
        return true;
    }

    bool parse_consequence() {
        auto id = expect_id();
        if (!id) return false;
        auto text = expect_string();
        if (!text) return false;
        ItemConsequence item{*id, *text, {}, {}};
        if (at_word("linddun")) {
            next();
            while (true) {
                if (peek().kind != Token::Word) {
                    error("P001", "expected a LINDDUN category", peek().span);
                    return false;
                }
                auto cat = parse_linddun(peek().text);
                if (!cat) {
                    error("P006", "unknown LINDDUN category '" + peek().text + "'", peek().span);
                } else {
                    item.tags.insert(*cat);
                }
                next();
                if (peek().kind != Token::Comma) break;
                next();
            }
        }
        if (item.tags.empty()) {
            error("P009",
                  "consequence '" + item.id.id + "' must declare at least one LINDDUN category",
                  item.id.span, {item.id.id});
        }
        if (at_word("caused_by")) {
            next();
            auto list = parse_id_list();
            if (!list) return false;
            item.caused_by = std::move(*list);
        }
        items_.push_back(std::move(item));
        return true;
    }

    bool parse_constraint() {
        auto id = expect_id();
        if (!id) return false;
        auto text = expect_string();
        if (!text) return false;
        ItemConstraint item{*id, *text, {}, {}};
        if (at_word("prevents")) {
            next();
            auto list = parse_id_list();
            if (!list) return false;
            item.prevents = std::move(*list);
        }
        if (at_word("enforced_by")) {
            next();
            auto list = parse_id_list();
            if (!list) return false;
            item.enforced_by = std::move(*list);
        }
        items_.push_back(std::move(item));
        return true;
    }

    bool parse_edge(EdgeKind kind) {
        auto id = expect_id();
        if (!id) return false;
        auto text = expect_string();
        if (!text) return false;
        if (!expect_keyword("from")) return false;
        auto from = expect_id();
        if (!from) return false;
        if (!expect_keyword("to")) return false;
        auto to = expect_id();
        if (!to) return false;
        ItemEdge item{*id, kind, *text, *from, *to, {}};
        if (kind == EdgeKind::ControlAction && at_word("data")) {
            next();
            while (true) {
                if (peek().kind == Token::Word || peek().kind == Token::String) {
                    item.data.insert(next().text);
                } else {
                    error("P001", "expected a data tag", peek().span);
                    return false;
                }
                if (peek().kind != Token::Comma) break;
                next();
            }
        }
        items_.push_back(std::move(item));
        return true;
    }

    bool parse_pcca() {
        auto id = expect_id();
        if (!id) return false;
        auto text = expect_string();
        if (!text) return false;
        if (!expect_keyword("action")) return false;
        auto action = expect_id();
        if (!action) return false;
        if (!expect_keyword("category")) return false;
        if (peek().kind != Token::Word) {
            error("P001", "expected a guide category", peek().span);
            return false;
        }
        auto cat = parse_guide_category(peek().text);
        if (!cat) {
            error("P006", "unknown guide category '" + peek().text + "'", peek().span);
            next();
            return false;
        }
        next();
        ItemPcca item{*id, *text, *action, *cat, {}, Assessment::Unassessed};
        if (at_word("violates")) {
            next();
            auto list = parse_id_list();
            if (!list) return false;
            item.violates = std::move(*list);
        }
        if (at_word("assessed")) {
            next();
            if (at_word("hazardous")) {
                item.assessment = Assessment::Hazardous;
                next();
            } else if (at_word("not_applicable")) {
                item.assessment = Assessment::NotApplicable;
                next();
            } else {
                error("P001", "expected 'hazardous' or 'not_applicable'", peek().span);
                return false;
            }
        }
        items_.push_back(std::move(item));
        return true;
    }

    bool parse_scenario() {
        auto id = expect_id();
        if (!id) return false;
        auto text = expect_string();
        if (!text) return false;
        if (!expect_keyword("explains")) return false;
        auto list = parse_id_list();
        if (!list) return false;
        items_.push_back(ItemScenario{*id, *text, std::move(*list)});
        return true;
    }

    // -----------------------------------------------------------------------
    // Assembly: registers artifacts first (so references may point forward),
    // then edges and PCCAs, then the sugared links in source order.

    ParseResult assemble(const std::string& model_name) {
        AnalysisModel model(model_name);
        std::map<std::string, SourceSpan> declared;
        std::set<std::size_t> failed; // items that did not make it into the model

        auto add_guarded = [&](std::size_t idx, const Ref& id, auto&& artifact) {
            try {
                model.add(std::forward<decltype(artifact)>(artifact));
                declared.emplace(id.id, id.span);
            } catch (const ModelError& e) {
                failed.insert(idx);
                if (e.kind() == ErrorKind::DuplicateId) {
                    auto first = declared.find(id.id);
                    std::string msg = "duplicate identifier '" + id.id + "'";
                    if (first != declared.end())
                        msg += "; first declared at " + first->second.file + ":" +
                               std::to_string(first->second.start_line) + ":" +
                               std::to_string(first->second.start_col);
                    error("P007", std::move(msg), id.span, {id.id});
                } else {
                    error("P009", e.what(), id.span, {id.id});
                }
            }
        };

        for (std::size_t i = 0; i < items_.size(); ++i) {
            const Item& item = items_[i];
            if (auto* g = std::get_if<ItemGoal>(&item))
                add_guarded(i, g->id, Goal{g->id.id, g->text.value});
            else if (auto* s = std::get_if<ItemStakeholder>(&item))
                add_guarded(i, s->id, Stakeholder{s->id.id, s->text.value, std::nullopt});
            else if (auto* c = std::get_if<ItemConsequence>(&item))
                add_guarded(i, c->id, AdverseConsequence{c->id.id, c->text.value, c->tags});
            else if (auto* v = std::get_if<ItemVulnerability>(&item))
                add_guarded(i, v->id, Vulnerability{v->id.id, v->text.value});
            else if (auto* k = std::get_if<ItemConstraint>(&item))
                add_guarded(i, k->id,
                            PrivacyConstraint{k->id.id, k->text.value,
                                              ConstraintOrigin::AnalystAuthored});
            else if (auto* r = std::get_if<ItemRequirement>(&item))
                add_guarded(i, r->id, DesignRequirement{r->id.id, r->text.value});
            else if (auto* n = std::get_if<ItemNode>(&item))
                add_guarded(i, n->id, Node{n->id.id, n->kind, n->text.value});
            else if (auto* sc = std::get_if<ItemScenario>(&item))
                add_guarded(i, sc->id, CausalScenario{sc->id.id, sc->text.value});
        }

        for (std::size_t i = 0; i < items_.size(); ++i) {
            const auto* e = std::get_if<ItemEdge>(&items_[i]);
            if (!e) continue;
            bool ok = true;
            for (const Ref* ep : {&e->from, &e->to}) {
                auto k = model.kind_of(ep->id);
                if (!k) {
                    error("P005", "unknown identifier '" + ep->id + "'", ep->span, {ep->id});
                    ok = false;
                } else if (*k != ArtifactKind::Node) {
                    error("P008",
                          "edge endpoint '" + ep->id + "' must be a node, not a " +
                              to_string(*k),
                          ep->span, {ep->id});
                    ok = false;
                }
            }
            if (!ok) {
                failed.insert(i);
                continue;
            }
            add_guarded(i, e->id,
                        Edge{e->id.id, e->kind, e->text.value, e->from.id, e->to.id, e->data});
        }

        for (std::size_t i = 0; i < items_.size(); ++i) {
            const auto* p = std::get_if<ItemPcca>(&items_[i]);
            if (!p) continue;
            auto k = model.kind_of(p->action.id);
            if (!k) {
                error("P005", "unknown identifier '" + p->action.id + "'", p->action.span,
                      {p->action.id});
                failed.insert(i);
                continue;
            }
            if (*k != ArtifactKind::ControlAction) {
                error("P008",
                      "pcca action '" + p->action.id + "' must be a control-action edge, not a " +
                          std::string(to_string(*k)),
                      p->action.span, {p->action.id});
                failed.insert(i);
                continue;
            }
            add_guarded(i, p->id,
                        Pcca{p->id.id, p->text.value, p->action.id, p->category, p->assessment,
                             std::nullopt});
        }

        auto add_links = [&](const Ref& from, LinkKind kind, const std::vector<Ref>& targets) {
            for (const Ref& t : targets) {
                auto k = model.kind_of(t.id);
                if (!k) {
                    error("P005", "unknown identifier '" + t.id + "'", t.span, {t.id});
                    continue;
                }
                if (*k != link_to_kind(kind)) {
                    error("P008",
                          std::string(to_string(kind)) + " must reference a " +
                              to_string(link_to_kind(kind)) + ", but '" + t.id + "' is a " +
                              to_string(*k),
                          t.span, {from.id, t.id});
                    continue;
                }
                model.link(kind, from.id, t.id);
            }
        };

        for (std::size_t i = 0; i < items_.size(); ++i) {
            if (failed.count(i)) continue;
            const Item& item = items_[i];
            if (auto* c = std::get_if<ItemConsequence>(&item)) {
                add_links(c->id, LinkKind::CausedBy, c->caused_by);
            } else if (auto* k = std::get_if<ItemConstraint>(&item)) {
                add_links(k->id, LinkKind::Prevents, k->prevents);
                add_links(k->id, LinkKind::EnforcedBy, k->enforced_by);
            } else if (auto* p = std::get_if<ItemPcca>(&item)) {
                add_links(p->id, LinkKind::Violates, p->violates);
            } else if (auto* s = std::get_if<ItemScenario>(&item)) {
                add_links(s->id, LinkKind::Explains, s->explains);
            }
        }

        ParseResult result;
        if (!has_errors(diags_)) result.model = std::move(model);
        return result;
    }

    std::vector<Token> tokens_;
    std::string file_;
    std::vector<Diagnostic>& diags_;
    std::vector<Item> items_;
    std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Formatter

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

// Data tags render bare when they look like identifiers, quoted otherwise.
std::string render_tag(const std::string& tag) {
    return is_valid_id(tag) ? tag : quote(tag);
}

std::string join_ids(const std::vector<std::string>& ids) {
    std::string out;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) out += ", ";
        out += ids[i];
    }
    return out;
}

} // namespace

ParseResult parse(std::string_view source, std::string file_name) {
    std::vector<Diagnostic> diags;
    Lexer lexer(source, file_name, diags);
    auto tokens = lexer.run();
    Parser parser(std::move(tokens), file_name, diags);
    ParseResult result = parser.run();
    result.diagnostics = std::move(diags);
    if (has_errors(result.diagnostics)) result.model.reset();
    return result;
}

std::string format(const AnalysisModel& m) {
    std::vector<std::string> blocks;
    blocks.push_back("model " + quote(m.name()));

    for (const auto& g : m.goals())
        blocks.push_back("goal " + g.id + " " + quote(g.statement));
    for (const auto& s : m.stakeholders())
        blocks.push_back("stakeholder " + s.id + " " + quote(s.name));

    for (const auto& c : m.consequences()) {
        std::string b = "consequence " + c.id + " " + quote(c.statement);
        if (!c.linddun.empty()) {
            b += "\n  linddun ";
            bool first = true;
            for (auto cat : c.linddun) {
                if (!first) b += ", ";
                b += to_string(cat);
                first = false;
            }
        }
        auto caused_by = m.neighbors(c.id, LinkKind::CausedBy, Direction::Outgoing);
        if (!caused_by.empty()) b += "\n  caused_by " + join_ids(caused_by);
        blocks.push_back(std::move(b));
    }

    for (const auto& v : m.vulnerabilities())
        blocks.push_back("vulnerability " + v.id + " " + quote(v.statement));

    for (const auto& c : m.constraints()) {
        std::string b = "constraint " + c.id + " " + quote(c.statement);
        auto prevents = m.neighbors(c.id, LinkKind::Prevents, Direction::Outgoing);
        if (!prevents.empty()) b += "\n  prevents " + join_ids(prevents);
        auto enforced = m.neighbors(c.id, LinkKind::EnforcedBy, Direction::Outgoing);
        if (!enforced.empty()) b += "\n  enforced_by " + join_ids(enforced);
        blocks.push_back(std::move(b));
    }

    for (const auto& r : m.requirements())
        blocks.push_back("requirement " + r.id + " " + quote(r.statement));

    for (const auto& n : m.structure().nodes)
        blocks.push_back(std::string(to_string(n.kind)) + " " + n.id + " " + quote(n.label));

    for (const auto& e : m.structure().edges) {
        std::string b = std::string(to_string(e.kind)) + " " + e.id + " " + quote(e.label);
        b += "\n  from " + e.from;
        b += "\n  to " + e.to;
        if (e.kind == EdgeKind::ControlAction && !e.data_tags.empty()) {
            b += "\n  data ";
            bool first = true;
            for (const auto& tag : e.data_tags) {
                if (!first) b += ", ";
                b += render_tag(tag);
                first = false;
            }
        }
        blocks.push_back(std::move(b));
    }

    for (const auto& p : m.pccas()) {
        std::string b = "pcca " + p.id + " " + quote(p.statement);
        b += "\n  action " + p.action;
        b += "\n  category " + std::string(to_string(p.category));
        auto violates = m.neighbors(p.id, LinkKind::Violates, Direction::Outgoing);
        if (!violates.empty()) b += "\n  violates " + join_ids(violates);
        if (p.assessment != Assessment::Unassessed)
            b += "\n  assessed " + std::string(to_string(p.assessment));
        blocks.push_back(std::move(b));
    }

    for (const auto& s : m.scenarios()) {
        std::string b = "scenario " + s.id + " " + quote(s.statement);
        auto explains = m.neighbors(s.id, LinkKind::Explains, Direction::Outgoing);
        if (!explains.empty()) b += "\n  explains " + join_ids(explains);
        blocks.push_back(std::move(b));
    }

    std::string out;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (i) out += "\n";
        out += blocks[i];
        out += "\n";
    }
    return out;
}

} // namespace stpapriv
