#pragma once

#include <charconv>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "kgf/kgraph.hpp"

namespace kgf {

struct Diagnostic {
    int line = 0;
    std::string message;
};

inline std::string to_text(const std::vector<Diagnostic>& diagnostics) {
    std::ostringstream os;
    for (const auto& d : diagnostics) {
        os << "line " << d.line << ": " << d.message << "\n";
    }
    return os.str();
}

/// Declarations of a kgf document in source order, with line positions kept
/// for error reporting.
struct Document {
    struct VertexDecl {
        std::string id;
        int line;
    };
    struct EdgeDecl {
        std::string id;
        int color;
        std::string source;
        std::string range;
        int line;
    };
    struct SquareDecl {
        std::string a, b, c, d;  // (a then b) ~ (c then d), traversal order
        int line;
    };

    int version = 1;
    int k = 0;
    std::vector<VertexDecl> vertices;
    std::vector<EdgeDecl> edges;
    std::vector<SquareDecl> squares;
};

struct Presentation {
    Skeleton skeleton;
    SquareTable squares;
};

struct ParseResult {
    std::optional<Presentation> presentation;  // engaged iff diagnostics empty
    std::vector<Diagnostic> diagnostics;

    bool ok() const { return presentation.has_value(); }
};

namespace detail {

inline std::vector<std::string> tokenize(std::string_view line) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            ++i;
        }
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
            ++i;
        }
        if (i > start) {
            tokens.emplace_back(line.substr(start, i - start));
        }
    }
    return tokens;
}

inline std::optional<int> parse_int(const std::string& token) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
        return std::nullopt;
    }
    return value;
}

}  // namespace detail

/// Line-oriented reader for the `kgf 1` format: `#` starts a comment, the
/// version line comes first, then `k <int>`, then vertex/edge/square
/// declarations in any order.
inline std::optional<Document> parse_document(std::string_view text,
                                              std::vector<Diagnostic>& diagnostics) {
    Document doc;
    bool saw_version = false;
    bool saw_k = false;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view raw = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string_view::npos) {
            raw = raw.substr(0, hash);
        }
        auto tokens = detail::tokenize(raw);
        if (tokens.empty()) {
            if (pos > text.size()) {
                break;
            }
            continue;
        }
        if (!saw_version) {
            if (tokens.size() != 2 || tokens[0] != "kgf" || tokens[1] != "1") {
                diagnostics.push_back({line_no, "expected header line 'kgf 1'"});
                return std::nullopt;
            }
            saw_version = true;
            continue;
        }
        if (!saw_k) {
            auto k = tokens.size() == 2 && tokens[0] == "k" ? detail::parse_int(tokens[1])
                                                            : std::nullopt;
            if (!k || *k < 1) {
                diagnostics.push_back({line_no, "expected 'k <positive integer>'"});
                return std::nullopt;
            }
            doc.k = *k;
            saw_k = true;
            continue;
        }
        if (tokens[0] == "vertex" && tokens.size() == 2) {
            doc.vertices.push_back({tokens[1], line_no});
        } else if (tokens[0] == "edge" && tokens.size() == 6 && tokens[4] == "->") {
            auto color = detail::parse_int(tokens[2]);
            if (!color) {
                diagnostics.push_back({line_no, "edge color must be an integer"});
                continue;
            }
            doc.edges.push_back({tokens[1], *color, tokens[3], tokens[5], line_no});
        } else if (tokens[0] == "square" && tokens.size() == 6 && tokens[3] == "=") {
            doc.squares.push_back({tokens[1], tokens[2], tokens[4], tokens[5], line_no});
        } else {
            diagnostics.push_back({line_no, "unrecognized declaration '" + tokens[0] + "'"});
        }
        if (pos > text.size()) {
            break;
        }
    }
    if (!saw_version) {
        diagnostics.push_back({line_no, "missing 'kgf 1' header"});
        return std::nullopt;
    }
    if (!saw_k) {
        diagnostics.push_back({line_no, "missing 'k <int>' line"});
        return std::nullopt;
    }
    return doc;
}

/// Elaborates a document into a skeleton and square table, diagnosing
/// duplicate ids, undeclared endpoints, colors out of range and contradictory
/// squares. The presentation is returned only for a clean parse.
inline ParseResult parse(std::string_view text) {
    ParseResult result;
    auto doc = parse_document(text, result.diagnostics);
    if (!doc) {
        return result;
    }
    Skeleton skeleton(doc->k);
    for (const auto& v : doc->vertices) {
        if (!valid_id(v.id)) {
            result.diagnostics.push_back({v.line, "invalid vertex id '" + v.id + "'"});
        } else if (skeleton.has_vertex(v.id)) {
            result.diagnostics.push_back({v.line, "duplicate vertex id '" + v.id + "'"});
        } else {
            skeleton.add_vertex(v.id);
        }
    }
    for (const auto& e : doc->edges) {
        if (!valid_id(e.id)) {
            result.diagnostics.push_back({e.line, "invalid edge id '" + e.id + "'"});
            continue;
        }
        if (skeleton.has_edge(e.id)) {
            result.diagnostics.push_back({e.line, "duplicate edge id '" + e.id + "'"});
            continue;
        }
        if (e.color < 1 || e.color > doc->k) {
            result.diagnostics.push_back(
                {e.line, "color " + std::to_string(e.color) + " out of range 1.." +
                             std::to_string(doc->k)});
            continue;
        }
        bool endpoints_ok = true;
        for (const auto& endpoint : {e.source, e.range}) {
            if (!skeleton.has_vertex(endpoint)) {
                result.diagnostics.push_back(
                    {e.line, "edge '" + e.id + "' uses undeclared vertex '" + endpoint + "'"});
                endpoints_ok = false;
            }
        }
        if (endpoints_ok) {
            skeleton.add_edge(e.id, e.color, e.source, e.range);
        }
    }
    SquareTable table;
    for (const auto& s : doc->squares) {
        bool ids_ok = true;
        for (const auto& id : {s.a, s.b, s.c, s.d}) {
            if (!skeleton.has_edge(id)) {
                result.diagnostics.push_back(
                    {s.line, "square uses undeclared edge '" + id + "'"});
                ids_ok = false;
            }
        }
        if (!ids_ok) {
            continue;
        }
        if (!table.insert({s.a, s.b}, {s.c, s.d})) {
            result.diagnostics.push_back(
                {s.line, "square contradicts an earlier declaration for (" + s.a + " " + s.b +
                             ") or (" + s.c + " " + s.d + ")"});
        }
    }
    if (result.diagnostics.empty()) {
        result.presentation = Presentation{std::move(skeleton), std::move(table)};
    }
    return result;
}

/// Canonical serialization: vertices, then edges, then squares, each sorted;
/// every square appears once, keyed by the lexicographically smaller side.
/// parse(serialize(kg)) reproduces kg exactly, byte for byte across runs.
inline std::string serialize(const KGraph& kg) {
    const Skeleton& sk = kg.skeleton();
    std::ostringstream os;
    os << "kgf 1\n";
    os << "# Edges read `edge <id> <color> <source> -> <range>`.\n";
    os << "# A square line `square a b = c d` pairs the 2-paths (a then b) ~ (c then d),\n";
    os << "# both written in traversal order: first edge out of the source first.\n";
    os << "k " << sk.k() << "\n";
    for (const auto& v : sk.vertices()) {
        os << "vertex " << v << "\n";
    }
    for (const auto& [id, e] : sk.edges()) {
        os << "edge " << id << " " << e.color << " " << e.source << " -> " << e.range << "\n";
    }
    for (const auto& [key, image] : kg.squares().entries()) {
        if (key < image) {
            os << "square " << key.first << " " << key.second << " = " << image.first << " "
               << image.second << "\n";
        }
    }
    return os.str();
}

/// DOT export of the 1-skeleton: color 1 solid, color 2 dashed, higher colors
/// carry a `c=<i>` marker in the label.
inline std::string export_dot(const KGraph& kg) {
    const Skeleton& sk = kg.skeleton();
    std::ostringstream os;
    os << "digraph kgraph {\n";
    for (const auto& v : sk.vertices()) {
        os << "  \"" << v << "\";\n";
    }
    for (const auto& [id, e] : sk.edges()) {
        os << "  \"" << e.source << "\" -> \"" << e.range << "\" [label=\"" << id;
        if (e.color > 2) {
            os << " c=" << e.color;
        }
        os << "\"";
        if (e.color == 1) {
            os << ", style=solid";
        } else if (e.color == 2) {
            os << ", style=dashed";
        }
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace kgf
