#include "kundupack/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace kundu::io {

namespace {

struct Token {
    std::string_view text;
    std::size_t line = 1;
    std::size_t column = 1;
};

// Whitespace-separated tokens grouped by line; blank lines are dropped.
std::vector<std::vector<Token>> tokenize(std::string_view text) {
    std::vector<std::vector<Token>> lines;
    std::vector<Token> current;
    std::size_t line = 1;
    std::size_t col = 1;
    std::size_t i = 0;
    while (i < text.size()) {
        const char ch = text[i];
        if (ch == '\n') {
            if (!current.empty()) lines.push_back(std::move(current));
            current.clear();
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++col;
            ++i;
            continue;
        }
        const std::size_t begin = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        current.push_back(Token{text.substr(begin, i - begin), line, col});
        col += i - begin;
    }
    if (!current.empty()) lines.push_back(std::move(current));
    return lines;
}

long long to_integer(const Token& t) {
    long long value = 0;
    const char* first = t.text.data();
    const char* last = first + t.text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
        throw ParseError(t.line, t.column, "expected an integer, got '" + std::string(t.text) + "'");
    return value;
}

std::size_t to_count(const Token& t) {
    const long long v = to_integer(t);
    if (v < 0) throw ParseError(t.line, t.column, "expected a nonnegative integer");
    return static_cast<std::size_t>(v);
}

// Line and column of a byte offset.
std::pair<std::size_t, std::size_t> locate(std::string_view text, std::size_t offset) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        auto [line, col] = locate(text, e.byte == 0 ? 0 : e.byte - 1);
        throw ParseError(line, col, "malformed JSON");
    }
}

std::size_t first_content(std::string_view text) {
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    return i;
}

// Structural errors inside a well-formed JSON document are reported at its
// first character.
[[noreturn]] void json_shape_error(std::string_view text, const std::string& what) {
    auto [line, col] = locate(text, first_content(text));
    throw ParseError(line, col, what);
}

Edge edge_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
        throw Error(ErrorKind::invalid_input, "edge must be a pair of integers");
    return Edge::of(j[0].get<Vertex>(), j[1].get<Vertex>());
}

std::vector<Edge> edges_from_json(const Json& j) {
    if (!j.is_array()) throw Error(ErrorKind::invalid_input, "edge list must be an array");
    std::vector<Edge> out;
    out.reserve(j.size());
    for (const auto& e : j) out.push_back(edge_from_json(e));
    return out;
}

std::array<Edge, 2> pair_from_json(const Json& j, const char* key) {
    if (!j.contains(key)) throw Error(ErrorKind::invalid_input, std::string("swap is missing '") + key + "'");
    auto edges = edges_from_json(j.at(key));
    if (edges.size() != 2) throw Error(ErrorKind::invalid_input, std::string("'") + key + "' needs two edges");
    return {edges[0], edges[1]};
}

Fingerprint fingerprint_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("graph") || !j.contains("factor"))
        throw Error(ErrorKind::invalid_input, "expected an object with 'graph' and 'factor'");
    Fingerprint fp;
    fp.graph = edges_from_json(j.at("graph"));
    fp.factor = edges_from_json(j.at("factor"));
    fp.n = j.contains("n") ? j.at("n").get<std::size_t>() : 2 * fp.factor.size();
    std::sort(fp.graph.begin(), fp.graph.end());
    std::sort(fp.factor.begin(), fp.factor.end());
    return fp;
}

Swap swap_from_json(const Json& j) {
    if (!j.is_object()) throw Error(ErrorKind::invalid_input, "swap must be an object");
    const std::string layer = j.value("layer", "");
    Swap s;
    if (layer == "graph") {
        s.layer = Layer::graph;
    } else if (layer == "factor") {
        s.layer = Layer::factor;
    } else {
        throw Error(ErrorKind::invalid_input, "swap layer must be 'graph' or 'factor'");
    }
    s.removed = pair_from_json(j, "remove");
    s.added = pair_from_json(j, "add");
    return s;
}

template <class F>
auto with_shape_errors(std::string_view text, F&& body) {
    try {
        return body();
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        json_shape_error(text, e.what());
    } catch (const nlohmann::json::exception& e) {
        json_shape_error(text, e.what());
    }
}

}  // namespace

DegreeSequence parse_degree_sequence(std::string_view text) {
    auto lines = tokenize(text);
    if (lines.size() > 1)
        throw ParseError(lines[1].front().line, lines[1].front().column,
                         "a degree sequence is a single line");
    std::vector<int> values;
    if (!lines.empty())
        for (const Token& t : lines[0]) {
            const long long v = to_integer(t);
            if (v < 0) throw ParseError(t.line, t.column, "negative degree");
            if (v > 1'000'000'000) throw ParseError(t.line, t.column, "degree out of range");
            values.push_back(static_cast<int>(v));
        }
    return DegreeSequence(std::move(values));
}

LabeledGraph parse_graph(std::string_view text) {
    auto lines = tokenize(text);
    if (lines.empty()) throw ParseError(1, 1, "missing 'n m' header");
    const auto& header = lines[0];
    if (header.size() != 2) throw ParseError(header.front().line, header.front().column, "header must be 'n m'");
    const std::size_t n = to_count(header[0]);
    const std::size_t m = to_count(header[1]);
    if (lines.size() - 1 != m) {
        const Token& at = lines.size() > m + 1 ? lines[m + 1].front() : header[1];
        throw ParseError(at.line, at.column,
                         "expected " + std::to_string(m) + " edge lines, found " + std::to_string(lines.size() - 1));
    }
    LabeledGraph g(n);
    for (std::size_t k = 1; k <= m; ++k) {
        const auto& row = lines[k];
        if (row.size() != 2) throw ParseError(row.front().line, row.front().column, "edge line must be 'u v'");
        const long long u = to_integer(row[0]);
        const long long v = to_integer(row[1]);
        if (u < 0 || static_cast<std::size_t>(u) >= n) throw ParseError(row[0].line, row[0].column, "vertex out of range");
        if (v < 0 || static_cast<std::size_t>(v) >= n) throw ParseError(row[1].line, row[1].column, "vertex out of range");
        if (u == v) throw ParseError(row[0].line, row[0].column, "loop");
        if (u > v) throw ParseError(row[0].line, row[0].column, "edge endpoints must satisfy u < v");
        const Edge e{static_cast<Vertex>(u), static_cast<Vertex>(v)};
        if (g.has_edge(e)) throw ParseError(row[0].line, row[0].column, "duplicate edge");
        g.add_edge(e);
    }
    return g;
}

KunduRealization parse_kundu_realization(std::string_view text) {
    const Json j = parse_json(text);
    return with_shape_errors(text, [&] {
        KunduRealization kr = kundu_from_json(j);
        if (auto why = invariant_violation(kr)) throw Error(ErrorKind::invalid_input, *why);
        return kr;
    });
}

OneFactor parse_factor(std::string_view text) {
    const std::size_t start = first_content(text);
    if (start < text.size() && (text[start] == '[' || text[start] == '{')) {
        const Json j = parse_json(text);
        return with_shape_errors(text, [&] {
            const Json& list = j.is_object() ? j.at("factor") : j;
            auto edges = edges_from_json(list);
            const std::size_t n = j.is_object() && j.contains("n") ? j.at("n").get<std::size_t>() : 2 * edges.size();
            return OneFactor::from_edges(n, edges);
        });
    }
    LabeledGraph g = parse_graph(text);
    auto edges = g.edges();
    try {
        return OneFactor::from_edges(g.order(), edges);
    } catch (const Error& e) {
        throw ParseError(1, 1, e.what());
    }
}

SwapTrace parse_trace(std::string_view text) {
    const Json j = parse_json(text);
    return with_shape_errors(text, [&] { return trace_from_json(j); });
}

Instance parse_instance(std::string_view text) {
    const std::size_t start = first_content(text);
    if (start < text.size() && text[start] == '{') return parse_kundu_realization(text);
    if (tokenize(text).size() <= 1) return parse_degree_sequence(text);
    return parse_graph(text);
}

std::string format_degree_sequence(const DegreeSequence& seq) {
    std::ostringstream os;
    for (std::size_t i = 0; i < seq.size(); ++i) os << (i ? " " : "") << seq[i];
    return os.str();
}

std::string format_graph(const LabeledGraph& g) {
    std::ostringstream os;
    os << g.order() << ' ' << g.size() << '\n';
    for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
    return os.str();
}

Json edges_to_json(const std::vector<Edge>& edges) {
    Json out = Json::array();
    for (const Edge& e : edges) out.push_back(Json::array({e.u, e.v}));
    return out;
}

Json to_json(const Fingerprint& fp) {
    Json out = Json::object();
    out["graph"] = edges_to_json(fp.graph);
    out["factor"] = edges_to_json(fp.factor);
    return out;
}

Json to_json(const KunduRealization& kr) { return to_json(fingerprint(kr)); }

Json to_json(const Swap& s) {
    Json out = Json::object();
    out["layer"] = std::string(to_string(s.layer));
    out["remove"] = edges_to_json({s.removed[0], s.removed[1]});
    out["add"] = edges_to_json({s.added[0], s.added[1]});
    return out;
}

Json to_json(const SwapTrace& trace) {
    Json out = Json::object();
    out["start"] = to_json(trace.start);
    Json swaps = Json::array();
    for (const Swap& s : trace.swaps) swaps.push_back(to_json(s));
    out["swaps"] = std::move(swaps);
    out["end"] = to_json(trace.end);
    return out;
}

KunduRealization kundu_from_json(const Json& j) { return from_fingerprint(fingerprint_from_json(j)); }

SwapTrace trace_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("start") || !j.contains("swaps") || !j.contains("end"))
        throw Error(ErrorKind::invalid_input, "trace needs 'start', 'swaps' and 'end'");
    SwapTrace t;
    t.start = fingerprint_from_json(j.at("start"));
    t.end = fingerprint_from_json(j.at("end"));
    if (!j.at("swaps").is_array()) throw Error(ErrorKind::invalid_input, "'swaps' must be an array");
    for (const auto& s : j.at("swaps")) t.swaps.push_back(swap_from_json(s));
    return t;
}

}  // namespace kundu::io
