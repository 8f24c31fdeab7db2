#include "kundupack/graph.hpp"

#include <algorithm>

namespace kundu {

namespace {

Error invalid(const std::string& what) { return Error(ErrorKind::invalid_input, what); }

std::string edge_str(Edge e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

}  // namespace

LabeledGraph::LabeledGraph(std::size_t n) : adj_(n) {}

LabeledGraph::LabeledGraph(std::size_t n, std::span<const Edge> edges) : adj_(n) {
    keys_.reserve(edges.size());
    for (const Edge& raw : edges) {
        if (raw.u == raw.v) throw invalid("loop at vertex " + std::to_string(raw.u));
        Edge e = Edge::of(raw.u, raw.v);
        check_endpoints(e);
        if (has_edge(e)) throw invalid("duplicate edge " + edge_str(e));
        add_edge(e);
    }
}

void LabeledGraph::check_endpoints(Edge e) const {
    if (e.u < 0 || static_cast<std::size_t>(e.v) >= order() || e.u == e.v)
        throw invalid("edge " + edge_str(e) + " out of range for n=" + std::to_string(order()));
}

void LabeledGraph::add_edge(Edge e) {
    check_endpoints(e);
    if (!keys_.insert(e.key()).second) throw invalid("duplicate edge " + edge_str(e));
    adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
}

void LabeledGraph::remove_edge(Edge e) {
    if (keys_.erase(e.key()) == 0) throw invalid("missing edge " + edge_str(e));
    auto drop = [](std::vector<Vertex>& list, Vertex x) {
        auto it = std::find(list.begin(), list.end(), x);
        *it = list.back();
        list.pop_back();
    };
    drop(adj_[static_cast<std::size_t>(e.u)], e.v);
    drop(adj_[static_cast<std::size_t>(e.v)], e.u);
}

std::size_t LabeledGraph::max_degree() const {
    std::size_t best = 0;
    for (const auto& list : adj_) best = std::max(best, list.size());
    return best;
}

std::vector<int> LabeledGraph::degree_sequence() const {
    std::vector<int> out(order());
    for (std::size_t i = 0; i < order(); ++i) out[i] = static_cast<int>(adj_[i].size());
    return out;
}

std::vector<Edge> LabeledGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(size());
    for (std::size_t u = 0; u < order(); ++u)
        for (Vertex v : adj_[u])
            if (static_cast<Vertex>(u) < v) out.push_back(Edge{static_cast<Vertex>(u), v});
    std::sort(out.begin(), out.end());
    return out;
}

OneFactor::OneFactor(std::vector<Vertex> mate) : mate_(std::move(mate)) {
    const auto n = mate_.size();
    for (std::size_t x = 0; x < n; ++x) {
        Vertex m = mate_[x];
        if (m < 0 || static_cast<std::size_t>(m) >= n || static_cast<std::size_t>(m) == x ||
            mate_[static_cast<std::size_t>(m)] != static_cast<Vertex>(x))
            throw invalid("mate array is not a perfect matching at vertex " + std::to_string(x));
    }
}

OneFactor OneFactor::from_edges(std::size_t n, std::span<const Edge> edges) {
    std::vector<Vertex> mate(n, -1);
    for (const Edge& raw : edges) {
        if (raw.u == raw.v) throw invalid("loop at vertex " + std::to_string(raw.u));
        Edge e = Edge::of(raw.u, raw.v);
        if (e.u < 0 || static_cast<std::size_t>(e.v) >= n)
            throw invalid("edge " + edge_str(e) + " out of range for n=" + std::to_string(n));
        if (mate[static_cast<std::size_t>(e.u)] != -1 || mate[static_cast<std::size_t>(e.v)] != -1)
            throw invalid("vertex covered twice by edge " + edge_str(e));
        mate[static_cast<std::size_t>(e.u)] = e.v;
        mate[static_cast<std::size_t>(e.v)] = e.u;
    }
    for (std::size_t x = 0; x < n; ++x)
        if (mate[x] == -1) throw invalid("vertex " + std::to_string(x) + " is unmatched");
    return OneFactor(std::move(mate));
}

std::vector<Edge> OneFactor::edges() const {
    std::vector<Edge> out;
    out.reserve(size());
    for (std::size_t x = 0; x < mate_.size(); ++x)
        if (static_cast<Vertex>(x) < mate_[x]) out.push_back(Edge{static_cast<Vertex>(x), mate_[x]});
    return out;
}

LabeledGraph OneFactor::as_graph() const {
    auto es = edges();
    return LabeledGraph(order(), es);
}

void OneFactor::rematch(const std::array<Edge, 2>& removed, const std::array<Edge, 2>& added) {
    for (const Edge& e : removed) {
        mate_[static_cast<std::size_t>(e.u)] = -1;
        mate_[static_cast<std::size_t>(e.v)] = -1;
    }
    for (const Edge& e : added) {
        mate_[static_cast<std::size_t>(e.u)] = e.v;
        mate_[static_cast<std::size_t>(e.v)] = e.u;
    }
}

std::optional<std::string> invariant_violation(const KunduRealization& kr) {
    const auto n = kr.factor.order();
    if (kr.green.order() != n)
        return "green graph has " + std::to_string(kr.green.order()) + " vertices, factor has " +
               std::to_string(n);

    std::size_t degree_total = 0;
    for (std::size_t x = 0; x < n; ++x) {
        for (Vertex y : kr.green.neighbors(static_cast<Vertex>(x))) {
            if (y == static_cast<Vertex>(x)) return "green loop at " + std::to_string(x);
            if (!kr.green.has_edge(static_cast<Vertex>(x), y))
                return "green adjacency out of sync at " + std::to_string(x);
        }
        degree_total += kr.green.degree(static_cast<Vertex>(x));
    }
    if (degree_total != 2 * kr.green.size()) return "green graph is not simple";

    for (std::size_t x = 0; x < n; ++x) {
        Vertex m = kr.factor.mate(static_cast<Vertex>(x));
        if (m < 0 || static_cast<std::size_t>(m) >= n || m == static_cast<Vertex>(x) ||
            kr.factor.mate(m) != static_cast<Vertex>(x))
            return "factor is not a perfect matching at " + std::to_string(x);
    }

    for (const Edge& e : kr.factor.edges())
        if (kr.green.has_edge(e)) return "edge " + edge_str(e) + " is in both layers";

    std::vector<std::size_t> union_degree(n, 0);
    for (const Edge& e : kr.green.edges()) {
        ++union_degree[static_cast<std::size_t>(e.u)];
        ++union_degree[static_cast<std::size_t>(e.v)];
    }
    for (const Edge& e : kr.factor.edges()) {
        ++union_degree[static_cast<std::size_t>(e.u)];
        ++union_degree[static_cast<std::size_t>(e.v)];
    }
    for (std::size_t x = 0; x < n; ++x)
        if (union_degree[x] != kr.green.degree(static_cast<Vertex>(x)) + 1)
            return "union degree at " + std::to_string(x) + " is not pi + 1";
    return std::nullopt;
}

std::string_view to_string(Layer layer) { return layer == Layer::graph ? "graph" : "factor"; }

Swap Swap::make(Vertex a, Vertex b, Vertex c, Vertex d, Layer layer) {
    return Swap{{Edge::of(a, b), Edge::of(c, d)}, {Edge::of(b, c), Edge::of(a, d)}, layer};
}

Fingerprint fingerprint(const KunduRealization& kr) {
    return Fingerprint{kr.order(), kr.green.edges(), kr.factor.edges()};
}

KunduRealization from_fingerprint(const Fingerprint& fp) {
    return KunduRealization{LabeledGraph(fp.n, fp.graph), OneFactor::from_edges(fp.n, fp.factor)};
}

bool well_formed(const Swap& s) {
    std::array<Vertex, 4> vs{s.removed[0].u, s.removed[0].v, s.removed[1].u, s.removed[1].v};
    for (const Edge& e : s.removed)
        if (e.u >= e.v) return false;
    for (const Edge& e : s.added)
        if (e.u >= e.v) return false;
    std::array<Vertex, 4> sorted = vs;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;

    std::array<Vertex, 4> added{s.added[0].u, s.added[0].v, s.added[1].u, s.added[1].v};
    std::sort(added.begin(), added.end());
    if (added != sorted) return false;

    // The added pairs must be one of the two other matchings on the four vertices.
    auto same = [](const std::array<Edge, 2>& x, const std::array<Edge, 2>& y) {
        return (x[0] == y[0] && x[1] == y[1]) || (x[0] == y[1] && x[1] == y[0]);
    };
    return !same(s.removed, s.added);
}

namespace {

bool in_range(const Swap& s, std::size_t n) {
    for (const Edge& e : s.removed)
        if (e.u < 0 || static_cast<std::size_t>(e.v) >= n) return false;
    return true;
}

}  // namespace

std::optional<SwapFailure> check_swap(const LabeledGraph& g, const Swap& s) {
    if (!well_formed(s) || !in_range(s, g.order())) return SwapFailure::distinctness;
    for (const Edge& e : s.removed)
        if (!g.has_edge(e)) return SwapFailure::removed_present;
    for (const Edge& e : s.added)
        if (g.has_edge(e)) return SwapFailure::added_absent;
    return std::nullopt;
}

std::optional<SwapFailure> check_k_swap(const KunduRealization& kr, const Swap& s) {
    if (!well_formed(s) || !in_range(s, kr.order())) return SwapFailure::distinctness;
    if (s.layer == Layer::factor) {
        for (const Edge& e : s.removed)
            if (!kr.factor.has_edge(e)) return SwapFailure::removed_present;
        for (const Edge& e : s.added)
            if (kr.factor.has_edge(e)) return SwapFailure::added_absent;
        for (const Edge& e : s.added)
            if (kr.green.has_edge(e)) return SwapFailure::cross_layer;
    } else {
        for (const Edge& e : s.removed)
            if (!kr.green.has_edge(e)) return SwapFailure::removed_present;
        for (const Edge& e : s.added)
            if (kr.green.has_edge(e)) return SwapFailure::added_absent;
        for (const Edge& e : s.added)
            if (kr.factor.has_edge(e)) return SwapFailure::cross_layer;
    }
    return std::nullopt;
}

LabeledGraph apply_swap(const LabeledGraph& g, const Swap& s) {
    if (auto failure = check_swap(g, s)) throw InvalidSwapError(*failure);
    LabeledGraph out = g;
    for (const Edge& e : s.removed) out.remove_edge(e);
    for (const Edge& e : s.added) out.add_edge(e);
    return out;
}

bool is_k_swap(const KunduRealization& kr, const Swap& s) { return !check_k_swap(kr, s); }

void apply_k_swap_in_place(KunduRealization& kr, const Swap& s) {
    if (auto failure = check_k_swap(kr, s)) throw InvalidSwapError(*failure);
    if (s.layer == Layer::factor) {
        kr.factor.rematch(s.removed, s.added);
    } else {
        for (const Edge& e : s.removed) kr.green.remove_edge(e);
        for (const Edge& e : s.added) kr.green.add_edge(e);
    }
}

KunduRealization apply_k_swap(const KunduRealization& kr, const Swap& s) {
    KunduRealization out = kr;
    apply_k_swap_in_place(out, s);
    return out;
}

KunduRealization verify_trace(const KunduRealization& start, const SwapTrace& trace) {
    if (fingerprint(start) != trace.start)
        throw Error(ErrorKind::trace_mismatch, "start fingerprint does not match");
    KunduRealization state = start;
    for (std::size_t step = 0; step < trace.swaps.size(); ++step) {
        const Swap& s = trace.swaps[step];
        if (auto failure = check_k_swap(state, s)) throw InvalidSwapError(*failure, step);
        apply_k_swap_in_place(state, s);
        if (auto broken = invariant_violation(state))
            throw Error(ErrorKind::trace_mismatch,
                        "step=" + std::to_string(step) + " leaves an invalid state: " + *broken);
    }
    if (fingerprint(state) != trace.end)
        throw Error(ErrorKind::trace_mismatch, "replay does not reach the end fingerprint");
    return state;
}

}  // namespace kundu
