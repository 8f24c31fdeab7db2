#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "kundupack/error.hpp"

namespace kundu {

using Vertex = int;

/// Unordered vertex pair, stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    static Edge of(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

    bool touches(Vertex x) const { return u == x || v == x; }
    Vertex other(Vertex x) const { return x == u ? v : u; }

    std::uint64_t key() const {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
               static_cast<std::uint32_t>(v);
    }

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1.
class LabeledGraph {
public:
    explicit LabeledGraph(std::size_t n = 0);
    /// Throws Error(invalid_input) on loops, out-of-range endpoints or duplicates.
    LabeledGraph(std::size_t n, std::span<const Edge> edges);

    std::size_t order() const { return adj_.size(); }
    std::size_t size() const { return keys_.size(); }

    bool has_edge(Edge e) const { return keys_.contains(e.key()); }
    bool has_edge(Vertex a, Vertex b) const { return a != b && has_edge(Edge::of(a, b)); }

    void add_edge(Edge e);
    void remove_edge(Edge e);

    std::size_t degree(Vertex x) const { return adj_[static_cast<std::size_t>(x)].size(); }
    std::span<const Vertex> neighbors(Vertex x) const { return adj_[static_cast<std::size_t>(x)]; }
    std::size_t max_degree() const;
    std::vector<int> degree_sequence() const;

    /// Lexicographically sorted edge list.
    std::vector<Edge> edges() const;

    friend bool operator==(const LabeledGraph& a, const LabeledGraph& b) {
        return a.order() == b.order() && a.keys_ == b.keys_;
    }

private:
    void check_endpoints(Edge e) const;

    std::vector<std::vector<Vertex>> adj_;
    std::unordered_set<std::uint64_t> keys_;
};

/// Perfect matching stored as a mate array.
class OneFactor {
public:
    OneFactor() = default;
    /// Throws Error(invalid_input) unless mate is a fixed-point-free involution.
    explicit OneFactor(std::vector<Vertex> mate);
    /// Throws Error(invalid_input) unless the edges cover every vertex exactly once.
    static OneFactor from_edges(std::size_t n, std::span<const Edge> edges);

    std::size_t order() const { return mate_.size(); }
    std::size_t size() const { return mate_.size() / 2; }
    Vertex mate(Vertex x) const { return mate_[static_cast<std::size_t>(x)]; }
    bool has_edge(Edge e) const {
        return e.u != e.v && e.u >= 0 && static_cast<std::size_t>(e.v) < mate_.size() &&
               mate_[static_cast<std::size_t>(e.u)] == e.v;
    }
    bool has_edge(Vertex a, Vertex b) const { return a != b && has_edge(Edge::of(a, b)); }

    std::vector<Edge> edges() const;
    LabeledGraph as_graph() const;

    /// Replaces two matching edges by two others on the same four vertices.
    /// The caller guarantees validity.
    void rematch(const std::array<Edge, 2>& removed, const std::array<Edge, 2>& added);

    friend bool operator==(const OneFactor&, const OneFactor&) = default;

private:
    std::vector<Vertex> mate_;
};

/// A graph realizing pi together with a displayed 1-factor, edge-disjoint.
struct KunduRealization {
    LabeledGraph green;
    OneFactor factor;

    std::size_t order() const { return factor.order(); }

    friend bool operator==(const KunduRealization&, const KunduRealization&) = default;
};

/// Returns a description of the first violated invariant, if any.
std::optional<std::string> invariant_violation(const KunduRealization& kr);

enum class Layer { graph, factor };

std::string_view to_string(Layer layer);

/// The swap ab,cd => bc,ad.
struct Swap {
    std::array<Edge, 2> removed;
    std::array<Edge, 2> added;
    Layer layer = Layer::graph;

    static Swap make(Vertex a, Vertex b, Vertex c, Vertex d, Layer layer);
    Swap reversed() const { return Swap{added, removed, layer}; }

    friend bool operator==(const Swap&, const Swap&) = default;
};

/// Canonical sorted edge lists of both layers.
struct Fingerprint {
    std::size_t n = 0;
    std::vector<Edge> graph;
    std::vector<Edge> factor;

    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const KunduRealization& kr);
KunduRealization from_fingerprint(const Fingerprint& fp);

struct SwapTrace {
    Fingerprint start;
    std::vector<Swap> swaps;
    Fingerprint end;
};

/// Checks the swap shape only: four distinct vertices re-paired.
bool well_formed(const Swap& s);

std::optional<SwapFailure> check_swap(const LabeledGraph& g, const Swap& s);
std::optional<SwapFailure> check_k_swap(const KunduRealization& kr, const Swap& s);

/// Throws InvalidSwapError.
LabeledGraph apply_swap(const LabeledGraph& g, const Swap& s);

bool is_k_swap(const KunduRealization& kr, const Swap& s);

/// Throws InvalidSwapError.
KunduRealization apply_k_swap(const KunduRealization& kr, const Swap& s);

/// In-place variant of apply_k_swap.
void apply_k_swap_in_place(KunduRealization& kr, const Swap& s);

/// Replays the trace from start. Throws TraceMismatch on fingerprint
/// divergence and InvalidSwapError carrying the failing step index.
KunduRealization verify_trace(const KunduRealization& start, const SwapTrace& trace);

}  // namespace kundu
