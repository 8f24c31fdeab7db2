#pragma once

// Generators and brute-force references shared by the unit tests and the
// acceptance binary.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "kundupack/cycles.hpp"
#include "kundupack/degseq.hpp"
#include "kundupack/graph.hpp"

namespace kundu::testing {

inline std::vector<Edge> edges_of(std::initializer_list<std::pair<int, int>> pairs) {
    std::vector<Edge> out;
    for (auto [a, b] : pairs) out.push_back(Edge::of(a, b));
    return out;
}

inline LabeledGraph graph_of(std::size_t n, std::initializer_list<std::pair<int, int>> pairs) {
    auto e = edges_of(pairs);
    return LabeledGraph(n, e);
}

inline OneFactor factor_of(std::size_t n, std::initializer_list<std::pair<int, int>> pairs) {
    auto e = edges_of(pairs);
    return OneFactor::from_edges(n, e);
}

/// Every labeled graph on n <= 7 vertices, as degree sequences (positional).
inline std::set<std::vector<int>> all_degree_sequences(std::size_t n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < static_cast<int>(n); ++u)
        for (int v = u + 1; v < static_cast<int>(n); ++v) pairs.emplace_back(u, v);
    std::set<std::vector<int>> out;
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    std::vector<int> deg(n);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::fill(deg.begin(), deg.end(), 0);
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if (mask >> k & 1) {
                ++deg[static_cast<std::size_t>(pairs[k].first)];
                ++deg[static_cast<std::size_t>(pairs[k].second)];
            }
        out.insert(deg);
    }
    return out;
}

/// Calls f on every vector of length n with entries in [0, top].
template <class F>
void for_each_sequence(std::size_t n, int top, F&& f) {
    std::vector<int> v(n, 0);
    for (;;) {
        f(v);
        std::size_t i = 0;
        while (i < n && v[i] == top) v[i++] = 0;
        if (i == n) return;
        ++v[i];
    }
}

/// Cyclic distance between positions i and j of an L-cycle.
inline std::size_t cyclic_distance(std::size_t i, std::size_t j, std::size_t L) {
    const std::size_t d = i > j ? i - j : j - i;
    return std::min(d, L - d);
}

/// Red and blue factors realizing the given vertex-disjoint cycles; vertices
/// outside every cycle are paired identically in both (n must make that
/// possible).
struct CycleState {
    std::size_t n = 0;
    std::vector<AlternatingCycle> cycles;
    OneFactor red;
    OneFactor blue;
};

inline CycleState make_cycle_state(std::size_t n, const std::vector<AlternatingCycle>& cycles) {
    std::vector<Vertex> red(n, -1);
    std::vector<Vertex> blue(n, -1);
    for (const auto& c : cycles)
        for (std::size_t k = 0; k < c.red_count(); ++k) {
            Edge r = c.red(k);
            Edge b = c.blue(k);
            red[static_cast<std::size_t>(r.u)] = r.v;
            red[static_cast<std::size_t>(r.v)] = r.u;
            blue[static_cast<std::size_t>(b.u)] = b.v;
            blue[static_cast<std::size_t>(b.v)] = b.u;
        }
    Vertex pending = -1;
    for (std::size_t x = 0; x < n; ++x) {
        if (red[x] >= 0) continue;
        if (pending < 0) {
            pending = static_cast<Vertex>(x);
            continue;
        }
        red[x] = blue[x] = pending;
        red[static_cast<std::size_t>(pending)] = blue[static_cast<std::size_t>(pending)] = static_cast<Vertex>(x);
        pending = -1;
    }
    return CycleState{n, cycles, OneFactor(red), OneFactor(blue)};
}

/// Random disjoint cycles with the given lengths on shuffled labels 0..n-1.
inline CycleState random_cycle_state(std::size_t n, const std::vector<std::size_t>& lengths, std::mt19937_64& rng) {
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<AlternatingCycle> cycles;
    std::size_t next = 0;
    for (std::size_t len : lengths) {
        AlternatingCycle c;
        c.vertices.assign(perm.begin() + static_cast<std::ptrdiff_t>(next),
                          perm.begin() + static_cast<std::ptrdiff_t>(next + len));
        next += len;
        cycles.push_back(std::move(c));
    }
    return make_cycle_state(n, cycles);
}

/// Random green graph avoiding both factors, max degree <= delta, trying
/// `attempts` random pairs among `vertices`.
inline LabeledGraph random_green(const CycleState& st, const std::vector<Vertex>& vertices, std::size_t delta,
                                 std::size_t attempts, std::mt19937_64& rng) {
    LabeledGraph g(st.n);
    if (vertices.size() < 2) return g;
    std::uniform_int_distribution<std::size_t> pick(0, vertices.size() - 1);
    for (std::size_t t = 0; t < attempts; ++t) {
        Vertex a = vertices[pick(rng)];
        Vertex b = vertices[pick(rng)];
        if (a == b || g.has_edge(a, b) || st.red.has_edge(a, b) || st.blue.has_edge(a, b)) continue;
        if (g.degree(a) >= delta || g.degree(b) >= delta) continue;
        g.add_edge(Edge::of(a, b));
    }
    return g;
}

inline std::vector<Vertex> all_vertices(std::size_t n) {
    std::vector<Vertex> v(n);
    std::iota(v.begin(), v.end(), 0);
    return v;
}

/// Random Kundu-feasible sequence with entries in [0, top].
inline DegreeSequence random_feasible_sequence(std::size_t n, int top, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pick(0, top);
    for (;;) {
        std::vector<int> v(n);
        for (int& x : v) x = pick(rng);
        DegreeSequence s(std::move(v));
        if (kundu_feasible(s)) return s;
    }
}

/// Total green eligible chords over all cycles.
inline std::size_t total_green_chords(const std::vector<AlternatingCycle>& cycles, const LabeledGraph& g) {
    std::size_t total = 0;
    for (const auto& c : cycles) total += green_chord_count(c, g);
    return total;
}

/// Replays factor-layer swaps from (g, red); returns a description of the
/// first discrepancy with `predicted`, or an empty string.
inline std::string replay_mismatch(const CycleState& st, const LabeledGraph& g, std::span<const Swap> swaps,
                                   std::vector<AlternatingCycle> predicted) {
    KunduRealization kr{g, st.red};
    try {
        for (const Swap& s : swaps) {
            if (s.layer != Layer::factor) return "graph-layer swap emitted";
            kr = apply_k_swap(kr, s);
        }
    } catch (const Error& e) {
        return e.what();
    }
    if (!(kr.green == g)) return "green graph changed";
    auto actual = symdiff_cycles(kr.factor, st.blue);
    if (canonical_multiset(actual) != canonical_multiset(std::move(predicted))) return "cycle multiset mismatch";
    return {};
}

}  // namespace kundu::testing
