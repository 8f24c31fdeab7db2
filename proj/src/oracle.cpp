#include "kundupack/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace kundu::oracle {

namespace {

void check_cap(std::size_t n, std::size_t cap, const char* what) {
    if (n > cap)
        throw Error(ErrorKind::too_large, std::string(what) + ": n=" + std::to_string(n) +
                                              " exceeds cap " + std::to_string(cap));
}

// Calls visit(edges) for each realization, vertex by vertex choosing the
// later neighbors of each vertex. Stops once visit returns false.
void for_each_realization(const DegreeSequence& pi, const std::function<bool(const std::vector<Edge>&)>& visit) {
    const auto n = pi.size();
    std::vector<int> residual = pi.values();
    for (int d : residual)
        if (d > static_cast<int>(n) - 1) return;
    if (pi.sum() % 2 != 0) return;

    std::vector<Edge> edges;
    bool stop = false;

    // Chooses residual[u] partners among v >= from for vertex u.
    std::function<void(Vertex, Vertex)> pick = [&](Vertex u, Vertex from) {
        if (stop) return;
        const auto uu = static_cast<std::size_t>(u);
        if (residual[uu] == 0) {
            Vertex next = u + 1;
            if (static_cast<std::size_t>(next) == n) {
                if (!visit(edges)) stop = true;
                return;
            }
            pick(next, next + 1);
            return;
        }
        int available = 0;
        for (auto v = static_cast<std::size_t>(from); v < n; ++v) available += residual[v] > 0 ? 1 : 0;
        if (available < residual[uu]) return;
        for (Vertex v = from; static_cast<std::size_t>(v) < n && !stop; ++v) {
            const auto vv = static_cast<std::size_t>(v);
            if (residual[vv] == 0) continue;
            --residual[uu];
            --residual[vv];
            edges.push_back(Edge{u, v});
            pick(u, v + 1);
            edges.pop_back();
            ++residual[uu];
            ++residual[vv];
        }
    };
    if (n == 0) {
        visit(edges);
        return;
    }
    pick(0, 1);
}

void for_each_matching(std::size_t n, const std::function<bool(const std::vector<Vertex>&)>& visit) {
    std::vector<Vertex> mate(n, -1);
    bool stop = false;
    std::function<void(std::size_t)> go = [&](std::size_t low) {
        if (stop) return;
        while (low < n && mate[low] >= 0) ++low;
        if (low == n) {
            if (!visit(mate)) stop = true;
            return;
        }
        for (std::size_t v = low + 1; v < n && !stop; ++v) {
            if (mate[v] >= 0) continue;
            mate[low] = static_cast<Vertex>(v);
            mate[v] = static_cast<Vertex>(low);
            go(low + 1);
            mate[low] = -1;
            mate[v] = -1;
        }
    };
    go(0);
}

bool disjoint(const LabeledGraph& g, const std::vector<Vertex>& mate) {
    for (std::size_t x = 0; x < mate.size(); ++x)
        if (g.has_edge(static_cast<Vertex>(x), mate[x])) return false;
    return true;
}

std::vector<int> node_key(const KunduRealization& kr) {
    std::vector<int> key;
    for (const Edge& e : kr.green.edges()) key.insert(key.end(), {e.u, e.v});
    key.push_back(-1);
    for (const Edge& e : kr.factor.edges()) key.insert(key.end(), {e.u, e.v});
    return key;
}

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

}  // namespace

std::vector<LabeledGraph> enumerate_realizations(const DegreeSequence& pi, std::size_t cap) {
    check_cap(pi.size(), cap, "enumerate_realizations");
    std::vector<std::vector<Edge>> found;
    for_each_realization(pi, [&](const std::vector<Edge>& edges) {
        found.push_back(edges);
        return true;
    });
    std::sort(found.begin(), found.end());
    std::vector<LabeledGraph> out;
    out.reserve(found.size());
    for (const auto& edges : found) out.emplace_back(pi.size(), edges);
    return out;
}

std::vector<OneFactor> enumerate_perfect_matchings(std::size_t n, std::size_t cap) {
    check_cap(n, cap, "enumerate_perfect_matchings");
    if (n % 2 != 0) throw Error(ErrorKind::invalid_input, "odd vertex count has no perfect matching");
    std::vector<OneFactor> out;
    for_each_matching(n, [&](const std::vector<Vertex>& mate) {
        out.emplace_back(mate);
        return true;
    });
    return out;
}

std::vector<KunduRealization> enumerate_kundu_realizations(const DegreeSequence& pi, std::size_t cap) {
    check_cap(pi.size(), cap, "enumerate_kundu_realizations");
    std::vector<KunduRealization> out;
    if (pi.size() % 2 != 0) return out;
    const auto graphs = enumerate_realizations(pi, cap);
    if (graphs.empty()) return out;
    const auto matchings = enumerate_perfect_matchings(pi.size(), std::max(cap, pi.size()));
    for (const auto& g : graphs)
        for (const auto& m : matchings) {
            bool clash = false;
            for (const Edge& e : m.edges()) clash = clash || g.has_edge(e);
            if (!clash) out.push_back(KunduRealization{g, m});
        }
    return out;
}

std::optional<KunduRealization> find_kundu_realization(const DegreeSequence& pi, std::size_t cap) {
    check_cap(pi.size(), cap, "find_kundu_realization");
    const auto n = pi.size();
    if (n % 2 != 0) return std::nullopt;
    std::optional<KunduRealization> found;
    for_each_realization(pi, [&](const std::vector<Edge>& edges) {
        LabeledGraph g(n, edges);
        for_each_matching(n, [&](const std::vector<Vertex>& mate) {
            if (!disjoint(g, mate)) return true;
            found = KunduRealization{g, OneFactor(mate)};
            return false;
        });
        return !found;
    });
    return found;
}

std::size_t MetaGraph::component_count() const {
    std::size_t best = 0;
    for (std::size_t c : component) best = std::max(best, c + 1);
    return best;
}

std::optional<std::size_t> MetaGraph::find(const KunduRealization& kr) const {
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i] == kr) return i;
    return std::nullopt;
}

std::vector<Swap> all_k_swaps(const KunduRealization& kr) {
    std::vector<Swap> out;
    auto scan = [&](const std::vector<Edge>& layer_edges, Layer layer) {
        for (std::size_t i = 0; i < layer_edges.size(); ++i)
            for (std::size_t j = i + 1; j < layer_edges.size(); ++j) {
                const Edge e = layer_edges[i];
                const Edge f = layer_edges[j];
                for (Swap s : {Swap::make(e.u, e.v, f.u, f.v, layer), Swap::make(e.v, e.u, f.u, f.v, layer)})
                    if (is_k_swap(kr, s)) out.push_back(s);
            }
    };
    scan(kr.green.edges(), Layer::graph);
    scan(kr.factor.edges(), Layer::factor);
    return out;
}

MetaGraph kswap_metagraph(const DegreeSequence& pi, std::size_t cap) {
    check_cap(pi.size(), cap, "kswap_metagraph");
    MetaGraph mg;
    mg.nodes = enumerate_kundu_realizations(pi, std::max(cap, pi.size()));
    std::sort(mg.nodes.begin(), mg.nodes.end(),
              [](const KunduRealization& a, const KunduRealization& b) { return node_key(a) < node_key(b); });
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < mg.nodes.size(); ++i) index.emplace(node_key(mg.nodes[i]), i);

    std::set<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < mg.nodes.size(); ++i)
        for (const Swap& s : all_k_swaps(mg.nodes[i])) {
            const std::size_t j = index.at(node_key(apply_k_swap(mg.nodes[i], s)));
            edges.emplace(std::min(i, j), std::max(i, j));
        }
    mg.edges.assign(edges.begin(), edges.end());

    mg.adjacency.assign(mg.nodes.size(), {});
    UnionFind uf(mg.nodes.size());
    for (auto [a, b] : mg.edges) {
        mg.adjacency[a].push_back(b);
        mg.adjacency[b].push_back(a);
        uf.unite(a, b);
    }
    for (auto& row : mg.adjacency) std::sort(row.begin(), row.end());

    std::map<std::size_t, std::size_t> ids;
    mg.component.resize(mg.nodes.size());
    for (std::size_t i = 0; i < mg.nodes.size(); ++i) {
        auto [it, fresh] = ids.emplace(uf.find(i), ids.size());
        mg.component[i] = it->second;
    }
    return mg;
}

MetaGraphReport report(const MetaGraph& mg) {
    MetaGraphReport r;
    r.nodes = mg.nodes.size();
    r.edges = mg.edges.size();
    r.components = mg.component_count();
    std::vector<std::optional<std::size_t>> first(r.components);
    for (std::size_t i = 0; i < mg.nodes.size(); ++i)
        if (!first[mg.component[i]]) first[mg.component[i]] = i;
    for (std::size_t k = 1; k < r.components; ++k) r.witnesses.emplace_back(*first[0], *first[k]);
    return r;
}

std::string MetaGraphReport::to_string() const {
    std::ostringstream os;
    os << "nodes=" << nodes << " edges=" << edges << " components=" << components
       << " connected=" << (components <= 1 ? "true" : "false") << " witnesses=[";
    for (std::size_t i = 0; i < witnesses.size(); ++i)
        os << (i ? "," : "") << '[' << witnesses[i].first << ',' << witnesses[i].second << ']';
    os << ']';
    return os.str();
}

Coverage factor_coverage(const DegreeSequence& pi, std::size_t cap) {
    check_cap(pi.size(), cap, "factor_coverage");
    const auto graphs = enumerate_realizations(pi, cap);
    const auto matchings = enumerate_perfect_matchings(pi.size(), std::max(cap, pi.size()));
    for (const auto& m : matchings) {
        bool covered = false;
        for (const auto& g : graphs) {
            bool clash = false;
            for (const Edge& e : m.edges()) clash = clash || g.has_edge(e);
            if (!clash) {
                covered = true;
                break;
            }
        }
        if (!covered) return Coverage{false, m};
    }
    return Coverage{true, std::nullopt};
}

}  // namespace kundu::oracle
