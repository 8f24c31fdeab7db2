#include "kundupack/hamiltonian.hpp"

#include <algorithm>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

namespace kundu {

std::size_t min_complement_degree(const LabeledGraph& blocked) {
    const auto n = blocked.order();
    if (n == 0) return 0;
    std::size_t worst = n;
    for (std::size_t x = 0; x < n; ++x)
        worst = std::min(worst, n - 1 - blocked.degree(static_cast<Vertex>(x)));
    return worst;
}

bool dirac_condition(const LabeledGraph& blocked) {
    const auto n = blocked.order();
    return n >= 3 && 2 * min_complement_degree(blocked) >= n;
}

namespace {

class PathBuilder {
public:
    PathBuilder(const LabeledGraph& blocked, std::uint64_t seed)
        : blocked_(blocked), n_(blocked.order()), offset_(static_cast<std::size_t>(seed / n_) % n_),
          on_path_(n_, false) {}

    bool allowed(Vertex a, Vertex b) const { return a != b && !blocked_.has_edge(a, b); }

    std::vector<Vertex> run(Vertex start) {
        path_.push_back(start);
        on_path_[static_cast<std::size_t>(start)] = true;
        for (;;) {
            extend();
            std::reverse(path_.begin(), path_.end());
            extend();
            close();
            if (path_.size() == n_) return path_;
            reopen();
        }
    }

private:
    Vertex scan(std::size_t k) const { return static_cast<Vertex>((offset_ + k) % n_); }

    void extend() {
        for (bool grown = true; grown;) {
            grown = false;
            const Vertex end = path_.back();
            for (std::size_t k = 0; k < n_; ++k) {
                Vertex x = scan(k);
                if (!on_path_[static_cast<std::size_t>(x)] && allowed(end, x)) {
                    path_.push_back(x);
                    on_path_[static_cast<std::size_t>(x)] = true;
                    grown = true;
                    break;
                }
            }
        }
    }

    // Both ends see only path vertices, so deg(p0) + deg(pk) >= n forces a
    // crossing pair p0 ~ p[i+1], pk ~ p[i].
    void close() {
        const std::size_t k = path_.size();
        if (k >= 3 && allowed(path_.front(), path_.back())) return;
        for (std::size_t i = 0; i + 1 < k; ++i) {
            if (allowed(path_.front(), path_[i + 1]) && allowed(path_.back(), path_[i])) {
                std::reverse(path_.begin() + static_cast<std::ptrdiff_t>(i) + 1, path_.end());
                return;
            }
        }
        throw Error(ErrorKind::precondition_violated, "no closing rotation for a maximal path");
    }

    // The complement is connected, so some outside vertex touches the cycle.
    void reopen() {
        const std::size_t k = path_.size();
        for (std::size_t a = 0; a < n_; ++a) {
            Vertex w = scan(a);
            if (on_path_[static_cast<std::size_t>(w)]) continue;
            for (std::size_t j = 0; j < k; ++j) {
                if (!allowed(w, path_[j])) continue;
                std::rotate(path_.begin(), path_.begin() + static_cast<std::ptrdiff_t>(j), path_.end());
                path_.insert(path_.begin(), w);
                on_path_[static_cast<std::size_t>(w)] = true;
                return;
            }
        }
        throw Error(ErrorKind::precondition_violated, "complement is disconnected");
    }

    const LabeledGraph& blocked_;
    std::size_t n_;
    std::size_t offset_;
    std::vector<bool> on_path_;
    std::vector<Vertex> path_;
};

}  // namespace

std::vector<Vertex> dirac_hamiltonian_cycle(const LabeledGraph& blocked, std::uint64_t seed) {
    if (!dirac_condition(blocked))
        throw Error(ErrorKind::precondition_violated,
                    "complement minimum degree " + std::to_string(min_complement_degree(blocked)) +
                        " is below n/2");
    const auto n = blocked.order();
    PathBuilder builder(blocked, seed);
    return builder.run(static_cast<Vertex>(seed % n));
}

OneFactor alternate_edges(const std::vector<Vertex>& cycle) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i + 1 < cycle.size(); i += 2) edges.push_back(Edge::of(cycle[i], cycle[i + 1]));
    return OneFactor::from_edges(cycle.size(), edges);
}

std::optional<OneFactor> complement_perfect_matching(const LabeledGraph& blocked) {
    using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    const auto n = blocked.order();
    if (n % 2 != 0) return std::nullopt;
    if (n == 0) return OneFactor{};

    BoostGraph bg(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (!blocked.has_edge(static_cast<Vertex>(u), static_cast<Vertex>(v))) boost::add_edge(u, v, bg);

    std::vector<boost::graph_traits<BoostGraph>::vertex_descriptor> mate(n);
    boost::edmonds_maximum_cardinality_matching(bg, &mate[0]);
    if (boost::matching_size(bg, &mate[0]) * 2 != n) return std::nullopt;

    std::vector<Vertex> out(n);
    for (std::size_t x = 0; x < n; ++x) out[x] = static_cast<Vertex>(mate[x]);
    return OneFactor(std::move(out));
}

}  // namespace kundu
