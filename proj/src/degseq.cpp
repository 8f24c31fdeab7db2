#include "kundupack/degseq.hpp"

#include <algorithm>
#include <numeric>

#include "kundupack/hamiltonian.hpp"

namespace kundu {

namespace {

constexpr std::size_t kRealizationRetries = 32;

}  // namespace

std::string_view to_string(Mode mode) {
    return mode == Mode::guaranteed ? "guaranteed" : "best-effort";
}

DegreeSequence::DegreeSequence(std::vector<int> degrees) : degrees_(std::move(degrees)) {
    for (std::size_t i = 0; i < degrees_.size(); ++i)
        if (degrees_[i] < 0)
            throw Error(ErrorKind::invalid_input, "negative degree at position " + std::to_string(i));
}

int DegreeSequence::max() const {
    return degrees_.empty() ? 0 : *std::max_element(degrees_.begin(), degrees_.end());
}

long long DegreeSequence::sum() const {
    return std::accumulate(degrees_.begin(), degrees_.end(), 0LL);
}

DegreeSequence DegreeSequence::plus_one() const {
    std::vector<int> out = degrees_;
    for (int& d : out) ++d;
    return DegreeSequence(std::move(out));
}

bool within_degree_bound(std::size_t max_degree, std::size_t n) {
    return kDegreeBound * max_degree <= n;
}

bool is_graphic(const DegreeSequence& seq) {
    const std::size_t n = seq.size();
    if (seq.sum() % 2 != 0) return false;
    std::vector<long long> d(seq.values().begin(), seq.values().end());
    std::sort(d.begin(), d.end(), std::greater<>());
    if (n > 0 && d.front() > static_cast<long long>(n) - 1) return false;

    std::vector<long long> prefix(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + d[i];

    // Erdos-Gallai: for each k, sum of the k largest <= k(k-1) + sum_{i>k} min(d_i, k).
    // `at_least` counts entries >= k; it only shrinks as k grows.
    std::size_t at_least = n;
    for (std::size_t k = 1; k <= n; ++k) {
        const auto kk = static_cast<long long>(k);
        while (at_least > 0 && d[at_least - 1] < kk) --at_least;
        long long tail = 0;
        if (at_least > k) {
            tail = kk * static_cast<long long>(at_least - k) + (prefix[n] - prefix[at_least]);
        } else {
            tail = prefix[n] - prefix[k];
        }
        if (prefix[k] > kk * (kk - 1) + tail) return false;
    }
    return true;
}

namespace {

// Pivot and target choice shared by realize() and havel_hakimi_swaps().
struct HavelHakimiStep {
    Vertex pivot = -1;
    std::vector<Vertex> targets;
};

std::optional<HavelHakimiStep> next_step(const std::vector<int>& residual,
                                         const std::vector<bool>& fixed) {
    const auto n = residual.size();
    Vertex pivot = -1;
    for (std::size_t x = 0; x < n; ++x) {
        if (fixed[x] || residual[x] == 0) continue;
        if (pivot < 0 || residual[x] > residual[static_cast<std::size_t>(pivot)])
            pivot = static_cast<Vertex>(x);
    }
    if (pivot < 0) return std::nullopt;

    std::vector<Vertex> candidates;
    for (std::size_t x = 0; x < n; ++x)
        if (!fixed[x] && static_cast<Vertex>(x) != pivot && residual[x] > 0)
            candidates.push_back(static_cast<Vertex>(x));
    std::stable_sort(candidates.begin(), candidates.end(), [&](Vertex a, Vertex b) {
        return residual[static_cast<std::size_t>(a)] > residual[static_cast<std::size_t>(b)];
    });
    const auto need = static_cast<std::size_t>(residual[static_cast<std::size_t>(pivot)]);
    if (candidates.size() < need) throw Error(ErrorKind::not_graphic, "sequence is not graphic");
    candidates.resize(need);
    return HavelHakimiStep{pivot, std::move(candidates)};
}

void fix_pivot(const HavelHakimiStep& step, std::vector<int>& residual, std::vector<bool>& fixed) {
    fixed[static_cast<std::size_t>(step.pivot)] = true;
    residual[static_cast<std::size_t>(step.pivot)] = 0;
    for (Vertex t : step.targets) --residual[static_cast<std::size_t>(t)];
}

}  // namespace

LabeledGraph realize(const DegreeSequence& seq) {
    if (!is_graphic(seq)) throw Error(ErrorKind::not_graphic, "sequence is not graphic");
    const auto n = seq.size();
    std::vector<int> residual = seq.values();
    std::vector<bool> fixed(n, false);
    LabeledGraph g(n);
    while (auto step = next_step(residual, fixed)) {
        for (Vertex t : step->targets) g.add_edge(Edge::of(step->pivot, t));
        fix_pivot(*step, residual, fixed);
    }
    return g;
}

std::vector<Swap> havel_hakimi_swaps(const LabeledGraph& g) {
    const auto n = g.order();
    LabeledGraph h = g;
    std::vector<int> residual = g.degree_sequence();
    std::vector<bool> fixed(n, false);
    std::vector<Swap> swaps;

    auto live_neighbors = [&](Vertex x) {
        std::vector<Vertex> out;
        for (Vertex y : h.neighbors(x))
            if (!fixed[static_cast<std::size_t>(y)]) out.push_back(y);
        return out;
    };

    while (auto step = next_step(residual, fixed)) {
        const Vertex v = step->pivot;
        std::vector<bool> wanted(n, false);
        for (Vertex s : step->targets) wanted[static_cast<std::size_t>(s)] = true;

        for (;;) {
            auto nv = live_neighbors(v);
            auto t_it = std::find_if(nv.begin(), nv.end(),
                                     [&](Vertex x) { return !wanted[static_cast<std::size_t>(x)]; });
            if (t_it == nv.end()) break;
            const Vertex t = *t_it;
            auto s_it = std::find_if(step->targets.begin(), step->targets.end(),
                                     [&](Vertex x) { return !h.has_edge(v, x); });
            const Vertex s = *s_it;
            // residual(s) >= residual(t), so s has a live neighbor w outside N(t) + t.
            Vertex w = -1;
            for (Vertex x : live_neighbors(s)) {
                if (x != t && !h.has_edge(t, x)) {
                    w = x;
                    break;
                }
            }
            if (w < 0) throw Error(ErrorKind::invalid_input, "havel-hakimi rewiring failed");
            Swap sw = Swap::make(t, v, s, w, Layer::graph);
            for (const Edge& e : sw.removed) h.remove_edge(e);
            for (const Edge& e : sw.added) h.add_edge(e);
            swaps.push_back(sw);
        }
        fix_pivot(*step, residual, fixed);
    }
    return swaps;
}

bool kundu_feasible(const DegreeSequence& pi) {
    return pi.size() % 2 == 0 && is_graphic(pi) && is_graphic(pi.plus_one());
}

KunduRealization kundu_realize(const KunduInstance& inst, std::mt19937_64& rng) {
    const auto n = inst.n();
    if (!kundu_feasible(inst.pi)) throw Error(ErrorKind::not_feasible, "pi does not pack with 1");
    if (inst.mode == Mode::guaranteed &&
        !within_degree_bound(static_cast<std::size_t>(inst.delta_max()), n))
        throw Error(ErrorKind::precondition_violated,
                    "max degree " + std::to_string(inst.delta_max()) + " exceeds n/" +
                        std::to_string(kDegreeBound));

    LabeledGraph g = realize(inst.pi);
    if (n == 0) return KunduRealization{std::move(g), OneFactor{}};
    if (n == 2) return KunduRealization{std::move(g), OneFactor(std::vector<Vertex>{1, 0})};

    const std::uint64_t seed = rng();
    if (dirac_condition(g)) {
        auto cycle = dirac_hamiltonian_cycle(g, seed);
        return KunduRealization{std::move(g), alternate_edges(cycle)};
    }
    if (inst.mode == Mode::guaranteed)
        throw Error(ErrorKind::precondition_violated, "complement fails Dirac's condition");
    if (auto factor = complement_perfect_matching(g))
        return KunduRealization{std::move(g), std::move(*factor)};

    // Other realizations of pi may still leave room for a matching.
    std::vector<Edge> edges = g.edges();
    if (edges.size() >= 2) {
        std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
        std::mt19937_64 walk(seed);
        for (std::size_t attempt = 0; attempt < kRealizationRetries; ++attempt) {
            for (std::size_t step = 0; step < 4 * edges.size(); ++step) {
                const std::size_t i = pick(walk);
                const std::size_t j = pick(walk);
                if (i == j) continue;
                const Edge e = edges[i];
                const Edge f = edges[j];
                const Swap s = walk() % 2 ? Swap::make(e.u, e.v, f.u, f.v, Layer::graph)
                                          : Swap::make(e.u, e.v, f.v, f.u, Layer::graph);
                if (check_swap(g, s)) continue;
                for (const Edge& r : s.removed) g.remove_edge(r);
                for (const Edge& a : s.added) g.add_edge(a);
                edges[i] = s.added[0];
                edges[j] = s.added[1];
            }
            if (auto factor = complement_perfect_matching(g))
                return KunduRealization{std::move(g), std::move(*factor)};
        }
    }
    throw Error(ErrorKind::best_effort_failed, "no tried realization of pi leaves a perfect matching free");
}

KunduRealization random_kundu_realization(const KunduInstance& inst, std::mt19937_64& rng,
                                          std::size_t walk_steps) {
    KunduRealization kr = kundu_realize(inst, rng);
    const auto n = kr.order();
    if (n < 4) return kr;
    std::vector<Edge> green = kr.green.edges();
    if (walk_steps == 0) walk_steps = 20 * (green.size() + n);

    std::bernoulli_distribution coin(0.5);
    for (std::size_t step = 0; step < walk_steps; ++step) {
        const bool use_green = !green.empty() && coin(rng);
        Swap s;
        std::size_t i1 = 0;
        std::size_t i2 = 0;
        if (use_green) {
            std::uniform_int_distribution<std::size_t> pick(0, green.size() - 1);
            i1 = pick(rng);
            i2 = pick(rng);
            if (i1 == i2) continue;
            Edge e = green[i1];
            Edge f = green[i2];
            s = coin(rng) ? Swap::make(e.u, e.v, f.u, f.v, Layer::graph)
                          : Swap::make(e.u, e.v, f.v, f.u, Layer::graph);
        } else {
            std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n) - 1);
            Vertex x = pick(rng);
            Vertex y = pick(rng);
            Vertex mx = kr.factor.mate(x);
            if (x == y || y == mx) continue;
            Vertex my = kr.factor.mate(y);
            s = coin(rng) ? Swap::make(x, mx, y, my, Layer::factor)
                          : Swap::make(x, mx, my, y, Layer::factor);
        }
        if (!is_k_swap(kr, s)) continue;
        apply_k_swap_in_place(kr, s);
        if (use_green) {
            green[i1] = s.added[0];
            green[i2] = s.added[1];
        }
    }
    return kr;
}

OneFactor random_one_factor(std::size_t n, std::mt19937_64& rng) {
    if (n % 2 != 0) throw Error(ErrorKind::invalid_input, "odd vertex count has no perfect matching");
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Vertex> mate(n);
    for (std::size_t i = 0; i + 1 < n; i += 2) {
        mate[static_cast<std::size_t>(perm[i])] = perm[i + 1];
        mate[static_cast<std::size_t>(perm[i + 1])] = perm[i];
    }
    return OneFactor(std::move(mate));
}

}  // namespace kundu
