#include "kundupack/navigate.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "kundupack/hamiltonian.hpp"

namespace kundu {

std::string_view to_string(StepKind kind) {
    switch (kind) {
        case StepKind::resolve: return "resolve";
        case StepKind::peel: return "peel";
        case StepKind::club: return "club";
        case StepKind::diamond: return "diamond";
        case StepKind::spade_kill: return "spade-kill";
        case StepKind::spade_shrink: return "spade-shrink";
    }
    return "unknown";
}

NavigationState::NavigationState(KunduRealization start, OneFactor blue, Mode m)
    : kr(std::move(start)), target(std::move(blue)), delta_max(kr.green.max_degree()), mode(m) {
    refresh();
}

void NavigationState::refresh() { cycles = symdiff_cycles(kr.factor, target); }

std::string ProgressReport::to_string() const {
    std::ostringstream os;
    os << "step=" << kundu::to_string(step) << " n=" << n << " L=" << longest << " delta=" << delta
       << " Z=" << z << " F=" << four_cycles << " cycles=" << cycles << " green_chords=" << green_chords;
    return os.str();
}

namespace {

Error precondition(const std::string& what) { return Error(ErrorKind::precondition_violated, what); }

struct Survey {
    std::size_t longest = 0;
    std::size_t total_green = 0;
    std::vector<std::size_t> green;  // per cycle
};

Survey survey(const NavigationState& st) {
    Survey s;
    for (const auto& c : st.cycles) {
        s.longest = std::max(s.longest, c.length());
        s.green.push_back(green_chord_count(c, st.kr.green));
        s.total_green += s.green.back();
    }
    return s;
}

template <class Swaps>
PlannedStep make_step(StepKind kind, const Swaps& swaps) {
    return PlannedStep{kind, std::vector<Swap>(swaps.begin(), swaps.end())};
}

std::optional<PlannedStep> plan(const NavigationState& st, const Survey& sv) {
    const auto& cycles = st.cycles;
    const auto& g = st.kr.green;
    if (cycles.empty()) return PlannedStep{StepKind::resolve, {}};

    if (sv.total_green == 0) {
        PlannedStep step{StepKind::resolve, {}};
        for (const auto& c : cycles) {
            auto swaps = canonical_cycle_swaps(c, g);
            step.swaps.insert(step.swaps.end(), swaps.begin(), swaps.end());
        }
        return step;
    }

    const std::size_t L = sv.longest;
    if (L >= 8) {
        for (std::size_t ci = 0; ci < cycles.size(); ++ci) {
            const auto& c = cycles[ci];
            if (c.length() != L) continue;
            if (auto club = try_process_club(c, g)) return make_step(StepKind::club, std::array{club->swap});
            for (std::size_t di = 0; di < cycles.size(); ++di) {
                if (di == ci || cycles[di].length() < 6) continue;
                if (auto dia = try_process_diamond(c, cycles[di], g, L))
                    return make_step(StepKind::diamond, dia->swaps);
            }
            for (const auto& d4 : cycles) {
                if (d4.length() != 4) continue;
                if (auto sp = try_process_spade(c, d4, g, SpadeGoal::shrink_max))
                    return make_step(StepKind::spade_shrink, sp->swaps);
            }
        }
    } else {
        // Longest cycles have length 6; only they can carry green eligible chords.
        for (std::size_t ci = 0; ci < cycles.size(); ++ci) {
            if (sv.green[ci] == 0) continue;
            if (auto peel = try_peel(cycles[ci], g)) return make_step(StepKind::peel, std::array{peel->swap});
        }
        for (std::size_t ci = 0; ci < cycles.size(); ++ci) {
            if (sv.green[ci] == 0) continue;
            for (std::size_t di = 0; di < cycles.size(); ++di) {
                if (di == ci || cycles[di].length() != 6) continue;
                if (auto dia = try_process_diamond(cycles[ci], cycles[di], g, 6))
                    return make_step(StepKind::diamond, dia->swaps);
            }
            for (const auto& d4 : cycles) {
                if (d4.length() != 4) continue;
                if (auto sp = try_process_spade(cycles[ci], d4, g, SpadeGoal::kill_chord))
                    return make_step(StepKind::spade_kill, sp->swaps);
            }
        }
    }

    // Any single canonical swap still shrinks the symmetric difference.
    std::vector<std::size_t> order(cycles.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return cycles[x].length() > cycles[y].length(); });
    for (std::size_t ci : order) {
        if (cycles[ci].length() < 6) continue;
        if (auto peel = try_peel(cycles[ci], g)) return make_step(StepKind::peel, std::array{peel->swap});
    }
    return std::nullopt;
}

ProgressReport make_report(const NavigationState& st, const Survey& sv) {
    ProgressReport r;
    r.n = st.kr.order();
    r.longest = sv.longest;
    r.delta = st.delta_max;
    r.cycles = st.cycles.size();
    r.green_chords = sv.total_green;
    bool skipped_longest = false;
    for (const auto& c : st.cycles) {
        if (c.length() == 4) ++r.four_cycles;
        if (c.length() >= 6) {
            if (!skipped_longest && c.length() == sv.longest) {
                skipped_longest = true;
                continue;
            }
            r.z += c.length();
        }
    }
    return r;
}

std::string dump(const NavigationState& st) {
    std::ostringstream os;
    os << "n=" << st.kr.order() << " delta=" << st.delta_max << "\ngreen:";
    for (const Edge& e : st.kr.green.edges()) os << ' ' << e.u << '-' << e.v;
    os << "\nred:";
    for (const Edge& e : st.kr.factor.edges()) os << ' ' << e.u << '-' << e.v;
    os << "\nblue:";
    for (const Edge& e : st.target.edges()) os << ' ' << e.u << '-' << e.v;
    for (const auto& c : st.cycles) {
        os << "\ncycle:";
        for (Vertex v : c.vertices) os << ' ' << v;
    }
    return os.str();
}

// Strictly decreasing along every scheduler step.
using Measure = std::tuple<std::size_t, std::vector<std::size_t>, std::size_t>;

Measure measure(const NavigationState& st, const Survey& sv) {
    std::size_t edges = 0;
    std::vector<std::size_t> lengths;
    for (const auto& c : st.cycles) {
        edges += c.length();
        lengths.push_back(c.length());
    }
    std::sort(lengths.begin(), lengths.end(), std::greater<>());
    return {edges, std::move(lengths), sv.total_green};
}

void check_factor_pair(const LabeledGraph& g, const OneFactor& i, const OneFactor& j) {
    if (i.order() != g.order() || j.order() != g.order())
        throw precondition("graph and factors differ in vertex count");
    if (auto bad = invariant_violation(KunduRealization{g, i})) throw precondition("(g, i): " + *bad);
    if (auto bad = invariant_violation(KunduRealization{g, j})) throw precondition("(g, j): " + *bad);
}

void check_bound(std::size_t delta, std::size_t n, Mode mode) {
    if (mode == Mode::guaranteed && !within_degree_bound(delta, n))
        throw precondition("max degree " + std::to_string(delta) + " exceeds n/" +
                           std::to_string(kDegreeBound));
}

SwapTrace concat(SwapTrace first, const SwapTrace& second) {
    first.swaps.insert(first.swaps.end(), second.swaps.begin(), second.swaps.end());
    first.end = second.end;
    return first;
}

}  // namespace

std::optional<PlannedStep> plan_step(const NavigationState& state) { return plan(state, survey(state)); }

ProgressReport assert_progress(const NavigationState& state) {
    const Survey sv = survey(state);
    auto step = plan(state, sv);
    if (!step)
        throw Error(ErrorKind::progress_stalled,
                    "no process applies: " + make_report(state, sv).to_string() + "\n" + dump(state));
    ProgressReport r = make_report(state, sv);
    r.step = step->kind;
    return r;
}

SwapTrace navigate_disjoint_factors(const LabeledGraph& g, const OneFactor& i, const OneFactor& j, Mode mode,
                                    ProgressLog* log) {
    check_factor_pair(g, i, j);
    for (const Edge& e : i.edges())
        if (j.has_edge(e)) throw precondition("factors share edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    check_bound(g.max_degree(), g.order(), mode);

    NavigationState st(KunduRealization{g, i}, j, mode);
    SwapTrace trace{fingerprint(st.kr), {}, {}};
    while (!st.cycles.empty()) {
        const Survey sv = survey(st);
        const Measure before = measure(st, sv);
        auto step = plan(st, sv);
        if (!step) {
            const std::string report = make_report(st, sv).to_string();
            if (mode == Mode::guaranteed)
                throw Error(ErrorKind::progress_stalled, "no process applies: " + report + "\n" + dump(st));
            throw Error(ErrorKind::best_effort_failed, "no process applies: " + report);
        }
        if (log) {
            ProgressReport r = make_report(st, sv);
            r.step = step->kind;
            log->push_back(r);
        }
        for (const Swap& s : step->swaps) {
            apply_k_swap_in_place(st.kr, s);
            st.emitted.push_back(s);
        }
        st.refresh();
        if (!(measure(st, survey(st)) < before))
            throw Error(ErrorKind::progress_stalled,
                        std::string("step ") + std::string(to_string(step->kind)) + " did not make progress\n" +
                            dump(st));
    }
    if (!(st.kr.green == g) || !(st.kr.factor == j))
        throw Error(ErrorKind::trace_mismatch, "navigation ended away from the target factor");
    trace.swaps = std::move(st.emitted);
    trace.end = fingerprint(st.kr);
    return trace;
}

OneFactor find_free_factor(const LabeledGraph& g, const OneFactor& i, const OneFactor& j, Mode mode) {
    if (i.order() != g.order() || j.order() != g.order())
        throw precondition("graph and factors differ in vertex count");
    LabeledGraph blocked = g;
    for (const OneFactor* f : {&i, &j})
        for (const Edge& e : f->edges())
            if (!blocked.has_edge(e)) blocked.add_edge(e);

    if (dirac_condition(blocked)) return alternate_edges(dirac_hamiltonian_cycle(blocked));
    if (mode == Mode::guaranteed)
        throw precondition("complement of g + i + j has minimum degree " +
                           std::to_string(min_complement_degree(blocked)) + " < n/2");
    if (auto m = complement_perfect_matching(blocked)) return std::move(*m);
    throw Error(ErrorKind::best_effort_failed, "no perfect matching avoids g, i and j");
}

SwapTrace navigate_factors(const LabeledGraph& g, const OneFactor& i, const OneFactor& j, Mode mode,
                           ProgressLog* log) {
    check_factor_pair(g, i, j);
    if (i == j) {
        auto fp = fingerprint(KunduRealization{g, i});
        return SwapTrace{fp, {}, fp};
    }
    bool overlap = false;
    for (const Edge& e : i.edges()) overlap = overlap || j.has_edge(e);
    if (!overlap) return navigate_disjoint_factors(g, i, j, mode, log);

    check_bound(g.max_degree(), g.order(), mode);
    const OneFactor middle = find_free_factor(g, i, j, mode);
    return concat(navigate_disjoint_factors(g, i, middle, mode, log),
                  navigate_disjoint_factors(g, middle, j, mode, log));
}

SwapOutResult swap_out(const KunduRealization& kr, Edge eps, std::span<const Edge> forbidden) {
    if (!kr.factor.has_edge(eps)) throw InvalidSwapError(SwapFailure::removed_present);
    auto blocked = [&](Vertex a, Vertex b) {
        const Edge e = Edge::of(a, b);
        return kr.green.has_edge(e) || kr.factor.has_edge(e) ||
               std::find(forbidden.begin(), forbidden.end(), e) != forbidden.end();
    };
    const Vertex x = eps.u;
    const Vertex y = eps.v;
    for (const Edge& sigma : kr.factor.edges()) {
        if (sigma == eps) continue;
        const Vertex u = sigma.u;
        const Vertex v = sigma.v;
        if (!blocked(x, u) && !blocked(y, v)) {
            Swap s = Swap::make(y, x, u, v, Layer::factor);
            return SwapOutResult{s, apply_k_swap(kr, s)};
        }
        if (!blocked(x, v) && !blocked(y, u)) {
            Swap s = Swap::make(y, x, v, u, Layer::factor);
            return SwapOutResult{s, apply_k_swap(kr, s)};
        }
    }
    throw Error(ErrorKind::best_effort_failed,
                "no factor edge can absorb " + std::to_string(x) + "-" + std::to_string(y));
}

SwapTrace navigate_full(const KunduRealization& start, const KunduRealization& goal, Mode mode, ProgressLog* log) {
    if (auto bad = invariant_violation(start)) throw precondition("start: " + *bad);
    if (auto bad = invariant_violation(goal)) throw precondition("goal: " + *bad);
    if (start.order() != goal.order()) throw precondition("start and goal differ in vertex count");
    if (start.green.degree_sequence() != goal.green.degree_sequence())
        throw precondition("start and goal realize different degree sequences");
    check_bound(start.green.max_degree(), start.order(), mode);

    SwapTrace trace{fingerprint(start), {}, fingerprint(goal)};
    if (start == goal) return trace;

    std::vector<Swap> path = havel_hakimi_swaps(start.green);
    auto back = havel_hakimi_swaps(goal.green);
    for (auto it = back.rbegin(); it != back.rend(); ++it) path.push_back(it->reversed());

    KunduRealization state = start;
    for (const Swap& s : path) {
        for (const Edge& e : s.added) {
            if (!state.factor.has_edge(e)) continue;
            SwapOutResult out = swap_out(state, e, s.added);
            trace.swaps.push_back(out.swap);
            state = std::move(out.result);
        }
        apply_k_swap_in_place(state, s);
        trace.swaps.push_back(s);
    }
    if (!(state.green == goal.green))
        throw Error(ErrorKind::trace_mismatch, "graph-layer path did not reach the goal graph");

    SwapTrace tail = navigate_factors(state.green, state.factor, goal.factor, mode, log);
    for (const Swap& s : tail.swaps) apply_k_swap_in_place(state, s);
    if (!(state == goal)) throw Error(ErrorKind::trace_mismatch, "navigation ended away from the goal");
    trace.swaps.insert(trace.swaps.end(), tail.swaps.begin(), tail.swaps.end());
    return trace;
}

Embedding embed_factor(const KunduRealization& kr, const OneFactor& j, Mode mode) {
    if (auto bad = invariant_violation(kr)) throw precondition(*bad);
    if (j.order() != kr.order()) throw precondition("target factor differs in vertex count");
    check_bound(kr.green.max_degree(), kr.order(), mode);

    KunduRealization state = kr;
    SwapTrace trace{fingerprint(kr), {}, {}};
    auto blocked = [&](Vertex a, Vertex b) {
        const Edge e = Edge::of(a, b);
        return state.green.has_edge(e) || state.factor.has_edge(e) || j.has_edge(e);
    };

    for (const Edge& e : j.edges()) {
        if (!state.green.has_edge(e)) continue;
        const Vertex x = e.u;
        const Vertex y = e.v;
        std::optional<Swap> chosen;
        for (const Edge& f : state.green.edges()) {
            if (j.has_edge(f) || f.touches(x) || f.touches(y)) continue;
            if (!blocked(x, f.v) && !blocked(y, f.u)) {
                chosen = Swap::make(y, x, f.v, f.u, Layer::graph);
                break;
            }
            if (!blocked(x, f.u) && !blocked(y, f.v)) {
                chosen = Swap::make(y, x, f.u, f.v, Layer::graph);
                break;
            }
        }
        if (!chosen)
            throw Error(ErrorKind::best_effort_failed,
                        "no green edge can absorb " + std::to_string(x) + "-" + std::to_string(y));
        apply_k_swap_in_place(state, *chosen);
        trace.swaps.push_back(*chosen);
    }
    trace.end = fingerprint(state);

    KunduRealization result{state.green, j};
    if (auto bad = invariant_violation(result))
        throw Error(ErrorKind::trace_mismatch, "embedding broke an invariant: " + *bad);
    return Embedding{std::move(result), std::move(trace)};
}

}  // namespace kundu
