// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "kundupack/navigate.hpp"
#include "kundupack/oracle.hpp"
#include "support.hpp"

using namespace kundu;
using namespace kundu::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
    bool pass = false;
    std::string detail;
};

int failures = 0;

void report(const std::string& name, const Outcome& o) {
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail << std::endl;
    if (!o.pass) ++failures;
}

std::string format_seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3fs", s);
    return buf;
}

// Instances shared by the navigation and embedding pipelines.
constexpr std::size_t kPipelineN = 48;
constexpr std::size_t kPipelineInstances = 100;
constexpr double kNavigateLimit = 5.0;
constexpr double kEmbedLimit = 2.0;

struct PipelineInstance {
    DegreeSequence pi;
    KunduRealization start;
    KunduRealization goal;
    OneFactor j;
};

PipelineInstance make_instance(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    DegreeSequence pi = random_feasible_sequence(kPipelineN, 2, rng);
    KunduInstance inst{pi, Mode::guaranteed};
    std::mt19937_64 rng_a(seed * 2 + 1000);
    std::mt19937_64 rng_b(seed * 2 + 1001);
    KunduRealization start = random_kundu_realization(inst, rng_a);
    KunduRealization goal = random_kundu_realization(inst, rng_b);
    OneFactor j = random_one_factor(kPipelineN, rng);
    return PipelineInstance{pi, start, goal, j};
}

std::size_t stalls = 0;
std::map<StepKind, std::size_t> step_counts;

Outcome navigate_pipeline(const std::vector<PipelineInstance>& instances) {
    std::size_t ok = 0;
    double worst = 0;
    std::string first_failure;
    for (std::size_t i = 0; i < instances.size(); ++i) {
        const auto& in = instances[i];
        auto fail = [&](const std::string& why) {
            if (first_failure.empty()) first_failure = "instance " + std::to_string(i) + ": " + why;
        };
        const auto t0 = Clock::now();
        try {
            ProgressLog log;
            SwapTrace trace = navigate_full(in.start, in.goal, Mode::guaranteed, &log);
            const double t = seconds_since(t0);
            worst = std::max(worst, t);
            for (const auto& r : log) ++step_counts[r.step];

            KunduRealization end = verify_trace(in.start, trace);
            KunduRealization cur = in.start;
            bool prefixes_ok = true;
            for (const Swap& s : trace.swaps) {
                cur = apply_k_swap(cur, s);
                if (auto bad = invariant_violation(cur)) {
                    fail("intermediate state: " + *bad);
                    prefixes_ok = false;
                    break;
                }
                if (cur.green.degree_sequence() != in.pi.values()) {
                    fail("green degrees changed");
                    prefixes_ok = false;
                    break;
                }
            }
            if (!prefixes_ok) continue;
            if (!(end == in.goal)) {
                fail("endpoint differs from goal");
                continue;
            }
            if (t >= kNavigateLimit) {
                fail("took " + format_seconds(t));
                continue;
            }
            ++ok;
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::progress_stalled) ++stalls;
            fail(e.what());
        }
    }
    Outcome o;
    o.pass = ok == instances.size();
    o.detail = std::to_string(ok) + "/" + std::to_string(instances.size()) +
               " traces verified and reached the goal, n=" + std::to_string(kPipelineN) +
               ", max " + format_seconds(worst) + " (limit " + format_seconds(kNavigateLimit) + ")";
    if (!first_failure.empty()) o.detail += "; first failure: " + first_failure;
    return o;
}

Outcome embed_pipeline(const std::vector<PipelineInstance>& instances) {
    std::size_t ok = 0;
    double worst = 0;
    std::size_t swaps = 0;
    std::string first_failure;
    for (std::size_t i = 0; i < instances.size(); ++i) {
        const auto& in = instances[i];
        auto fail = [&](const std::string& why) {
            if (first_failure.empty()) first_failure = "instance " + std::to_string(i) + ": " + why;
        };
        const auto t0 = Clock::now();
        try {
            Embedding emb = embed_factor(in.start, in.j, Mode::guaranteed);
            const double t = seconds_since(t0);
            worst = std::max(worst, t);
            swaps += emb.trace.swaps.size();
            const KunduRealization end = verify_trace(in.start, emb.trace);
            const LabeledGraph& g = emb.realization.green;
            std::size_t shared = 0;
            for (const Edge& e : in.j.edges()) shared += g.has_edge(e) ? 1 : 0;
            if (g.degree_sequence() != in.pi.values()) fail("degree sequence changed");
            else if (shared != 0) fail(std::to_string(shared) + " edges shared with J");
            else if (!(end.green == g)) fail("trace does not end at the returned graph");
            else if (!(emb.realization.factor == in.j)) fail("result does not display J");
            else if (t >= kEmbedLimit) fail("took " + format_seconds(t));
            else ++ok;
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::progress_stalled) ++stalls;
            fail(e.what());
        }
    }
    Outcome o;
    o.pass = ok == instances.size();
    o.detail = std::to_string(ok) + "/" + std::to_string(instances.size()) +
               " embeddings avoid J with degrees intact, " + std::to_string(swaps) + " swaps total, max " +
               format_seconds(worst) + " (limit " + format_seconds(kEmbedLimit) + ")";
    if (!first_failure.empty()) o.detail += "; first failure: " + first_failure;
    return o;
}

std::string describe(const CycleState& st, const LabeledGraph& g) {
    std::ostringstream os;
    for (const auto& c : st.cycles) {
        os << " cycle:";
        for (Vertex v : c.vertices) os << ' ' << v;
    }
    os << " green:";
    for (const Edge& e : g.edges()) os << ' ' << e.u << '-' << e.v;
    return os.str();
}

// Spends the degree budget on the chords a split would add, one candidate
// red pair at a time.
LabeledGraph club_blocker(const AlternatingCycle& c, std::size_t delta, std::mt19937_64& rng) {
    const std::size_t h = c.red_count();
    LabeledGraph g(c.length());
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t p = 0; p < h; ++p)
        for (std::size_t q = p + 2; q < h && q - p <= h - 2; ++q) pairs.emplace_back(p, q);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    auto try_add = [&](Vertex x, Vertex y) {
        if (g.has_edge(x, y) || g.degree(x) >= delta || g.degree(y) >= delta) return false;
        g.add_edge(Edge::of(x, y));
        return true;
    };
    for (auto [p, q] : pairs) {
        const Vertex a0 = c.at(2 * p + 1), a1 = c.at(2 * q);
        const Vertex b0 = c.at(2 * q + 1), b1 = c.at(2 * p);
        if (g.has_edge(a0, a1) || g.has_edge(b0, b1)) continue;
        if (!try_add(a0, a1)) try_add(b0, b1);
    }
    return g;
}

Outcome club_guarantee() {
    constexpr std::size_t kStates = 500;
    std::mt19937_64 rng(7);
    std::size_t ok = 0;
    std::string first_failure;
    for (std::size_t i = 0; i < kStates; ++i) {
        const std::size_t delta = std::uniform_int_distribution<std::size_t>(0, 5)(rng);
        const std::size_t min_len = 4 * delta + 8;
        const std::size_t L = min_len + 2 * std::uniform_int_distribution<std::size_t>(0, 10)(rng);
        CycleState st = random_cycle_state(L, {L}, rng);
        LabeledGraph g = i % 2 == 0 ? random_green(st, st.cycles[0].vertices, delta, 40 * L, rng)
                                    : club_blocker(st.cycles[0], delta, rng);
        if (!club_guaranteed(L, g.max_degree())) {
            first_failure = "generator produced an unguarded state";
            continue;
        }
        if (try_process_club(st.cycles[0], g)) {
            ++ok;
        } else if (first_failure.empty()) {
            first_failure = "L=" + std::to_string(L) + " delta=" + std::to_string(g.max_degree()) + describe(st, g);
        }
    }
    Outcome o;
    o.pass = ok == kStates;
    o.detail = std::to_string(ok) + "/" + std::to_string(kStates) + " guarded states admit the split";
    if (!first_failure.empty()) o.detail += "; first failure: " + first_failure;
    return o;
}

bool diamond_blocked(const AlternatingCycle& c, const AlternatingCycle& d, const LabeledGraph& g) {
    return !try_process_diamond(c, d, g) && !try_process_diamond(d, c, g);
}

Outcome diamond_bound() {
    constexpr std::size_t kStates = 500;
    std::mt19937_64 rng(11);
    std::size_t collected = 0;
    std::size_t violations = 0;
    long long min_slack = -1;
    std::string dump;
    std::size_t guard = 0;
    while (collected < kStates && guard++ < 200000) {
        const std::size_t lc = 2 * std::uniform_int_distribution<std::size_t>(3, 6)(rng);
        const std::size_t ld = 2 * std::uniform_int_distribution<std::size_t>(3, 6)(rng);
        CycleState st = random_cycle_state(lc + ld, {lc, ld}, rng);
        const auto& c = st.cycles[0];
        const auto& d = st.cycles[1];
        std::vector<Edge> between;
        for (Vertex x : c.vertices)
            for (Vertex y : d.vertices) between.push_back(Edge::of(x, y));
        std::shuffle(between.begin(), between.end(), rng);

        LabeledGraph g(st.n);
        if (collected % 2 == 0) {
            // Minimal blocking sets: start complete, drop edges while still blocked.
            for (const Edge& e : between) g.add_edge(e);
            for (const Edge& e : between) {
                g.remove_edge(e);
                if (!diamond_blocked(c, d, g)) g.add_edge(e);
            }
        } else {
            const double p = std::uniform_real_distribution<double>(0.4, 1.0)(rng);
            std::bernoulli_distribution keep(p);
            for (const Edge& e : between)
                if (keep(rng)) g.add_edge(e);
            if (!diamond_blocked(c, d, g)) continue;
        }
        ++collected;
        const std::size_t count = green_edges_between(c, d, g);
        const std::size_t bound = std::max(diamond_green_lower_bound(lc, ld), diamond_green_lower_bound(ld, lc));
        const long long slack = static_cast<long long>(count) - static_cast<long long>(bound);
        if (min_slack < 0 || slack < min_slack) min_slack = slack;
        if (count < bound) {
            ++violations;
            if (dump.empty())
                dump = "lc=" + std::to_string(lc) + " ld=" + std::to_string(ld) + " green_between=" +
                       std::to_string(count) + " bound=" + std::to_string(bound) + describe(st, g);
        }
    }
    Outcome o;
    o.pass = collected == kStates && violations == 0;
    o.detail = std::to_string(collected) + " blocked two-cycle states, " + std::to_string(violations) +
               " below the lower bound, min slack " + std::to_string(min_slack);
    if (!dump.empty()) o.detail += "; lower-bound violation (possible gap in the counting argument): " + dump;
    return o;
}

std::size_t edge_total(const std::vector<AlternatingCycle>& cycles) {
    std::size_t t = 0;
    for (const auto& c : cycles) t += c.length();
    return t;
}

std::size_t count_length(const std::vector<AlternatingCycle>& cycles, std::size_t len) {
    return static_cast<std::size_t>(
        std::count_if(cycles.begin(), cycles.end(), [&](const AlternatingCycle& c) { return c.length() == len; }));
}

struct FuzzTally {
    std::size_t successes = 0;
    std::size_t attempts = 0;
    std::size_t failures = 0;
    std::string first_failure;
};

constexpr std::size_t kFuzzTarget = 10000;
constexpr std::size_t kFuzzAttemptCap = 2000000;

template <class Try>
void fuzz(FuzzTally& tally, Try&& attempt) {
    while (tally.successes < kFuzzTarget && tally.attempts < kFuzzAttemptCap) {
        ++tally.attempts;
        std::string err;
        const bool applied = attempt(err);
        if (!applied) continue;
        ++tally.successes;
        if (!err.empty()) {
            ++tally.failures;
            if (tally.first_failure.empty()) tally.first_failure = err;
        }
    }
}

std::size_t even_between(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    return 2 * std::uniform_int_distribution<std::size_t>(lo / 2, hi / 2)(rng);
}

Outcome process_postconditions() {
    std::mt19937_64 rng(13);
    FuzzTally club;
    FuzzTally diamond;
    FuzzTally kill;
    FuzzTally shrink;

    fuzz(club, [&](std::string& err) {
        const std::size_t L = even_between(rng, 8, 30);
        const std::size_t extra = even_between(rng, 0, 8);
        std::vector<std::size_t> lengths{L};
        if (extra >= 4) lengths.push_back(extra);
        CycleState st = random_cycle_state(L + extra + 2, lengths, rng);
        const std::size_t delta = std::uniform_int_distribution<std::size_t>(1, L / 2)(rng);
        LabeledGraph g = random_green(st, all_vertices(st.n), delta, std::uniform_int_distribution<std::size_t>(0, 6 * L)(rng), rng);
        auto res = try_process_club(st.cycles[0], g);
        if (!res) return false;
        std::vector<AlternatingCycle> predicted(st.cycles.begin() + 1, st.cycles.end());
        predicted.insert(predicted.end(), res->cycles.begin(), res->cycles.end());
        std::array<Swap, 1> swaps{res->swap};
        err = replay_mismatch(st, g, swaps, predicted);
        if (err.empty() && edge_total(predicted) != edge_total(st.cycles)) err = "edge total changed";
        return true;
    });

    fuzz(diamond, [&](std::string& err) {
        const std::size_t lc = even_between(rng, 6, 20);
        const std::size_t ld = even_between(rng, 6, 20);
        CycleState st = random_cycle_state(lc + ld + 4, {lc, ld, 4}, rng);
        const std::size_t delta = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
        LabeledGraph g = random_green(st, all_vertices(st.n), delta,
                                      std::uniform_int_distribution<std::size_t>(0, 10 * (lc + ld))(rng), rng);
        auto res = try_process_diamond(st.cycles[0], st.cycles[1], g);
        if (!res) return false;
        std::vector<AlternatingCycle> predicted{st.cycles[2]};
        predicted.insert(predicted.end(), res->cycles.begin(), res->cycles.end());
        err = replay_mismatch(st, g, res->swaps, predicted);
        if (err.empty() && edge_total(predicted) != edge_total(st.cycles)) err = "edge total changed";
        return true;
    });

    auto spade = [&](FuzzTally& tally, SpadeGoal goal, std::size_t min_len) {
        fuzz(tally, [&](std::string& err) {
            const std::size_t L = even_between(rng, min_len, 18);
            const std::size_t other = even_between(rng, 0, L);
            std::vector<std::size_t> lengths{L, 4};
            if (other >= 4) lengths.push_back(other);
            CycleState st = random_cycle_state(L + 4 + other + 2, lengths, rng);
            const std::size_t delta = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
            LabeledGraph g = random_green(st, all_vertices(st.n), delta,
                                          std::uniform_int_distribution<std::size_t>(0, 8 * L)(rng), rng);
            auto res = try_process_spade(st.cycles[0], st.cycles[1], g, goal);
            if (!res) return false;
            std::vector<AlternatingCycle> predicted(st.cycles.begin() + 2, st.cycles.end());
            predicted.insert(predicted.end(), res->cycles.begin(), res->cycles.end());
            err = replay_mismatch(st, g, res->swaps, predicted);
            if (!err.empty()) return true;
            if (goal == SpadeGoal::kill_chord) {
                if (total_green_chords(predicted, g) >= total_green_chords(st.cycles, g))
                    err = "green eligible chords did not decrease";
            } else {
                std::size_t longest = 0;
                for (const auto& c : st.cycles) longest = std::max(longest, c.length());
                if (count_length(predicted, longest) >= count_length(st.cycles, longest))
                    err = "max-length cycle count did not decrease";
            }
            return true;
        });
    };
    spade(kill, SpadeGoal::kill_chord, 6);
    spade(shrink, SpadeGoal::shrink_max, 8);

    Outcome o;
    o.pass = true;
    std::ostringstream os;
    for (auto [name, t] : {std::pair{"club", &club}, {"diamond", &diamond}, {"spade-kill", &kill},
                           {"spade-shrink", &shrink}}) {
        const bool ok = t->successes == kFuzzTarget && t->failures == 0;
        o.pass = o.pass && ok;
        os << name << '=' << t->successes - t->failures << '/' << t->successes << " (attempts " << t->attempts
           << ") ";
        if (!t->first_failure.empty()) os << "[" << name << " failure: " << t->first_failure << "] ";
    }
    o.detail = os.str() + "predictions match replay, green unchanged, counters decrease";
    return o;
}

Outcome oracle_equivalence() {
    const auto t0 = Clock::now();
    std::size_t checked = 0;
    std::size_t mismatches = 0;
    std::string first;
    for (std::size_t n : {4, 6}) {
        for_each_sequence(n, 3, [&](const std::vector<int>& v) {
            DegreeSequence pi(v);
            const bool fast = kundu_feasible(pi);
            const bool exhaustive = !oracle::enumerate_kundu_realizations(pi).empty();
            ++checked;
            if (fast != exhaustive) {
                ++mismatches;
                if (first.empty()) first = "mismatch at (" + std::to_string(v[0]) + ",...) n=" + std::to_string(n);
            }
        });
    }
    const std::size_t m4 = oracle::enumerate_perfect_matchings(4).size();
    const std::size_t m6 = oracle::enumerate_perfect_matchings(6).size();
    const auto cov = oracle::factor_coverage(DegreeSequence({1, 1, 0, 0}));
    const bool cov_ok = !cov.covered && cov.witness && cov.witness->edges() == edges_of({{0, 1}, {2, 3}});
    const std::size_t k1111 = oracle::enumerate_kundu_realizations(DegreeSequence({1, 1, 1, 1})).size();
    const double t = seconds_since(t0);

    Outcome o;
    o.pass = mismatches == 0 && m4 == 3 && m6 == 15 && cov_ok && k1111 == 6 && t < 60.0;
    std::ostringstream os;
    os << checked << " sequences, " << mismatches << " mismatches; matchings n=4: " << m4 << ", n=6: " << m6
       << "; coverage(1,1,0,0) covered=" << (cov.covered ? "true" : "false")
       << (cov_ok ? " witness {01,23}" : " wrong witness") << "; |kundu(1,1,1,1)|=" << k1111 << "; "
       << format_seconds(t) << " (limit 60s)";
    if (!first.empty()) os << "; " << first;
    o.detail = os.str();
    return o;
}

Outcome kswap_soundness() {
    constexpr std::size_t kProposals = 100000;
    constexpr std::size_t kPerState = 1000;
    std::mt19937_64 rng(17);
    std::size_t accepted = 0;
    std::size_t disagreements = 0;
    std::size_t broken = 0;
    std::string first;

    KunduRealization kr;
    for (std::size_t p = 0; p < kProposals; ++p) {
        if (p % kPerState == 0) {
            for (;;) {
                const std::size_t n = even_between(rng, 4, 20);
                const int top = std::uniform_int_distribution<int>(0, 4)(rng);
                DegreeSequence pi = random_feasible_sequence(n, std::min<int>(top, static_cast<int>(n) - 2), rng);
                try {
                    kr = random_kundu_realization(KunduInstance{pi, Mode::best_effort}, rng);
                    break;
                } catch (const Error&) {
                }
            }
        }
        const auto n = static_cast<Vertex>(kr.order());
        std::uniform_int_distribution<Vertex> vertex(0, n - 1);
        std::uniform_int_distribution<int> kind(0, 4);
        const Layer layer = std::bernoulli_distribution(0.5)(rng) ? Layer::graph : Layer::factor;
        const auto green = kr.green.edges();
        const auto red = kr.factor.edges();
        auto random_edge = [&](const std::vector<Edge>& from) {
            if (from.empty()) return Edge::of(vertex(rng), vertex(rng));
            return from[std::uniform_int_distribution<std::size_t>(0, from.size() - 1)(rng)];
        };
        Swap s;
        Edge e;
        Edge f;
        switch (kind(rng)) {
            case 0:
                s = Swap::make(vertex(rng), vertex(rng), vertex(rng), vertex(rng), layer);
                break;
            case 1:
                e = random_edge(green);
                f = random_edge(green);
                break;
            case 2:
                e = random_edge(red);
                f = random_edge(red);
                break;
            case 3:
                e = random_edge(green);
                f = random_edge(red);
                break;
            default:
                s = Swap{{Edge::of(vertex(rng), vertex(rng)), Edge::of(vertex(rng), vertex(rng))},
                         {Edge::of(vertex(rng), vertex(rng)), Edge::of(vertex(rng), vertex(rng))},
                         layer};
                break;
        }
        if (e.u != e.v || f.u != f.v) {
            const bool flip = std::bernoulli_distribution(0.5)(rng);
            s = flip ? Swap::make(e.u, e.v, f.v, f.u, layer) : Swap::make(e.u, e.v, f.u, f.v, layer);
        }

        const bool predicted = is_k_swap(kr, s);
        bool applied = false;
        KunduRealization next;
        try {
            next = apply_k_swap(kr, s);
            applied = true;
        } catch (const InvalidSwapError&) {
        }
        if (applied != predicted) {
            ++disagreements;
            if (first.empty()) first = "is_k_swap and apply_k_swap disagree at proposal " + std::to_string(p);
            continue;
        }
        if (!applied) continue;
        ++accepted;
        bool ok = !invariant_violation(next).has_value() &&
                  next.green.degree_sequence() == kr.green.degree_sequence();
        if (s.layer == Layer::graph) ok = ok && next.factor == kr.factor;
        else ok = ok && next.green == kr.green;
        if (!ok) {
            ++broken;
            if (first.empty()) first = "invariant broken at proposal " + std::to_string(p);
        }
        if (std::bernoulli_distribution(0.5)(rng)) kr = std::move(next);
    }
    Outcome o;
    o.pass = disagreements == 0 && broken == 0;
    o.detail = std::to_string(kProposals) + " proposals, " + std::to_string(accepted) + " legal, " +
               std::to_string(disagreements) + " disagreements, " + std::to_string(broken) + " invariant breaks";
    if (!first.empty()) o.detail += "; " + first;
    return o;
}

}  // namespace

int main() {
    std::vector<PipelineInstance> instances;
    for (std::uint64_t seed = 0; seed < kPipelineInstances; ++seed) instances.push_back(make_instance(seed));

    report("navigate_full_pipeline", navigate_pipeline(instances));
    report("embed_factor_pipeline", embed_pipeline(instances));
    report("club_guarantee", club_guarantee());
    report("diamond_lower_bound", diamond_bound());
    report("process_postconditions", process_postconditions());
    report("oracle_equivalence", oracle_equivalence());
    report("kswap_soundness", kswap_soundness());

    std::ostringstream steps;
    for (auto [kind, count] : step_counts) steps << ' ' << to_string(kind) << '=' << count;
    report("no_progress_stall", Outcome{stalls == 0, std::to_string(stalls) + " stalls across both pipelines; steps:" +
                                                        steps.str()});

    std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << std::endl;
    return failures == 0 ? 0 : 1;
}
