#include <doctest.h>

#include <set>

#include "kundupack/cycles.hpp"
#include "support.hpp"

using namespace kundu;
using namespace kundu::testing;

namespace {

AlternatingCycle cycle(std::initializer_list<Vertex> v) { return AlternatingCycle{std::vector<Vertex>(v)}; }

AlternatingCycle identity_cycle(std::size_t len) { return AlternatingCycle{all_vertices(len)}; }

std::set<Edge> symmetric_difference(const OneFactor& a, const OneFactor& b) {
    std::set<Edge> out;
    for (const Edge& e : a.edges())
        if (!b.has_edge(e)) out.insert(e);
    for (const Edge& e : b.edges())
        if (!a.has_edge(e)) out.insert(e);
    return out;
}

// Drops every green eligible chord of every cycle.
void clear_green_chords(LabeledGraph& g, const std::vector<AlternatingCycle>& cycles) {
    for (const auto& c : cycles)
        for (const Chord& ch : eligible_chords(c, g))
            if (ch.green) g.remove_edge(ch.pair);
}

}  // namespace

TEST_CASE("symmetric difference decomposes into vertex-disjoint alternating cycles") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = 2 * std::uniform_int_distribution<std::size_t>(1, 20)(rng);
        OneFactor red = random_one_factor(n, rng);
        OneFactor blue = trial % 7 == 0 ? red : random_one_factor(n, rng);
        auto cycles = symdiff_cycles(red, blue);

        std::set<Edge> covered;
        std::set<Vertex> seen;
        for (const auto& c : cycles) {
            REQUIRE(c.length() >= 4);
            REQUIRE(c.length() % 2 == 0);
            for (Vertex v : c.vertices) CHECK(seen.insert(v).second);
            for (std::size_t k = 0; k < c.red_count(); ++k) {
                CHECK(red.has_edge(c.red(k)));
                CHECK_FALSE(blue.has_edge(c.red(k)));
                CHECK(blue.has_edge(c.blue(k)));
                covered.insert(c.red(k));
                covered.insert(c.blue(k));
            }
        }
        CHECK(covered == symmetric_difference(red, blue));
    }
}

TEST_CASE("canonical form ignores rotation by red edges and direction") {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t len = 2 * std::uniform_int_distribution<std::size_t>(2, 10)(rng);
        AlternatingCycle c = random_cycle_state(len, {len}, rng).cycles[0];
        AlternatingCycle rotated = c;
        const std::size_t shift = 2 * std::uniform_int_distribution<std::size_t>(0, len / 2 - 1)(rng);
        std::rotate(rotated.vertices.begin(), rotated.vertices.begin() + static_cast<std::ptrdiff_t>(shift),
                    rotated.vertices.end());
        CHECK(rotated.canonical() == c.canonical());
        CHECK(c.reversed().canonical() == c.canonical());
        // The reversal keeps red edges red.
        for (std::size_t k = 0; k < c.red_count(); ++k) {
            bool found = false;
            for (std::size_t m = 0; m < c.red_count(); ++m) found = found || c.reversed().red(m) == c.red(k);
            CHECK(found);
        }
    }
    CHECK(cycle({0, 1, 2, 3}).reversed() == cycle({1, 0, 3, 2}));
}

TEST_CASE("eligible chords are exactly the odd-distance non-edges") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t len = 2 * std::uniform_int_distribution<std::size_t>(2, 12)(rng);
        CycleState st = random_cycle_state(len + 4, {len}, rng);
        LabeledGraph g = random_green(st, all_vertices(st.n), 4, 3 * len, rng);
        const auto& c = st.cycles[0];

        std::set<std::pair<Edge, bool>> expected;
        for (std::size_t i = 0; i < len; ++i)
            for (std::size_t j = i + 1; j < len; ++j) {
                const std::size_t d = cyclic_distance(i, j, len);
                if (d % 2 == 1 && d > 1) {
                    const Edge e = Edge::of(c.vertices[i], c.vertices[j]);
                    expected.emplace(e, g.has_edge(e));
                }
            }
        std::set<std::pair<Edge, bool>> actual;
        for (const Chord& ch : eligible_chords(c, g)) actual.emplace(ch.pair, ch.green);
        CHECK(actual == expected);
    }
    CHECK(eligible_chords(identity_cycle(4), LabeledGraph(4)).empty());
    CHECK(eligible_chords(identity_cycle(6), LabeledGraph(6)).size() == 3);
}

TEST_CASE("canonical resolution turns every red edge blue") {
    std::mt19937_64 rng(24);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t len = 2 * std::uniform_int_distribution<std::size_t>(2, 12)(rng);
        const std::size_t other = 2 * std::uniform_int_distribution<std::size_t>(0, 4)(rng);
        std::vector<std::size_t> lengths{len};
        if (other >= 4) lengths.push_back(other);
        CycleState st = random_cycle_state(len + other + 2, lengths, rng);
        LabeledGraph g = random_green(st, all_vertices(st.n), 5, 4 * len, rng);
        clear_green_chords(g, st.cycles);

        auto swaps = canonical_cycle_swaps(st.cycles[0], g);
        CHECK(swaps.size() == len / 2 - 1);
        std::vector<AlternatingCycle> rest(st.cycles.begin() + 1, st.cycles.end());
        CHECK(replay_mismatch(st, g, swaps, rest).empty());
    }
}

TEST_CASE("canonical resolution refuses a cycle with a green eligible chord") {
    AlternatingCycle c = identity_cycle(6);
    CycleState st = make_cycle_state(6, {c});
    LabeledGraph g = graph_of(6, {{0, 3}});
    CHECK_THROWS_WITH_AS(canonical_cycle_swaps(c, g), doctest::Contains("PreconditionViolated"), Error);
    // A single peel still works through another chord.
    auto peel = try_peel(c, g);
    REQUIRE(peel);
    std::array<Swap, 1> swaps{peel->swap};
    CHECK(replay_mismatch(st, g, swaps, {peel->rest}).empty());
    CHECK(peel->rest.length() == 4);
}

TEST_CASE("peeling a 4-cycle leaves nothing") {
    AlternatingCycle c = identity_cycle(4);
    CycleState st = make_cycle_state(4, {c});
    auto peel = try_peel(c, LabeledGraph(4));
    REQUIRE(peel);
    CHECK(peel->rest.length() == 0);
    std::array<Swap, 1> swaps{peel->swap};
    CHECK(replay_mismatch(st, LabeledGraph(4), swaps, {}).empty());
}

TEST_CASE("club split") {
    SUBCASE("6-cycles have no non-consecutive red pair") {
        CHECK_FALSE(try_process_club(identity_cycle(6), LabeledGraph(6)));
    }
    SUBCASE("8-cycle splits into two 4-cycles") {
        AlternatingCycle c = identity_cycle(8);
        auto res = try_process_club(c, LabeledGraph(8));
        REQUIRE(res);
        CHECK(res->cycles[0].length() + res->cycles[1].length() == 8);
        std::array<Swap, 1> swaps{res->swap};
        CHECK(replay_mismatch(make_cycle_state(8, {c}), LabeledGraph(8), swaps,
                              {res->cycles[0], res->cycles[1]})
                  .empty());
    }
    SUBCASE("12-cycle with max green degree 1") {
        AlternatingCycle c = identity_cycle(12);
        LabeledGraph g = graph_of(12, {{0, 3}, {1, 4}, {2, 5}, {6, 9}, {7, 10}, {8, 11}});
        CHECK(g.max_degree() == 1);
        CHECK(club_guaranteed(12, 1));
        CHECK(try_process_club(c, g));
    }
    CHECK_FALSE(club_guaranteed(10, 1));
    CHECK(club_guaranteed(7, 0));
}

TEST_CASE("club split blocked by green chords") {
    // Every non-consecutive red pair of an 8-cycle is (0,2) or (1,3); block both.
    AlternatingCycle c = identity_cycle(8);
    LabeledGraph g(8);
    // p=0, q=2: alpha = (c1, c4); p=1, q=3: alpha = (c3, c6)
    g.add_edge(Edge{1, 4});
    g.add_edge(Edge{3, 6});
    CHECK_FALSE(try_process_club(c, g));
}

TEST_CASE("diamond recombination") {
    AlternatingCycle c{{0, 1, 2, 3, 4, 5}};
    AlternatingCycle d{{6, 7, 8, 9, 10, 11}};
    CycleState st = make_cycle_state(12, {c, d});

    SUBCASE("free pairings") {
        auto res = try_process_diamond(c, d, LabeledGraph(12));
        REQUIRE(res);
        std::size_t total = 0;
        for (const auto& r : res->cycles) total += r.length();
        CHECK(total == 12);
        CHECK(replay_mismatch(st, LabeledGraph(12), res->swaps, {res->cycles.begin(), res->cycles.end()}).empty());
    }
    SUBCASE("length limit") {
        auto res = try_process_diamond(c, d, LabeledGraph(12), 6);
        REQUIRE(res);
        for (const auto& r : res->cycles) CHECK(r.length() == 4);
    }
    SUBCASE("complete green between the cycles blocks everything") {
        LabeledGraph g(12);
        for (Vertex x : c.vertices)
            for (Vertex y : d.vertices) g.add_edge(Edge::of(x, y));
        CHECK_FALSE(try_process_diamond(c, d, g));
        CHECK(green_edges_between(c, d, g) == 36);
    }
    CHECK(diamond_green_lower_bound(6, 6) == 2);
    CHECK(diamond_green_lower_bound(8, 6) == 3);
    CHECK(diamond_green_lower_bound(6, 8) == 3);
    CHECK(diamond_green_lower_bound(12, 10) == 9);
}

TEST_CASE("diamond results on random states replay exactly") {
    std::mt19937_64 rng(25);
    std::size_t successes = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t lc = 2 * std::uniform_int_distribution<std::size_t>(3, 8)(rng);
        const std::size_t ld = 2 * std::uniform_int_distribution<std::size_t>(3, 8)(rng);
        CycleState st = random_cycle_state(lc + ld, {lc, ld}, rng);
        LabeledGraph g = random_green(st, all_vertices(st.n), 6, 8 * (lc + ld), rng);
        auto res = try_process_diamond(st.cycles[0], st.cycles[1], g, lc);
        if (!res) continue;
        ++successes;
        for (const auto& r : res->cycles) CHECK(r.length() < lc);
        CHECK(replay_mismatch(st, g, res->swaps, {res->cycles.begin(), res->cycles.end()}).empty());
    }
    CHECK(successes > 100);
}

TEST_CASE("spade merge and split") {
    SUBCASE("kill a green chord of a 6-cycle") {
        AlternatingCycle c{{0, 1, 2, 3, 4, 5}};
        AlternatingCycle d4{{6, 7, 8, 9}};
        CycleState st = make_cycle_state(10, {c, d4});
        LabeledGraph g = graph_of(10, {{0, 3}, {1, 4}});
        REQUIRE(green_chord_count(c, g) == 2);
        auto res = try_process_spade(c, d4, g, SpadeGoal::kill_chord);
        REQUIRE(res);
        std::vector<AlternatingCycle> out{res->cycles.begin(), res->cycles.end()};
        CHECK(replay_mismatch(st, g, res->swaps, out).empty());
        CHECK(total_green_chords(out, g) < 2);
    }
    SUBCASE("shrink an 8-cycle") {
        AlternatingCycle c = identity_cycle(8);
        AlternatingCycle d4{{8, 9, 10, 11}};
        CycleState st = make_cycle_state(12, {c, d4});
        auto res = try_process_spade(c, d4, LabeledGraph(12), SpadeGoal::shrink_max);
        REQUIRE(res);
        for (const auto& r : res->cycles) CHECK(r.length() < 8);
        CHECK(replay_mismatch(st, LabeledGraph(12), res->swaps, {res->cycles.begin(), res->cycles.end()}).empty());
    }
    SUBCASE("no chord to kill") {
        AlternatingCycle c{{0, 1, 2, 3, 4, 5}};
        AlternatingCycle d4{{6, 7, 8, 9}};
        CHECK_FALSE(try_process_spade(c, d4, LabeledGraph(10), SpadeGoal::kill_chord));
    }
}
