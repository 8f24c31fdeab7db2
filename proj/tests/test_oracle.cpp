#include <doctest.h>

#include <map>

#include "kundupack/oracle.hpp"
#include "support.hpp"

using namespace kundu;
using namespace kundu::testing;

namespace {

DegreeSequence seq(std::initializer_list<int> v) { return DegreeSequence(std::vector<int>(v)); }

std::size_t double_factorial(std::size_t n) { return n <= 1 ? 1 : n * double_factorial(n - 2); }

}  // namespace

TEST_CASE("enumerate_realizations examples") {
    CHECK(oracle::enumerate_realizations(seq({2, 2, 2})).size() == 1);
    CHECK(oracle::enumerate_realizations(seq({1, 1, 1, 1})).size() == 3);
    auto one = oracle::enumerate_realizations(seq({1, 1, 0, 0}));
    REQUIRE(one.size() == 1);
    CHECK(one[0].edges() == edges_of({{0, 1}}));
    CHECK(oracle::enumerate_realizations(seq({3, 3, 1, 1})).empty());
    CHECK(oracle::enumerate_realizations(seq({})).size() == 1);
    CHECK_THROWS_WITH_AS(oracle::enumerate_realizations(DegreeSequence(std::vector<int>(11, 0))),
                         doctest::Contains("TooLarge"), Error);
}

TEST_CASE("realization counts match a subset scan of all labeled graphs") {
    for (std::size_t n = 1; n <= 5; ++n) {
        std::vector<std::pair<int, int>> pairs;
        for (int u = 0; u < static_cast<int>(n); ++u)
            for (int v = u + 1; v < static_cast<int>(n); ++v) pairs.emplace_back(u, v);
        std::map<std::vector<int>, std::size_t> counts;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
            std::vector<int> deg(n, 0);
            for (std::size_t k = 0; k < pairs.size(); ++k)
                if (mask >> k & 1) {
                    ++deg[static_cast<std::size_t>(pairs[k].first)];
                    ++deg[static_cast<std::size_t>(pairs[k].second)];
                }
            ++counts[deg];
        }
        for_each_sequence(n, static_cast<int>(n) - 1, [&](const std::vector<int>& v) {
            auto it = counts.find(v);
            const std::size_t expected = it == counts.end() ? 0 : it->second;
            CHECK(oracle::enumerate_realizations(DegreeSequence(v)).size() == expected);
        });
    }
}

TEST_CASE("perfect matching counts are double factorials") {
    for (std::size_t n : {0, 2, 4, 6, 8, 10}) {
        auto all = oracle::enumerate_perfect_matchings(n);
        CHECK(all.size() == double_factorial(n - (n > 0 ? 1 : 0)));
    }
    CHECK(oracle::enumerate_perfect_matchings(4).size() == 3);
    CHECK(oracle::enumerate_perfect_matchings(6).size() == 15);
    CHECK(oracle::enumerate_perfect_matchings(10).size() == 945);
    CHECK_THROWS_WITH_AS(oracle::enumerate_perfect_matchings(5), doctest::Contains("InvalidInput"), Error);
    CHECK_THROWS_WITH_AS(oracle::enumerate_perfect_matchings(14), doctest::Contains("TooLarge"), Error);
}

TEST_CASE("enumerate_kundu_realizations examples") {
    auto k = oracle::enumerate_kundu_realizations(seq({1, 1, 1, 1}));
    CHECK(k.size() == 6);
    for (const auto& kr : k) CHECK_FALSE(invariant_violation(kr));
    CHECK(oracle::enumerate_kundu_realizations(seq({0, 0, 0, 0})).size() == 3);
    CHECK(oracle::enumerate_kundu_realizations(seq({3, 3, 3, 3})).empty());
    CHECK(oracle::enumerate_kundu_realizations(seq({0, 0, 0})).empty());
}

TEST_CASE("meta-graph examples") {
    auto zero4 = oracle::report(oracle::kswap_metagraph(seq({0, 0, 0, 0})));
    CHECK(zero4.nodes == 3);
    CHECK(zero4.components == 1);
    CHECK(zero4.edges == 3);

    auto zero6 = oracle::report(oracle::kswap_metagraph(seq({0, 0, 0, 0, 0, 0})));
    CHECK(zero6.nodes == 15);
    CHECK(zero6.components == 1);

    auto ones = oracle::kswap_metagraph(seq({1, 1, 1, 1}));
    auto r = oracle::report(ones);
    CHECK(r.nodes == 6);
    CHECK(r.witnesses.size() == r.components - 1);
    MESSAGE("1^4 meta-graph: " << r.to_string());
    CHECK_THROWS_WITH_AS(oracle::kswap_metagraph(DegreeSequence(std::vector<int>(10, 0))),
                         doctest::Contains("TooLarge"), Error);
}

TEST_CASE("meta-graph adjacency is symmetric, irreflexive and matches single K-swaps") {
    for (auto pi : {seq({1, 1, 1, 1, 0, 0}), seq({1, 1, 1, 1, 1, 1}), seq({2, 2, 1, 1, 0, 0}),
                    seq({2, 2, 2, 2, 2, 2}), seq({1, 1, 0, 0, 0, 0, 0, 0})}) {
        auto mg = oracle::kswap_metagraph(pi);
        CHECK(mg.nodes.size() == oracle::enumerate_kundu_realizations(pi).size());
        for (std::size_t a = 0; a < mg.nodes.size(); ++a) {
            for (std::size_t b : mg.adjacency[a]) {
                CHECK(a != b);
                const auto& back = mg.adjacency[b];
                CHECK(std::binary_search(back.begin(), back.end(), a));
                CHECK(mg.component[a] == mg.component[b]);
            }
        }
        // Brute force: two nodes are adjacent iff some K-swap maps one to the other.
        for (std::size_t a = 0; a < mg.nodes.size(); ++a) {
            std::set<std::size_t> reach;
            for (const Swap& s : oracle::all_k_swaps(mg.nodes[a])) reach.insert(*mg.find(apply_k_swap(mg.nodes[a], s)));
            CHECK(std::vector<std::size_t>(reach.begin(), reach.end()) == mg.adjacency[a]);
        }
    }
}

TEST_CASE("factor coverage examples") {
    CHECK(oracle::factor_coverage(seq({0, 0, 0, 0})).covered);
    auto c = oracle::factor_coverage(seq({1, 1, 0, 0}));
    CHECK_FALSE(c.covered);
    REQUIRE(c.witness);
    CHECK(c.witness->edges() == edges_of({{0, 1}, {2, 3}}));
    CHECK(oracle::factor_coverage(seq({1, 1, 1, 1})).covered);
}

TEST_CASE("find_kundu_realization agrees with the full enumeration") {
    for (std::size_t n : {2, 4, 6})
        for_each_sequence(n, static_cast<int>(n) - 1, [&](const std::vector<int>& v) {
            DegreeSequence pi(v);
            auto first = oracle::find_kundu_realization(pi);
            auto all = oracle::enumerate_kundu_realizations(pi);
            CHECK(first.has_value() == !all.empty());
            if (first) CHECK_FALSE(invariant_violation(*first));
        });
}
