#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kundupack/degseq.hpp"
#include "kundupack/graph.hpp"

namespace kundu::oracle {

inline constexpr std::size_t kRealizationCap = 10;
inline constexpr std::size_t kMatchingCap = 12;
inline constexpr std::size_t kMetagraphCap = 8;

/// All labeled realizations of pi, sorted by edge list. Throws Error(too_large).
std::vector<LabeledGraph> enumerate_realizations(const DegreeSequence& pi,
                                                 std::size_t cap = kRealizationCap);

/// All (n-1)!! perfect matchings of K_n. Throws Error(too_large) or
/// Error(invalid_input) for odd n.
std::vector<OneFactor> enumerate_perfect_matchings(std::size_t n, std::size_t cap = kMatchingCap);

/// All edge-disjoint (G, I) with G realizing pi.
std::vector<KunduRealization> enumerate_kundu_realizations(const DegreeSequence& pi,
                                                           std::size_t cap = kRealizationCap);

/// First Kundu realization in enumeration order, stopping early.
std::optional<KunduRealization> find_kundu_realization(const DegreeSequence& pi,
                                                       std::size_t cap = kRealizationCap);

/// Nodes are Kundu realizations, edges single K-swaps.
struct MetaGraph {
    std::vector<KunduRealization> nodes;
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // i < j, sorted
    std::vector<std::vector<std::size_t>> adjacency;
    std::vector<std::size_t> component;  // component id per node, ids by first node

    std::size_t component_count() const;
    std::optional<std::size_t> find(const KunduRealization& kr) const;
};

struct MetaGraphReport {
    std::size_t nodes = 0;
    std::size_t edges = 0;
    std::size_t components = 0;
    /// (node in component 0, node in component k) for k >= 1.
    std::vector<std::pair<std::size_t, std::size_t>> witnesses;

    std::string to_string() const;
};

MetaGraph kswap_metagraph(const DegreeSequence& pi, std::size_t cap = kMetagraphCap);
MetaGraphReport report(const MetaGraph& mg);

/// Every K-swap applicable to kr (each unordered re-pairing once).
std::vector<Swap> all_k_swaps(const KunduRealization& kr);

struct Coverage {
    bool covered = true;
    std::optional<OneFactor> witness;
};

/// Whether every perfect matching of K_n is the displayed factor of some
/// Kundu realization of pi.
Coverage factor_coverage(const DegreeSequence& pi, std::size_t cap = kRealizationCap);

}  // namespace kundu::oracle
