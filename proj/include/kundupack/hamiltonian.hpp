#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "kundupack/graph.hpp"

namespace kundu {

/// Minimum degree of the complement of `blocked` on its vertex set.
std::size_t min_complement_degree(const LabeledGraph& blocked);

/// True when the complement of `blocked` meets Dirac's condition
/// (n >= 3 and minimum degree >= n/2).
bool dirac_condition(const LabeledGraph& blocked);

/// Hamiltonian cycle in the complement of `blocked`, built by greedy path
/// extension, Posa-style closing rotation and re-opening at an outside
/// vertex. `seed` picks the start vertex and neighbor scan offset.
/// Throws Error(precondition_violated) if Dirac's condition fails.
std::vector<Vertex> dirac_hamiltonian_cycle(const LabeledGraph& blocked, std::uint64_t seed = 0);

/// Every other edge of an even Hamiltonian cycle.
OneFactor alternate_edges(const std::vector<Vertex>& cycle);

/// Perfect matching in the complement of `blocked` by maximum-cardinality
/// matching; nullopt when none exists.
std::optional<OneFactor> complement_perfect_matching(const LabeledGraph& blocked);

}  // namespace kundu
