#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "kundupack/graph.hpp"

namespace kundu {

/// Cyclic vertex list c0..c_{L-1}. Edges c_{2k}c_{2k+1} are red (current
/// factor), edges c_{2k+1}c_{2k+2} are blue (target factor).
struct AlternatingCycle {
    std::vector<Vertex> vertices;

    std::size_t length() const { return vertices.size(); }
    std::size_t red_count() const { return vertices.size() / 2; }
    Vertex at(std::size_t i) const { return vertices[i % vertices.size()]; }
    Edge red(std::size_t k) const { return Edge::of(at(2 * k), at(2 * k + 1)); }
    Edge blue(std::size_t k) const { return Edge::of(at(2 * k + 1), at(2 * k + 2)); }

    /// Same cycle traversed the other way, still starting with a red edge.
    AlternatingCycle reversed() const;

    /// Smallest rotation/reflection that keeps the red-first convention.
    AlternatingCycle canonical() const;

    friend bool operator==(const AlternatingCycle&, const AlternatingCycle&) = default;
    friend auto operator<=>(const AlternatingCycle& a, const AlternatingCycle& b) {
        return a.vertices <=> b.vertices;
    }
};

/// Decomposition of I (red) xor J (blue) into vertex-disjoint alternating
/// cycles, scanned from the lowest unvisited vertex.
std::vector<AlternatingCycle> symdiff_cycles(const OneFactor& red, const OneFactor& blue);

/// Sorted canonical forms, for multiset comparison.
std::vector<AlternatingCycle> canonical_multiset(std::vector<AlternatingCycle> cycles);

struct Chord {
    Edge pair;
    bool green = false;

    friend bool operator==(const Chord&, const Chord&) = default;
};

/// Non-edge pairs of the cycle at odd distance along it.
std::vector<Chord> eligible_chords(const AlternatingCycle& c, const LabeledGraph& g);

std::size_t green_chord_count(const AlternatingCycle& c, const LabeledGraph& g);

/// One factor-layer swap removing two red edges of `c` joined by a blue
/// edge and adding that blue edge plus the distance-3 chord. Tries every
/// start position in both orientations; nullopt if every such chord is green.
struct Peel {
    Swap swap;
    AlternatingCycle rest;  // empty when c was a 4-cycle
};
std::optional<Peel> try_peel(const AlternatingCycle& c, const LabeledGraph& g);

/// (L-2)/2 factor-layer swaps turning all red edges of `c` blue.
/// Throws Error(precondition_violated) if `c` has a green eligible chord.
std::vector<Swap> canonical_cycle_swaps(const AlternatingCycle& c, const LabeledGraph& g);

struct ClubResult {
    Swap swap;
    std::array<AlternatingCycle, 2> cycles;
};

/// Splits `c` along a non-crossing chord pair between two non-consecutive
/// red edges.
std::optional<ClubResult> try_process_club(const AlternatingCycle& c, const LabeledGraph& g);

/// l > 4 * delta + 6.
bool club_guaranteed(std::size_t length, std::size_t delta);

struct DiamondResult {
    std::array<Swap, 3> swaps;
    std::array<AlternatingCycle, 3> cycles;
};

/// Recombines two vertex-disjoint cycles of length >= 6 into three by
/// swapping three red edges of each. With `below` set, only pairings whose
/// three cycles are all shorter than `below` are accepted.
std::optional<DiamondResult> try_process_diamond(const AlternatingCycle& c,
                                                 const AlternatingCycle& d,
                                                 const LabeledGraph& g,
                                                 std::optional<std::size_t> below = std::nullopt);

/// ceil((lc/2 - 1) * (ld/2) / 3).
std::size_t diamond_green_lower_bound(std::size_t lc, std::size_t ld);

/// Green edges with one end in each cycle.
std::size_t green_edges_between(const AlternatingCycle& c, const AlternatingCycle& d,
                                const LabeledGraph& g);

enum class SpadeGoal { kill_chord, shrink_max };

struct SpadeResult {
    std::array<Swap, 2> swaps;  // merge, then split
    std::array<AlternatingCycle, 2> cycles;
};

/// Merges `c` with the 4-cycle `d4`, then re-splits. kill_chord accepts a
/// result with strictly fewer green eligible chords; shrink_max (|c| >= 8)
/// one where both cycles are shorter than |c|.
std::optional<SpadeResult> try_process_spade(const AlternatingCycle& c,
                                             const AlternatingCycle& d4,
                                             const LabeledGraph& g, SpadeGoal goal);

}  // namespace kundu
