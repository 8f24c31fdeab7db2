#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "kundupack/graph.hpp"

namespace kundu {

/// Degree bound denominator: guaranteed mode requires max(pi) <= n / kDegreeBound.
inline constexpr std::size_t kDegreeBound = 24;

enum class Mode { guaranteed, best_effort };

std::string_view to_string(Mode mode);

/// Vertex-indexed degrees. Entries are never reordered.
class DegreeSequence {
public:
    DegreeSequence() = default;
    /// Throws Error(invalid_input) on a negative entry.
    explicit DegreeSequence(std::vector<int> degrees);

    std::size_t size() const { return degrees_.size(); }
    int operator[](std::size_t i) const { return degrees_[i]; }
    const std::vector<int>& values() const { return degrees_; }
    int max() const;
    long long sum() const;

    /// Componentwise pi + 1.
    DegreeSequence plus_one() const;

    friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;

private:
    std::vector<int> degrees_;
};

/// True when 24 * max(pi) <= n.
bool within_degree_bound(std::size_t max_degree, std::size_t n);

/// Erdos-Gallai on a sorted copy.
bool is_graphic(const DegreeSequence& seq);

/// Deterministic Havel-Hakimi: the pivot is the vertex of largest residual
/// degree, and it is joined to the next-largest residual degrees; ties go
/// to the lowest index. Throws Error(not_graphic).
LabeledGraph realize(const DegreeSequence& seq);

/// Graph-layer swaps turning g into realize(degree sequence of g). Each
/// pivot is rewired onto its Havel-Hakimi neighborhood before it is fixed.
std::vector<Swap> havel_hakimi_swaps(const LabeledGraph& g);

/// n even, pi graphic and pi + 1 graphic.
bool kundu_feasible(const DegreeSequence& pi);

struct KunduInstance {
    DegreeSequence pi;
    Mode mode = Mode::guaranteed;

    std::size_t n() const { return pi.size(); }
    int delta_max() const { return pi.max(); }
};

/// Havel-Hakimi realization plus a 1-factor taken as alternate edges of a
/// Hamiltonian cycle of the complement. Best-effort mode falls back to a
/// maximum matching of the complement, retried on a few randomly swapped
/// realizations. Throws Error(not_feasible),
/// Error(precondition_violated) when guaranteed-mode hypotheses fail, and
/// Error(best_effort_failed).
KunduRealization kundu_realize(const KunduInstance& inst, std::mt19937_64& rng);

/// kundu_realize followed by a random walk of K-swaps on both layers.
KunduRealization random_kundu_realization(const KunduInstance& inst, std::mt19937_64& rng,
                                          std::size_t walk_steps = 0);

/// Uniform random perfect matching on n (even) vertices.
OneFactor random_one_factor(std::size_t n, std::mt19937_64& rng);

}  // namespace kundu
