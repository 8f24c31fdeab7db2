#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kundupack/cycles.hpp"
#include "kundupack/degseq.hpp"
#include "kundupack/graph.hpp"

namespace kundu {

/// Which move the scheduler takes next.
enum class StepKind {
    resolve,       // no green eligible chord left: canonical swaps on every cycle
    peel,          // one canonical swap on a cycle that still has a free chord
    club,
    diamond,
    spade_kill,
    spade_shrink,
};

std::string_view to_string(StepKind kind);

struct NavigationState {
    KunduRealization kr;  // green graph and current (red) factor
    OneFactor target;     // blue factor
    std::vector<AlternatingCycle> cycles;
    std::vector<Swap> emitted;
    std::size_t delta_max = 0;
    Mode mode = Mode::guaranteed;

    NavigationState(KunduRealization start, OneFactor target, Mode mode);

    /// Recomputes `cycles` from the current factor.
    void refresh();
};

struct PlannedStep {
    StepKind kind = StepKind::resolve;
    std::vector<Swap> swaps;
};

/// Diagnostic snapshot of the state the scheduler acts on. `z` sums the
/// lengths of the long (>= 6) cycles other than the chosen longest one.
struct ProgressReport {
    StepKind step = StepKind::resolve;
    std::size_t n = 0;
    std::size_t longest = 0;
    std::size_t delta = 0;
    std::size_t z = 0;
    std::size_t four_cycles = 0;
    std::size_t cycles = 0;
    std::size_t green_chords = 0;

    /// key=value fields on one line.
    std::string to_string() const;
};

/// Next move in priority order, or nullopt when none applies.
std::optional<PlannedStep> plan_step(const NavigationState& state);

/// Throws Error(progress_stalled) with a full state dump when no move applies.
ProgressReport assert_progress(const NavigationState& state);

/// Optional sink for one report per scheduler step.
using ProgressLog = std::vector<ProgressReport>;

/// Factor-layer K-swaps turning i into j with g fixed; i, j, g pairwise
/// edge-disjoint.
SwapTrace navigate_disjoint_factors(const LabeledGraph& g, const OneFactor& i, const OneFactor& j,
                                    Mode mode, ProgressLog* log = nullptr);

/// A perfect matching edge-disjoint from g, i and j.
OneFactor find_free_factor(const LabeledGraph& g, const OneFactor& i, const OneFactor& j,
                           Mode mode);

/// Factor-layer K-swaps from (g, i) to (g, j), through a free factor when
/// i and j overlap.
SwapTrace navigate_factors(const LabeledGraph& g, const OneFactor& i, const OneFactor& j, Mode mode,
                           ProgressLog* log = nullptr);

struct SwapOutResult {
    Swap swap;
    KunduRealization result;
};

/// Removes `eps` from the displayed factor by a factor-layer K-swap whose
/// new edges also avoid `forbidden`.
SwapOutResult swap_out(const KunduRealization& kr, Edge eps, std::span<const Edge> forbidden);

/// K-swap sequence from start to goal (same green degree sequence).
SwapTrace navigate_full(const KunduRealization& start, const KunduRealization& goal, Mode mode,
                        ProgressLog* log = nullptr);

struct Embedding {
    KunduRealization realization;  // (g', j)
    SwapTrace trace;               // graph-layer swaps from kr to (g', kr.factor)
};

/// Graph-layer K-swaps moving every green edge off j.
Embedding embed_factor(const KunduRealization& kr, const OneFactor& j, Mode mode);

}  // namespace kundu
