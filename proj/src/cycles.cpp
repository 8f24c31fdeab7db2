#include "kundupack/cycles.hpp"

#include <algorithm>

namespace kundu {

AlternatingCycle AlternatingCycle::reversed() const {
    const auto len = vertices.size();
    std::vector<Vertex> out;
    out.reserve(len);
    for (std::size_t k = 0; k < len; ++k) out.push_back(at(1 + len - k));
    return AlternatingCycle{std::move(out)};
}

AlternatingCycle AlternatingCycle::canonical() const {
    const auto len = vertices.size();
    AlternatingCycle best = *this;
    for (const AlternatingCycle& base : {*this, reversed()}) {
        for (std::size_t s = 0; s < len; s += 2) {
            AlternatingCycle rot;
            rot.vertices.reserve(len);
            for (std::size_t k = 0; k < len; ++k) rot.vertices.push_back(base.at(s + k));
            if (rot.vertices < best.vertices) best = std::move(rot);
        }
    }
    return best;
}

std::vector<AlternatingCycle> symdiff_cycles(const OneFactor& red, const OneFactor& blue) {
    const auto n = red.order();
    if (blue.order() != n) throw Error(ErrorKind::invalid_input, "factors differ in vertex count");
    std::vector<bool> seen(n, false);
    std::vector<AlternatingCycle> out;
    for (std::size_t v = 0; v < n; ++v) {
        const auto start = static_cast<Vertex>(v);
        if (seen[v] || red.mate(start) == blue.mate(start)) continue;
        AlternatingCycle c;
        Vertex x = start;
        do {
            const Vertex y = red.mate(x);
            c.vertices.push_back(x);
            c.vertices.push_back(y);
            seen[static_cast<std::size_t>(x)] = true;
            seen[static_cast<std::size_t>(y)] = true;
            x = blue.mate(y);
        } while (x != start);
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<AlternatingCycle> canonical_multiset(std::vector<AlternatingCycle> cycles) {
    for (auto& c : cycles) c = c.canonical();
    std::sort(cycles.begin(), cycles.end());
    return cycles;
}

std::vector<Chord> eligible_chords(const AlternatingCycle& c, const LabeledGraph& g) {
    const auto len = c.length();
    std::vector<Chord> out;
    for (std::size_t p = 0; p < len; ++p) {
        for (std::size_t q = p + 3; q < len; q += 2) {
            if (q - p == len - 1) continue;
            const Edge e = Edge::of(c.vertices[p], c.vertices[q]);
            out.push_back(Chord{e, g.has_edge(e)});
        }
    }
    return out;
}

std::size_t green_chord_count(const AlternatingCycle& c, const LabeledGraph& g) {
    std::size_t count = 0;
    for (const Chord& ch : eligible_chords(c, g)) count += ch.green ? 1 : 0;
    return count;
}

std::optional<Peel> try_peel(const AlternatingCycle& c, const LabeledGraph& g) {
    const auto len = c.length();
    if (len < 4) return std::nullopt;
    for (const AlternatingCycle& base : {c, c.reversed()}) {
        for (std::size_t s = 0; s < len; s += 2) {
            const Vertex o0 = base.at(s);
            const Vertex o3 = base.at(s + 3);
            if (g.has_edge(o0, o3)) continue;
            Peel peel{Swap::make(o0, base.at(s + 1), base.at(s + 2), o3, Layer::factor), {}};
            if (len > 4) {
                peel.rest.vertices.push_back(o0);
                for (std::size_t k = 3; k < len; ++k) peel.rest.vertices.push_back(base.at(s + k));
            }
            return peel;
        }
    }
    return std::nullopt;
}

std::vector<Swap> canonical_cycle_swaps(const AlternatingCycle& c, const LabeledGraph& g) {
    if (green_chord_count(c, g) > 0)
        throw Error(ErrorKind::precondition_violated, "cycle has a green eligible chord");
    std::vector<Swap> swaps;
    AlternatingCycle current = c;
    while (current.length() >= 4) {
        auto peel = try_peel(current, g);
        if (!peel) throw Error(ErrorKind::precondition_violated, "no free chord to peel");
        swaps.push_back(peel->swap);
        current = std::move(peel->rest);
    }
    return swaps;
}

namespace {

// Non-crossing re-pairing of red edges p < q (non-consecutive) of c.
ClubResult split_cycle(const AlternatingCycle& c, std::size_t p, std::size_t q) {
    const auto len = c.length();
    ClubResult r{Swap::make(c.at(2 * p), c.at(2 * p + 1), c.at(2 * q), c.at(2 * q + 1), Layer::factor),
                 {}};
    auto& gamma = r.cycles[0].vertices;
    gamma.push_back(c.at(2 * q));
    for (std::size_t k = 2 * p + 1; k < 2 * q; ++k) gamma.push_back(c.at(k));
    auto& sigma = r.cycles[1].vertices;
    sigma.push_back(c.at(2 * p));
    for (std::size_t k = 2 * q + 1; k < 2 * p + len; ++k) sigma.push_back(c.at(k));
    return r;
}

bool split_blocked(const AlternatingCycle& c, std::size_t p, std::size_t q, const LabeledGraph& g) {
    return g.has_edge(c.at(2 * p + 1), c.at(2 * q)) || g.has_edge(c.at(2 * q + 1), c.at(2 * p));
}

}  // namespace

std::optional<ClubResult> try_process_club(const AlternatingCycle& c, const LabeledGraph& g) {
    const auto h = c.red_count();
    if (h < 4) return std::nullopt;
    for (std::size_t p = 0; p < h; ++p) {
        for (std::size_t q = p + 2; q < h && q - p <= h - 2; ++q) {
            if (!split_blocked(c, p, q, g)) return split_cycle(c, p, q);
        }
    }
    return std::nullopt;
}

bool club_guaranteed(std::size_t length, std::size_t delta) { return length > 4 * delta + 6; }

std::optional<DiamondResult> try_process_diamond(const AlternatingCycle& c, const AlternatingCycle& d,
                                                 const LabeledGraph& g, std::optional<std::size_t> below) {
    const std::size_t a = c.red_count();
    const std::size_t b = d.red_count();
    if (a < 3 || b < 3) return std::nullopt;
    const std::size_t limit = below.value_or(c.length() + d.length() + 1);
    auto free = [&](Vertex x, Vertex y) { return !g.has_edge(x, y); };

    for (const AlternatingCycle& dd : {d, d.reversed()}) {
        for (std::size_t p = 0; p < a; ++p) {
            for (std::size_t x = 0; x < b; ++x) {
                if (!free(c.at(2 * p), dd.at(2 * x)) || !free(c.at(2 * p + 1), dd.at(2 * x + 1))) continue;
                for (std::size_t q = p + 1; q < a; ++q) {
                    for (std::size_t s = 1; s + 1 < b; ++s) {
                        if (2 * s + 2 * (q - p) >= limit) continue;
                        const std::size_t y = x + s;
                        if (!free(c.at(2 * q), dd.at(2 * y)) || !free(c.at(2 * q + 1), dd.at(2 * y + 1)))
                            continue;
                        for (std::size_t r = q + 1; r < a; ++r) {
                            for (std::size_t t = s + 1; t < b; ++t) {
                                if (2 * (t - s) + 2 * (r - q) >= limit) continue;
                                if (2 * (b - t) + 2 * (a - r + p) >= limit) continue;
                                const std::size_t z = x + t;
                                if (!free(c.at(2 * r), dd.at(2 * z)) ||
                                    !free(c.at(2 * r + 1), dd.at(2 * z + 1)))
                                    continue;

                                DiamondResult out;
                                out.swaps[0] = Swap::make(c.at(2 * p), c.at(2 * p + 1), dd.at(2 * x + 1),
                                                          dd.at(2 * x), Layer::factor);
                                out.swaps[1] = Swap::make(c.at(2 * q), c.at(2 * q + 1), dd.at(2 * y + 1),
                                                          dd.at(2 * y), Layer::factor);
                                out.swaps[2] = Swap::make(c.at(2 * r), c.at(2 * r + 1), dd.at(2 * z + 1),
                                                          dd.at(2 * z), Layer::factor);
                                const std::size_t lc = c.length();
                                // Each new cycle: C endpoint, forward along D, back along C.
                                auto build = [&](std::size_t c_from, std::size_t d_from, std::size_t d_to,
                                                 std::size_t c_to, std::size_t c_stop) {
                                    AlternatingCycle cyc;
                                    cyc.vertices.push_back(c.at(c_from));
                                    for (std::size_t k = d_from; k <= d_to; ++k) cyc.vertices.push_back(dd.at(k));
                                    for (std::size_t k = c_to; k >= c_stop; --k) cyc.vertices.push_back(c.at(k));
                                    return cyc;
                                };
                                // Gamma: c2, D[2z+1..2x+2b], C[2p+lc .. 2r+2]
                                out.cycles[0] = build(2 * r + 1, 2 * z + 1, 2 * x + 2 * b, 2 * p + lc, 2 * r + 2);
                                // Sigma: a2, D[2x+1..2y], C[2q .. 2p+2]
                                out.cycles[1] = build(2 * p + 1, 2 * x + 1, 2 * y, 2 * q, 2 * p + 2);
                                // Lambda: b2, D[2y+1..2z], C[2r .. 2q+2]
                                out.cycles[2] = build(2 * q + 1, 2 * y + 1, 2 * z, 2 * r, 2 * q + 2);
                                return out;
                            }
                        }
                    }
                }
            }
        }
    }
    return std::nullopt;
}

std::size_t diamond_green_lower_bound(std::size_t lc, std::size_t ld) {
    const std::size_t a = lc / 2;
    const std::size_t b = ld / 2;
    return ((a - 1) * b + 2) / 3;
}

std::size_t green_edges_between(const AlternatingCycle& c, const AlternatingCycle& d, const LabeledGraph& g) {
    std::size_t count = 0;
    for (Vertex x : c.vertices)
        for (Vertex y : d.vertices) count += g.has_edge(x, y) ? 1 : 0;
    return count;
}

std::optional<SpadeResult> try_process_spade(const AlternatingCycle& c, const AlternatingCycle& d4,
                                             const LabeledGraph& g, SpadeGoal goal) {
    const std::size_t len = c.length();
    const std::size_t h = c.red_count();
    if (d4.length() != 4 || len < 6) return std::nullopt;
    if (goal == SpadeGoal::shrink_max && len < 8) return std::nullopt;
    const std::size_t green_before = green_chord_count(c, g);
    if (goal == SpadeGoal::kill_chord && green_before == 0) return std::nullopt;

    const auto& q4 = d4.vertices;
    // (delta0, delta1) is the red edge merged with f, (delta2, delta3) the one split with e.
    const std::array<std::array<Vertex, 4>, 4> orientations{{
        {q4[0], q4[1], q4[2], q4[3]},
        {q4[2], q4[3], q4[0], q4[1]},
        {q4[1], q4[0], q4[3], q4[2]},
        {q4[3], q4[2], q4[1], q4[0]},
    }};

    for (std::size_t q = 0; q < h; ++q) {
        const Vertex f0 = c.at(2 * q);
        const Vertex f1 = c.at(2 * q + 1);
        for (const auto& delta : orientations) {
            if (g.has_edge(f0, delta[1]) || g.has_edge(f1, delta[0])) continue;
            AlternatingCycle merged;
            merged.vertices.reserve(len + 4);
            for (std::size_t k = 0; k <= 2 * q; ++k) merged.vertices.push_back(c.at(k));
            merged.vertices.insert(merged.vertices.end(), {delta[1], delta[2], delta[3], delta[0]});
            for (std::size_t k = 2 * q + 1; k < len; ++k) merged.vertices.push_back(c.at(k));
            const Swap merge = Swap::make(f1, f0, delta[1], delta[0], Layer::factor);

            for (std::size_t p = 0; p < h; ++p) {
                if (p == q) continue;
                const std::size_t e_idx = p < q ? p : p + 2;
                const std::size_t eps_idx = q + 1;
                const std::size_t lo = std::min(e_idx, eps_idx);
                const std::size_t hi = std::max(e_idx, eps_idx);
                if (split_blocked(merged, lo, hi, g)) continue;
                ClubResult split = split_cycle(merged, lo, hi);
                const bool ok =
                    goal == SpadeGoal::shrink_max
                        ? split.cycles[0].length() < len && split.cycles[1].length() < len
                        : green_chord_count(split.cycles[0], g) + green_chord_count(split.cycles[1], g) <
                              green_before;
                if (!ok) continue;
                return SpadeResult{{merge, split.swap}, std::move(split.cycles)};
            }
        }
    }
    return std::nullopt;
}

}  // namespace kundu
