#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "vlink/gauss.hpp"

namespace vlink {

// Rewriting templates for the generating classical moves on Gauss diagrams
// (virtual moves leave Gauss diagrams unchanged and need no templates).
//
// Template shapes, certified by the invariance fuzzing in the test suite:
//   R1: a chord with adjacent endpoints (kink), any sign, either endpoint order.
//   R2a: chords x,y with w(x) = -w(y); [Ox Oy] contiguous on one strand and
//        [Ux Uy] contiguous on the other, same chord order on both.
//   R3a: chords x,y,z, all signs +1 (three coherently oriented strands,
//        heights top > middle > bottom); the three adjacent endpoint pairs
//        (Ox Oy), (Ux Oz), (Uy Uz) all in forward order or all reversed;
//        the move swaps each pair in place.

enum class MoveKind : uint8_t { R1Insert, R1Delete, R2aInsert, R2aDelete, R3aApply };

struct Move {
    MoveKind kind{};
    // R1Insert: circle/gap/sign/over_first. R2aInsert: over strand at
    // (circle,gap), under strand at (circle2,gap2), sign = first chord's sign.
    int circle = 0;
    int gap = 0;
    int sign = 0;
    bool over_first = false;
    int circle2 = 0;
    int gap2 = 0;
    // deletions and R3a name chords by label (stable across rebuilds)
    std::string a, b, c;
};

std::string move_to_text(const Move& m);

GaussDiagram apply_move(const GaussDiagram& d, const Move& m);

GaussDiagram r1_insert(const GaussDiagram& d, int circle, int gap, int sign,
                       bool over_first, std::string* new_label = nullptr);
// chords whose endpoints are adjacent on one circle, ordered by site position
std::vector<int> kink_chords(const GaussDiagram& d);
GaussDiagram r1_delete(const GaussDiagram& d, int chord);

GaussDiagram r2a_insert(const GaussDiagram& d, int over_circle, int over_gap,
                        int under_circle, int under_gap, int first_sign,
                        std::pair<std::string, std::string>* new_labels = nullptr);
// deletable (x,y) pairs, ordered by the position of the [Ox Oy] site
std::vector<std::pair<int, int>> r2a_delete_sites(const GaussDiagram& d);
GaussDiagram r2a_delete(const GaussDiagram& d, int x, int y);

struct TriangleSite {
    int x, y, z;
    auto operator<=>(const TriangleSite&) const = default;
};
std::vector<TriangleSite> r3a_sites(const GaussDiagram& d);
GaussDiagram r3a_apply(const GaussDiagram& d, const TriangleSite& site);

// 1-smoothing: orientation-respecting splice at the chord. A self chord
// splits its circle into the two open arcs; a linking chord merges its two
// circles. Other chords keep signs, roles, and relative order.
GaussDiagram smooth(const GaussDiagram& d, int chord);

struct MoveTrace {
    GaussDiagram initial;
    std::vector<Move> moves;
    GaussDiagram final;
};

// Applies `steps` random applicable templates (growth-biased inserts,
// deletions/triangles when their patterns exist). Deterministic for a fixed
// seed. Every intermediate diagram is validated by construction.
MoveTrace fuzz_equivalent(const GaussDiagram& d, int steps, uint64_t seed,
                          int max_chords = 48);
GaussDiagram replay(const GaussDiagram& initial, const std::vector<Move>& moves);

}  // namespace vlink
