#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vlink/gauss.hpp"
#include "vlink/indices.hpp"
#include "vlink/moves.hpp"

namespace vlink {

// Empirical invariance check: rewrite the diagram with random moves and
// recompute the selected invariants at both ends.

struct VerifyOptions {
    int steps = 100;
    uint64_t seed = 1;
    std::vector<std::string> invariants;  // empty = all applicable
    int max_chords = 48;
};

struct VerifyResult {
    bool ok = true;
    std::vector<std::string> lines;  // per-invariant verdicts + move tally
    MoveTrace trace;
};

bool is_invariant_name(std::string_view name);
std::vector<std::string> default_invariant_names(const GaussDiagram& d);
VerifyResult verify_invariance(const GaussDiagram& d, Convention cv,
                               const VerifyOptions& opt);

}  // namespace vlink
