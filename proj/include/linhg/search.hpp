#pragma once

#include <cstdint>
#include <optional>

#include "linhg/cycles.hpp"
#include "linhg/core.hpp"

namespace linhg {

struct ExtremalResult {
    int n = 0;
    FamilySpec family;
    int max_edges = 0;
    TripleSystem witness;  // a linear system on n vertices attaining max_edges
    long long nodes_explored = 0;
};

struct ExtremalOptions {
    int n_limit = 9;          // refuse larger instances (search is exponential)
    bool parallel = true;
    SearchOptions detect;     // budget for per-edge family checks
};

// Exhaustive maximum edge count over linear triple systems on n labeled
// vertices avoiding every cycle in the family. Deterministic: among all
// maximum systems the lexicographically smallest edge list is reported.
ExtremalResult exact_extremal(int n, const FamilySpec& family,
                              const ExtremalOptions& opts = {});

namespace serial {
ExtremalResult exact_extremal(int n, const FamilySpec& family,
                              const ExtremalOptions& opts = {});
}

// Random linear triple system on n vertices with up to target_m edges,
// avoiding the given family. Deterministic for a fixed seed. May return
// fewer than target_m edges when the attempt budget (50 * target_m
// rejections) runs out.
TripleSystem random_linear_system(int n, int target_m, const FamilySpec& avoid,
                                  std::uint64_t seed,
                                  const SearchOptions& detect = {});

}  // namespace linhg
