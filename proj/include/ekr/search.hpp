#pragma once

// Exhaustive branch-and-bound search for intersecting k-uniform families on
// [n] whose minimum d-degree reaches a target value.
//
// The search makes binary include/exclude decisions on the colex-least pool
// candidate containing the colex-least unsaturated d-set, so every family is
// visited along exactly one path. Cuts:
//   - degree:   the branch d-set cannot reach the target from the pool
//   - floor:    |F| + |pool| below the double-counting floor
//               ceil(target * C(n,d) / C(k,d))
//   - ekr:      |F| hit C(n-1,k-1) (n >= 2k) with some d-set unsaturated
//   - symmetry: optional leader checks on the first two included members
//               (any family is isomorphic to one surviving them)

#include "ekr/families.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace ekr {

struct SearchProblem {
    int n = 0, k = 0, d = 0;
    std::int64_t target = 1;
    bool symmetry_pruning = true;
    std::optional<std::uint64_t> node_limit;
    std::optional<double> time_limit_s;
};

enum class SearchStatus { Witness, Exhausted, Capped };

std::string search_status_name(SearchStatus s);

struct SearchOutcome {
    SearchStatus status = SearchStatus::Exhausted;
    std::optional<SetFamily> witness;
    std::uint64_t nodes_explored = 0;
    std::map<std::string, std::uint64_t> bound_cuts;
};

/// Finds an intersecting k-uniform family with min d-degree >= target, or
/// certifies none exists. Witnesses are re-verified through the families
/// module before being returned; "exhausted" is reported only when no cap
/// fired.
SearchOutcome search_min_degree(const SearchProblem& p);

struct TheoremScanEntry {
    int n, k, d;
    BigInt bound;
    SearchOutcome outcome;
    bool in_theorem_range;  // d >= 2 and n >= 2k+2d-3
};

/// Runs search_min_degree with target = C(n-d-1,k-d-1) + 1 over every triple
/// with d <= d_max, d < k <= k_max, 2k <= n <= n_max and C(n,k) <= binom_cap.
/// A witness inside the theorem range is an implementation error and throws.
std::vector<TheoremScanEntry> scan_theorem(int n_max, int k_max, int d_max,
                                           std::uint64_t binom_cap = 40);

}  // namespace ekr
