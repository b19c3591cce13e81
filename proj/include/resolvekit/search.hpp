#pragma once

#include <cstdint>
#include <optional>
#include <set>

#include "resolvekit/core.hpp"

namespace resolvekit {

enum class SearchStatus { found, none, budget_exhausted };

struct SearchResult {
    SearchStatus status = SearchStatus::none;
    std::optional<Certificate> cert;
    long long nodes = 0;
};

// Decision procedure: is there a separating (or robust separating) family
// of size exactly t? Depth-first over lexicographically increasing
// families; the first subset is fixed to {1..k} (the point-relabeling
// action is transitive on k-subsets). Partial families are pruned when
// their signature partition cannot reach singletons with the remaining
// picks (each pick refines every class into at most k+1 parts).
SearchResult exists_of_size(int m, int k, int t, bool robust_mode,
                            long long budget = -1);

struct SigmaResult {
    SearchStatus status = SearchStatus::none;
    long long value = -1;
    std::optional<Certificate> witness;
    long long lower = 0;   // best-known interval on budget exhaustion
    long long upper = -1;  // -1 = unknown
    long long nodes = 0;
};

// Iterative deepening from the closed-form lower bound.
SigmaResult sigma_exact(int m, int k, bool robust_mode, long long budget = -1);

// Randomized hill climbing over size-t families; cost is the number of
// signature collisions, counted as sum over collision classes of
// (class size - 1). Reproducible given the seed.
std::optional<Certificate> local_search(int m, int k, int t, bool robust_mode,
                                        std::uint64_t seed, long long iterations);

struct EnumerationResult {
    bool complete = false;
    std::set<int> sizes;
};

// Cardinalities of irredundant separating families, by exhaustive
// enumeration over all families (partial when the cap is exceeded).
EnumerationResult irredundant_sizes(int m, int k, long long cap = 1 << 20);

}  // namespace resolvekit
