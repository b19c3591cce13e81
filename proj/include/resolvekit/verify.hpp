#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "resolvekit/core.hpp"

namespace resolvekit {

void set_threads(int n);  // 0 = runtime default

// True iff all C(m,k) signatures over the k-subsets of [m] are pairwise
// distinct (the direct definition of a separating set).
bool is_separating(const Certificate& cert);

// Row-sum criterion: distinct i-subsets have distinct signatures for every
// i <= k. Equivalent to is_separating when m >= 2k-1; throws
// hypothesis_violated below that threshold.
bool is_separating_rows(const Certificate& cert);

// Separating, and additionally all subsets of size < k (sizes may differ)
// have pairwise distinct signatures.
bool is_robust(const Certificate& cert);

// Counterexample extraction: nullopt iff the corresponding check passes,
// otherwise the lexicographically first colliding pair in the smallest
// size class that contains a collision.
std::optional<std::pair<std::vector<int>, std::vector<int>>>
witness_unseparated(const Certificate& cert, bool robust_mode);

namespace detail {

// Signature of each omega against the certificate columns, packed as
// consecutive runs of cert-size bytes. The two kernels compute identical
// output; the serial one is the reference used in tests and benchmarks.
std::vector<std::uint8_t> signature_keys_serial(const std::vector<Mask>& columns,
                                                const std::vector<Mask>& omegas);
std::vector<std::uint8_t> signature_keys_parallel(const std::vector<Mask>& columns,
                                                  const std::vector<Mask>& omegas);

bool has_duplicate_key(const std::vector<std::uint8_t>& keys, std::size_t stride);

}  // namespace detail

}  // namespace resolvekit
