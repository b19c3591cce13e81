#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "resolvekit/ksubset.hpp"

namespace resolvekit {

// Permutation of {1..n}; images[i] is the image of point i+1.
struct Permutation {
    std::vector<int> images;

    Permutation() = default;
    explicit Permutation(std::vector<int> img);
    static Permutation identity(int n);
    int degree() const { return static_cast<int>(images.size()); }
    int apply(int p) const { return images[p - 1]; }
    Permutation compose(const Permutation& other) const;  // this then other
    Permutation inverse() const;
    bool is_identity() const;
    auto operator<=>(const Permutation&) const = default;
};

// Permutation group given by generators, acting on {1..degree}.
struct PermGroup {
    int degree = 0;
    std::vector<Permutation> generators;

    PermGroup() = default;
    PermGroup(int n, std::vector<Permutation> gens);
};

// Partition of {1..n}; block ids are canonical (numbered by first
// occurrence, so blocks are ordered by minimum element).
struct Partition {
    int n = 0;
    std::vector<int> block_id;  // block_id[i] for point i+1, ids 0..count-1

    static Partition trivial(int n);     // one block
    static Partition singletons(int n);  // n blocks
    static Partition from_ids(int n, std::vector<int> ids);  // canonicalizes
    int block_count() const;
    bool is_singletons() const { return block_count() == n; }
    std::vector<std::vector<int>> blocks() const;  // 1-based points
    int largest_block() const;
    bool operator==(const Partition&) const = default;
};

Partition partition_meet(const Partition& p1, const Partition& p2);

// Orbits of G on ordered pairs; table[a-1][b-1] is the orbit id of (a,b).
std::vector<std::vector<int>> orbital_table(const PermGroup& g);

bool is_transitive(const PermGroup& g);

// Partition of {1..n} into orbits of the stabilizer of omega, computed
// from pair orbits: beta ~ gamma iff (omega,beta) and (omega,gamma) lie
// in the same orbit of G on ordered pairs.
Partition orbital_partition(const PermGroup& g, int omega);

// Number of stabilizer orbits (requires transitivity).
int rank(const PermGroup& g);

// True iff the meet of the stabilizer-orbit partitions over S is the
// partition into singletons.
bool is_separating_group(const PermGroup& g, const std::vector<int>& s);

enum class GroupSearchStatus { found, budget_exhausted };

struct SigmaGroupResult {
    GroupSearchStatus status = GroupSearchStatus::found;
    int value = 0;  // exact when found; on exhaustion, see lower/upper
    std::optional<std::vector<int>> witness;
    int lower = 0, upper = 0;
    long long nodes = 0;
};

// Minimum size of a point set whose stabilizer partitions meet to
// singletons. budget < 0 means unlimited nodes.
SigmaGroupResult sigma_group(const PermGroup& g, long long budget = -1);

inline constexpr long long default_order_cap = 1000000;

// All group elements by closure of the generators; capacity error past cap.
std::vector<Permutation> enumerate_group(const PermGroup& g,
                                         long long order_cap = default_order_cap);

// True iff only the identity fixes every point of S.
bool is_base(const PermGroup& g, const std::vector<int>& s,
             long long order_cap = default_order_cap);

struct ExtremalReport {
    int n = 0;
    int r = 0;          // stabilizer-orbit count
    int sigma = 0;      // orbit dimension
    bool extremal = false;  // sigma == n - r + 1
    bool regular = false;   // transitive with order n
    bool structure_checked = false;  // block checks run (extremal, non-regular)
    std::vector<std::vector<int>> block_system;
    bool block_count_matches = false;   // r - 1 blocks
    bool action_on_blocks_regular = false;
    bool blocks_two_transitive = false;
};

ExtremalReport verify_extremal_structure(const PermGroup& g,
                                         long long order_cap = default_order_cap,
                                         long long budget = -1);

// Sizes of all irredundant separating point sets (separating, and no
// single-point deletion stays separating); partial=true when the subset
// enumeration was truncated by cap.
struct IrredundantGroupResult {
    std::vector<int> sizes;
    bool partial = false;
};
IrredundantGroupResult irredundant_group_sizes(const PermGroup& g,
                                               long long cap = 1 << 20);

// Catalog builders.
PermGroup cyclic_group(int n);
PermGroup dihedral_group(int n);  // degree n, order 2n, n >= 3
PermGroup symmetric_group(int n);
PermGroup alternating_group(int n);  // n >= 3

// Sym(m) acting on lexicographically indexed k-subsets.
PermGroup johnson_action(int m, int k, long long degree_cap = 5000);

}  // namespace resolvekit
