#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace resolvekit {

// Ground sets larger than this are rejected by the bitmask hot paths.
inline constexpr int max_ground_size = 128;

struct invalid_parameters : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A lemma hypothesis (e.g. m >= 2k-1) does not hold for the given input.
struct hypothesis_violated : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A construction produced output that failed its own verification.
struct construction_bug : std::logic_error {
    using std::logic_error::logic_error;
};

// Two-word bitmask over points 1..m, m <= 128.
struct Mask {
    std::uint64_t w0 = 0, w1 = 0;

    void set(int point) {
        int b = point - 1;
        if (b < 64)
            w0 |= std::uint64_t{1} << b;
        else
            w1 |= std::uint64_t{1} << (b - 64);
    }
    bool test(int point) const {
        int b = point - 1;
        return b < 64 ? (w0 >> b) & 1 : (w1 >> (b - 64)) & 1;
    }
    int count() const { return __builtin_popcountll(w0) + __builtin_popcountll(w1); }
    int intersect_count(const Mask& o) const {
        return __builtin_popcountll(w0 & o.w0) + __builtin_popcountll(w1 & o.w1);
    }
    friend bool operator==(const Mask&, const Mask&) = default;
};

// A k-element subset of {1..m}, stored sorted.
struct KSubset {
    int ground_size = 0;
    std::vector<int> members;

    KSubset() = default;
    KSubset(int m, std::vector<int> elems);

    int k() const { return static_cast<int>(members.size()); }
    Mask mask() const;
    friend bool operator==(const KSubset&, const KSubset&) = default;
    friend auto operator<=>(const KSubset& a, const KSubset& b) {
        return a.members <=> b.members;
    }
};

// An ordered family of k-subsets of [m]: candidate separating set S.
struct Certificate {
    int m = 0;
    int k = 0;
    std::vector<KSubset> sets;

    Certificate() = default;
    Certificate(int m, int k, std::vector<KSubset> sets);
    Certificate(int m, int k, const std::vector<std::vector<int>>& raw);

    int size() const { return static_cast<int>(sets.size()); }
    std::vector<Mask> masks() const;
};

long long binomial(int n, int r);

// All k-subsets of [m] in lexicographic order.
std::vector<KSubset> enumerate_ksubsets(int m, int k);
std::vector<Mask> enumerate_ksubset_masks(int m, int k);

std::string to_string(const KSubset& s);

}  // namespace resolvekit
