#include "resolvekit/bounds.hpp"

#include <algorithm>
#include <vector>

#include "resolvekit/ksubset.hpp"

namespace resolvekit {

namespace {

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

// Exact C(m,k) by Pascal additions; fits unsigned __int128 for m <= 128.
unsigned __int128 exact_binomial(long long m, int k) {
    std::vector<unsigned __int128> row(k + 1, 0);
    row[0] = 1;
    for (long long n = 1; n <= m; ++n)
        for (int j = std::min<long long>(k, n); j >= 1; --j) row[j] += row[j - 1];
    return row[k];
}

// Smallest t with (k+1)^t >= C(m,k): each signature coordinate takes at
// most k+1 values. Computed by exact ceiling divisions, no floating point.
long long counting_term(long long m, int k) {
    unsigned __int128 c = exact_binomial(m, k);
    const unsigned __int128 base = k + 1;
    long long t = 0;
    while (c > 1) {
        c = (c + base - 1) / base;
        ++t;
    }
    return t;
}

}  // namespace

long long sigma_closed_form(long long m, int k) {
    if (k != 1 && k != 2) throw invalid_parameters("sigma_closed_form: k must be 1 or 2");
    if (m < k + 1) throw invalid_parameters("sigma_closed_form: need m >= k+1");
    if (k == 1) return m - 1;
    long long base = ceil_div(2 * (m - 1), 3);
    return (m == 5 || m % 3 == 0) ? base : base + 1;
}

long long girth_block_size(int k) {
    if (k < 3) throw invalid_parameters("girth_block_size: k >= 3");
    if (k > 16) throw capacity_error("girth_block_size: k too large for exact evaluation");
    unsigned __int128 p = 1;
    for (int i = 0; i < 2 * k; ++i) p *= static_cast<unsigned>(k - 1);
    unsigned __int128 v = 4 * (p - 1) / static_cast<unsigned>(k - 2);
    if (v > static_cast<unsigned __int128>(0x7fffffffffffffffLL))
        throw capacity_error("girth_block_size: overflow");
    return static_cast<long long>(v);
}

std::vector<BoundTerm> lower_bound_terms(long long m, int k) {
    if (k < 3 || m < 2 * k - 1) throw invalid_parameters("lower_bound: need k >= 3, m >= 2k-1");
    std::vector<BoundTerm> terms;
    terms.push_back({"(6m-8)/(3k+1) [Thm 2]", ceil_div(6 * m - 8, 3 * k + 1)});
    if (k == 3) terms.push_back({"(36m-50)/59 [Thm 3]", ceil_div(36 * m - 50, 59)});
    terms.push_back({"floor(2(m-1)/(k+1)) [base size]", 2 * (m - 1) / (k + 1)});
    terms.push_back({"ceil(log_{k+1} C(m,k)) [plumbing]", counting_term(m, k)});
    return terms;
}

long long lower_bound(long long m, int k) {
    long long best = 0;
    for (const auto& t : lower_bound_terms(m, k)) best = std::max(best, t.value);
    return best;
}

std::vector<BoundTerm> upper_bound_terms(long long m, int k) {
    if (k < 3 || m < 2 * k - 1) throw invalid_parameters("upper_bound: need k >= 3, m >= 2k-1");
    std::vector<BoundTerm> terms;
    long long kp = girth_block_size(k);
    long long q = m / kp, r = m % kp;
    terms.push_back({"2k'q/k + (floor(k/2)+1)r [Thm 2]",
                     ceil_div(2 * kp * q, k) + (k / 2 + 1) * r});
    if (k == 3) {
        long long q3 = m / 13, r3 = m % 13;
        terms.push_back({"8q+2r, m=13q+r [Thm 3]", 8 * q3 + 2 * r3});
    }
    return terms;
}

long long upper_bound_value(long long m, int k) {
    long long best = -1;
    for (const auto& t : upper_bound_terms(m, k))
        if (best < 0 || t.value < best) best = t.value;
    return best;
}

long long group_rank_bound(long long n, long long r) {
    if (r < 2 || r > n) throw invalid_parameters("group_rank_bound: need 2 <= r <= n");
    return n - r + 1;
}

}  // namespace resolvekit
