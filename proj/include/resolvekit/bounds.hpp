#pragma once

#include <string>
#include <vector>

namespace resolvekit {

// One evaluated bound term, labelled with its source.
struct BoundTerm {
    std::string label;
    long long value;
};

// Exact value of sigma(m,k) for k in {1,2}.
long long sigma_closed_form(long long m, int k);

// Maximum of the known lower bounds on sigma(m,k), k >= 3, each with a
// ceiling applied (sigma is an integer).
long long lower_bound(long long m, int k);
std::vector<BoundTerm> lower_bound_terms(long long m, int k);

// Minimum of the applicable theorem upper-bound expressions, k >= 3.
long long upper_bound_value(long long m, int k);
std::vector<BoundTerm> upper_bound_terms(long long m, int k);

// Block-count expression 4((k-1)^{2k} - 1)/(k-2), k >= 3.
long long girth_block_size(int k);

// n - r + 1 for a transitive group of degree n and rank r.
long long group_rank_bound(long long n, long long r);

}  // namespace resolvekit
