#pragma once

#include <span>
#include <vector>

#include "resolvekit/ksubset.hpp"

namespace resolvekit {

// 0/1 matrix M_S: rows = points 1..m, columns = members of S.
// Every column has exactly k ones.
struct IncidenceMatrix {
    int m = 0;
    int cols = 0;
    std::vector<std::uint8_t> entries;  // row-major, m x cols

    std::uint8_t at(int row, int col) const { return entries[(row - 1) * cols + (col - 1)]; }
    int row_weight(int row) const;
    // Column indices (1-based) of the ones in a row.
    std::vector<int> row_support(int row) const;
};

// d[x] = number of rows of weight x, x = 0..cols.
struct WeightProfile {
    std::vector<long long> d;
};

IncidenceMatrix incidence_matrix(const Certificate& cert);

// Component s of the result is |omega ∩ sets[s]|, i.e. the sum of the
// rows of M_S indexed by omega.
std::vector<int> signature(const Certificate& cert, std::span<const int> omega);

WeightProfile weight_profile(const IncidenceMatrix& mat);

}  // namespace resolvekit
