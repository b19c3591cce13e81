#pragma once

#include <string>
#include <utility>
#include <vector>

#include "resolvekit/core.hpp"

namespace resolvekit {

// Structural decomposition of M_S: row-weight profile, the A/B column
// split induced by weight-1 rows, the auxiliary graph on weight-2 row
// supports, the B0/B1 refinement and the weight-3 triple types.
// Column indices are 1-based (s_1 .. s_l).
struct AnalysisReport {
    WeightProfile profile;
    std::vector<int> A;  // supports of weight-1 rows
    std::vector<int> B;  // complement of A
    std::vector<std::pair<int, int>> gamma_edges;  // distinct weight-2 supports
    long long duplicate_weight2_supports = 0;
    long long eAA = 0, eAB = 0, eBB = 0;
    std::vector<int> B1;  // B-columns with a gamma-neighbour in A
    std::vector<int> B0;
    long long eB0B0 = 0, eB0B1 = 0, eB1B1 = 0;
    long long eAAA = 0, eAAB = 0, eABB = 0, eBBB = 0;
    bool k3_constraints_applicable = false;
};

AnalysisReport analyze_certificate(const Certificate& cert);

// Labels of violated constraints; empty for every separating certificate
// (each check is a theorem about separating sets). Checks specific to k=3
// are skipped when k != 3.
std::vector<std::string> check_structural_constraints(const Certificate& cert);

}  // namespace resolvekit
