#include "resolvekit/analyze.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace resolvekit {

AnalysisReport analyze_certificate(const Certificate& cert) {
    const auto mat = incidence_matrix(cert);
    const int l = mat.cols;
    AnalysisReport rep;
    rep.profile = weight_profile(mat);
    rep.k3_constraints_applicable = (cert.k == 3);

    std::set<int> a_cols;
    std::map<std::pair<int, int>, int> edge_mult;
    for (int r = 1; r <= cert.m; ++r) {
        auto sup = mat.row_support(r);
        if (sup.size() == 1) a_cols.insert(sup[0]);
        if (sup.size() == 2) ++edge_mult[{sup[0], sup[1]}];
    }
    rep.A.assign(a_cols.begin(), a_cols.end());
    for (int c = 1; c <= l; ++c)
        if (!a_cols.count(c)) rep.B.push_back(c);

    std::set<int> b1;
    for (const auto& [e, mult] : edge_mult) {
        rep.gamma_edges.push_back(e);
        rep.duplicate_weight2_supports += mult - 1;
        bool a1 = a_cols.count(e.first), a2 = a_cols.count(e.second);
        if (a1 && a2)
            ++rep.eAA;
        else if (!a1 && !a2)
            ++rep.eBB;
        else {
            ++rep.eAB;
            b1.insert(a1 ? e.second : e.first);
        }
    }
    rep.B1.assign(b1.begin(), b1.end());
    for (int c : rep.B)
        if (!b1.count(c)) rep.B0.push_back(c);
    for (const auto& e : rep.gamma_edges) {
        bool f1 = b1.count(e.first), f2 = b1.count(e.second);
        if (a_cols.count(e.first) || a_cols.count(e.second)) continue;
        if (f1 && f2)
            ++rep.eB1B1;
        else if (!f1 && !f2)
            ++rep.eB0B0;
        else
            ++rep.eB0B1;
    }

    for (int r = 1; r <= cert.m; ++r) {
        auto sup = mat.row_support(r);
        if (sup.size() != 3) continue;
        int in_a = 0;
        for (int c : sup) in_a += a_cols.count(c) ? 1 : 0;
        switch (in_a) {
            case 3: ++rep.eAAA; break;
            case 2: ++rep.eAAB; break;
            case 1: ++rep.eABB; break;
            default: ++rep.eBBB; break;
        }
    }
    return rep;
}

std::vector<std::string> check_structural_constraints(const Certificate& cert) {
    const auto mat = incidence_matrix(cert);
    const auto rep = analyze_certificate(cert);
    const int l = mat.cols;
    const long long d0 = rep.profile.d[0];
    const long long d1 = l >= 1 ? rep.profile.d[1] : 0;
    const long long d2 = l >= 2 ? rep.profile.d[2] : 0;
    const long long k = cert.k;
    std::vector<std::string> bad;

    if (d0 > 1) bad.push_back("d0<=1");

    // Weight-1 rows with equal supports, and full row distinctness.
    {
        std::set<std::vector<int>> w1;
        bool w1_dup = false;
        for (int r = 1; r <= cert.m; ++r) {
            auto sup = mat.row_support(r);
            if (sup.size() == 1 && !w1.insert(sup).second) w1_dup = true;
        }
        if (w1_dup) bad.push_back("weight1-rows-distinct");
        std::set<std::vector<int>> rows;
        bool dup = false;
        for (int r = 1; r <= cert.m; ++r)
            if (!rows.insert(mat.row_support(r)).second) dup = true;
        if (dup) bad.push_back("rows-distinct");
    }

    // Valency of the auxiliary graph.
    {
        std::vector<int> deg(l + 1, 0);
        for (const auto& e : rep.gamma_edges) {
            ++deg[e.first];
            ++deg[e.second];
        }
        if (*std::max_element(deg.begin(), deg.end()) > k)
            bad.push_back("gamma-valency<=k");
    }

    if (rep.eAA > 1) bad.push_back("e(A,A)<=1");

    {
        std::set<int> a_cols(rep.A.begin(), rep.A.end());
        std::map<int, int> a_neigh;
        for (const auto& e : rep.gamma_edges) {
            bool a1 = a_cols.count(e.first), a2 = a_cols.count(e.second);
            if (a1 != a2) ++a_neigh[a1 ? e.second : e.first];
        }
        for (const auto& [c, cnt] : a_neigh)
            if (cnt > 1) {
                bad.push_back("B-vertex-has<=1-A-neighbour");
                break;
            }
    }

    // Eq-style inequality, exact integer form: 2*d2 <= 2 + (k+1)(l - d1).
    if (2 * d2 > 2 + (k + 1) * (l - d1)) bad.push_back("2d2<=2+(k+1)(l-d1)");

    if (cert.k == 3) {
        std::set<int> a_cols(rep.A.begin(), rep.A.end());
        std::set<int> b1(rep.B1.begin(), rep.B1.end());

        // Length-2 paths inside B with both endpoints in B1.
        {
            std::vector<std::vector<int>> adjB(l + 1);
            for (const auto& e : rep.gamma_edges)
                if (!a_cols.count(e.first) && !a_cols.count(e.second)) {
                    adjB[e.first].push_back(e.second);
                    adjB[e.second].push_back(e.first);
                }
            bool found = false;
            for (int mid = 1; mid <= l && !found; ++mid)
                for (std::size_t i = 0; i < adjB[mid].size() && !found; ++i)
                    for (std::size_t j = i + 1; j < adjB[mid].size(); ++j)
                        if (b1.count(adjB[mid][i]) && b1.count(adjB[mid][j])) {
                            found = true;
                            break;
                        }
            if (found) bad.push_back("no-B1-path-of-length-2");
        }

        // Triple supports.
        {
            std::set<int> aaa_used;
            bool aaa_overlap = false;
            std::map<int, int> aab_per_b;
            for (int r = 1; r <= cert.m; ++r) {
                auto sup = mat.row_support(r);
                if (sup.size() != 3) continue;
                int in_a = 0;
                for (int c : sup) in_a += a_cols.count(c) ? 1 : 0;
                if (in_a == 3)
                    for (int c : sup)
                        if (!aaa_used.insert(c).second) aaa_overlap = true;
                if (in_a == 2)
                    for (int c : sup)
                        if (!a_cols.count(c)) ++aab_per_b[c];
            }
            if (aaa_overlap) bad.push_back("AAA-supports-disjoint");
            for (const auto& [c, cnt] : aab_per_b)
                if (cnt > 1) {
                    bad.push_back("B-column-in<=1-AAB-support");
                    break;
                }
        }

        const long long b0 = static_cast<long long>(rep.B0.size());
        const long long b1n = static_cast<long long>(rep.B1.size());
        if (10LL * l < 6LL * cert.m - 8 + b0) bad.push_back("10l>=6m-8+|B0|");
        if (10LL * l < 6LL * cert.m - 8 + b1n) bad.push_back("10l>=6m-8+|B1|");
        if (21LL * l < 12LL * cert.m - 18 + 2 * d1) bad.push_back("21l>=12m-18+2d1");
    }
    return bad;
}

}  // namespace resolvekit
