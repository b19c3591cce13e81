#include "resolvekit/core.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace resolvekit {

KSubset::KSubset(int m, std::vector<int> elems) : ground_size(m), members(std::move(elems)) {
    if (m < 1 || m > max_ground_size)
        throw invalid_parameters("ground size out of range: " + std::to_string(m));
    std::sort(members.begin(), members.end());
    if (members.empty()) throw invalid_parameters("empty subset");
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (members[i] < 1 || members[i] > m)
            throw invalid_parameters("subset member out of range");
        if (i > 0 && members[i] == members[i - 1])
            throw invalid_parameters("repeated subset member");
    }
}

Mask KSubset::mask() const {
    Mask mk;
    for (int p : members) mk.set(p);
    return mk;
}

Certificate::Certificate(int m_, int k_, std::vector<KSubset> family)
    : m(m_), k(k_), sets(std::move(family)) {
    if (m < 1 || m > max_ground_size || k < 1)
        throw invalid_parameters("bad certificate parameters");
    std::set<std::vector<int>> seen;
    for (const KSubset& s : sets) {
        if (s.ground_size != m) throw invalid_parameters("subset ground size != m");
        if (s.k() != k) throw invalid_parameters("subset size != k");
        if (!seen.insert(s.members).second)
            throw invalid_parameters("duplicate subset in certificate");
    }
}

Certificate::Certificate(int m_, int k_, const std::vector<std::vector<int>>& raw)
    : Certificate(m_, k_, [&] {
          std::vector<KSubset> family;
          family.reserve(raw.size());
          for (const auto& r : raw) family.emplace_back(m_, r);
          return family;
      }()) {}

std::vector<Mask> Certificate::masks() const {
    std::vector<Mask> out;
    out.reserve(sets.size());
    for (const KSubset& s : sets) out.push_back(s.mask());
    return out;
}

long long binomial(int n, int r) {
    if (r < 0 || r > n) return 0;
    r = std::min(r, n - r);
    long long v = 1;
    for (int i = 1; i <= r; ++i) v = v * (n - r + i) / i;
    return v;
}

std::vector<KSubset> enumerate_ksubsets(int m, int k) {
    if (k < 1 || k > m) throw invalid_parameters("enumerate_ksubsets: need 1 <= k <= m");
    std::vector<KSubset> out;
    out.reserve(static_cast<std::size_t>(binomial(m, k)));
    std::vector<int> cur(k);
    std::iota(cur.begin(), cur.end(), 1);
    while (true) {
        out.emplace_back(m, cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == m - (k - 1 - i)) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

std::vector<Mask> enumerate_ksubset_masks(int m, int k) {
    auto subs = enumerate_ksubsets(m, k);
    std::vector<Mask> out;
    out.reserve(subs.size());
    for (const KSubset& s : subs) out.push_back(s.mask());
    return out;
}

std::string to_string(const KSubset& s) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < s.members.size(); ++i)
        os << (i ? "," : "") << s.members[i];
    os << '}';
    return os.str();
}

int IncidenceMatrix::row_weight(int row) const {
    int w = 0;
    for (int c = 1; c <= cols; ++c) w += at(row, c);
    return w;
}

std::vector<int> IncidenceMatrix::row_support(int row) const {
    std::vector<int> s;
    for (int c = 1; c <= cols; ++c)
        if (at(row, c)) s.push_back(c);
    return s;
}

IncidenceMatrix incidence_matrix(const Certificate& cert) {
    IncidenceMatrix mat;
    mat.m = cert.m;
    mat.cols = cert.size();
    mat.entries.assign(static_cast<std::size_t>(cert.m) * mat.cols, 0);
    for (int c = 0; c < mat.cols; ++c)
        for (int p : cert.sets[c].members)
            mat.entries[static_cast<std::size_t>(p - 1) * mat.cols + c] = 1;
    return mat;
}

std::vector<int> signature(const Certificate& cert, std::span<const int> omega) {
    Mask om;
    for (int p : omega) {
        if (p < 1 || p > cert.m) throw invalid_parameters("signature: point out of range");
        om.set(p);
    }
    std::vector<int> sig(cert.sets.size());
    for (std::size_t s = 0; s < cert.sets.size(); ++s)
        sig[s] = om.intersect_count(cert.sets[s].mask());
    return sig;
}

WeightProfile weight_profile(const IncidenceMatrix& mat) {
    WeightProfile wp;
    wp.d.assign(mat.cols + 1, 0);
    for (int r = 1; r <= mat.m; ++r) ++wp.d[mat.row_weight(r)];
    return wp;
}

}  // namespace resolvekit
