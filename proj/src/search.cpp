#include "resolvekit/search.hpp"

#include <algorithm>
#include <climits>
#include <cstring>
#include <numeric>
#include <random>

#include "resolvekit/bounds.hpp"
#include "resolvekit/verify.hpp"

namespace resolvekit {

namespace {

struct BudgetExceeded {};

// Signature partition of a fixed element universe, refined one subset at
// a time. Mirrors the lattice-meet view: adding alpha meets the current
// partition with the intersection-size partition induced by alpha.
struct RefinablePartition {
    std::vector<std::int32_t> cls;  // class id per element
    int parts = 1;

    explicit RefinablePartition(std::size_t n) : cls(n, 0), parts(n == 0 ? 0 : 1) {}

    RefinablePartition refined(const std::vector<Mask>& universe, const Mask& alpha,
                               int k) const {
        RefinablePartition out(cls.size());
        std::vector<std::int64_t> key(cls.size());
        for (std::size_t i = 0; i < cls.size(); ++i)
            key[i] = static_cast<std::int64_t>(cls[i]) * (k + 2) +
                     universe[i].intersect_count(alpha);
        std::vector<std::uint32_t> order(cls.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](std::uint32_t a, std::uint32_t b) { return key[a] < key[b]; });
        int next = -1;
        std::int64_t prev = INT64_MIN;
        for (std::uint32_t idx : order) {
            if (key[idx] != prev) {
                ++next;
                prev = key[idx];
            }
            out.cls[idx] = next;
        }
        out.parts = next + 1;
        return out;
    }

    bool discrete() const { return parts == static_cast<int>(cls.size()); }
};

// Can `parts` classes reach `need` singletons in `remaining` refinements,
// each multiplying the part count by at most k+1?
bool reachable(long long parts, long long need, int remaining, int k) {
    for (int i = 0; i < remaining && parts < need; ++i) {
        if (parts > need / (k + 1) + 1) return true;
        parts *= (k + 1);
    }
    return parts >= need;
}

struct Searcher {
    int m, k, t;
    bool robust;
    long long budget;
    long long nodes = 0;
    std::vector<KSubset> universe_sets;
    std::vector<Mask> universe;  // k-subsets, lex order
    std::vector<Mask> low;       // subsets of size < k (robust mode only)
    std::vector<int> chosen;
    std::optional<Certificate> found;

    Searcher(int m_, int k_, int t_, bool robust_, long long budget_)
        : m(m_), k(k_), t(t_), robust(robust_), budget(budget_) {
        universe_sets = enumerate_ksubsets(m, k);
        universe.reserve(universe_sets.size());
        for (const auto& s : universe_sets) universe.push_back(s.mask());
        if (robust) {
            low.push_back(Mask{});
            for (int i = 1; i < k; ++i) {
                auto ms = enumerate_ksubset_masks(m, i);
                low.insert(low.end(), ms.begin(), ms.end());
            }
        }
    }

    bool done(const RefinablePartition& pu, const RefinablePartition& pl) const {
        return pu.discrete() && (!robust || pl.discrete());
    }

    Certificate make_certificate(const std::vector<int>& idx) const {
        std::vector<KSubset> family;
        for (int i : idx) family.push_back(universe_sets[i]);
        return Certificate(m, k, std::move(family));
    }

    // Pad a discriminating partial family up to size t with the smallest
    // unused subsets (adding subsets preserves the property).
    void complete(std::vector<int> idx) {
        std::vector<bool> used(universe.size(), false);
        for (int i : idx) used[i] = true;
        for (std::size_t j = 0; j < universe.size() && static_cast<int>(idx.size()) < t; ++j)
            if (!used[j]) idx.push_back(static_cast<int>(j));
        found = make_certificate(idx);
    }

    bool dfs(int level, int next_start, const RefinablePartition& pu,
             const RefinablePartition& pl) {
        ++nodes;
        if (budget >= 0 && nodes > budget) throw BudgetExceeded{};
        if (done(pu, pl)) {
            complete(chosen);
            return true;
        }
        if (level == t) return false;
        const int remaining = t - level;
        if (!reachable(pu.parts, static_cast<long long>(universe.size()), remaining, k))
            return false;
        if (robust && !reachable(pl.parts, static_cast<long long>(low.size()), remaining, k))
            return false;
        const int n = static_cast<int>(universe.size());
        if (n - next_start < remaining) return false;
        // Symmetry breaking: the root family starts with {1..k}.
        const int first = next_start, last = (level == 0) ? 1 : n;
        for (int c = first; c < last; ++c) {
            auto pu2 = pu.refined(universe, universe[c], k);
            RefinablePartition pl2 = robust ? pl.refined(low, universe[c], k) : pl;
            chosen.push_back(c);
            if (dfs(level + 1, c + 1, pu2, pl2)) return true;
            chosen.pop_back();
        }
        return false;
    }
};

}  // namespace

SearchResult exists_of_size(int m, int k, int t, bool robust_mode, long long budget) {
    if (m < k || k < 1 || t < 0) throw invalid_parameters("exists_of_size: bad parameters");
    Searcher s(m, k, t, robust_mode, budget);
    SearchResult res;
    try {
        RefinablePartition pu(s.universe.size());
        RefinablePartition pl(robust_mode ? s.low.size() : 0);
        bool ok = s.dfs(0, 0, pu, pl);
        res.status = ok ? SearchStatus::found : SearchStatus::none;
        res.cert = std::move(s.found);
    } catch (const BudgetExceeded&) {
        res.status = SearchStatus::budget_exhausted;
    }
    res.nodes = s.nodes;
    return res;
}

namespace {

// Best theorem/closed-form lower bound for subsets of size exactly kx.
long long one_sided_lower_bound(int m, int kx) {
    if (kx == 1) return m - 1;
    if (kx == 2 && m >= 3) return sigma_closed_form(m, 2);
    if (kx >= 3 && m >= 2 * kx - 1) return lower_bound(m, kx);
    return 0;
}

long long search_lower_bound(int m, int k) {
    if (binomial(m, k) <= 1) return 0;
    // Complementation is a signature-affine bijection between k-subsets
    // and (m-k)-subsets, so both sides bound sigma(m,k).
    long long best = std::max(one_sided_lower_bound(m, k), one_sided_lower_bound(m, m - k));
    // Counting seed: each signature coordinate takes at most k+1 values.
    long long n = binomial(m, k), p = 1, t = 0;
    while (p < n) {
        p *= (k + 1);
        ++t;
    }
    return std::max(best, t);
}

}  // namespace

SigmaResult sigma_exact(int m, int k, bool robust_mode, long long budget) {
    if (m < k || k < 1) throw invalid_parameters("sigma_exact: need m >= k >= 1");
    SigmaResult res;
    res.lower = search_lower_bound(m, k);
    if (k >= 3 && m >= 2 * k - 1) res.upper = upper_bound_value(m, k);
    for (long long t = res.lower;; ++t) {
        long long left = budget >= 0 ? budget - res.nodes : -1;
        if (budget >= 0 && left <= 0) {
            res.status = SearchStatus::budget_exhausted;
            res.lower = t;
            return res;
        }
        auto r = exists_of_size(m, k, static_cast<int>(t), robust_mode, left);
        res.nodes += r.nodes;
        if (r.status == SearchStatus::budget_exhausted) {
            res.status = SearchStatus::budget_exhausted;
            res.lower = t;
            return res;
        }
        if (r.status == SearchStatus::found) {
            res.status = SearchStatus::found;
            res.value = t;
            res.witness = std::move(r.cert);
            res.upper = t;
            return res;
        }
        res.lower = t + 1;
    }
}

std::optional<Certificate> local_search(int m, int k, int t, bool robust_mode,
                                        std::uint64_t seed, long long iterations) {
    if (m < k || k < 1 || t < 1) throw invalid_parameters("local_search: bad parameters");
    const auto universe_sets = enumerate_ksubsets(m, k);
    std::vector<Mask> universe;
    for (const auto& s : universe_sets) universe.push_back(s.mask());
    const int n = static_cast<int>(universe.size());
    if (t > n) throw invalid_parameters("local_search: t exceeds C(m,k)");
    std::vector<Mask> low;
    if (robust_mode) {
        low.push_back(Mask{});
        for (int i = 1; i < k; ++i) {
            auto ms = enumerate_ksubset_masks(m, i);
            low.insert(low.end(), ms.begin(), ms.end());
        }
    }

    std::mt19937_64 rng(seed);
    auto collisions = [&](const std::vector<Mask>& omegas,
                          const std::vector<int>& family) {
        std::vector<Mask> cols;
        for (int i : family) cols.push_back(universe[i]);
        auto keys = detail::signature_keys_serial(cols, omegas);
        const std::size_t stride = cols.size();
        std::vector<std::uint32_t> order(omegas.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
            return std::memcmp(keys.data() + a * stride, keys.data() + b * stride, stride) < 0;
        });
        long long cost = 0;
        for (std::size_t i = 1; i < order.size(); ++i)
            if (std::memcmp(keys.data() + order[i - 1] * stride,
                            keys.data() + order[i] * stride, stride) == 0)
                ++cost;
        return cost;
    };
    auto total_cost = [&](const std::vector<int>& family) {
        long long c = collisions(universe, family);
        if (robust_mode) c += collisions(low, family);
        return c;
    };
    auto random_family = [&] {
        std::vector<int> all(n);
        std::iota(all.begin(), all.end(), 0);
        std::shuffle(all.begin(), all.end(), rng);
        std::vector<int> fam(all.begin(), all.begin() + t);
        std::sort(fam.begin(), fam.end());
        return fam;
    };

    std::vector<int> family = random_family();
    long long cost = total_cost(family);
    long long since_improvement = 0;
    const long long stagnation_limit = 4000;
    for (long long it = 0; it < iterations && cost > 0; ++it) {
        if (since_improvement > stagnation_limit) {
            family = random_family();
            cost = total_cost(family);
            since_improvement = 0;
            continue;
        }
        int pos = static_cast<int>(rng() % t);
        int repl = static_cast<int>(rng() % n);
        if (std::find(family.begin(), family.end(), repl) != family.end()) continue;
        int old = family[pos];
        family[pos] = repl;
        long long c2 = total_cost(family);
        if (c2 <= cost) {
            since_improvement = (c2 < cost) ? 0 : since_improvement + 1;
            cost = c2;
        } else {
            family[pos] = old;
            ++since_improvement;
        }
    }
    if (cost != 0) return std::nullopt;
    std::sort(family.begin(), family.end());
    std::vector<KSubset> sets;
    for (int i : family) sets.push_back(universe_sets[i]);
    Certificate cert(m, k, std::move(sets));
    bool ok = robust_mode ? is_robust(cert) : is_separating(cert);
    if (!ok) throw construction_bug("local_search: zero-cost family failed verification");
    return cert;
}

EnumerationResult irredundant_sizes(int m, int k, long long cap) {
    const auto universe_sets = enumerate_ksubsets(m, k);
    const int n = static_cast<int>(universe_sets.size());
    EnumerationResult res;
    if (n > 62) {
        res.complete = false;
        return res;
    }
    const unsigned long long families = 1ULL << n;
    res.complete = static_cast<long long>(families) <= cap;
    const unsigned long long limit =
        res.complete ? families : static_cast<unsigned long long>(cap);

    auto separating_mask = [&](unsigned long long fam) {
        std::vector<KSubset> sets;
        for (int i = 0; i < n; ++i)
            if ((fam >> i) & 1) sets.push_back(universe_sets[i]);
        return is_separating(Certificate(m, k, std::move(sets)));
    };
    for (unsigned long long fam = 0; fam < limit; ++fam) {
        if (!separating_mask(fam)) continue;
        bool irredundant = true;
        for (int i = 0; i < n && irredundant; ++i)
            if ((fam >> i) & 1)
                if (separating_mask(fam & ~(1ULL << i))) irredundant = false;
        if (irredundant) res.sizes.insert(__builtin_popcountll(fam));
    }
    return res;
}

}  // namespace resolvekit
