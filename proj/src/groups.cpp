#include "resolvekit/groups.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace resolvekit {

Permutation::Permutation(std::vector<int> img) : images(std::move(img)) {
    const int n = degree();
    std::vector<char> seen(n + 1, 0);
    for (int v : images) {
        if (v < 1 || v > n || seen[v]) throw invalid_parameters("permutation: not a bijection");
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    return Permutation(std::move(img));
}

Permutation Permutation::compose(const Permutation& other) const {
    if (degree() != other.degree()) throw invalid_parameters("permutation: degree mismatch");
    std::vector<int> img(degree());
    for (int p = 1; p <= degree(); ++p) img[p - 1] = other.apply(apply(p));
    Permutation out;
    out.images = std::move(img);  // bijection by construction
    return out;
}

Permutation Permutation::inverse() const {
    std::vector<int> img(degree());
    for (int p = 1; p <= degree(); ++p) img[apply(p) - 1] = p;
    Permutation out;
    out.images = std::move(img);
    return out;
}

bool Permutation::is_identity() const {
    for (int p = 1; p <= degree(); ++p)
        if (apply(p) != p) return false;
    return true;
}

PermGroup::PermGroup(int n, std::vector<Permutation> gens)
    : degree(n), generators(std::move(gens)) {
    if (n < 1) throw invalid_parameters("group: degree must be positive");
    if (generators.empty()) throw invalid_parameters("group: need at least one generator");
    for (const auto& g : generators)
        if (g.degree() != n) throw invalid_parameters("group: generator degree mismatch");
}

Partition Partition::trivial(int n) { return Partition{n, std::vector<int>(n, 0)}; }

Partition Partition::singletons(int n) {
    Partition p{n, std::vector<int>(n)};
    std::iota(p.block_id.begin(), p.block_id.end(), 0);
    return p;
}

Partition Partition::from_ids(int n, std::vector<int> ids) {
    if (static_cast<int>(ids.size()) != n) throw invalid_parameters("partition: size mismatch");
    std::map<int, int> renumber;
    Partition p{n, std::move(ids)};
    for (int& id : p.block_id) {
        auto [it, fresh] = renumber.try_emplace(id, static_cast<int>(renumber.size()));
        (void)fresh;
        id = it->second;
    }
    return p;
}

int Partition::block_count() const {
    return block_id.empty() ? 0 : 1 + *std::max_element(block_id.begin(), block_id.end());
}

std::vector<std::vector<int>> Partition::blocks() const {
    std::vector<std::vector<int>> out(block_count());
    for (int i = 0; i < n; ++i) out[block_id[i]].push_back(i + 1);
    return out;
}

int Partition::largest_block() const {
    std::vector<int> size(block_count(), 0);
    int best = 0;
    for (int id : block_id) best = std::max(best, ++size[id]);
    return best;
}

Partition partition_meet(const Partition& p1, const Partition& p2) {
    if (p1.n != p2.n) throw invalid_parameters("partition meet: ground size mismatch");
    std::map<std::pair<int, int>, int> renumber;
    std::vector<int> ids(p1.n);
    for (int i = 0; i < p1.n; ++i) {
        auto key = std::make_pair(p1.block_id[i], p2.block_id[i]);
        auto [it, fresh] = renumber.try_emplace(key, static_cast<int>(renumber.size()));
        (void)fresh;
        ids[i] = it->second;
    }
    return Partition{p1.n, std::move(ids)};
}

std::vector<std::vector<int>> orbital_table(const PermGroup& g) {
    const int n = g.degree;
    std::vector<std::vector<int>> table(n, std::vector<int>(n, -1));
    int next_id = 0;
    std::queue<std::pair<int, int>> bfs;
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
            if (table[a - 1][b - 1] >= 0) continue;
            const int id = next_id++;
            table[a - 1][b - 1] = id;
            bfs.emplace(a, b);
            while (!bfs.empty()) {
                auto [x, y] = bfs.front();
                bfs.pop();
                for (const auto& gen : g.generators) {
                    int xi = gen.apply(x), yi = gen.apply(y);
                    if (table[xi - 1][yi - 1] < 0) {
                        table[xi - 1][yi - 1] = id;
                        bfs.emplace(xi, yi);
                    }
                }
            }
        }
    return table;
}

bool is_transitive(const PermGroup& g) {
    std::vector<char> seen(g.degree + 1, 0);
    std::queue<int> bfs;
    seen[1] = 1;
    bfs.push(1);
    int count = 1;
    while (!bfs.empty()) {
        int x = bfs.front();
        bfs.pop();
        for (const auto& gen : g.generators) {
            int y = gen.apply(x);
            if (!seen[y]) {
                seen[y] = 1;
                ++count;
                bfs.push(y);
            }
        }
    }
    return count == g.degree;
}

Partition orbital_partition(const PermGroup& g, int omega) {
    if (omega < 1 || omega > g.degree)
        throw invalid_parameters("orbital_partition: point out of range");
    auto table = orbital_table(g);
    return Partition::from_ids(g.degree, table[omega - 1]);
}

int rank(const PermGroup& g) {
    if (!is_transitive(g)) throw invalid_parameters("rank: group is not transitive");
    return orbital_partition(g, 1).block_count();
}

bool is_separating_group(const PermGroup& g, const std::vector<int>& s) {
    auto table = orbital_table(g);
    Partition acc = Partition::trivial(g.degree);
    for (int p : s) {
        if (p < 1 || p > g.degree)
            throw invalid_parameters("is_separating_group: point out of range");
        acc = partition_meet(acc, Partition::from_ids(g.degree, table[p - 1]));
    }
    return acc.is_singletons();
}

namespace {

struct GroupBudgetExceeded {};

struct GroupSearcher {
    int n;
    const std::vector<Partition>& pi;  // stabilizer partitions, per point
    std::vector<int> gain;             // n - largest block, per point
    long long budget;
    long long nodes = 0;
    std::vector<int> chosen;
    std::optional<std::vector<int>> witness;

    // Meeting a partition with one of p parts gives at most p + gain new
    // parts, where gain = n - (its largest block): every block of the
    // chosen partition beyond its largest contributes at least one point.
    bool dfs(const Partition& acc, int next, int remaining) {
        if (budget >= 0 && ++nodes > budget) throw GroupBudgetExceeded{};
        if (acc.is_singletons()) {
            witness = chosen;
            return true;
        }
        if (remaining == 0) return false;
        // Best-case total gain from the strongest `remaining` picks left.
        std::vector<int> best;
        for (int p = next; p <= n; ++p) best.push_back(gain[p - 1]);
        std::sort(best.begin(), best.end(), std::greater<>());
        long long bound = acc.block_count();
        for (int i = 0; i < remaining && i < static_cast<int>(best.size()); ++i)
            bound += best[i];
        if (bound < n) return false;
        for (int p = next; p <= n - remaining + 1; ++p) {
            Partition merged = partition_meet(acc, pi[p - 1]);
            // A pick that refines nothing now refines nothing later either.
            if (merged.block_count() == acc.block_count()) continue;
            chosen.push_back(p);
            if (dfs(merged, p + 1, remaining - 1)) return true;
            chosen.pop_back();
        }
        return false;
    }
};

}  // namespace

SigmaGroupResult sigma_group(const PermGroup& g, long long budget) {
    const int n = g.degree;
    auto table = orbital_table(g);
    std::vector<Partition> pi;
    pi.reserve(n);
    for (int p = 1; p <= n; ++p) pi.push_back(Partition::from_ids(n, table[p - 1]));

    SigmaGroupResult res;
    if (Partition::trivial(n).is_singletons()) {  // n == 1
        res.value = 0;
        res.witness = std::vector<int>{};
        res.lower = res.upper = 0;
        return res;
    }
    GroupSearcher searcher{n, pi, {}, budget, 0, {}, {}};
    for (const auto& part : pi) searcher.gain.push_back(n - part.largest_block());
    for (int t = 1; t <= n; ++t) {
        searcher.chosen.clear();
        try {
            if (searcher.dfs(Partition::trivial(n), 1, t)) {
                res.value = t;
                res.witness = searcher.witness;
                res.lower = res.upper = t;
                res.nodes = searcher.nodes;
                return res;
            }
        } catch (const GroupBudgetExceeded&) {
            res.status = GroupSearchStatus::budget_exhausted;
            res.lower = t;
            res.upper = n;  // a full point set always separates a faithful action
            res.value = t;
            res.nodes = searcher.nodes;
            return res;
        }
    }
    throw construction_bug("sigma_group: no separating point set exists");
}

std::vector<Permutation> enumerate_group(const PermGroup& g, long long order_cap) {
    std::set<Permutation> elems;
    std::queue<Permutation> bfs;
    Permutation id = Permutation::identity(g.degree);
    elems.insert(id);
    bfs.push(id);
    while (!bfs.empty()) {
        Permutation x = bfs.front();
        bfs.pop();
        for (const auto& gen : g.generators) {
            Permutation y = x.compose(gen);
            if (elems.insert(y).second) {
                if (static_cast<long long>(elems.size()) > order_cap)
                    throw capacity_error("group enumeration: order cap exceeded");
                bfs.push(y);
            }
        }
    }
    return {elems.begin(), elems.end()};
}

bool is_base(const PermGroup& g, const std::vector<int>& s, long long order_cap) {
    for (int p : s)
        if (p < 1 || p > g.degree) throw invalid_parameters("is_base: point out of range");
    for (const auto& elem : enumerate_group(g, order_cap)) {
        if (elem.is_identity()) continue;
        bool fixes_all = true;
        for (int p : s)
            if (elem.apply(p) != p) {
                fixes_all = false;
                break;
            }
        if (fixes_all) return false;
    }
    return true;
}

namespace {

// Orbits of a set of permutations (not necessarily a closed group) on 1..n.
Partition orbits_of(const std::vector<Permutation>& elems, int n) {
    std::vector<int> ids(n, -1);
    int next_id = 0;
    std::queue<int> bfs;
    for (int start = 1; start <= n; ++start) {
        if (ids[start - 1] >= 0) continue;
        ids[start - 1] = next_id;
        bfs.push(start);
        while (!bfs.empty()) {
            int x = bfs.front();
            bfs.pop();
            for (const auto& e : elems) {
                int y = e.apply(x);
                if (ids[y - 1] < 0) {
                    ids[y - 1] = next_id;
                    bfs.push(y);
                }
            }
        }
        ++next_id;
    }
    return Partition::from_ids(n, std::move(ids));
}

// Induced permutation of a group element on the blocks of a partition.
std::vector<int> induced_on_blocks(const Permutation& e,
                                   const std::vector<std::vector<int>>& blocks,
                                   const std::vector<int>& block_of) {
    std::vector<int> img(blocks.size());
    for (std::size_t b = 0; b < blocks.size(); ++b)
        img[b] = block_of[e.apply(blocks[b][0]) - 1] + 1;
    return img;
}

// Rank-2 test for an element set acting on a block: the pair orbits of
// the restricted action are exactly the diagonal and the rest.
bool two_transitive_on(const std::vector<Permutation>& elems, const std::vector<int>& block) {
    const int sz = static_cast<int>(block.size());
    if (sz == 1) return true;
    std::map<int, int> pos;
    for (int i = 0; i < sz; ++i) pos[block[i]] = i;
    // Orbit of the ordered pair (block[0], block[1]) must cover all
    // off-diagonal pairs.
    std::set<std::pair<int, int>> seen{{0, 1}};
    std::queue<std::pair<int, int>> bfs;
    bfs.emplace(0, 1);
    while (!bfs.empty()) {
        auto [a, b] = bfs.front();
        bfs.pop();
        for (const auto& e : elems) {
            auto pa = pos.find(e.apply(block[a]));
            auto pb = pos.find(e.apply(block[b]));
            if (pa == pos.end() || pb == pos.end()) continue;  // not block-preserving
            auto p = std::make_pair(pa->second, pb->second);
            if (seen.insert(p).second) bfs.push(p);
        }
    }
    return static_cast<long long>(seen.size()) ==
           static_cast<long long>(sz) * (sz - 1);
}

}  // namespace

ExtremalReport verify_extremal_structure(const PermGroup& g, long long order_cap,
                                         long long budget) {
    if (!is_transitive(g))
        throw invalid_parameters("verify_extremal_structure: group is not transitive");
    ExtremalReport rep;
    rep.n = g.degree;
    rep.r = rank(g);
    auto sg = sigma_group(g, budget);
    if (sg.status != GroupSearchStatus::found)
        throw capacity_error("verify_extremal_structure: search budget exhausted");
    rep.sigma = sg.value;
    rep.extremal = (rep.sigma == rep.n - rep.r + 1);
    auto elems = enumerate_group(g, order_cap);
    rep.regular = (static_cast<long long>(elems.size()) == rep.n);
    if (!rep.extremal || rep.regular) return rep;

    rep.structure_checked = true;
    // Blocks are the orbits of the subgroup generated by all elements
    // fixing at least one point; those elements already generate it.
    std::vector<Permutation> stab_elems;
    for (const auto& e : elems) {
        if (e.is_identity()) continue;
        for (int p = 1; p <= g.degree; ++p)
            if (e.apply(p) == p) {
                stab_elems.push_back(e);
                break;
            }
    }
    Partition sigma_blocks =
        stab_elems.empty() ? Partition::singletons(g.degree) : orbits_of(stab_elems, g.degree);
    rep.block_system = sigma_blocks.blocks();
    rep.block_count_matches = (sigma_blocks.block_count() == rep.r - 1);

    const auto blocks = rep.block_system;
    std::set<std::vector<int>> induced;
    bool faithful_blocks_trivial = true;
    for (const auto& e : elems) {
        auto img = induced_on_blocks(e, blocks, sigma_blocks.block_id);
        if (img[0] == 1) {  // fixes the first block
            for (std::size_t b = 0; b < blocks.size(); ++b)
                if (img[b] != static_cast<int>(b) + 1) faithful_blocks_trivial = false;
        }
        induced.insert(std::move(img));
    }
    // Regular induced action: transitive on blocks and trivial block stabilizer.
    std::set<int> first_block_images;
    for (const auto& img : induced) first_block_images.insert(img[0]);
    rep.action_on_blocks_regular =
        faithful_blocks_trivial &&
        static_cast<int>(first_block_images.size()) == static_cast<int>(blocks.size());

    rep.blocks_two_transitive = true;
    for (const auto& block : blocks) {
        std::vector<Permutation> setwise;
        std::set<int> members(block.begin(), block.end());
        for (const auto& e : elems) {
            bool preserves = true;
            for (int p : block)
                if (!members.count(e.apply(p))) {
                    preserves = false;
                    break;
                }
            if (preserves) setwise.push_back(e);
        }
        if (!two_transitive_on(setwise, block)) rep.blocks_two_transitive = false;
    }
    return rep;
}

IrredundantGroupResult irredundant_group_sizes(const PermGroup& g, long long cap) {
    const int n = g.degree;
    IrredundantGroupResult out;
    if (n > 62 || (1LL << n) > cap) out.partial = true;
    const long long limit = out.partial ? cap : (1LL << n);
    auto table = orbital_table(g);
    std::vector<Partition> pi;
    for (int p = 1; p <= n; ++p) pi.push_back(Partition::from_ids(n, table[p - 1]));
    auto separating = [&](long long mask) {
        Partition acc = Partition::trivial(n);
        for (int p = 0; p < n; ++p)
            if (mask >> p & 1) acc = partition_meet(acc, pi[p]);
        return acc.is_singletons();
    };
    std::set<int> sizes;
    for (long long mask = 1; mask < limit; ++mask) {
        if (!separating(mask)) continue;
        bool irredundant = true;
        for (int p = 0; p < n && irredundant; ++p)
            if (mask >> p & 1 && separating(mask & ~(1LL << p))) irredundant = false;
        if (irredundant) sizes.insert(std::popcount(static_cast<unsigned long long>(mask)));
    }
    out.sizes.assign(sizes.begin(), sizes.end());
    return out;
}

PermGroup cyclic_group(int n) {
    if (n < 1) throw invalid_parameters("cyclic_group: n >= 1");
    std::vector<int> rot(n);
    for (int i = 0; i < n; ++i) rot[i] = i % n + 1 == n ? 1 : i + 2;
    return PermGroup(n, {Permutation(std::move(rot))});
}

PermGroup dihedral_group(int n) {
    if (n < 3) throw invalid_parameters("dihedral_group: n >= 3");
    std::vector<int> rot(n), refl(n);
    for (int i = 0; i < n; ++i) {
        rot[i] = (i + 1) % n + 1;
        refl[i] = ((2 - i) % n + n) % n + 1;
    }
    return PermGroup(n, {Permutation(std::move(rot)), Permutation(std::move(refl))});
}

PermGroup symmetric_group(int n) {
    if (n < 2) throw invalid_parameters("symmetric_group: n >= 2");
    std::vector<int> rot(n), swap01(n);
    for (int i = 0; i < n; ++i) {
        rot[i] = (i + 1) % n + 1;
        swap01[i] = i + 1;
    }
    swap01[0] = 2;
    swap01[1] = 1;
    return PermGroup(n, {Permutation(std::move(swap01)), Permutation(std::move(rot))});
}

PermGroup alternating_group(int n) {
    if (n < 3) throw invalid_parameters("alternating_group: n >= 3");
    std::vector<int> three(n), cyc(n);
    std::iota(three.begin(), three.end(), 1);
    three[0] = 2;
    three[1] = 3;
    three[2] = 1;
    std::iota(cyc.begin(), cyc.end(), 1);
    if (n % 2 == 1) {
        for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n + 1;  // (1 2 ... n)
    } else {
        for (int i = 1; i < n; ++i) cyc[i] = (i) % (n - 1) + 2;  // (2 3 ... n)
        cyc[n - 1] = 2;
    }
    return PermGroup(n, {Permutation(std::move(three)), Permutation(std::move(cyc))});
}

PermGroup johnson_action(int m, int k, long long degree_cap) {
    if (k < 1 || k >= m) throw invalid_parameters("johnson_action: need 1 <= k < m");
    long long deg = binomial(m, k);
    if (deg > degree_cap) throw capacity_error("johnson_action: degree cap exceeded");
    auto subsets = enumerate_ksubsets(m, k);  // lex order
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < subsets.size(); ++i)
        index[subsets[i].members] = static_cast<int>(i);
    auto induce = [&](auto point_map) {
        std::vector<int> img(subsets.size());
        for (std::size_t i = 0; i < subsets.size(); ++i) {
            std::vector<int> mapped;
            for (int p : subsets[i].members) mapped.push_back(point_map(p));
            std::sort(mapped.begin(), mapped.end());
            img[i] = index.at(mapped) + 1;
        }
        return Permutation(std::move(img));
    };
    auto transposition = induce([](int p) { return p == 1 ? 2 : p == 2 ? 1 : p; });
    auto cycle = induce([m](int p) { return p % m + 1; });
    return PermGroup(static_cast<int>(deg), {transposition, cycle});
}

}  // namespace resolvekit
