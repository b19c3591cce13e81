#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "resolvekit/core.hpp"

namespace resolvekit {

inline constexpr int girth_infinity = -1;  // forests have no cycle

// Undirected simple graph, vertices 1..vertex_count.
struct SimpleGraph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;  // normalized u < v, sorted

    SimpleGraph() = default;
    SimpleGraph(int n, std::vector<std::pair<int, int>> e);
    int edge_count() const { return static_cast<int>(edges.size()); }
    bool is_regular(int degree) const;
};

// Exact girth by BFS from every vertex; girth_infinity for forests.
int girth(const SimpleGraph& g);

// Built-in graph fixtures.
SimpleGraph petersen_graph();
SimpleGraph mcgee_graph();

// Stored certificate fixtures.
Certificate example1_certificate();    // 8 triples, separating on [13]
Certificate corollary2_certificate();  // 6 triples, robust on [9]
Certificate q2_certificate();          // 16 triples, separating on [26]

// Ground-size extension: sigma(m+1,k) <= sigma(m,k) + floor(k/2)+1.
// Adds floor(k/2)+1 subsets built from sets[alpha_index]; re-verified.
Certificate extend_plus_one(const Certificate& cert, int alpha_index = 0);

// Disjoint union of two robust certificates (second one shifted);
// robustness is preserved and re-verified.
Certificate compose_robust(const Certificate& c1, const Certificate& c2);

// Certificate from a k-regular graph of girth >= 2k+1: ground points are
// the edges, one k-subset per vertex (its incident edges). Robust.
Certificate from_regular_graph(const SimpleGraph& g, int k);

// k-regular graph of girth >= 2k+1: the built-in McGee graph for k=3,
// otherwise randomized pairing-model generation with a girth test.
std::optional<SimpleGraph> find_regular_high_girth(int k, int max_vertices,
                                                   std::uint64_t seed);

// The 13q-point, 8q-set separating family (k=3) encoded by the
// structured hypergraph; stored fixtures for q=1,2. Always re-verified.
Certificate johnson3_certificate(int q);

// Upper-bound pipeline: base blocks composed/extended up to ground size m.
Certificate upper_bound_certificate(int m, int k);

}  // namespace resolvekit
