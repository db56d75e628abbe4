#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ergo/rng.hpp"

namespace ergo {

using Edge = std::pair<int, int>;  // normalized u < v

// Simple undirected labelled graph on vertices 0..n-1. Sorted neighbor
// lists give O(log d) membership and ordered iteration. No loops, no
// parallel edges; adjacency stays symmetric by construction.
class Graph {
public:
    explicit Graph(int n);

    int order() const { return n_; }
    std::size_t edge_count() const { return edge_count_; }

    int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }

    bool has_edge(int u, int v) const;

    // Both mutators validate range/loop and keep the edge set simple.
    void add_edge(int u, int v);     // input_error if present or invalid
    void remove_edge(int u, int v);  // input_error if absent or invalid

    // All edges with u < v, lexicographically sorted.
    std::vector<Edge> edges() const;

    std::vector<int> degrees() const;

private:
    void check_vertex(int v) const;

    int n_;
    std::vector<std::vector<int>> adj_;
    std::size_t edge_count_ = 0;
};

struct DegreeSequence {
    std::vector<int> degrees;
    double mean = 0.0;
    double variance = 0.0;
    int d_min = 0;
    int d_max = 0;
    long long total = 0;  // sum of degrees = 2E
};

struct CutStats {
    std::size_t subset_size = 0;  // |U|
    long long internal = 0;       // e_U
    long long crossing = 0;       // e_{U,U^c}
    long long volume = 0;         // Vol(U)
};

// Strict constructor: rejects out-of-range endpoints, loops and duplicates.
Graph graph_from_edge_list(int n, const std::vector<Edge>& edges);

// Sum of squared degrees, exact in integer arithmetic.
long long energy(const Graph& g);
long long energy(const std::vector<int>& degrees);

DegreeSequence degree_stats(const Graph& g);
DegreeSequence degree_stats(std::vector<int> degrees);

// U given as vertex indices; duplicates or out-of-range entries are rejected.
CutStats cut_stats(const Graph& g, const std::vector<int>& subset);

// Single BFS from vertex 0; n = 0 counts as connected.
bool is_connected(const Graph& g);

// Uniform simple graph with exactly E edges (uniform E-subset of the
// n(n-1)/2 vertex pairs).
Graph uniform_gnm(int n, std::size_t target_edges, Rng& rng);

// Pair-index <-> (u,v) mapping over the M = n(n-1)/2 unordered pairs,
// row-major with u < v.
std::uint64_t pair_count(int n);
std::uint64_t pair_index(int n, int u, int v);
Edge pair_from_index(int n, std::uint64_t index);

}  // namespace ergo
