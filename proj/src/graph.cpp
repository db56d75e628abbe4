#include "ergo/graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ergo/errors.hpp"

namespace ergo {

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw input_error("vertex count must be nonnegative");
    adj_.resize(static_cast<std::size_t>(n));
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw input_error("vertex " + std::to_string(v) + " out of range [0," + std::to_string(n_) + ")");
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    const auto& a = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(a.begin(), a.end(), v);
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw input_error("self-loop (" + std::to_string(u) + "," + std::to_string(v) + ")");
    auto& a = adj_[static_cast<std::size_t>(u)];
    auto it = std::lower_bound(a.begin(), a.end(), v);
    if (it != a.end() && *it == v)
        throw input_error("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    a.insert(it, v);
    auto& b = adj_[static_cast<std::size_t>(v)];
    b.insert(std::lower_bound(b.begin(), b.end(), u), u);
    ++edge_count_;
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    auto& a = adj_[static_cast<std::size_t>(u)];
    auto it = std::lower_bound(a.begin(), a.end(), v);
    if (it == a.end() || *it != v)
        throw input_error("edge (" + std::to_string(u) + "," + std::to_string(v) + ") not present");
    a.erase(it);
    auto& b = adj_[static_cast<std::size_t>(v)];
    b.erase(std::lower_bound(b.begin(), b.end(), u));
    --edge_count_;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[static_cast<std::size_t>(u)])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> d(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) d[static_cast<std::size_t>(v)] = degree(v);
    return d;
}

Graph graph_from_edge_list(int n, const std::vector<Edge>& edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    return g;
}

long long energy(const Graph& g) {
    long long e = 0;
    for (int v = 0; v < g.order(); ++v) {
        const long long d = g.degree(v);
        e += d * d;
    }
    return e;
}

long long energy(const std::vector<int>& degrees) {
    long long e = 0;
    for (const int d : degrees) e += static_cast<long long>(d) * d;
    return e;
}

DegreeSequence degree_stats(std::vector<int> degrees) {
    DegreeSequence s;
    s.degrees = std::move(degrees);
    const std::size_t n = s.degrees.size();
    if (n == 0) return s;
    s.d_min = s.degrees[0];
    s.d_max = s.degrees[0];
    for (int d : s.degrees) {
        s.total += d;
        s.d_min = std::min(s.d_min, d);
        s.d_max = std::max(s.d_max, d);
    }
    s.mean = static_cast<double>(s.total) / static_cast<double>(n);
    double acc = 0.0;
    for (int d : s.degrees) {
        const double dev = static_cast<double>(d) - s.mean;
        acc += dev * dev;
    }
    s.variance = acc / static_cast<double>(n);
    return s;
}

DegreeSequence degree_stats(const Graph& g) { return degree_stats(g.degrees()); }

CutStats cut_stats(const Graph& g, const std::vector<int>& subset) {
    std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
    CutStats s;
    for (int v : subset) {
        if (v < 0 || v >= g.order()) throw input_error("subset vertex out of range");
        if (in[static_cast<std::size_t>(v)]) throw input_error("duplicate vertex in subset");
        in[static_cast<std::size_t>(v)] = 1;
    }
    s.subset_size = subset.size();
    for (int u : subset) {
        s.volume += g.degree(u);
        for (int v : g.neighbors(u)) {
            if (in[static_cast<std::size_t>(v)]) {
                if (u < v) ++s.internal;
            } else {
                ++s.crossing;
            }
        }
    }
    return s;
}

bool is_connected(const Graph& g) {
    const int n = g.order();
    if (n == 0) return true;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int v : g.neighbors(u)) {
            if (!seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = 1;
                ++reached;
                stack.push_back(v);
            }
        }
    }
    return reached == n;
}

std::uint64_t pair_count(int n) {
    return static_cast<std::uint64_t>(n) * (static_cast<std::uint64_t>(n) - 1) / 2;
}

std::uint64_t pair_index(int n, int u, int v) {
    if (u > v) std::swap(u, v);
    const std::uint64_t un = static_cast<std::uint64_t>(u);
    const std::uint64_t nn = static_cast<std::uint64_t>(n);
    return un * nn - un * (un + 1) / 2 + static_cast<std::uint64_t>(v - u) - 1;
}

Edge pair_from_index(int n, std::uint64_t index) {
    // Row start for u is u*n - u(u+1)/2; invert with a float guess, then fix up.
    const double nn = static_cast<double>(n);
    int u = static_cast<int>(nn - 0.5 - std::sqrt((nn - 0.5) * (nn - 0.5) - 2.0 * static_cast<double>(index)));
    u = std::max(0, std::min(u, n - 2));
    auto row_start = [n](int r) { return pair_index(n, r, r + 1); };
    while (u > 0 && row_start(u) > index) --u;
    while (u < n - 2 && row_start(u + 1) <= index) ++u;
    const int v = u + 1 + static_cast<int>(index - row_start(u));
    return {u, v};
}

Graph uniform_gnm(int n, std::size_t target_edges, Rng& rng) {
    const std::uint64_t m = pair_count(n);
    if (target_edges > m) throw input_error("edge count exceeds n(n-1)/2");
    Graph g(n);
    for (std::uint64_t idx : sample_distinct(rng, m, target_edges)) {
        const auto [u, v] = pair_from_index(n, idx);
        g.add_edge(u, v);
    }
    return g;
}

}  // namespace ergo
