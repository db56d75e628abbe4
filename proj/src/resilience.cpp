#include "ergo/resilience.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ergo/errors.hpp"

namespace ergo {

namespace {

void check_probability(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw input_error("failure probability must lie in [0,1]");
}

// Union-find over vertices, path-halving + union by size.
class Dsu {
public:
    explicit Dsu(int n) : parent_(static_cast<std::size_t>(n)), size_(static_cast<std::size_t>(n), 1) {
        std::iota(parent_.begin(), parent_.end(), 0);
        components_ = n;
    }
    int find(int x) {
        while (parent_[static_cast<std::size_t>(x)] != x) {
            parent_[static_cast<std::size_t>(x)] =
                parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
            x = parent_[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size_[static_cast<std::size_t>(a)] < size_[static_cast<std::size_t>(b)]) std::swap(a, b);
        parent_[static_cast<std::size_t>(b)] = a;
        size_[static_cast<std::size_t>(a)] += size_[static_cast<std::size_t>(b)];
        --components_;
    }
    int components() const { return components_; }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
    int components_ = 0;
};

}  // namespace

Graph fail_edges(const Graph& g, double p, Rng& rng) {
    check_probability(p);
    Graph out(g.order());
    for (const auto& [u, v] : g.edges())
        if (!(uniform01(rng) < p)) out.add_edge(u, v);
    return out;
}

ResilienceReport disconnect_probability(const Graph& g, const std::vector<double>& p_grid,
                                        std::uint64_t trials, Rng& rng, bool coupled) {
    if (trials == 0) throw input_error("disconnect probability needs at least one trial");
    for (double p : p_grid) check_probability(p);

    const int n = g.order();
    const auto edges = g.edges();
    ResilienceReport report;
    report.p_grid = p_grid;
    report.trials = trials;
    report.coupled = coupled;

    const auto degrees = g.degrees();
    for (double p : p_grid) {
        report.isolation_bound_raw.push_back(isolation_bound_raw(degrees, p));
        report.isolation_bound.push_back(isolation_bound(degrees, p));
    }

    std::vector<std::uint64_t> disconnects(p_grid.size(), 0);
    std::vector<std::uint64_t> isolations(p_grid.size(), 0);
    std::vector<double> draws(edges.size());
    std::vector<int> incident(static_cast<std::size_t>(n));
    for (std::uint64_t t = 0; t < trials; ++t) {
        if (coupled)
            for (double& u : draws) u = uniform01(rng);
        for (std::size_t k = 0; k < p_grid.size(); ++k) {
            if (!coupled)
                for (double& u : draws) u = uniform01(rng);
            const double p = p_grid[k];
            Dsu dsu(n);
            std::fill(incident.begin(), incident.end(), 0);
            for (std::size_t e = 0; e < edges.size(); ++e) {
                if (draws[e] < p) continue;  // edge failed
                dsu.unite(edges[e].first, edges[e].second);
                ++incident[static_cast<std::size_t>(edges[e].first)];
                ++incident[static_cast<std::size_t>(edges[e].second)];
            }
            if (n > 0 && dsu.components() != 1) ++disconnects[k];
            bool any_isolated = false;
            for (int v = 0; v < n && !any_isolated; ++v)
                if (incident[static_cast<std::size_t>(v)] == 0) any_isolated = true;
            if (any_isolated) ++isolations[k];
        }
    }
    for (std::size_t k = 0; k < p_grid.size(); ++k) {
        report.disconnect_prob.push_back(static_cast<double>(disconnects[k]) /
                                         static_cast<double>(trials));
        const Interval ci = wilson_interval(disconnects[k], trials);
        report.ci_low.push_back(ci.low);
        report.ci_high.push_back(ci.high);
        report.isolated_freq.push_back(static_cast<double>(isolations[k]) /
                                       static_cast<double>(trials));
    }
    return report;
}

double isolation_bound_raw(const std::vector<int>& degrees, double p) {
    check_probability(p);
    double sum = 0.0;
    for (int d : degrees) sum += std::pow(p, static_cast<double>(d));
    return sum;
}

double isolation_bound(const std::vector<int>& degrees, double p) {
    return std::min(1.0, isolation_bound_raw(degrees, p));
}

Thresholds thresholds(double c, double delta_tilde) {
    if (!(c > 0.0)) throw input_error("mean coefficient c must be positive");
    if (!(delta_tilde >= 0.0 && delta_tilde < 1.0))
        throw input_error("delta_tilde must lie in [0,1)");
    Thresholds t;
    t.proved = std::exp(-1.0 / (c * (1.0 - delta_tilde)));
    t.isolated_node = std::exp(-1.0 / c);
    t.er = std::max(0.0, (c - 1.0) / c);
    return t;
}

Graph er_sample(int n, std::size_t target_edges, Rng& rng) {
    return uniform_gnm(n, target_edges, rng);
}

}  // namespace ergo
