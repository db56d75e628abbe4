#pragma once

#include <cstdint>
#include <vector>

#include "ergo/graph.hpp"
#include "ergo/rng.hpp"
#include "ergo/stats.hpp"

namespace ergo {

struct ResilienceReport {
    std::vector<double> p_grid;
    std::vector<double> disconnect_prob;
    std::vector<double> ci_low;
    std::vector<double> ci_high;
    std::vector<double> isolation_bound;      // sum_i p^{d_i}, capped at 1
    std::vector<double> isolation_bound_raw;  // uncapped sum
    std::vector<double> isolated_freq;        // fraction of trials with an isolated vertex
    std::uint64_t trials = 0;
    bool coupled = true;
};

struct Thresholds {
    double proved = 0.0;         // e^{-1/(c(1-delta))}
    double isolated_node = 0.0;  // e^{-1/c}
    double er = 0.0;             // max(0, (c-1)/c)
};

// Each edge removed independently with probability p; vertex set kept.
Graph fail_edges(const Graph& g, double p, Rng& rng);

// Monte-Carlo disconnection probabilities over a failure grid. With
// coupled=true one uniform per edge is thresholded against every p, so
// each trial's indicators are monotone in p exactly.
ResilienceReport disconnect_probability(const Graph& g, const std::vector<double>& p_grid,
                                        std::uint64_t trials, Rng& rng, bool coupled);

double isolation_bound_raw(const std::vector<int>& degrees, double p);
double isolation_bound(const std::vector<int>& degrees, double p);  // capped at 1

// Needs delta_tilde in [0,1); callers clamp empirical values first.
Thresholds thresholds(double c, double delta_tilde);

// Uniform simple graph with exactly E edges, the beta = 0 baseline.
Graph er_sample(int n, std::size_t target_edges, Rng& rng);

}  // namespace ergo
