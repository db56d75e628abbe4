#pragma once

#include <cstdint>
#include <vector>

#include "ergo/graph.hpp"
#include "ergo/rng.hpp"
#include "ergo/stats.hpp"

namespace ergo {

// Outcome of one stub pairing: loops and parallel edges allowed. Pairs are
// stored with first <= second; a loop at v is (v,v) and adds 2 to deg(v).
struct Multigraph {
    int n = 0;
    std::vector<Edge> edges;

    std::vector<int> degrees() const;
};

struct ConfigStats {
    double lambda = 0.0;
    double predicted_simple = 0.0;  // e^{-lambda - lambda^2}
    double empirical_simple = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t simple_count = 0;
    Interval ci;  // Wilson 95% on the empirical fraction
};

// Uniform perfect matching of the stubs (shuffle, then pair consecutive
// entries). Every one of the (2E-1)!! matchings is equally likely.
Multigraph pair_stubs(const std::vector<int>& degrees, Rng& rng);

bool is_simple(const Multigraph& m);

// Drops loops, collapses parallel edges.
Graph erase(const Multigraph& m);

// Repeated pairing until simple; uniform over simple graphs with this
// degree sequence. Throws rejection_error after max_tries failures.
Graph sample_simple(const std::vector<int>& degrees, Rng& rng, std::uint64_t max_tries);

// ceil(100 e^{lambda + lambda^2}), capped at 1e7.
std::uint64_t default_max_tries(const std::vector<int>& degrees);

// lambda = sum d_i (d_i - 1) / (4E). Needs E > 0.
double lambda_stat(const std::vector<int>& degrees);

// Monte-Carlo simple-graph probability with its Wilson interval and the
// e^{-lambda-lambda^2} prediction. E = 0 degenerates to lambda = 0.
ConfigStats simple_fraction(const std::vector<int>& degrees, std::uint64_t trials, Rng& rng);

}  // namespace ergo
