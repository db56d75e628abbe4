#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "ergo/graph.hpp"
#include "ergo/rng.hpp"

namespace ergo {

// Edge swap: one present edge out, one absent pair in. Both fields are
// normalized u < v.
struct Move {
    Edge remove;
    Edge add;
};

struct ChainConfig {
    double beta = 0.0;  // energy weight, >= 0
    int n = 0;
    std::size_t target_edges = 0;
    long long steps = 0;
    long long burn_in = -1;   // -1 selects 20 E ceil(ln(E+1))
    long long thinning = -1;  // -1 selects 2 E
    std::uint64_t seed = 0;

    long long resolved_burn_in() const;
    long long resolved_thinning() const;
};

struct ChainStats {
    std::uint64_t proposals = 0;
    std::uint64_t accepted = 0;
    long long initial_energy = 0;
    long long final_energy = 0;
    std::uint64_t snapshots = 0;
};

// Uniform present edge out, uniform absent pair in (rejection over pair
// indices). Needs 0 < E < n(n-1)/2.
Move propose(const Graph& g, Rng& rng);

// Exact change in sum of squared degrees under m, from the incidence counts
// alone. The add endpoints see degrees with the removal already applied.
long long delta_energy(const Graph& g, const Move& m);

// min(1, e^{-beta delta}).
double acceptance_probability(double beta, long long delta);

// One proposal on g; mutates g when accepted, returns the accept flag.
bool step(Graph& g, double beta, Rng& rng);

// Fixed-E swap chain holding its state. The present-edge list is kept
// alongside the graph so one proposal costs O(log d).
class EdgeSwapChain {
public:
    // Uniform E-subset initial state drawn from rng.
    EdgeSwapChain(int n, std::size_t target_edges, double beta, Rng& rng);
    // Start from an explicit state.
    EdgeSwapChain(Graph g, double beta);

    bool step(Rng& rng);

    const Graph& graph() const { return g_; }
    long long energy() const { return energy_; }
    std::uint64_t proposals() const { return proposals_; }
    std::uint64_t accepted() const { return accepted_; }

private:
    Graph g_;
    double beta_;
    std::vector<Edge> edges_;  // present edges, arbitrary order
    long long energy_ = 0;
    std::uint64_t proposals_ = 0;
    std::uint64_t accepted_ = 0;
};

// Runs the chain for cfg.steps proposals. on_energy (when set) sees the
// energy after every step, starting with (0, initial). on_snapshot (when
// set) fires at step burn_in and then every thinning steps.
ChainStats run_chain(const ChainConfig& cfg,
                     const std::function<void(long long, const Graph&)>& on_snapshot,
                     const std::function<void(long long, long long)>& on_energy);

// Exact stationary law over all labelled simple graphs with n nodes and E
// edges, keyed by sorted edge list. Guarded at C(n(n-1)/2, E) <= 1e7.
std::map<std::vector<Edge>, double> enumerate_exact(int n, std::size_t target_edges, double beta);

}  // namespace ergo
