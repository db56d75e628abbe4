#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ergo/graph.hpp"
#include "ergo/rng.hpp"

namespace ergo {

struct SpectralReport {
    double phi = 0.0;
    std::vector<int> phi_witness;
    double conductance = 0.0;  // Phi
    std::vector<int> conductance_witness;
    double lambda2_L = 0.0;  // second-smallest eigenvalue of D - A
    double lambda2_P = 0.0;  // second-largest eigenvalue of D^{-1} A
    int d_max = 0;
    // Cheeger sandwich outcomes, with 1e-9 slack on each comparison.
    bool laplacian_lower_holds = false;  // phi^2 / (2 d_max) <= lambda2_L
    bool laplacian_upper_holds = false;  // lambda2_L <= 2 phi
    bool walk_lower_holds = false;       // Phi^2 / 8 <= 1 - lambda2_P
    bool walk_upper_holds = false;       // 1 - lambda2_P <= 2 Phi (standard form)
    bool walk_upper_tight_holds = false;  // 1 - lambda2_P <= Phi; fails on C6, reported only
    double dense_tolerance = 1e-9;
    double iterative_tolerance = 1e-6;
};

struct CutProfileBucket {
    int u = 0;
    double min_ratio = 0.0;  // min over sampled U of crossing / (u c ln n)
    std::uint64_t samples = 0;
    bool exhaustive = false;  // bucket additionally minimized over all u-subsets
};

struct CutProfile {
    double c = 0.0;
    std::vector<CutProfileBucket> buckets;
    double empirical_delta = 0.0;  // 1 - min ratio over all buckets
};

// Exact minimum of crossing/|U| over nonempty U with |U| <= n/2, by
// Gray-code subset walk. Ties break toward the smallest bitmask. n <= 24.
std::pair<double, std::vector<int>> brute_expansion(const Graph& g);

// Exact minimum of crossing/Vol(U) over nonempty U with Vol(U) <= E,
// skipping volume-zero subsets. n <= 24, E >= 1.
std::pair<double, std::vector<int>> brute_conductance(const Graph& g);

// Dense symmetric solve up to n = 2048 (abs tol 1e-9), deflated power
// iteration above that (rel tol 1e-6).
double lambda2_laplacian(const Graph& g);

// Second-largest eigenvalue of the walk matrix, via the symmetric
// conjugate D^{-1/2} A D^{-1/2}. Rejects isolated vertices.
double lambda2_walk(const Graph& g);

// Matrix-free paths behind the large-n branch, callable at any n so the two
// routes can be checked against each other.
double lambda2_laplacian_iterative(const Graph& g);
double lambda2_walk_iterative(const Graph& g);

// Exact phi/Phi plus both eigenvalues and the sandwich booleans.
// Connected graphs with n <= 24 only.
SpectralReport cheeger_report(const Graph& g);

// Per-bucket minimum crossing ratios over uniform u-subsets, geometric
// bucket grid {1,2,4,...} plus floor(n/2). Buckets with u <= 12 on n <= 24
// are also minimized exhaustively.
CutProfile cut_profile(const Graph& g, double c, std::uint64_t trials, Rng& rng);

}  // namespace ergo
