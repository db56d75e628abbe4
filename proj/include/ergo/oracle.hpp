#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ergo/graph.hpp"

namespace ergo {

// Brute-force census of all (2E-1)!! stub matchings of a degree sequence.
// simple_realizations maps each simple graph (sorted edge list) to the
// number of matchings that realize it.
struct MatchingCensus {
    std::uint64_t total = 0;
    std::uint64_t simple = 0;
    std::map<std::vector<Edge>, std::uint64_t> simple_realizations;
};

// Guarded at (2E-1)!! <= 1e7 (2E <= 16).
MatchingCensus enumerate_matchings(const std::vector<int>& degrees);

// (k)!! for odd k; (−1)!! = 1.
std::uint64_t double_factorial(long long k);

// Slow reference for the tilted-law normalizer and moments: long double
// accumulation over a window three times wider than the production one.
struct OracleMoments {
    double log_F = 0.0;
    double mean = 0.0;
    double variance = 0.0;
};
OracleMoments oracle_moments(double beta, double gamma, int n);

// Wide-window discrete-Gaussian mgf reference.
double oracle_psi(double theta, double beta);

// One named check from the self-validation suite.
struct ValidationResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

// Deterministic oracle suite: frozen high-precision constants, matching
// censuses, and cross-implementation agreement. Used by the validate
// subcommand; any failure there maps to the oracle exit code.
std::vector<ValidationResult> run_validation();

}  // namespace ergo
