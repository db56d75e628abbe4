#pragma once

#include <cstdint>
#include <vector>

#include "ergo/graph.hpp"
#include "ergo/rng.hpp"

namespace ergo {

// Tilted degree law P(D=j) proportional to e^{-beta j^2 + gamma j ln n} / j!
// on j = 0,1,2,...  All derived quantities are computed in log space.
struct DegreeLawParams {
    double beta = 0.0;
    double gamma = 0.0;
    int n = 0;       // node count the tilt refers to
    double c = 0.0;  // target mean coefficient when calibrated, else 0

    // derived
    double log_n = 0.0;
    double log_F = 0.0;  // log normalizer; F itself can overflow for large n
    double x_gamma = 0.0;  // real root of -log(x+1) - (2x+1)beta + gamma ln n = 0
    int k_gamma = 0;       // pmf mode, floor(x_gamma) + 1 (clamped at 0)
    double alpha = 0.0;    // 2 beta (x_gamma - k_gamma + 1/2), lies in [-beta, beta]
    double mean = 0.0;
    double variance = 0.0;
    int window_hi = 0;  // truncation bound for series work

    double F() const;  // exp(log_F); finite at small n only
};

struct ConcentrationReport {
    double alpha1 = 0.0;
    double alpha2 = 0.0;
    bool in_A = false;   // sum d_i equals the rounded target 2E
    bool in_A1 = false;  // every d_i within [-sqrt(a1 ln n), +sqrt(a2 ln n)] of c ln n
    bool in_A2 = false;  // every d_i <= n^{1/4}
    double max_pos_dev = 0.0;  // extreme deviations in units of sqrt(ln n)
    double max_neg_dev = 0.0;
};

// One conditioned degree sequence plus the sampling effort it took.
struct ConditionedSample {
    std::vector<int> degrees;
    std::uint64_t attempts = 0;  // i.i.d. batches drawn during rejection
    bool used_fallback = false;  // exchange-chain path taken
};

// Exact root of the mode equation, by bisection on a monotone h.
double x_gamma_exact(double beta, double gamma, int n);

// Asymptotic companion (1/2beta)(gamma ln n - ln ln n - ln(gamma/2beta) - beta);
// agrees with the exact root up to o(1).
double x_gamma_closed_form(double beta, double gamma, int n);

// Moment generating function of the discrete Gaussian on the integers:
// sum_j e^{theta j - beta j^2} / sum_j e^{-beta j^2}.
double psi(double theta, double beta);

// Builds params with all derived fields (normalizer, mode, moments).
DegreeLawParams make_params(double beta, double gamma, int n, double c = 0.0);

double log_pmf(int j, const DegreeLawParams& params);
double pmf(int j, const DegreeLawParams& params);

// Finds gamma with |mean - c ln n| <= 1e-6 by bisection (mean is increasing
// in gamma).
DegreeLawParams calibrate_gamma(double beta, double c, int n);

// Even total degree closest to c n ln n: 2 * round(c n ln(n) / 2).
long long target_total(double c, int n);

// Alias-table sampler over the truncation window, plus conditioned sampling
// at a fixed total (rejection first, exchange-chain fallback).
class DegreeSampler {
public:
    explicit DegreeSampler(const DegreeLawParams& params);

    int draw(Rng& rng) const;
    std::vector<int> draw_iid(int count, Rng& rng) const;

    // count i.i.d. draws conditioned on an exact sum. Rejection runs for
    // ceil(100 sqrt(count)) batches; on exhaustion the last batch is
    // repaired with +-1 moves and mixed with 10*count exchange steps.
    ConditionedSample sample_conditioned(int count, long long total, Rng& rng) const;

    const DegreeLawParams& params() const { return params_; }

private:
    DegreeLawParams params_;
    std::vector<double> prob_;  // alias table (Vose)
    std::vector<int> alias_;
};

ConcentrationReport concentration_report(const DegreeSequence& d, double c, int n, double alpha1,
                                         double alpha2);

}  // namespace ergo
