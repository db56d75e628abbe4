#include "ergo/degree_law.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ergo/errors.hpp"

namespace ergo {

namespace {

// Unnormalized log weight of Eq-style tilt: -beta j^2 + gamma j ln n - ln j!.
double log_weight(double beta, double gamma, double log_n, int j) {
    const double jd = static_cast<double>(j);
    return -beta * jd * jd + gamma * jd * log_n - std::lgamma(jd + 1.0);
}

// h(x) = -log(x+1) - (2x+1)beta + gamma ln n, strictly decreasing on (-1, inf).
double mode_equation(double x, double beta, double gamma, double log_n) {
    return -std::log(x + 1.0) - (2.0 * x + 1.0) * beta + gamma * log_n;
}

int truncation_window(double beta, int k_gamma) {
    return k_gamma + static_cast<int>(std::ceil(std::sqrt(40.0 / beta))) + 10;
}

void check_law_inputs(double beta, int n) {
    if (!(beta > 0.0)) throw input_error("beta must be positive");
    if (n < 2) throw input_error("node count must be at least 2");
}

}  // namespace

double x_gamma_exact(double beta, double gamma, int n) {
    check_law_inputs(beta, n);
    const double log_n = std::log(static_cast<double>(n));
    double lo = -1.0 + 1e-15;  // h -> +inf at the left edge
    double hi = 1.0;
    int guard = 0;
    while (mode_equation(hi, beta, gamma, log_n) > 0.0) {
        hi *= 2.0;
        if (++guard > 200) throw numeric_error("mode equation bracket expansion failed");
    }
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mode_equation(mid, beta, gamma, log_n) > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double x_gamma_closed_form(double beta, double gamma, int n) {
    check_law_inputs(beta, n);
    if (!(gamma > 0.0)) throw input_error("closed form needs gamma > 0");
    const double log_n = std::log(static_cast<double>(n));
    if (!(log_n > 1.0)) throw input_error("closed form needs ln n > 1");
    return (gamma * log_n - std::log(log_n) - std::log(gamma / (2.0 * beta)) - beta) /
           (2.0 * beta);
}

double psi(double theta, double beta) {
    if (!(beta > 0.0)) throw input_error("beta must be positive");
    const int half = static_cast<int>(std::ceil(std::sqrt(40.0 / beta))) + 10;
    // Complete the square: theta j - beta j^2 peaks near j0 = theta / (2 beta).
    const long long j0 = std::llround(theta / (2.0 * beta));
    double num = 0.0;
    for (long long j = j0 - half; j <= j0 + half; ++j) {
        const double jd = static_cast<double>(j);
        num += std::exp(theta * jd - beta * jd * jd - (theta * theta) / (4.0 * beta));
    }
    double den = 0.0;
    for (long long j = -half; j <= half; ++j) {
        const double jd = static_cast<double>(j);
        den += std::exp(-beta * jd * jd);
    }
    return num * std::exp((theta * theta) / (4.0 * beta)) / den;
}

double DegreeLawParams::F() const { return std::exp(log_F); }

DegreeLawParams make_params(double beta, double gamma, int n, double c) {
    check_law_inputs(beta, n);
    DegreeLawParams p;
    p.beta = beta;
    p.gamma = gamma;
    p.n = n;
    p.c = c;
    p.log_n = std::log(static_cast<double>(n));
    p.x_gamma = x_gamma_exact(beta, gamma, n);
    p.k_gamma = std::max(0, static_cast<int>(std::floor(p.x_gamma)) + 1);
    p.alpha = 2.0 * beta * (p.x_gamma - p.k_gamma + 0.5);
    p.window_hi = truncation_window(beta, p.k_gamma);

    // Mode-relative summation; terms continue past the window until they
    // drop below 1e-16 of the running sum.
    const double log_mode = log_weight(beta, gamma, p.log_n, p.k_gamma);
    const int hard_cap = p.window_hi + 100000;
    double sum = 0.0;
    double sum_j = 0.0;
    double sum_j2 = 0.0;
    int j = 0;
    for (;; ++j) {
        if (j > hard_cap) throw numeric_error("moment series did not converge");
        const double w = std::exp(log_weight(beta, gamma, p.log_n, j) - log_mode);
        sum += w;
        sum_j += w * j;
        sum_j2 += w * static_cast<double>(j) * j;
        if (j >= p.window_hi && w < 1e-16 * sum) break;
    }
    p.log_F = log_mode + std::log(sum);
    p.mean = sum_j / sum;
    p.variance = sum_j2 / sum - p.mean * p.mean;
    return p;
}

double log_pmf(int j, const DegreeLawParams& params) {
    if (j < 0) throw input_error("degree must be nonnegative");
    return log_weight(params.beta, params.gamma, params.log_n, j) - params.log_F;
}

double pmf(int j, const DegreeLawParams& params) { return std::exp(log_pmf(j, params)); }

DegreeLawParams calibrate_gamma(double beta, double c, int n) {
    check_law_inputs(beta, n);
    if (!(c > 0.0)) throw input_error("mean coefficient c must be positive");
    const double log_n = std::log(static_cast<double>(n));
    const double target = c * log_n;
    // Initial guess: gamma with x_gamma = c ln n under the mode equation.
    const double guess = (std::log(c * log_n + 1.0) + (2.0 * c * log_n + 1.0) * beta) / log_n;
    auto mean_at = [&](double gamma) { return make_params(beta, gamma, n).mean; };

    double lo = guess;
    double hi = guess;
    int guard = 0;
    while (mean_at(lo) > target) {
        lo /= 1.5;
        if (++guard > 200) throw numeric_error("calibration bracket expansion failed (low)");
    }
    guard = 0;
    while (mean_at(hi) < target) {
        hi *= 1.5;
        if (++guard > 200) throw numeric_error("calibration bracket expansion failed (high)");
    }
    for (int i = 0; i < 500; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double m = mean_at(mid);
        if (std::abs(m - target) <= 1e-6) {
            DegreeLawParams p = make_params(beta, mid, n, c);
            return p;
        }
        if (m < target)
            lo = mid;
        else
            hi = mid;
    }
    throw numeric_error("calibration bisection did not reach tolerance");
}

long long target_total(double c, int n) {
    if (n < 2) throw input_error("node count must be at least 2");
    if (!(c > 0.0)) throw input_error("mean coefficient c must be positive");
    return 2 * std::llround(c * static_cast<double>(n) * std::log(static_cast<double>(n)) / 2.0);
}

DegreeSampler::DegreeSampler(const DegreeLawParams& params) : params_(params) {
    const int k = params_.window_hi + 1;
    std::vector<double> p(static_cast<std::size_t>(k));
    double mass = 0.0;
    for (int j = 0; j < k; ++j) {
        p[static_cast<std::size_t>(j)] = pmf(j, params_);
        mass += p[static_cast<std::size_t>(j)];
    }
    // Renormalize within the window (deficit is below 1e-14) so the alias
    // construction is exact.
    for (double& x : p) x /= mass;

    prob_.assign(static_cast<std::size_t>(k), 1.0);
    alias_.assign(static_cast<std::size_t>(k), 0);
    std::vector<int> small;
    std::vector<int> large;
    std::vector<double> scaled(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) {
        scaled[static_cast<std::size_t>(j)] = p[static_cast<std::size_t>(j)] * k;
        (scaled[static_cast<std::size_t>(j)] < 1.0 ? small : large).push_back(j);
    }
    while (!small.empty() && !large.empty()) {
        const int s = small.back();
        small.pop_back();
        const int l = large.back();
        large.pop_back();
        prob_[static_cast<std::size_t>(s)] = scaled[static_cast<std::size_t>(s)];
        alias_[static_cast<std::size_t>(s)] = l;
        scaled[static_cast<std::size_t>(l)] += scaled[static_cast<std::size_t>(s)] - 1.0;
        (scaled[static_cast<std::size_t>(l)] < 1.0 ? small : large).push_back(l);
    }
    // Leftovers in either list have weight 1 up to rounding.
}

int DegreeSampler::draw(Rng& rng) const {
    const int i = static_cast<int>(uniform_below(rng, prob_.size()));
    const double u = uniform01(rng);
    return u < prob_[static_cast<std::size_t>(i)] ? i : alias_[static_cast<std::size_t>(i)];
}

std::vector<int> DegreeSampler::draw_iid(int count, Rng& rng) const {
    std::vector<int> d(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) d[static_cast<std::size_t>(i)] = draw(rng);
    return d;
}

ConditionedSample DegreeSampler::sample_conditioned(int count, long long total, Rng& rng) const {
    if (count <= 0) throw input_error("conditioned sample needs a positive count");
    if (total < 0 || total % 2 != 0) throw input_error("total degree must be even and nonnegative");

    ConditionedSample out;
    const auto max_attempts = static_cast<std::uint64_t>(
        std::ceil(100.0 * std::sqrt(static_cast<double>(count))));
    std::vector<int> d;
    long long sum = 0;
    for (out.attempts = 1; out.attempts <= max_attempts; ++out.attempts) {
        d = draw_iid(count, rng);
        sum = 0;
        for (int x : d) sum += x;
        if (sum == total) {
            out.degrees = std::move(d);
            return out;
        }
    }
    out.attempts = max_attempts;
    out.used_fallback = true;

    // Repair: +-1 single-coordinate moves accepted by the pmf ratio, biased
    // toward the target total.
    auto log_w = [&](int j) {
        const double jd = static_cast<double>(j);
        return -params_.beta * jd * jd + params_.gamma * jd * params_.log_n -
               std::lgamma(jd + 1.0);
    };
    std::uint64_t repair_guard = 0;
    while (sum != total) {
        if (++repair_guard > 100'000'000ULL) throw numeric_error("degree repair did not terminate");
        const int i = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(count)));
        const int di = d[static_cast<std::size_t>(i)];
        const int proposal = sum < total ? di + 1 : di - 1;
        if (proposal < 0) continue;
        const double log_ratio = log_w(proposal) - log_w(di);
        if (log_ratio >= 0.0 || uniform01(rng) < std::exp(log_ratio)) {
            d[static_cast<std::size_t>(i)] = proposal;
            sum += proposal - di;
        }
    }
    // Mixing at fixed total: transfer one unit between two distinct
    // coordinates, Metropolis on the product pmf.
    const long long mixing_steps = 10LL * count;
    for (long long s = 0; s < mixing_steps; ++s) {
        const int i = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(count)));
        int j = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(count - 1)));
        if (j >= i) ++j;
        const int di = d[static_cast<std::size_t>(i)];
        const int dj = d[static_cast<std::size_t>(j)];
        if (dj == 0) continue;
        const double log_ratio = log_w(di + 1) + log_w(dj - 1) - log_w(di) - log_w(dj);
        if (log_ratio >= 0.0 || uniform01(rng) < std::exp(log_ratio)) {
            d[static_cast<std::size_t>(i)] = di + 1;
            d[static_cast<std::size_t>(j)] = dj - 1;
        }
    }
    out.degrees = std::move(d);
    return out;
}

ConcentrationReport concentration_report(const DegreeSequence& d, double c, int n, double alpha1,
                                         double alpha2) {
    if (n < 2) throw input_error("node count must be at least 2");
    if (!(alpha1 > 0.0) || !(alpha2 > 0.0)) throw input_error("window constants must be positive");
    ConcentrationReport r;
    r.alpha1 = alpha1;
    r.alpha2 = alpha2;
    const double log_n = std::log(static_cast<double>(n));
    const double dbar = c * log_n;
    const double scale = std::sqrt(log_n);
    const double quarter = std::pow(static_cast<double>(n), 0.25);

    r.in_A = d.total == target_total(c, n);
    r.in_A2 = true;
    for (int di : d.degrees) {
        const double dev = (static_cast<double>(di) - dbar) / scale;
        r.max_pos_dev = std::max(r.max_pos_dev, dev);
        r.max_neg_dev = std::max(r.max_neg_dev, -dev);
        if (static_cast<double>(di) > quarter) r.in_A2 = false;
    }
    r.in_A1 = r.max_pos_dev <= std::sqrt(alpha2) && r.max_neg_dev <= std::sqrt(alpha1);
    return r;
}

}  // namespace ergo
