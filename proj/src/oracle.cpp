#include "ergo/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ergo/degree_law.hpp"
#include "ergo/ergm.hpp"
#include "ergo/errors.hpp"
#include "ergo/rng.hpp"

namespace ergo {

std::uint64_t double_factorial(long long k) {
    if (k < -1 || k % 2 == 0) throw input_error("double factorial defined here for odd k >= -1");
    std::uint64_t out = 1;
    for (long long x = k; x >= 3; x -= 2) out *= static_cast<std::uint64_t>(x);
    return out;
}

namespace {

void match_recurse(const std::vector<int>& owner, std::vector<char>& used,
                   std::vector<Edge>& edges, MatchingCensus& census) {
    std::size_t first = used.size();
    for (std::size_t i = 0; i < used.size(); ++i) {
        if (!used[i]) {
            first = i;
            break;
        }
    }
    if (first == used.size()) {
        ++census.total;
        std::vector<Edge> sorted = edges;
        std::sort(sorted.begin(), sorted.end());
        bool simple = true;
        for (std::size_t i = 0; i < sorted.size() && simple; ++i) {
            if (sorted[i].first == sorted[i].second) simple = false;
            if (i > 0 && sorted[i] == sorted[i - 1]) simple = false;
        }
        if (simple) {
            ++census.simple;
            ++census.simple_realizations[sorted];
        }
        return;
    }
    used[first] = 1;
    for (std::size_t j = first + 1; j < used.size(); ++j) {
        if (used[j]) continue;
        used[j] = 1;
        const int a = std::min(owner[first], owner[j]);
        const int b = std::max(owner[first], owner[j]);
        edges.emplace_back(a, b);
        match_recurse(owner, used, edges, census);
        edges.pop_back();
        used[j] = 0;
    }
    used[first] = 0;
}

}  // namespace

MatchingCensus enumerate_matchings(const std::vector<int>& degrees) {
    long long total = 0;
    for (int d : degrees) {
        if (d < 0) throw input_error("degrees must be nonnegative");
        total += d;
    }
    if (total % 2 != 0) throw input_error("degree sum must be even");
    if (total > 16) throw capacity_error("matching census limited to 2E <= 16");

    std::vector<int> owner;
    owner.reserve(static_cast<std::size_t>(total));
    for (std::size_t v = 0; v < degrees.size(); ++v)
        for (int k = 0; k < degrees[v]; ++k) owner.push_back(static_cast<int>(v));

    MatchingCensus census;
    std::vector<char> used(owner.size(), 0);
    std::vector<Edge> edges;
    match_recurse(owner, used, edges, census);
    if (total > 0 && census.total != double_factorial(total - 1))
        throw oracle_error("matching census disagrees with (2E-1)!!");
    if (total == 0) census.total = 1;
    return census;
}

OracleMoments oracle_moments(double beta, double gamma, int n) {
    if (!(beta > 0.0) || n < 2) throw input_error("oracle moments need beta > 0, n >= 2");
    const long double log_n = std::log(static_cast<long double>(n));
    auto log_w = [&](long long j) -> long double {
        const long double jd = static_cast<long double>(j);
        return -static_cast<long double>(beta) * jd * jd +
               static_cast<long double>(gamma) * jd * log_n - std::lgamma(jd + 1.0L);
    };
    // First locate the peak, then keep summing until terms are negligible
    // on a much wider margin than the production window.
    long double best = log_w(0);
    long long j = 1;
    long long since_best = 0;
    while (since_best < 400) {
        const long double lw = log_w(j);
        if (lw > best) {
            best = lw;
            since_best = 0;
        } else {
            ++since_best;
        }
        ++j;
        if (j > 5'000'000) throw numeric_error("oracle peak scan did not terminate");
    }
    const long long hi = j + 400;
    long double sum = 0.0L;
    long double sum_j = 0.0L;
    long double sum_j2 = 0.0L;
    for (long long i = 0; i <= hi; ++i) {
        const long double w = std::exp(log_w(i) - best);
        sum += w;
        sum_j += w * static_cast<long double>(i);
        sum_j2 += w * static_cast<long double>(i) * static_cast<long double>(i);
    }
    OracleMoments m;
    m.log_F = static_cast<double>(best + std::log(sum));
    m.mean = static_cast<double>(sum_j / sum);
    m.variance = static_cast<double>(sum_j2 / sum - (sum_j / sum) * (sum_j / sum));
    return m;
}

double oracle_psi(double theta, double beta) {
    if (!(beta > 0.0)) throw input_error("beta must be positive");
    const long long w = static_cast<long long>(std::ceil(std::sqrt(200.0 / beta))) + 50;
    const long long j0 = std::llround(theta / (2.0 * beta));
    long double num = 0.0L;
    long double den = 0.0L;
    for (long long j = j0 - w; j <= j0 + w; ++j) {
        const long double jd = static_cast<long double>(j);
        num += std::exp(static_cast<long double>(theta) * jd -
                        static_cast<long double>(beta) * jd * jd);
    }
    for (long long j = -w; j <= w; ++j) {
        const long double jd = static_cast<long double>(j);
        den += std::exp(-static_cast<long double>(beta) * jd * jd);
    }
    return static_cast<double>(num / den);
}

namespace {

void check(std::vector<ValidationResult>& out, const std::string& name, bool ok,
           const std::string& detail) {
    out.push_back({name, ok, detail});
}

bool close_rel(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

std::string num_pair(double got, double want) {
    std::ostringstream s;
    s.precision(17);
    s << "got " << got << ", want " << want;
    return s.str();
}

}  // namespace

std::vector<ValidationResult> run_validation() {
    std::vector<ValidationResult> out;

    // Frozen high-precision constants for beta=0.5, gamma=1, n=100
    // (independent 60-digit summation of the tilted law).
    {
        const DegreeLawParams p = make_params(0.5, 1.0, 100);
        check(out, "law_x_root", close_rel(p.x_gamma, 2.7763992181481733524, 1e-9),
              num_pair(p.x_gamma, 2.7763992181481733524));
        check(out, "law_mode", p.k_gamma == 3, "k = " + std::to_string(p.k_gamma));
        check(out, "law_alpha", close_rel(p.alpha, 0.27639921814817335241, 1e-9),
              num_pair(p.alpha, 0.27639921814817335241));
        check(out, "law_normalizer", close_rel(p.F(), 4319.7544959301177324, 1e-9),
              num_pair(p.F(), 4319.7544959301177324));
        check(out, "law_mean", close_rel(p.mean, 3.2970489435723199348, 1e-9),
              num_pair(p.mean, 3.2970489435723199348));
        check(out, "law_variance", close_rel(p.variance, 0.78356838595228519815, 1e-9),
              num_pair(p.variance, 0.78356838595228519815));
        check(out, "law_pmf_mode", close_rel(pmf(3, p), 0.42861218728628804177, 1e-9),
              num_pair(pmf(3, p), 0.42861218728628804177));
    }
    {
        const double got = psi(0.5, 1.0);
        check(out, "psi_half", close_rel(got, 1.0643843522177750309, 1e-12),
              num_pair(got, 1.0643843522177750309));
        check(out, "psi_zero", std::abs(psi(0.0, 2.0) - 1.0) < 1e-14, num_pair(psi(0.0, 2.0), 1.0));
        check(out, "psi_cross", close_rel(psi(0.7, 0.8), oracle_psi(0.7, 0.8), 1e-12),
              num_pair(psi(0.7, 0.8), oracle_psi(0.7, 0.8)));
    }
    {
        const double beta = 1.0;
        const int n = 1000;
        const DegreeLawParams p = calibrate_gamma(beta, 2.0, n);
        const OracleMoments om = oracle_moments(beta, p.gamma, n);
        check(out, "moments_cross_mean", close_rel(p.mean, om.mean, 1e-9),
              num_pair(p.mean, om.mean));
        check(out, "moments_cross_var", close_rel(p.variance, om.variance, 1e-9),
              num_pair(p.variance, om.variance));
        check(out, "moments_cross_logF", close_rel(p.log_F, om.log_F, 1e-9),
              num_pair(p.log_F, om.log_F));
        check(out, "calibrated_mean",
              std::abs(p.mean - 2.0 * std::log(1000.0)) <= 1e-6,
              num_pair(p.mean, 2.0 * std::log(1000.0)));
    }
    {
        const double exact = x_gamma_exact(1.0, 1.0, 1000000);
        const double closed = x_gamma_closed_form(1.0, 1.0, 1000000);
        check(out, "x_root_solves_equation",
              std::abs(-std::log(exact + 1.0) - (2.0 * exact + 1.0) + std::log(1e6)) < 1e-10,
              "residual");
        check(out, "x_closed_form_gap", std::abs(exact - closed) < 0.1, num_pair(closed, exact));
    }
    {
        const MatchingCensus c3 = enumerate_matchings({2, 2, 2});
        check(out, "census_triangle", c3.total == 15 && c3.simple == 8,
              std::to_string(c3.total) + " matchings, " + std::to_string(c3.simple) + " simple");
        const MatchingCensus c2 = enumerate_matchings({2, 2});
        check(out, "census_two_nodes", c2.total == 3 && c2.simple == 0,
              std::to_string(c2.total) + " matchings, " + std::to_string(c2.simple) + " simple");
        const MatchingCensus c4 = enumerate_matchings({2, 2, 2, 2});
        check(out, "census_cycles",
              c4.total == 105 && c4.simple == 48 && c4.simple_realizations.size() == 3,
              std::to_string(c4.total) + " matchings, " + std::to_string(c4.simple) + " simple, " +
                  std::to_string(c4.simple_realizations.size()) + " graphs");
    }
    {
        const auto uniform = enumerate_exact(4, 3, 0.0);
        bool ok = uniform.size() == 20;
        double mass = 0.0;
        for (const auto& [key, prob] : uniform) {
            ok = ok && std::abs(prob - 0.05) < 1e-12;
            mass += prob;
        }
        check(out, "enumeration_uniform", ok && std::abs(mass - 1.0) < 1e-12,
              std::to_string(uniform.size()) + " graphs");
        const auto single = enumerate_exact(3, 3, 1.0);
        check(out, "enumeration_forced",
              single.size() == 1 && std::abs(single.begin()->second - 1.0) < 1e-12,
              std::to_string(single.size()) + " graphs");
    }
    {
        Rng rng = make_rng(12345);
        bool ok = true;
        for (int t = 0; t < 50 && ok; ++t) {
            const int n = 3 + static_cast<int>(uniform_below(rng, 8));
            const std::uint64_t m = pair_count(n);
            const Graph g = uniform_gnm(n, uniform_below(rng, m + 1), rng);
            std::vector<int> subset;
            for (int v = 0; v < n; ++v)
                if (uniform01(rng) < 0.5) subset.push_back(v);
            const CutStats s = cut_stats(g, subset);
            ok = 2 * s.internal + s.crossing == s.volume;
        }
        check(out, "cut_identity", ok, "50 random graph/subset pairs");
    }
    return out;
}

}  // namespace ergo
