#include "ergo/config_model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ergo/errors.hpp"

namespace ergo {

namespace {

long long checked_total(const std::vector<int>& degrees) {
    long long total = 0;
    for (int d : degrees) {
        if (d < 0) throw input_error("degrees must be nonnegative");
        total += d;
    }
    if (total % 2 != 0) throw input_error("degree sum must be even");
    return total;
}

}  // namespace

std::vector<int> Multigraph::degrees() const {
    std::vector<int> d(static_cast<std::size_t>(n), 0);
    for (const auto& [u, v] : edges) {
        d[static_cast<std::size_t>(u)] += 1;
        d[static_cast<std::size_t>(v)] += 1;  // a loop lands here twice total
    }
    return d;
}

Multigraph pair_stubs(const std::vector<int>& degrees, Rng& rng) {
    const long long total = checked_total(degrees);
    std::vector<int> stubs;
    stubs.reserve(static_cast<std::size_t>(total));
    for (std::size_t v = 0; v < degrees.size(); ++v)
        for (int k = 0; k < degrees[v]; ++k) stubs.push_back(static_cast<int>(v));
    shuffle(stubs, rng);

    Multigraph m;
    m.n = static_cast<int>(degrees.size());
    m.edges.reserve(static_cast<std::size_t>(total / 2));
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
        const int u = std::min(stubs[i], stubs[i + 1]);
        const int v = std::max(stubs[i], stubs[i + 1]);
        m.edges.emplace_back(u, v);
    }
    return m;
}

bool is_simple(const Multigraph& m) {
    std::vector<Edge> sorted = m.edges;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i].first == sorted[i].second) return false;
        if (i > 0 && sorted[i] == sorted[i - 1]) return false;
    }
    return true;
}

Graph erase(const Multigraph& m) {
    std::vector<Edge> sorted = m.edges;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    Graph g(m.n);
    for (const auto& [u, v] : sorted)
        if (u != v) g.add_edge(u, v);
    return g;
}

Graph sample_simple(const std::vector<int>& degrees, Rng& rng, std::uint64_t max_tries) {
    checked_total(degrees);
    if (max_tries == 0) throw input_error("max_tries must be positive");
    for (std::uint64_t t = 0; t < max_tries; ++t) {
        const Multigraph m = pair_stubs(degrees, rng);
        if (is_simple(m)) return erase(m);
    }
    throw rejection_error("no simple pairing within " + std::to_string(max_tries) + " tries", 0.0);
}

std::uint64_t default_max_tries(const std::vector<int>& degrees) {
    const double lambda = lambda_stat(degrees);
    const double raw = std::ceil(100.0 * std::exp(lambda + lambda * lambda));
    return raw > 1e7 ? 10'000'000ULL : static_cast<std::uint64_t>(raw);
}

double lambda_stat(const std::vector<int>& degrees) {
    const long long total = checked_total(degrees);
    if (total == 0) throw input_error("lambda needs at least one edge");
    long long num = 0;
    for (int d : degrees) num += static_cast<long long>(d) * (d - 1);
    return static_cast<double>(num) / (2.0 * static_cast<double>(total));
}

ConfigStats simple_fraction(const std::vector<int>& degrees, std::uint64_t trials, Rng& rng) {
    const long long total = checked_total(degrees);
    if (trials == 0) throw input_error("simple_fraction needs at least one trial");
    ConfigStats s;
    s.trials = trials;
    s.lambda = total == 0 ? 0.0 : lambda_stat(degrees);
    s.predicted_simple = std::exp(-s.lambda - s.lambda * s.lambda);
    for (std::uint64_t t = 0; t < trials; ++t)
        if (is_simple(pair_stubs(degrees, rng))) ++s.simple_count;
    s.empirical_simple = static_cast<double>(s.simple_count) / static_cast<double>(trials);
    s.ci = wilson_interval(s.simple_count, trials);
    return s;
}

}  // namespace ergo
