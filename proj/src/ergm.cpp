#include "ergo/ergm.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ergo/errors.hpp"

namespace ergo {

namespace {

void check_proposable(int n, std::size_t edge_count) {
    const std::uint64_t m = pair_count(n);
    if (edge_count == 0) throw input_error("no move exists on an empty graph");
    if (edge_count >= m) throw input_error("no move exists on a complete graph");
}

Edge random_absent_pair(const Graph& g, Rng& rng) {
    const std::uint64_t m = pair_count(g.order());
    for (;;) {
        const auto [x, y] = pair_from_index(g.order(), uniform_below(rng, m));
        if (!g.has_edge(x, y)) return {x, y};
    }
}

}  // namespace

long long ChainConfig::resolved_burn_in() const {
    if (burn_in >= 0) return burn_in;
    const double e = static_cast<double>(target_edges);
    return 20LL * static_cast<long long>(target_edges) *
           static_cast<long long>(std::ceil(std::log(e + 1.0)));
}

long long ChainConfig::resolved_thinning() const {
    if (thinning >= 0) return thinning == 0 ? 1 : thinning;
    return std::max<long long>(1, 2 * static_cast<long long>(target_edges));
}

Move propose(const Graph& g, Rng& rng) {
    check_proposable(g.order(), g.edge_count());
    const auto edges = g.edges();
    const Edge out = edges[static_cast<std::size_t>(uniform_below(rng, edges.size()))];
    return {out, random_absent_pair(g, rng)};
}

long long delta_energy(const Graph& g, const Move& m) {
    const auto [u, v] = m.remove;
    const auto [x, y] = m.add;
    if (!g.has_edge(u, v)) throw input_error("move removes an absent edge");
    if (x == y || g.has_edge(x, y)) throw input_error("move adds an invalid pair");
    long long delta = -(2LL * g.degree(u) - 1) - (2LL * g.degree(v) - 1);
    // Degrees as seen by the added edge, with the removal applied first.
    const long long dx = g.degree(x) - (x == u || x == v ? 1 : 0);
    const long long dy = g.degree(y) - (y == u || y == v ? 1 : 0);
    delta += (2 * dx + 1) + (2 * dy + 1);
    return delta;
}

double acceptance_probability(double beta, long long delta) {
    if (beta < 0.0) throw input_error("beta must be nonnegative");
    const double x = beta * static_cast<double>(delta);
    return x <= 0.0 ? 1.0 : std::exp(-x);
}

bool step(Graph& g, double beta, Rng& rng) {
    const Move m = propose(g, rng);
    const long long delta = delta_energy(g, m);
    const double a = acceptance_probability(beta, delta);
    const bool accept = a >= 1.0 || uniform01(rng) < a;
    if (accept) {
        g.remove_edge(m.remove.first, m.remove.second);
        g.add_edge(m.add.first, m.add.second);
    }
    return accept;
}

EdgeSwapChain::EdgeSwapChain(int n, std::size_t target_edges, double beta, Rng& rng)
    : EdgeSwapChain(uniform_gnm(n, target_edges, rng), beta) {}

EdgeSwapChain::EdgeSwapChain(Graph g, double beta) : g_(std::move(g)), beta_(beta) {
    if (beta < 0.0) throw input_error("beta must be nonnegative");
    edges_ = g_.edges();
    energy_ = ergo::energy(g_);
}

bool EdgeSwapChain::step(Rng& rng) {
    check_proposable(g_.order(), g_.edge_count());
    ++proposals_;
    const std::size_t slot = static_cast<std::size_t>(uniform_below(rng, edges_.size()));
    const Move m{edges_[slot], random_absent_pair(g_, rng)};
    const long long delta = delta_energy(g_, m);
    const double a = acceptance_probability(beta_, delta);
    const bool accept = a >= 1.0 || uniform01(rng) < a;
    if (accept) {
        g_.remove_edge(m.remove.first, m.remove.second);
        g_.add_edge(m.add.first, m.add.second);
        edges_[slot] = m.add;  // the freed slot takes the new edge
        energy_ += delta;
        ++accepted_;
    }
    return accept;
}

ChainStats run_chain(const ChainConfig& cfg,
                     const std::function<void(long long, const Graph&)>& on_snapshot,
                     const std::function<void(long long, long long)>& on_energy) {
    if (cfg.n < 0) throw input_error("chain needs a nonnegative node count");
    if (cfg.beta < 0.0) throw input_error("beta must be nonnegative");
    if (cfg.target_edges > pair_count(cfg.n)) throw input_error("edge count exceeds n(n-1)/2");
    if (cfg.steps < 0) throw input_error("steps must be nonnegative");
    const long long burn_in = cfg.resolved_burn_in();
    const long long thinning = cfg.resolved_thinning();
    if (burn_in < 0 || thinning <= 0) throw input_error("invalid burn-in or thinning");
    if (cfg.steps > 0) check_proposable(cfg.n, cfg.target_edges);

    Rng rng = make_rng(cfg.seed);
    EdgeSwapChain chain(cfg.n, cfg.target_edges, cfg.beta, rng);

    ChainStats stats;
    stats.initial_energy = chain.energy();
    if (on_energy) on_energy(0, chain.energy());
    auto snapshot_due = [&](long long s) {
        return s >= burn_in && (s - burn_in) % thinning == 0;
    };
    if (cfg.steps == 0 && snapshot_due(0) && on_snapshot) {
        on_snapshot(0, chain.graph());
        ++stats.snapshots;
    }
    for (long long s = 1; s <= cfg.steps; ++s) {
        chain.step(rng);
        if (on_energy) on_energy(s, chain.energy());
        if (snapshot_due(s) && on_snapshot) {
            on_snapshot(s, chain.graph());
            ++stats.snapshots;
        }
    }
    stats.proposals = chain.proposals();
    stats.accepted = chain.accepted();
    stats.final_energy = chain.energy();
    if (chain.graph().edge_count() != cfg.target_edges)
        throw numeric_error("chain lost edge-count invariant");
    return stats;
}

std::map<std::vector<Edge>, double> enumerate_exact(int n, std::size_t target_edges, double beta) {
    if (beta < 0.0) throw input_error("beta must be nonnegative");
    const std::uint64_t m = pair_count(n);
    if (target_edges > m) throw input_error("edge count exceeds n(n-1)/2");

    // C(m, E) with early bail above the guard.
    const std::uint64_t guard = 10'000'000ULL;
    double combos = 1.0;
    for (std::size_t i = 1; i <= target_edges; ++i) {
        combos *= static_cast<double>(m - target_edges + i) / static_cast<double>(i);
        if (combos > static_cast<double>(guard) * 1.001)
            throw capacity_error("state space too large to enumerate");
    }

    const std::size_t e = target_edges;
    std::vector<std::size_t> pick(e);
    for (std::size_t i = 0; i < e; ++i) pick[i] = i;

    std::vector<std::vector<Edge>> keys;
    std::vector<double> log_w;
    double max_log_w = -1e300;
    for (;;) {
        std::vector<int> deg(static_cast<std::size_t>(n), 0);
        std::vector<Edge> edges;
        edges.reserve(e);
        for (std::size_t i = 0; i < e; ++i) {
            const auto [u, v] = pair_from_index(n, pick[i]);
            ++deg[static_cast<std::size_t>(u)];
            ++deg[static_cast<std::size_t>(v)];
            edges.emplace_back(u, v);
        }
        long long h = 0;
        for (int d : deg) h += static_cast<long long>(d) * d;
        const double lw = -beta * static_cast<double>(h);
        max_log_w = std::max(max_log_w, lw);
        keys.push_back(std::move(edges));
        log_w.push_back(lw);

        // next lexicographic combination of pair indices
        std::size_t i = e;
        while (i > 0 && pick[i - 1] == m - e + (i - 1)) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < e; ++j) pick[j] = pick[j - 1] + 1;
    }

    double z = 0.0;
    for (double lw : log_w) z += std::exp(lw - max_log_w);
    const double log_z = max_log_w + std::log(z);

    std::map<std::vector<Edge>, double> out;
    for (std::size_t i = 0; i < keys.size(); ++i)
        out.emplace(std::move(keys[i]), std::exp(log_w[i] - log_z));
    return out;
}

}  // namespace ergo
