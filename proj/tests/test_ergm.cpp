#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <ergo/ergm.hpp>
#include <ergo/errors.hpp>
#include <ergo/graph.hpp>
#include <ergo/rng.hpp>

#include <cmath>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <vector>

#include "test_util.hpp"

using namespace ergo;

namespace {

std::vector<Edge> canon(const Graph& g) { return g.edges(); }

// total variation between an empirical histogram and an exact law
double tv_distance(const std::map<std::vector<Edge>, long long>& hist, long long samples,
                   const std::map<std::vector<Edge>, double>& exact) {
  double tv = 0.0;
  std::set<std::vector<Edge>> keys;
  for (const auto& [k, v] : hist) keys.insert(k);
  for (const auto& [k, v] : exact) keys.insert(k);
  for (const auto& k : keys) {
    double emp = 0.0;
    if (auto it = hist.find(k); it != hist.end()) emp = static_cast<double>(it->second) / samples;
    double ex = 0.0;
    if (auto it = exact.find(k); it != exact.end()) ex = it->second;
    tv += std::abs(emp - ex);
  }
  return 0.5 * tv;
}

double chain_tv(long long steps, long long burn_in, double beta, std::uint64_t seed) {
  ChainConfig cfg;
  cfg.beta = beta;
  cfg.n = 4;
  cfg.target_edges = 3;
  cfg.steps = steps;
  cfg.burn_in = burn_in;
  cfg.thinning = 1;
  cfg.seed = seed;
  std::map<std::vector<Edge>, long long> hist;
  long long samples = 0;
  run_chain(
      cfg,
      [&](long long, const Graph& g) {
        hist[canon(g)]++;
        ++samples;
      },
      nullptr);
  return tv_distance(hist, samples, enumerate_exact(4, 3, beta));
}

}  // namespace

TEST_CASE("propose draws present edges and absent pairs uniformly") {
  Rng rng = make_rng(100);
  Graph g = graph_from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  const int trials = 100000;
  std::map<Edge, int> removed, added;
  for (int t = 0; t < trials; ++t) {
    Move m = propose(g, rng);
    CHECK(g.has_edge(m.remove.first, m.remove.second));
    CHECK_FALSE(g.has_edge(m.add.first, m.add.second));
    CHECK(m.add.first < m.add.second);
    removed[m.remove]++;
    added[m.add]++;
  }
  REQUIRE(removed.size() == 4);
  REQUIRE(added.size() == 6);
  for (const auto& [e, cnt] : removed) {
    double p = static_cast<double>(cnt) / trials;
    CHECK(std::abs(p - 0.25) < 3.0 * std::sqrt(0.25 * 0.75 / trials));
  }
  for (const auto& [e, cnt] : added) {
    double p = static_cast<double>(cnt) / trials;
    CHECK(std::abs(p - 1.0 / 6) < 3.0 * std::sqrt((1.0 / 6) * (5.0 / 6) / trials));
  }
}

TEST_CASE("propose requires a movable state") {
  Rng rng = make_rng(1);
  Graph empty(4);
  CHECK_THROWS_AS(propose(empty, rng), input_error);
  CHECK_THROWS_AS(propose(test::complete(4), rng), input_error);

  Graph one = graph_from_edge_list(3, {{0, 2}});
  Move m = propose(one, rng);
  CHECK(m.remove == Edge{0, 2});
}

TEST_CASE("delta_energy on hand-checked moves") {
  // path 0-1-2: swapping (0,1) for (0,2) relabels the middle, energy unchanged
  Graph p3 = graph_from_edge_list(3, {{0, 1}, {1, 2}});
  CHECK(delta_energy(p3, {{0, 1}, {0, 2}}) == 0);

  // star 0-{1,2,3}: swap (0,1) out, (1,2) in; degrees go (3,1,1,1)->(2,1,2,1)
  Graph st = test::star(3);
  Move m{{0, 1}, {1, 2}};
  long long before = energy(st);
  CHECK(before == 12);
  Graph after = graph_from_edge_list(4, {{0, 2}, {0, 3}, {1, 2}});
  CHECK(energy(after) == 10);
  CHECK(delta_energy(st, m) == -2);

  CHECK_THROWS_AS(delta_energy(st, Move{{1, 2}, {0, 1}}), input_error);  // remove absent
  CHECK_THROWS_AS(delta_energy(st, Move{{0, 1}, {0, 2}}), input_error);  // add present
  CHECK_THROWS_AS(delta_energy(st, Move{{0, 1}, {2, 2}}), input_error);  // add loop
}

TEST_CASE("delta_energy equals a full recompute on random moves") {
  Rng rng = make_rng(555);
  for (int gi = 0; gi < 100; ++gi) {
    int n = 4 + static_cast<int>(uniform_below(rng, 12));
    long long m_count = pair_count(n);
    long long e = 1 + static_cast<long long>(uniform_below(rng, static_cast<std::uint64_t>(m_count - 1)));
    Graph g = uniform_gnm(n, e, rng);
    for (int t = 0; t < 1000; ++t) {
      Move m = propose(g, rng);
      long long before = energy(g);
      g.remove_edge(m.remove.first, m.remove.second);
      g.add_edge(m.add.first, m.add.second);
      long long after = energy(g);
      g.remove_edge(m.add.first, m.add.second);
      g.add_edge(m.remove.first, m.remove.second);
      REQUIRE(delta_energy(g, m) == after - before);
    }
  }
}

TEST_CASE("acceptance probability") {
  CHECK(acceptance_probability(0.0, 100) == 1.0);
  CHECK(acceptance_probability(2.0, 0) == 1.0);
  CHECK(acceptance_probability(2.0, -6) == 1.0);
  CHECK(acceptance_probability(0.1, 4) == doctest::Approx(0.670320046035639).epsilon(1e-12));
  CHECK_THROWS_AS(acceptance_probability(-1.0, 0), input_error);

  // reversibility identity behind detailed balance: a(x) = e^{-x} a(-x)
  for (long long d : {-7LL, -1LL, 0LL, 2LL, 9LL}) {
    double beta = 0.37;
    double lhs = acceptance_probability(beta, d);
    double rhs = std::exp(-beta * static_cast<double>(d)) * acceptance_probability(beta, -d);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-14));
  }
}

TEST_CASE("beta=0 accepts every proposal") {
  Rng rng = make_rng(8);
  Graph g = uniform_gnm(8, 10, rng);
  for (int t = 0; t < 1000; ++t) REQUIRE(step(g, 0.0, rng));
  CHECK(g.edge_count() == 10);
}

TEST_CASE("swap chain keeps E fixed and its incremental energy exact") {
  Rng rng = make_rng(21);
  EdgeSwapChain chain(12, 20, 0.5, rng);
  CHECK(chain.graph().edge_count() == 20);
  CHECK(chain.energy() == energy(chain.graph()));
  for (int t = 0; t < 10000; ++t) chain.step(rng);
  CHECK(chain.graph().edge_count() == 20);
  CHECK(chain.energy() == energy(chain.graph()));
  CHECK(chain.proposals() == 10000);
  CHECK(chain.accepted() <= chain.proposals());
  CHECK(chain.accepted() > 0);
}

TEST_CASE("every fixed-E state is reachable by single swaps") {
  auto law = enumerate_exact(4, 3, 0.0);
  REQUIRE(law.size() == 20);
  std::set<std::vector<Edge>> seen;
  std::queue<std::vector<Edge>> frontier;
  auto start = law.begin()->first;
  seen.insert(start);
  frontier.push(start);
  while (!frontier.empty()) {
    std::vector<Edge> cur = frontier.front();
    frontier.pop();
    Graph g = graph_from_edge_list(4, cur);
    for (const Edge& out : cur) {
      for (int u = 0; u < 4; ++u) {
        for (int v = u + 1; v < 4; ++v) {
          if (g.has_edge(u, v) || (u == out.first && v == out.second)) continue;
          Graph h = g;
          h.remove_edge(out.first, out.second);
          if (h.has_edge(u, v)) continue;
          h.add_edge(u, v);
          auto key = h.edges();
          if (seen.insert(key).second) frontier.push(key);
        }
      }
    }
  }
  CHECK(seen.size() == 20);
}

TEST_CASE("exact enumeration at beta=0 is uniform") {
  auto law = enumerate_exact(4, 3, 0.0);
  REQUIRE(law.size() == 20);
  double mass = 0.0;
  for (const auto& [g, p] : law) {
    CHECK(std::abs(p - 0.05) <= 1e-12);
    mass += p;
  }
  CHECK(std::abs(mass - 1.0) <= 1e-12);
}

TEST_CASE("exact enumeration concentrates on minimum-energy states") {
  // on n=4, E=3 the 12 labelled paths have energy 10; stars and triangles 12
  auto law = enumerate_exact(4, 3, 5.0);
  int paths = 0;
  for (const auto& [edges, p] : law) {
    Graph g = graph_from_edge_list(4, edges);
    if (energy(g) == 10) {
      ++paths;
      CHECK(std::abs(p - 1.0 / 12) < 1e-4);
    } else {
      CHECK(energy(g) == 12);
      CHECK(p < 1e-4);
    }
  }
  CHECK(paths == 12);
}

TEST_CASE("exact enumeration edge cases and guard") {
  auto forced = enumerate_exact(3, 3, 1.0);
  REQUIRE(forced.size() == 1);
  CHECK(forced.begin()->second == doctest::Approx(1.0).epsilon(1e-15));

  auto empty = enumerate_exact(3, 0, 1.0);
  REQUIRE(empty.size() == 1);
  CHECK(empty.begin()->first.empty());

  CHECK_THROWS_AS(enumerate_exact(30, 15, 1.0), capacity_error);
  CHECK_THROWS_AS(enumerate_exact(4, 7, 1.0), input_error);
  CHECK_THROWS_AS(enumerate_exact(4, 3, -1.0), input_error);
}

TEST_CASE("run_chain is deterministic and snapshots on schedule") {
  ChainConfig cfg;
  cfg.beta = 0.4;
  cfg.n = 10;
  cfg.target_edges = 15;
  cfg.steps = 5000;
  cfg.burn_in = 1000;
  cfg.thinning = 500;
  cfg.seed = 77;

  auto collect = [&cfg]() {
    std::vector<std::pair<long long, std::vector<Edge>>> snaps;
    std::vector<long long> energies;
    ChainStats st = run_chain(
        cfg, [&](long long s, const Graph& g) { snaps.emplace_back(s, g.edges()); },
        [&](long long, long long e) { energies.push_back(e); });
    return std::tuple(snaps, energies, st);
  };

  auto [snaps1, energies1, st1] = collect();
  auto [snaps2, energies2, st2] = collect();
  CHECK(snaps1 == snaps2);
  CHECK(energies1 == energies2);
  CHECK(st1.accepted == st2.accepted);

  // snapshots at burn_in, burn_in + k*thinning
  REQUIRE(snaps1.size() == 9);  // steps 1000, 1500, ..., 5000
  for (std::size_t i = 0; i < snaps1.size(); ++i) {
    CHECK(snaps1[i].first == 1000 + 500 * static_cast<long long>(i));
    CHECK(snaps1[i].second.size() == 15);
  }
  CHECK(energies1.size() == 5001);  // step 0 through 5000
  CHECK(st1.proposals == 5000);
  CHECK(st1.snapshots == 9);
  CHECK(energies1.back() == st1.final_energy);
}

TEST_CASE("chain law approaches the exact law as steps grow") {
  double tv4 = chain_tv(10000, 1000, 0.3, 2026);
  double tv5 = chain_tv(100000, 10000, 0.3, 2026);
  double tv6 = chain_tv(1000000, 10000, 0.3, 2026);
  CHECK(tv5 < tv4);
  CHECK(tv6 < tv5);
  CHECK(tv6 <= 0.02);
}
