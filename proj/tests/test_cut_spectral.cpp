#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <ergo/cut_spectral.hpp>
#include <ergo/errors.hpp>
#include <ergo/graph.hpp>
#include <ergo/rng.hpp>

#include <cmath>
#include <vector>

#include "test_util.hpp"

using namespace ergo;

TEST_CASE("brute-force expansion on named graphs") {
  auto [phi_k4, w_k4] = brute_expansion(test::complete(4));
  CHECK(phi_k4 == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(w_k4 == std::vector<int>{0, 1});  // smallest-bitmask witness among ties

  auto [phi_c6, w_c6] = brute_expansion(test::cycle(6));
  CHECK(phi_c6 == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(w_c6 == std::vector<int>{0, 1, 2});

  auto [phi_disc, w_disc] = brute_expansion(graph_from_edge_list(4, {{0, 1}, {2, 3}}));
  CHECK(phi_disc == 0.0);

  CHECK_THROWS_AS(brute_expansion(test::cycle(25)), capacity_error);
  CHECK_THROWS_AS(brute_expansion(Graph(1)), input_error);
}

TEST_CASE("brute-force conductance on named graphs") {
  auto [c_k4, w1] = brute_conductance(test::complete(4));
  CHECK(c_k4 == doctest::Approx(2.0 / 3.0).epsilon(1e-12));

  auto [c_c6, w2] = brute_conductance(test::cycle(6));
  CHECK(c_c6 == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

  auto [c_edge, w3] = brute_conductance(test::path(2));
  CHECK(c_edge == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(brute_conductance(Graph(3)), input_error);  // no edges
}

TEST_CASE("expansion is at most the minimum degree, conductance at most one") {
  Rng rng = make_rng(31);
  for (int t = 0; t < 50; ++t) {
    Graph g = test::random_connected(3 + static_cast<int>(uniform_below(rng, 10)), rng);
    auto [phi, pw] = brute_expansion(g);
    auto [cond, cw] = brute_conductance(g);
    int d_min = g.order();
    for (int v = 0; v < g.order(); ++v) d_min = std::min(d_min, g.degree(v));
    CHECK(phi <= d_min + 1e-12);
    CHECK(cond <= 1.0 + 1e-12);
    CHECK(phi > 0.0);
    CHECK(cond > 0.0);
  }
}

TEST_CASE("laplacian second eigenvalue on named graphs") {
  CHECK(lambda2_laplacian(test::complete(4)) == doctest::Approx(4.0).epsilon(1e-9));
  CHECK(lambda2_laplacian(test::cycle(6)) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(lambda2_laplacian(test::star(3)) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(lambda2_laplacian(test::path(2)) == doctest::Approx(2.0).epsilon(1e-9));
  CHECK_THROWS_AS(lambda2_laplacian(Graph(1)), input_error);
}

TEST_CASE("walk second eigenvalue on named graphs") {
  CHECK(lambda2_walk(test::cycle(6)) == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(lambda2_walk(test::complete(4)) == doctest::Approx(-1.0 / 3.0).epsilon(1e-9));
  CHECK(lambda2_walk(test::path(2)) == doctest::Approx(-1.0).epsilon(1e-9));
  CHECK_THROWS_AS(lambda2_walk(graph_from_edge_list(3, {{0, 1}})), input_error);  // isolated vertex
}

TEST_CASE("lambda2 of the laplacian vanishes exactly for disconnected graphs") {
  Rng rng = make_rng(32);
  for (int t = 0; t < 200; ++t) {
    int n = 2 + static_cast<int>(uniform_below(rng, 12));
    long long m = pair_count(n);
    long long e = static_cast<long long>(uniform_below(rng, static_cast<std::uint64_t>(m + 1)));
    Graph g = uniform_gnm(n, e, rng);
    double l2 = lambda2_laplacian(g);
    if (is_connected(g)) {
      CHECK(l2 > 1e-9);
    } else {
      CHECK(std::abs(l2) <= 1e-9);
    }
  }
}

TEST_CASE("iterative eigenvalues agree with the dense solver") {
  Rng rng = make_rng(33);
  for (int t = 0; t < 5; ++t) {
    Graph g = uniform_gnm(300, 1200, rng);
    bool ok = true;
    for (int v = 0; v < g.order(); ++v)
      if (g.degree(v) == 0) ok = false;
    if (!ok || !is_connected(g)) continue;
    double dl = lambda2_laplacian(g);
    double il = lambda2_laplacian_iterative(g);
    CHECK(std::abs(dl - il) <= 1e-5 * std::max(1.0, std::abs(dl)));
    double dw = lambda2_walk(g);
    double iw = lambda2_walk_iterative(g);
    CHECK(std::abs(dw - iw) <= 1e-5 * std::max(1.0, std::abs(dw)));
  }
}

TEST_CASE("cheeger report on named graphs") {
  SpectralReport k4 = cheeger_report(test::complete(4));
  CHECK(k4.phi == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(k4.conductance == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(k4.lambda2_L == doctest::Approx(4.0).epsilon(1e-9));
  CHECK(k4.lambda2_P == doctest::Approx(-1.0 / 3.0).epsilon(1e-9));
  CHECK(k4.d_max == 3);
  CHECK(k4.laplacian_lower_holds);
  CHECK(k4.laplacian_upper_holds);
  CHECK(k4.walk_lower_holds);
  CHECK(k4.walk_upper_holds);

  SpectralReport c6 = cheeger_report(test::cycle(6));
  CHECK(c6.laplacian_lower_holds);
  CHECK(c6.laplacian_upper_holds);
  CHECK(c6.walk_lower_holds);
  CHECK(c6.walk_upper_holds);
  // 1 - lambda2_P = 1/2 exceeds Phi = 1/3: the one-sided tight form fails here
  CHECK_FALSE(c6.walk_upper_tight_holds);

  CHECK(cheeger_report(test::star(3)).walk_upper_holds);
  CHECK(cheeger_report(test::path(5)).walk_upper_holds);
  CHECK_THROWS_AS(cheeger_report(graph_from_edge_list(4, {{0, 1}, {2, 3}})), input_error);
}

TEST_CASE("cheeger sandwiches hold on random connected graphs") {
  Rng rng = make_rng(34);
  for (int t = 0; t < 50; ++t) {
    Graph g = test::random_connected(4 + static_cast<int>(uniform_below(rng, 9)), rng);
    SpectralReport r = cheeger_report(g);
    CHECK(r.laplacian_lower_holds);
    CHECK(r.laplacian_upper_holds);
    CHECK(r.walk_lower_holds);
    CHECK(r.walk_upper_holds);
  }
}

TEST_CASE("cut profile of the complete graph") {
  // singleton cut of K_n: crossing = n-1; with c = (n-1)/ln n the ratio is 1
  const int n = 10;
  const double c = (n - 1) / std::log(static_cast<double>(n));
  Rng rng = make_rng(35);
  CutProfile p = cut_profile(test::complete(n), c, 100, rng);
  REQUIRE(!p.buckets.empty());
  CHECK(p.buckets.front().u == 1);
  CHECK(p.buckets.front().min_ratio == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(p.buckets.front().exhaustive);
  for (const auto& b : p.buckets) {
    CHECK(b.u >= 1);
    CHECK(b.u <= n / 2);
    CHECK(b.samples >= 1);
  }
  // larger sides of K_n cut proportionally less per vertex, so delta > 0
  CHECK(p.empirical_delta > 0.0);
  CHECK(p.empirical_delta < 1.0);

  CHECK_THROWS_AS(cut_profile(test::cycle(4), 0.0, 10, rng), input_error);
  CHECK_THROWS_AS(cut_profile(test::cycle(3), 1.0, 10, rng), input_error);
}

TEST_CASE("cut profile bucket grid doubles up to n/2") {
  Rng rng = make_rng(36);
  Graph g = test::cycle(20);
  CutProfile p = cut_profile(g, 1.0, 50, rng);
  std::vector<int> us;
  for (const auto& b : p.buckets) us.push_back(b.u);
  CHECK(us == std::vector<int>{1, 2, 4, 8, 10});
}
