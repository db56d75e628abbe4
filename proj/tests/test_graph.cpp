#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <ergo/edge_list_io.hpp>
#include <ergo/errors.hpp>
#include <ergo/graph.hpp>
#include <ergo/rng.hpp>

#include <map>
#include <set>
#include <sstream>
#include <string>

#include "test_util.hpp"

using namespace ergo;

TEST_CASE("graph_from_edge_list builds a triangle") {
  Graph g = graph_from_edge_list(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(g.order() == 3);
  CHECK(g.edge_count() == 3);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 2));
  CHECK(g.has_edge(0, 2));
  CHECK(g.degree(0) == 2);
  CHECK(g.degree(1) == 2);
  CHECK(g.degree(2) == 2);
}

TEST_CASE("graph_from_edge_list accepts the empty graph") {
  Graph g = graph_from_edge_list(4, {});
  CHECK(g.order() == 4);
  CHECK(g.edge_count() == 0);
  for (int v = 0; v < 4; ++v) CHECK(g.degree(v) == 0);
}

TEST_CASE("graph_from_edge_list rejects self-loops, duplicates, out-of-range") {
  CHECK_THROWS_AS(graph_from_edge_list(2, {{0, 0}}), input_error);
  CHECK_THROWS_AS(graph_from_edge_list(3, {{0, 1}, {0, 1}}), input_error);
  CHECK_THROWS_AS(graph_from_edge_list(3, {{0, 1}, {1, 0}}), input_error);  // same edge twice
  CHECK_THROWS_AS(graph_from_edge_list(3, {{0, 3}}), input_error);
  CHECK_THROWS_AS(graph_from_edge_list(-1, {}), input_error);

  // endpoint order does not matter in memory; edges() reports u < v
  Graph g = graph_from_edge_list(3, {{2, 0}});
  CHECK(g.edges() == std::vector<Edge>{{0, 2}});
}

TEST_CASE("add_edge and remove_edge enforce simple-graph invariants") {
  Graph g(4);
  g.add_edge(0, 1);
  CHECK_THROWS_AS(g.add_edge(0, 1), input_error);
  CHECK_THROWS_AS(g.add_edge(2, 2), input_error);
  CHECK_THROWS_AS(g.remove_edge(2, 3), input_error);
  g.remove_edge(0, 1);
  CHECK(g.edge_count() == 0);
}

TEST_CASE("edges are reported sorted with u < v") {
  Graph g(5);
  g.add_edge(3, 4);
  g.add_edge(0, 2);
  g.add_edge(0, 1);
  std::vector<Edge> e = g.edges();
  REQUIRE(e.size() == 3);
  CHECK(e[0] == Edge{0, 1});
  CHECK(e[1] == Edge{0, 2});
  CHECK(e[2] == Edge{3, 4});
}

TEST_CASE("energy of named graphs") {
  CHECK(energy(test::cycle(3)) == 12);       // triangle, degrees 2,2,2
  CHECK(energy(test::complete(4)) == 36);    // K4, degrees 3,3,3,3
  CHECK(energy(Graph(5)) == 0);              // empty graph on 5 vertices
}

TEST_CASE("degree_stats on named graphs") {
  DegreeSequence k4 = degree_stats(test::complete(4));
  CHECK(k4.mean == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(k4.variance == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(k4.d_min == 3);
  CHECK(k4.d_max == 3);
  CHECK(k4.total == 12);

  DegreeSequence st = degree_stats(test::star(3));  // degrees 3,1,1,1
  CHECK(st.mean == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(st.variance == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(st.d_min == 1);
  CHECK(st.d_max == 3);

  DegreeSequence empty = degree_stats(Graph(4));
  CHECK(empty.mean == 0.0);
  CHECK(empty.variance == 0.0);
  CHECK(empty.d_min == 0);
  CHECK(empty.d_max == 0);
}

TEST_CASE("cut_stats on named graphs") {
  Graph c6 = test::cycle(6);
  CutStats s = cut_stats(c6, {0, 1, 2});
  CHECK(s.subset_size == 3);
  CHECK(s.internal == 2);
  CHECK(s.crossing == 2);
  CHECK(s.volume == 6);

  CutStats empty = cut_stats(c6, {});
  CHECK(empty.subset_size == 0);
  CHECK(empty.internal == 0);
  CHECK(empty.crossing == 0);
  CHECK(empty.volume == 0);

  CutStats one = cut_stats(test::complete(4), {0});
  CHECK(one.internal == 0);
  CHECK(one.crossing == 3);
  CHECK(one.volume == 3);
}

TEST_CASE("cut_stats rejects bad subsets") {
  Graph g = test::cycle(4);
  CHECK_THROWS_AS(cut_stats(g, {0, 0}), input_error);
  CHECK_THROWS_AS(cut_stats(g, {4}), input_error);
  CHECK_THROWS_AS(cut_stats(g, {-1}), input_error);
}

TEST_CASE("is_connected") {
  CHECK(is_connected(test::cycle(6)));
  CHECK(is_connected(Graph(1)));
  Graph two_edges = graph_from_edge_list(4, {{0, 1}, {2, 3}});
  CHECK_FALSE(is_connected(two_edges));
  CHECK_FALSE(is_connected(Graph(2)));
}

TEST_CASE("handshake, cut identity, and cut symmetry on random graphs") {
  Rng rng = make_rng(2024);
  for (int t = 0; t < 1000; ++t) {
    int n = 2 + static_cast<int>(uniform_below(rng, 14));
    long long m = pair_count(n);
    long long e = static_cast<long long>(uniform_below(rng, static_cast<std::uint64_t>(m + 1)));
    Graph g = uniform_gnm(n, e, rng);

    DegreeSequence ds = degree_stats(g);
    REQUIRE(ds.total == 2 * g.edge_count());
    REQUIRE(energy(g) == energy(ds.degrees));

    // random subset
    std::vector<int> u;
    for (int v = 0; v < n; ++v)
      if (uniform_below(rng, 2) == 1) u.push_back(v);
    std::vector<int> comp;
    {
      std::set<int> in(u.begin(), u.end());
      for (int v = 0; v < n; ++v)
        if (!in.count(v)) comp.push_back(v);
    }
    CutStats cs = cut_stats(g, u);
    CutStats cc = cut_stats(g, comp);
    REQUIRE(2 * cs.internal + cs.crossing == cs.volume);
    REQUIRE(cs.crossing == cc.crossing);
    REQUIRE(cs.internal + cc.internal + cs.crossing == g.edge_count());
  }
}

TEST_CASE("pair_index and pair_from_index are inverse bijections") {
  for (int n : {2, 3, 7, 12}) {
    long long m = pair_count(n);
    long long idx = 0;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        REQUIRE(pair_index(n, u, v) == idx);
        Edge e = pair_from_index(n, idx);
        REQUIRE(e.first == u);
        REQUIRE(e.second == v);
        ++idx;
      }
    }
    REQUIRE(idx == m);
  }
}

TEST_CASE("uniform_gnm respects n and E and hits the complete graph") {
  Rng rng = make_rng(7);
  Graph k = uniform_gnm(4, 6, rng);
  CHECK(k.edge_count() == 6);
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) CHECK(k.has_edge(u, v));

  Graph z = uniform_gnm(5, 0, rng);
  CHECK(z.edge_count() == 0);

  CHECK_THROWS_AS(uniform_gnm(3, 4, rng), input_error);

  // each of the C(10,3) graphs on n=5, E=3 appears with plausible frequency
  const int trials = 30000;
  std::map<std::vector<Edge>, int> freq;
  for (int t = 0; t < trials; ++t) freq[uniform_gnm(5, 3, rng).edges()]++;
  CHECK(freq.size() == 120);
  for (const auto& [k2, v] : freq) {
    double p = static_cast<double>(v) / trials;
    CHECK(p > 1.0 / 120 - 0.006);
    CHECK(p < 1.0 / 120 + 0.006);
  }
}

TEST_CASE("sample_distinct draws sorted distinct indices") {
  Rng rng = make_rng(11);
  for (int t = 0; t < 200; ++t) {
    auto s = sample_distinct(rng, 50, 10);
    REQUIRE(s.size() == 10);
    for (std::size_t i = 0; i + 1 < s.size(); ++i) REQUIRE(s[i] < s[i + 1]);
    REQUIRE(s.back() < 50);
  }
  auto all = sample_distinct(rng, 5, 5);
  CHECK(all == std::vector<std::uint64_t>{0, 1, 2, 3, 4});
  CHECK(sample_distinct(rng, 3, 0).empty());
  CHECK_THROWS_AS(sample_distinct(rng, 3, 4), input_error);
}

TEST_CASE("edge list io round-trips") {
  Rng rng = make_rng(3);
  Graph g = uniform_gnm(9, 13, rng);
  std::ostringstream out;
  write_edge_list(out, g);
  std::istringstream in(out.str());
  Graph h = read_edge_list(in);
  CHECK(h.order() == g.order());
  CHECK(h.edges() == g.edges());
}

TEST_CASE("edge list reader is strict") {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
  };
  CHECK(parse("2 1\n0 1\n").edge_count() == 1);
  CHECK(parse("3 0\n").edge_count() == 0);
  CHECK_THROWS_AS(parse(""), input_error);
  CHECK_THROWS_AS(parse("2\n"), input_error);
  CHECK_THROWS_AS(parse("2 2\n0 1\n"), input_error);          // missing edge line
  CHECK_THROWS_AS(parse("2 1\n1 0\n"), input_error);          // requires u < v
  CHECK_THROWS_AS(parse("2 1\n0 0\n"), input_error);          // self-loop
  CHECK_THROWS_AS(parse("2 1\n0 1\n0 1\n"), input_error);     // trailing content
  CHECK_THROWS_AS(parse("2 1\n0 2\n"), input_error);          // out of range
  CHECK_THROWS_AS(parse("-1 0\n"), input_error);
  CHECK_THROWS_AS(parse("2 1\n0 1 junk\n"), input_error);
  CHECK_THROWS_AS(read_edge_list_file("/nonexistent/path.txt"), io_error);
}
