#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "spextral/families.hpp"
#include "spextral/graph.hpp"
#include "spextral/search.hpp"

using namespace spextral;

namespace {
Graph random_graph(std::mt19937_64& rng, int n, double p) {
  Graph g(n);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng) < p) g.add_edge(u, v);
  return g;
}
}  // namespace

TEST_CASE("basic adjacency invariants") {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  CHECK(g.has_edge(1, 0));
  CHECK(g.has_edge(2, 1));
  CHECK(!g.has_edge(0, 2));
  CHECK(g.edge_count() == 2);
  CHECK(g.degree(1) == 2);
  CHECK_THROWS_AS(g.add_edge(2, 2), ArgumentError);
  CHECK_THROWS_AS(g.has_edge(0, 4), ArgumentError);
  CHECK_THROWS_AS(Graph(-1), ArgumentError);
  CHECK_THROWS_AS(Graph(Graph::kMaxOrder + 1), ArgumentError);
  CHECK(Graph(0).edge_count() == 0);  // the empty graph is legal everywhere
}

TEST_CASE("edges_between counts overlap twice") {
  // K3 with A = B = V: every edge has both ends in the overlap
  Graph k3 = complete(3);
  VertexSet v3 = k3.vertex_set();
  CHECK(edges_between(k3, v3, v3) == 6);

  // path a-b-c with the two endpoints
  Graph p3 = path(3);
  CHECK(edges_between(p3, VertexSet::of({0}), VertexSet::of({2})) == 0);

  // K4, A = {0,1}, B = {1,2}: direct enumeration gives
  // e(A,B\A) = e({0,1},{2}) = 2, 2e(G[{1}]) = 0, e({0},{1}) = 1, total 3.
  Graph k4 = complete(4);
  CHECK(edges_between(k4, VertexSet::of({0, 1}), VertexSet::of({1, 2})) == 3);

  CHECK_THROWS_AS(edges_between(k3, VertexSet::of({5}), v3), ArgumentError);
}

TEST_CASE("neighborhoods") {
  Graph p4 = path(4);
  CHECK(p4.neighborhood(0) == VertexSet::of({1}));
  CHECK(p4.second_neighborhood(0) == VertexSet::of({2}));

  Graph k4 = complete(4);
  CHECK(k4.second_neighborhood(0).empty());

  // star of order 6, hub 0: from a leaf, distance two reaches the other leaves
  Graph s = build(ExtremalFamily::split(6, 1));
  CHECK(s.neighborhood(1) == VertexSet::of({0}));
  CHECK(s.second_neighborhood(1) == VertexSet::of({2, 3, 4, 5}));
  CHECK((s.neighborhood(1) & s.second_neighborhood(1)).empty());
}

TEST_CASE("induced subgraphs") {
  CHECK(complete(5).induced(VertexSet::of({0, 2, 4})) == complete(3));

  Graph c5 = path(5).with_edge(0, 4);
  CHECK(c5.induced(VertexSet::of({0, 1})).edge_count() == 1);

  // two clique vertices plus the extra-edge pair of a split-plus graph induce
  // K2 v K2 = K4: 1 clique edge + 1 planted edge + 4 join edges = 6
  Graph sp = build(ExtremalFamily::split_plus(8, 2));
  Graph ind = sp.induced(VertexSet::of({0, 1, 2, 3}));
  CHECK(ind.order() == 4);
  CHECK(ind.edge_count() == 6);
}

TEST_CASE("graph6 frozen encodings") {
  CHECK(complete(1).to_graph6() == "@");
  CHECK(complete(2).to_graph6() == "A_");  // single bit 1 -> 100000 + 63 = '_'
  CHECK(complete(3).to_graph6() == "Bw");  // bits 111000 -> 56 + 63 = 'w'
  CHECK(Graph::from_graph6("@") == complete(1));
  CHECK(Graph::from_graph6("A_") == complete(2));
  CHECK(Graph::from_graph6("Bw") == complete(3));
  CHECK(Graph::from_graph6(">>graph6<<Bw") == complete(3));
}

TEST_CASE("graph6 parse errors carry byte offsets") {
  CHECK_THROWS_AS(Graph::from_graph6(""), ParseError);
  CHECK_THROWS_AS(Graph::from_graph6("B"), ParseError);     // truncated
  CHECK_THROWS_AS(Graph::from_graph6("Bww"), ParseError);   // trailing garbage
  CHECK_THROWS_AS(Graph::from_graph6("B\x20"), ParseError); // byte below 63
  CHECK_THROWS_AS(Graph::from_graph6("A`"), ParseError);    // nonzero padding
  CHECK_THROWS_AS(Graph::from_graph6("~~~~~~~~"), ParseError);
  try {
    Graph::from_graph6("Bww");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 2);
  }
}

TEST_CASE("graph6 long-form order encoding") {
  Graph g(63);
  g.add_edge(0, 62);
  std::string enc = g.to_graph6();
  CHECK(enc[0] == '~');
  CHECK(Graph::from_graph6(enc) == g);

  Graph big = build(ExtremalFamily::split(200, 2));
  CHECK(Graph::from_graph6(big.to_graph6()) == big);
}

TEST_CASE("graph6 round trip on censuses and random graphs") {
  for (int n = 1; n <= 5; ++n)
    enumerate_graphs(n, [&](const Graph& g) { CHECK(Graph::from_graph6(g.to_graph6()) == g); });
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int t = 0; t < 300; ++t) {
    int n = 1 + static_cast<int>(rng() % 12);
    Graph g = random_graph(rng, n, unif(rng));
    CHECK(Graph::from_graph6(g.to_graph6()) == g);
  }
}

TEST_CASE("subset identities on random instances") {
  std::mt19937_64 rng(777);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int t = 0; t < 500; ++t) {
    int n = static_cast<int>(rng() % 15);
    Graph g = random_graph(rng, n, unif(rng));
    VertexSet a, b;
    for (int v = 0; v < n; ++v) {
      if (rng() & 1) a.add(v);
      if (rng() & 1) b.add(v);
    }
    long long eab = edges_between(g, a, b);
    CHECK(eab == edges_between(g, a, b - a) + 2 * g.induced(a & b).edge_count() +
                     edges_between(g, a - b, a & b));
    CHECK(eab <= g.induced(a | b).edge_count() + g.induced(a & b).edge_count());
    CHECK(g.induced(a | b).edge_count() + g.induced(a & b).edge_count() <= 2 * g.edge_count());
    CHECK(eab <= static_cast<long long>(a.count()) * b.count());
  }
}

TEST_CASE("components and connectivity") {
  Graph g = disjoint_union(complete(3), path(2));
  auto comps = g.components();
  CHECK(comps.size() == 2);
  CHECK(comps[0].count() == 3);
  CHECK(!g.is_connected());
  CHECK(path(5).is_connected());
  CHECK(Graph(0).is_connected());
  CHECK(Graph(1).is_connected());
}

TEST_CASE("multi-graph file reading") {
  std::stringstream ss;
  ss << ">>graph6<<Bw\n\n@\nA_\n";
  auto graphs = read_graph6_lines(ss);
  REQUIRE(graphs.size() == 3);
  CHECK(graphs[0] == complete(3));
  CHECK(graphs[1] == complete(1));
  CHECK(graphs[2] == complete(2));
}
