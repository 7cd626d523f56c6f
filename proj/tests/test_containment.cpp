#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "spextral/containment.hpp"
#include "spextral/families.hpp"

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

Graph cycle(int n) { return path(n).with_edge(0, n - 1); }
}  // namespace

TEST_CASE("pattern text syntax") {
  ForestPattern f = ForestPattern::parse("2S3+1P4");
  CHECK(f.stars == std::vector<int>{3, 3});
  CHECK(f.paths == std::vector<int>{4});
  CHECK(f.total_order() == 12);
  CHECK(f.to_string() == "2S3+1P4");

  CHECK(ForestPattern::parse("1S1+1P2") == ForestPattern::parse("2P2"));  // S1 = P2
  CHECK(ForestPattern::parse("1S2") == ForestPattern::parse("1P3"));      // S2 = P3

  CHECK_THROWS_AS(ForestPattern::parse(""), ParseError);
  CHECK_THROWS_AS(ForestPattern::parse("2S"), ParseError);
  CHECK_THROWS_AS(ForestPattern::parse("S3"), ParseError);
  CHECK_THROWS_AS(ForestPattern::parse("1S3+"), ParseError);
  CHECK_THROWS_AS(ForestPattern::parse("1X3"), ParseError);
  CHECK_THROWS_AS(ForestPattern::make({0}, {}), ArgumentError);
}

TEST_CASE("has_path frozen cases") {
  CHECK(!has_path(star(4), 4));          // longest path in a star has order 3
  CHECK(has_path(cycle(5), 5));
  Graph s92 = build(ExtremalFamily::split(9, 2));
  CHECK(has_path(s92, 5));               // alternate hub/leaf
  CHECK(!has_path(s92, 6));              // two hubs cap the alternation at 5
  CHECK(has_path(complete(1), 1));
  CHECK(!has_path(Graph(0), 1));
  CHECK_THROWS_AS(has_path(complete(2), 0), ArgumentError);
}

TEST_CASE("max matching frozen cases") {
  CHECK(max_matching_size(path(4)) == 2);
  CHECK(max_matching_size(cycle(5)) == 2);
  CHECK(max_matching_size(build(ExtremalFamily::split(9, 2))) == 2);
  CHECK(max_matching_size(Graph(0)) == 0);
  CHECK(max_matching_size(complete(8)) == 4);
}

TEST_CASE("contains_forest frozen cases") {
  CHECK(contains_forest(cycle(5), ForestPattern::parse("1P5")));
  CHECK(!contains_forest(build(ExtremalFamily::split(9, 2)), ForestPattern::parse("1S3+1P4")));
  CHECK(!contains_forest(disjoint_union(complete(7), complete(1)), ForestPattern::parse("2S3")));
  CHECK(!contains_forest(build(ExtremalFamily::split_plus(12, 2)), ForestPattern::parse("1S4+1P5")));
  CHECK(contains_forest(complete(10), ForestPattern::parse("1S3+1P4")));
}

TEST_CASE("is_free frozen cases") {
  ForestPattern f = ForestPattern::parse("1S3+1P4");
  CHECK(is_free(empty_graph(10), ForestPattern::parse("1P2")));
  CHECK(!is_free(complete(10), f));
  CHECK(is_free(build(ExtremalFamily::clique_join_cliques(14, 1, 4, 1)), f));
}

TEST_CASE("naive oracle frozen cases") {
  CHECK(naive_injection_oracle(path(3), ForestPattern::parse("1P1")));
  CHECK(naive_injection_oracle(complete(2), ForestPattern::parse("1S1")));
  CHECK(!naive_injection_oracle(copies(2, complete(2)), ForestPattern::parse("1P3")));
}

TEST_CASE("embedding certificates verify") {
  ForestPattern f = ForestPattern::parse("1S3+1P4");
  Embedding emb;
  REQUIRE(contains_forest(complete(10), f, &emb));
  CHECK(verify_embedding(complete(10), f, emb));
  CHECK(emb.size() == 2);

  // a corrupted embedding must fail verification
  Embedding bad = emb;
  bad[0].vertices[0] = bad[1].vertices[0];
  CHECK(!verify_embedding(complete(10), f, bad));
}

TEST_CASE("order guard and empty pattern") {
  ForestPattern big = ForestPattern::parse("2S3+2P4");
  CHECK(big.total_order() == 16);
  CHECK(!contains_forest(complete(15), big));
  CHECK(contains_forest(complete(16), big));
  CHECK(contains_forest(Graph(0), ForestPattern::make({}, {})));
}

TEST_CASE("pattern algebra") {
  std::mt19937_64 rng(4242);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int t = 0; t < 200; ++t) {
    int n = 1 + static_cast<int>(rng() % 9);
    Graph g = random_graph(rng, n, unif(rng));
    CHECK(contains_forest(g, ForestPattern::parse("1P2")) == (g.edge_count() >= 1));
    for (int k = 1; k <= 3; ++k) {
      ForestPattern kp2 = ForestPattern::make({}, std::vector<int>(k, 2));
      CHECK(contains_forest(g, kp2) == (max_matching_size(g) >= k));
    }
    for (int l = 1; l <= n; ++l) {
      ForestPattern pl = ForestPattern::make({}, {l});
      CHECK(has_path(g, l) == contains_forest(g, pl));
    }
  }
}

TEST_CASE("containment is monotone under edge addition") {
  std::mt19937_64 rng(515151);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  ForestPattern f = ForestPattern::parse("1S3+1P4");
  for (int t = 0; t < 100; ++t) {
    int n = 8 + static_cast<int>(rng() % 3);
    Graph g = random_graph(rng, n, unif(rng));
    if (!contains_forest(g, f)) continue;
    int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
    if (u == v || g.has_edge(u, v)) continue;
    CHECK(contains_forest(g.with_edge(u, v), f));
  }
}

TEST_CASE("oracle agreement on random instances") {
  std::mt19937_64 rng(987654);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int t = 0; t < 300; ++t) {
    int n = 1 + static_cast<int>(rng() % 8);
    Graph g = random_graph(rng, n, unif(rng));
    std::vector<int> stars, paths;
    int budget = 8;
    while (budget > 0 && (rng() % 3) != 0) {
      if (rng() & 1) {
        int s = 1 + static_cast<int>(rng() % 4);
        if (s + 1 <= budget) {
          stars.push_back(s);
          budget -= s + 1;
        }
      } else {
        int p = 1 + static_cast<int>(rng() % 5);
        if (p <= budget) {
          paths.push_back(p);
          budget -= p;
        }
      }
    }
    if (stars.empty() && paths.empty()) paths.push_back(2);
    ForestPattern f = ForestPattern::make(stars, paths);
    CHECK(contains_forest(g, f) == naive_injection_oracle(g, f));
  }
}

TEST_CASE("containment rejects graphs beyond one machine word") {
  Graph big(65);
  CHECK_THROWS_AS(has_path(big, 2), ArgumentError);
  CHECK_THROWS_AS(contains_forest(big, ForestPattern::parse("1P2")), ArgumentError);
}
