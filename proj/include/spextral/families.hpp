// families.hpp — deterministic constructors for the named extremal graph families.
//
// Vertex layouts are part of the contract so callers can address hubs and
// cliques without isomorphism search:
//   Split(n,h)              clique on 0..h-1, independent set on h..n-1.
//   SplitPlus(n,h)          Split(n,h) plus the edge {h, h+1}.
//   CliqueJoinCliques       hub clique on 0..k-1, then d cliques of order l-1
//     (n,k,l,r)             back to back, then a clique of order r; the hub is
//                           joined to everything. d = (n-k-r)/(l-1) is derived.
//   LinearForestExtremal    hub clique on 0..k-2 joined to d disjoint edges and
//     (n,k)                 then a clique of order s, with n-(k-1) = 2d+s, s<2.
//   CliqueUnionEmpty(n,c)   clique on 0..c-1 plus n-c isolated vertices.
#pragma once

#include <string>

#include "spextral/graph.hpp"

namespace spextral {

enum class FamilyKind {
  Split,
  SplitPlus,
  CliqueJoinCliques,
  LinearForestExtremal,
  CliqueUnionEmpty,
};

struct ExtremalFamily {
  FamilyKind kind;
  int n = 0;
  int h = 0;  // Split/SplitPlus clique order; CliqueUnionEmpty clique order
  int k = 0;  // CliqueJoinCliques hub order; LinearForestExtremal parameter
  int l = 0;  // CliqueJoinCliques star-path parameter (cliques have order l-1)
  int r = 0;  // CliqueJoinCliques remainder clique order

  static ExtremalFamily split(int n, int h);
  static ExtremalFamily split_plus(int n, int h);
  static ExtremalFamily clique_join_cliques(int n, int k, int l, int r);
  static ExtremalFamily linear_forest_extremal(int n, int k);
  static ExtremalFamily clique_union_empty(int n, int c);

  void validate() const;  // throws ArgumentError naming the violated constraint
  int derived_d() const;  // clique/edge copy count for the joined-union kinds
  long long expected_edges() const;
  std::string describe() const;
};

Graph build(const ExtremalFamily& f);

Graph complete(int n);
Graph empty_graph(int n);
Graph path(int n);
Graph star(int leaves);  // hub at index 0, order leaves+1

Graph disjoint_union(const Graph& g, const Graph& h);  // g's vertices first
Graph join(const Graph& g, const Graph& h);
Graph copies(int k, const Graph& h);

}  // namespace spextral
