#include "spextral/families.hpp"

namespace spextral {

namespace {
long long choose2(long long m) { return m * (m - 1) / 2; }

void require(bool ok, const std::string& what) {
  if (!ok) throw ArgumentError(what);
}
}  // namespace

ExtremalFamily ExtremalFamily::split(int n, int h) {
  ExtremalFamily f{FamilyKind::Split, n};
  f.h = h;
  f.validate();
  return f;
}

ExtremalFamily ExtremalFamily::split_plus(int n, int h) {
  ExtremalFamily f{FamilyKind::SplitPlus, n};
  f.h = h;
  f.validate();
  return f;
}

ExtremalFamily ExtremalFamily::clique_join_cliques(int n, int k, int l, int r) {
  ExtremalFamily f{FamilyKind::CliqueJoinCliques, n};
  f.k = k;
  f.l = l;
  f.r = r;
  f.validate();
  return f;
}

ExtremalFamily ExtremalFamily::linear_forest_extremal(int n, int k) {
  ExtremalFamily f{FamilyKind::LinearForestExtremal, n};
  f.k = k;
  f.validate();
  return f;
}

ExtremalFamily ExtremalFamily::clique_union_empty(int n, int c) {
  ExtremalFamily f{FamilyKind::CliqueUnionEmpty, n};
  f.h = c;
  f.validate();
  return f;
}

void ExtremalFamily::validate() const {
  require(n >= 0 && n <= Graph::kMaxOrder, "family order out of range");
  switch (kind) {
    case FamilyKind::Split:
      require(h >= 0 && h <= n, "Split requires 0 <= h <= n");
      break;
    case FamilyKind::SplitPlus:
      require(h >= 0 && h <= n, "SplitPlus requires 0 <= h <= n");
      require(n - h >= 2, "SplitPlus requires n - h >= 2");
      break;
    case FamilyKind::CliqueJoinCliques:
      require(k >= 0, "CliqueJoinCliques requires k >= 0");
      require(l >= 2, "CliqueJoinCliques requires l >= 2");
      require(r >= 0 && r < l - 1, "CliqueJoinCliques requires 0 <= r < l-1");
      require(n >= k + r && (n - k - r) % (l - 1) == 0,
              "CliqueJoinCliques requires n = k + d(l-1) + r with d >= 0");
      break;
    case FamilyKind::LinearForestExtremal:
      require(k >= 1, "LinearForestExtremal requires k >= 1");
      require(n >= k - 1, "LinearForestExtremal requires n >= k-1");
      break;
    case FamilyKind::CliqueUnionEmpty:
      require(h >= 0 && h <= n, "CliqueUnionEmpty requires 0 <= clique order <= n");
      break;
  }
}

int ExtremalFamily::derived_d() const {
  switch (kind) {
    case FamilyKind::CliqueJoinCliques:
      return (n - k - r) / (l - 1);
    case FamilyKind::LinearForestExtremal:
      return (n - (k - 1)) / 2;
    default:
      return 0;
  }
}

long long ExtremalFamily::expected_edges() const {
  switch (kind) {
    case FamilyKind::Split:
      return static_cast<long long>(h) * n - static_cast<long long>(h) * (h + 1) / 2;
    case FamilyKind::SplitPlus:
      return static_cast<long long>(h) * n - static_cast<long long>(h) * (h + 1) / 2 + 1;
    case FamilyKind::CliqueJoinCliques:
      return choose2(k) + static_cast<long long>(k) * (n - k) +
             static_cast<long long>(derived_d()) * choose2(l - 1) + choose2(r);
    case FamilyKind::LinearForestExtremal: {
      int s = (n - (k - 1)) % 2;
      return choose2(k - 1) + static_cast<long long>(k - 1) * (n - k + 1) + derived_d() +
             choose2(s);
    }
    case FamilyKind::CliqueUnionEmpty:
      return choose2(h);
  }
  return 0;
}

std::string ExtremalFamily::describe() const {
  switch (kind) {
    case FamilyKind::Split:
      return "split(n=" + std::to_string(n) + ",h=" + std::to_string(h) + ")";
    case FamilyKind::SplitPlus:
      return "split-plus(n=" + std::to_string(n) + ",h=" + std::to_string(h) + ")";
    case FamilyKind::CliqueJoinCliques:
      return "clique-join-cliques(n=" + std::to_string(n) + ",k=" + std::to_string(k) +
             ",l=" + std::to_string(l) + ",r=" + std::to_string(r) + ")";
    case FamilyKind::LinearForestExtremal:
      return "linear-forest(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")";
    case FamilyKind::CliqueUnionEmpty:
      return "clique-union-empty(n=" + std::to_string(n) + ",c=" + std::to_string(h) + ")";
  }
  return "?";
}

namespace {
void add_clique(Graph& g, int from, int size) {
  for (int i = from; i < from + size; ++i)
    for (int j = i + 1; j < from + size; ++j) g.add_edge(i, j);
}

void join_ranges(Graph& g, int a_from, int a_size, int b_from, int b_size) {
  for (int i = a_from; i < a_from + a_size; ++i)
    for (int j = b_from; j < b_from + b_size; ++j) g.add_edge(i, j);
}
}  // namespace

Graph build(const ExtremalFamily& f) {
  f.validate();
  Graph g(f.n);
  switch (f.kind) {
    case FamilyKind::Split:
      add_clique(g, 0, f.h);
      join_ranges(g, 0, f.h, f.h, f.n - f.h);
      break;
    case FamilyKind::SplitPlus:
      add_clique(g, 0, f.h);
      join_ranges(g, 0, f.h, f.h, f.n - f.h);
      g.add_edge(f.h, f.h + 1);
      break;
    case FamilyKind::CliqueJoinCliques: {
      add_clique(g, 0, f.k);
      join_ranges(g, 0, f.k, f.k, f.n - f.k);
      int at = f.k;
      for (int c = 0; c < f.derived_d(); ++c, at += f.l - 1) add_clique(g, at, f.l - 1);
      add_clique(g, at, f.r);
      break;
    }
    case FamilyKind::LinearForestExtremal: {
      add_clique(g, 0, f.k - 1);
      join_ranges(g, 0, f.k - 1, f.k - 1, f.n - (f.k - 1));
      int at = f.k - 1;
      for (int c = 0; c < f.derived_d(); ++c, at += 2) g.add_edge(at, at + 1);
      break;  // trailing K_s with s<2 has no edges
    }
    case FamilyKind::CliqueUnionEmpty:
      add_clique(g, 0, f.h);
      break;
  }
  return g;
}

Graph complete(int n) {
  Graph g(n);
  add_clique(g, 0, n);
  return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph star(int leaves) {
  if (leaves < 0) throw ArgumentError("star: leaves must be >= 0");
  Graph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  if (g.order() + h.order() > Graph::kMaxOrder)
    throw ArgumentError("disjoint_union: combined order exceeds capacity");
  Graph out(g.order() + h.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (g.has_edge(u, v)) out.add_edge(u, v);
  int off = g.order();
  for (int u = 0; u < h.order(); ++u)
    for (int v = u + 1; v < h.order(); ++v)
      if (h.has_edge(u, v)) out.add_edge(off + u, off + v);
  return out;
}

Graph join(const Graph& g, const Graph& h) {
  Graph out = disjoint_union(g, h);
  join_ranges(out, 0, g.order(), g.order(), h.order());
  return out;
}

Graph copies(int k, const Graph& h) {
  if (k < 0) throw ArgumentError("copies: k must be >= 0");
  Graph out(0);
  for (int i = 0; i < k; ++i) out = disjoint_union(out, h);
  return out;
}

}  // namespace spextral
