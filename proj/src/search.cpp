#include "spextral/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <thread>

#include "spextral/spectral.hpp"

namespace spextral {

namespace {

constexpr int kEnumMax = 10;
constexpr int kCanonMax = 16;

// Small labeled graph, one adjacency word per vertex.
struct SG {
  int n = 0;
  std::array<std::uint64_t, kCanonMax> rows{};

  void add(int u, int v) {
    rows[u] |= std::uint64_t{1} << v;
    rows[v] |= std::uint64_t{1} << u;
  }
  void cut(int u, int v) {
    rows[u] &= ~(std::uint64_t{1} << v);
    rows[v] &= ~(std::uint64_t{1} << u);
  }
  bool edge(int u, int v) const { return (rows[u] >> v) & 1u; }
  long long edges() const {
    long long twice = 0;
    for (int v = 0; v < n; ++v) twice += std::popcount(rows[v]);
    return twice / 2;
  }
};

Graph to_graph(const SG& s) {
  Graph g(s.n);
  for (int v = 0; v < s.n; ++v) {
    std::uint64_t bits = s.rows[v] >> (v + 1);
    while (bits) {
      int u = v + 1 + __builtin_ctzll(bits);
      bits &= bits - 1;
      g.add_edge(v, u);
    }
  }
  return g;
}

SG from_graph(const Graph& g) {
  SG s;
  s.n = g.order();
  for (int v = 0; v < s.n; ++v) s.rows[v] = g.row(v).empty() ? 0 : g.row(v)[0];
  return s;
}

// Mask of vertices interchangeable with v by a transposition automorphism.
// u and v are twins iff their adjacencies agree outside {u, v}.
std::array<std::uint64_t, kCanonMax> twin_masks(const SG& g) {
  std::array<std::uint64_t, kCanonMax> tw{};
  for (int u = 0; u < g.n; ++u) {
    for (int v = u + 1; v < g.n; ++v) {
      std::uint64_t m = ~((std::uint64_t{1} << u) | (std::uint64_t{1} << v));
      if ((g.rows[u] & m) == (g.rows[v] & m)) {
        tw[u] |= std::uint64_t{1} << v;
        tw[v] |= std::uint64_t{1} << u;
      }
    }
  }
  return tw;
}

// Column j of the graph6 bit matrix under a placement: bit for placed
// position i (i < j) is adjacency(placed[i], v), most significant first.
std::uint64_t column_bits(const SG& g, const int* placed, int depth, int v) {
  std::uint64_t col = 0;
  for (int i = 0; i < depth; ++i) col = (col << 1) | ((g.rows[v] >> placed[i]) & 1u);
  return col;
}

// True iff the identity labeling realizes the minimum graph6 string.
bool is_min_labeled(const SG& g) {
  std::uint64_t target[kCanonMax];
  for (int j = 0; j < g.n; ++j) {
    std::uint64_t col = 0;
    for (int i = 0; i < j; ++i) col = (col << 1) | (g.edge(i, j) ? 1 : 0);
    target[j] = col;
  }
  auto tw = twin_masks(g);
  int placed[kCanonMax];
  bool smaller = false;

  std::function<void(int, std::uint64_t)> dfs = [&](int depth, std::uint64_t used) {
    if (smaller || depth == g.n) return;
    std::uint64_t cand = ((g.n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.n) - 1)) & ~used;
    std::uint64_t seen_twins = 0;
    while (cand) {
      int v = __builtin_ctzll(cand);
      cand &= cand - 1;
      if (tw[v] & seen_twins) continue;  // a twin was already tried here
      seen_twins |= std::uint64_t{1} << v;
      std::uint64_t col = column_bits(g, placed, depth, v);
      if (col > target[depth]) continue;
      if (col < target[depth]) {
        smaller = true;
        return;
      }
      placed[depth] = v;
      dfs(depth + 1, used | (std::uint64_t{1} << v));
      if (smaller) return;
    }
  };
  dfs(0, 0);
  return !smaller;
}

// Minimum-string labeling by branch and bound, seeded with the identity.
// Invariant: the placed prefix always matches the best prefix column for
// column; improving a column resets every deeper best column to +inf.
std::array<int, kCanonMax> min_labeling(const SG& g) {
  std::uint64_t best[kCanonMax];
  std::array<int, kCanonMax> best_perm{};
  for (int j = 0; j < g.n; ++j) {
    std::uint64_t col = 0;
    for (int i = 0; i < j; ++i) col = (col << 1) | (g.edge(i, j) ? 1 : 0);
    best[j] = col;
    best_perm[j] = j;
  }
  auto tw = twin_masks(g);
  int placed[kCanonMax];

  std::function<void(int, std::uint64_t)> dfs = [&](int depth, std::uint64_t used) {
    if (depth == g.n) {
      std::copy(placed, placed + g.n, best_perm.begin());
      return;
    }
    std::uint64_t cand = ((g.n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.n) - 1)) & ~used;
    std::uint64_t seen_twins = 0;
    while (cand) {
      int v = __builtin_ctzll(cand);
      cand &= cand - 1;
      if (tw[v] & seen_twins) continue;
      seen_twins |= std::uint64_t{1} << v;
      std::uint64_t col = column_bits(g, placed, depth, v);
      if (col > best[depth]) continue;
      if (col < best[depth]) {
        best[depth] = col;
        for (int j = depth + 1; j < g.n; ++j) best[j] = ~std::uint64_t{0};
      }
      placed[depth] = v;
      dfs(depth + 1, used | (std::uint64_t{1} << v));
    }
  };
  dfs(0, 0);
  return best_perm;
}

SG apply_perm(const SG& g, const std::array<int, kCanonMax>& perm) {
  // perm[pos] = original vertex placed at pos
  int inv[kCanonMax];
  for (int p = 0; p < g.n; ++p) inv[perm[p]] = p;
  SG out;
  out.n = g.n;
  for (int p = 0; p < g.n; ++p) {
    std::uint64_t bits = g.rows[perm[p]];
    while (bits) {
      int u = __builtin_ctzll(bits);
      bits &= bits - 1;
      out.rows[p] |= std::uint64_t{1} << inv[u];
    }
  }
  return out;
}

}  // namespace

std::string canonical_graph6(const Graph& g) {
  if (g.order() > kCanonMax)
    throw ArgumentError("canonical_graph6: supports order <= " + std::to_string(kCanonMax));
  SG s = from_graph(g);
  return to_graph(apply_perm(s, min_labeling(s))).to_graph6();
}

// ------------------------------------------------------ orderly generation

namespace {

struct Partial {
  long long best_edges = -1;
  std::vector<std::string> edge_certs;              // canonical g6 at best_edges
  std::vector<std::pair<double, std::string>> rho_certs;  // within tol of local max
  double best_rho = -1.0;
  unsigned long long examined = 0;
};

struct Enumerator {
  int n;
  const ForestPattern* filter;  // prune subtrees containing the pattern

  bool keep(const SG& g) const { return !filter || is_free(to_graph(g), *filter); }

  template <typename Fn>
  void children(const SG& g, Fn&& fn) const {
    SG child;
    child.n = g.n + 1;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.n); ++s) {
      for (int v = 0; v < g.n; ++v)
        child.rows[v] = g.rows[v] | (((s >> v) & 1u) << g.n);
      child.rows[g.n] = s;
      if (is_min_labeled(child)) fn(child);
    }
  }

  // Expand g (level < n, canonical, kept) down to level n.
  template <typename Visit>
  void expand(const SG& g, Partial& acc, Visit&& visit) const {
    children(g, [&](const SG& c) {
      if (c.n == n) {
        ++acc.examined;
        if (keep(c)) visit(c, acc);
      } else if (keep(c)) {
        expand(c, acc, visit);
      }
    });
  }
};

template <typename Visit>
void run_enumeration(int n, const ForestPattern* filter, int jobs, Partial& total, Visit&& visit) {
  if (n < 1 || n > kEnumMax)
    throw ArgumentError("enumeration supports 1 <= n <= " + std::to_string(kEnumMax));
  Enumerator en{n, filter};

  SG k1;
  k1.n = 1;
  if (n == 1) {
    ++total.examined;
    if (en.keep(k1)) visit(k1, total);
    return;
  }
  if (!en.keep(k1)) return;

  // Grow a frontier breadth-first until there is enough parallel work, then
  // let workers finish the subtrees depth-first. Merge order is fixed by the
  // frontier order, so reports do not depend on the worker count.
  std::vector<SG> frontier{k1};
  int level = 1;
  while (level + 1 < n && frontier.size() < 48) {
    std::vector<SG> next;
    for (const SG& g : frontier)
      en.children(g, [&](const SG& c) {
        if (en.keep(c)) next.push_back(c);
      });
    frontier = std::move(next);
    ++level;
    if (frontier.empty()) return;
  }

  std::vector<Partial> parts(frontier.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < frontier.size(); ++i) en.expand(frontier[i], parts[i], visit);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= frontier.size()) break;
        en.expand(frontier[i], parts[i], visit);
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const Partial& p : parts) {
    total.examined += p.examined;
    if (p.best_edges > total.best_edges) {
      total.best_edges = p.best_edges;
      total.edge_certs = p.edge_certs;
    } else if (p.best_edges == total.best_edges && p.best_edges >= 0) {
      total.edge_certs.insert(total.edge_certs.end(), p.edge_certs.begin(), p.edge_certs.end());
    }
    total.best_rho = std::max(total.best_rho, p.best_rho);
    total.rho_certs.insert(total.rho_certs.end(), p.rho_certs.begin(), p.rho_certs.end());
  }
}

void check_gate(int n, const SearchOptions& opts) {
  if (n >= 10 && !opts.allow_gated)
    throw ArgumentError("n = 10 exhaustive search is gated; enable it explicitly");
}

}  // namespace

void enumerate_graphs(int n, const std::function<void(const Graph&)>& visit) {
  Partial total;
  run_enumeration(n, nullptr, 1, total, [&](const SG& g, Partial&) { visit(to_graph(g)); });
}

std::vector<Graph> graph_census(int n) {
  std::vector<Graph> out;
  enumerate_graphs(n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

SearchReport brute_ex(int n, const ForestPattern& f, const SearchOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  SearchReport rep;
  rep.objective = "edges";
  rep.pattern = f.to_string();
  rep.n = n;

  Partial total;
  if (opts.universe) {
    for (const Graph& g : *opts.universe) {
      if (g.order() != n) throw ArgumentError("universe graph has wrong order");
      ++total.examined;
      if (!is_free(g, f)) continue;
      long long e = g.edge_count();
      if (e > total.best_edges) {
        total.best_edges = e;
        total.edge_certs.clear();
      }
      if (e == total.best_edges) total.edge_certs.push_back(canonical_graph6(g));
    }
    std::sort(total.edge_certs.begin(), total.edge_certs.end());
    total.edge_certs.erase(std::unique(total.edge_certs.begin(), total.edge_certs.end()),
                           total.edge_certs.end());
  } else {
    check_gate(n, opts);
    run_enumeration(n, &f, opts.jobs, total, [](const SG& g, Partial& acc) {
      long long e = g.edges();
      if (e > acc.best_edges) {
        acc.best_edges = e;
        acc.edge_certs.clear();
      }
      if (e == acc.best_edges) acc.edge_certs.push_back(to_graph(g).to_graph6());
    });
    std::sort(total.edge_certs.begin(), total.edge_certs.end());
  }

  rep.best_edges = total.best_edges;
  rep.certificates = std::move(total.edge_certs);
  rep.enumerated = total.examined;
  rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

SearchReport brute_ex_sp(int n, const ForestPattern& f, const SearchOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  SearchReport rep;
  rep.objective = "rho";
  rep.pattern = f.to_string();
  rep.n = n;
  rep.tol = opts.tol;

  auto rho_of = [&](const Graph& g) -> double {
    try {
      return power_iteration(g, 1e-12, 100000).rho;
    } catch (const ConvergenceError& e) {
      throw ConvergenceError(std::string(e.what()) + " on " + g.to_graph6(), e.best());
    }
  };

  Partial total;
  if (opts.universe) {
    for (const Graph& g : *opts.universe) {
      if (g.order() != n) throw ArgumentError("universe graph has wrong order");
      ++total.examined;
      if (!is_free(g, f)) continue;
      double r = rho_of(g);
      total.best_rho = std::max(total.best_rho, r);
      if (r >= total.best_rho - opts.tol) total.rho_certs.emplace_back(r, canonical_graph6(g));
    }
  } else {
    check_gate(n, opts);
    run_enumeration(n, &f, opts.jobs, total, [&](const SG& g, Partial& acc) {
      double r = rho_of(to_graph(g));
      if (r > acc.best_rho) acc.best_rho = r;
      if (r >= acc.best_rho - opts.tol) acc.rho_certs.emplace_back(r, to_graph(g).to_graph6());
    });
  }

  rep.best_rho = total.best_rho;
  std::vector<std::string> certs;
  for (const auto& [r, g6] : total.rho_certs)
    if (r >= total.best_rho - opts.tol) certs.push_back(g6);
  std::sort(certs.begin(), certs.end());
  certs.erase(std::unique(certs.begin(), certs.end()), certs.end());
  rep.certificates = std::move(certs);
  rep.enumerated = total.examined;
  rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

// --------------------------------------------------- second edge-count oracle

long long maximal_free_count(int n, const ForestPattern& f) {
  if (n < 1 || n > kEnumMax)
    throw ArgumentError("maximal_free_count supports 1 <= n <= " + std::to_string(kEnumMax));
  SG g;
  g.n = n;
  if (contains_forest(to_graph(g), f)) return -1;  // edgeless pattern fits everywhere

  // vertex pairs row by row: all edges at vertex 0 first, then vertex 1, ...
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> row_end;  // index after the last pair of row i
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    row_end.push_back(static_cast<int>(pairs.size()));
  }
  const int m = static_cast<int>(pairs.size());
  long long best = -1;

  std::function<void(int, long long)> dfs = [&](int idx, long long edges) {
    if (edges + (m - idx) <= best) return;
    if (idx == m) {
      best = std::max(best, edges);
      return;
    }
    auto [i, j] = pairs[idx];
    // include: vertex 0's neighborhood is forced to be a prefix {1..d}; every
    // isomorphism class has such a labeling, so nothing is lost.
    bool allowed = i != 0 || j == 1 || g.edge(0, j - 1);
    if (allowed) {
      g.add(i, j);
      if (!contains_forest(to_graph(g), f)) dfs(idx + 1, edges + 1);
      g.cut(i, j);
    }
    // exclude: skipping one vertex-0 edge forces the rest of row 0 out too
    int next = (i == 0) ? row_end[0] : idx + 1;
    dfs(next, edges);
  };
  dfs(0, 0);
  return best;
}

}  // namespace spextral
