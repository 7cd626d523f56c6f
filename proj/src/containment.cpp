#include "spextral/containment.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <functional>

namespace spextral {

// ------------------------------------------------------------ ForestPattern

ForestPattern ForestPattern::make(std::vector<int> star_leaves, std::vector<int> path_orders) {
  ForestPattern f;
  for (int s : star_leaves) {
    if (s < 1) throw ArgumentError("star leaf count must be >= 1");
    if (s == 1)
      f.paths.push_back(2);  // S1 is an edge
    else if (s == 2)
      f.paths.push_back(3);  // S2 is the same graph as P3
    else
      f.stars.push_back(s);
  }
  for (int p : path_orders) {
    if (p < 1) throw ArgumentError("path order must be >= 1");
    f.paths.push_back(p);
  }
  std::sort(f.stars.rbegin(), f.stars.rend());
  std::sort(f.paths.rbegin(), f.paths.rend());
  return f;
}

ForestPattern ForestPattern::parse(std::string_view text) {
  std::vector<int> stars, paths;
  std::size_t i = 0;
  auto read_int = [&]() -> long long {
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw ParseError("expected integer in pattern", i);
    long long v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i] - '0');
      if (v > 1000000) throw ParseError("pattern integer too large", i);
      ++i;
    }
    return v;
  };
  if (text.empty()) throw ParseError("empty pattern", 0);
  while (true) {
    long long count = read_int();
    if (i >= text.size() || (text[i] != 'S' && text[i] != 'P'))
      throw ParseError("expected 'S' or 'P' in pattern term", i);
    char kind = text[i++];
    long long size = read_int();
    if (count > 64 || size > 64 || count * size > 64)
      throw ParseError("pattern exceeds supported order", i);
    for (long long c = 0; c < count; ++c) {
      if (kind == 'S')
        stars.push_back(static_cast<int>(size));
      else
        paths.push_back(static_cast<int>(size));
    }
    if (i == text.size()) break;
    if (text[i] != '+') throw ParseError("expected '+' between pattern terms", i);
    ++i;
  }
  return make(std::move(stars), std::move(paths));
}

int ForestPattern::total_order() const {
  int t = 0;
  for (int s : stars) t += s + 1;
  for (int p : paths) t += p;
  return t;
}

std::string ForestPattern::to_string() const {
  std::string out;
  auto emit = [&](const std::vector<int>& xs, char kind) {
    for (std::size_t i = 0; i < xs.size();) {
      std::size_t j = i;
      while (j < xs.size() && xs[j] == xs[i]) ++j;
      if (!out.empty()) out += '+';
      out += std::to_string(j - i);
      out += kind;
      out += std::to_string(xs[i]);
      i = j;
    }
  };
  emit(stars, 'S');
  emit(paths, 'P');
  return out.empty() ? "0P1" : out;
}

// --------------------------------------------------------- small-graph view

namespace {

struct Rows {
  std::uint64_t adj[64] = {};
  int n = 0;
};

Rows rows_of(const Graph& g, const char* who) {
  if (g.order() > 64) throw ArgumentError(std::string(who) + ": supports order <= 64 only");
  Rows r;
  r.n = g.order();
  for (int v = 0; v < r.n; ++v) r.adj[v] = g.row(v).empty() ? 0 : g.row(v)[0];
  return r;
}

std::uint64_t full_mask(int n) { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

// Vertices reachable from seed staying inside allowed (which contains seed).
std::uint64_t flood(const Rows& g, std::uint64_t seed, std::uint64_t allowed) {
  std::uint64_t reach = seed & allowed;
  while (true) {
    std::uint64_t next = reach;
    std::uint64_t bits = reach;
    while (bits) {
      int v = __builtin_ctzll(bits);
      bits &= bits - 1;
      next |= g.adj[v] & allowed;
    }
    if (next == reach) return reach;
    reach = next;
  }
}

// ------------------------------------------------------------ path search

bool dfs_path(const Rows& g, int tip, int need, std::uint64_t visited, std::uint64_t avail,
              std::vector<int>* trail) {
  if (need == 0) return true;
  std::uint64_t cand = g.adj[tip] & avail & ~visited;
  if (cand == 0) return false;
  if (std::popcount(flood(g, cand, avail & ~visited)) < need) return false;
  while (cand) {
    int v = __builtin_ctzll(cand);
    cand &= cand - 1;
    if (trail) trail->push_back(v);
    if (dfs_path(g, v, need - 1, visited | (std::uint64_t{1} << v), avail, trail)) return true;
    if (trail) trail->pop_back();
  }
  return false;
}

bool find_path(const Rows& g, int l, std::uint64_t avail, std::vector<int>* trail) {
  if (l <= 0) return true;
  if (std::popcount(avail) < l) return false;
  std::uint64_t starts = avail;
  while (starts) {
    int s = __builtin_ctzll(starts);
    starts &= starts - 1;
    if (std::popcount(flood(g, std::uint64_t{1} << s, avail)) < l) continue;
    if (trail) trail->assign(1, s);
    if (dfs_path(g, s, l - 1, std::uint64_t{1} << s, avail, trail)) return true;
  }
  if (trail) trail->clear();
  return false;
}

// ------------------------------------------------------- forest embedding

struct Comp {
  bool star;
  int size;  // star: leaf count; path: order
};

struct ForestSearch {
  const Rows& g;
  std::vector<Comp> comps;
  std::vector<int> suffix_order;  // total order of comps[i..]
  Embedding* out;
  Embedding trail;

  ForestSearch(const Rows& graph, const ForestPattern& f, Embedding* embedding)
      : g(graph), out(embedding) {
    for (int p : f.paths) comps.push_back({false, p});
    for (int s : f.stars) comps.push_back({true, s});
    // paths first (descending), then stars (descending): long components
    // placed early shrink the search; correctness does not depend on order.
    suffix_order.assign(comps.size() + 1, 0);
    for (std::size_t i = comps.size(); i-- > 0;)
      suffix_order[i] = suffix_order[i + 1] + (comps[i].star ? comps[i].size + 1 : comps[i].size);
  }

  // prev_key orders embeddings of identical adjacent components (star: hub,
  // path: smaller endpoint) to cut permutation symmetry.
  bool place(std::size_t ci, std::uint64_t used, int prev_key) {
    if (ci == comps.size()) return true;
    std::uint64_t free = full_mask(g.n) & ~used;
    if (std::popcount(free) < suffix_order[ci]) return false;
    const Comp& c = comps[ci];
    bool same_as_prev = ci > 0 && comps[ci - 1].star == c.star && comps[ci - 1].size == c.size;
    int floor_key = same_as_prev ? prev_key : -1;
    if (c.star) return place_star(ci, used, free, floor_key);
    return place_path(ci, used, free, floor_key);
  }

  bool place_star(std::size_t ci, std::uint64_t used, std::uint64_t free, int floor_key) {
    const Comp& c = comps[ci];
    std::uint64_t hubs = free;
    while (hubs) {
      int hub = __builtin_ctzll(hubs);
      hubs &= hubs - 1;
      if (hub <= floor_key) continue;
      std::uint64_t nbrs = g.adj[hub] & free & ~(std::uint64_t{1} << hub);
      if (std::popcount(nbrs) < c.size) continue;
      std::vector<int> cand;
      std::uint64_t bits = nbrs;
      while (bits) {
        cand.push_back(__builtin_ctzll(bits));
        bits &= bits - 1;
      }
      std::vector<int> leaves;
      if (choose_leaves(ci, hub, used | (std::uint64_t{1} << hub), cand, 0, c.size, leaves))
        return true;
    }
    return false;
  }

  bool choose_leaves(std::size_t ci, int hub, std::uint64_t used, const std::vector<int>& cand,
                     std::size_t from, int need, std::vector<int>& leaves) {
    if (need == 0) {
      trail.push_back({true, {}});
      trail.back().vertices.push_back(hub);
      std::uint64_t mask = 0;
      for (int v : leaves) {
        trail.back().vertices.push_back(v);
        mask |= std::uint64_t{1} << v;
      }
      if (place(ci + 1, used | mask, hub)) return true;
      trail.pop_back();
      return false;
    }
    for (std::size_t i = from; i + need <= cand.size() + 0u; ++i) {
      leaves.push_back(cand[i]);
      if (choose_leaves(ci, hub, used, cand, i + 1, need - 1, leaves)) return true;
      leaves.pop_back();
    }
    return false;
  }

  bool place_path(std::size_t ci, std::uint64_t used, std::uint64_t free, int floor_key) {
    const Comp& c = comps[ci];
    if (c.size == 1) {
      std::uint64_t bits = free;
      while (bits) {
        int v = __builtin_ctzll(bits);
        bits &= bits - 1;
        if (v <= floor_key) continue;
        trail.push_back({false, {v}});
        if (place(ci + 1, used | (std::uint64_t{1} << v), v)) return true;
        trail.pop_back();
      }
      return false;
    }
    std::vector<int> seq;
    std::uint64_t starts = free;
    while (starts) {
      int s = __builtin_ctzll(starts);
      starts &= starts - 1;
      seq.assign(1, s);
      if (grow_path(ci, used, free, seq, std::uint64_t{1} << s, floor_key)) return true;
    }
    return false;
  }

  bool grow_path(std::size_t ci, std::uint64_t used, std::uint64_t free, std::vector<int>& seq,
                 std::uint64_t mask, int floor_key) {
    const Comp& c = comps[ci];
    if (static_cast<int>(seq.size()) == c.size) {
      // canonical direction: smaller endpoint first; identical comps ordered
      int a = seq.front(), b = seq.back();
      if (a > b) return false;
      if (std::min(a, b) <= floor_key) return false;
      trail.push_back({false, seq});
      if (place(ci + 1, used | mask, std::min(a, b))) return true;
      trail.pop_back();
      return false;
    }
    int tip = seq.back();
    std::uint64_t cand = g.adj[tip] & free & ~mask;
    int need = c.size - static_cast<int>(seq.size());
    if (std::popcount(flood(g, cand, free & ~mask)) < need) return false;
    while (cand) {
      int v = __builtin_ctzll(cand);
      cand &= cand - 1;
      seq.push_back(v);
      if (grow_path(ci, used, free, seq, mask | (std::uint64_t{1} << v), floor_key)) return true;
      seq.pop_back();
    }
    return false;
  }
};

}  // namespace

bool has_path(const Graph& g, int l) {
  if (l < 1) throw ArgumentError("has_path: path order must be >= 1");
  Rows r = rows_of(g, "has_path");
  if (l > r.n) return false;
  return find_path(r, l, full_mask(r.n), nullptr);
}

int max_matching_size(const Graph& g) {
  Rows r = rows_of(g, "max_matching_size");
  int best = 0;
  std::function<void(std::uint64_t, int)> solve = [&](std::uint64_t avail, int cur) {
    if (cur + std::popcount(avail) / 2 <= best) return;
    std::uint64_t bits = avail;
    int v = -1;
    while (bits) {
      int u = __builtin_ctzll(bits);
      bits &= bits - 1;
      if (r.adj[u] & avail) {
        v = u;
        break;
      }
    }
    if (v < 0) {
      best = std::max(best, cur);
      return;
    }
    std::uint64_t nbrs = r.adj[v] & avail;
    while (nbrs) {
      int u = __builtin_ctzll(nbrs);
      nbrs &= nbrs - 1;
      solve(avail & ~(std::uint64_t{1} << v) & ~(std::uint64_t{1} << u), cur + 1);
    }
    solve(avail & ~(std::uint64_t{1} << v), cur);  // leave v unmatched
  };
  solve(full_mask(r.n), 0);
  return best;
}

bool contains_forest(const Graph& g, const ForestPattern& f, Embedding* out) {
  Rows r = rows_of(g, "contains_forest");
  if (f.total_order() > r.n) return false;
  ForestSearch search(r, f, out);
  bool found = search.place(0, 0, -1);
  if (found && out) *out = search.trail;
  return found;
}

bool is_free(const Graph& g, const ForestPattern& f) { return !contains_forest(g, f); }

// ---------------------------------------------------------- naive oracle

namespace {
struct NaiveComp {
  int order;
  std::vector<std::pair<int, int>> edges;  // local indices
};
}  // namespace

bool naive_injection_oracle(const Graph& g, const ForestPattern& f) {
  Rows r = rows_of(g, "naive_injection_oracle");
  std::vector<NaiveComp> comps;
  for (int s : f.stars) {
    NaiveComp c{s + 1, {}};
    for (int i = 1; i <= s; ++i) c.edges.emplace_back(0, i);
    comps.push_back(std::move(c));
  }
  for (int p : f.paths) {
    NaiveComp c{p, {}};
    for (int i = 0; i + 1 < p; ++i) c.edges.emplace_back(i, i + 1);
    comps.push_back(std::move(c));
  }

  std::vector<int> image;  // local position -> graph vertex, current component
  std::function<bool(std::size_t)> place_component = [&](std::size_t ci) -> bool {
    if (ci == comps.size()) return true;
    const NaiveComp& c = comps[ci];
    std::vector<char> taken(r.n, 0);
    // vertices consumed by earlier components stay marked across this component
    std::function<bool(int)> place_vertex;
    std::vector<int> local(c.order, -1);
    place_vertex = [&](int pos) -> bool {
      if (pos == c.order) {
        for (int v : local) image.push_back(v);
        if (place_component(ci + 1)) return true;
        image.resize(image.size() - c.order);
        return false;
      }
      for (int v = 0; v < r.n; ++v) {
        if (taken[v]) continue;
        bool ok = true;
        for (auto [a, b] : c.edges) {
          int other = -1;
          if (a == pos && b < pos) other = local[b];
          if (b == pos && a < pos) other = local[a];
          if (other >= 0 && !((r.adj[v] >> other) & 1u)) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        taken[v] = 1;
        local[pos] = v;
        if (place_vertex(pos + 1)) return true;
        local[pos] = -1;
        taken[v] = 0;
      }
      return false;
    };
    for (int v : image) taken[v] = 1;
    return place_vertex(0);
  };
  return place_component(0);
}

bool verify_embedding(const Graph& g, const ForestPattern& f, const Embedding& e) {
  std::vector<int> star_sizes, path_sizes;
  VertexSet used;
  for (const auto& comp : e) {
    for (int v : comp.vertices) {
      if (v < 0 || v >= g.order() || used.contains(v)) return false;
      used.add(v);
    }
    if (comp.is_star) {
      if (comp.vertices.size() < 2) return false;
      int hub = comp.vertices[0];
      for (std::size_t i = 1; i < comp.vertices.size(); ++i)
        if (!g.has_edge(hub, comp.vertices[i])) return false;
      star_sizes.push_back(static_cast<int>(comp.vertices.size()) - 1);
    } else {
      if (comp.vertices.empty()) return false;
      for (std::size_t i = 0; i + 1 < comp.vertices.size(); ++i)
        if (!g.has_edge(comp.vertices[i], comp.vertices[i + 1])) return false;
      path_sizes.push_back(static_cast<int>(comp.vertices.size()));
    }
  }
  return ForestPattern::make(star_sizes, path_sizes) == f;
}

}  // namespace spextral
