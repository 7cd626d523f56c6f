#include "spextral/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace spextral {

ConvergenceError::ConvergenceError(const std::string& msg, SpectralResult best_estimate)
    : std::runtime_error(msg), best_(std::move(best_estimate)) {}

namespace {

// Compensated accumulator: long sums must stay well under the 1e-12 residual
// tolerance even at order 300+, which naive summation does not guarantee.
struct Kahan {
  double sum = 0.0, carry = 0.0;
  void add(double x) {
    double t = x - carry;
    double s = sum + t;
    carry = (s - sum) - t;
    sum = s;
  }
};

// Power iteration restricted to one connected piece. Entries outside the
// component stay exactly zero.
SpectralResult iterate_component(const Graph& g, const std::vector<int>& comp, double tol,
                                 int max_iter) {
  const int n = g.order();
  SpectralResult res;
  res.vector.assign(n, 0.0);
  double init = 1.0 / std::sqrt(static_cast<double>(comp.size()));
  for (int v : comp) res.vector[v] = init;

  std::vector<double> y(n, 0.0);
  for (int it = 0;; ++it) {
    for (int v : comp) {
      Kahan acc;
      auto r = g.row(v);
      for (std::size_t w = 0; w < r.size(); ++w) {
        std::uint64_t bits = r[w];
        while (bits) {
          int b = __builtin_ctzll(bits);
          bits &= bits - 1;
          acc.add(res.vector[w * 64 + b]);
        }
      }
      y[v] = acc.sum;
    }
    Kahan rq_acc;
    for (int v : comp) rq_acc.add(res.vector[v] * y[v]);
    double rq = rq_acc.sum;
    double resid2 = 0.0;
    for (int v : comp) {
      double d = y[v] - rq * res.vector[v];
      resid2 += d * d;
    }
    res.rho = rq;
    res.residual = std::sqrt(resid2);
    res.iterations = it;
    if (res.residual <= tol) return res;
    if (it >= max_iter)
      throw ConvergenceError("power iteration did not converge in " + std::to_string(max_iter) +
                                 " iterations (best residual " + std::to_string(res.residual) +
                                 ")",
                             res);
    // shift by +1 and renormalize
    double norm2 = 0.0;
    for (int v : comp) {
      double z = y[v] + res.vector[v];
      res.vector[v] = z;
      norm2 += z * z;
    }
    double inv = 1.0 / std::sqrt(norm2);
    for (int v : comp) res.vector[v] *= inv;
  }
}

}  // namespace

SpectralResult power_iteration(const Graph& g, double tol, int max_iter) {
  if (g.order() < 1) throw ArgumentError("power_iteration: graph must have at least one vertex");
  if (tol <= 0) throw ArgumentError("power_iteration: tolerance must be positive");
  auto comps = g.components();
  SpectralResult best;
  bool have = false;
  for (const auto& comp : comps) {
    SpectralResult r = iterate_component(g, comp.members(), tol, max_iter);
    if (!have || r.rho > best.rho) {
      best = std::move(r);
      have = true;
    }
  }
  return best;
}

double rho_split_closed(int n, int p) {
  if (p < 1 || p > n) throw ArgumentError("rho_split_closed: requires 1 <= p <= n");
  double pp = p, nn = n;
  return (pp - 1 + std::sqrt(4 * pp * nn - 4 * pp * pp + (pp - 1) * (pp - 1))) / 2;
}

double hong_bound(const Graph& g) {
  if (g.order() < 1) throw ArgumentError("hong_bound: graph must have at least one vertex");
  double delta = g.min_degree();
  double e = static_cast<double>(g.edge_count());
  double n = g.order();
  return (delta - 1 + std::sqrt(8 * e - 4 * delta * n + (delta + 1) * (delta + 1))) / 2;
}

// ------------------------------------------------------ equitable partition

EquitablePartition::EquitablePartition(const Graph& g, std::vector<VertexSet> cells)
    : cells_(std::move(cells)) {
  VertexSet seen;
  for (const auto& c : cells_) {
    if (c.empty()) throw ArgumentError("equitable partition: empty cell");
    if (c.max_element() >= g.order())
      throw ArgumentError("equitable partition: cell exceeds graph order");
    if (!(c & seen).empty()) throw ArgumentError("equitable partition: cells overlap");
    seen = seen | c;
  }
  if (seen.count() != g.order())
    throw ArgumentError("equitable partition: cells do not cover the vertex set");

  sizes_.reserve(cells_.size());
  for (const auto& c : cells_) sizes_.push_back(c.count());

  q_.assign(cells_.size(), std::vector<long long>(cells_.size(), 0));
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    bool first = true;
    for (int v : cells_[i].members()) {
      VertexSet nb = g.neighborhood(v);
      for (std::size_t j = 0; j < cells_.size(); ++j) {
        long long cnt = (nb & cells_[j]).count();
        if (first)
          q_[i][j] = cnt;
        else if (q_[i][j] != cnt)
          throw ArgumentError("partition is not equitable: cell " + std::to_string(i) +
                              " has varying neighbor counts into cell " + std::to_string(j));
      }
      first = false;
    }
  }
}

EquitablePartition equitable_from_family(const ExtremalFamily& f) {
  f.validate();
  Graph g = build(f);
  auto range_set = [](int from, int count) {
    VertexSet s;
    for (int i = 0; i < count; ++i) s.add(from + i);
    return s;
  };
  std::vector<VertexSet> cells;
  auto push = [&](VertexSet s) {
    if (!s.empty()) cells.push_back(std::move(s));
  };
  switch (f.kind) {
    case FamilyKind::Split:
      push(range_set(0, f.h));
      push(range_set(f.h, f.n - f.h));
      break;
    case FamilyKind::SplitPlus:
      push(range_set(0, f.h));
      push(range_set(f.h, 2));
      push(range_set(f.h + 2, f.n - f.h - 2));
      break;
    case FamilyKind::CliqueJoinCliques: {
      int d = f.derived_d();
      push(range_set(0, f.k));
      push(range_set(f.k, d * (f.l - 1)));
      push(range_set(f.k + d * (f.l - 1), f.r));
      break;
    }
    case FamilyKind::LinearForestExtremal: {
      int d = f.derived_d();
      int s = (f.n - (f.k - 1)) % 2;
      push(range_set(0, f.k - 1));
      push(range_set(f.k - 1, 2 * d));
      push(range_set(f.k - 1 + 2 * d, s));
      break;
    }
    case FamilyKind::CliqueUnionEmpty:
      push(range_set(0, f.h));
      push(range_set(f.h, f.n - f.h));
      break;
  }
  return EquitablePartition(g, std::move(cells));
}

namespace {

double char_poly(const std::vector<std::vector<long long>>& q, double x) {
  std::size_t c = q.size();
  if (c == 1) return x - static_cast<double>(q[0][0]);
  if (c == 2)
    return (x - q[0][0]) * (x - q[1][1]) - static_cast<double>(q[0][1]) * q[1][0];
  // c == 3: det(xI - Q) expanded along the first row
  double a = x - q[0][0], b = -static_cast<double>(q[0][1]), cc = -static_cast<double>(q[0][2]);
  double d = -static_cast<double>(q[1][0]), e = x - q[1][1], f = -static_cast<double>(q[1][2]);
  double gg = -static_cast<double>(q[2][0]), h = -static_cast<double>(q[2][1]),
         i = x - q[2][2];
  return a * (e * i - f * h) - b * (d * i - f * gg) + cc * (d * h - e * gg);
}

double symmetrized_power_iteration(const EquitablePartition& p, double tol) {
  const auto& q = p.quotient();
  const auto& sz = p.cell_sizes();
  std::size_t c = q.size();
  std::vector<std::vector<double>> m(c, std::vector<double>(c, 0.0));
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = 0; j < c; ++j)
      m[i][j] = q[i][j] * std::sqrt(static_cast<double>(sz[i]) / sz[j]);
  std::vector<double> x(c, 1.0 / std::sqrt(static_cast<double>(c))), y(c);
  double rho = 0.0;
  for (int it = 0; it <= 100000; ++it) {
    for (std::size_t i = 0; i < c; ++i) {
      double acc = 0.0;
      for (std::size_t j = 0; j < c; ++j) acc += m[i][j] * x[j];
      y[i] = acc;
    }
    double rq = 0.0, resid2 = 0.0;
    for (std::size_t i = 0; i < c; ++i) rq += x[i] * y[i];
    for (std::size_t i = 0; i < c; ++i) {
      double d = y[i] - rq * x[i];
      resid2 += d * d;
    }
    rho = rq;
    if (std::sqrt(resid2) <= tol) return rho;
    double norm2 = 0.0;
    for (std::size_t i = 0; i < c; ++i) {
      x[i] = y[i] + x[i];
      norm2 += x[i] * x[i];
    }
    double inv = 1.0 / std::sqrt(norm2);
    for (std::size_t i = 0; i < c; ++i) x[i] *= inv;
  }
  SpectralResult best;
  best.rho = rho;
  throw ConvergenceError("quotient power iteration did not converge", best);
}

}  // namespace

double quotient_rho(const EquitablePartition& p, double tol) {
  const auto& q = p.quotient();
  std::size_t c = q.size();
  if (c == 0) throw ArgumentError("quotient_rho: empty partition");
  if (c == 1) return static_cast<double>(q[0][0]);
  if (c > 3) return symmetrized_power_iteration(p, tol);

  double hi = 0.0;
  for (const auto& row : q) {
    double s = 0.0;
    for (long long v : row) s += static_cast<double>(v);
    hi = std::max(hi, s);
  }
  hi += 1.0;
  // Perron root of a nonnegative matrix lies in [0, max row sum]; find the
  // sign change closest to hi and bisect. Degenerate (reducible, repeated
  // top root) quotients fall back to the symmetrized iteration.
  constexpr int kProbes = 4096;
  double lo = -1.0;
  double prev = hi;
  for (int s = 1; s <= kProbes; ++s) {
    double x = hi * (1.0 - static_cast<double>(s) / kProbes);
    if (char_poly(q, x) < 0.0) {
      lo = x;
      break;
    }
    prev = x;
  }
  if (lo < 0.0) return symmetrized_power_iteration(p, tol);
  double a = lo, b = prev;
  for (int it = 0; it < 200; ++it) {
    double mid = (a + b) / 2;
    if (char_poly(q, mid) < 0.0)
      a = mid;
    else
      b = mid;
  }
  return (a + b) / 2;
}

// -------------------------------------------------------------- level sets

LevelSets perron_level_sets(const Graph& g, int k, int l, double tol) {
  if (k < 1) throw ArgumentError("perron_level_sets: requires k >= 1");
  if (l < 4) throw ArgumentError("perron_level_sets: requires l >= 4");
  if (!g.is_connected()) throw ArgumentError("perron_level_sets: graph must be connected");

  LevelSets out;
  out.k = k;
  out.l = l;
  out.h = k + l / 2 - 1;
  out.t = static_cast<long long>(l) * l - l + 1;
  out.t = out.t * k + (static_cast<long long>(l) * l + 3 * l - 2) / 2;
  out.alpha = 1.0 / (2.0 * (out.h + 1) * static_cast<double>(out.t) * static_cast<double>(out.t));
  out.spectral = power_iteration(g, tol);

  const auto& x = out.spectral.vector;
  out.x_max = *std::max_element(x.begin(), x.end());
  double thr_r = out.alpha * out.x_max;
  double thr_rp = 4 * out.alpha * out.x_max;
  double thr_rpp = out.x_max / (2.0 * (out.h + 1));
  for (int v = 0; v < g.order(); ++v) {
    if (x[v] > thr_r) out.r.add(v);          // strict, as defined
    if (x[v] > thr_rp) out.r_prime.add(v);   // strict
    if (x[v] >= thr_rpp) out.r_double_prime.add(v);  // non-strict
    if (std::abs(x[v] - thr_r) < tol || std::abs(x[v] - thr_rp) < tol ||
        std::abs(x[v] - thr_rpp) < tol)
      out.boundary.add(v);
  }
  return out;
}

StructureReport structure_claims(const Graph& g, int k, int l, double tol) {
  StructureReport rep;
  rep.levels = perron_level_sets(g, k, l, tol);
  const auto& x = rep.levels.spectral.vector;
  rep.z = static_cast<int>(std::max_element(x.begin(), x.end()) - x.begin());

  VertexSet complement = g.vertex_set() - rep.levels.r_double_prime;
  Graph outside = g.induced(complement);
  rep.complement_edges = outside.edge_count();
  rep.star_free_complement = outside.max_degree() <= l - 2;
  rep.complement_edgeless = rep.complement_edges == 0;
  rep.complement_at_most_one_edge = rep.complement_edges <= 1;

  rep.hub_dominates_complement = true;
  complement.for_each([&](int v) {
    if (!g.has_edge(rep.z, v)) rep.hub_dominates_complement = false;
  });

  rep.core_complete = true;
  rep.core_dominates = true;
  auto core = rep.levels.r_double_prime.members();
  for (std::size_t i = 0; i < core.size(); ++i) {
    for (std::size_t j = i + 1; j < core.size(); ++j)
      if (!g.has_edge(core[i], core[j])) rep.core_complete = false;
    complement.for_each([&](int v) {
      if (!g.has_edge(core[i], v)) rep.core_dominates = false;
    });
  }
  return rep;
}

}  // namespace spextral
