// spectral.hpp — Perron root computation, closed forms, degree-based bounds,
// equitable-partition quotients, and Perron-weight level-set diagnostics.
#pragma once

#include <vector>

#include "spextral/families.hpp"
#include "spextral/graph.hpp"

namespace spextral {

struct SpectralResult {
  double rho = 0.0;
  std::vector<double> vector;  // unit 2-norm, nonnegative
  double residual = 0.0;       // ||A x - rho x||_2
  int iterations = 0;
};

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& msg, SpectralResult best_estimate);
  const SpectralResult& best() const { return best_; }

 private:
  SpectralResult best_;
};

// Power iteration on A + I with the normalized all-ones start vector; the
// shift keeps bipartite +-rho oscillation from stalling the iteration.
// Disconnected graphs are handled per component: the result is the max-rho
// component's Perron data with zeros elsewhere.
SpectralResult power_iteration(const Graph& g, double tol = 1e-12, int max_iter = 100000);

// Closed-form spectral radius of the complete split graph on n vertices with
// clique order p: (p - 1 + sqrt(4pn - 4p^2 + (p-1)^2)) / 2.
double rho_split_closed(int n, int p);

// Degree/size upper bound: (delta - 1 + sqrt(8e - 4*delta*n + (delta+1)^2)) / 2.
double hong_bound(const Graph& g);

class EquitablePartition {
 public:
  // Verifies well-definedness against g: every vertex of cell i must have the
  // same number of neighbors in cell j. Cells must partition V(g).
  EquitablePartition(const Graph& g, std::vector<VertexSet> cells);

  int cell_count() const { return static_cast<int>(cells_.size()); }
  const std::vector<VertexSet>& cells() const { return cells_; }
  const std::vector<int>& cell_sizes() const { return sizes_; }
  const std::vector<std::vector<long long>>& quotient() const { return q_; }

 private:
  std::vector<VertexSet> cells_;
  std::vector<int> sizes_;
  std::vector<std::vector<long long>> q_;
};

// The natural partition of a built family (hub clique / special pair / rest).
EquitablePartition equitable_from_family(const ExtremalFamily& f);

// Largest eigenvalue of the quotient matrix. Small matrices (c <= 3) go
// through exact characteristic-polynomial bisection; larger ones through
// power iteration on the symmetrized quotient.
double quotient_rho(const EquitablePartition& p, double tol = 1e-12);

struct LevelSets {
  int k = 0, l = 0, h = 0;
  long long t = 0;
  double alpha = 0.0;
  double x_max = 0.0;             // largest Perron entry
  VertexSet r;                    // x_v > alpha * x_max
  VertexSet r_prime;              // x_v > 4 * alpha * x_max
  VertexSet r_double_prime;       // x_v >= x_max / (2(h+1))
  VertexSet boundary;             // entries within tol of some threshold
  SpectralResult spectral;
};

// Requires g connected, k >= 1 and l >= 4.
LevelSets perron_level_sets(const Graph& g, int k, int l, double tol = 1e-12);

struct StructureReport {
  LevelSets levels;
  int z = -1;                            // max-weight vertex
  long long complement_edges = 0;        // edges inside V \ R''
  bool star_free_complement = false;     // G[V \ R''] has no star with l-1 leaves
  bool hub_dominates_complement = false; // z adjacent to every complement vertex
  bool complement_edgeless = false;
  bool complement_at_most_one_edge = false;
  bool core_complete = false;            // G[R''] complete
  bool core_dominates = false;           // every R'' vertex adjacent to all complement
};

StructureReport structure_claims(const Graph& g, int k, int l, double tol = 1e-12);

}  // namespace spextral
