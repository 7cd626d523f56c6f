// search.hpp — isomorph-free exhaustive enumeration and brute-force optima
// for edge counts and spectral radius over pattern-free graphs.
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "spextral/containment.hpp"
#include "spextral/graph.hpp"

namespace spextral {

struct SearchReport {
  std::string objective;  // "edges" or "rho"
  std::string pattern;
  int n = 0;
  long long best_edges = -1;  // -1 when no pattern-free graph exists
  double best_rho = 0.0;      // meaningful for objective "rho"
  double tol = 0.0;           // rho tie tolerance
  std::vector<std::string> certificates;  // canonical graph6, sorted
  unsigned long long enumerated = 0;      // order-n graphs examined
  double elapsed_seconds = 0.0;           // informational; not serialized
};

struct SearchOptions {
  int jobs = 1;
  double tol = 1e-9;  // rho tie band
  bool allow_gated = false;  // n = 10 full runs take minutes; opt in explicitly
  const std::vector<Graph>* universe = nullptr;  // optional external graph list
};

// Streams exactly one representative per isomorphism class, in a fixed
// deterministic order. 1 <= n <= 10.
void enumerate_graphs(int n, const std::function<void(const Graph&)>& visit);

std::vector<Graph> graph_census(int n);

// Exact ex(n, f) with every extremal graph as a certificate.
SearchReport brute_ex(int n, const ForestPattern& f, const SearchOptions& opts = {});

// Exact-to-tolerance max spectral radius among f-free graphs of order n; all
// graphs within opts.tol of the maximum are certificates.
SearchReport brute_ex_sp(int n, const ForestPattern& f, const SearchOptions& opts = {});

// Independent second oracle for brute_ex's optimum: branch and bound over
// labeled graphs, deciding one vertex pair at a time.
long long maximal_free_count(int n, const ForestPattern& f);

// Lexicographically smallest graph6 string over all relabelings (order <= 16).
std::string canonical_graph6(const Graph& g);

}  // namespace spextral
