// containment.hpp — star-path-forest subgraph decisions on small graphs.
//
// Subgraph (not induced) semantics throughout. All procedures require
// order <= 64 so masks are single machine words.
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spextral/graph.hpp"

namespace spextral {

// A star-path forest: multiset of star leaf counts and multiset of path
// orders. Normalized on construction: S1 (a single edge) becomes P2 and
// S2 (the same graph as P3) becomes P3, so equal forests compare equal.
struct ForestPattern {
  std::vector<int> stars;  // leaf counts, descending, each >= 3 after normalization
  std::vector<int> paths;  // orders, descending, each >= 1

  static ForestPattern make(std::vector<int> star_leaves, std::vector<int> path_orders);
  // Text form: terms INT"S"INT or INT"P"INT joined by '+', e.g. "2S3+1P4".
  static ForestPattern parse(std::string_view text);

  int total_order() const;
  bool empty() const { return stars.empty() && paths.empty(); }
  std::string to_string() const;
  bool operator==(const ForestPattern&) const = default;
};

struct ComponentEmbedding {
  bool is_star = false;
  std::vector<int> vertices;  // star: hub first, then leaves; path: in path order
};
using Embedding = std::vector<ComponentEmbedding>;

// True iff g contains a path on l vertices (not necessarily induced).
bool has_path(const Graph& g, int l);

int max_matching_size(const Graph& g);

// True iff vertex-disjoint copies of every component of f embed into g
// simultaneously. When out != nullptr and the answer is true, *out holds
// one embedding (verified disjoint and adjacency-correct).
bool contains_forest(const Graph& g, const ForestPattern& f, Embedding* out = nullptr);

bool is_free(const Graph& g, const ForestPattern& f);

// Independent correctness oracle: places component vertices one position at
// a time over all injective assignments, checking pattern edges as it goes.
// Shares no search logic with contains_forest. Slow by design.
bool naive_injection_oracle(const Graph& g, const ForestPattern& f);

bool verify_embedding(const Graph& g, const ForestPattern& f, const Embedding& e);

}  // namespace spextral
