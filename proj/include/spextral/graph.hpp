// graph.hpp — bitset-backed simple undirected graphs, vertex sets, graph6 I/O.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace spextral {

class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Parse failure for text inputs (graph6, pattern syntax). offset = byte position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t offset);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Subset of {0,1,2,...} with bitmask semantics, packed into 64-bit words.
class VertexSet {
 public:
  VertexSet() = default;
  static VertexSet range(int n);  // {0,...,n-1}
  static VertexSet of(std::initializer_list<int> vs);

  bool contains(int v) const;
  void add(int v);
  void remove(int v);
  int count() const;
  bool empty() const { return count() == 0; }
  int max_element() const;  // -1 if empty

  bool is_subset_of(const VertexSet& other) const;
  VertexSet operator&(const VertexSet& o) const;
  VertexSet operator|(const VertexSet& o) const;
  VertexSet operator-(const VertexSet& o) const;  // set difference
  bool operator==(const VertexSet& o) const;

  std::vector<int> members() const;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        int b = __builtin_ctzll(bits);
        bits &= bits - 1;
        fn(static_cast<int>(w * 64 + b));
      }
    }
  }

  std::span<const std::uint64_t> words() const { return words_; }

 private:
  void trim();
  std::vector<std::uint64_t> words_;
};

// Immutable-by-convention simple graph: build it, then share const references.
// Adjacency is a symmetric bit matrix with zero diagonal; rows are word-packed.
class Graph {
 public:
  static constexpr int kMaxOrder = 512;

  Graph() = default;
  explicit Graph(int n);

  int order() const { return n_; }
  long long edge_count() const;
  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);  // construction only; no-op if already present

  int degree(int v) const;
  int min_degree() const;
  int max_degree() const;

  VertexSet neighborhood(int v) const;         // N(v)
  VertexSet second_neighborhood(int v) const;  // vertices at distance exactly 2

  // Induced subgraph on U; vertices keep ascending original order.
  Graph induced(const VertexSet& u) const;
  Graph with_edge(int u, int v) const;

  VertexSet vertex_set() const { return VertexSet::range(n_); }
  std::vector<VertexSet> components() const;
  bool is_connected() const;  // n <= 1 counts as connected

  std::span<const std::uint64_t> row(int v) const;
  int row_words() const { return words_; }

  std::string to_graph6() const;
  static Graph from_graph6(std::string_view text);

  bool operator==(const Graph& o) const;

 private:
  void check_vertex(int v) const;
  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
};

// e(A,B): edges with one end in A and the other in B; an edge inside A∩B
// contributes 2, so the subset decomposition identities hold exactly.
long long edges_between(const Graph& g, const VertexSet& a, const VertexSet& b);

// One graph per line; ">>graph6<<" headers stripped; blank lines skipped.
std::vector<Graph> read_graph6_lines(std::istream& in);

}  // namespace spextral
