#include "spextral/graph.hpp"

#include <algorithm>
#include <bit>
#include <istream>

namespace spextral {

ParseError::ParseError(const std::string& msg, std::size_t offset)
    : std::runtime_error(msg + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}

// ---------------------------------------------------------------- VertexSet

VertexSet VertexSet::range(int n) {
  if (n < 0) throw ArgumentError("VertexSet::range: negative size");
  VertexSet s;
  s.words_.assign((n + 63) / 64, ~std::uint64_t{0});
  if (n % 64 != 0 && !s.words_.empty()) s.words_.back() = (std::uint64_t{1} << (n % 64)) - 1;
  s.trim();
  return s;
}

VertexSet VertexSet::of(std::initializer_list<int> vs) {
  VertexSet s;
  for (int v : vs) s.add(v);
  return s;
}

void VertexSet::trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

bool VertexSet::contains(int v) const {
  if (v < 0) return false;
  std::size_t w = static_cast<std::size_t>(v) / 64;
  return w < words_.size() && ((words_[w] >> (v % 64)) & 1u);
}

void VertexSet::add(int v) {
  if (v < 0) throw ArgumentError("VertexSet::add: negative vertex");
  std::size_t w = static_cast<std::size_t>(v) / 64;
  if (w >= words_.size()) words_.resize(w + 1, 0);
  words_[w] |= std::uint64_t{1} << (v % 64);
}

void VertexSet::remove(int v) {
  if (v < 0) return;
  std::size_t w = static_cast<std::size_t>(v) / 64;
  if (w < words_.size()) {
    words_[w] &= ~(std::uint64_t{1} << (v % 64));
    trim();
  }
}

int VertexSet::count() const {
  int c = 0;
  for (std::uint64_t w : words_) c += std::popcount(w);
  return c;
}

int VertexSet::max_element() const {
  for (std::size_t i = words_.size(); i-- > 0;)
    if (words_[i] != 0) return static_cast<int>(i * 64 + 63 - std::countl_zero(words_[i]));
  return -1;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t o = i < other.words_.size() ? other.words_[i] : 0;
    if ((words_[i] & ~o) != 0) return false;
  }
  return true;
}

VertexSet VertexSet::operator&(const VertexSet& o) const {
  VertexSet r;
  std::size_t n = std::min(words_.size(), o.words_.size());
  r.words_.resize(n);
  for (std::size_t i = 0; i < n; ++i) r.words_[i] = words_[i] & o.words_[i];
  r.trim();
  return r;
}

VertexSet VertexSet::operator|(const VertexSet& o) const {
  VertexSet r;
  std::size_t n = std::max(words_.size(), o.words_.size());
  r.words_.resize(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t a = i < words_.size() ? words_[i] : 0;
    std::uint64_t b = i < o.words_.size() ? o.words_[i] : 0;
    r.words_[i] = a | b;
  }
  return r;
}

VertexSet VertexSet::operator-(const VertexSet& o) const {
  VertexSet r = *this;
  std::size_t n = std::min(r.words_.size(), o.words_.size());
  for (std::size_t i = 0; i < n; ++i) r.words_[i] &= ~o.words_[i];
  r.trim();
  return r;
}

bool VertexSet::operator==(const VertexSet& o) const {
  std::size_t n = std::max(words_.size(), o.words_.size());
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t a = i < words_.size() ? words_[i] : 0;
    std::uint64_t b = i < o.words_.size() ? o.words_[i] : 0;
    if (a != b) return false;
  }
  return true;
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(count());
  for_each([&](int v) { out.push_back(v); });
  return out;
}

// -------------------------------------------------------------------- Graph

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxOrder)
    throw ArgumentError("Graph: order must be in [0, " + std::to_string(kMaxOrder) + "]");
  words_ = n == 0 ? 0 : (n + 63) / 64;
  bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw ArgumentError("vertex " + std::to_string(v) + " out of range [0, " +
                        std::to_string(n_) + ")");
}

long long Graph::edge_count() const {
  long long twice = 0;
  for (std::uint64_t w : bits_) twice += std::popcount(w);
  return twice / 2;
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return false;
  return (bits_[static_cast<std::size_t>(u) * words_ + v / 64] >> (v % 64)) & 1u;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw ArgumentError("add_edge: loops are not allowed");
  bits_[static_cast<std::size_t>(u) * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
  bits_[static_cast<std::size_t>(v) * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
}

int Graph::degree(int v) const {
  check_vertex(v);
  int d = 0;
  for (int w = 0; w < words_; ++w)
    d += std::popcount(bits_[static_cast<std::size_t>(v) * words_ + w]);
  return d;
}

int Graph::min_degree() const {
  int d = n_ == 0 ? 0 : n_;
  for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
  return n_ == 0 ? 0 : d;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

std::span<const std::uint64_t> Graph::row(int v) const {
  check_vertex(v);
  return {bits_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
}

namespace {
template <typename Fn>
void scan_row(const Graph& g, int v, Fn&& fn) {
  auto r = g.row(v);
  for (std::size_t w = 0; w < r.size(); ++w) {
    std::uint64_t bits = r[w];
    while (bits) {
      int b = __builtin_ctzll(bits);
      bits &= bits - 1;
      fn(static_cast<int>(w * 64 + b));
    }
  }
}
}  // namespace

VertexSet Graph::neighborhood(int v) const {
  check_vertex(v);
  VertexSet s;
  scan_row(*this, v, [&](int u) { s.add(u); });
  return s;
}

VertexSet Graph::second_neighborhood(int v) const {
  check_vertex(v);
  VertexSet n1 = neighborhood(v);
  VertexSet reach;
  n1.for_each([&](int u) {
    scan_row(*this, u, [&](int w) { reach.add(w); });
  });
  reach.remove(v);
  return reach - n1;
}

Graph Graph::induced(const VertexSet& u) const {
  if (u.max_element() >= n_) throw ArgumentError("induced: vertex set exceeds graph order");
  std::vector<int> keep = u.members();
  Graph h(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (has_edge(keep[i], keep[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
  return h;
}

Graph Graph::with_edge(int u, int v) const {
  Graph h = *this;
  h.add_edge(u, v);
  return h;
}

std::vector<VertexSet> Graph::components() const {
  std::vector<VertexSet> out;
  std::vector<bool> seen(n_, false);
  for (int s = 0; s < n_; ++s) {
    if (seen[s]) continue;
    VertexSet comp;
    std::vector<int> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.add(v);
      scan_row(*this, v, [&](int u) {
        if (!seen[u]) {
          seen[u] = true;
          stack.push_back(u);
        }
      });
    }
    out.push_back(std::move(comp));
  }
  return out;
}

bool Graph::is_connected() const { return n_ <= 1 || components().size() == 1; }

bool Graph::operator==(const Graph& o) const { return n_ == o.n_ && bits_ == o.bits_; }

// ------------------------------------------------------------------- graph6

std::string Graph::to_graph6() const {
  std::string s;
  if (n_ <= 62) {
    s.push_back(static_cast<char>(63 + n_));
  } else {
    s.push_back(126);
    s.push_back(static_cast<char>(63 + ((n_ >> 12) & 63)));
    s.push_back(static_cast<char>(63 + ((n_ >> 6) & 63)));
    s.push_back(static_cast<char>(63 + (n_ & 63)));
  }
  int acc = 0, nbits = 0;
  for (int j = 1; j < n_; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        s.push_back(static_cast<char>(63 + acc));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) s.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
  return s;
}

Graph Graph::from_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  std::size_t base = 0;
  if (text.substr(0, kHeader.size()) == kHeader) {
    text.remove_prefix(kHeader.size());
    base = kHeader.size();
  }
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty graph6 string", base);

  auto byte_at = [&](std::size_t i) -> int {
    if (i >= text.size()) throw ParseError("graph6 string truncated", base + text.size());
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw ParseError("illegal graph6 byte", base + i);
    return c - 63;
  };

  std::size_t pos = 0;
  long long n;
  if (static_cast<unsigned char>(text[0]) == 126) {
    if (text.size() >= 2 && static_cast<unsigned char>(text[1]) == 126)
      throw ParseError("graph order exceeds supported maximum", base + 1);
    pos = 1;
    long long a = byte_at(pos++), b = byte_at(pos++), c = byte_at(pos++);
    n = (a << 12) | (b << 6) | c;
  } else {
    n = byte_at(pos++);
  }
  if (n > kMaxOrder) throw ParseError("graph order exceeds supported maximum", base);

  Graph g(static_cast<int>(n));
  long long nbits = n * (n - 1) / 2;
  std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
  if (text.size() < pos + nbytes) throw ParseError("graph6 string truncated", base + text.size());
  if (text.size() > pos + nbytes) throw ParseError("trailing garbage", base + pos + nbytes);

  long long bit = 0;
  int ci = 0, cj = 1;  // upper-triangle bits in column-major order
  for (std::size_t k = 0; k < nbytes; ++k) {
    int val = byte_at(pos + k);
    for (int t = 5; t >= 0; --t, ++bit) {
      int b = (val >> t) & 1;
      if (bit >= nbits) {
        if (b != 0) throw ParseError("nonzero padding bits", base + pos + k);
        continue;
      }
      if (b) g.add_edge(ci, cj);
      if (++ci == cj) {
        ci = 0;
        ++cj;
      }
    }
  }
  return g;
}

long long edges_between(const Graph& g, const VertexSet& a, const VertexSet& b) {
  if (a.max_element() >= g.order() || b.max_element() >= g.order())
    throw ArgumentError("edges_between: vertex set exceeds graph order");
  auto bw = b.words();
  long long total = 0;
  a.for_each([&](int v) {
    auto r = g.row(v);
    std::size_t n = std::min(r.size(), bw.size());
    for (std::size_t i = 0; i < n; ++i) total += std::popcount(r[i] & bw[i]);
  });
  return total;
}

std::vector<Graph> read_graph6_lines(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    if (line.empty()) continue;
    out.push_back(Graph::from_graph6(line));
  }
  return out;
}

}  // namespace spextral
