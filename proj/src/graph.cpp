#include "evograph/graph.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <deque>

namespace evograph {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n > 0 ? n : 0), 0) {
  if (n < 1) throw std::domain_error("graph needs at least one vertex");
  if (n > kMaxVertices)
    throw capacity_error("graph order " + std::to_string(n) + " exceeds the supported maximum " +
                         std::to_string(kMaxVertices));
}

void Graph::check_vertex(int i) const {
  if (i < 1 || i > n_)
    throw std::domain_error("vertex label " + std::to_string(i) + " outside 1.." +
                            std::to_string(n_));
}

void Graph::add_edge(int i, int j) {
  check_vertex(i);
  check_vertex(j);
  if (i == j) throw std::domain_error("self-loops are not allowed");
  adj_[i - 1] |= std::uint64_t{1} << (j - 1);
  adj_[j - 1] |= std::uint64_t{1} << (i - 1);
}

bool Graph::has_edge(int i, int j) const {
  check_vertex(i);
  check_vertex(j);
  return (adj_[i - 1] >> (j - 1)) & 1;
}

int Graph::degree(int i) const {
  check_vertex(i);
  return std::popcount(adj_[i - 1]);
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto row : adj_) twice += std::popcount(row);
  return twice / 2;
}

std::uint64_t Graph::neighbor_mask(int i) const {
  check_vertex(i);
  return adj_[i - 1];
}

std::uint64_t Graph::vertex_mask() const {
  return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
}

std::vector<int> Graph::neighbors(int i) const {
  std::uint64_t row = neighbor_mask(i);
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(std::popcount(row)));
  while (row) {
    const int b = std::countr_zero(row);
    out.push_back(b + 1);
    row &= row - 1;
  }
  return out;
}

std::vector<int> Graph::distances_from(int i) const {
  check_vertex(i);
  std::vector<int> dist(static_cast<std::size_t>(n_), -1);
  std::deque<int> queue;
  dist[i - 1] = 0;
  queue.push_back(i - 1);
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    std::uint64_t row = adj_[v];
    while (row) {
      const int w = std::countr_zero(row);
      row &= row - 1;
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<int> Graph::neighbors_exact(int i, int k) const {
  if (k < 0) throw std::domain_error("neighbourhood radius must be nonnegative");
  const auto dist = distances_from(i);
  std::vector<int> out;
  for (int v = 0; v < n_; ++v)
    if (dist[v] == k) out.push_back(v + 1);
  return out;
}

std::vector<int> Graph::closed_neighborhood(int i) const {
  std::uint64_t row = neighbor_mask(i) | (std::uint64_t{1} << (i - 1));
  std::vector<int> out;
  while (row) {
    const int b = std::countr_zero(row);
    out.push_back(b + 1);
    row &= row - 1;
  }
  return out;
}

std::optional<int> Graph::regular_degree() const {
  const int k = std::popcount(adj_[0]);
  for (int v = 1; v < n_; ++v)
    if (std::popcount(adj_[v]) != k) return std::nullopt;
  return k;
}

Graph make_complete(int n) {
  if (n < 3) throw std::domain_error("complete graph generator needs n >= 3");
  Graph g(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) g.add_edge(i, j);
  return g;
}

Graph make_cycle(int n) {
  if (n < 3) throw std::domain_error("cycle generator needs n >= 3");
  Graph g(n);
  for (int i = 1; i < n; ++i) g.add_edge(i, i + 1);
  g.add_edge(n, 1);
  return g;
}

Graph make_wheel(int l) {
  if (l < 4) throw std::domain_error("wheel generator needs l >= 4");
  Graph g(l);
  for (int i = 2; i <= l; ++i) g.add_edge(1, i);
  for (int i = 2; i < l; ++i) g.add_edge(i, i + 1);
  g.add_edge(l, 2);
  return g;
}

namespace {

constexpr int kG6Lo = 63;   // '?'
constexpr int kG6Hi = 126;  // '~'

// Bits enumerate the upper triangle column by column:
// (1,2), (1,3), (2,3), (1,4), (2,4), (3,4), ... in 1-based labels.
std::size_t triangle_bits(int n) {
  return static_cast<std::size_t>(n) * (n - 1) / 2;
}

}  // namespace

Graph decode_graph6(std::string_view text) {
  std::string bytes;
  bytes.reserve(text.size());
  for (const char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) bytes.push_back(ch);

  if (bytes.empty()) throw parse_error("empty graph6 string", 0);
  for (std::size_t i = 0; i < bytes.size(); ++i) {
    const unsigned char ch = static_cast<unsigned char>(bytes[i]);
    if (ch < kG6Lo || ch > kG6Hi)
      throw parse_error("graph6 byte out of range 63..126", i);
  }

  std::size_t pos = 0;
  long long n = 0;
  if (bytes[0] != char(kG6Hi)) {
    n = bytes[0] - kG6Lo;
    pos = 1;
  } else if (bytes.size() >= 2 && bytes[1] != char(kG6Hi)) {
    if (bytes.size() < 4) throw parse_error("truncated graph6 order field", bytes.size());
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | (bytes[i] - kG6Lo);
    pos = 4;
  } else {
    if (bytes.size() < 8) throw parse_error("truncated graph6 order field", bytes.size());
    for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | (bytes[i] - kG6Lo);
    pos = 8;
  }

  if (n < 1) throw parse_error("graph6 order must be at least 1", 0);
  if (n > Graph::kMaxVertices)
    throw capacity_error("graph6 order " + std::to_string(n) + " exceeds the supported maximum " +
                         std::to_string(Graph::kMaxVertices));

  const std::size_t nbits = triangle_bits(static_cast<int>(n));
  const std::size_t nbytes = (nbits + 5) / 6;
  if (bytes.size() - pos < nbytes)
    throw parse_error("truncated graph6 adjacency bits", bytes.size());
  if (bytes.size() - pos > nbytes)
    throw parse_error("trailing bytes after graph6 adjacency bits", pos + nbytes);

  Graph g(static_cast<int>(n));
  std::size_t bit = 0;
  for (int j = 2; j <= n; ++j) {
    for (int i = 1; i < j; ++i, ++bit) {
      const int value = bytes[pos + bit / 6] - kG6Lo;
      if ((value >> (5 - bit % 6)) & 1) g.add_edge(i, j);
    }
  }
  return g;
}

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  out.push_back(static_cast<char>(kG6Lo + n));
  const std::size_t nbits = triangle_bits(n);
  out.resize(1 + (nbits + 5) / 6, static_cast<char>(kG6Lo));
  std::size_t bit = 0;
  for (int j = 2; j <= n; ++j) {
    for (int i = 1; i < j; ++i, ++bit) {
      if (g.has_edge(i, j)) out[1 + bit / 6] += char(1 << (5 - bit % 6));
    }
  }
  return out;
}

}  // namespace evograph
