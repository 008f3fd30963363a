#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "evograph/errors.hpp"

namespace evograph {

// Undirected simple graph on vertices labelled 1..n.  Adjacency is stored as
// one 64-bit row per vertex (bit j-1 = neighbour j), which caps the order at
// 62 -- enough for the single-byte graph6 range and far beyond what the
// exhaustive analyses can enumerate.  Immutable in practice: built once by a
// generator or the codec, then only queried.
class Graph {
 public:
  static constexpr int kMaxVertices = 62;

  explicit Graph(int n);

  int order() const { return n_; }
  void add_edge(int i, int j);
  bool has_edge(int i, int j) const;
  int degree(int i) const;
  std::size_t edge_count() const;

  std::uint64_t neighbor_mask(int i) const;        // open neighbourhood, bit j-1
  std::uint64_t vertex_mask() const;               // all n bits set
  std::vector<int> neighbors(int i) const;         // sorted labels

  // Breadth-first distances from i; -1 marks vertices unreachable from i.
  std::vector<int> distances_from(int i) const;

  // N_k(i): vertices at graph distance exactly k.  N_0(i) = {i}.
  std::vector<int> neighbors_exact(int i, int k) const;

  // N_{<=1}(i) = {i} union N_1(i).
  std::vector<int> closed_neighborhood(int i) const;

  // k when every vertex has degree k, nothing otherwise.
  std::optional<int> regular_degree() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(int i) const;

  int n_ = 0;
  std::vector<std::uint64_t> adj_;
};

// A named exact-distance neighbourhood.
struct Neighborhood {
  int center = 0;
  int radius = 0;
  std::vector<int> members;
};

inline Neighborhood neighborhood(const Graph& g, int center, int radius) {
  return {center, radius, g.neighbors_exact(center, radius)};
}

// Generators.  Complete and cycle graphs need n >= 3; a wheel W_l needs
// l >= 4 and is built with the hub labelled 1 and the (l-1)-cycle on 2..l.
Graph make_complete(int n);
Graph make_cycle(int n);
Graph make_wheel(int l);

// graph6 codec.  Decoding strips all ASCII whitespace first, accepts the
// extended (>= 63 vertices) headers syntactically, and throws parse_error
// with the byte offset for malformed input or capacity_error when the order
// exceeds kMaxVertices.  Encoding always emits the canonical single-byte
// header form.
Graph decode_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);

}  // namespace evograph
