#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vcolor {

using Vertex = std::uint32_t;

struct Edge {
  Vertex u;
  Vertex v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph in compressed adjacency form. Immutable once built.
// Edges are stored normalized (u < v) and sorted; neighbor lists are sorted.
class Graph {
 public:
  Graph() = default;

  // Builds a graph on `n` vertices. Duplicate pairs (in either orientation)
  // collapse to one edge and are counted in `duplicates_out` when provided.
  // Self-loops and out-of-range endpoints throw Error(input).
  static Graph from_edges(std::size_t n, std::span<const Edge> edges,
                          std::size_t* duplicates_out = nullptr);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::size_t max_degree() const noexcept { return max_degree_; }
  std::size_t degree(Vertex v) const noexcept {
    return offsets_[v + 1] - offsets_[v];
  }
  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {targets_.data() + offsets_[v], degree(v)};
  }
  std::span<const Edge> edges() const noexcept { return edges_; }
  bool empty() const noexcept { return n_ == 0; }
  bool adjacent(Vertex u, Vertex v) const noexcept;

  // Subgraph induced by `vertices`; vertex i of the result is vertices[i].
  Graph induced(std::span<const Vertex> vertices) const;
  Graph complement() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::size_t max_degree_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> targets_;
};

// BFS 2-coloring; returns an empty vector when the graph has an odd cycle.
std::vector<std::uint32_t> two_color(const Graph& g);

// ---- DIMACS edge format ---------------------------------------------------

struct DimacsParse {
  Graph graph;
  std::vector<std::string> warnings;
};

// Accepts `p edge n m` (and the `p col` variant), `e u v` with 1-based
// vertices, and `c` comments. Duplicate edges and a header edge count that
// disagrees with the body are warnings; self-loops, out-of-range vertices and
// malformed lines are Error(input).
DimacsParse parse_dimacs(std::string_view text);
DimacsParse read_dimacs_file(const std::string& path);
std::string emit_dimacs(const Graph& g);

// ---- generators -----------------------------------------------------------

struct PlantedInstance {
  Graph graph;
  std::vector<std::uint32_t> hidden_coloring;
};

// Round-robin classes (vertex i in class i mod k); each cross-class pair is an
// edge independently with probability p.
PlantedInstance generate_planted(std::size_t n, std::size_t k, double p,
                                 std::uint64_t seed);

struct KneserSpec {
  std::uint32_t m = 0;  // universe size
  std::uint32_t r = 0;  // subset size
  std::uint32_t t = 0;  // adjacency iff |S_i & S_j| < t

  void validate() const;
  // binomial(m, r); saturates at UINT64_MAX.
  std::uint64_t vertex_count() const;
};

inline constexpr std::uint64_t kMaxKneserVertices = 1'000'000;

// r-subsets of {0..m-1} as bitmasks, in lexicographic order of their sorted
// element lists.
std::vector<std::uint64_t> kneser_subsets(const KneserSpec& spec);
Graph generate_kneser(const KneserSpec& spec);

}  // namespace vcolor
