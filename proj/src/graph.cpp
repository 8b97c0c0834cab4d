#include "vcolor/graph.hpp"

#include <algorithm>
#include <deque>

#include "vcolor/errors.hpp"

namespace vcolor {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges,
                        std::size_t* duplicates_out) {
  if (n > UINT32_MAX) fail(ErrorCode::size_limit, "vertex count exceeds 2^32");
  Graph g;
  g.n_ = n;
  g.edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      fail(ErrorCode::input, "edge (" + std::to_string(e.u) + ", " +
                                 std::to_string(e.v) + ") out of range for " +
                                 std::to_string(n) + " vertices");
    }
    if (e.u == e.v) {
      fail(ErrorCode::input, "self-loop at vertex " + std::to_string(e.u));
    }
    g.edges_.push_back(e.u < e.v ? e : Edge{e.v, e.u});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  const auto last = std::unique(g.edges_.begin(), g.edges_.end());
  if (duplicates_out) {
    *duplicates_out = static_cast<std::size_t>(g.edges_.end() - last);
  }
  g.edges_.erase(last, g.edges_.end());

  g.offsets_.assign(n + 1, 0);
  for (const Edge& e : g.edges_) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
  g.targets_.resize(2 * g.edges_.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // Edges are sorted by (u, v), so both halves of every list come out sorted
  // once we fill lower neighbors first.
  for (const Edge& e : g.edges_) g.targets_[cursor[e.v]++] = e.u;
  for (const Edge& e : g.edges_) g.targets_[cursor[e.u]++] = e.v;
  for (Vertex v = 0; v < n; ++v) {
    g.max_degree_ = std::max(g.max_degree_, g.degree(v));
  }
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const noexcept {
  if (u >= n_ || v >= n_) return false;
  if (degree(u) > degree(v)) std::swap(u, v);
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
  std::vector<std::int64_t> local(n_, -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= n_) fail(ErrorCode::invalid_argument, "induced: vertex out of range");
    local[vertices[i]] = static_cast<std::int64_t>(i);
  }
  std::vector<Edge> sub;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (Vertex w : neighbors(vertices[i])) {
      const std::int64_t j = local[w];
      if (j > static_cast<std::int64_t>(i)) {
        sub.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
      }
    }
  }
  return from_edges(vertices.size(), sub);
}

Graph Graph::complement() const {
  std::vector<Edge> comp;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = u + 1; v < n_; ++v) {
      if (!adjacent(u, v)) comp.push_back({u, v});
    }
  }
  return from_edges(n_, comp);
}

std::vector<std::uint32_t> two_color(const Graph& g) {
  const std::size_t n = g.vertex_count();
  constexpr std::uint32_t unset = UINT32_MAX;
  std::vector<std::uint32_t> side(n, unset);
  std::deque<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    if (side[s] != unset) continue;
    side[s] = 0;
    queue.push_back(s);
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u)) {
        if (side[w] == unset) {
          side[w] = 1 - side[u];
          queue.push_back(w);
        } else if (side[w] == side[u]) {
          return {};
        }
      }
    }
  }
  return side;
}

}  // namespace vcolor
