#include <bit>
#include <cstdint>
#include <functional>

#include "vcolor/analysis.hpp"
#include "vcolor/errors.hpp"

namespace vcolor {
namespace {

using Mask = std::uint32_t;

std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(g.vertex_count(), 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= Mask{1} << e.v;
    adj[e.v] |= Mask{1} << e.u;
  }
  return adj;
}

// Branch on the lowest vertex of `pool`: either skip it or take it and drop
// its neighbors. Isolated vertices of the pool are always taken.
void best_independent(const std::vector<Mask>& adj, Mask pool, std::size_t size, std::size_t& best) {
  if (pool == 0) {
    best = std::max(best, size);
    return;
  }
  if (size + static_cast<std::size_t>(std::popcount(pool)) <= best) return;
  const int v = std::countr_zero(pool);
  const Mask bit = Mask{1} << v;
  best_independent(adj, pool & ~bit & ~adj[v], size + 1, best);
  if ((adj[v] & pool) != 0) best_independent(adj, pool & ~bit, size, best);
}

}  // namespace

std::size_t independence_brute_force(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n > kIndependenceLimit) {
    fail(ErrorCode::size_limit, "independence oracle limited to " + std::to_string(kIndependenceLimit) + " vertices");
  }
  if (n == 0) return 0;
  const auto adj = adjacency_masks(g);
  const Mask all = n == 32 ? ~Mask{0} : ((Mask{1} << n) - 1);
  std::size_t best = 0;
  best_independent(adj, all, 0, best);
  return best;
}

std::size_t clique_brute_force(const Graph& g) { return independence_brute_force(g.complement()); }

std::size_t chromatic_brute_force(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n > kChromaticLimit) {
    fail(ErrorCode::size_limit, "chromatic oracle limited to " + std::to_string(kChromaticLimit) + " vertices");
  }
  if (n == 0) return 0;
  std::vector<int> color(n, -1);
  // Vertices in index order; a new color may only be the next unused one.
  std::function<bool(std::size_t, int, int)> extend = [&](std::size_t v, int used, int k) -> bool {
    if (v == n) return true;
    for (int c = 0; c < std::min(used + 1, k); ++c) {
      bool ok = true;
      for (Vertex w : g.neighbors(static_cast<Vertex>(v))) {
        if (color[w] == c) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      color[v] = c;
      if (extend(v + 1, std::max(used, c + 1), k)) return true;
      color[v] = -1;
    }
    return false;
  };
  for (int k = 1;; ++k) {
    std::fill(color.begin(), color.end(), -1);
    if (extend(0, 0, k)) return static_cast<std::size_t>(k);
  }
}

}  // namespace vcolor
