#include <algorithm>
#include <bit>
#include <random>

#include "vcolor/errors.hpp"
#include "vcolor/graph.hpp"

namespace vcolor {

PlantedInstance generate_planted(std::size_t n, std::size_t k, double p,
                                 std::uint64_t seed) {
  if (k < 2) fail(ErrorCode::invalid_argument, "planted: need k >= 2");
  if (n < k) fail(ErrorCode::invalid_argument, "planted: need n >= k");
  if (!(p >= 0.0 && p <= 1.0)) fail(ErrorCode::invalid_argument, "planted: p must lie in [0, 1]");

  PlantedInstance inst;
  inst.hidden_coloring.resize(n);
  for (std::size_t i = 0; i < n; ++i) inst.hidden_coloring[i] = static_cast<std::uint32_t>(i % k);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (inst.hidden_coloring[u] == inst.hidden_coloring[v]) continue;
      if (unit(rng) < p) edges.push_back({u, v});
    }
  }
  inst.graph = Graph::from_edges(n, edges);
  return inst;
}

void KneserSpec::validate() const {
  if (!(1 <= t && t <= r && r <= m)) {
    fail(ErrorCode::invalid_argument, "Kneser spec needs 1 <= t <= r <= m");
  }
}

std::uint64_t KneserSpec::vertex_count() const {
  // binomial(m, r) via the multiplicative formula; exact while it fits.
  unsigned __int128 acc = 1;
  const std::uint32_t kk = std::min(r, m - r);
  for (std::uint32_t i = 1; i <= kk; ++i) {
    acc = acc * (m - kk + i) / i;
    if (acc > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(acc);
}

std::vector<std::uint64_t> kneser_subsets(const KneserSpec& spec) {
  spec.validate();
  if (spec.m > 63) fail(ErrorCode::size_limit, "Kneser enumeration limited to a 63-element universe");
  const std::uint64_t count = spec.vertex_count();
  if (count > kMaxKneserVertices) {
    fail(ErrorCode::size_limit, "Kneser graph has " + std::to_string(count) +
                                    " vertices, limit is " + std::to_string(kMaxKneserVertices));
  }
  std::vector<std::uint64_t> subsets;
  subsets.reserve(count);
  std::vector<std::uint32_t> idx(spec.r);
  for (std::uint32_t i = 0; i < spec.r; ++i) idx[i] = i;
  while (true) {
    std::uint64_t mask = 0;
    for (std::uint32_t e : idx) mask |= std::uint64_t{1} << e;
    subsets.push_back(mask);
    std::int64_t i = static_cast<std::int64_t>(spec.r) - 1;
    while (i >= 0 && idx[i] == spec.m - spec.r + static_cast<std::uint32_t>(i)) --i;
    if (i < 0) break;
    ++idx[i];
    for (std::uint32_t j = static_cast<std::uint32_t>(i) + 1; j < spec.r; ++j) idx[j] = idx[j - 1] + 1;
  }
  return subsets;
}

Graph generate_kneser(const KneserSpec& spec) {
  const auto subsets = kneser_subsets(spec);
  std::vector<Edge> edges;
  for (Vertex a = 0; a < subsets.size(); ++a) {
    for (Vertex b = a + 1; b < subsets.size(); ++b) {
      if (static_cast<std::uint32_t>(std::popcount(subsets[a] & subsets[b])) < spec.t) {
        edges.push_back({a, b});
      }
    }
  }
  return Graph::from_edges(subsets.size(), edges);
}

}  // namespace vcolor
