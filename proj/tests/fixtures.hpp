#pragma once

#include <string>
#include <utility>
#include <vector>

#include "vcolor/graph.hpp"

namespace fixtures {

inline vcolor::Graph path(std::size_t n) {
  std::vector<vcolor::Edge> e;
  for (vcolor::Vertex i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return vcolor::Graph::from_edges(n, e);
}

inline vcolor::Graph cycle(std::size_t n) {
  std::vector<vcolor::Edge> e;
  for (vcolor::Vertex i = 0; i < n; ++i) e.push_back({i, static_cast<vcolor::Vertex>((i + 1) % n)});
  return vcolor::Graph::from_edges(n, e);
}

inline vcolor::Graph complete(std::size_t n) {
  std::vector<vcolor::Edge> e;
  for (vcolor::Vertex i = 0; i < n; ++i)
    for (vcolor::Vertex j = i + 1; j < n; ++j) e.push_back({i, j});
  return vcolor::Graph::from_edges(n, e);
}

// Hub 0 joined to a cycle on 1..n-1.
inline vcolor::Graph wheel(std::size_t n) {
  std::vector<vcolor::Edge> e;
  const auto rim = static_cast<vcolor::Vertex>(n - 1);
  for (vcolor::Vertex i = 0; i < rim; ++i) {
    e.push_back({0, i + 1});
    e.push_back({i + 1, (i + 1) % rim + 1});
  }
  return vcolor::Graph::from_edges(n, e);
}

inline vcolor::Graph petersen() { return vcolor::generate_kneser({5, 2, 1}); }

struct Named {
  std::string name;
  vcolor::Graph graph;
};

// Small graphs for exhaustive cross-checks (n <= 12).
inline std::vector<Named> small_suite() {
  std::vector<Named> s;
  s.push_back({"P2", path(2)});
  s.push_back({"P5", path(5)});
  for (std::size_t n = 4; n <= 7; ++n) s.push_back({"C" + std::to_string(n), cycle(n)});
  s.push_back({"Petersen", petersen()});
  for (std::size_t q = 3; q <= 6; ++q) s.push_back({"K" + std::to_string(q), complete(q)});
  s.push_back({"W6", wheel(6)});
  s.push_back({"planted12", vcolor::generate_planted(12, 3, 0.6, 5).graph});
  s.push_back({"planted10", vcolor::generate_planted(10, 4, 0.7, 11).graph});
  return s;
}

}  // namespace fixtures
