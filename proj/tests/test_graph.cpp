#include <doctest.h>

#include <algorithm>
#include <bit>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "vcolor/errors.hpp"
#include "vcolor/graph.hpp"

using namespace vcolor;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::numerical;
}

}  // namespace

TEST_CASE("graph construction normalizes and deduplicates") {
  std::vector<Edge> e = {{1, 0}, {0, 1}, {2, 1}, {1, 2}, {0, 2}};
  std::size_t dups = 0;
  Graph g = Graph::from_edges(4, e, &dups);
  CHECK(dups == 2);
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 3);
  CHECK(g.max_degree() == 2);
  CHECK(g.degree(3) == 0);
  for (const Edge& x : g.edges()) CHECK(x.u < x.v);
  CHECK(std::is_sorted(g.edges().begin(), g.edges().end()));
  CHECK(g.adjacent(2, 0));
  CHECK_FALSE(g.adjacent(0, 3));
}

TEST_CASE("graph rejects self loops and out-of-range endpoints") {
  std::vector<Edge> loop = {{1, 1}};
  CHECK(code_of([&] { Graph::from_edges(3, loop); }) == ErrorCode::input);
  std::vector<Edge> far = {{0, 5}};
  CHECK(code_of([&] { Graph::from_edges(3, far); }) == ErrorCode::input);
}

TEST_CASE("induced subgraph and complement") {
  const Graph c5 = fixtures::cycle(5);
  std::vector<Vertex> ids = {0, 1, 2};
  const Graph p3 = c5.induced(ids);
  CHECK(p3.edge_count() == 2);
  const Graph comp = c5.complement();
  CHECK(comp.edge_count() == 5);
  // C5 is self-complementary, and the complement of the complement is the original.
  CHECK(comp.complement() == c5);
  CHECK(fixtures::complete(6).complement().edge_count() == 0);
}

TEST_CASE("adjacency lists agree with a naive edge set") {
  std::mt19937_64 rng(3);
  std::vector<Edge> e;
  for (int i = 0; i < 300; ++i) {
    Vertex u = rng() % 40, v = rng() % 40;
    if (u != v) e.push_back({u, v});
  }
  const Graph g = Graph::from_edges(40, e);
  std::set<std::pair<Vertex, Vertex>> naive;
  for (const Edge& x : e) naive.insert({std::min(x.u, x.v), std::max(x.u, x.v)});
  CHECK(g.edge_count() == naive.size());
  std::size_t degree_sum = 0;
  for (Vertex v = 0; v < 40; ++v) {
    degree_sum += g.degree(v);
    for (Vertex w : g.neighbors(v)) CHECK(naive.count({std::min(v, w), std::max(v, w)}) == 1);
  }
  CHECK(degree_sum == 2 * naive.size());
}

TEST_CASE("two_color finds bipartitions and rejects odd cycles") {
  const Graph c6 = fixtures::cycle(6);
  const auto side = two_color(c6);
  REQUIRE(side.size() == 6);
  for (const Edge& e : c6.edges()) CHECK(side[e.u] != side[e.v]);
  CHECK(two_color(fixtures::cycle(7)).empty());
  CHECK(two_color(Graph::from_edges(3, {})).size() == 3);
}

TEST_CASE("DIMACS parsing") {
  const auto p = parse_dimacs("c comment\np edge 3 2\ne 1 2\ne 2 3\n");
  CHECK(p.graph.vertex_count() == 3);
  CHECK(p.graph.edge_count() == 2);
  CHECK(p.warnings.empty());

  SUBCASE("col variant and duplicate warnings") {
    const auto q = parse_dimacs("p col 3 3\ne 1 2\ne 2 1\ne 2 3\n");
    CHECK(q.graph.edge_count() == 2);
    CHECK(q.warnings.size() >= 1);
  }
  SUBCASE("header count mismatch is a warning") {
    const auto q = parse_dimacs("p edge 3 5\ne 1 2\n");
    CHECK(q.graph.edge_count() == 1);
    CHECK_FALSE(q.warnings.empty());
  }
  SUBCASE("errors") {
    CHECK(code_of([] { parse_dimacs("e 1 2\n"); }) == ErrorCode::input);
    CHECK(code_of([] { parse_dimacs("p edge 3 1\ne 1 1\n"); }) == ErrorCode::input);
    CHECK(code_of([] { parse_dimacs("p edge 3 1\ne 1 4\n"); }) == ErrorCode::input);
    CHECK(code_of([] { parse_dimacs("p edge 3 1\ne 1\n"); }) == ErrorCode::input);
    CHECK(code_of([] { parse_dimacs("c nothing\n"); }) == ErrorCode::input);
    CHECK(code_of([] { read_dimacs_file("/nonexistent/file.col"); }) == ErrorCode::input);
  }
}

TEST_CASE("DIMACS round trip preserves the graph") {
  for (const auto& f : fixtures::small_suite()) {
    const Graph back = parse_dimacs(emit_dimacs(f.graph)).graph;
    CHECK_MESSAGE(back == f.graph, f.name);
  }
}

TEST_CASE("planted generator") {
  SUBCASE("p = 1 gives the complete multipartite graph") {
    const auto inst = generate_planted(10, 2, 1.0, 7);
    CHECK(inst.graph.edge_count() == 25);
    CHECK(inst.graph.max_degree() == 5);
    CHECK(two_color(inst.graph).size() == 10);
  }
  SUBCASE("hidden coloring is legal and round robin") {
    const auto inst = generate_planted(300, 3, 0.2, 9);
    for (Vertex v = 0; v < 300; ++v) CHECK(inst.hidden_coloring[v] == v % 3);
    for (const Edge& e : inst.graph.edges()) CHECK(inst.hidden_coloring[e.u] != inst.hidden_coloring[e.v]);
  }
  SUBCASE("edge density matches p") {
    const auto inst = generate_planted(600, 3, 0.1, 1);
    const double pairs = 3.0 * 200 * 200;
    const double density = static_cast<double>(inst.graph.edge_count()) / pairs;
    // Binomial standard deviation is about 0.0017.
    CHECK(std::abs(density - 0.1) < 0.01);
  }
  SUBCASE("determinism") {
    CHECK(generate_planted(200, 3, 0.3, 5).graph == generate_planted(200, 3, 0.3, 5).graph);
    CHECK_FALSE(generate_planted(200, 3, 0.3, 5).graph == generate_planted(200, 3, 0.3, 6).graph);
  }
  SUBCASE("argument checks") {
    CHECK(code_of([] { generate_planted(10, 1, 0.5, 0); }) == ErrorCode::invalid_argument);
    CHECK(code_of([] { generate_planted(2, 3, 0.5, 0); }) == ErrorCode::invalid_argument);
    CHECK(code_of([] { generate_planted(10, 2, 1.5, 0); }) == ErrorCode::invalid_argument);
  }
}

TEST_CASE("Kneser generator against brute-force enumeration") {
  const Graph pet = fixtures::petersen();
  CHECK(pet.vertex_count() == 10);
  CHECK(pet.edge_count() == 15);
  CHECK(pet.max_degree() == 3);

  for (KneserSpec spec : {KneserSpec{6, 3, 1}, KneserSpec{7, 3, 2}, KneserSpec{8, 4, 2}, KneserSpec{6, 2, 2}}) {
    std::vector<std::uint64_t> subsets;
    for (std::uint64_t mask = 0; mask < (1ULL << spec.m); ++mask)
      if (std::popcount(mask) == static_cast<int>(spec.r)) subsets.push_back(mask);
    std::size_t edges = 0;
    for (std::size_t i = 0; i < subsets.size(); ++i)
      for (std::size_t j = i + 1; j < subsets.size(); ++j)
        if (std::popcount(subsets[i] & subsets[j]) < static_cast<int>(spec.t)) ++edges;
    const Graph g = generate_kneser(spec);
    CHECK(g.vertex_count() == subsets.size());
    CHECK(g.edge_count() == edges);
    CHECK(spec.vertex_count() == subsets.size());
  }
}

TEST_CASE("Kneser subsets come in lexicographic order") {
  const auto s = kneser_subsets({5, 2, 1});
  REQUIRE(s.size() == 10);
  CHECK(s.front() == 0b00011);  // {0,1}
  CHECK(s[1] == 0b00101);       // {0,2}
  CHECK(s.back() == 0b11000);   // {3,4}
}

TEST_CASE("Kneser spec limits") {
  CHECK(code_of([] { KneserSpec{5, 6, 1}.validate(); }) == ErrorCode::invalid_argument);
  CHECK(code_of([] { KneserSpec{5, 2, 0}.validate(); }) == ErrorCode::invalid_argument);
  CHECK(code_of([] { kneser_subsets({64, 2, 1}); }) == ErrorCode::size_limit);
  CHECK(code_of([] { generate_kneser({40, 20, 1}); }) == ErrorCode::size_limit);
  CHECK(KneserSpec{200, 100, 1}.vertex_count() == UINT64_MAX);
}
