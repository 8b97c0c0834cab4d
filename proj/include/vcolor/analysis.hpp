#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "vcolor/graph.hpp"
#include "vcolor/rounding.hpp"
#include "vcolor/sdp.hpp"

namespace vcolor {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// ---- verifiers --------------------------------------------------------------

struct ColoringReport {
  bool legal = false;
  std::vector<Edge> conflicts;  // monochromatic edges, in edge order
  std::size_t colors_used = 0;  // distinct colors
};

// Throws Error(invalid_argument) unless `colors` assigns every vertex.
ColoringReport verify_coloring(const Graph& g, std::span<const Color> colors);

struct SemicoloringReport {
  bool valid = false;  // legal and covering
  bool legal = false;
  bool covering = false;  // colored >= ceil(n/2)
  std::size_t colored = 0;
  std::size_t required = 0;
  std::vector<Edge> conflicts;
};

SemicoloringReport verify_semicoloring(const Graph& g, std::span<const Color> colors);

struct VectorColoringReport {
  double max_norm_deviation = 0.0;  // max | |v_i| - 1 |
  double worst_dot = 0.0;           // largest edge dot product (NaN if edgeless)
  double bound = 0.0;               // -1/(k-1)
  double worst_violation = 0.0;     // max(0, worst_dot - bound)
  bool valid = false;               // both deviations within tol
};

VectorColoringReport verify_vector_coloring(const Graph& g, const VectorColoring& vc, double tol);

// ---- Kneser gap calculators -----------------------------------------------

struct KneserCertificate {
  KneserSpec spec;
  VectorMatrix vectors;  // may be empty when not requested
  Rational weight_a = 1;
  // Closed form evaluated at |S & T| = t; an upper bound for every adjacent pair.
  std::optional<Rational> closed_form_vcn;
  double closed_form_dot = 0.0;
  // Present only when the graph has edges: largest dot over adjacent pairs,
  // attained at |S & T| = t - 1.
  std::optional<double> exact_worst_dot;
  std::optional<double> exact_vcn;
  std::optional<double> vcn_bound;  // closed form when available, else exact
  BigInt milner_bound = 1;
  BigInt vertex_count = 0;
  Rational chromatic_lower = 0;
  double log2_chromatic_lower = 0.0;
  bool weak = false;
};

BigInt binomial(unsigned m, unsigned r);

// +1/-1 characteristic vectors scaled to unit length.
KneserCertificate kneser_vectors(const KneserSpec& spec, bool keep_vectors = true);
// Present elements weighted by A, absent by -1. Throws if r^2 - m t <= 0.
KneserCertificate kneser_weighted(const KneserSpec& spec, bool keep_vectors = true);

struct MilnerBound {
  BigInt milner_bound = 1;
  BigInt vertex_count = 0;
  Rational chromatic_lower = 0;
  double log2_chromatic_lower = 0.0;
  bool weak = false;
};

MilnerBound kneser_chromatic_lower(const KneserSpec& spec);

struct DotCheck {
  std::size_t pairs_checked = 0;
  double worst_dot = 0.0;
  bool passed = false;
  std::size_t max_norm_violations = 0;
};

// Every adjacent pair of the generated graph has dot <= bound + tol; every
// vector has unit norm within tol.
DotCheck check_adjacent_dots(const Graph& g, const VectorMatrix& vectors, double bound, double tol = 1e-9);

// ---- exact oracles for small graphs ---------------------------------------

inline constexpr std::size_t kIndependenceLimit = 30;
inline constexpr std::size_t kChromaticLimit = 20;

std::size_t independence_brute_force(const Graph& g);
std::size_t clique_brute_force(const Graph& g);
std::size_t chromatic_brute_force(const Graph& g);

std::string to_string(const Rational& q);

}  // namespace vcolor
