#pragma once

#include <string>

#include <json.hpp>

#include "vcolor/analysis.hpp"
#include "vcolor/rounding.hpp"
#include "vcolor/sdp.hpp"

namespace vcolor {

// {"n", "k_value", "alpha", "vectors", ...}; doubles print in shortest
// round-trip form.
nlohmann::json solve_to_json(const SolveResult& r, bool strict);
nlohmann::json coloring_stats_to_json(const Coloring& c);
// One `v <vertex_1based> <color>` line per vertex.
std::string coloring_to_text(const Coloring& c);
nlohmann::json kneser_to_json(const KneserCertificate& unweighted, const KneserCertificate* weighted,
                              bool emit_vectors);

}  // namespace vcolor
