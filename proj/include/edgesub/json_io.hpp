#pragma once

#include <json.hpp>

#include "edgesub/coefficient.hpp"
#include "edgesub/counting.hpp"
#include "edgesub/fracture.hpp"
#include "edgesub/monotonicity.hpp"
#include "edgesub/tutte.hpp"

namespace edgesub {

// Fracture <-> JSON: per-vertex list of blocks, each block a sorted list of
// incident-edge ids.
nlohmann::json fracture_to_json(const Fracture& f);
Fracture fracture_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Verdict& v);
nlohmann::json to_json(const CoefficientTable& t);
nlohmann::json to_json(const MonotonicityMatrix& m);
nlohmann::json to_json(const EstimateResult& r);

// Exact/approx classification of every point of a rational grid.
nlohmann::json classification_grid_json(const std::vector<Rat>& xs, const std::vector<Rat>& ys);

std::string rat_to_string(const Rat& r);  // "p/q"
Rat rat_from_string(const std::string& s);

}  // namespace edgesub
