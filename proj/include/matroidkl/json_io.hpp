#pragma once

#include <string>

#include "json.hpp"
#include "matroidkl/matroid.hpp"
#include "matroidkl/poly.hpp"

namespace matroidkl {

// {"n": <int>, "bases": [[<int>,...],...]}
nlohmann::json matroid_to_json(const Matroid& m);
Matroid matroid_from_json(const nlohmann::json& j);

// {"vertices": <int>, "edges": [[u,v],...]}
GraphSpec graph_from_json(const nlohmann::json& j);

// Reads either format (keyed on "bases" vs "edges") and returns a matroid.
Matroid matroid_from_input_json(const nlohmann::json& j);
Matroid matroid_from_file(const std::string& path);

// degree-ascending coefficient array; values beyond int64 become strings
nlohmann::json poly_to_json(const IntPoly& f);
nlohmann::json bipoly_to_json(const BiPoly& f);
nlohmann::json gamma_to_json(const GammaVector& g);

}  // namespace matroidkl
