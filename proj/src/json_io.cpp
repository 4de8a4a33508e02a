#include "matroidkl/json_io.hpp"

#include <fstream>

#include "matroidkl/errors.hpp"
#include "matroidkl/families.hpp"

namespace matroidkl {

namespace {

nlohmann::json int_to_json(const Int& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

}  // namespace

nlohmann::json matroid_to_json(const Matroid& m) {
    nlohmann::json j;
    j["n"] = m.n();
    auto& arr = j["bases"] = nlohmann::json::array();
    for (Subset b : m.bases()) arr.push_back(elements_of(b));
    return j;
}

Matroid matroid_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("bases"))
        throw BadParameters("matroid JSON needs \"n\" and \"bases\"");
    int n = j.at("n").get<int>();
    std::vector<std::vector<int>> bases =
        j.at("bases").get<std::vector<std::vector<int>>>();
    return Matroid(n, bases);
}

GraphSpec graph_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw BadParameters("graph JSON needs \"vertices\" and \"edges\"");
    GraphSpec g;
    g.vertices = j.at("vertices").get<int>();
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw BadParameters("graph edge must be a pair [u,v]");
        g.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return g;
}

Matroid matroid_from_input_json(const nlohmann::json& j) {
    if (j.is_object() && j.contains("bases")) return matroid_from_json(j);
    if (j.is_object() && j.contains("edges"))
        return graphic(graph_from_json(j));
    throw BadParameters("input JSON is neither a matroid nor a graph");
}

Matroid matroid_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw BadParameters("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw BadParameters("invalid JSON in " + path + ": " + e.what());
    }
    return matroid_from_input_json(j);
}

nlohmann::json poly_to_json(const IntPoly& f) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Int& v : f.coeffs()) arr.push_back(int_to_json(v));
    return arr;
}

nlohmann::json bipoly_to_json(const BiPoly& f) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : f.coeffs()) {
        nlohmann::json r = nlohmann::json::array();
        for (const Int& v : row) r.push_back(int_to_json(v));
        rows.push_back(std::move(r));
    }
    return rows;
}

nlohmann::json gamma_to_json(const GammaVector& g) {
    nlohmann::json j;
    j["d"] = g.d;
    auto& arr = j["gammas"] = nlohmann::json::array();
    for (const Int& v : g.gammas) arr.push_back(int_to_json(v));
    return j;
}

}  // namespace matroidkl
