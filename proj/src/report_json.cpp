#include "descent/report_json.hpp"

#include <stdexcept>

namespace descent {

namespace {

Json param(int value) { return value < 0 ? Json(nullptr) : Json(value); }

}  // namespace

Json to_json(const VerifyResult& r) {
    Json out;
    out["identity"] = r.identity;
    out["params"] = {{"n", param(r.n)}, {"k", param(r.k)}, {"j", param(r.j)}};
    out["ok"] = r.ok;
    out["witness_diff"] = r.witness_diff;
    out["elapsed_ms"] = r.elapsed_ms;
    out["counts"] = Json::object();
    for (const auto& [key, value] : r.counts) out["counts"][key] = value;
    for (const auto& [key, value] : r.extra) out[key] = value;
    return out;
}

Json to_json(const CdesReport& r) {
    Json out;
    out["set_id"] = r.set_id;
    out["axioms"] = {{"extension", r.extension_ok}, {"equivariance", r.equivariance_ok}, {"non_escher", r.non_escher_ok}};
    Json witnesses = r.escher_witnesses;
    for (const auto& f : r.failures) witnesses.push_back(f);
    out["witnesses"] = witnesses;
    out["orbit_sizes"] = r.orbit_sizes;
    return out;
}

Json to_json(const Matching& m) {
    Json arcs = Json::array();
    for (const Arc& a : m.arcs()) arcs.push_back({a.left, a.right});
    return {{"n", m.n()}, {"arcs", arcs}};
}

Matching matching_from_json(const Json& j) {
    try {
        std::vector<std::pair<int, int>> arcs;
        for (const auto& arc : j.at("arcs")) {
            if (!arc.is_array() || arc.size() != 2) throw std::invalid_argument("matching json: arc must be a pair");
            arcs.emplace_back(arc[0].get<int>(), arc[1].get<int>());
        }
        return Matching(j.at("n").get<int>(), arcs);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("matching json: ") + e.what());
    }
}

}  // namespace descent
