#include "connideals/serialize.hpp"

#include <stdexcept>

namespace connideals {

using nlohmann::json;

namespace {

json members(VertexSet s) { return s.to_vector(); }

}  // namespace

json ideal_to_json(const SquarefreeIdeal& ideal) {
  json gens = json::array();
  for (VertexSet u : ideal.gens()) gens.push_back(members(u));
  return {{"ground", ideal.ground()}, {"gens", std::move(gens)}};
}

SquarefreeIdeal ideal_from_json(const json& j) {
  try {
    const int ground = j.at("ground").get<int>();
    std::vector<VertexSet> gens;
    for (const auto& g : j.at("gens")) {
      VertexSet u;
      for (int v : g.get<std::vector<int>>()) {
        if (v < 0 || v >= ground) throw std::invalid_argument("variable out of range");
        u.insert(v);
      }
      gens.push_back(u);
    }
    return SquarefreeIdeal(ground, std::move(gens));
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("ideal JSON: ") + e.what());
  }
}

json order_to_json(const SquarefreeIdeal& ideal, const AdmissibleOrder& order) {
  json gens = json::array();
  for (std::size_t idx : order.order) gens.push_back(members(ideal.gens().at(idx)));
  return {{"gens", std::move(gens)}, {"order", order.order}, {"witness", order.witness}};
}

AdmissibleOrder order_from_json(const json& j) {
  try {
    AdmissibleOrder out;
    out.order = j.at("order").get<std::vector<std::size_t>>();
    out.witness = j.at("witness").get<std::vector<std::vector<std::size_t>>>();
    return out;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("order JSON: ") + e.what());
  }
}

json betti_to_json(const BettiTable& table) {
  json entries = json::array();
  for (const auto& [key, rank] : table.entries) {
    entries.push_back({key.first, key.second, rank});
  }
  return {{"field", std::string(to_string(table.field))}, {"entries", std::move(entries)}};
}

}  // namespace connideals
