#include "sigcolor/json_io.hpp"

#include <fstream>
#include <string>
#include <vector>

#include "sigcolor/errors.hpp"

namespace sigcolor {

using nlohmann::json;

json coloring_to_json(const Coloring& c) {
  json points = json::array();
  for (const Rational& p : c.f) points.push_back(p.str());
  return {{"r", c.r.str()}, {"f", std::move(points)}};
}

Coloring coloring_from_json(const json& j) {
  if (!j.is_object() || !j.contains("r") || !j.contains("f") || !j["r"].is_string() ||
      !j["f"].is_array()) {
    throw InvalidArgument("coloring JSON needs a string \"r\" and an array \"f\"");
  }
  std::vector<Rational> points;
  for (const json& p : j["f"]) {
    if (!p.is_string()) throw InvalidArgument("coloring points must be \"num/den\" strings");
    points.push_back(Rational::parse(p.get<std::string>()));
  }
  return {Rational::parse(j["r"].get<std::string>()), std::move(points)};
}

json certificate_to_json(const Certificate& cert) {
  return {{"switch_set", cert.switch_set.members()}, {"coloring", coloring_to_json(cert.coloring)}};
}

Certificate certificate_from_json(const json& j) {
  if (!j.is_object()) throw InvalidArgument("expected a JSON object");
  if (j.contains("coloring")) {
    std::vector<int> members;
    if (j.contains("switch_set")) {
      if (!j["switch_set"].is_array()) throw InvalidArgument("\"switch_set\" must be an array");
      for (const json& v : j["switch_set"]) {
        if (!v.is_number_integer()) throw InvalidArgument("switch set members must be integers");
        members.push_back(v.get<int>());
      }
    }
    return {SwitchSet(std::move(members)), coloring_from_json(j["coloring"])};
  }
  if (j.contains("witness")) return {SwitchSet(), coloring_from_json(j["witness"])};
  return {SwitchSet(), coloring_from_json(j)};
}

json tightness_to_json(const TightnessReport& report) {
  json out{{"tight_edges", report.tight_edges}};
  if (!report.cycle) {
    out["cycle"] = nullptr;
    return out;
  }
  const TightCycle& c = *report.cycle;
  json increments = json::array();
  for (const Rational& inc : c.increments) increments.push_back(inc.str());
  out["cycle"] = {{"vertices", c.vertices},
                  {"edges", c.edges},
                  {"increments", std::move(increments)},
                  {"s", c.positive_edges},
                  {"t", c.negative_edges},
                  {"S", c.unit_sum},
                  {"K", c.half_turns},
                  {"m", c.winding},
                  {"a", c.a},
                  {"recovered_r", c.unit_sum != 0 ? json(c.recovered_r.str()) : json(nullptr)}};
  return out;
}

json chi_result_to_json(const ChiResult& result, const std::optional<TightnessReport>& tightness) {
  if (result.infinite) return {{"chi_c", "inf"}};
  json out{{"chi_c", result.value.str()}, {"p", result.p}, {"q", result.q}};
  if (result.witness) out["witness"] = coloring_to_json(*result.witness);
  if (tightness) out["tightness"] = tightness_to_json(*tightness);
  return out;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidArgument(path.string() + ": " + e.what());
  }
}

}  // namespace sigcolor
