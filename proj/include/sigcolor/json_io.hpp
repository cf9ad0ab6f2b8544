#pragma once

#include <filesystem>
#include <optional>

#include "json.hpp"
#include "sigcolor/circle.hpp"
#include "sigcolor/constructive.hpp"
#include "sigcolor/solver.hpp"

namespace sigcolor {

// Rationals travel as reduced "num/den" strings; integers keep "/1".
//
//   coloring:     {"r": "15/4", "f": ["0/1", "127/60", "1/1"]}
//   certificate:  {"switch_set": [0, 3], "coloring": {...}}
//   chi_c result: {"chi_c": "8/3" | "inf", "p": 8, "q": 3, "witness": {...}, "tightness": {...}}

nlohmann::json coloring_to_json(const Coloring& c);
/// Throws InvalidArgument on a malformed document.
Coloring coloring_from_json(const nlohmann::json& j);

nlohmann::json certificate_to_json(const Certificate& cert);
/// Accepts a certificate, a bare coloring (empty switch set), or a chi_c
/// result (its witness). Throws InvalidArgument.
Certificate certificate_from_json(const nlohmann::json& j);

nlohmann::json tightness_to_json(const TightnessReport& report);
nlohmann::json chi_result_to_json(const ChiResult& result,
                                  const std::optional<TightnessReport>& tightness);

nlohmann::json read_json_file(const std::filesystem::path& path);

}  // namespace sigcolor
