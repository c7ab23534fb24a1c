#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"

#include "satdiv/model.hpp"

namespace satdiv::io {

using json = nlohmann::json;

/// Parsed instance document:
///   { "projects": 3, "tau": "half" | "one" | "all" | {"all_but": c} | {"fixed": k},
///     "tight": true, "agents": [["1/2", "0.5", 0], ...], "family": {...} }
/// Entries are "p/q" strings, decimal strings, or JSON numbers (read back
/// through their shortest decimal form, so 0.1 means exactly 1/10).
struct InstanceDocument {
  Instance instance;
  ThresholdSpec tau;
  json metadata;  // "family" object when present, otherwise null
};

InstanceDocument parse_instance(std::string_view text);
InstanceDocument read_instance(const std::filesystem::path& path);

json instance_to_json(const Instance& inst, const ThresholdSpec& tau, const json& metadata = nullptr);
std::string format_instance(const Instance& inst, const ThresholdSpec& tau,
                            const json& metadata = nullptr);

json tau_to_json(const ThresholdSpec& tau);
ThresholdSpec tau_from_json(const json& value);
/// CLI spelling: one | half | all | all_but:C | m-C | fixed:K | K
ThresholdSpec parse_tau(std::string_view text);

/// Accepts a bare JSON list, {"solution": [...]}, or whitespace/comma separated values.
Solution parse_solution(std::string_view text);
Solution read_solution(const std::filesystem::path& path);
/// {"solution": [...], "total": "p/q"}
json solution_to_json(const Solution& x);

Rational rational_from_json(const json& value);
json rational_to_json(const Rational& value);

std::string read_text(const std::filesystem::path& path);

}  // namespace satdiv::io
