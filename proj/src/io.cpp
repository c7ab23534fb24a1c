#include "satdiv/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace satdiv::io {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    parse_error(e.what());
  }
}

int int_field(const json& value, const char* name) {
  if (!value.is_number_integer()) parse_error(std::string("'") + name + "' must be an integer");
  return value.get<int>();
}

}  // namespace

Rational rational_from_json(const json& value) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
  if (value.is_number_float()) return parse_rational(value.dump());
  parse_error("expected a rational, got " + value.dump());
}

json rational_to_json(const Rational& value) { return to_string(value); }

json tau_to_json(const ThresholdSpec& tau) {
  switch (tau.kind) {
    case ThresholdSpec::Kind::One: return "one";
    case ThresholdSpec::Kind::Half: return "half";
    case ThresholdSpec::Kind::All: return "all";
    case ThresholdSpec::Kind::AllButC: return json{{"all_but", tau.value}};
    case ThresholdSpec::Kind::Fixed: return json{{"fixed", tau.value}};
  }
  return nullptr;
}

ThresholdSpec tau_from_json(const json& value) {
  if (value.is_string()) return parse_tau(value.get<std::string>());
  if (value.is_number_integer()) return ThresholdSpec::fixed(value.get<int>());
  if (value.is_object() && value.size() == 1) {
    if (value.contains("all_but")) return ThresholdSpec::all_but(int_field(value["all_but"], "all_but"));
    if (value.contains("fixed")) return ThresholdSpec::fixed(int_field(value["fixed"], "fixed"));
  }
  parse_error("unrecognised tau " + value.dump());
}

ThresholdSpec parse_tau(std::string_view text) {
  std::string s(text);
  auto integer = [&](const std::string& digits) {
    if (digits.empty()) parse_error("bad tau '" + s + "'");
    for (char ch : digits)
      if (!std::isdigit(static_cast<unsigned char>(ch))) parse_error("bad tau '" + s + "'");
    return std::stoi(digits);
  };
  if (s == "one") return ThresholdSpec::one();
  if (s == "half") return ThresholdSpec::half();
  if (s == "all") return ThresholdSpec::all();
  if (s.rfind("all_but:", 0) == 0) return ThresholdSpec::all_but(integer(s.substr(8)));
  if (s.rfind("m-", 0) == 0) return ThresholdSpec::all_but(integer(s.substr(2)));
  if (s.rfind("fixed:", 0) == 0) return ThresholdSpec::fixed(integer(s.substr(6)));
  return ThresholdSpec::fixed(integer(s));
}

InstanceDocument parse_instance(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) parse_error("instance document must be an object");
  if (!doc.contains("agents") || !doc["agents"].is_array())
    parse_error("instance document needs an 'agents' list");

  Matrix raw;
  for (const auto& row : doc["agents"]) {
    if (!row.is_array()) parse_error("each agent must be a list of demands");
    Row r;
    for (const auto& v : row) r.push_back(rational_from_json(v));
    raw.push_back(std::move(r));
  }
  if (doc.contains("projects")) {
    const int m = int_field(doc["projects"], "projects");
    for (std::size_t i = 0; i < raw.size(); ++i)
      if (static_cast<int>(raw[i].size()) != m)
        throw Error(ErrorKind::DimensionMismatch,
                    "agent " + std::to_string(i + 1) + " lists " + std::to_string(raw[i].size()) +
                        " demands, 'projects' is " + std::to_string(m),
                    static_cast<int>(i) + 1);
  }
  bool tight = false;
  if (doc.contains("tight")) {
    if (!doc["tight"].is_boolean()) parse_error("'tight' must be a boolean");
    tight = doc["tight"].get<bool>();
  }
  ThresholdSpec tau = doc.contains("tau") ? tau_from_json(doc["tau"]) : ThresholdSpec::half();
  auto inst = validate_instance(std::move(raw), tight ? Tightness::Tight : Tightness::General);
  json metadata = doc.contains("family") ? doc["family"] : json(nullptr);
  return {std::move(inst), tau, std::move(metadata)};
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

InstanceDocument read_instance(const std::filesystem::path& path) { return parse_instance(read_text(path)); }

json instance_to_json(const Instance& inst, const ThresholdSpec& tau, const json& metadata) {
  json agents = json::array();
  for (const auto& row : inst.demands()) {
    json r = json::array();
    for (const auto& v : row) r.push_back(rational_to_json(v));
    agents.push_back(std::move(r));
  }
  json doc = {{"projects", inst.projects()},
              {"tau", tau_to_json(tau)},
              {"tight", inst.is_tight()},
              {"agents", std::move(agents)}};
  if (!metadata.is_null()) doc["family"] = metadata;
  return doc;
}

std::string format_instance(const Instance& inst, const ThresholdSpec& tau, const json& metadata) {
  return instance_to_json(inst, tau, metadata).dump(2) + "\n";
}

Solution parse_solution(std::string_view text) {
  std::size_t first = 0;
  while (first < text.size() && std::isspace(static_cast<unsigned char>(text[first]))) ++first;
  std::vector<Rational> coords;
  if (first < text.size() && (text[first] == '[' || text[first] == '{')) {
    json doc = parse_json(text);
    const json& list = doc.is_object() ? doc.value("solution", json()) : doc;
    if (!list.is_array()) parse_error("solution document needs a 'solution' list");
    for (const auto& v : list) coords.push_back(rational_from_json(v));
  } else {
    std::string token;
    auto flush = [&] {
      if (!token.empty()) coords.push_back(parse_rational(token));
      token.clear();
    };
    for (char ch : text) {
      if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',' || ch == '(' || ch == ')')
        flush();
      else
        token += ch;
    }
    flush();
  }
  if (coords.empty()) parse_error("empty solution");
  return Solution(std::move(coords));
}

Solution read_solution(const std::filesystem::path& path) { return parse_solution(read_text(path)); }

json solution_to_json(const Solution& x) {
  json coords = json::array();
  for (const auto& v : x.coords()) coords.push_back(rational_to_json(v));
  return {{"solution", std::move(coords)}, {"total", rational_to_json(x.total())}};
}

}  // namespace satdiv::io
