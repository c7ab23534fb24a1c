#include "satdiv/families.hpp"

#include <algorithm>
#include <regex>

namespace satdiv::families {

using satdiv::to_string;

using nlohmann::json;

namespace {

Rational pow2_inv(int e) { return Rational(BigInt(1), BigInt(1) << e); }

Matrix parse_rows(std::initializer_list<std::initializer_list<const char*>> rows) {
  Matrix out;
  for (const auto& r : rows) {
    Row row;
    for (const char* v : r) row.push_back(parse_rational(v));
    out.push_back(std::move(row));
  }
  return out;
}

Family make(std::string name, json params, Matrix rows, Tightness tightness, ThresholdSpec tau,
            std::vector<Fact> facts) {
  return Family{std::move(name), std::move(params), validate_instance(std::move(rows), tightness), tau,
                std::move(facts)};
}

Fact fact(FactKind kind, int tau, Rational budget, Relation rel, Rational value, std::string source) {
  return Fact{kind, tau, std::move(budget), rel, std::move(value), std::move(source)};
}

Fact no_solution(int tau) { return fact(FactKind::AllAgentsSat, tau, 1, Relation::Eq, 0, "construction"); }

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::BadParam, what);
}

bool compare(const Rational& actual, Relation rel, const Rational& value) {
  switch (rel) {
    case Relation::Eq: return actual == value;
    case Relation::Gt: return actual > value;
    case Relation::Le: return actual <= value;
  }
  return false;
}

}  // namespace

const char* to_string(FactKind kind) {
  switch (kind) {
    case FactKind::MaxSatisfied: return "max_satisfied";
    case FactKind::AllAgentsSat: return "all_agents_sat";
    case FactKind::MinBudget: return "min_budget";
    case FactKind::DictatorCount: return "dictator_count";
  }
  return "?";
}

const char* to_string(Relation relation) {
  switch (relation) {
    case Relation::Eq: return "==";
    case Relation::Gt: return ">";
    case Relation::Le: return "<=";
  }
  return "?";
}

FactCheck check_fact(const Fact& f, const Instance& inst, const solvers::SearchOptions& options) {
  FactCheck out;
  switch (f.kind) {
    case FactKind::MaxSatisfied:
      out.actual = solvers::max_satisfied_exact(inst, f.tau, f.budget, options).satisfied;
      break;
    case FactKind::AllAgentsSat:
      out.actual = solvers::all_agents_sat(inst, f.tau, f.budget, options).yes() ? 1 : 0;
      break;
    case FactKind::MinBudget:
      out.actual = solvers::min_budget_exact(inst, f.tau, options).budget;
      break;
    case FactKind::DictatorCount:
      out.actual = solvers::dictator(inst, f.tau).satisfied;
      break;
  }
  out.holds = compare(out.actual, f.relation, f.value);
  return out;
}

json metadata(const Family& family) {
  json facts = json::array();
  for (const auto& f : family.expected) {
    json item = {{"kind", to_string(f.kind)},
                 {"tau", f.tau},
                 {"relation", to_string(f.relation)},
                 {"value", to_string(f.value)},
                 {"source", f.source}};
    if (f.kind == FactKind::MaxSatisfied || f.kind == FactKind::AllAgentsSat) item["budget"] = to_string(f.budget);
    facts.push_back(std::move(item));
  }
  return {{"name", family.name}, {"params", family.params}, {"expected", facts}};
}

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{"instance1", "nocover_four", "nocover_five", "mat1"};
  return names;
}

Family fixture_family(std::string_view name) {
  const json params = {{"name", std::string(name)}};
  if (name == "instance1")
    return make("fixture", params,
                parse_rows({{"0.5", "0.5", "0"}, {"0", "0.5", "0.5"}, {"0.6", "0.1", "0.3"}, {"0.3", "0.1", "0.6"}}),
                Tightness::Tight, ThresholdSpec::half(),
                {no_solution(2), fact(FactKind::MaxSatisfied, 2, 1, Relation::Eq, 3, "construction")});
  if (name == "nocover_four")
    return make("fixture", params,
                parse_rows({{"0.1", "0.3", "0.4", "0.2"}, {"0.2", "0.4", "0.1", "0.3"}, {"0.4", "0.2", "0.3", "0.1"}}),
                Tightness::Tight, ThresholdSpec::all_but(1), {no_solution(3)});
  if (name == "nocover_five")
    return make("fixture", params,
                parse_rows({{"0.32", "0.32", "0.32", "0.02", "0.02"}, {"0.05", "0.05", "0.05", "0.425", "0.425"}}),
                Tightness::Tight, ThresholdSpec::all_but(1), {no_solution(4)});
  if (name == "mat1")
    return make("fixture", params,
                parse_rows({{"0.3", "0.33", "0.04", "0.16", "0.17"},
                            {"0.2", "0.18", "0.28", "0.32", "0.02"},
                            {"0", "0.19", "0.21", "0.31", "0.29"}}),
                Tightness::Tight, ThresholdSpec::half(),
                {fact(FactKind::AllAgentsSat, 3, 1, Relation::Eq, 1, "construction")});
  throw Error(ErrorKind::UnknownFixture, "unknown fixture '" + std::string(name) + "'");
}

Instance fixture(std::string_view name) { return fixture_family(name).instance; }

Family tight_dictator(int m) {
  require(m >= 3 && m % 2 == 1, "tight_dictator needs an odd m >= 3");
  require(m <= 60, "tight_dictator supports m <= 60");
  Matrix rows(m, Row(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      rows[i][j] = i == j ? Rational(1, 2) + pow2_inv(m) : pow2_inv(((j - i) % m + m) % m + 1);
  const int half = (m + 1) / 2;
  return make("tight-dictator", {{"m", m}}, std::move(rows), Tightness::Tight, ThresholdSpec::half(),
              {fact(FactKind::DictatorCount, half, 1, Relation::Eq, half, "construction")});
}

std::vector<Rational> default_deltas(int k) {
  require(k >= 1, "k must be at least 1");
  std::vector<Rational> d;
  for (int i = 1; i <= k; ++i) d.emplace_back(i, 10 * k);
  return d;
}

Family half_upper_bound(const std::vector<Rational>& deltas) {
  require(!deltas.empty(), "need at least one delta");
  for (std::size_t t = 0; t < deltas.size(); ++t) {
    require(deltas[t] > 0 && deltas[t] < Rational(1, 6), "deltas must lie in (0, 1/6)");
    require(t == 0 || deltas[t - 1] < deltas[t], "deltas must be strictly increasing");
  }
  const Rational half(1, 2);
  Matrix rows;
  json ds = json::array();
  for (const auto& d : deltas) {
    const Row base{half + d / 2, half - d, d / 2};
    for (int shift = 0; shift < 3; ++shift)
      rows.push_back({base[(3 - shift) % 3], base[(4 - shift) % 3], base[(5 - shift) % 3]});
    ds.push_back(to_string(d));
  }
  const int k = static_cast<int>(deltas.size());
  return make("half-upper-bound", {{"deltas", ds}}, std::move(rows), Tightness::Tight, ThresholdSpec::fixed(2),
              {fact(FactKind::MaxSatisfied, 2, 1, Relation::Eq, 2 * k + 1, "construction")});
}

Family cyclic_m_minus_1(int m) {
  require(m >= 3, "cyclic family needs m >= 3");
  Matrix rows(m, Row(m, 0));
  for (int i = 0; i < m; ++i) {
    rows[i][i] = Rational(1, 2);
    rows[i][(i + 1) % m] = Rational(1, 2);
  }
  // Within budget 1 at most two coordinates reach 1/2, each serving two agents.
  const int best = std::min(m, 4);
  return make("cyclic", {{"m", m}}, std::move(rows), Tightness::Tight, ThresholdSpec::all_but(1),
              {fact(FactKind::MaxSatisfied, m - 1, 1, Relation::Eq, best, m >= 5 ? "construction" : "exhaustive-search")});
}

Family half_min_budget(int m) {
  require(m >= 4 && m % 2 == 0, "half_min_budget needs an even m >= 4");
  if (m > 4) throw Error(ErrorKind::TooLarge, "half_min_budget is limited to m <= 4");
  const int total = m * m;
  Matrix rows;
  std::vector<int> parts(m, 0);
  auto rec = [&](auto&& self, int j, int left) -> void {
    if (j == m - 1) {
      parts[j] = left;
      Row r(m);
      for (int t = 0; t < m; ++t) r[t] = Rational(parts[t], total);
      rows.push_back(std::move(r));
      return;
    }
    for (int v = 0; v <= left; ++v) {
      parts[j] = v;
      self(self, j + 1, left - v);
    }
  };
  rec(rec, 0, total);
  const int tau = m / 2;
  return make("half-min-budget", {{"m", m}}, std::move(rows), Tightness::Tight, ThresholdSpec::half(),
              {fact(FactKind::AllAgentsSat, tau, 2, Relation::Eq, 1, "construction"),
               fact(FactKind::MinBudget, tau, 1, Relation::Gt, 2 - Rational(6, m), "construction")});
}

Family abo_min_budget(int m, const Rational& eps) {
  require(m >= 3, "abo family needs m >= 3");
  require(eps > 0 && eps < Rational(1, 2), "eps must lie in (0, 1/2)");
  Matrix rows;
  for (int j = 0; j < m; ++j)
    for (int k = j + 1; k < m; ++k) {
      Row r(m, 0);
      r[j] = r[k] = Rational(1, 2);
      rows.push_back(std::move(r));
    }
  for (int j = 0; j < m; ++j)
    for (int k = 0; k < m; ++k) {
      if (j == k) continue;
      Row r(m, 0);
      r[j] = eps;
      r[k] = 1 - eps;
      rows.push_back(std::move(r));
    }
  // All but one coordinate must reach 1/2; the last one either reaches eps
  // or every other coordinate is raised to 1 - eps.
  const Rational low = eps + Rational(m - 1, 2);
  const Rational high = (m - 1) * (1 - eps);
  return make("abo-min-budget", {{"m", m}, {"eps", to_string(eps)}}, std::move(rows), Tightness::Tight,
              ThresholdSpec::all_but(1),
              {fact(FactKind::MinBudget, m - 1, 1, Relation::Eq, std::min(low, high), "closed-form"),
               fact(FactKind::AllAgentsSat, m - 1, Rational(m, 2), Relation::Eq, 1, "construction")});
}

Family two_distinct_tight(int m) {
  require(m >= 2, "two_distinct_tight needs m >= 2");
  Matrix rows(2, Row(m, 0));
  rows[0][0] = 1;
  rows[1][1] = 1;
  return make("two-distinct", {{"m", m}}, std::move(rows), Tightness::Tight, ThresholdSpec::all(),
              {no_solution(m), fact(FactKind::AllAgentsSat, 1, 1, Relation::Eq, 1, "exhaustive-search")});
}

std::optional<Family> builtin(std::string_view name) {
  const std::string s(name);
  if (std::find(fixture_names().begin(), fixture_names().end(), s) != fixture_names().end())
    return fixture_family(s);
  std::smatch mt;
  auto num = [&](int g) { return std::stoi(mt[g].str()); };
  if (std::regex_match(s, mt, std::regex(R"(tight_dictator_m(\d{1,3}))"))) return tight_dictator(num(1));
  if (std::regex_match(s, mt, std::regex(R"(half_upper_bound_k(\d{1,3}))")))
    return half_upper_bound(default_deltas(num(1)));
  if (std::regex_match(s, mt, std::regex(R"(cyclic_m(\d{1,3}))"))) return cyclic_m_minus_1(num(1));
  if (std::regex_match(s, mt, std::regex(R"(half_min_budget_m(\d{1,3}))"))) return half_min_budget(num(1));
  if (std::regex_match(s, mt, std::regex(R"(abo_m(\d{1,3})_eps(\d{1,9})-(\d{1,9}))"))) {
    require(num(3) > 0, "eps denominator must be positive");
    return abo_min_budget(num(1), Rational(num(2), num(3)));
  }
  if (std::regex_match(s, mt, std::regex(R"(two_distinct_m(\d{1,3}))"))) return two_distinct_tight(num(1));
  return std::nullopt;
}

std::vector<std::string> builtin_examples() {
  std::vector<std::string> out = fixture_names();
  for (const char* s : {"tight_dictator_m5", "half_upper_bound_k2", "cyclic_m6", "half_min_budget_m4",
                        "abo_m3_eps1-3", "two_distinct_m2"})
    out.emplace_back(s);
  return out;
}

}  // namespace satdiv::families
