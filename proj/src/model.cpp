#include "satdiv/model.hpp"

#include <algorithm>

namespace satdiv {

bool Instance::rows_sum_to_one() const {
  for (const auto& r : demands_) {
    Rational sum = 0;
    for (const auto& v : r) sum += v;
    if (sum != 1) return false;
  }
  return true;
}

Instance validate_instance(Matrix raw, Tightness tightness) {
  if (raw.empty()) throw Error(ErrorKind::DimensionMismatch, "instance needs at least one agent");
  const auto m = raw.front().size();
  if (m == 0) throw Error(ErrorKind::DimensionMismatch, "instance needs at least one project");
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const int agent = static_cast<int>(i) + 1;
    if (raw[i].size() != m)
      throw Error(ErrorKind::DimensionMismatch,
                  "row " + std::to_string(agent) + " has " + std::to_string(raw[i].size()) +
                      " entries, expected " + std::to_string(m),
                  agent);
    Rational sum = 0;
    for (std::size_t j = 0; j < m; ++j) {
      const auto& v = raw[i][j];
      if (v < 0 || v > 1)
        throw Error(ErrorKind::OutOfRange,
                    "demand (" + std::to_string(agent) + "," + std::to_string(j + 1) + ") = " +
                        to_string(v) + " is outside [0,1]",
                    agent, static_cast<int>(j) + 1);
      sum += v;
    }
    if (sum > 1)
      throw Error(ErrorKind::RowMassExceeded,
                  "row " + std::to_string(agent) + " sums to " + to_string(sum), agent);
    if (tightness == Tightness::Tight && sum != 1)
      throw Error(ErrorKind::NotTight, "row " + std::to_string(agent) + " sums to " + to_string(sum),
                  agent);
  }
  return Instance(std::move(raw), static_cast<int>(m), tightness);
}

int resolve_tau(const ThresholdSpec& spec, int projects) {
  if (projects < 1) throw Error(ErrorKind::TauOutOfRange, "no projects");
  int tau = 0;
  switch (spec.kind) {
    case ThresholdSpec::Kind::One: tau = 1; break;
    case ThresholdSpec::Kind::Half: tau = (projects + 1) / 2; break;
    case ThresholdSpec::Kind::AllButC: tau = projects - spec.value; break;
    case ThresholdSpec::Kind::All: tau = projects; break;
    case ThresholdSpec::Kind::Fixed: tau = spec.value; break;
  }
  if (tau < 1 || tau > projects)
    throw Error(ErrorKind::TauOutOfRange, to_string(spec) + " resolves to " + std::to_string(tau) +
                                              " with " + std::to_string(projects) + " projects");
  return tau;
}

std::string to_string(const ThresholdSpec& spec) {
  switch (spec.kind) {
    case ThresholdSpec::Kind::One: return "one";
    case ThresholdSpec::Kind::Half: return "half";
    case ThresholdSpec::Kind::AllButC: return "all_but:" + std::to_string(spec.value);
    case ThresholdSpec::Kind::All: return "all";
    case ThresholdSpec::Kind::Fixed: return "fixed:" + std::to_string(spec.value);
  }
  return "?";
}

Solution::Solution(std::vector<Rational> coords) : coords_(std::move(coords)) {
  for (std::size_t j = 0; j < coords_.size(); ++j) {
    if (coords_[j] < 0 || coords_[j] > 1)
      throw Error(ErrorKind::OutOfRange,
                  "coordinate " + std::to_string(j + 1) + " = " + to_string(coords_[j]) +
                      " is outside [0,1]",
                  0, static_cast<int>(j) + 1);
    total_ += coords_[j];
  }
}

std::string to_string(const Solution& x) {
  std::string out = "(";
  for (int j = 0; j < x.size(); ++j) {
    if (j) out += ", ";
    out += to_string(x[j]);
  }
  return out + ")";
}

SatisfactionReport satisfaction_report(const Solution& x, const Instance& inst, int tau) {
  if (x.size() != inst.projects())
    throw Error(ErrorKind::DimensionMismatch, "solution has " + std::to_string(x.size()) +
                                                  " coordinates, instance has " +
                                                  std::to_string(inst.projects()) + " projects");
  if (tau < 1 || tau > inst.projects())
    throw Error(ErrorKind::TauOutOfRange, "tau = " + std::to_string(tau));
  SatisfactionReport report;
  report.tau = tau;
  report.total_budget = x.total();
  report.per_agent.resize(inst.agents());
  for (int i = 0; i < inst.agents(); ++i) {
    auto& a = report.per_agent[i];
    for (int j = 0; j < inst.projects(); ++j)
      if (x[j] >= inst.demand(i, j)) a.local_projects.push_back(j);
    a.satisfied = static_cast<int>(a.local_projects.size()) >= tau;
    if (a.satisfied) ++report.satisfied_count;
  }
  return report;
}

int coverage_count(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size())
    throw Error(ErrorKind::DimensionMismatch, "vectors of length " + std::to_string(a.size()) +
                                                  " and " + std::to_string(b.size()));
  int count = 0;
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a[j] >= b[j]) ++count;
  return count;
}

bool tau_covers(std::span<const Rational> a, std::span<const Rational> b, int tau) {
  return coverage_count(a, b) >= tau;
}

Solution canonicalize(const Solution& x, const Instance& inst) {
  if (x.size() != inst.projects())
    throw Error(ErrorKind::DimensionMismatch, "solution has " + std::to_string(x.size()) +
                                                  " coordinates, instance has " +
                                                  std::to_string(inst.projects()) + " projects");
  std::vector<Rational> z(inst.projects());
  for (int j = 0; j < inst.projects(); ++j) {
    Rational best = 0;
    for (int i = 0; i < inst.agents(); ++i) {
      const auto& d = inst.demand(i, j);
      if (d <= x[j] && d > best) best = d;
    }
    z[j] = best;
  }
  return Solution(std::move(z));
}

}  // namespace satdiv
