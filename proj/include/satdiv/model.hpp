#pragma once

#include <span>
#include <string>
#include <vector>

#include "satdiv/error.hpp"
#include "satdiv/rational.hpp"

namespace satdiv {

using Row = std::vector<Rational>;
using Matrix = std::vector<Row>;

enum class Tightness { General, Tight };

/// n x m demand matrix. Every entry lies in [0,1] and every row sums to at
/// most 1 (exactly 1 when tight). Only constructible through validate_instance.
class Instance {
 public:
  int agents() const { return static_cast<int>(demands_.size()); }
  int projects() const { return projects_; }
  Tightness tightness() const { return tightness_; }
  bool is_tight() const { return tightness_ == Tightness::Tight; }

  const Rational& demand(int agent, int project) const { return demands_[agent][project]; }
  const Row& row(int agent) const { return demands_[agent]; }
  const Matrix& demands() const { return demands_; }

  /// True when every row sums to exactly 1, whatever the declared flag.
  bool rows_sum_to_one() const;

  friend Instance validate_instance(Matrix raw, Tightness tightness);

 private:
  Instance(Matrix demands, int projects, Tightness tightness)
      : demands_(std::move(demands)), projects_(projects), tightness_(tightness) {}

  Matrix demands_;
  int projects_ = 0;
  Tightness tightness_ = Tightness::General;
};

/// Checks shape, range and row mass. Throws RowMassExceeded(i), NotTight(i),
/// OutOfRange(i,j), DimensionMismatch (ragged or empty matrix).
Instance validate_instance(Matrix raw, Tightness tightness = Tightness::General);

/// Symbolic threshold, resolved against the number of projects.
struct ThresholdSpec {
  enum class Kind { One, Half, AllButC, All, Fixed };
  Kind kind = Kind::Half;
  int value = 0;  // c for AllButC, k for Fixed

  static ThresholdSpec one() { return {Kind::One, 0}; }
  static ThresholdSpec half() { return {Kind::Half, 0}; }
  static ThresholdSpec all_but(int c) { return {Kind::AllButC, c}; }
  static ThresholdSpec all() { return {Kind::All, 0}; }
  static ThresholdSpec fixed(int k) { return {Kind::Fixed, k}; }

  friend bool operator==(const ThresholdSpec&, const ThresholdSpec&) = default;
};

int resolve_tau(const ThresholdSpec& spec, int projects);

std::string to_string(const ThresholdSpec& spec);

/// A budget division: one non-negative share per project.
class Solution {
 public:
  Solution() = default;
  explicit Solution(std::vector<Rational> coords);

  int size() const { return static_cast<int>(coords_.size()); }
  const Rational& operator[](int j) const { return coords_[j]; }
  const std::vector<Rational>& coords() const { return coords_; }
  const Rational& total() const { return total_; }

  friend bool operator==(const Solution& a, const Solution& b) { return a.coords_ == b.coords_; }

 private:
  std::vector<Rational> coords_;
  Rational total_;
};

std::string to_string(const Solution& x);

struct AgentSatisfaction {
  std::vector<int> local_projects;  // 0-based, ascending
  bool satisfied = false;
};

struct SatisfactionReport {
  std::vector<AgentSatisfaction> per_agent;
  int satisfied_count = 0;
  Rational total_budget;
  int tau = 0;

  bool all_satisfied() const { return satisfied_count == static_cast<int>(per_agent.size()); }
};

SatisfactionReport satisfaction_report(const Solution& x, const Instance& inst, int tau);

/// Number of coordinates j with a[j] >= b[j].
int coverage_count(std::span<const Rational> a, std::span<const Rational> b);

/// a tau-covers b iff a[j] >= b[j] on at least tau coordinates.
bool tau_covers(std::span<const Rational> a, std::span<const Rational> b, int tau);

/// Snaps every coordinate down to the largest value of {0} u column(j) not
/// exceeding it. Never loses a satisfied agent, never increases the total.
Solution canonicalize(const Solution& x, const Instance& inst);

}  // namespace satdiv
