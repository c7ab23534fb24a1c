#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "satdiv/model.hpp"

namespace satdiv::solvers {

inline constexpr std::uint64_t kDefaultNodeLimit = 100'000'000;

struct SearchOptions {
  std::uint64_t node_limit = kDefaultNodeLimit;
  // When false, min_budget_exact searches even at tau = m instead of
  // returning the column maxima directly.
  bool closed_forms = true;
};

/// Per-project sorted distinct values {0} u {d[i][j] : i}. Every exact
/// search in this module ranges over this grid only.
struct CandidateGrid {
  std::vector<std::vector<Rational>> per_project;

  /// Product of column sizes, saturating at UINT64_MAX.
  std::uint64_t point_count() const;
};

CandidateGrid candidate_grid(const Instance& inst);

struct MaxSatResult {
  Solution solution;
  int satisfied = 0;
  std::uint64_t nodes = 0;
};

/// Exhaustive depth-first search over the candidate grid for a solution with
/// total <= budget satisfying the most agents at tau. Among optima the
/// lexicographically smallest coordinate vector is returned. Throws TooLarge
/// when the node limit is hit.
MaxSatResult max_satisfied_exact(const Instance& inst, int tau, const Rational& budget,
                                 const SearchOptions& options = {});

enum class Route { TauOne, TauAll, AllButOneTight, Exhaustive };
const char* to_string(Route route);

struct SatDecision {
  std::optional<Solution> witness;  // nullopt means NO
  Route route = Route::Exhaustive;
  std::uint64_t nodes = 0;

  bool yes() const { return witness.has_value(); }
};

/// Is there a solution with total <= budget satisfying every agent at tau?
/// Dispatches to the closed forms for tau = 1 and tau = m, to the branching
/// algorithm for tau = m-1 on tight instances at budget 1, and to exhaustive
/// grid search otherwise. Witnesses are fixed points of canonicalize.
SatDecision all_agents_sat(const Instance& inst, int tau, const Rational& budget = 1,
                           const SearchOptions& options = {});

/// Exhaustive feasibility search (no dispatch). Used directly as an oracle.
SatDecision all_agents_sat_exhaustive(const Instance& inst, int tau, const Rational& budget = 1,
                                      const SearchOptions& options = {});

/// x_j = 1/m. Satisfies every agent at tau = 1.
Solution solve_tau1(const Instance& inst);

/// Column maxima if they fit in the budget, NO otherwise.
std::optional<Solution> solve_tau_m(const Instance& inst, const Rational& budget = 1);

struct BranchStats {
  std::uint64_t calls = 0;
  int max_depth = 0;
};

/// Decides satisfiability at tau = m-1 for tight instances (every row sums to
/// exactly 1) within budget 1. Returns a solution dominating `base` or NO.
/// `base` defaults to the zero vector. Throws NotTight, DimensionMismatch,
/// BadParam (base over budget).
std::optional<Solution> solve_m_minus_1_tight(const Instance& inst,
                                              const std::optional<Solution>& base = std::nullopt,
                                              BranchStats* stats = nullptr);

struct DictatorResult {
  int agent = 0;  // 0-based
  Solution solution;
  int satisfied = 0;
};

/// The agent whose demand row tau-covers the most rows (ties: smallest index).
DictatorResult dictator(const Instance& inst, int tau);

struct MinBudgetResult {
  Rational budget;
  Solution solution;
  std::uint64_t nodes = 0;
};

/// Minimum total over candidate-grid solutions satisfying all agents at tau.
/// Same search order and tie-break as max_satisfied_exact; tau = m short-circuits
/// to the column maxima.
MinBudgetResult min_budget_exact(const Instance& inst, int tau, const SearchOptions& options = {});

struct DpTables {
  // z[j][k]: least value on project j locally satisfying at least k agents.
  std::vector<std::vector<Rational>> z;
  // cost[j][k]: least spend satisfying at least k pairs on projects 0..j;
  // nullopt once that exceeds the budget.
  std::vector<std::vector<std::optional<Rational>>> cost;
};

struct UtilitarianResult {
  Solution solution;
  int pair_count = 0;
  DpTables tables;
};

/// Maximises the number of locally satisfied (agent, project) pairs within
/// the budget by dynamic programming over projects.
UtilitarianResult utilitarian_dp(const Instance& inst, const Rational& budget = 1);

/// Number of pairs (i, j) with x_j >= d[i][j].
int utilitarian_value(const Solution& x, const Instance& inst);

}  // namespace satdiv::solvers
