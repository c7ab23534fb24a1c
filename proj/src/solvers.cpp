#include "satdiv/solvers.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "scaled.hpp"

namespace satdiv::solvers {

using satdiv::to_string;

using detail::ScaledInstance;
using Units = std::vector<std::int64_t>;

namespace {

void check_tau(const Instance& inst, int tau) {
  if (tau < 1 || tau > inst.projects())
    throw Error(ErrorKind::TauOutOfRange,
                "tau = " + std::to_string(tau) + " with " + std::to_string(inst.projects()) + " projects");
}

void check_budget(const Rational& budget) {
  if (budget < 0) throw Error(ErrorKind::BadParam, "budget " + to_string(budget) + " is negative");
}

// Spending beyond m never helps, and clamping keeps the unit range bounded.
Rational clamp_budget(const Rational& budget, int m) { return budget > m ? Rational(m) : budget; }

[[noreturn]] void node_limit_hit(std::uint64_t limit) {
  throw Error(ErrorKind::TooLarge, "search exceeded the node limit of " + std::to_string(limit));
}

std::int64_t sum_units(const Units& x) { return std::accumulate(x.begin(), x.end(), std::int64_t{0}); }

// Depth-first search over the grid, maximising satisfied agents. Agents of
// each column are pre-sorted by demand so raising a coordinate along the
// ascending candidate list satisfies a growing prefix of them.
class MaxSatSearch {
 public:
  MaxSatSearch(const ScaledInstance& s, int tau, std::int64_t budget, std::uint64_t limit, int incumbent)
      : s_(s), tau_(tau), budget_(budget), limit_(limit), grid_(detail::unit_grid(s)),
        order_(s.m), sats_(s.n, 0), x_(s.m, 0), best_count_(incumbent) {
    for (int j = 0; j < s.m; ++j) {
      auto& o = order_[j];
      o.resize(s.n);
      std::iota(o.begin(), o.end(), 0);
      std::stable_sort(o.begin(), o.end(), [&](int a, int b) { return s.at(a, j) < s.at(b, j); });
    }
  }

  void run() { dfs(0, 0); }

  bool found() const { return !best_.empty(); }
  const Units& best() const { return best_; }
  int best_count() const { return best_count_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  int upper_bound(int j, std::int64_t remaining) const {
    int count = 0;
    for (int i = 0; i < s_.n; ++i) {
      int reach = sats_[i];
      for (int k = j; k < s_.m && reach < tau_; ++k)
        if (s_.at(i, k) <= remaining) ++reach;
      if (reach >= tau_) ++count;
    }
    return count;
  }

  void dfs(int j, std::int64_t spent) {
    if (++nodes_ > limit_) node_limit_hit(limit_);
    if (j == s_.m) {
      int count = 0;
      for (int v : sats_)
        if (v >= tau_) ++count;
      if (count > best_count_) {
        best_count_ = count;
        best_ = x_;
      }
      return;
    }
    if (upper_bound(j, budget_ - spent) <= best_count_) return;

    const auto& order = order_[j];
    std::size_t covered = 0;
    for (std::int64_t v : grid_[j]) {
      if (spent + v > budget_) break;
      while (covered < order.size() && s_.at(order[covered], j) <= v) ++sats_[order[covered++]];
      x_[j] = v;
      dfs(j + 1, spent + v);
      if (best_count_ == s_.n) break;
    }
    for (std::size_t k = 0; k < covered; ++k) --sats_[order[k]];
    x_[j] = 0;
  }

  const ScaledInstance& s_;
  int tau_;
  std::int64_t budget_;
  std::uint64_t limit_;
  std::vector<Units> grid_;
  std::vector<std::vector<int>> order_;
  std::vector<int> sats_;
  Units x_;
  Units best_;
  int best_count_;
  std::uint64_t nodes_ = 0;
};

// Depth-first search for the cheapest solution satisfying everyone.
class MinBudgetSearch {
 public:
  MinBudgetSearch(const ScaledInstance& s, int tau, std::uint64_t limit)
      : s_(s), tau_(tau), limit_(limit), grid_(detail::unit_grid(s)), order_(s.m), sats_(s.n, 0),
        x_(s.m, 0) {
    for (int j = 0; j < s.m; ++j) {
      auto& o = order_[j];
      o.resize(s.n);
      std::iota(o.begin(), o.end(), 0);
      std::stable_sort(o.begin(), o.end(), [&](int a, int b) { return s.at(a, j) < s.at(b, j); });
    }
    // suffix_[i][j][t]: sum of the t smallest demands of agent i on projects j..m-1.
    suffix_.assign(s.n, std::vector<Units>(s.m + 1));
    for (int i = 0; i < s.n; ++i)
      for (int j = 0; j <= s.m; ++j) {
        Units vals;
        for (int k = j; k < s.m; ++k) vals.push_back(s.at(i, k));
        std::sort(vals.begin(), vals.end());
        Units pre(1, 0);
        for (auto v : vals) pre.push_back(pre.back() + v);
        suffix_[i][j] = std::move(pre);
      }
    best_ = grid_max();
    best_total_ = sum_units(best_);
  }

  void run() { dfs(0, 0); }

  const Units& best() const { return best_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  Units grid_max() const {
    Units x(s_.m);
    for (int j = 0; j < s_.m; ++j) x[j] = grid_[j].back();
    return x;
  }

  // Cheapest completion for the neediest agent, or -1 if someone cannot reach tau.
  std::int64_t lower_bound(int j) const {
    std::int64_t lb = 0;
    for (int i = 0; i < s_.n; ++i) {
      const int need = tau_ - sats_[i];
      if (need <= 0) continue;
      if (need > s_.m - j) return -1;
      lb = std::max(lb, suffix_[i][j][need]);
    }
    return lb;
  }

  bool beats(std::int64_t total) const { return found_ ? total < best_total_ : total <= best_total_; }

  void dfs(int j, std::int64_t spent) {
    if (++nodes_ > limit_) node_limit_hit(limit_);
    const std::int64_t lb = lower_bound(j);
    if (lb < 0 || !beats(spent + lb)) return;
    if (j == s_.m) {
      best_ = x_;
      best_total_ = spent;
      found_ = true;
      return;
    }
    const auto& order = order_[j];
    std::size_t covered = 0;
    for (std::int64_t v : grid_[j]) {
      if (!beats(spent + v)) break;
      while (covered < order.size() && s_.at(order[covered], j) <= v) ++sats_[order[covered++]];
      x_[j] = v;
      dfs(j + 1, spent + v);
    }
    for (std::size_t k = 0; k < covered; ++k) --sats_[order[k]];
    x_[j] = 0;
  }

  const ScaledInstance& s_;
  int tau_;
  std::uint64_t limit_;
  std::vector<Units> grid_;
  std::vector<std::vector<int>> order_;
  std::vector<std::vector<Units>> suffix_;
  std::vector<int> sats_;
  Units x_;
  Units best_;
  std::int64_t best_total_ = 0;
  bool found_ = false;
  std::uint64_t nodes_ = 0;
};

// Branching algorithm for tau = m-1 on tight rows with unit budget.
class AllButOneBranching {
 public:
  AllButOneBranching(const ScaledInstance& s, BranchStats* stats) : s_(s), stats_(stats) {}

  std::optional<Units> solve(Units x, int depth = 0) {
    if (stats_) {
      ++stats_->calls;
      stats_->max_depth = std::max(stats_->max_depth, depth);
    }
    const std::int64_t spent = sum_units(x);
    if (spent > s_.scale) return std::nullopt;
    const std::int64_t br = s_.scale - spent;

    // (a) agents still missing at least two projects
    std::vector<int> active;
    std::vector<std::vector<int>> unsat(s_.n);
    for (int i = 0; i < s_.n; ++i) {
      for (int j = 0; j < s_.m; ++j)
        if (s_.at(i, j) > x[j]) unsat[i].push_back(j);
      if (unsat[i].size() >= 2) active.push_back(i);
    }
    if (active.empty()) return x;

    // (b) nothing left within reach
    bool reachable = false;
    for (int i : active)
      for (int j : unsat[i])
        if (s_.at(i, j) <= x[j] + br) reachable = true;
    if (!reachable) return std::nullopt;

    auto residual = [&](int i, int j) { return s_.at(i, j) - x[j]; };

    // (c) good partition of some agent's unsatisfied projects
    for (int i : active) {
      auto js = unsat[i];
      std::stable_sort(js.begin(), js.end(), [&](int a, int b) { return residual(i, a) > residual(i, b); });
      std::vector<int> halves[2];
      std::int64_t sums[2] = {0, 0};
      for (std::size_t k = 0; k < js.size(); ++k) {
        halves[k % 2].push_back(js[k]);
        sums[k % 2] += residual(i, js[k]);
      }
      if (4 * sums[0] >= br && 4 * sums[1] >= br) {
        for (const auto& half : halves) {
          Units y = x;
          for (int j : half) y[j] = s_.at(i, j);
          if (auto r = solve(std::move(y), depth + 1)) return r;
        }
        return std::nullopt;
      }
    }

    // (d) every active agent has exactly one expensive project
    std::vector<int> expensive(s_.n, -1);
    for (int i : active) {
      for (int j : unsat[i])
        if (2 * residual(i, j) > br) {
          if (expensive[i] != -1) throw std::logic_error("two expensive projects for one agent");
          expensive[i] = j;
        }
      if (expensive[i] == -1) throw std::logic_error("no expensive project for an agent without a good partition");
    }
    auto satisfy_cheap = [&](Units& y, int i) {
      for (int j : unsat[i])
        if (j != expensive[i]) y[j] = std::max(y[j], s_.at(i, j));
    };

    // (i) only the non-expensive demands
    {
      Units y = x;
      for (int i : active) satisfy_cheap(y, i);
      if (sum_units(y) <= s_.scale) return y;
    }

    // (ii) pay for one expensive project
    std::vector<int> candidates;
    for (int i : active) candidates.push_back(expensive[i]);
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (int j : candidates) {
      Units y = x;
      int cheapest = -1;
      for (int i : active) {
        if (expensive[i] != j)
          satisfy_cheap(y, i);
        else if (cheapest == -1 || s_.at(i, j) < s_.at(cheapest, j))
          cheapest = i;
      }
      y[j] = std::max(y[j], s_.at(cheapest, j));
      if (sum_units(y) > s_.scale) continue;
      if (auto r = solve(std::move(y), depth + 1)) return r;
    }
    return std::nullopt;
  }

 private:
  const ScaledInstance& s_;
  BranchStats* stats_;
};

}  // namespace

std::uint64_t CandidateGrid::point_count() const {
  std::uint64_t count = 1;
  for (const auto& col : per_project) {
    if (count > std::numeric_limits<std::uint64_t>::max() / col.size())
      return std::numeric_limits<std::uint64_t>::max();
    count *= col.size();
  }
  return count;
}

CandidateGrid candidate_grid(const Instance& inst) {
  CandidateGrid grid;
  grid.per_project.resize(inst.projects());
  for (int j = 0; j < inst.projects(); ++j) {
    auto& col = grid.per_project[j];
    col.push_back(0);
    for (int i = 0; i < inst.agents(); ++i) col.push_back(inst.demand(i, j));
    std::sort(col.begin(), col.end());
    col.erase(std::unique(col.begin(), col.end()), col.end());
  }
  return grid;
}

MaxSatResult max_satisfied_exact(const Instance& inst, int tau, const Rational& budget,
                                 const SearchOptions& options) {
  check_tau(inst, tau);
  check_budget(budget);
  const Rational b = clamp_budget(budget, inst.projects());
  const Rational extras[] = {b};
  const auto s = detail::scale_instance(inst, extras);
  MaxSatSearch search(s, tau, s.to_units(b), options.node_limit, -1);
  search.run();
  return {s.to_solution(search.best()), search.best_count(), search.nodes()};
}

const char* to_string(Route route) {
  switch (route) {
    case Route::TauOne: return "tau-one";
    case Route::TauAll: return "tau-all";
    case Route::AllButOneTight: return "all-but-one-tight";
    case Route::Exhaustive: return "exhaustive";
  }
  return "?";
}

SatDecision all_agents_sat_exhaustive(const Instance& inst, int tau, const Rational& budget,
                                      const SearchOptions& options) {
  check_tau(inst, tau);
  check_budget(budget);
  const Rational b = clamp_budget(budget, inst.projects());
  const Rational extras[] = {b};
  const auto s = detail::scale_instance(inst, extras);
  // An incumbent of n-1 turns the maximisation into a feasibility search.
  MaxSatSearch search(s, tau, s.to_units(b), options.node_limit, inst.agents() - 1);
  search.run();
  SatDecision d;
  d.route = Route::Exhaustive;
  d.nodes = search.nodes();
  if (search.found()) d.witness = s.to_solution(search.best());
  return d;
}

SatDecision all_agents_sat(const Instance& inst, int tau, const Rational& budget, const SearchOptions& options) {
  check_tau(inst, tau);
  check_budget(budget);
  const int m = inst.projects();
  if (tau == 1 && budget >= 1) {
    SatDecision d;
    d.route = Route::TauOne;
    d.witness = canonicalize(solve_tau1(inst), inst);
    return d;
  }
  if (tau == m) {
    SatDecision d;
    d.route = Route::TauAll;
    d.witness = solve_tau_m(inst, budget);
    return d;
  }
  if (tau == m - 1 && budget == 1 && inst.rows_sum_to_one()) {
    SatDecision d;
    d.route = Route::AllButOneTight;
    BranchStats stats;
    d.witness = solve_m_minus_1_tight(inst, std::nullopt, &stats);
    d.nodes = stats.calls;
    return d;
  }
  return all_agents_sat_exhaustive(inst, tau, budget, options);
}

Solution solve_tau1(const Instance& inst) {
  const int m = inst.projects();
  return Solution(std::vector<Rational>(m, Rational(1, m)));
}

std::optional<Solution> solve_tau_m(const Instance& inst, const Rational& budget) {
  std::vector<Rational> x(inst.projects(), 0);
  for (int j = 0; j < inst.projects(); ++j)
    for (int i = 0; i < inst.agents(); ++i) x[j] = std::max(x[j], inst.demand(i, j));
  Solution sol(std::move(x));
  if (sol.total() > budget) return std::nullopt;
  return sol;
}

std::optional<Solution> solve_m_minus_1_tight(const Instance& inst, const std::optional<Solution>& base,
                                              BranchStats* stats) {
  for (int i = 0; i < inst.agents(); ++i) {
    Rational sum = 0;
    for (const auto& v : inst.row(i)) sum += v;
    if (sum != 1) throw Error(ErrorKind::NotTight, "row " + std::to_string(i + 1) + " sums to " + to_string(sum), i + 1);
  }
  const int m = inst.projects();
  std::vector<Rational> extras;
  if (base) {
    if (base->size() != m)
      throw Error(ErrorKind::DimensionMismatch, "base has " + std::to_string(base->size()) +
                                                    " coordinates, instance has " + std::to_string(m));
    if (base->total() > 1) throw Error(ErrorKind::BadParam, "base total " + to_string(base->total()) + " exceeds 1");
    const auto grid = candidate_grid(inst);
    for (int j = 0; j < m; ++j) {
      const auto& col = grid.per_project[j];
      if (!std::binary_search(col.begin(), col.end(), (*base)[j]))
        throw Error(ErrorKind::BadParam, "base coordinate " + std::to_string(j + 1) + " = " +
                                             to_string((*base)[j]) + " is not a demand value", 0, j + 1);
    }
  }
  const auto s = detail::scale_instance(inst, extras);
  Units x(m, 0);
  if (base)
    for (int j = 0; j < m; ++j) x[j] = s.to_units((*base)[j]);
  AllButOneBranching algo(s, stats);
  auto result = algo.solve(std::move(x));
  if (!result) return std::nullopt;
  return s.to_solution(*result);
}

DictatorResult dictator(const Instance& inst, int tau) {
  check_tau(inst, tau);
  DictatorResult best;
  best.satisfied = -1;
  for (int i = 0; i < inst.agents(); ++i) {
    int count = 0;
    for (int k = 0; k < inst.agents(); ++k)
      if (tau_covers(inst.row(i), inst.row(k), tau)) ++count;
    if (count > best.satisfied) {
      best.agent = i;
      best.satisfied = count;
    }
  }
  best.solution = Solution(inst.row(best.agent));
  return best;
}

MinBudgetResult min_budget_exact(const Instance& inst, int tau, const SearchOptions& options) {
  check_tau(inst, tau);
  if (tau == inst.projects() && options.closed_forms) {
    auto x = *solve_tau_m(inst, inst.projects());
    Rational total = x.total();
    return {total, std::move(x), 0};
  }
  const auto s = detail::scale_instance(inst);
  MinBudgetSearch search(s, tau, options.node_limit);
  search.run();
  auto x = s.to_solution(search.best());
  Rational total = x.total();
  return {total, std::move(x), search.nodes()};
}

UtilitarianResult utilitarian_dp(const Instance& inst, const Rational& budget) {
  check_budget(budget);
  const int n = inst.agents();
  const int m = inst.projects();
  UtilitarianResult out;
  auto& z = out.tables.z;
  z.resize(m);
  for (int j = 0; j < m; ++j) {
    std::vector<Rational> col;
    for (int i = 0; i < n; ++i) col.push_back(inst.demand(i, j));
    std::sort(col.begin(), col.end());
    z[j].push_back(0);
    z[j].insert(z[j].end(), col.begin(), col.end());
  }

  const int max_pairs = n * m;
  auto& cost = out.tables.cost;
  cost.assign(m, std::vector<std::optional<Rational>>(max_pairs + 1));
  std::vector<std::vector<int>> choice(m, std::vector<int>(max_pairs + 1, -1));
  for (int j = 0; j < m; ++j)
    for (int k = 0; k <= n * (j + 1); ++k)
      for (int b = 0; b <= std::min(k, n); ++b) {
        Rational c;
        if (j == 0) {
          if (b != k) continue;
          c = z[0][b];
        } else {
          const auto& prev = cost[j - 1][k - b];
          if (!prev) continue;
          c = *prev + z[j][b];
        }
        if (c > budget) continue;
        if (!cost[j][k] || c < *cost[j][k]) {
          cost[j][k] = c;
          choice[j][k] = b;
        }
      }

  int k = 0;
  for (int t = 0; t <= max_pairs; ++t)
    if (cost[m - 1][t]) k = t;
  std::vector<Rational> x(m, 0);
  for (int j = m - 1, left = k; j >= 0; --j) {
    const int b = choice[j][left];
    x[j] = z[j][b];
    left -= b;
  }
  out.solution = Solution(std::move(x));
  out.pair_count = utilitarian_value(out.solution, inst);
  return out;
}

int utilitarian_value(const Solution& x, const Instance& inst) {
  if (x.size() != inst.projects())
    throw Error(ErrorKind::DimensionMismatch, "solution has " + std::to_string(x.size()) +
                                                  " coordinates, instance has " +
                                                  std::to_string(inst.projects()) + " projects");
  int count = 0;
  for (int i = 0; i < inst.agents(); ++i)
    for (int j = 0; j < inst.projects(); ++j)
      if (x[j] >= inst.demand(i, j)) ++count;
  return count;
}

}  // namespace satdiv::solvers
