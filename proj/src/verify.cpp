#include "satdiv/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include "satdiv/constructive.hpp"
#include "satdiv/families.hpp"
#include "satdiv/reductions.hpp"
#include "satdiv/solvers.hpp"

namespace satdiv::verify {

using satdiv::to_string;

namespace {

namespace fam = satdiv::families;
namespace red = satdiv::reductions;
namespace con = satdiv::constructive;
using solvers::SearchOptions;

// Engine output is fixed by the standard; reduction to a range is done by hand
// so every platform draws the same instances.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  int uniform(int lo, int hi) { return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1)); }
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(uniform(0, static_cast<int>(v.size()) - 1))];
  }

 private:
  std::mt19937_64 engine_;
};

const std::vector<int> kDenominators{2, 3, 4, 5, 6, 8, 10, 12, 20};

// Uniform composition of `den` units into `parts` non-negative parts.
std::vector<int> composition(Rng& rng, int den, int parts) {
  std::vector<int> slots(den + parts - 1);
  for (std::size_t t = 0; t < slots.size(); ++t) slots[t] = static_cast<int>(t);
  for (int t = 0; t < parts - 1; ++t) std::swap(slots[t], slots[rng.uniform(t, static_cast<int>(slots.size()) - 1)]);
  std::vector<int> bars(slots.begin(), slots.begin() + (parts - 1));
  std::sort(bars.begin(), bars.end());
  std::vector<int> out;
  int prev = -1;
  for (int b : bars) {
    out.push_back(b - prev - 1);
    prev = b;
  }
  out.push_back(static_cast<int>(slots.size()) - prev - 1);
  return out;
}

Instance random_instance(Rng& rng, int n, int m, bool tight) {
  const int den = rng.pick(kDenominators);
  Matrix rows;
  for (int i = 0; i < n; ++i) {
    auto parts = composition(rng, den, tight ? m : m + 1);
    Row r;
    for (int j = 0; j < m; ++j) r.emplace_back(parts[j], den);
    rows.push_back(std::move(r));
  }
  return validate_instance(std::move(rows), tight ? Tightness::Tight : Tightness::General);
}

bool satisfies_all(const Solution& x, const Instance& inst, int tau) {
  return satisfaction_report(x, inst, tau).all_satisfied();
}

bool feasible_and_satisfies(const Solution& x, const Instance& inst, int tau) {
  return x.total() <= 1 && satisfies_all(x, inst, tau);
}

std::string describe(const Instance& inst) {
  std::ostringstream out;
  out << "[";
  for (int i = 0; i < inst.agents(); ++i) {
    if (i) out << "; ";
    for (int j = 0; j < inst.projects(); ++j) out << (j ? " " : "") << to_string(inst.demand(i, j));
  }
  return out.str() + "]";
}

// Collects the first failure; later checks still run but do not overwrite it.
struct Tally {
  int checked = 0;
  int failed = 0;
  std::string first_failure;

  void check(bool ok, const std::string& what) {
    ++checked;
    if (!ok && failed++ == 0) first_failure = what;
  }
  Outcome outcome(const std::string& expected) const {
    std::string actual = std::to_string(checked - failed) + "/" + std::to_string(checked) + " checks passed";
    if (failed) actual += "; first failure: " + first_failure;
    return {failed == 0, expected, actual};
  }
};

// A constructive answer for the cells where all agents can always be satisfied.
Solution cell_solver(const Instance& inst, int tau) {
  const int n = inst.agents(), m = inst.projects();
  if (tau == 1) return solvers::solve_tau1(inst);
  if (n == 1) return Solution(inst.row(0));
  if (n == 2 && m == 4 && tau == 3) return con::two_agent_four_solve(inst);
  if (n == 2) return solvers::dictator(inst, tau).solution;
  return con::three_agent_half_solve(inst).solution;
}

// Exhaustive maximum of f_util over the candidate grid within budget 1.
int exhaustive_util(const Instance& inst) {
  const auto grid = solvers::candidate_grid(inst);
  const int m = inst.projects();
  std::vector<std::size_t> idx(m, 0);
  int best = 0;
  while (true) {
    Rational total = 0;
    for (int j = 0; j < m; ++j) total += grid.per_project[j][idx[j]];
    if (total <= 1) {
      int count = 0;
      for (int j = 0; j < m; ++j)
        for (int i = 0; i < inst.agents(); ++i)
          if (grid.per_project[j][idx[j]] >= inst.demand(i, j)) ++count;
      best = std::max(best, count);
    }
    int j = 0;
    while (j < m && ++idx[j] == grid.per_project[j].size()) idx[j++] = 0;
    if (j == m) break;
  }
  return best;
}

Outcome c1_instance1(const VerifyOptions&) {
  const auto inst = fam::fixture("instance1");
  const bool sat = solvers::all_agents_sat(inst, 2).yes();
  const int best = solvers::max_satisfied_exact(inst, 2, 1).satisfied;
  return {!sat && best == 3, "all_agents_sat = NO, max satisfied = 3",
          std::string("all_agents_sat = ") + (sat ? "YES" : "NO") + ", max satisfied = " + std::to_string(best)};
}

Outcome c2_dictator_tight(const VerifyOptions&) {
  Tally t;
  std::string actual;
  for (int m : {3, 5, 7}) {
    const int half = (m + 1) / 2;
    const int count = solvers::dictator(fam::tight_dictator(m).instance, half).satisfied;
    t.check(count == half, "m=" + std::to_string(m) + " count " + std::to_string(count));
    actual += (actual.empty() ? "" : ", ") + std::string("m=") + std::to_string(m) + ": " + std::to_string(count);
  }
  auto o = t.outcome("m=3: 2, m=5: 3, m=7: 4");
  o.actual = actual;
  return o;
}

Outcome c3_dictator_guarantee(const VerifyOptions& opt) {
  Rng rng(opt.seed + 3);
  Tally t;
  for (int trial = 0; trial < 500; ++trial) {
    const int n = rng.uniform(1, 7), m = rng.uniform(1, 7);
    const auto inst = random_instance(rng, n, m, true);
    const int tau = (m + 1) / 2;
    const auto d = solvers::dictator(inst, tau);
    const bool ok = d.satisfied >= (n + 2) / 2 && d.satisfied == satisfaction_report(d.solution, inst, tau).satisfied_count;
    t.check(ok, describe(inst));
  }
  return t.outcome("dictator count >= ceil((n+1)/2) on 500 random tight instances");
}

Outcome c4_upper_bound(const VerifyOptions&) {
  Tally t;
  std::string actual;
  for (int k : {1, 2, 3}) {
    const auto family = fam::half_upper_bound(fam::default_deltas(k));
    const int best = solvers::max_satisfied_exact(family.instance, 2, 1).satisfied;
    t.check(best == 2 * k + 1, "k=" + std::to_string(k));
    actual += (actual.empty() ? "" : ", ") + std::string("k=") + std::to_string(k) + ": " + std::to_string(best);
  }
  auto o = t.outcome("k=1: 3, k=2: 5, k=3: 7");
  o.actual = actual;
  return o;
}

Outcome c5_three_agents(const VerifyOptions& opt) {
  Rng rng(opt.seed + 5);
  Tally t;
  int reshuffled = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int m = rng.uniform(3, 9);
    const auto inst = random_instance(rng, 3, m, trial % 2 == 0);
    const auto r = con::three_agent_half_solve(inst);
    bool ok = feasible_and_satisfies(r.solution, inst, (m + 1) / 2);
    if (r.state) {
      ++reshuffled;
      ok = ok && con::reshuffle_verify(*r.state);
    }
    t.check(ok, describe(inst));
  }
  const auto mat1 = fam::fixture("mat1");
  const auto r = con::three_agent_half_solve(mat1);
  t.check(feasible_and_satisfies(r.solution, mat1, 3) && r.state && con::reshuffle_verify(*r.state), "mat1 returned line");
  const Solution reference_line({parse_rational("0.2"), parse_rational("0.19"), parse_rational("0.04"),
                             parse_rational("0.16"), parse_rational("0.29")});
  t.check(feasible_and_satisfies(reference_line, mat1, 3) && reference_line.total() == parse_rational("0.88"),
          "mat1 reference line (0.2, 0.19, 0.04, 0.16, 0.29)");
  auto o = t.outcome("1000 random 3-agent instances solved within budget 1; both mat1 lines verify");
  o.actual += "; " + std::to_string(reshuffled) + " used the reshuffle; mat1 line " + to_string(r.solution);
  return o;
}

Outcome c6_tables(const VerifyOptions& opt) {
  Rng rng(opt.seed + 6);
  Tally t;
  struct Cell {
    int n, m;
    bool half;  // tau = ceil(m/2) when true, m-1 otherwise
  };
  std::vector<Cell> cells;
  for (int n : {1, 2, 3, 4, 6}) cells.push_back({n, 2, true});
  for (int n : {1, 2, 3})
    for (int m : {3, 4, 5, 6, 7}) cells.push_back({n, m, true});
  for (int n : {2, 3, 4}) cells.push_back({n, 2, false});
  cells.push_back({2, 3, false});
  cells.push_back({3, 3, false});
  cells.push_back({2, 4, false});
  for (const auto& cell : cells) {
    const int tau = cell.half ? (cell.m + 1) / 2 : cell.m - 1;
    for (int trial = 0; trial < 200; ++trial) {
      const auto inst = random_instance(rng, cell.n, cell.m, trial % 2 == 0);
      t.check(feasible_and_satisfies(cell_solver(inst, tau), inst, tau),
              "cell n=" + std::to_string(cell.n) + " m=" + std::to_string(cell.m) + " " + describe(inst));
    }
  }
  const std::vector<std::pair<std::string, int>> crosses{{"instance1", 2}, {"nocover_four", 3}, {"nocover_five", 4}};
  for (const auto& [name, tau] : crosses)
    t.check(!solvers::all_agents_sat(fam::fixture(name), tau).yes(), name + " should be NO");
  return t.outcome(std::to_string(cells.size()) + " satisfiable cells x 200 instances; 3 counterexamples NO");
}

Outcome c7_pseudopoly(const VerifyOptions& opt) {
  Rng rng(opt.seed + 7);
  Tally t;
  int yes = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const int n = rng.uniform(1, 5), m = rng.uniform(2, 6);
    const auto inst = random_instance(rng, n, m, true);
    const auto fast = solvers::solve_m_minus_1_tight(inst);
    const auto slow = solvers::all_agents_sat_exhaustive(inst, m - 1, 1);
    bool ok = fast.has_value() == slow.yes();
    if (fast) {
      ++yes;
      ok = ok && feasible_and_satisfies(*fast, inst, m - 1);
    }
    t.check(ok, describe(inst));
  }
  t.check(!solvers::solve_m_minus_1_tight(fam::fixture("nocover_four")), "nocover_four should be NO");
  t.check(!solvers::solve_m_minus_1_tight(fam::fixture("nocover_five")), "nocover_five should be NO");
  auto o = t.outcome("branching algorithm agrees with exhaustive search on 500 tight instances");
  o.actual += "; " + std::to_string(yes) + " YES answers";
  return o;
}

Outcome c8_utilitarian(const VerifyOptions& opt) {
  Rng rng(opt.seed + 8);
  Tally t;
  int trials = 0;
  while (trials < 500) {
    const int n = rng.uniform(1, 6), m = rng.uniform(1, 6);
    const auto inst = random_instance(rng, n, m, rng.uniform(0, 1) == 1);
    if (solvers::candidate_grid(inst).point_count() > 100000) continue;
    ++trials;
    const auto dp = solvers::utilitarian_dp(inst, 1);
    t.check(dp.pair_count == exhaustive_util(inst) && dp.solution.total() <= 1, describe(inst));
  }
  const int inst1 = solvers::utilitarian_dp(fam::fixture("instance1"), 1).pair_count;
  t.check(inst1 == 8, "instance1 pair count " + std::to_string(inst1));
  auto o = t.outcome("DP optimum equals exhaustive optimum on 500 instances; instance1 = 8");
  o.actual += "; instance1 = " + std::to_string(inst1);
  return o;
}

Outcome c9_min_budget(const VerifyOptions& opt) {
  Rng rng(opt.seed + 9);
  Tally t;
  const auto abo = fam::abo_min_budget(3, Rational(1, 3));
  const Rational abo_value = solvers::min_budget_exact(abo.instance, 2).budget;
  t.check(abo_value == Rational(4, 3), "abo m=3 eps=1/3 gave " + to_string(abo_value));

  std::vector<Instance> pool;
  for (const auto& name : fam::fixture_names()) pool.push_back(fam::fixture(name));
  pool.push_back(abo.instance);
  pool.push_back(fam::cyclic_m_minus_1(5).instance);
  pool.push_back(fam::tight_dictator(5).instance);
  for (int trial = 0; trial < 300; ++trial)
    pool.push_back(random_instance(rng, rng.uniform(1, 8), rng.uniform(1, 8), trial % 2 == 0));
  for (const auto& inst : pool) {
    const int m = inst.projects();
    t.check(satisfies_all(con::uniform_half_solution(m), inst, (m + 1) / 2), "uniform 2/m on " + describe(inst));
    if (m >= 2) t.check(satisfies_all(con::half_each_solution(m), inst, m - 1), "1/2 each on " + describe(inst));
  }

  const auto big = fam::half_min_budget(4);
  const auto mb = solvers::min_budget_exact(big.instance, 2);
  t.check(mb.budget > Rational(1, 2) && satisfies_all(mb.solution, big.instance, 2),
          "m=4 composition family gave " + to_string(mb.budget));

  SearchOptions search;
  search.closed_forms = false;
  for (int trial = 0; trial < 100; ++trial) {
    const auto inst = random_instance(rng, rng.uniform(1, 5), rng.uniform(1, 5), trial % 2 == 0);
    Rational sum = 0;
    for (int j = 0; j < inst.projects(); ++j) {
      Rational col = 0;
      for (int i = 0; i < inst.agents(); ++i) col = std::max(col, inst.demand(i, j));
      sum += col;
    }
    const auto searched = solvers::min_budget_exact(inst, inst.projects(), search).budget;
    t.check(searched == sum && solvers::min_budget_exact(inst, inst.projects()).budget == sum, describe(inst));
  }
  auto o = t.outcome("abo = 4/3; closed-form solutions satisfy all; composition family > 1/2; tau=m search = column maxima");
  o.actual += "; abo = " + to_string(abo_value) + ", composition family = " + to_string(mb.budget);
  return o;
}

Outcome c10_reductions(const VerifyOptions&) {
  Tally t;
  auto graphs = red::connected_graphs(6);
  for (const auto& ng : red::named_graphs()) graphs.push_back(ng.graph);
  SearchOptions options;
  for (const auto& g : graphs) {
    const int vc = red::brute_force_vc(g);
    const int is = red::brute_force_is(g);
    const std::string tag = red::format_graph(g);
    t.check(vc + is == g.vertices, "Gallai identity on " + tag);
    for (int k = 2; k <= g.vertices; ++k) {
      const auto r = red::vc_to_allsat_m_minus_1(g, k);
      const int tau = resolve_tau(r.tau, r.instance.projects());
      t.check(solvers::all_agents_sat_exhaustive(r.instance, tau, r.target_budget, options).yes() == (vc <= k),
              "vc-allsat-m1 k=" + std::to_string(k) + " on " + tag);
    }
    for (int k = 1; k <= g.vertices; ++k) {
      const auto r = red::is_to_minbudget_half(g, k);
      const int tau = resolve_tau(r.tau, r.instance.projects());
      t.check(solvers::all_agents_sat_exhaustive(r.instance, tau, r.target_budget, options).yes() == (is >= k),
              "is-minbudget-half k=" + std::to_string(k) + " on " + tag);
    }
    {
      const auto r = red::vc_to_minbudget_m_minus_1(g);
      const int tau = resolve_tau(r.tau, r.instance.projects());
      t.check(solvers::min_budget_exact(r.instance, tau, options).budget == Rational(vc, 2),
              "vc-minbudget-m1 on " + tag);
    }
    if (g.vertices >= 3) {
      const int m = g.vertices;
      const auto best = solvers::min_budget_exact(red::vc_to_minbudget_tau1(g, 1).instance, 1, options).budget;
      for (int k = 1; static_cast<long long>(k) * (m - 2) < m * m - 2 && k <= m; ++k) {
        const auto r = red::vc_to_minbudget_tau1(g, k);
        t.check((best <= r.target_budget) == (vc <= k), "vc-minbudget-tau1 k=" + std::to_string(k) + " on " + tag);
      }
    }
  }
  for (const auto& ng : red::named_graphs()) {
    const int vc = red::brute_force_vc(ng.graph);
    for (int k : {vc - 1, vc}) {
      const auto r = red::vc_to_allsat_m_minus_c(ng.graph, k, 2);
      const int tau = resolve_tau(r.tau, r.instance.projects());
      t.check(solvers::all_agents_sat_exhaustive(r.instance, tau, 1, options).yes() == (vc <= k),
              "vc-allsat-mc k=" + std::to_string(k) + " on " + ng.name);
    }
  }
  auto o = t.outcome("graph-side and budget-side answers agree for all five reductions");
  o.actual += " over " + std::to_string(graphs.size()) + " graphs";
  return o;
}

Outcome c11_tau_extremes(const VerifyOptions& opt) {
  Rng rng(opt.seed + 11);
  Tally t;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto inst = random_instance(rng, rng.uniform(1, 8), rng.uniform(1, 8), trial % 2 == 0);
    const auto x = solvers::solve_tau1(inst);
    t.check(x.total() == 1 && satisfies_all(x, inst, 1), "tau=1 on " + describe(inst));
  }
  for (int trial = 0; trial < 1000; ++trial) {
    const auto inst = random_instance(rng, rng.uniform(1, 4), rng.uniform(1, 6), trial % 3 == 0);
    Rational sum = 0;
    for (int j = 0; j < inst.projects(); ++j) {
      Rational col = 0;
      for (int i = 0; i < inst.agents(); ++i) col = std::max(col, inst.demand(i, j));
      sum += col;
    }
    const auto x = solvers::solve_tau_m(inst, 1);
    bool ok = x.has_value() == (sum <= 1);
    if (x) ok = ok && satisfies_all(*x, inst, inst.projects());
    t.check(ok, "tau=m on " + describe(inst));
  }
  return t.outcome("uniform 1/m satisfies all at tau=1; column-maxima test decides tau=m");
}

Outcome c12_cyclic(const VerifyOptions&) {
  Tally t;
  std::string actual;
  for (int m : {5, 6, 7}) {
    const int best = solvers::max_satisfied_exact(fam::cyclic_m_minus_1(m).instance, m - 1, 1).satisfied;
    t.check(best <= 4, "m=" + std::to_string(m));
    actual += (actual.empty() ? "" : ", ") + std::string("m=") + std::to_string(m) + ": " + std::to_string(best);
  }
  auto o = t.outcome("max satisfied <= 4 for m = 5, 6, 7");
  o.actual = actual;
  return o;
}

}  // namespace

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {"C1", "tables", "instance1 cannot satisfy everyone at tau=2", 1, c1_instance1},
      {"C2", "bounds", "dictator count on the tight family is (m+1)/2", 1, c2_dictator_tight},
      {"C3", "bounds", "dictator guarantee on random tight instances", 30, c3_dictator_guarantee},
      {"C4", "bounds", "upper-bound family: at most 2k+1 satisfied", 60, c4_upper_bound},
      {"C5", "algorithms", "three-agent construction", 60, c5_three_agents},
      {"C6", "tables", "satisfiability tables, positive and negative cells", 60, c6_tables},
      {"C7", "algorithms", "all-but-one branching equals exhaustive search", 120, c7_pseudopoly},
      {"C8", "algorithms", "utilitarian DP equals exhaustive search", 60, c8_utilitarian},
      {"C9", "bounds", "minimum-budget bounds", 600, c9_min_budget},
      {"C10", "reductions", "reduction round trips", 600, c10_reductions},
      {"C11", "algorithms", "tau = 1 and tau = m closed forms", 30, c11_tau_extremes},
      {"C12", "bounds", "cyclic family satisfies at most 4 agents", 1, c12_cyclic},
  };
  return all;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"tables", "bounds", "algorithms", "reductions", "all"};
  return names;
}

CriterionResult run_criterion(const Criterion& c, const VerifyOptions& options) {
  CriterionResult r{c.id, c.suite, c.title, {}, 0, c.time_limit_seconds};
  const auto start = std::chrono::steady_clock::now();
  try {
    r.outcome = c.run(options);
  } catch (const std::exception& e) {
    r.outcome = {false, "no exception", std::string("exception: ") + e.what()};
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CriterionResult> run_suite(std::string_view suite, const VerifyOptions& options) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end())
    throw Error(ErrorKind::BadParam, "unknown suite '" + std::string(suite) + "'");
  std::vector<CriterionResult> out;
  for (const auto& c : criteria())
    if (suite == "all" || c.suite == suite) out.push_back(run_criterion(c, options));
  return out;
}

}  // namespace satdiv::verify
