#include "doctest.h"

#include <functional>

#include "oracle.hpp"
#include "satdiv/reductions.hpp"
#include "satdiv/solvers.hpp"

using namespace satdiv;
using namespace satdiv::reductions;

namespace {

Graph single_edge() { return make_graph(2, {{1, 2}}); }

bool vc_at_most(const ReductionOutput& r) {
  const int m = r.instance.projects();
  return solvers::all_agents_sat(r.instance, resolve_tau(r.tau, m), r.target_budget).yes();
}

// Independent recursive vertex cover: branch on the endpoints of the first uncovered edge.
int vc_by_branching(const Graph& g) {
  std::function<int(std::vector<bool>&, int)> go = [&](std::vector<bool>& in, int budget) -> int {
    for (const auto& [u, v] : g.edges)
      if (!in[u] && !in[v]) {
        if (budget == 0) return 1 << 20;
        int best = 1 << 20;
        for (int w : {u, v}) {
          in[w] = true;
          best = std::min(best, 1 + go(in, budget - 1));
          in[w] = false;
        }
        return best;
      }
    return 0;
  };
  std::vector<bool> in(g.vertices + 1, false);
  return go(in, g.vertices);
}

Rational row_sum(const Row& r) { return oracle::sum(r); }

}  // namespace

TEST_CASE("graph parsing and validation") {
  const auto g = parse_graph("3 3\n1 2\n2 3\n3 1\n");
  CHECK(g.vertices == 3);
  CHECK(g.edges.size() == 3);
  CHECK(g.edges[2] == std::pair<int, int>{1, 3});
  CHECK(parse_graph(format_graph(g)).edges == g.edges);

  for (const char* bad : {"", "3", "2 1\n1 1\n", "2 2\n1 2\n2 1\n", "2 1\n1 3\n", "2 1\n1 2\n7", "2 2\n1 2\n"}) {
    CAPTURE(bad);
    try {
      parse_graph(bad);
      FAIL("accepted a bad graph");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ParseError);
    }
  }
  CHECK_THROWS_AS(make_graph(2, {{1, 1}}), Error);
}

TEST_CASE("brute-force graph oracles") {
  CHECK(brute_force_vc(complete_graph(3)) == 2);
  CHECK(brute_force_is(complete_graph(3)) == 1);
  CHECK(brute_force_vc(cycle_graph(5)) == 3);
  CHECK(brute_force_is(cycle_graph(5)) == 2);
  CHECK(brute_force_vc(cycle_graph(6)) == 3);
  CHECK(brute_force_is(cycle_graph(6)) == 3);
  CHECK(brute_force_vc(star_graph(4)) == 1);
  CHECK_THROWS_AS(brute_force_vc(path_graph(21)), Error);
  try {
    brute_force_is(path_graph(21));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TooLarge);
  }
}

TEST_CASE("graph corpus: counts, Gallai identity, independent VC") {
  const auto corpus = connected_graphs(6);
  CHECK(corpus.size() == 1 + 2 + 6 + 21 + 112);
  for (const auto& g : corpus) {
    CHECK(is_connected(g));
    CHECK(brute_force_vc(g) + brute_force_is(g) == g.vertices);
    CHECK(brute_force_vc(g) == vc_by_branching(g));
  }
  CHECK(named_graphs().size() == 5);
  CHECK_FALSE(is_connected(make_graph(3, {{1, 2}})));
}

TEST_CASE("vc_to_allsat_m_minus_1") {
  CHECK(vc_at_most(vc_to_allsat_m_minus_1(complete_graph(3), 2)));
  CHECK_FALSE(vc_at_most(vc_to_allsat_m_minus_1(cycle_graph(5), 2)));
  CHECK(vc_at_most(vc_to_allsat_m_minus_1(single_edge(), 2)));
  const auto r = vc_to_allsat_m_minus_1(complete_graph(3), 2);
  CHECK(r.instance.agents() == 3);
  CHECK(r.instance.projects() == 3);
  CHECK(r.tau == ThresholdSpec::all_but(1));
  CHECK_FALSE(r.instance.is_tight());
  CHECK(r.mapping["agents"].size() == 3);
  CHECK_THROWS_AS(vc_to_allsat_m_minus_1(complete_graph(3), 1), Error);
  try {
    vc_to_allsat_m_minus_1(make_graph(3, {}), 2);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::EmptyGraph);
  }
}

TEST_CASE("vc_to_allsat_m_minus_c") {
  const auto r = vc_to_allsat_m_minus_c(complete_graph(3), 2, 2);
  CHECK(r.instance.agents() == 6);
  CHECK(r.mapping["padded_graph"]["vertices"] == 9);
  CHECK(r.instance.projects() == 15);
  CHECK(r.instance.is_tight());
  CHECK(resolve_tau(r.tau, 15) == 13);
  CHECK(vc_at_most(r));
  CHECK(oracle::max_satisfied(r.instance, 13, 1) == 6);

  const auto none = vc_to_allsat_m_minus_c(complete_graph(3), 0, 2);
  CHECK_FALSE(vc_at_most(none));
  CHECK(oracle::max_satisfied(none.instance, 13, 1) < 6);

  const auto c3 = vc_to_allsat_m_minus_c(single_edge(), 1, 3);
  for (int i = 0; i < c3.instance.agents(); ++i) CHECK(row_sum(c3.instance.row(i)) == 1);
  CHECK(vc_at_most(c3));
  CHECK_THROWS_AS(vc_to_allsat_m_minus_c(single_edge(), 1, 1), Error);
}

TEST_CASE("is_to_minbudget_half") {
  const auto r = is_to_minbudget_half(cycle_graph(6), 2);
  CHECK(r.instance.agents() == 6);
  CHECK(r.instance.projects() == 6);
  CHECK(r.target_budget == Rational(1, 2));
  CHECK(vc_at_most(r));
  CHECK(solvers::min_budget_exact(r.instance, 3).budget <= Rational(1, 2));
  for (int i = 0; i < r.instance.agents(); ++i) CHECK(row_sum(r.instance.row(i)) == 1);

  const auto k4 = is_to_minbudget_half(complete_graph(4), 2);
  CHECK(k4.mapping["padded_graph"]["vertices"] >= 6);
  CHECK_FALSE(vc_at_most(k4));
  CHECK_THROWS_AS(is_to_minbudget_half(complete_graph(4), 0), Error);
}

TEST_CASE("vc_to_minbudget_m_minus_1") {
  auto budget = [](const Graph& g) {
    const auto r = vc_to_minbudget_m_minus_1(g);
    return solvers::min_budget_exact(r.instance, resolve_tau(r.tau, g.vertices)).budget;
  };
  CHECK(budget(complete_graph(3)) == 1);
  CHECK(budget(star_graph(4)) == Rational(1, 2));
  CHECK(budget(single_edge()) == Rational(1, 2));
  for (const auto& g : connected_graphs(5)) {
    const auto r = vc_to_minbudget_m_minus_1(g);
    CHECK(oracle::min_budget(r.instance, g.vertices - 1) == Rational(brute_force_vc(g), 2));
  }
}

TEST_CASE("vc_to_minbudget_tau1") {
  const auto r = vc_to_minbudget_tau1(complete_graph(3), 2);
  CHECK(r.target_budget == Rational(2, 9));
  CHECK(r.instance.is_tight());
  CHECK(vc_at_most(r));
  CHECK(solvers::min_budget_exact(r.instance, 1).budget == Rational(2, 9));
  CHECK(oracle::min_budget(r.instance, 1) == Rational(2, 9));
  CHECK_FALSE(vc_at_most(vc_to_minbudget_tau1(complete_graph(3), 1)));
  for (int i = 0; i < r.instance.agents(); ++i) CHECK(row_sum(r.instance.row(i)) == 1);
  CHECK_THROWS_AS(vc_to_minbudget_tau1(single_edge(), 1), Error);
  CHECK_THROWS_AS(vc_to_minbudget_tau1(complete_graph(3), 7), Error);
}

TEST_CASE("property: reductions agree with the graph oracles on small graphs") {
  for (const auto& g : connected_graphs(5)) {
    const int vc = brute_force_vc(g), is = brute_force_is(g);
    for (int k = 2; k <= g.vertices; ++k) CHECK(vc_at_most(vc_to_allsat_m_minus_1(g, k)) == (vc <= k));
    for (int k = 1; k <= g.vertices; ++k) CHECK(vc_at_most(is_to_minbudget_half(g, k)) == (is >= k));
    if (g.vertices >= 3)
      for (int k = 1; k * (g.vertices - 2) < g.vertices * g.vertices - 2 && k <= g.vertices; ++k)
        CHECK(vc_at_most(vc_to_minbudget_tau1(g, k)) == (vc <= k));
  }
}

TEST_CASE("reduction names") {
  CHECK(reduction_names().size() == 5);
}
