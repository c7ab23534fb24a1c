#include "doctest.h"

#include "oracle.hpp"
#include "satdiv/constructive.hpp"
#include "satdiv/families.hpp"
#include "satdiv/solvers.hpp"

using namespace satdiv;
using namespace satdiv::families;
using oracle::q;

namespace {

std::vector<Rational> qs(std::initializer_list<const char*> values) {
  std::vector<Rational> v;
  for (const char* s : values) v.push_back(q(s));
  return v;
}

void check_all_facts(const Family& f) {
  CAPTURE(f.name);
  CAPTURE(f.params.dump());
  for (const auto& fact : f.expected) {
    CAPTURE(to_string(fact.kind));
    const auto got = check_fact(fact, f.instance);
    CAPTURE(to_string(got.actual));
    CHECK(got.holds);
  }
}

Rational row_sum(const Row& r) { return oracle::sum(r); }

}  // namespace

TEST_CASE("fixtures hold the published matrices") {
  CHECK(fixture("instance1").demands() ==
        Matrix{qs({"0.5", "0.5", "0"}), qs({"0", "0.5", "0.5"}), qs({"0.6", "0.1", "0.3"}), qs({"0.3", "0.1", "0.6"})});
  CHECK(fixture("nocover_five").demands() ==
        Matrix{qs({"0.32", "0.32", "0.32", "0.02", "0.02"}), qs({"0.05", "0.05", "0.05", "0.425", "0.425"})});
  CHECK(fixture("mat1").demands() == Matrix{qs({"0.3", "0.33", "0.04", "0.16", "0.17"}),
                                            qs({"0.2", "0.18", "0.28", "0.32", "0.02"}),
                                            qs({"0", "0.19", "0.21", "0.31", "0.29"})});
  CHECK(fixture("nocover_four").agents() == 3);
  try {
    fixture("instance9");
    FAIL("unknown fixture accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownFixture);
  }
  for (const auto& name : fixture_names()) check_all_facts(fixture_family(name));
}

TEST_CASE("fixture facts against the enumeration oracle") {
  CHECK(oracle::max_satisfied(fixture("instance1"), 2, 1) == 3);
  CHECK(oracle::max_satisfied(fixture("nocover_four"), 3, 1) == 2);
  CHECK(oracle::max_satisfied(fixture("nocover_five"), 4, 1) == 1);
  CHECK(oracle::min_budget(fixture("instance1"), 1) == Rational(1, 10));
}

TEST_CASE("tight_dictator") {
  const auto f3 = tight_dictator(3);
  CHECK(f3.instance.row(0) == qs({"5/8", "1/4", "1/8"}));
  for (int m = 3; m <= 11; m += 2) {
    const auto f = tight_dictator(m);
    CHECK(f.instance.agents() == m);
    CHECK(f.instance.is_tight());
    for (int i = 0; i < m; ++i) CHECK(row_sum(f.instance.row(i)) == 1);
    CHECK(solvers::dictator(f.instance, (m + 1) / 2).satisfied == (m + 1) / 2);
    check_all_facts(f);
  }
  CHECK(solvers::dictator(tight_dictator(5).instance, 3).satisfied == 3);
  CHECK_THROWS_AS(tight_dictator(4), Error);
  CHECK_THROWS_AS(tight_dictator(1), Error);
}

TEST_CASE("half_upper_bound") {
  CHECK(solvers::max_satisfied_exact(half_upper_bound(qs({"1/10"})).instance, 2, 1).satisfied == 3);
  const auto f2 = half_upper_bound(qs({"1/20", "1/10"}));
  CHECK(solvers::max_satisfied_exact(f2.instance, 2, 1).satisfied == 5);
  CHECK(oracle::max_satisfied(f2.instance, 2, 1) == 5);
  for (int k = 1; k <= 3; ++k) {
    const auto f = half_upper_bound(default_deltas(k));
    CHECK(f.instance.agents() == 3 * k);
    for (int i = 0; i < f.instance.agents(); ++i) CHECK(row_sum(f.instance.row(i)) == 1);
    check_all_facts(f);
  }
  CHECK(default_deltas(2) == qs({"1/20", "1/10"}));
  CHECK_THROWS_AS(half_upper_bound(qs({"1/10", "1/20"})), Error);
  CHECK_THROWS_AS(half_upper_bound(qs({"1/6"})), Error);
  CHECK_THROWS_AS(half_upper_bound(qs({"0"})), Error);
}

TEST_CASE("cyclic_m_minus_1") {
  CHECK(solvers::max_satisfied_exact(cyclic_m_minus_1(5).instance, 4, 1).satisfied == 4);
  CHECK(oracle::max_satisfied(cyclic_m_minus_1(3).instance, 2, 1) ==
        solvers::max_satisfied_exact(cyclic_m_minus_1(3).instance, 2, 1).satisfied);
  const auto f4 = cyclic_m_minus_1(4);
  for (int i = 0; i < 4; ++i) CHECK(row_sum(f4.instance.row(i)) == 1);
  CHECK(f4.instance.row(3) == qs({"1/2", "0", "0", "1/2"}));
  for (int m = 3; m <= 7; ++m) {
    const auto f = cyclic_m_minus_1(m);
    check_all_facts(f);
    if (m <= 5) CHECK(oracle::max_satisfied(f.instance, m - 1, 1) == std::min(m, 4));
  }
  CHECK_THROWS_AS(cyclic_m_minus_1(2), Error);
}

TEST_CASE("half_min_budget") {
  const auto f = half_min_budget(4);
  CHECK(f.instance.agents() == 969);
  CHECK(f.instance.is_tight());
  const auto u = constructive::uniform_half_solution(4);
  CHECK(satisfaction_report(u, f.instance, 2).all_satisfied());
  CHECK(f.instance.row(0) == qs({"0", "0", "0", "1"}));
  CHECK(f.instance.row(968) == qs({"1", "0", "0", "0"}));
  CHECK_THROWS_AS(half_min_budget(3), Error);
  CHECK_THROWS_AS(half_min_budget(2), Error);
  try {
    half_min_budget(6);
    FAIL("m = 6 accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TooLarge);
  }
}

TEST_CASE("abo_min_budget: closed form against the oracle") {
  const auto f = abo_min_budget(3, Rational(1, 3));
  CHECK(solvers::min_budget_exact(f.instance, 2).budget == Rational(4, 3));
  CHECK(f.instance.agents() == 3 + 6);
  for (int m = 3; m <= 4; ++m)
    for (const char* e : {"1/3", "1/4", "1/10", "2/5"}) {
      const Rational eps = q(e);
      const auto g = abo_min_budget(m, eps);
      const Rational closed = std::min<Rational>(eps + Rational(m - 1, 2), (m - 1) * (1 - eps));
      CHECK(oracle::min_budget(g.instance, m - 1) == closed);
      check_all_facts(g);
      CHECK(satisfaction_report(constructive::half_each_solution(m), g.instance, m - 1).all_satisfied());
      for (int i = 0; i < g.instance.agents(); ++i) CHECK(row_sum(g.instance.row(i)) == 1);
    }
  CHECK_THROWS_AS(abo_min_budget(2, Rational(1, 3)), Error);
  CHECK_THROWS_AS(abo_min_budget(3, Rational(1, 2)), Error);
  CHECK_THROWS_AS(abo_min_budget(3, Rational(0)), Error);
}

TEST_CASE("two_distinct_tight") {
  const auto f = two_distinct_tight(2);
  CHECK(f.instance.is_tight());
  CHECK_FALSE(solvers::all_agents_sat(f.instance, 2).yes());
  CHECK(solvers::all_agents_sat(f.instance, 1).yes() == (oracle::max_satisfied(f.instance, 1, 1) == 2));
  for (int m = 2; m <= 6; ++m) check_all_facts(two_distinct_tight(m));
  CHECK_THROWS_AS(two_distinct_tight(1), Error);
}

TEST_CASE("builtin names") {
  for (const auto& name : builtin_examples()) {
    CAPTURE(name);
    const auto f = builtin(name);
    REQUIRE(f);
    check_all_facts(*f);
  }
  CHECK(builtin("abo_m4_eps1-4")->instance.projects() == 4);
  CHECK_FALSE(builtin("nothing"));
  CHECK_THROWS_AS(builtin("abo_m3_eps1-0"), Error);
}

TEST_CASE("metadata lists params and facts") {
  const auto meta = metadata(tight_dictator(5));
  CHECK(meta["name"] == "tight-dictator");
  CHECK(meta["params"]["m"] == 5);
  CHECK(meta["expected"][0]["kind"] == "dictator_count");
  CHECK(meta["expected"][0]["value"] == "3");
}
