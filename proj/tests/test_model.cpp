#include "doctest.h"

#include "oracle.hpp"
#include "satdiv/families.hpp"
#include "satdiv/io.hpp"
#include "satdiv/model.hpp"

using namespace satdiv;
using oracle::q;

namespace {

Instance instance1() { return families::fixture("instance1"); }

Solution sol(std::initializer_list<const char*> values) {
  std::vector<Rational> v;
  for (const char* s : values) v.push_back(q(s));
  return Solution(std::move(v));
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an exception");
  return ErrorKind::BadParam;
}

}  // namespace

TEST_CASE("rational parsing is exact") {
  CHECK(parse_rational("0.425") == Rational(17, 40));
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational(".5") == Rational(1, 2));
  CHECK(parse_rational("-2") == Rational(-2));
  CHECK(parse_rational(" 7 ") == Rational(7));
  CHECK(to_string(Rational(6, 4)) == "3/2");
  CHECK(to_string(Rational(4, 2)) == "2");
  CHECK(to_decimal(Rational(1, 3), 4) == "0.3333");
  CHECK(to_decimal(Rational(2, 3), 2) == "0.67");
  CHECK(to_decimal(Rational(1, 2)) == "0.5");
  for (const char* bad : {"", "1/0", "abc", "1.2.3", "/3", "1/-2", "."})
    CHECK(kind_of([&] { parse_rational(bad); }) == ErrorKind::ParseError);
}

TEST_CASE("validate_instance") {
  const Instance inst = instance1();
  CHECK(inst.agents() == 4);
  CHECK(inst.projects() == 3);
  CHECK(inst.rows_sum_to_one());

  CHECK_NOTHROW(validate_instance({{Rational(0)}}));

  try {
    validate_instance({{q("3/5"), q("3/5")}});
    FAIL("accepted an overfull row");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::RowMassExceeded);
    CHECK(e.row() == 1);
  }
  try {
    validate_instance({{q("1/2"), q("1/2")}, {q("1/2"), q("1/4")}}, Tightness::Tight);
    FAIL("accepted a slack row as tight");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotTight);
    CHECK(e.row() == 2);
  }
  try {
    validate_instance({{q("1/2"), q("-1/4")}});
    FAIL("accepted a negative demand");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OutOfRange);
    CHECK(e.row() == 1);
    CHECK(e.column() == 2);
  }
  CHECK(kind_of([] { validate_instance({}); }) == ErrorKind::DimensionMismatch);
  CHECK(kind_of([] { validate_instance({{q("0")}, {q("0"), q("0")}}); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("row mass acceptance is exact at the boundary") {
  oracle::Sampler rng(11);
  for (int t = 0; t < 300; ++t) {
    const int m = rng.range(1, 6);
    Row r = rng.vector(m, 12);
    Rational s = oracle::sum(r);
    bool accepted = true;
    try {
      validate_instance({r});
    } catch (const Error& e) {
      accepted = false;
      CHECK(e.kind() == ErrorKind::RowMassExceeded);
    }
    CHECK(accepted == (s <= 1));
    bool tight = true;
    try {
      validate_instance({r}, Tightness::Tight);
    } catch (const Error&) {
      tight = false;
    }
    CHECK(tight == (s == 1));
  }
}

TEST_CASE("resolve_tau") {
  CHECK(resolve_tau(ThresholdSpec::half(), 5) == 3);
  CHECK(resolve_tau(ThresholdSpec::half(), 4) == 2);
  CHECK(resolve_tau(ThresholdSpec::all(), 7) == 7);
  CHECK(resolve_tau(ThresholdSpec::all_but(2), 6) == 4);
  CHECK(resolve_tau(ThresholdSpec::one(), 9) == 1);
  CHECK(resolve_tau(ThresholdSpec::fixed(3), 3) == 3);
  CHECK(kind_of([] { resolve_tau(ThresholdSpec::fixed(4), 3); }) == ErrorKind::TauOutOfRange);
  CHECK(kind_of([] { resolve_tau(ThresholdSpec::fixed(0), 3); }) == ErrorKind::TauOutOfRange);
  CHECK(kind_of([] { resolve_tau(ThresholdSpec::all_but(3), 3); }) == ErrorKind::TauOutOfRange);
}

TEST_CASE("satisfaction_report on instance1") {
  const Instance inst = instance1();
  const auto r = satisfaction_report(sol({"0.3", "0.6", "0.1"}), inst, 2);
  CHECK(r.satisfied_count == 3);
  CHECK(r.per_agent[0].satisfied);
  CHECK(r.per_agent[1].satisfied);
  CHECK_FALSE(r.per_agent[2].satisfied);
  CHECK(r.per_agent[2].local_projects == std::vector<int>{1});
  CHECK(r.per_agent[3].satisfied);
  CHECK(r.total_budget == 1);

  const auto zero = satisfaction_report(sol({"0", "0", "0"}), inst, 1);
  CHECK(zero.per_agent[0].satisfied);
  CHECK(zero.per_agent[1].satisfied);
  CHECK_FALSE(zero.per_agent[2].satisfied);
  CHECK_FALSE(zero.per_agent[3].satisfied);

  for (int tau = 1; tau <= 3; ++tau) CHECK(satisfaction_report(sol({"1", "1", "1"}), inst, tau).all_satisfied());

  CHECK(kind_of([&] { satisfaction_report(sol({"1", "1"}), inst, 1); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("tau_covers") {
  const Row a{q("0.5"), q("0.5"), q("0")}, b{q("0"), q("0.5"), q("0.5")};
  CHECK(tau_covers(a, b, 2));
  CHECK_FALSE(tau_covers(a, b, 3));
  CHECK(tau_covers(a, a, 3));
  CHECK_FALSE(tau_covers(Row{0, 0}, Row{1, 1}, 1));
  CHECK(coverage_count(a, b) == 2);
  CHECK(kind_of([&] { tau_covers(a, Row{0, 0}, 1); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("canonicalize") {
  const Instance inst = instance1();
  CHECK(canonicalize(sol({"0.35", "0.55", "0.1"}), inst) == sol({"0.3", "0.5", "0"}));
  CHECK(canonicalize(Solution(inst.row(2)), inst) == Solution(inst.row(2)));
  CHECK(canonicalize(sol({"0", "0", "0"}), inst) == sol({"0", "0", "0"}));
  CHECK(kind_of([&] { canonicalize(sol({"0"}), inst); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("property: canonicalize never loses an agent and never costs more") {
  oracle::Sampler rng(5);
  for (int t = 0; t < 400; ++t) {
    const Instance inst = rng.instance(rng.range(1, 5), rng.range(1, 5), t % 2 == 0);
    const int m = inst.projects();
    const Solution x(rng.vector(m, 10));
    const Solution z = canonicalize(x, inst);
    CHECK(z.total() <= x.total());
    const auto cols = oracle::columns(inst.demands());
    for (int j = 0; j < m; ++j) {
      CHECK(std::find(cols[j].begin(), cols[j].end(), z[j]) != cols[j].end());
      CHECK(z[j] <= x[j]);
    }
    CHECK(canonicalize(z, inst) == z);
    for (int tau = 1; tau <= m; ++tau) {
      const auto before = satisfaction_report(x, inst, tau);
      const auto after = satisfaction_report(z, inst, tau);
      for (int i = 0; i < inst.agents(); ++i)
        if (before.per_agent[i].satisfied) CHECK(after.per_agent[i].satisfied);
    }
  }
}

TEST_CASE("property: monotone in x, non-increasing in tau, and matches the oracle count") {
  oracle::Sampler rng(6);
  for (int t = 0; t < 300; ++t) {
    const Instance inst = rng.instance(rng.range(1, 6), rng.range(1, 6), false);
    const int m = inst.projects();
    auto xv = rng.vector(m, 6);
    auto yv = xv;
    for (auto& v : yv) v = std::min<Rational>(1, v + Rational(rng.range(0, 3), 6));
    const Solution x(xv), y(yv);
    int previous = inst.agents() + 1;
    for (int tau = 1; tau <= m; ++tau) {
      const auto rx = satisfaction_report(x, inst, tau);
      const auto ry = satisfaction_report(y, inst, tau);
      CHECK(rx.satisfied_count == oracle::count_satisfied(xv, inst.demands(), tau));
      CHECK(rx.satisfied_count <= previous);
      previous = rx.satisfied_count;
      for (int i = 0; i < inst.agents(); ++i)
        if (rx.per_agent[i].satisfied) CHECK(ry.per_agent[i].satisfied);
    }
  }
}

TEST_CASE("property: pairwise coverage at half") {
  oracle::Sampler rng(7);
  for (int t = 0; t < 1000; ++t) {
    const int m = rng.range(1, 9);
    const auto a = rng.vector(m, 7), b = rng.vector(m, 7);
    const int tau = (m + 1) / 2;
    CHECK((tau_covers(a, b, tau) || tau_covers(b, a, tau)));
  }
}

TEST_CASE("instance documents round-trip") {
  const Instance inst = families::fixture("nocover_five");
  const std::string text = io::format_instance(inst, ThresholdSpec::all_but(1), {{"note", "x"}});
  const auto doc = io::parse_instance(text);
  CHECK(doc.instance.demands() == inst.demands());
  CHECK(doc.tau == ThresholdSpec::all_but(1));
  CHECK(doc.instance.is_tight());
  CHECK(doc.metadata["note"] == "x");

  const auto parsed = io::parse_instance(
      R"({"projects": 2, "tau": {"fixed": 1}, "tight": false, "agents": [["1/2", 0.1], [".25", "0"]]})");
  CHECK(parsed.instance.demand(0, 1) == Rational(1, 10));
  CHECK(parsed.instance.demand(1, 0) == Rational(1, 4));
  CHECK(parsed.tau == ThresholdSpec::fixed(1));
  CHECK(kind_of([] { io::parse_instance(R"({"projects": 3, "agents": [["1", "0"]]})"); }) ==
        ErrorKind::DimensionMismatch);
  CHECK(kind_of([] { io::parse_instance("{"); }) == ErrorKind::ParseError);
}

TEST_CASE("tau and solution spellings") {
  CHECK(io::parse_tau("half") == ThresholdSpec::half());
  CHECK(io::parse_tau("m-2") == ThresholdSpec::all_but(2));
  CHECK(io::parse_tau("all_but:1") == ThresholdSpec::all_but(1));
  CHECK(io::parse_tau("3") == ThresholdSpec::fixed(3));
  CHECK(io::parse_tau("fixed:2") == ThresholdSpec::fixed(2));
  CHECK(kind_of([] { io::parse_tau("most"); }) == ErrorKind::ParseError);

  CHECK(io::parse_solution("0.3, 0.6 ,0.1") == sol({"0.3", "0.6", "0.1"}));
  CHECK(io::parse_solution("[\"1/2\", 0.5]") == sol({"1/2", "1/2"}));
  CHECK(io::parse_solution(R"({"solution": ["1", "0"]})") == sol({"1", "0"}));
  const auto j = io::solution_to_json(sol({"1/2", "1/4"}));
  CHECK(j["total"] == "3/4");
}
