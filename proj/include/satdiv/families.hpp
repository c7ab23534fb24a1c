#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "satdiv/model.hpp"
#include "satdiv/solvers.hpp"

namespace satdiv::families {

/// What a fact asserts about its instance.
enum class FactKind {
  MaxSatisfied,   // max_satisfied_exact(tau, budget).count  relation  value
  AllAgentsSat,   // value 1 for YES, 0 for NO
  MinBudget,      // min_budget_exact(tau).budget  relation  value
  DictatorCount,  // dictator(tau).satisfied  relation  value
};
enum class Relation { Eq, Gt, Le };

struct Fact {
  FactKind kind = FactKind::MaxSatisfied;
  int tau = 1;
  Rational budget = 1;
  Relation relation = Relation::Eq;
  Rational value;
  std::string source;  // how the value is known: "construction", "closed-form", "exhaustive-search"
};

struct FactCheck {
  bool holds = false;
  Rational actual;
};

/// Runs the solver named by the fact and compares exactly.
FactCheck check_fact(const Fact& fact, const Instance& inst, const solvers::SearchOptions& options = {});

const char* to_string(FactKind kind);
const char* to_string(Relation relation);

/// A generated instance together with its parameters and expected facts.
struct Family {
  std::string name;
  nlohmann::json params = nlohmann::json::object();
  Instance instance;
  ThresholdSpec tau;
  std::vector<Fact> expected;
};

/// Metadata document embedded in generated instance files.
nlohmann::json metadata(const Family& family);

/// instance1, nocover_four, nocover_five, mat1. Throws UnknownFixture.
Instance fixture(std::string_view name);
Family fixture_family(std::string_view name);
const std::vector<std::string>& fixture_names();

/// n = m odd >= 3. Row i puts 1/2 + 1/2^m on project i and 1/2^(t+1) on the
/// project t steps to its right (cyclically).
Family tight_dictator(int m);

/// Three cyclic rows (1/2 + d/2, 1/2 - d, d/2) per delta; deltas strictly
/// increasing in (0, 1/6).
Family half_upper_bound(const std::vector<Rational>& deltas);
/// delta_i = i / (10k), i = 1..k.
std::vector<Rational> default_deltas(int k);

/// n = m >= 3; agent i demands 1/2 on projects i and i+1 (mod m).
Family cyclic_m_minus_1(int m);

/// One agent per composition of m^2 into m non-negative parts (lexicographic),
/// demands part/m^2. Even m >= 4; TooLarge beyond m = 4.
Family half_min_budget(int m);

/// For each pair of projects one agent with 1/2 on both, and for each
/// ordered pair (j, j') one agent with eps on j and 1 - eps on j'.
Family abo_min_budget(int m, const Rational& eps);

/// Rows e_1 and e_2 of the identity, padded with zeros to m projects.
Family two_distinct_tight(int m);

/// Names accepted by the CLI wherever an instance file is expected, e.g.
/// instance1, tight_dictator_m5, half_upper_bound_k2, cyclic_m6,
/// half_min_budget_m4, abo_m3_eps1-3, two_distinct_m2.
std::optional<Family> builtin(std::string_view name);
std::vector<std::string> builtin_examples();

}  // namespace satdiv::families
