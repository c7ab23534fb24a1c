#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "satdiv/model.hpp"

namespace satdiv::constructive {

/// x_j = min(2/m, 1). Satisfies every valid agent at tau = ceil(m/2).
Solution uniform_half_solution(int m);

/// x_j = 1/2. Satisfies every valid agent at tau = m-1.
Solution half_each_solution(int m);

/// x_j = max_i d[i][j]. Satisfies every agent at tau = m.
Solution column_max_solution(const Instance& inst);

/// Both agents of a 2 x 4 instance satisfied at tau = 3 within budget 1.
/// Throws WrongShape.
Solution two_agent_four_solve(const Instance& inst);

enum class Color { Red = 0, Green = 1, Yellow = 2 };
const char* to_string(Color color);

/// Working state of the three-agent construction on an odd number of
/// projects. Rows are stored in role order (a, b, c) where a covers b, b
/// covers c and c covers a.
struct ReshuffleState {
  std::array<int, 3> roles{0, 1, 2};      // original agent index of a, b, c
  std::array<Row, 3> rows;                // padded (tight) rows in role order
  std::vector<int> classes;               // per project: 1..7, 0 when unclassified
  std::array<int, 3> deltas{0, 0, 0};     // leftover counts of Q1, Q2, Q3
  std::array<int, 3> triple{-1, -1, -1};  // indices drawn from Q1, Q2, Q3
  std::vector<std::pair<int, int>> pairs;
  // coloring[j][color] = role (0 = a, 1 = b, 2 = c) whose value goes to that line
  std::vector<std::array<int, 3>> coloring;

  int projects() const { return static_cast<int>(coloring.size()); }
  /// The monochromatic line of one color.
  Solution line(Color color) const;
};

/// Identity coloring of three rows (red = a, green = b, yellow = c).
ReshuffleState identity_state(const std::array<Row, 3>& rows);

/// True iff every column of the coloring is a bijection, each line
/// ceil(m/2)-covers all three rows, and the line totals sum to exactly 3.
bool reshuffle_verify(const ReshuffleState& state);

/// Human-readable audit document for a state.
nlohmann::json reshuffle_certificate(const ReshuffleState& state);

enum class ThreeAgentCase { TwoProjects, CoveringRow, Reshuffle };
const char* to_string(ThreeAgentCase c);

struct ThreeAgentResult {
  Solution solution;
  ThreeAgentCase how = ThreeAgentCase::CoveringRow;
  bool dropped_last = false;          // m was even; the last project was removed
  int covering_agent = -1;            // CoveringRow: the agent whose row was returned
  std::optional<Color> line;          // Reshuffle: the chosen line
  std::optional<ReshuffleState> state;
};

/// A solution with total <= 1 satisfying all three agents at tau = ceil(m/2).
/// Throws WrongShape unless n = 3.
ThreeAgentResult three_agent_half_solve(const Instance& inst);

}  // namespace satdiv::constructive
