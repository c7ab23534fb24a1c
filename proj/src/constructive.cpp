#include "satdiv/constructive.hpp"

#include <algorithm>
#include <stdexcept>

namespace satdiv::constructive {

using satdiv::to_string;

namespace {

constexpr std::array<Color, 3> kColors{Color::Red, Color::Green, Color::Yellow};
constexpr std::array<const char*, 3> kRoleNames{"a", "b", "c"};

Row column_maxima(const Instance& inst) {
  Row x(inst.projects(), 0);
  for (int j = 0; j < inst.projects(); ++j)
    for (int i = 0; i < inst.agents(); ++i) x[j] = std::max(x[j], inst.demand(i, j));
  return x;
}

Rational row_sum(const Row& r) {
  Rational s = 0;
  for (const auto& v : r) s += v;
  return s;
}

// Strict order on the entries of one column: larger value first, equal values
// broken by smaller agent index.
struct Ranked {
  const std::array<Row, 3>& rows;
  const std::array<int, 3>& agent;  // role -> original agent index

  bool above(int p, int q, int j) const {
    if (rows[p][j] != rows[q][j]) return rows[p][j] > rows[q][j];
    return agent[p] < agent[q];
  }

  bool covers(int p, int q, int tau) const {
    int count = 0;
    for (std::size_t j = 0; j < rows[p].size(); ++j)
      if (above(p, q, static_cast<int>(j))) ++count;
    return count >= tau;
  }

  // Roles sorted from top to bottom in column j.
  std::array<int, 3> order(int j) const {
    std::array<int, 3> o{0, 1, 2};
    std::sort(o.begin(), o.end(), [&](int p, int q) { return above(p, q, j); });
    return o;
  }
};

// Class of a column from its top-to-bottom role order (0 = a, 1 = b, 2 = c).
int classify(const std::array<int, 3>& o) {
  constexpr int a = 0, b = 1, c = 2;
  if (o == std::array<int, 3>{c, a, b}) return 1;
  if (o == std::array<int, 3>{b, c, a}) return 2;
  if (o == std::array<int, 3>{a, b, c}) return 3;
  if (o == std::array<int, 3>{a, c, b}) return 4;
  if (o == std::array<int, 3>{c, b, a}) return 5;
  return 6;  // b, a, c
}

// Paired columns: the first hands its top entry to red, the second to yellow,
// so each agent is reached in at least one of the two on every line.
void color_pair(ReshuffleState& s, const Ranked& rank, int j1, int j2) {
  const auto o1 = rank.order(j1);
  const auto o2 = rank.order(j2);
  if (o1[0] == o2[0]) throw std::logic_error("paired columns share their top agent");
  s.coloring[j1] = {o1[0], o1[1], o1[2]};
  s.coloring[j2] = {o2[2], o2[1], o2[0]};
  s.pairs.emplace_back(j1, j2);
}

ReshuffleState build_state(const std::array<Row, 3>& padded, const std::array<int, 3>& agents, int tau) {
  Ranked base{padded, agents};
  // Relabel as the 3-cycle a -> b -> c -> a under the strict order.
  int b_role = -1;
  for (int q = 1; q < 3; ++q)
    if (base.covers(0, q, tau)) b_role = q;
  if (b_role == -1 || base.covers(0, 3 - b_role, tau))
    throw std::logic_error("coverage relation is not a 3-cycle");
  const int c_role = 3 - b_role;

  ReshuffleState s;
  s.roles = {agents[0], agents[b_role], agents[c_role]};
  s.rows = {padded[0], padded[b_role], padded[c_role]};
  const int m = static_cast<int>(padded[0].size());
  s.classes.assign(m, 0);
  s.coloring.assign(m, {0, 1, 2});
  Ranked rank{s.rows, s.roles};

  std::array<std::vector<int>, 7> members;  // members[q-1], ascending
  for (int j = 0; j < m; ++j) {
    s.classes[j] = classify(rank.order(j));
    members[s.classes[j] - 1].push_back(j);
  }
  for (int q = 0; q < 3; ++q)
    if (members[q].empty()) throw std::logic_error("missing class for the distinguished triple");

  // Distinguished triple, colored so every agent gets two of the three columns on each line.
  constexpr int a = 0, b = 1, c = 2;
  s.triple = {members[0][0], members[1][0], members[2][0]};
  s.coloring[s.triple[0]] = {a, c, b};  // c > a > b
  s.coloring[s.triple[1]] = {b, a, c};  // b > c > a
  s.coloring[s.triple[2]] = {c, b, a};  // a > b > c

  // Q6 with Q1, Q4 with Q2, Q5 with Q3.
  std::array<std::vector<int>, 3> left;
  constexpr std::array<int, 3> partner{5, 3, 4};
  for (int q = 0; q < 3; ++q) {
    std::vector<int> rest(members[q].begin() + 1, members[q].end());
    const auto& other = members[partner[q]];
    if (other.size() > rest.size()) throw std::logic_error("class surplus is negative");
    for (std::size_t t = 0; t < other.size(); ++t) color_pair(s, rank, other[t], rest[t]);
    left[q].assign(rest.begin() + static_cast<std::ptrdiff_t>(other.size()), rest.end());
    s.deltas[q] = static_cast<int>(left[q].size());
  }

  // Leftovers: the largest class on top, under it the surplus of the middle
  // class, then alternations of the smallest and middle classes.
  std::array<int, 3> by_size{1, 2, 0};
  std::stable_sort(by_size.begin(), by_size.end(),
                   [&](int p, int q) { return s.deltas[p] > s.deltas[q]; });
  const auto& top = left[by_size[0]];
  const auto& mid = left[by_size[1]];
  const auto& low = left[by_size[2]];
  if (top.size() > mid.size() + low.size() || top.size() < mid.size() - low.size())
    throw std::logic_error("leftover counts violate the matching bounds");
  std::vector<int> second(mid.begin(), mid.begin() + static_cast<std::ptrdiff_t>(mid.size() - low.size()));
  for (std::size_t t = 0; t < low.size(); ++t) {
    second.push_back(low[t]);
    second.push_back(mid[mid.size() - low.size() + t]);
  }
  for (std::size_t t = 0; t < top.size(); ++t) color_pair(s, rank, top[t], second[t]);
  for (std::size_t t = top.size(); t + 1 < second.size(); t += 2) color_pair(s, rank, second[t], second[t + 1]);
  return s;
}

}  // namespace

Solution uniform_half_solution(int m) {
  if (m < 1) throw Error(ErrorKind::BadParam, "m must be at least 1");
  const Rational v = m >= 2 ? Rational(2, m) : Rational(1);
  return Solution(std::vector<Rational>(m, v));
}

Solution half_each_solution(int m) {
  if (m < 1) throw Error(ErrorKind::BadParam, "m must be at least 1");
  return Solution(std::vector<Rational>(m, Rational(1, 2)));
}

Solution column_max_solution(const Instance& inst) { return Solution(column_maxima(inst)); }

Solution two_agent_four_solve(const Instance& inst) {
  if (inst.agents() != 2 || inst.projects() != 4)
    throw Error(ErrorKind::WrongShape, "expected 2 agents and 4 projects, got " + std::to_string(inst.agents()) +
                                           " x " + std::to_string(inst.projects()));
  const Row& a = inst.row(0);
  const Row& b = inst.row(1);
  if (tau_covers(a, b, 3)) return Solution(a);
  if (tau_covers(b, a, 3)) return Solution(b);
  std::vector<int> s, t;
  for (int j = 0; j < 4; ++j) (a[j] > b[j] ? s : t).push_back(j);
  if (s.size() != 2 || t.size() != 2) throw std::logic_error("2 x 4 split is not two and two");
  Row first(4), second(4);
  first[s[0]] = a[s[0]], second[s[0]] = b[s[0]];
  first[s[1]] = b[s[1]], second[s[1]] = a[s[1]];
  first[t[0]] = b[t[0]], second[t[0]] = a[t[0]];
  first[t[1]] = a[t[1]], second[t[1]] = b[t[1]];
  Solution x(std::move(first)), y(std::move(second));
  return y.total() < x.total() ? y : x;
}

const char* to_string(Color color) {
  switch (color) {
    case Color::Red: return "red";
    case Color::Green: return "green";
    case Color::Yellow: return "yellow";
  }
  return "?";
}

const char* to_string(ThreeAgentCase c) {
  switch (c) {
    case ThreeAgentCase::TwoProjects: return "two-projects";
    case ThreeAgentCase::CoveringRow: return "covering-row";
    case ThreeAgentCase::Reshuffle: return "reshuffle";
  }
  return "?";
}

Solution ReshuffleState::line(Color color) const {
  Row x(coloring.size());
  for (std::size_t j = 0; j < coloring.size(); ++j) x[j] = rows[coloring[j][static_cast<int>(color)]][j];
  return Solution(std::move(x));
}

ReshuffleState identity_state(const std::array<Row, 3>& rows) {
  ReshuffleState s;
  s.rows = rows;
  const auto m = rows[0].size();
  s.classes.assign(m, 0);
  s.coloring.assign(m, {0, 1, 2});
  return s;
}

bool reshuffle_verify(const ReshuffleState& state) {
  const int m = state.projects();
  if (m == 0) return false;
  for (const auto& r : state.rows)
    if (static_cast<int>(r.size()) != m) return false;
  for (const auto& col : state.coloring) {
    std::array<bool, 3> seen{false, false, false};
    for (int role : col) {
      if (role < 0 || role > 2 || seen[role]) return false;
      seen[role] = true;
    }
  }
  const int tau = (m + 1) / 2;
  Rational total = 0;
  for (Color color : kColors) {
    const Solution x = state.line(color);
    for (const auto& r : state.rows)
      if (!tau_covers(x.coords(), r, tau)) return false;
    total += x.total();
  }
  return total == 3;
}

nlohmann::json reshuffle_certificate(const ReshuffleState& state) {
  using nlohmann::json;
  json doc;
  json roles = json::object();
  for (int r = 0; r < 3; ++r) roles[kRoleNames[r]] = state.roles[r] + 1;
  doc["roles"] = roles;
  json rows = json::array();
  for (const auto& r : state.rows) {
    json row = json::array();
    for (const auto& v : r) row.push_back(to_string(v));
    rows.push_back(row);
  }
  doc["rows"] = rows;
  json classes = json::array();
  for (int q : state.classes) classes.push_back(q ? "Q" + std::to_string(q) : std::string("-"));
  doc["classes"] = classes;
  doc["deltas"] = state.deltas;
  json triple = json::array();
  for (int j : state.triple) triple.push_back(j + 1);
  doc["triple"] = triple;
  json pairs = json::array();
  for (const auto& [p, q] : state.pairs) pairs.push_back({p + 1, q + 1});
  doc["pairs"] = pairs;
  json coloring = json::array();
  for (const auto& col : state.coloring) {
    json c = json::object();
    for (Color color : kColors) c[to_string(color)] = kRoleNames[col[static_cast<int>(color)]];
    coloring.push_back(c);
  }
  doc["coloring"] = coloring;
  json lines = json::object();
  for (Color color : kColors) {
    const Solution x = state.line(color);
    json coords = json::array();
    for (const auto& v : x.coords()) coords.push_back(to_string(v));
    lines[to_string(color)] = {{"solution", coords}, {"total", to_string(x.total())}};
  }
  doc["lines"] = lines;
  return doc;
}

ThreeAgentResult three_agent_half_solve(const Instance& inst) {
  if (inst.agents() != 3)
    throw Error(ErrorKind::WrongShape, "expected 3 agents, got " + std::to_string(inst.agents()));
  const int m = inst.projects();
  ThreeAgentResult out;

  if (m == 2) {
    Rational x = std::max({inst.demand(0, 0), inst.demand(1, 0), inst.demand(2, 0)});
    out.how = ThreeAgentCase::TwoProjects;
    out.solution = Solution({x, 1 - x});
    return out;
  }
  if (m % 2 == 0) {
    Matrix sub;
    for (const auto& r : inst.demands()) sub.emplace_back(r.begin(), r.end() - 1);
    out = three_agent_half_solve(validate_instance(std::move(sub)));
    auto coords = out.solution.coords();
    coords.push_back(0);
    out.solution = Solution(std::move(coords));
    out.dropped_last = true;
    return out;
  }

  const int tau = (m + 1) / 2;
  auto covering_row = [&](const std::array<Row, 3>& rows) {
    for (int i = 0; i < 3; ++i)
      if (std::all_of(rows.begin(), rows.end(), [&](const Row& r) { return tau_covers(rows[i], r, tau); }))
        return i;
    return -1;
  };

  std::array<Row, 3> rows{inst.row(0), inst.row(1), inst.row(2)};
  out.how = ThreeAgentCase::CoveringRow;
  if (int i = covering_row(rows); i >= 0) {
    out.covering_agent = i;
    out.solution = Solution(rows[i]);
    return out;
  }
  for (auto& r : rows) r[0] += 1 - row_sum(r);
  if (int i = covering_row(rows); i >= 0) {
    out.covering_agent = i;
    out.solution = Solution(rows[i]);
    return out;
  }

  ReshuffleState state = build_state(rows, {0, 1, 2}, tau);
  if (!reshuffle_verify(state)) throw std::logic_error("reshuffle certificate failed to verify");
  Color best = Color::Red;
  Solution best_line = state.line(Color::Red);
  for (Color color : {Color::Green, Color::Yellow}) {
    Solution x = state.line(color);
    if (x.total() < best_line.total()) {
      best = color;
      best_line = std::move(x);
    }
  }
  out.how = ThreeAgentCase::Reshuffle;
  out.line = best;
  out.solution = std::move(best_line);
  out.state = std::move(state);
  return out;
}

}  // namespace satdiv::constructive
