#include "scaled.hpp"

#include <algorithm>

namespace satdiv::detail {

std::int64_t ScaledInstance::to_units(const Rational& value) const {
  Rational scaled = value * Rational(BigInt(scale));
  if (denominator_of(scaled) != 1)
    throw Error(ErrorKind::BadParam, to_string(value) + " is not a multiple of 1/" + std::to_string(scale));
  return numerator_of(scaled).convert_to<std::int64_t>();
}

Solution ScaledInstance::to_solution(std::span<const std::int64_t> units) const {
  std::vector<Rational> coords;
  coords.reserve(units.size());
  for (auto u : units) coords.push_back(to_rational(u));
  return Solution(std::move(coords));
}

ScaledInstance scale_instance(const Instance& inst, std::span<const Rational> extras) {
  BigInt den = 1;
  for (const auto& row : inst.demands())
    for (const auto& v : row) den = boost::multiprecision::lcm(den, denominator_of(v));
  for (const auto& e : extras) den = boost::multiprecision::lcm(den, denominator_of(e));

  // Sums of up to m+1 coordinates, each scaled by at most 4, must stay in range.
  const BigInt limit = (BigInt(1) << 60) / (4 * (inst.projects() + 2));
  if (den > limit)
    throw Error(ErrorKind::TooLarge, "common denominator " + den.str() + " exceeds 64-bit search range");

  ScaledInstance s;
  s.scale = den.convert_to<std::int64_t>();
  s.n = inst.agents();
  s.m = inst.projects();
  s.demand.reserve(static_cast<std::size_t>(s.n) * s.m);
  for (const auto& row : inst.demands())
    for (const auto& v : row) s.demand.push_back(s.to_units(v));
  return s;
}

std::vector<std::vector<std::int64_t>> unit_grid(const ScaledInstance& s) {
  std::vector<std::vector<std::int64_t>> grid(s.m);
  for (int j = 0; j < s.m; ++j) {
    auto& col = grid[j];
    col.push_back(0);
    for (int i = 0; i < s.n; ++i) col.push_back(s.at(i, j));
    std::sort(col.begin(), col.end());
    col.erase(std::unique(col.begin(), col.end()), col.end());
  }
  return grid;
}

}  // namespace satdiv::detail
