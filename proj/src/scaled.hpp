#pragma once

// Integer view of an instance: every demand (and any extra quantity such as a
// budget) multiplied by the least common denominator. The exact searches run
// on this representation; results are converted back to Rational.

#include <cstdint>
#include <span>
#include <vector>

#include "satdiv/model.hpp"

namespace satdiv::detail {

struct ScaledInstance {
  std::int64_t scale = 1;
  int n = 0;
  int m = 0;
  std::vector<std::int64_t> demand;  // row-major n x m

  std::int64_t at(int i, int j) const { return demand[static_cast<std::size_t>(i) * m + j]; }
  std::int64_t to_units(const Rational& value) const;  // exact; value * scale must be integral
  Rational to_rational(std::int64_t units) const { return Rational(BigInt(units), BigInt(scale)); }
  Solution to_solution(std::span<const std::int64_t> units) const;
};

// `extras` are additional rationals (budgets, base coordinates) that must be
// representable. Callers clamp budgets to [0, m] first.
// Throws TooLarge if the common denominator does not fit comfortably in 64 bits.
ScaledInstance scale_instance(const Instance& inst, std::span<const Rational> extras = {});

// Sorted distinct {0} u column j, in units.
std::vector<std::vector<std::int64_t>> unit_grid(const ScaledInstance& s);

}  // namespace satdiv::detail
