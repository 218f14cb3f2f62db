#pragma once

#include <vector>

#include "walks/numeric.hpp"

namespace walks::lp {

/// minimize c.x subject to A x = b, x >= 0, all over the rationals.
struct Problem {
  std::vector<std::vector<Rational>> A;
  std::vector<Rational> b;
  std::vector<Rational> c;
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Solution {
  Status status = Status::Infeasible;
  std::vector<Rational> x;
  Rational objective;
};

/// Two-phase tableau simplex with Bland's rule; exact, so it never cycles
/// and never misreports feasibility.
Solution solve(const Problem& p);

}  // namespace walks::lp
