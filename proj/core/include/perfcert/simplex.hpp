// Exact rational linear programming: a dense two-phase primal simplex with
// Bland's rule. Sized for the small, dense programs the certificate search
// produces; every pivot is exact, so optimality and infeasibility verdicts
// carry zero tolerance.

#pragma once

#include <vector>

#include "perfcert/rational.hpp"

namespace perfcert::lp {

enum class Relation { le, eq, ge };

enum class Status { optimal, infeasible, unbounded };

/// maximize c.x  subject to  A[i].x (<=|=|>=) b[i]  and  x >= 0.
struct Problem {
  std::vector<std::vector<Rational>> A;
  std::vector<Rational> b;
  std::vector<Relation> rel;
  std::vector<Rational> c;

  std::size_t variable_count() const { return c.size(); }
  std::size_t row_count() const { return A.size(); }
};

struct Solution {
  Status status = Status::infeasible;
  std::vector<Rational> x;        // primal point (optimal status only)
  Rational objective;             // c.x at the optimum
  /// Row multipliers. At an optimum these are the dual values certifying the
  /// objective bound. On infeasibility they are Farkas multipliers y with
  /// y >= 0 for <=-rows, y <= 0 for >=-rows, y free for =-rows, such that
  /// sum_i y_i A[i] >= 0 componentwise while sum_i y_i b[i] < 0.
  std::vector<Rational> row_multipliers;
};

Solution solve(const Problem& problem);

}  // namespace perfcert::lp
