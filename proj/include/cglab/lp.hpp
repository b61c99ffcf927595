// Exact two-phase primal simplex over rationals. Bland's rule everywhere, so
// repeated runs take identical pivot sequences and return identical bases.
#pragma once

#include <string>
#include <vector>

#include "cglab/ip.hpp"
#include "cglab/types.hpp"

namespace cglab {

enum class LpStatus { Optimal, Infeasible, Unbounded };

const char* to_string(LpStatus s);

// A single <= row: coeffs' x <= rhs.
struct LpRow {
  RatVec coeffs;
  Rational rhs;
};

struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  RatVec solution;     // length n when Optimal
  Rational objective;  // c' solution, exact, when Optimal

  // Byte-stable rendering used by determinism tests.
  std::string serialize() const;
};

// Exact optimum of max c'x s.t. Ax <= b, extra rows, 0 <= x <= upper bounds.
// The instance's upper bounds are added as rows internally; extra_rows carry
// branching constraints and cuts.
LpOutcome solve_relaxation(const IntegerProgram& ip,
                           const std::vector<LpRow>& extra_rows = {});

}  // namespace cglab
