// Integer-program instance model, instance generators, text format, and the
// brute-force integer-point oracle that backs every cut-validity check.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cglab/types.hpp"

namespace cglab {

// Raised when an enumeration request exceeds the configured budget. Callers
// must see this explicitly; the oracle never truncates silently.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// max c'x subject to Ax <= b, x >= 0, x integer. Upper bounds, when present,
// enter the LP relaxation as rows and the enumeration oracle as a box.
class IntegerProgram {
 public:
  IntegerProgram() = default;
  IntegerProgram(RatVec c, RatMat a, RatVec b,
                 std::optional<IntVec> upper_bounds = std::nullopt);

  Index num_vars() const { return c_.size(); }
  Index num_constraints() const { return a_.rows(); }

  const RatVec& objective() const { return c_; }
  const RatMat& matrix() const { return a_; }
  const RatVec& rhs() const { return b_; }
  const std::optional<IntVec>& upper_bounds() const { return bounds_; }

  RatVec column(Index i) const { return a_.col(i); }

  // ||A||_{1,1} = sum over columns of the column 1-norms; exact.
  Rational norm_a11() const;
  // ||b||_1, exact.
  Rational norm_b1() const;

 private:
  RatVec c_;
  RatMat a_;
  RatVec b_;
  std::optional<IntVec> bounds_;
};

struct IntegerPointSet {
  std::vector<IntVec> points;
};

// The infeasible two-row instance 2*sum(x) <= n, -2*sum(x) <= -n over binary
// variables; objective zero. n must be odd and >= 3.
IntegerProgram make_jeroslow(int n);

// Seeded packing instance: A uniform in [0, coeff_max], b in [1, n*coeff_max],
// c in [1, coeff_max]. x = 0 is always feasible. Variables carry the upper
// bound n*coeff_max so every LP relaxation in the tree stays bounded.
IntegerProgram random_packing_ip(std::uint64_t seed, int n, int m,
                                 int coeff_max);

// All integer points of [0, box] satisfying Ax <= b. The box is clipped to
// the instance's own upper bounds when those are present. Throws BudgetError
// when prod(box[i]+1) exceeds the budget.
IntegerPointSet enumerate_integer_points(const IntegerProgram& ip,
                                         const IntVec& box,
                                         std::uint64_t budget = 10'000'000);

// Instance text format (bit-exact round trip):
//   line 1: "n m"; line 2: n rationals (c); next m lines: A rows;
//   next line: m rationals (b); optional "bounds" line with n integers.
// Rationals as "p/q" or bare integers; '#' starts a comment line.
IntegerProgram read_instance(std::istream& in);
IntegerProgram read_instance_file(const std::string& path);
void write_instance(std::ostream& out, const IntegerProgram& ip);

}  // namespace cglab
