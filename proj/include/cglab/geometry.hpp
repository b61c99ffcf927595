// Parameter-space structure: floor signatures identifying constant-behavior
// regions, the hyperplane family of the single-cut partition, grid/random
// region counting, and piecewise-constancy certification.
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cglab/cuts.hpp"
#include "cglab/ip.hpp"
#include "cglab/search.hpp"
#include "cglab/types.hpp"

namespace cglab {

// Integer floor vector naming the cell of parameter space a multiplier
// occupies. Equal signatures imply identical generated cut rows.
struct RegionSignature {
  std::vector<Integer> floors;

  std::string str() const;  // "k1,k2,...", byte-stable
  std::uint64_t hash() const { return fnv1a(str()); }

  friend bool operator==(const RegionSignature& a, const RegionSignature& b) {
    return a.floors == b.floors;
  }
  friend bool operator<(const RegionSignature& a, const RegionSignature& b);
};

// (floor(u'a_1), ..., floor(u'a_n), floor(u'b)).
RegionSignature signature_single(const RatMat& a, const RatVec& b,
                                 const RatVec& u);

// Concatenated per-step floors under the extended-matrix recurrence; works
// for Single, Sequential, and Waves layouts (a wave contributes the floors
// of each of its cuts against the pre-wave system).
RegionSignature signature_of(const IntegerProgram& ip,
                             const CutParameters& params);
RegionSignature signature_sequential(const IntegerProgram& ip,
                                     const CutParameters& params);

// u' normal = offset. Boundaries of the single-cut floor cells.
struct Hyperplane {
  RatVec normal;
  Integer offset;
};

struct HyperplaneFamily {
  std::vector<Hyperplane> planes;
  std::size_t size() const { return planes.size(); }
};

// All u'a_i = k for integer k in [-||a_i||_1, ||a_i||_1], plus the same for
// b. Family size is sum_i(2 A_i + 1) + (2 B + 1).
HyperplaneFamily enumerate_hyperplanes_single(const RatMat& a, const RatVec& b);

// How multipliers are drawn for sampling-based checks.
struct SamplerSpec {
  enum class Kind { Grid, Random };
  Kind kind = Kind::Random;
  Index resolution = 11;       // Grid: points per axis (>= 2)
  std::uint64_t seed = 1;      // Random
  std::size_t count = 100;     // Random
  long denominator = 1000;     // Random: entries on {0, 1/d, ..., 1}

  static SamplerSpec grid(Index resolution);
  static SamplerSpec random(std::uint64_t seed, std::size_t count,
                            long denominator = 1000);
};

// Which multiplier layout a sweep or check quantifies over.
struct LayoutSpec {
  CutParameters::Layout kind = CutParameters::Layout::Single;
  int steps = 1;      // W (Sequential) or number of waves (Waves)
  int wave_size = 1;  // k (Waves)

  static LayoutSpec single();
  static LayoutSpec sequential(int w);
  static LayoutSpec waves(int w, int k);

  // Multiplier vector lengths for an instance with m base rows.
  std::vector<Index> vector_lengths(Index m) const;
};

// Draws the sampler's multiplier list for the given layout.
std::vector<CutParameters> draw_parameters(const IntegerProgram& ip,
                                           const LayoutSpec& layout,
                                           const SamplerSpec& sampler,
                                           std::uint64_t budget = 10'000'000);

struct ConstancyViolation {
  CutParameters first;
  CutParameters second;
  std::string value_first;
  std::string value_second;
};

struct ConstancyReport {
  std::size_t samples = 0;
  std::size_t groups = 0;
  std::size_t pairs_tested = 0;  // same-signature comparisons performed
  std::size_t violations = 0;
  std::vector<ConstancyViolation> violating;  // at most 16 retained

  bool ok() const { return violations == 0; }
};

// Groups sampled multipliers by signature and checks that the evaluator is
// constant within every group. With evaluator = tree size this is the
// piecewise-constancy certificate for the dual function.
ConstancyReport verify_piecewise_constancy(
    const IntegerProgram& ip, const LayoutSpec& layout,
    const SamplerSpec& sampler,
    const std::function<std::string(const CutParameters&)>& evaluator,
    int jobs = 1);

struct RegionCount {
  std::size_t distinct_signatures = 0;
  Integer bound;  // (family size)^m
};

// Distinct signatures over the uniform grid; Single layout only.
RegionCount count_regions_grid(const IntegerProgram& ip, Index resolution,
                               std::uint64_t budget = 10'000'000);

struct SweepRow {
  Rational param_value;
  long long tree_size = 0;
  bool hit_cap = false;
  std::uint64_t signature_hash = 0;
  int chosen_cut_index = -1;  // index into the candidate family; -1 = none
};

struct SweepGrid {
  Rational lo{0};
  Rational hi{1};
  Index points = 101;
};

// Varies one cut-score weight over the grid, running branch and cut with the
// candidate family at the root each time. signature_hash fingerprints the
// action trace. Output is the piecewise-constant mu -> tree-size table.
std::vector<SweepRow> mu_sweep(const IntegerProgram& ip,
                               const ScoringWeights& weights_template,
                               Index swept_index, const SweepGrid& grid,
                               long long kappa,
                               const std::vector<RatVec>& candidate_us,
                               int jobs = 1);

// Varies one coordinate of a fixed single-cut multiplier, applying the cut
// unconditionally at the root. signature_hash is the multiplier's region
// signature.
std::vector<SweepRow> u_sweep(const IntegerProgram& ip, const RatVec& base_u,
                              Index swept_index, const SweepGrid& grid,
                              long long kappa, int jobs = 1);

std::size_t count_value_changes(const std::vector<SweepRow>& rows);

}  // namespace cglab
