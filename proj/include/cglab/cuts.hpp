// Chvatal-Gomory cut generation: single cuts, sequential chains, waves of
// simultaneous cuts, the validity oracle, and the four cut-scoring rules.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cglab/ip.hpp"
#include "cglab/types.hpp"

namespace cglab {

// Halfspace alpha' x <= beta. CG-generated cuts have integer entries (floors)
// and remember the multiplier vector that produced them.
struct Cut {
  RatVec alpha;
  Rational beta;
  RatVec provenance_u;  // empty for hand-built cuts

  bool alpha_is_zero() const;
  std::string row_str() const;  // "a1 a2 ... <= b", byte-stable
};

// Multiplier layouts. Single: one vector of length m. Sequential: W vectors
// of lengths m, m+1, ..., m+W-1. Waves: W waves of k vectors each, every
// vector in wave w (0-based) of length m + k*w.
struct CutParameters {
  enum class Layout { Single, Sequential, Waves };

  Layout layout = Layout::Single;
  int wave_size = 1;  // k, Waves only
  std::vector<RatVec> vectors;

  static CutParameters single(RatVec u);
  static CutParameters sequential(std::vector<RatVec> us);
  static CutParameters waves(std::vector<RatVec> us, int k);

  int num_steps() const { return static_cast<int>(vectors.size()); }
  // Checks lengths against m and that every entry lies in [0, 1].
  void validate(Index m) const;
};

// An instance together with the ordered cut rows appended to it.
struct ExtendedInstance {
  IntegerProgram base;
  std::vector<Cut> added_rows;

  Index total_rows() const {
    return base.num_constraints() + static_cast<Index>(added_rows.size());
  }
  // Column i / rhs of the system after the first `steps` added rows.
  RatVec a_tilde(Index col, int steps) const;
  RatVec b_tilde(int steps) const;
  RatMat full_matrix() const;
  RatVec full_rhs() const;
};

// floor(u'A) x <= floor(u'b) for u in [0,1]^m. Exact floors.
Cut cg_cut(const RatMat& a, const RatVec& b, const RatVec& u);

// Applies cuts in order; step w sees the matrix extended by all previous cut
// rows. A Single layout is the W=1 chain.
ExtendedInstance sequential_cuts(const IntegerProgram& ip,
                                 const CutParameters& params);

// W waves of k simultaneous cuts; all cuts of a wave are computed from the
// pre-wave system only, then appended together.
ExtendedInstance wave_cuts(const IntegerProgram& ip,
                           const CutParameters& params);

// The sequential expansion of a Waves layout: cut j of wave w becomes the
// vector u^j_w padded with j zeros, making the in-wave rows weightless.
CutParameters zero_padded_expansion(const CutParameters& waves_params);

struct ValidityReport {
  bool valid = false;
  std::optional<IntVec> witness;  // a separated integral point when invalid
};

// True iff every enumerated integer-feasible point satisfies the cut.
ValidityReport is_valid_cut(const IntegerProgram& ip, const Cut& cut,
                            const IntVec& box,
                            std::uint64_t budget = 10'000'000);

// ---- Scoring rules ---------------------------------------------------------

enum class ScoreRule { Efficacy, Parallelism, DirectedCutoff, IntegralSupport };

struct CutScoringContext {
  RatVec x_lp;                       // current LP optimum
  std::optional<RatVec> incumbent;   // best integral solution, if any
  RatVec objective;                  // c
  std::vector<bool> integral_mask;   // per-variable integrality (all true here)
};

struct ScoreValue {
  double value = 0;
  bool used_fallback = false;  // directed cutoff fell back to efficacy
};

// Norms are evaluated in floating point on top of exact sums; scores feed
// only argmax comparisons, never region boundaries.
ScoreValue score(ScoreRule rule, const Cut& cut, const CutScoringContext& ctx);

// Exact separation test: alpha' x_lp > beta.
bool separates(const Cut& cut, const RatVec& x_lp);

// Canonical candidate multipliers: 1/2 on single rows, then on adjacent row
// pairs, then on all rows. Half-integral multipliers of near-tight rows are
// the cuts that actually bite.
std::vector<RatVec> half_integral_family(Index m, std::size_t count);

}  // namespace cglab
