// Parameterized tree search: a generic round/step engine that picks the
// action maximizing a weighted sum of scoring rules, plus its branch-and-cut
// instantiation (node selection, cut selection, variable selection).
#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cglab/cuts.hpp"
#include "cglab/ip.hpp"
#include "cglab/lp.hpp"
#include "cglab/types.hpp"

namespace cglab {

struct TraceEntry {
  long long round = 0;  // 0-based
  int step = 0;         // 0-based
  Index action = 0;     // 0-based index into the step's action list
  double score = 0;     // winning weighted score
};

// Trace equality for invariance checks: actions only, never score values.
bool same_actions(const std::vector<TraceEntry>& a,
                  const std::vector<TraceEntry>& b);

struct SearchResult {
  long long tree_size = 0;  // expanded nodes (nodes whose LP was solved)
  std::vector<TraceEntry> action_trace;
  std::optional<std::pair<RatVec, Rational>> incumbent;
  bool hit_cap = false;  // cap reached with open nodes remaining
  double utility = 0;    // final-state function, in [-H, H]

  std::string serialize() const;  // byte-stable, for determinism tests
};

// `challenger` beats `best` only by more than a relative tolerance; anything
// closer is a tie and the earlier index stays. Keeps measure-zero boundary
// ties from flipping runs.
inline bool score_improves(double challenger, double best) {
  const double tol =
      1e-12 * std::max(std::abs(challenger), std::abs(best));
  return challenger > best + tol;
}

// Argmax of weights'scores(k) over k in [0, count); lowest index wins ties.
// Returns (index, value). Throws on non-finite scores.
std::pair<Index, double> weighted_argmax(
    Index count, const std::function<double(Index, Index)>& rule_value,
    const Eigen::VectorXd& weights);

// One step of a round: enumerate actions, score them with d_j weighted
// rules, apply the argmax.
template <typename State>
struct SearchStep {
  std::string name;
  std::function<Index(const State&)> num_actions;
  std::vector<std::function<double(const State&, Index)>> rules;
  Eigen::VectorXd weights;
  std::function<void(State&, Index)> apply;
};

// Runs kappa rounds of |steps| steps each. A step whose action list is empty
// is skipped. The utility is computed from the final state only, so any two
// parameterizations reaching the same final state score identically.
template <typename State>
SearchResult run_tree_search(
    State state, const std::vector<SearchStep<State>>& steps, long long kappa,
    const std::function<double(const State&)>& utility,
    const std::function<bool(const State&)>& finished = nullptr,
    const std::function<void(const State&, SearchResult&)>& finalize =
        nullptr) {
  if (kappa < 1) throw std::invalid_argument("kappa must be >= 1");
  SearchResult result;
  for (long long round = 0; round < kappa; ++round) {
    if (finished && finished(state)) break;
    for (std::size_t j = 0; j < steps.size(); ++j) {
      const SearchStep<State>& step = steps[j];
      if (step.weights.size() != static_cast<Index>(step.rules.size())) {
        throw std::invalid_argument("step '" + step.name +
                                    "': weight/rule count mismatch");
      }
      const Index count = step.num_actions(state);
      if (count <= 0) continue;
      const auto [action, value] = weighted_argmax(
          count,
          [&](Index rule, Index k) { return step.rules[rule](state, k); },
          step.weights);
      result.action_trace.push_back(
          {round, static_cast<int>(j), action, value});
      step.apply(state, action);
    }
  }
  result.utility = utility(state);
  if (!std::isfinite(result.utility)) {
    throw std::domain_error("utility is not finite");
  }
  if (finalize) finalize(state, result);
  return result;
}

// ---- Branch and cut --------------------------------------------------------

struct ScoringWeights {
  Eigen::VectorXd node;  // {best LP bound, depth}
  Eigen::VectorXd cut;   // {efficacy, parallelism, directed cutoff,
                         //  integral support}
  Eigen::VectorXd var;   // {most fractional}

  // Best-bound node selection, SCIP's cut weights, most-fractional branching.
  static ScoringWeights defaults();
};

struct CutConfig {
  enum class Mode {
    None,       // plain branch and bound
    FixedRoot,  // prescribed multipliers applied unconditionally at the root
    Select      // per-node scoring over a candidate family
  };

  Mode mode = Mode::None;
  CutParameters fixed;               // FixedRoot
  std::vector<RatVec> candidate_us;  // Select: single-cut multipliers
  bool cuts_at_every_node = false;   // Select: default is root only

  static CutConfig none();
  static CutConfig fixed_root(CutParameters params);
  static CutConfig select(std::vector<RatVec> candidate_us,
                          bool every_node = false);
};

// One open leaf of the search tree. The LP is solved lazily at expansion.
struct BcNode {
  IntVec lower;  // branching lower bounds, >= 0
  IntVec upper;  // branching upper bounds; -1 = unset
  int depth = 0;
  std::optional<Rational> parent_bound;  // LP value of the parent
  std::uint64_t id = 0;
  std::vector<Cut> cuts;  // cut rows active in this subtree
};

struct BcActive {
  BcNode node;
  LpOutcome lp;
  bool fathomed = false;
  std::vector<std::size_t> cut_candidates;  // separating pool indices
  std::vector<Index> fractional_vars;
};

struct BcState {
  const IntegerProgram* ip = nullptr;
  CutConfig config;
  std::vector<Cut> candidate_pool;  // Select mode, zero-alpha rows dropped
  std::vector<BcNode> open;
  std::optional<BcActive> active;
  long long expanded = 0;
  std::optional<std::pair<RatVec, Rational>> incumbent;
  std::uint64_t next_id = 0;

  // Per-expansion monitors used by the monotonicity checks. A missing global
  // bound means "still unbounded knowledge" (root not yet evaluated).
  std::vector<std::optional<Rational>> incumbent_history;
  std::vector<std::optional<Rational>> bound_history;

  bool finished() const { return open.empty(); }
};

BcState make_branch_and_cut_state(const IntegerProgram& ip,
                                  const CutConfig& config);

// Step order per round: node selection, cut selection, variable selection.
std::vector<SearchStep<BcState>> make_branch_and_cut_steps(
    const ScoringWeights& weights);

// The generic engine instantiated with the three B&C steps; utility is the
// tree size clamped to [1, kappa] (so H = kappa).
SearchResult run_branch_and_cut(const IntegerProgram& ip,
                                const ScoringWeights& weights,
                                const CutConfig& config, long long kappa);

// Weighted-score cut selection: argmax of mu'(score1..score4) over the
// candidates that separate ctx.x_lp; lowest index wins ties; nullopt when
// nothing separates. Candidates must be pre-filtered to nonzero alpha.
std::optional<std::size_t> select_cut(const std::vector<Cut>& candidates,
                                      const Eigen::VectorXd& mu,
                                      const CutScoringContext& ctx);

// Serializes a trace as "round,step,action_index,score_value" lines.
std::string trace_to_log(const std::vector<TraceEntry>& trace);

}  // namespace cglab
