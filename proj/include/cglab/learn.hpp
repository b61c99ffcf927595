// Learning-side harness: sampled instance sets, ERM over finite candidate
// lists, the pseudo-dimension and sample-complexity calculators, and the
// Monte-Carlo empirical Rademacher estimator.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cglab/ip.hpp"
#include "cglab/types.hpp"

namespace cglab {

struct SampleSet {
  std::vector<IntegerProgram> instances;
  std::uint64_t seed = 0;
  std::vector<std::size_t> train;
  std::vector<std::size_t> test;

  static SampleSet packing(std::uint64_t seed, std::size_t count, int n, int m,
                           int coeff_max, double train_fraction = 0.5);
  static SampleSet from_instances(std::vector<IntegerProgram> instances,
                                  double train_fraction = 0.5);
};

// All bounds are asymptotic shapes evaluated with an explicit constant
// factor (default 1). Logs are base 2.
struct PdimBoundSpec {
  enum class Family {
    SingleCut,       // m log(m(alpha+beta+n))
    SequentialCuts,  // m W^2 log(m W (alpha+beta+n))
    Waves,           // m k^2 W^2 log(m k W (alpha+beta+n))
    ScoringPolicy,   // d log(r d)
    TreeSearch       // d kappa sum_j log T_j + d log d
  };

  Family family = Family::SingleCut;
  double m = 1, n = 1, alpha = 1, beta = 1;
  double waves = 1;      // W
  double wave_size = 1;  // k
  double d = 1, r = 1;
  double kappa = 1;
  std::vector<double> step_actions;  // T_1..T_t
  double constant = 1;

  static PdimBoundSpec single_cut(double m, double n, double alpha,
                                  double beta);
  static PdimBoundSpec sequential(double m, double n, double alpha,
                                  double beta, double w);
  static PdimBoundSpec waves_family(double m, double n, double alpha,
                                    double beta, double w, double k);
  static PdimBoundSpec scoring_policy(double d, double r);
  static PdimBoundSpec tree_search(double d, double kappa,
                                   std::vector<double> step_actions);
};

double pdim_bound(const PdimBoundSpec& spec);

// N = ceil(C * (kappa/eps)^2 * (pdim + ln(1/delta))).
long long sample_size(double eps, double delta, double pdim, double kappa,
                      double constant = 1);

struct ErmCandidateStats {
  std::size_t id = 0;
  double train_mean = 0;
  double test_mean = 0;
  double gap = 0;  // |train_mean - test_mean|
  bool selected = false;
};

struct ErmResult {
  std::size_t best_index = 0;
  std::vector<ErmCandidateStats> table;

  const ErmCandidateStats& best() const { return table[best_index]; }
};

// Argmin of mean evaluator value over the train split; lowest index wins
// ties. evaluate(candidate, instance) should already clamp tree sizes to
// [1, kappa].
ErmResult erm_learn(
    const SampleSet& samples, std::size_t num_candidates,
    const std::function<double(std::size_t, const IntegerProgram&)>& evaluate,
    int jobs = 1);

// Clamps a tree size into the [1, kappa] utility range.
double clamp_tree_size(long long tree_size, long long kappa);

struct RademacherEstimate {
  double estimate = 0;
  double std_error = 0;
  std::size_t draws = 0;
};

// Monte-Carlo estimate of E_sigma[sup_f (1/N) sum_i sigma_i f(y_i)] over
// uniform +-1 vectors; sup over the finite candidate rows of `values`.
RademacherEstimate empirical_rademacher(
    const std::vector<std::vector<double>>& values, std::size_t draws,
    std::uint64_t seed);

// Exhaustive enumeration of all 2^N sign vectors; oracle for small N.
double empirical_rademacher_exact(const std::vector<std::vector<double>>& values);

// Data-dependent bound shape: C * kappa * sqrt(pdim(alpha_N, beta_N) / N)
// with alpha_N, beta_N the max sample norms. The Dudley-type constant is
// folded into C.
double data_dependent_rademacher_bound(const SampleSet& samples, double waves,
                                       double wave_size, double kappa,
                                       double constant = 1);

}  // namespace cglab
