#include "cglab/learn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cglab/parallel.hpp"
#include "cglab/rng.hpp"

namespace cglab {

namespace {

void split(SampleSet& s, double train_fraction) {
  if (train_fraction <= 0 || train_fraction > 1) {
    throw std::invalid_argument("train fraction must lie in (0, 1]");
  }
  const std::size_t n = s.instances.size();
  const std::size_t cut =
      std::max<std::size_t>(1, static_cast<std::size_t>(
                                   std::floor(train_fraction * n)));
  for (std::size_t i = 0; i < n; ++i) {
    (i < cut ? s.train : s.test).push_back(i);
  }
}

}  // namespace

SampleSet SampleSet::packing(std::uint64_t seed, std::size_t count, int n,
                             int m, int coeff_max, double train_fraction) {
  if (count == 0) throw std::invalid_argument("empty sample set");
  SampleSet s;
  s.seed = seed;
  for (std::size_t i = 0; i < count; ++i) {
    s.instances.push_back(
        random_packing_ip(Rng::derive(seed, i), n, m, coeff_max));
  }
  split(s, train_fraction);
  return s;
}

SampleSet SampleSet::from_instances(std::vector<IntegerProgram> instances,
                                    double train_fraction) {
  if (instances.empty()) throw std::invalid_argument("empty sample set");
  SampleSet s;
  s.instances = std::move(instances);
  split(s, train_fraction);
  return s;
}

PdimBoundSpec PdimBoundSpec::single_cut(double m, double n, double alpha,
                                        double beta) {
  PdimBoundSpec s;
  s.family = Family::SingleCut;
  s.m = m;
  s.n = n;
  s.alpha = alpha;
  s.beta = beta;
  return s;
}

PdimBoundSpec PdimBoundSpec::sequential(double m, double n, double alpha,
                                        double beta, double w) {
  PdimBoundSpec s = single_cut(m, n, alpha, beta);
  s.family = Family::SequentialCuts;
  s.waves = w;
  return s;
}

PdimBoundSpec PdimBoundSpec::waves_family(double m, double n, double alpha,
                                          double beta, double w, double k) {
  PdimBoundSpec s = sequential(m, n, alpha, beta, w);
  s.family = Family::Waves;
  s.wave_size = k;
  return s;
}

PdimBoundSpec PdimBoundSpec::scoring_policy(double d, double r) {
  PdimBoundSpec s;
  s.family = Family::ScoringPolicy;
  s.d = d;
  s.r = r;
  return s;
}

PdimBoundSpec PdimBoundSpec::tree_search(double d, double kappa,
                                         std::vector<double> step_actions) {
  PdimBoundSpec s;
  s.family = Family::TreeSearch;
  s.d = d;
  s.kappa = kappa;
  s.step_actions = std::move(step_actions);
  return s;
}

namespace {

double checked_log2(double arg) {
  if (!(arg > 0)) {
    throw std::invalid_argument("log of nonpositive argument");
  }
  return std::log2(arg);
}

void require_at_least_one(std::initializer_list<double> sizes) {
  for (const double s : sizes) {
    if (!(s >= 1)) throw std::invalid_argument("size arguments must be >= 1");
  }
}

}  // namespace

double pdim_bound(const PdimBoundSpec& spec) {
  const double c = spec.constant;
  if (!(c > 0)) throw std::invalid_argument("constant must be positive");
  switch (spec.family) {
    case PdimBoundSpec::Family::SingleCut:
      require_at_least_one({spec.m, spec.n, spec.alpha, spec.beta});
      return c * spec.m *
             checked_log2(spec.m * (spec.alpha + spec.beta + spec.n));
    case PdimBoundSpec::Family::SequentialCuts:
      require_at_least_one({spec.m, spec.n, spec.alpha, spec.beta, spec.waves});
      return c * spec.m * spec.waves * spec.waves *
             checked_log2(spec.m * spec.waves *
                          (spec.alpha + spec.beta + spec.n));
    case PdimBoundSpec::Family::Waves:
      require_at_least_one({spec.m, spec.n, spec.alpha, spec.beta, spec.waves,
                            spec.wave_size});
      return c * spec.m * spec.wave_size * spec.wave_size * spec.waves *
             spec.waves *
             checked_log2(spec.m * spec.wave_size * spec.waves *
                          (spec.alpha + spec.beta + spec.n));
    case PdimBoundSpec::Family::ScoringPolicy:
      require_at_least_one({spec.d, spec.r});
      return c * spec.d * checked_log2(spec.r * spec.d);
    case PdimBoundSpec::Family::TreeSearch: {
      require_at_least_one({spec.d, spec.kappa});
      double logs = 0;
      for (const double t : spec.step_actions) {
        require_at_least_one({t});
        logs += checked_log2(t);
      }
      return c * (spec.d * spec.kappa * logs + spec.d * checked_log2(spec.d));
    }
  }
  throw std::logic_error("unknown pdim family");
}

long long sample_size(double eps, double delta, double pdim, double kappa,
                      double constant) {
  if (!(eps > 0 && eps < 1) || !(delta > 0 && delta < 1)) {
    throw std::invalid_argument("eps and delta must lie in (0, 1)");
  }
  if (!(pdim > 0) || !(kappa > 0) || !(constant > 0)) {
    throw std::invalid_argument("pdim, kappa, constant must be positive");
  }
  const double raw = constant * (kappa * kappa) / (eps * eps) *
                     (pdim + std::log(1.0 / delta));
  if (!(raw < 9.0e18)) throw std::invalid_argument("sample size overflows");
  return static_cast<long long>(std::ceil(raw));
}

ErmResult erm_learn(
    const SampleSet& samples, std::size_t num_candidates,
    const std::function<double(std::size_t, const IntegerProgram&)>& evaluate,
    int jobs) {
  if (num_candidates == 0) throw std::invalid_argument("no candidates");

  // Value matrix over all (candidate, instance) pairs; flat index order keeps
  // the parallel fan-out deterministic.
  const std::size_t cols = samples.instances.size();
  std::vector<double> values(num_candidates * cols);
  parallel_for(
      values.size(),
      [&](std::size_t flat) {
        const std::size_t cand = flat / cols;
        const std::size_t inst = flat % cols;
        values[flat] = evaluate(cand, samples.instances[inst]);
      },
      jobs);

  const auto mean_over = [&](std::size_t cand,
                             const std::vector<std::size_t>& idx) {
    if (idx.empty()) return 0.0;
    double acc = 0;
    for (const std::size_t i : idx) acc += values[cand * cols + i];
    return acc / static_cast<double>(idx.size());
  };

  ErmResult out;
  for (std::size_t cand = 0; cand < num_candidates; ++cand) {
    ErmCandidateStats stats;
    stats.id = cand;
    stats.train_mean = mean_over(cand, samples.train);
    stats.test_mean = mean_over(cand, samples.test);
    stats.gap = std::abs(stats.train_mean - stats.test_mean);
    out.table.push_back(stats);
    if (stats.train_mean < out.table[out.best_index].train_mean) {
      out.best_index = cand;
    }
  }
  out.table[out.best_index].selected = true;
  return out;
}

double clamp_tree_size(long long tree_size, long long kappa) {
  return static_cast<double>(std::clamp(tree_size, 1LL, kappa));
}

RademacherEstimate empirical_rademacher(
    const std::vector<std::vector<double>>& values, std::size_t draws,
    std::uint64_t seed) {
  if (values.empty() || values[0].empty()) {
    throw std::invalid_argument("empty value matrix");
  }
  if (draws == 0) throw std::invalid_argument("need at least one sigma draw");
  const std::size_t n = values[0].size();
  for (const auto& row : values) {
    if (row.size() != n) throw std::invalid_argument("ragged value matrix");
  }

  Rng rng(seed);
  std::vector<double> sigma(n);
  double sum = 0;
  double sum_sq = 0;
  for (std::size_t d = 0; d < draws; ++d) {
    for (std::size_t i = 0; i < n; ++i) {
      sigma[i] = rng.below(2) == 0 ? -1.0 : 1.0;
    }
    double sup = -std::numeric_limits<double>::infinity();
    for (const auto& row : values) {
      double acc = 0;
      for (std::size_t i = 0; i < n; ++i) acc += sigma[i] * row[i];
      sup = std::max(sup, acc / static_cast<double>(n));
    }
    sum += sup;
    sum_sq += sup * sup;
  }

  RademacherEstimate est;
  est.draws = draws;
  est.estimate = sum / static_cast<double>(draws);
  if (draws > 1) {
    const double var =
        (sum_sq - sum * sum / static_cast<double>(draws)) /
        static_cast<double>(draws - 1);
    est.std_error = std::sqrt(std::max(0.0, var) / static_cast<double>(draws));
  }
  return est;
}

double empirical_rademacher_exact(
    const std::vector<std::vector<double>>& values) {
  if (values.empty() || values[0].empty()) {
    throw std::invalid_argument("empty value matrix");
  }
  const std::size_t n = values[0].size();
  if (n > 24) throw BudgetError("exhaustive sign enumeration needs N <= 24");

  double total = 0;
  const std::uint64_t count = 1ull << n;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    double sup = -std::numeric_limits<double>::infinity();
    for (const auto& row : values) {
      double acc = 0;
      for (std::size_t i = 0; i < n; ++i) {
        acc += ((mask >> i) & 1 ? 1.0 : -1.0) * row[i];
      }
      sup = std::max(sup, acc / static_cast<double>(n));
    }
    total += sup;
  }
  return total / static_cast<double>(count);
}

double data_dependent_rademacher_bound(const SampleSet& samples, double waves,
                                       double wave_size, double kappa,
                                       double constant) {
  if (samples.instances.empty()) {
    throw std::invalid_argument("empty sample set");
  }
  double alpha = 1;
  double beta = 1;
  double n = 1;
  double m = 1;
  for (const IntegerProgram& ip : samples.instances) {
    alpha = std::max(alpha, ip.norm_a11().to_double());
    beta = std::max(beta, ip.norm_b1().to_double());
    n = std::max(n, static_cast<double>(ip.num_vars()));
    m = std::max(m, static_cast<double>(ip.num_constraints()));
  }
  const double pdim = pdim_bound(
      PdimBoundSpec::waves_family(m, n, alpha, beta, waves, wave_size));
  return constant * kappa *
         std::sqrt(pdim / static_cast<double>(samples.instances.size()));
}

}  // namespace cglab
