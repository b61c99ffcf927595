#include <doctest.h>

#include <cmath>
#include <sstream>

#include "cglab/learn.hpp"
#include "cglab/rng.hpp"
#include "cglab/search.hpp"

using namespace cglab;

namespace {

RatVec ratv(std::initializer_list<Rational> xs) { return rat_vec(xs); }

}  // namespace

TEST_CASE("pdim bound formulas") {
  // Two-constraint instance with ||A||_11 = 12, ||b||_1 = 6, n = 3.
  const double single = pdim_bound(PdimBoundSpec::single_cut(2, 3, 12, 6));
  CHECK(single == doctest::Approx(2.0 * std::log2(42.0)).epsilon(1e-12));
  CHECK(single == doctest::Approx(10.7846).epsilon(1e-4));

  // W = 1 chains collapse to the single-cut expression.
  CHECK(pdim_bound(PdimBoundSpec::sequential(2, 3, 12, 6, 1)) ==
        doctest::Approx(single).epsilon(1e-12));
  // k = 1, W = 1 waves likewise.
  CHECK(pdim_bound(PdimBoundSpec::waves_family(2, 3, 12, 6, 1, 1)) ==
        doctest::Approx(single).epsilon(1e-12));

  CHECK(pdim_bound(PdimBoundSpec::scoring_policy(4, 10)) ==
        doctest::Approx(4.0 * std::log2(40.0)).epsilon(1e-12));

  // Variable selection only: d kappa log n + d log d.
  const double vs = pdim_bound(PdimBoundSpec::tree_search(3, 50, {8}));
  CHECK(vs ==
        doctest::Approx(3.0 * 50.0 * std::log2(8.0) + 3.0 * std::log2(3.0))
            .epsilon(1e-12));

  CHECK_THROWS_AS(pdim_bound(PdimBoundSpec::single_cut(0.5, 3, 12, 6)),
                  std::invalid_argument);
  PdimBoundSpec negative = PdimBoundSpec::scoring_policy(4, 10);
  negative.constant = -1;
  CHECK_THROWS_AS(pdim_bound(negative), std::invalid_argument);
}

TEST_CASE("pdim bound is monotone in every size argument") {
  Rng rng(314);
  for (int trial = 0; trial < 100; ++trial) {
    const double m = 1 + static_cast<double>(rng.below(8));
    const double n = 1 + static_cast<double>(rng.below(8));
    const double alpha = 1 + static_cast<double>(rng.below(40));
    const double beta = 1 + static_cast<double>(rng.below(20));
    const double w = 1 + static_cast<double>(rng.below(4));
    const double k = 1 + static_cast<double>(rng.below(4));
    const double base =
        pdim_bound(PdimBoundSpec::waves_family(m, n, alpha, beta, w, k));
    CHECK(pdim_bound(PdimBoundSpec::waves_family(m + 1, n, alpha, beta, w, k)) >= base);
    CHECK(pdim_bound(PdimBoundSpec::waves_family(m, n + 1, alpha, beta, w, k)) >= base);
    CHECK(pdim_bound(PdimBoundSpec::waves_family(m, n, alpha + 3, beta, w, k)) >= base);
    CHECK(pdim_bound(PdimBoundSpec::waves_family(m, n, alpha, beta + 3, w, k)) >= base);
    CHECK(pdim_bound(PdimBoundSpec::waves_family(m, n, alpha, beta, w + 1, k)) >= base);
    CHECK(pdim_bound(PdimBoundSpec::waves_family(m, n, alpha, beta, w, k + 1)) >= base);
  }
}

TEST_CASE("sample size calculator") {
  CHECK(sample_size(0.1, 0.01, 10, 100, 1) == 14'605'171);

  // Halving epsilon quadruples the pre-ceiling count.
  const double n1 = 1.0 * (100.0 * 100.0) / (0.1 * 0.1) * (10 + std::log(100.0));
  const double n2 = 1.0 * (100.0 * 100.0) / (0.05 * 0.05) * (10 + std::log(100.0));
  CHECK(n2 / n1 == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(sample_size(0.05, 0.01, 10, 100, 1) >= 4 * (sample_size(0.1, 0.01, 10, 100, 1) - 1));

  // Monotone in pdim and kappa.
  CHECK(sample_size(0.1, 0.01, 11, 100, 1) >= sample_size(0.1, 0.01, 10, 100, 1));
  CHECK(sample_size(0.1, 0.01, 10, 120, 1) >= sample_size(0.1, 0.01, 10, 100, 1));
  // Decreasing in epsilon.
  CHECK(sample_size(0.2, 0.01, 10, 100, 1) <= sample_size(0.1, 0.01, 10, 100, 1));

  CHECK_THROWS_AS(sample_size(0.0, 0.01, 10, 100, 1), std::invalid_argument);
  CHECK_THROWS_AS(sample_size(0.1, 1.5, 10, 100, 1), std::invalid_argument);
  CHECK_THROWS_AS(sample_size(0.1, 0.01, -1, 100, 1), std::invalid_argument);
}

TEST_CASE("sample sets are seeded, split, and replayable") {
  const SampleSet a = SampleSet::packing(5, 10, 3, 2, 4);
  const SampleSet b = SampleSet::packing(5, 10, 3, 2, 4);
  REQUIRE(a.instances.size() == 10);
  CHECK(a.train.size() == 5);
  CHECK(a.test.size() == 5);
  for (const std::size_t i : a.train) {
    for (const std::size_t j : a.test) CHECK(i != j);
  }
  for (std::size_t i = 0; i < 10; ++i) {
    std::ostringstream sa, sb;
    write_instance(sa, a.instances[i]);
    write_instance(sb, b.instances[i]);
    CHECK(sa.str() == sb.str());
  }
}

TEST_CASE("erm picks the terminating multiplier on the point mass") {
  // Point-mass distribution on the odd infeasible instance: one candidate
  // empties the relaxation (tree 1), the other leaves it intact (tree >= 4).
  std::vector<IntegerProgram> copies(4, make_jeroslow(5));
  const SampleSet samples = SampleSet::from_instances(std::move(copies));

  const std::vector<CutParameters> candidates = {
      CutParameters::single(ratv({{3, 4}, {1, 5}})),     // diff 11/20
      CutParameters::single(ratv({{19, 20}, {1, 20}}))}; // diff 9/10

  const long long kappa = 64;
  const ErmResult result = erm_learn(
      samples, candidates.size(),
      [&](std::size_t cand, const IntegerProgram& ip) {
        const SearchResult res =
            run_branch_and_cut(ip, ScoringWeights::defaults(),
                               CutConfig::fixed_root(candidates[cand]), kappa);
        return clamp_tree_size(res.tree_size, kappa);
      },
      2);

  CHECK(result.best_index == 0);
  CHECK(result.best().train_mean == 1.0);
  CHECK(result.table[1].train_mean >= 4.0);
  CHECK(result.best().selected);
  CHECK(!result.table[1].selected);
  CHECK(result.best().gap == 0.0);  // identical instances on both splits
}

TEST_CASE("single candidate is returned unconditionally") {
  const SampleSet samples = SampleSet::packing(11, 6, 3, 2, 3);
  const ErmResult result = erm_learn(
      samples, 1, [](std::size_t, const IntegerProgram&) { return 5.0; }, 1);
  CHECK(result.best_index == 0);
  CHECK(result.best().train_mean == 5.0);
  CHECK(result.best().test_mean == 5.0);
}

TEST_CASE("erm train mean of the winner is minimal and gaps are logged") {
  // 50/50 split over 40 seeded instances, 20 candidate weight vectors for
  // the cut-selection step.
  const long long kappa = 64;
  const SampleSet samples = SampleSet::packing(2024, 40, 4, 3, 3);
  const std::vector<RatVec> family = half_integral_family(3, 4);
  std::vector<ScoringWeights> candidates;
  Rng rng(606);
  for (int c = 0; c < 20; ++c) {
    ScoringWeights w = ScoringWeights::defaults();
    for (Index i = 0; i < w.cut.size(); ++i) {
      w.cut[i] = static_cast<double>(rng.below(9)) / 4.0;
    }
    candidates.push_back(std::move(w));
  }
  const ErmResult result = erm_learn(
      samples, candidates.size(),
      [&](std::size_t cand, const IntegerProgram& ip) {
        const SearchResult res = run_branch_and_cut(
            ip, candidates[cand], CutConfig::select(family), kappa);
        return clamp_tree_size(res.tree_size, kappa);
      },
      2);

  REQUIRE(result.table.size() == 20);
  double max_gap = 0;
  for (const ErmCandidateStats& row : result.table) {
    CHECK(row.train_mean >= result.best().train_mean);
    CHECK(row.train_mean >= 1.0);
    max_gap = std::max(max_gap, row.gap);
  }
  CHECK(result.best().gap <= max_gap);
}

TEST_CASE("rademacher estimate of a singleton zero class is exactly zero") {
  const std::vector<std::vector<double>> zero = {{0, 0, 0}};
  const RademacherEstimate est = empirical_rademacher(zero, 500, 9);
  CHECK(est.estimate == 0.0);
  CHECK(empirical_rademacher_exact(zero) == 0.0);
}

TEST_CASE("one candidate, one sample: symmetric around zero") {
  const std::vector<std::vector<double>> values = {{7.0}};
  CHECK(empirical_rademacher_exact(values) == 0.0);
  const RademacherEstimate est = empirical_rademacher(values, 10'000, 17);
  // |estimate| <= 3 standard errors of the true value 0.
  CHECK(std::abs(est.estimate) <= 3.0 * est.std_error);
}

TEST_CASE("two-candidate exhaustive enumerations") {
  // sups over the four sign vectors: 1, 1, 0, 0.
  CHECK(empirical_rademacher_exact({{1, 1}, {1, -1}}) == 0.5);
  // sups: 3/2, 3/2, 1/2, -1/2.
  CHECK(empirical_rademacher_exact({{1, 2}, {2, -1}}) == 0.75);

  const RademacherEstimate est =
      empirical_rademacher({{1, 2}, {2, -1}}, 10'000, 4242);
  CHECK(std::abs(est.estimate - 0.75) <= 3.0 * est.std_error);
}

TEST_CASE("monte carlo agrees with exhaustive enumeration within 3 sigma") {
  Rng rng(2468);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<std::vector<double>> values(
        2 + rng.below(3), std::vector<double>(3 + rng.below(3)));
    for (auto& row : values) {
      for (double& v : row) v = static_cast<double>(rng.range(-4, 4));
    }
    const double exact = empirical_rademacher_exact(values);
    const RademacherEstimate est =
        empirical_rademacher(values, 20'000, rng.next());
    CHECK(std::abs(est.estimate - exact) <= 3.0 * est.std_error + 1e-12);
  }
}

TEST_CASE("estimator input validation") {
  CHECK_THROWS_AS(empirical_rademacher({}, 10, 1), std::invalid_argument);
  CHECK_THROWS_AS(empirical_rademacher({{1.0}, {}}, 10, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(empirical_rademacher({{1.0}}, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(
      empirical_rademacher_exact({std::vector<double>(30, 1.0)}),
      BudgetError);
}

TEST_CASE("data-dependent bound follows the formula") {
  const SampleSet samples = SampleSet::packing(3, 8, 3, 2, 4);
  double alpha = 1, beta = 1;
  for (const IntegerProgram& ip : samples.instances) {
    alpha = std::max(alpha, ip.norm_a11().to_double());
    beta = std::max(beta, ip.norm_b1().to_double());
  }
  const double pdim =
      pdim_bound(PdimBoundSpec::waves_family(2, 3, alpha, beta, 2, 2));
  const double expect = 64.0 * std::sqrt(pdim / 8.0);
  CHECK(data_dependent_rademacher_bound(samples, 2, 2, 64) ==
        doctest::Approx(expect).epsilon(1e-12));
}
