#include <doctest.h>

#include <cmath>

#include "cglab/cuts.hpp"
#include "cglab/rng.hpp"

using namespace cglab;

namespace {

RatVec ratv(std::initializer_list<Rational> xs) { return rat_vec(xs); }

CutParameters random_sequential(Rng& rng, Index m, int w, long den = 24) {
  std::vector<RatVec> us;
  for (int step = 0; step < w; ++step) {
    RatVec u(m + step);
    for (Index i = 0; i < u.size(); ++i) u[i] = rng.unit(den);
    us.push_back(std::move(u));
  }
  return CutParameters::sequential(std::move(us));
}

}  // namespace

TEST_CASE("single cut floors on the two-row instance") {
  const IntegerProgram ip = make_jeroslow(3);

  // u1 - u2 in [1/2, 2/3): coefficients 1, offset 1.
  const Cut tight = cg_cut(ip.matrix(), ip.rhs(), ratv({{3, 4}, {1, 5}}));
  for (Index j = 0; j < 3; ++j) CHECK(tight.alpha[j] == Rational(1));
  CHECK(tight.beta == Rational(1));

  // u1 - u2 in [2/3, 1): offset grows to 2.
  const Cut loose = cg_cut(ip.matrix(), ip.rhs(), ratv({{9, 10}, {1, 5}}));
  for (Index j = 0; j < 3; ++j) CHECK(loose.alpha[j] == Rational(1));
  CHECK(loose.beta == Rational(2));

  // Zero multipliers make the vacuous cut.
  const Cut zero = cg_cut(ip.matrix(), ip.rhs(), ratv({0, 0}));
  CHECK(zero.alpha_is_zero());
  CHECK(zero.beta == Rational(0));

  CHECK_THROWS_AS(cg_cut(ip.matrix(), ip.rhs(), ratv({1})),
                  std::invalid_argument);
  CHECK_THROWS_AS(cg_cut(ip.matrix(), ip.rhs(), ratv({{3, 2}, 0})),
                  std::invalid_argument);
}

TEST_CASE("sequential chain on the worked one-variable instance") {
  // A = [3], b = [4]: first cut floor(3/2) x <= floor(4/2), second cut uses
  // the extended column (3, 1) and rhs (4, 2).
  RatVec c(1);
  c[0] = Rational(0);
  RatMat a(1, 1);
  a(0, 0) = Rational(3);
  RatVec b(1);
  b[0] = Rational(4);
  const IntegerProgram ip(c, a, b);

  const CutParameters params = CutParameters::sequential(
      {ratv({{1, 2}}), ratv({{1, 2}, {1, 2}})});
  const ExtendedInstance ext = sequential_cuts(ip, params);
  REQUIRE(ext.added_rows.size() == 2);
  CHECK(ext.added_rows[0].alpha[0] == Rational(1));
  CHECK(ext.added_rows[0].beta == Rational(2));
  CHECK(ext.added_rows[1].alpha[0] == Rational(2));
  CHECK(ext.added_rows[1].beta == Rational(3));

  const RatVec col = ext.a_tilde(0, 1);
  CHECK(col[0] == Rational(3));
  CHECK(col[1] == Rational(1));
  const RatVec rhs = ext.b_tilde(1);
  CHECK(rhs[0] == Rational(4));
  CHECK(rhs[1] == Rational(2));

  // Length mismatches are rejected.
  CHECK_THROWS_AS(
      sequential_cuts(ip, CutParameters::sequential({ratv({{1, 2}, 0})})),
      std::invalid_argument);
}

TEST_CASE("W = 1 chain equals the single cut") {
  const IntegerProgram ip = make_jeroslow(5);
  const RatVec u = ratv({{3, 4}, {1, 5}});
  const Cut direct = cg_cut(ip.matrix(), ip.rhs(), u);
  const ExtendedInstance ext =
      sequential_cuts(ip, CutParameters::sequential({u}));
  REQUIRE(ext.added_rows.size() == 1);
  CHECK(ext.added_rows[0].row_str() == direct.row_str());
}

TEST_CASE("one wave of two cuts works from the original system") {
  const IntegerProgram ip = make_jeroslow(3);
  const CutParameters params = CutParameters::waves(
      {ratv({{3, 4}, {1, 5}}), ratv({{9, 10}, {1, 5}})}, 2);
  const ExtendedInstance ext = wave_cuts(ip, params);
  REQUIRE(ext.added_rows.size() == 2);
  CHECK(ext.added_rows[0].row_str() == "1 1 1 <= 1");
  CHECK(ext.added_rows[1].row_str() == "1 1 1 <= 2");

  // Same two rows as two independent single cuts.
  CHECK(ext.added_rows[0].row_str() ==
        cg_cut(ip.matrix(), ip.rhs(), params.vectors[0]).row_str());
  CHECK(ext.added_rows[1].row_str() ==
        cg_cut(ip.matrix(), ip.rhs(), params.vectors[1]).row_str());

  // Degenerate 1x1 wave is exactly cg_cut.
  const CutParameters one = CutParameters::waves({ratv({{3, 4}, {1, 5}})}, 1);
  CHECK(wave_cuts(ip, one).added_rows[0].row_str() ==
        cg_cut(ip.matrix(), ip.rhs(), params.vectors[0]).row_str());
}

TEST_CASE("waves match their zero-padded sequential expansion") {
  Rng rng(555);
  for (int trial = 0; trial < 60; ++trial) {
    const IntegerProgram ip = random_packing_ip(
        rng.next(), 2 + static_cast<int>(rng.below(3)),
        1 + static_cast<int>(rng.below(3)), 4);
    const int k = 1 + static_cast<int>(rng.below(3));
    const int waves = 1 + static_cast<int>(rng.below(2));

    std::vector<RatVec> us;
    for (int w = 0; w < waves; ++w) {
      for (int cidx = 0; cidx < k; ++cidx) {
        RatVec u(ip.num_constraints() + static_cast<Index>(k) * w);
        for (Index i = 0; i < u.size(); ++i) u[i] = rng.unit(16);
        us.push_back(std::move(u));
      }
    }
    const CutParameters params = CutParameters::waves(us, k);
    const ExtendedInstance via_waves = wave_cuts(ip, params);
    const ExtendedInstance via_chain =
        sequential_cuts(ip, zero_padded_expansion(params));
    REQUIRE(via_waves.added_rows.size() == via_chain.added_rows.size());
    for (std::size_t r = 0; r < via_waves.added_rows.size(); ++r) {
      CHECK(via_waves.added_rows[r].row_str() ==
            via_chain.added_rows[r].row_str());
    }
  }
}

TEST_CASE("chain floors obey the doubling bound") {
  // |floor(u_w' a~_i^w)| <= 2^(w-1) ||a_i||_1 at every step.
  Rng rng(777);
  for (int trial = 0; trial < 80; ++trial) {
    const IntegerProgram ip = random_packing_ip(
        rng.next(), 2 + static_cast<int>(rng.below(3)),
        1 + static_cast<int>(rng.below(3)), 5);
    const int w = 1 + static_cast<int>(rng.below(3));
    const CutParameters params =
        random_sequential(rng, ip.num_constraints(), w);
    const ExtendedInstance ext = sequential_cuts(ip, params);
    for (std::size_t step = 0; step < ext.added_rows.size(); ++step) {
      const Rational scale(1L << step);  // 2^(w-1), w = step + 1
      for (Index i = 0; i < ip.num_vars(); ++i) {
        CHECK(abs(ext.added_rows[step].alpha[i]) <=
              scale * l1_norm(ip.column(i)));
      }
    }
  }
}

TEST_CASE("cg cuts never separate integral points") {
  Rng rng(31337);
  int checked = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(3));
    const IntegerProgram ip = random_packing_ip(
        rng.next(), n, 1 + static_cast<int>(rng.below(3)), 3);
    RatVec u(ip.num_constraints());
    for (Index i = 0; i < u.size(); ++i) u[i] = rng.unit(50);
    const Cut cut = cg_cut(ip.matrix(), ip.rhs(), u);
    const IntVec box = IntVec::Constant(n, 4);
    const ValidityReport report = is_valid_cut(ip, cut, box);
    CHECK(report.valid);
    CHECK(!report.witness);
    ++checked;
  }
  CHECK(checked == 120);

  // An invalid hand-built cut is refuted with a witness.
  const IntegerProgram ip = random_packing_ip(5, 2, 2, 3);
  Cut bad;
  bad.alpha = ratv({1, 0});
  bad.beta = Rational(-1);  // x1 <= -1 separates the feasible origin
  const ValidityReport report = is_valid_cut(ip, bad, IntVec::Constant(2, 3));
  CHECK(!report.valid);
  REQUIRE(report.witness.has_value());
  CHECK((*report.witness)[0] == 0);
  CHECK((*report.witness)[1] == 0);

  // Oversized boxes propagate the budget error instead of truncating.
  IntegerProgram free_ip(RatVec::Zero(2), RatMat(0, 2), RatVec(0));
  Cut any;
  any.alpha = ratv({1, 1});
  any.beta = Rational(1);
  CHECK_THROWS_AS(
      is_valid_cut(free_ip, any, IntVec::Constant(2, 100000), 1000),
      BudgetError);
}

TEST_CASE("score formulas on pinned states") {
  CutScoringContext ctx;
  ctx.x_lp = ratv({{1, 2}, {1, 2}});
  ctx.objective = ratv({1, 0});
  ctx.integral_mask = {true, true};

  Cut cut;
  cut.alpha = ratv({1, 0});
  cut.beta = Rational(0);

  // Efficacy: (1/2 - 0) / 1.
  CHECK(score(ScoreRule::Efficacy, cut, ctx).value == doctest::Approx(0.5));

  // Parallelism: aligned = 1, orthogonal = 0.
  CHECK(score(ScoreRule::Parallelism, cut, ctx).value == doctest::Approx(1.0));
  Cut ortho;
  ortho.alpha = ratv({0, 1});
  ortho.beta = Rational(0);
  CHECK(score(ScoreRule::Parallelism, ortho, ctx).value ==
        doctest::Approx(0.0));

  // Directed cutoff with incumbent at the origin: (1/2)/(1/2) * sqrt(1/2).
  ctx.incumbent = ratv({0, 0});
  const ScoreValue dc = score(ScoreRule::DirectedCutoff, cut, ctx);
  CHECK(!dc.used_fallback);
  CHECK(dc.value == doctest::Approx(std::sqrt(0.5)).epsilon(1e-9));

  // Pure integer program: integral support is 1.
  CHECK(score(ScoreRule::IntegralSupport, cut, ctx).value ==
        doctest::Approx(1.0));
}

TEST_CASE("score edge cases") {
  CutScoringContext ctx;
  ctx.x_lp = ratv({{1, 2}, {1, 2}});
  ctx.objective = ratv({0, 0});
  ctx.integral_mask = {true, true};

  Cut cut;
  cut.alpha = ratv({1, 0});
  cut.beta = Rational(0);

  // Zero objective: parallelism defined as 0.
  CHECK(score(ScoreRule::Parallelism, cut, ctx).value == 0.0);

  // No incumbent: directed cutoff falls back to efficacy, flagged.
  const ScoreValue fb = score(ScoreRule::DirectedCutoff, cut, ctx);
  CHECK(fb.used_fallback);
  CHECK(fb.value == doctest::Approx(0.5));

  // Incumbent parallel to the cut: denominator vanishes, fallback again.
  ctx.incumbent = ratv({{1, 2}, {3, 2}});
  const ScoreValue par = score(ScoreRule::DirectedCutoff, cut, ctx);
  CHECK(par.used_fallback);
  CHECK(par.value == doctest::Approx(0.5));

  // Zero-alpha cuts are signaled, not scored; integral support is 0.
  Cut zero;
  zero.alpha = ratv({0, 0});
  zero.beta = Rational(0);
  CHECK_THROWS_AS(score(ScoreRule::Efficacy, zero, ctx),
                  std::invalid_argument);
  CHECK(score(ScoreRule::IntegralSupport, zero, ctx).value == 0.0);
}

TEST_CASE("score range and sign properties") {
  Rng rng(909);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(3));
    const IntegerProgram ip = random_packing_ip(
        rng.next(), n, 1 + static_cast<int>(rng.below(3)), 4);
    RatVec u(ip.num_constraints());
    for (Index i = 0; i < u.size(); ++i) u[i] = rng.unit(40);
    const Cut cut = cg_cut(ip.matrix(), ip.rhs(), u);
    if (cut.alpha_is_zero()) continue;

    CutScoringContext ctx;
    ctx.x_lp = RatVec::Zero(n);
    for (Index j = 0; j < n; ++j) {
      ctx.x_lp[j] = Rational(static_cast<long>(rng.below(5)), 2);
    }
    ctx.objective = ip.objective();
    ctx.integral_mask.assign(static_cast<std::size_t>(n), true);

    const double parallelism = score(ScoreRule::Parallelism, cut, ctx).value;
    CHECK(parallelism >= 0.0);
    CHECK(parallelism <= 1.0 + 1e-12);
    const double support = score(ScoreRule::IntegralSupport, cut, ctx).value;
    CHECK(support >= 0.0);
    CHECK(support <= 1.0);

    // Efficacy is positive exactly when the cut separates x.
    const double eff = score(ScoreRule::Efficacy, cut, ctx).value;
    if (separates(cut, ctx.x_lp)) {
      CHECK(eff > 0.0);
    } else {
      CHECK(eff <= 0.0);
    }
  }
}
