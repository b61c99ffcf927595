#include "cglab/cuts.hpp"

#include <cmath>
#include <sstream>

namespace cglab {

bool Cut::alpha_is_zero() const {
  for (Index i = 0; i < alpha.size(); ++i) {
    if (!alpha[i].is_zero()) return false;
  }
  return true;
}

std::string Cut::row_str() const {
  std::ostringstream os;
  for (Index i = 0; i < alpha.size(); ++i) os << alpha[i].str() << ' ';
  os << "<= " << beta.str();
  return os.str();
}

CutParameters CutParameters::single(RatVec u) {
  CutParameters p;
  p.layout = Layout::Single;
  p.vectors.push_back(std::move(u));
  return p;
}

CutParameters CutParameters::sequential(std::vector<RatVec> us) {
  CutParameters p;
  p.layout = Layout::Sequential;
  p.vectors = std::move(us);
  return p;
}

CutParameters CutParameters::waves(std::vector<RatVec> us, int k) {
  CutParameters p;
  p.layout = Layout::Waves;
  p.wave_size = k;
  p.vectors = std::move(us);
  return p;
}

void CutParameters::validate(Index m) const {
  const auto expect_len = [&](std::size_t idx) -> Index {
    switch (layout) {
      case Layout::Single: return m;
      case Layout::Sequential: return m + static_cast<Index>(idx);
      case Layout::Waves:
        return m + static_cast<Index>(wave_size) *
                       static_cast<Index>(idx / static_cast<std::size_t>(wave_size));
    }
    return -1;
  };
  if (vectors.empty()) throw std::invalid_argument("no multiplier vectors");
  if (layout == Layout::Single && vectors.size() != 1) {
    throw std::invalid_argument("Single layout takes exactly one vector");
  }
  if (layout == Layout::Waves) {
    if (wave_size < 1) throw std::invalid_argument("wave size must be >= 1");
    if (vectors.size() % static_cast<std::size_t>(wave_size) != 0) {
      throw std::invalid_argument("Waves layout needs W*k vectors");
    }
  }
  for (std::size_t idx = 0; idx < vectors.size(); ++idx) {
    if (vectors[idx].size() != expect_len(idx)) {
      throw std::invalid_argument("multiplier vector " + std::to_string(idx) +
                                  " has wrong length");
    }
    for (Index j = 0; j < vectors[idx].size(); ++j) {
      const Rational& v = vectors[idx][j];
      if (v.sign() < 0 || v > Rational(1)) {
        throw std::invalid_argument("multiplier entries must lie in [0, 1]");
      }
    }
  }
}

RatVec ExtendedInstance::a_tilde(Index col, int steps) const {
  const Index m = base.num_constraints();
  RatVec v(m + steps);
  for (Index i = 0; i < m; ++i) v[i] = base.matrix()(i, col);
  for (int w = 0; w < steps; ++w) v[m + w] = added_rows[w].alpha[col];
  return v;
}

RatVec ExtendedInstance::b_tilde(int steps) const {
  const Index m = base.num_constraints();
  RatVec v(m + steps);
  for (Index i = 0; i < m; ++i) v[i] = base.rhs()[i];
  for (int w = 0; w < steps; ++w) v[m + w] = added_rows[w].beta;
  return v;
}

RatMat ExtendedInstance::full_matrix() const {
  const Index m = base.num_constraints();
  const Index n = base.num_vars();
  RatMat out(total_rows(), n);
  out.topRows(m) = base.matrix();
  for (std::size_t w = 0; w < added_rows.size(); ++w) {
    for (Index j = 0; j < n; ++j) {
      out(m + static_cast<Index>(w), j) = added_rows[w].alpha[j];
    }
  }
  return out;
}

RatVec ExtendedInstance::full_rhs() const {
  RatVec out(total_rows());
  out.head(base.num_constraints()) = base.rhs();
  for (std::size_t w = 0; w < added_rows.size(); ++w) {
    out[base.num_constraints() + static_cast<Index>(w)] = added_rows[w].beta;
  }
  return out;
}

Cut cg_cut(const RatMat& a, const RatVec& b, const RatVec& u) {
  if (u.size() != a.rows() || b.size() != a.rows()) {
    throw std::invalid_argument("cg_cut dimension mismatch");
  }
  for (Index i = 0; i < u.size(); ++i) {
    if (u[i].sign() < 0 || u[i] > Rational(1)) {
      throw std::invalid_argument("cg_cut multiplier outside [0, 1]");
    }
  }
  Cut cut;
  cut.alpha.resize(a.cols());
  for (Index j = 0; j < a.cols(); ++j) {
    Rational s;
    for (Index i = 0; i < a.rows(); ++i) s.addmul(u[i], a(i, j));
    cut.alpha[j] = Rational(s.floor());
  }
  cut.beta = Rational(dot(u, b).floor());
  cut.provenance_u = u;
  return cut;
}

namespace {

// Shared chain driver: applies the given multiplier sequence in order, each
// step seeing the matrix extended by all rows appended so far.
ExtendedInstance apply_chain(const IntegerProgram& ip,
                             const std::vector<RatVec>& us) {
  ExtendedInstance ext{ip, {}};
  for (const RatVec& u : us) {
    const int steps = static_cast<int>(ext.added_rows.size());
    const Index rows = ip.num_constraints() + steps;
    RatMat cur(rows, ip.num_vars());
    for (Index j = 0; j < ip.num_vars(); ++j) cur.col(j) = ext.a_tilde(j, steps);
    ext.added_rows.push_back(cg_cut(cur, ext.b_tilde(steps), u));
  }
  return ext;
}

}  // namespace

ExtendedInstance sequential_cuts(const IntegerProgram& ip,
                                 const CutParameters& params) {
  if (params.layout == CutParameters::Layout::Waves) {
    throw std::invalid_argument("sequential_cuts: got a Waves layout");
  }
  params.validate(ip.num_constraints());
  return apply_chain(ip, params.vectors);
}

ExtendedInstance wave_cuts(const IntegerProgram& ip,
                           const CutParameters& params) {
  if (params.layout != CutParameters::Layout::Waves) {
    throw std::invalid_argument("wave_cuts: expected a Waves layout");
  }
  params.validate(ip.num_constraints());

  const int k = params.wave_size;
  const int num_waves = params.num_steps() / k;
  ExtendedInstance ext{ip, {}};
  for (int w = 0; w < num_waves; ++w) {
    // All k cuts of this wave come from the pre-wave system.
    const int steps = w * k;
    const Index rows = ip.num_constraints() + steps;
    RatMat pre(rows, ip.num_vars());
    for (Index j = 0; j < ip.num_vars(); ++j) pre.col(j) = ext.a_tilde(j, steps);
    const RatVec pre_rhs = ext.b_tilde(steps);
    std::vector<Cut> wave;
    for (int c = 0; c < k; ++c) {
      wave.push_back(cg_cut(pre, pre_rhs, params.vectors[w * k + c]));
    }
    for (Cut& cut : wave) ext.added_rows.push_back(std::move(cut));
  }
  return ext;
}

CutParameters zero_padded_expansion(const CutParameters& waves_params) {
  if (waves_params.layout != CutParameters::Layout::Waves) {
    throw std::invalid_argument("zero_padded_expansion: expected Waves layout");
  }
  const int k = waves_params.wave_size;
  std::vector<RatVec> seq;
  for (std::size_t idx = 0; idx < waves_params.vectors.size(); ++idx) {
    const int j = static_cast<int>(idx) % k;  // position within its wave
    const RatVec& u = waves_params.vectors[idx];
    RatVec padded = RatVec::Zero(u.size() + j);
    padded.head(u.size()) = u;
    seq.push_back(std::move(padded));
  }
  return CutParameters::sequential(std::move(seq));
}

ValidityReport is_valid_cut(const IntegerProgram& ip, const Cut& cut,
                            const IntVec& box, std::uint64_t budget) {
  if (cut.alpha.size() != ip.num_vars()) {
    throw std::invalid_argument("cut dimension mismatch");
  }
  const IntegerPointSet pts = enumerate_integer_points(ip, box, budget);
  for (const IntVec& p : pts.points) {
    Rational lhs;
    for (Index j = 0; j < p.size(); ++j) lhs.addmul(cut.alpha[j], Rational(p[j]));
    if (lhs > cut.beta) return {false, p};
  }
  return {true, std::nullopt};
}

bool separates(const Cut& cut, const RatVec& x_lp) {
  return dot(cut.alpha, x_lp) > cut.beta;
}

std::vector<RatVec> half_integral_family(Index m, std::size_t count) {
  if (m < 1 || count < 1) {
    throw std::invalid_argument("half_integral_family needs m, count >= 1");
  }
  std::vector<RatVec> fam;
  for (Index i = 0; i < m && fam.size() < count; ++i) {
    RatVec u = RatVec::Zero(m);
    u[i] = Rational(1, 2);
    fam.push_back(std::move(u));
  }
  for (Index i = 0; i + 1 < m && fam.size() < count; ++i) {
    RatVec u = RatVec::Zero(m);
    u[i] = Rational(1, 2);
    u[i + 1] = Rational(1, 2);
    fam.push_back(std::move(u));
  }
  while (fam.size() < count) {
    fam.push_back(RatVec::Constant(m, Rational(1, 2)));
  }
  return fam;
}

namespace {

double l2_norm(const RatVec& v) {
  Rational sq;
  for (Index i = 0; i < v.size(); ++i) sq.addmul(v[i], v[i]);
  return std::sqrt(sq.to_double());
}

double efficacy(const Cut& cut, const CutScoringContext& ctx) {
  return (dot(cut.alpha, ctx.x_lp) - cut.beta).to_double() / l2_norm(cut.alpha);
}

}  // namespace

ScoreValue score(ScoreRule rule, const Cut& cut, const CutScoringContext& ctx) {
  if (rule != ScoreRule::IntegralSupport && cut.alpha_is_zero()) {
    throw std::invalid_argument(
        "zero-alpha cut cannot be scored; exclude it from candidates");
  }
  switch (rule) {
    case ScoreRule::Efficacy:
      return {efficacy(cut, ctx), false};

    case ScoreRule::Parallelism: {
      const double cnorm = l2_norm(ctx.objective);
      if (cnorm == 0.0) return {0.0, false};
      const double num = std::abs(dot(ctx.objective, cut.alpha).to_double());
      return {num / (l2_norm(cut.alpha) * cnorm), false};
    }

    case ScoreRule::DirectedCutoff: {
      if (!ctx.incumbent) return {efficacy(cut, ctx), true};
      const RatVec dir = *ctx.incumbent - ctx.x_lp;
      const Rational denom = dot(cut.alpha, dir);
      if (denom.is_zero()) return {efficacy(cut, ctx), true};
      const Rational violation = dot(cut.alpha, ctx.x_lp) - cut.beta;
      const double ratio = (violation / abs(denom)).to_double();
      return {ratio * l2_norm(dir), false};
    }

    case ScoreRule::IntegralSupport: {
      int support = 0;
      int integral = 0;
      for (Index j = 0; j < cut.alpha.size(); ++j) {
        if (cut.alpha[j].is_zero()) continue;
        ++support;
        if (ctx.integral_mask.empty() || ctx.integral_mask[j]) ++integral;
      }
      if (support == 0) return {0.0, false};
      return {static_cast<double>(integral) / support, false};
    }
  }
  throw std::logic_error("unknown score rule");
}

}  // namespace cglab
