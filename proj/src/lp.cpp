#include "cglab/lp.hpp"

#include <sstream>

namespace cglab {

const char* to_string(LpStatus s) {
  switch (s) {
    case LpStatus::Optimal: return "optimal";
    case LpStatus::Infeasible: return "infeasible";
    case LpStatus::Unbounded: return "unbounded";
  }
  return "?";
}

std::string LpOutcome::serialize() const {
  std::ostringstream os;
  os << to_string(status);
  if (status == LpStatus::Optimal) {
    os << ";obj=" << objective.str() << ";x=";
    for (Index i = 0; i < solution.size(); ++i) {
      os << (i ? "," : "") << solution[i].str();
    }
  }
  return os.str();
}

namespace {

// Dense full tableau. Columns: [structural | slack | artificial | rhs].
// Row-major so pivot row operations stay contiguous.
class Tableau {
 public:
  using Mat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic,
                            Eigen::RowMajor>;

  Tableau(const IntegerProgram& ip, const std::vector<LpRow>& extra_rows) {
    n_ = ip.num_vars();
    std::vector<LpRow> rows;
    for (Index i = 0; i < ip.num_constraints(); ++i) {
      rows.push_back({ip.matrix().row(i).transpose(), ip.rhs()[i]});
    }
    for (const LpRow& r : extra_rows) {
      if (r.coeffs.size() != n_) {
        throw std::invalid_argument("extra row has wrong dimension");
      }
      rows.push_back(r);
    }
    if (ip.upper_bounds()) {
      for (Index i = 0; i < n_; ++i) {
        RatVec e = RatVec::Zero(n_);
        e[i] = Rational(1);
        rows.push_back({std::move(e), Rational((*ip.upper_bounds())[i])});
      }
    }

    rows_ = static_cast<Index>(rows.size());
    num_slacks_ = rows_;
    num_art_ = 0;
    for (const LpRow& r : rows) {
      if (r.rhs.sign() < 0) ++num_art_;
    }
    width_ = n_ + num_slacks_ + num_art_ + 1;
    t_ = Mat::Constant(rows_, width_, Rational(0));
    basis_.resize(rows_);

    Index art = n_ + num_slacks_;
    for (Index i = 0; i < rows_; ++i) {
      const bool flip = rows[i].rhs.sign() < 0;
      for (Index j = 0; j < n_; ++j) {
        t_(i, j) = flip ? -rows[i].coeffs[j] : rows[i].coeffs[j];
      }
      t_(i, n_ + i) = Rational(flip ? -1 : 1);
      rhs(i) = flip ? -rows[i].rhs : rows[i].rhs;
      if (flip) {
        t_(i, art) = Rational(1);
        basis_[i] = art;
        ++art;
      } else {
        basis_[i] = n_ + i;
      }
    }
  }

  bool needs_phase1() const { return num_art_ > 0; }

  // Phase 1: drive sum of artificials to zero. Returns false on infeasible.
  bool phase1() {
    RatVec obj = RatVec::Zero(width_ - 1);
    for (Index j = n_ + num_slacks_; j < width_ - 1; ++j) obj[j] = Rational(-1);
    for (Index i = 0; i < rows_; ++i) {
      if (is_artificial(basis_[i])) {
        // Zero out the reduced cost of the basic artificial.
        for (Index j = 0; j < width_ - 1; ++j) obj[j] += t_(i, j);
      }
    }
    while (infeasibility().sign() > 0) {
      const Index q = entering(obj, /*allow_artificial=*/true);
      if (q < 0) return false;  // optimum of phase 1 is positive
      const Index r = leaving(q);
      if (r < 0) return false;  // cannot happen: phase-1 objective is bounded
      pivot(r, q, &obj);
    }
    drive_out_artificials();
    return true;
  }

  LpStatus phase2(const RatVec& c) {
    RatVec obj = RatVec::Zero(width_ - 1);
    for (Index j = 0; j < n_; ++j) obj[j] = c[j];
    for (Index i = 0; i < rows_; ++i) {
      if (basis_[i] < n_ && !c[basis_[i]].is_zero()) {
        const Rational f = c[basis_[i]];
        for (Index j = 0; j < width_ - 1; ++j) obj[j].submul(f, t_(i, j));
      }
    }
    while (true) {
      const Index q = entering(obj, /*allow_artificial=*/false);
      if (q < 0) return LpStatus::Optimal;
      const Index r = leaving(q);
      if (r < 0) return LpStatus::Unbounded;
      pivot(r, q, &obj);
    }
  }

  RatVec extract_solution() const {
    RatVec x = RatVec::Zero(n_);
    for (Index i = 0; i < rows_; ++i) {
      if (basis_[i] < n_) x[basis_[i]] = t_(i, width_ - 1);
    }
    return x;
  }

 private:
  Rational& rhs(Index i) { return t_(i, width_ - 1); }
  const Rational& rhs(Index i) const { return t_(i, width_ - 1); }
  bool is_artificial(Index j) const { return j >= n_ + num_slacks_; }

  Rational infeasibility() const {
    Rational w;
    for (Index i = 0; i < rows_; ++i) {
      if (is_artificial(basis_[i])) w += rhs(i);
    }
    return w;
  }

  // Bland: lowest column index with positive reduced cost.
  Index entering(const RatVec& obj, bool allow_artificial) const {
    const Index limit = allow_artificial ? width_ - 1 : n_ + num_slacks_;
    for (Index j = 0; j < limit; ++j) {
      if (obj[j].sign() > 0) return j;
    }
    return -1;
  }

  // Bland: min ratio, ties broken by lowest basis variable index.
  Index leaving(Index q) const {
    Index best = -1;
    Rational best_ratio;
    for (Index i = 0; i < rows_; ++i) {
      if (t_(i, q).sign() <= 0) continue;
      Rational ratio = rhs(i) / t_(i, q);
      if (best < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis_[i] < basis_[best])) {
        best = i;
        best_ratio = std::move(ratio);
      }
    }
    return best;
  }

  void pivot(Index r, Index q, RatVec* obj) {
    const Rational piv = t_(r, q);
    for (Index j = 0; j < width_; ++j) t_(r, j) /= piv;
    for (Index i = 0; i < rows_; ++i) {
      if (i == r || t_(i, q).is_zero()) continue;
      const Rational f = t_(i, q);
      for (Index j = 0; j < width_; ++j) t_(i, j).submul(f, t_(r, j));
    }
    if (obj && !(*obj)[q].is_zero()) {
      const Rational f = (*obj)[q];
      for (Index j = 0; j < width_ - 1; ++j) (*obj)[j].submul(f, t_(r, j));
    }
    basis_[r] = q;
  }

  // Pivot basic zero-valued artificials onto real columns; rows that are
  // zero over all real columns are redundant and dropped.
  void drive_out_artificials() {
    for (Index i = 0; i < rows_;) {
      if (!is_artificial(basis_[i])) {
        ++i;
        continue;
      }
      Index q = -1;
      for (Index j = 0; j < n_ + num_slacks_; ++j) {
        if (!t_(i, j).is_zero()) {
          q = j;
          break;
        }
      }
      if (q >= 0) {
        pivot(i, q, nullptr);
        ++i;
      } else {
        remove_row(i);
      }
    }
  }

  void remove_row(Index r) {
    if (r != rows_ - 1) {
      t_.row(r) = t_.row(rows_ - 1);
      basis_[r] = basis_[rows_ - 1];
    }
    --rows_;
    t_.conservativeResize(rows_, Eigen::NoChange);
    basis_.resize(rows_);
  }

  Mat t_;
  std::vector<Index> basis_;
  Index n_ = 0;
  Index rows_ = 0;        // active rows; shrinks if a redundant row drops
  Index num_slacks_ = 0;  // fixed slack column-space size
  Index width_ = 0;
  Index num_art_ = 0;
};

}  // namespace

LpOutcome solve_relaxation(const IntegerProgram& ip,
                           const std::vector<LpRow>& extra_rows) {
  Tableau tab(ip, extra_rows);
  if (tab.needs_phase1() && !tab.phase1()) {
    return {LpStatus::Infeasible, {}, {}};
  }
  const LpStatus status = tab.phase2(ip.objective());
  if (status != LpStatus::Optimal) return {status, {}, {}};

  LpOutcome out;
  out.status = LpStatus::Optimal;
  out.solution = tab.extract_solution();
  out.objective = dot(ip.objective(), out.solution);
  return out;
}

}  // namespace cglab
