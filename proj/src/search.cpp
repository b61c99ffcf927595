#include "cglab/search.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <sstream>

namespace cglab {

bool same_actions(const std::vector<TraceEntry>& a,
                  const std::vector<TraceEntry>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].round != b[i].round || a[i].step != b[i].step ||
        a[i].action != b[i].action) {
      return false;
    }
  }
  return true;
}

namespace {

std::string fmt_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace

std::string SearchResult::serialize() const {
  std::ostringstream os;
  os << "tree=" << tree_size << ";cap=" << (hit_cap ? 1 : 0)
     << ";utility=" << fmt_double(utility) << ";incumbent=";
  if (incumbent) {
    os << incumbent->second.str() << "@(";
    for (Index i = 0; i < incumbent->first.size(); ++i) {
      os << (i ? "," : "") << incumbent->first[i].str();
    }
    os << ")";
  } else {
    os << "none";
  }
  os << ";trace=";
  for (const TraceEntry& t : action_trace) {
    os << t.round << ':' << t.step << ':' << t.action << ':'
       << fmt_double(t.score) << ';';
  }
  return os.str();
}

std::pair<Index, double> weighted_argmax(
    Index count, const std::function<double(Index, Index)>& rule_value,
    const Eigen::VectorXd& weights) {
  if (count <= 0) throw std::invalid_argument("weighted_argmax: no actions");
  Index best = 0;
  double best_value = 0;
  for (Index k = 0; k < count; ++k) {
    double value = 0;
    for (Index r = 0; r < weights.size(); ++r) {
      const double s = rule_value(r, k);
      if (!std::isfinite(s)) {
        throw std::domain_error("non-finite score for action " +
                                std::to_string(k));
      }
      value += weights[r] * s;
    }
    if (!std::isfinite(value)) {
      throw std::domain_error("non-finite weighted score");
    }
    if (k == 0 || score_improves(value, best_value)) {
      best = k;
      best_value = value;
    }
  }
  return {best, best_value};
}

std::string trace_to_log(const std::vector<TraceEntry>& trace) {
  std::ostringstream os;
  for (const TraceEntry& t : trace) {
    os << t.round << ',' << t.step << ',' << t.action << ','
       << fmt_double(t.score) << '\n';
  }
  return os.str();
}

ScoringWeights ScoringWeights::defaults() {
  ScoringWeights w;
  w.node = Eigen::VectorXd(2);
  w.node << 1.0, 0.0;
  w.cut = Eigen::VectorXd(4);
  w.cut << 0.6, 0.1, 0.5, 0.1;
  w.var = Eigen::VectorXd(1);
  w.var << 1.0;
  return w;
}

CutConfig CutConfig::none() { return {}; }

CutConfig CutConfig::fixed_root(CutParameters params) {
  CutConfig c;
  c.mode = Mode::FixedRoot;
  c.fixed = std::move(params);
  return c;
}

CutConfig CutConfig::select(std::vector<RatVec> candidate_us, bool every_node) {
  CutConfig c;
  c.mode = Mode::Select;
  c.candidate_us = std::move(candidate_us);
  c.cuts_at_every_node = every_node;
  return c;
}

namespace {

std::vector<LpRow> node_rows(const IntegerProgram& ip, const BcNode& node) {
  std::vector<LpRow> rows;
  for (const Cut& c : node.cuts) rows.push_back({c.alpha, c.beta});
  for (Index i = 0; i < ip.num_vars(); ++i) {
    if (node.upper[i] >= 0) {
      RatVec e = RatVec::Zero(ip.num_vars());
      e[i] = Rational(1);
      rows.push_back({std::move(e), Rational(node.upper[i])});
    }
    if (node.lower[i] > 0) {
      RatVec e = RatVec::Zero(ip.num_vars());
      e[i] = Rational(-1);
      rows.push_back({std::move(e), Rational(-node.lower[i])});
    }
  }
  return rows;
}

bool cut_step_eligible(const BcState& s, const BcNode& node) {
  return s.config.mode == CutConfig::Mode::Select &&
         (node.depth == 0 || s.config.cuts_at_every_node);
}

// At +inf when any contributing bound is missing (root knowledge).
std::optional<Rational> global_upper_bound(const BcState& s) {
  bool unbounded = false;
  std::optional<Rational> best;
  const auto consider = [&](const std::optional<Rational>& v) {
    if (!v) {
      unbounded = true;
    } else if (!best || *v > *best) {
      best = *v;
    }
  };
  for (const BcNode& node : s.open) consider(node.parent_bound);
  if (s.active && !s.active->fathomed) consider(s.active->lp.objective);
  if (unbounded) return std::nullopt;
  return best;
}

// Solves (or re-solves) the active node's LP and settles fathoming,
// incumbent updates, fractional variables, and cut candidates.
void classify_active(BcState& s) {
  BcActive& a = *s.active;
  a.lp = solve_relaxation(*s.ip, node_rows(*s.ip, a.node));
  a.cut_candidates.clear();
  a.fractional_vars.clear();

  switch (a.lp.status) {
    case LpStatus::Infeasible:
      a.fathomed = true;
      break;
    case LpStatus::Unbounded:
      throw std::domain_error(
          "unbounded LP relaxation: branch and cut needs variable bounds");
    case LpStatus::Optimal: {
      for (Index j = 0; j < a.lp.solution.size(); ++j) {
        if (!a.lp.solution[j].is_integer()) a.fractional_vars.push_back(j);
      }
      if (a.fractional_vars.empty()) {
        if (!s.incumbent || a.lp.objective > s.incumbent->second) {
          s.incumbent = {a.lp.solution, a.lp.objective};
        }
        a.fathomed = true;
      } else if (s.incumbent && a.lp.objective <= s.incumbent->second) {
        a.fathomed = true;  // bound no better than the incumbent
      } else {
        a.fathomed = false;
        if (cut_step_eligible(s, a.node)) {
          for (std::size_t c = 0; c < s.candidate_pool.size(); ++c) {
            if (separates(s.candidate_pool[c], a.lp.solution)) {
              a.cut_candidates.push_back(c);
            }
          }
        }
      }
      break;
    }
  }

  s.incumbent_history.push_back(
      s.incumbent ? std::optional<Rational>(s.incumbent->second)
                  : std::nullopt);
  if (!s.open.empty() || (s.active && !s.active->fathomed)) {
    s.bound_history.push_back(global_upper_bound(s));
  }
}

CutScoringContext scoring_context(const BcState& s) {
  CutScoringContext ctx;
  ctx.x_lp = s.active->lp.solution;
  if (s.incumbent) ctx.incumbent = s.incumbent->first;
  ctx.objective = s.ip->objective();
  ctx.integral_mask.assign(static_cast<std::size_t>(s.ip->num_vars()), true);
  return ctx;
}

}  // namespace

BcState make_branch_and_cut_state(const IntegerProgram& ip,
                                  const CutConfig& config) {
  BcState s;
  s.ip = &ip;
  s.config = config;

  BcNode root;
  root.lower = IntVec::Zero(ip.num_vars());
  root.upper = IntVec::Constant(ip.num_vars(), -1);
  root.id = s.next_id++;

  switch (config.mode) {
    case CutConfig::Mode::None:
      break;
    case CutConfig::Mode::FixedRoot: {
      const ExtendedInstance ext =
          config.fixed.layout == CutParameters::Layout::Waves
              ? wave_cuts(ip, config.fixed)
              : sequential_cuts(ip, config.fixed);
      root.cuts = ext.added_rows;
      break;
    }
    case CutConfig::Mode::Select: {
      for (const RatVec& u : config.candidate_us) {
        Cut cut = cg_cut(ip.matrix(), ip.rhs(), u);
        if (!cut.alpha_is_zero()) s.candidate_pool.push_back(std::move(cut));
      }
      break;
    }
  }

  s.open.push_back(std::move(root));
  return s;
}

std::vector<SearchStep<BcState>> make_branch_and_cut_steps(
    const ScoringWeights& weights) {
  std::vector<SearchStep<BcState>> steps(3);

  SearchStep<BcState>& node = steps[0];
  node.name = "node";
  node.weights = weights.node;
  node.num_actions = [](const BcState& s) {
    return static_cast<Index>(s.open.size());
  };
  node.rules = {
      // Best LP bound: the parent's LP value; the root is unconstrained.
      [](const BcState& s, Index k) {
        const auto& bound = s.open[static_cast<std::size_t>(k)].parent_bound;
        return bound ? bound->to_double() : 0.0;
      },
      // Depth-first.
      [](const BcState& s, Index k) {
        return static_cast<double>(s.open[static_cast<std::size_t>(k)].depth);
      },
  };
  node.apply = [](BcState& s, Index k) {
    BcActive active;
    active.node = std::move(s.open[static_cast<std::size_t>(k)]);
    s.open.erase(s.open.begin() + k);
    s.active = std::move(active);
    ++s.expanded;
    classify_active(s);
  };

  SearchStep<BcState>& cut = steps[1];
  cut.name = "cut";
  cut.weights = weights.cut;
  cut.num_actions = [](const BcState& s) {
    if (!s.active || s.active->fathomed) return Index{0};
    return static_cast<Index>(s.active->cut_candidates.size());
  };
  for (const ScoreRule rule :
       {ScoreRule::Efficacy, ScoreRule::Parallelism, ScoreRule::DirectedCutoff,
        ScoreRule::IntegralSupport}) {
    cut.rules.push_back([rule](const BcState& s, Index k) {
      const Cut& cand =
          s.candidate_pool[s.active->cut_candidates[static_cast<std::size_t>(k)]];
      return score(rule, cand, scoring_context(s)).value;
    });
  }
  cut.apply = [](BcState& s, Index k) {
    const std::size_t pool_index =
        s.active->cut_candidates[static_cast<std::size_t>(k)];
    s.active->node.cuts.push_back(s.candidate_pool[pool_index]);
    classify_active(s);  // re-solve with the new row
  };

  SearchStep<BcState>& var = steps[2];
  var.name = "var";
  var.weights = weights.var;
  var.num_actions = [](const BcState& s) {
    if (!s.active || s.active->fathomed) return Index{0};
    return static_cast<Index>(s.active->fractional_vars.size());
  };
  var.rules = {
      // Most fractional: min(f, 1-f) of the LP value.
      [](const BcState& s, Index k) {
        const Index v = s.active->fractional_vars[static_cast<std::size_t>(k)];
        const Rational& x = s.active->lp.solution[v];
        const Rational f = x - Rational(x.floor());
        return std::min(f.to_double(), (Rational(1) - f).to_double());
      },
  };
  var.apply = [](BcState& s, Index k) {
    BcActive& a = *s.active;
    const Index v = a.fractional_vars[static_cast<std::size_t>(k)];
    const Integer fl = a.lp.solution[v].floor();
    if (!fl.fits_slong_p()) {
      throw std::domain_error("branching value out of range");
    }
    const std::int64_t floor_v = fl.get_si();

    BcNode down;
    down.lower = a.node.lower;
    down.upper = a.node.upper;
    down.depth = a.node.depth + 1;
    down.parent_bound = a.lp.objective;
    down.cuts = a.node.cuts;
    BcNode up = down;

    down.upper[v] =
        a.node.upper[v] < 0 ? floor_v : std::min(a.node.upper[v], floor_v);
    up.lower[v] = std::max(a.node.lower[v], floor_v + 1);
    down.id = s.next_id++;
    up.id = s.next_id++;
    s.open.push_back(std::move(down));
    s.open.push_back(std::move(up));
    s.active.reset();
  };

  return steps;
}

SearchResult run_branch_and_cut(const IntegerProgram& ip,
                                const ScoringWeights& weights,
                                const CutConfig& config, long long kappa) {
  BcState state = make_branch_and_cut_state(ip, config);
  const std::vector<SearchStep<BcState>> steps =
      make_branch_and_cut_steps(weights);
  return run_tree_search<BcState>(
      std::move(state), steps, kappa,
      [kappa](const BcState& s) {
        return static_cast<double>(std::clamp(s.expanded, 1LL, kappa));
      },
      [](const BcState& s) { return s.finished(); },
      [](const BcState& s, SearchResult& r) {
        r.tree_size = s.expanded;
        r.incumbent = s.incumbent;
        r.hit_cap = !s.open.empty();
      });
}

std::optional<std::size_t> select_cut(const std::vector<Cut>& candidates,
                                      const Eigen::VectorXd& mu,
                                      const CutScoringContext& ctx) {
  if (mu.size() != 4) throw std::invalid_argument("select_cut: mu has size 4");
  std::vector<std::size_t> separating;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (separates(candidates[i], ctx.x_lp)) separating.push_back(i);
  }
  if (separating.empty()) return std::nullopt;

  static constexpr ScoreRule kRules[] = {
      ScoreRule::Efficacy, ScoreRule::Parallelism, ScoreRule::DirectedCutoff,
      ScoreRule::IntegralSupport};
  const auto [k, value] = weighted_argmax(
      static_cast<Index>(separating.size()),
      [&](Index rule, Index k) {
        return score(kRules[rule], candidates[separating[static_cast<std::size_t>(k)]],
                     ctx)
            .value;
      },
      mu);
  (void)value;
  return separating[static_cast<std::size_t>(k)];
}

}  // namespace cglab
