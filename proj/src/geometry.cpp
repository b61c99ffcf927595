#include "cglab/geometry.hpp"

#include <map>
#include <sstream>

#include "cglab/parallel.hpp"
#include "cglab/rng.hpp"

namespace cglab {

std::string RegionSignature::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < floors.size(); ++i) {
    os << (i ? "," : "") << floors[i].get_str();
  }
  return os.str();
}

bool operator<(const RegionSignature& a, const RegionSignature& b) {
  const std::size_t n = std::min(a.floors.size(), b.floors.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int c = cmp(a.floors[i], b.floors[i]);
    if (c != 0) return c < 0;
  }
  return a.floors.size() < b.floors.size();
}

RegionSignature signature_single(const RatMat& a, const RatVec& b,
                                 const RatVec& u) {
  const Cut cut = cg_cut(a, b, u);
  RegionSignature sig;
  for (Index j = 0; j < cut.alpha.size(); ++j) {
    sig.floors.push_back(cut.alpha[j].num());
  }
  sig.floors.push_back(cut.beta.num());
  return sig;
}

RegionSignature signature_of(const IntegerProgram& ip,
                             const CutParameters& params) {
  const ExtendedInstance ext = params.layout == CutParameters::Layout::Waves
                                   ? wave_cuts(ip, params)
                                   : sequential_cuts(ip, params);
  RegionSignature sig;
  for (const Cut& row : ext.added_rows) {
    for (Index j = 0; j < row.alpha.size(); ++j) {
      sig.floors.push_back(row.alpha[j].num());
    }
    sig.floors.push_back(row.beta.num());
  }
  return sig;
}

RegionSignature signature_sequential(const IntegerProgram& ip,
                                     const CutParameters& params) {
  if (params.layout == CutParameters::Layout::Waves) {
    throw std::invalid_argument("signature_sequential: got a Waves layout");
  }
  return signature_of(ip, params);
}

HyperplaneFamily enumerate_hyperplanes_single(const RatMat& a,
                                              const RatVec& b) {
  HyperplaneFamily fam;
  const auto add_range = [&fam](const RatVec& normal) {
    const Integer reach = l1_norm(normal).floor();
    for (Integer k = -reach; k <= reach; ++k) {
      fam.planes.push_back({normal, k});
    }
  };
  for (Index j = 0; j < a.cols(); ++j) add_range(a.col(j));
  add_range(b);
  return fam;
}

SamplerSpec SamplerSpec::grid(Index resolution) {
  SamplerSpec s;
  s.kind = Kind::Grid;
  s.resolution = resolution;
  return s;
}

SamplerSpec SamplerSpec::random(std::uint64_t seed, std::size_t count,
                                long denominator) {
  SamplerSpec s;
  s.kind = Kind::Random;
  s.seed = seed;
  s.count = count;
  s.denominator = denominator;
  return s;
}

LayoutSpec LayoutSpec::single() { return {CutParameters::Layout::Single, 1, 1}; }

LayoutSpec LayoutSpec::sequential(int w) {
  return {CutParameters::Layout::Sequential, w, 1};
}

LayoutSpec LayoutSpec::waves(int w, int k) {
  return {CutParameters::Layout::Waves, w, k};
}

std::vector<Index> LayoutSpec::vector_lengths(Index m) const {
  std::vector<Index> lens;
  switch (kind) {
    case CutParameters::Layout::Single:
      lens.push_back(m);
      break;
    case CutParameters::Layout::Sequential:
      for (int w = 0; w < steps; ++w) lens.push_back(m + w);
      break;
    case CutParameters::Layout::Waves:
      for (int w = 0; w < steps; ++w) {
        for (int c = 0; c < wave_size; ++c) {
          lens.push_back(m + static_cast<Index>(wave_size) * w);
        }
      }
      break;
  }
  return lens;
}

namespace {

CutParameters assemble(const LayoutSpec& layout, std::vector<RatVec> vecs) {
  switch (layout.kind) {
    case CutParameters::Layout::Single:
      return CutParameters::single(std::move(vecs[0]));
    case CutParameters::Layout::Sequential:
      return CutParameters::sequential(std::move(vecs));
    case CutParameters::Layout::Waves:
      return CutParameters::waves(std::move(vecs), layout.wave_size);
  }
  throw std::logic_error("bad layout");
}

}  // namespace

std::vector<CutParameters> draw_parameters(const IntegerProgram& ip,
                                           const LayoutSpec& layout,
                                           const SamplerSpec& sampler,
                                           std::uint64_t budget) {
  const std::vector<Index> lens = layout.vector_lengths(ip.num_constraints());
  std::vector<CutParameters> out;

  if (sampler.kind == SamplerSpec::Kind::Grid) {
    if (layout.kind != CutParameters::Layout::Single) {
      throw std::invalid_argument("grid sampling is for Single layouts");
    }
    const Index res = sampler.resolution;
    if (res < 2) throw std::invalid_argument("grid resolution must be >= 2");
    const Index m = lens[0];
    std::uint64_t cells = 1;
    for (Index i = 0; i < m; ++i) {
      if (cells > budget / static_cast<std::uint64_t>(res)) {
        throw BudgetError("grid exceeds sampling budget");
      }
      cells *= static_cast<std::uint64_t>(res);
    }
    IntVec idx = IntVec::Zero(m);
    while (true) {
      RatVec u(m);
      for (Index i = 0; i < m; ++i) {
        u[i] = Rational(static_cast<long>(idx[i]), static_cast<long>(res - 1));
      }
      out.push_back(CutParameters::single(std::move(u)));
      Index d = 0;
      while (d < m && idx[d] == res - 1) {
        idx[d] = 0;
        ++d;
      }
      if (d == m) break;
      ++idx[d];
    }
    return out;
  }

  Rng rng(sampler.seed);
  for (std::size_t s = 0; s < sampler.count; ++s) {
    std::vector<RatVec> vecs;
    for (const Index len : lens) {
      RatVec u(len);
      for (Index i = 0; i < len; ++i) u[i] = rng.unit(sampler.denominator);
      vecs.push_back(std::move(u));
    }
    out.push_back(assemble(layout, std::move(vecs)));
  }
  return out;
}

ConstancyReport verify_piecewise_constancy(
    const IntegerProgram& ip, const LayoutSpec& layout,
    const SamplerSpec& sampler,
    const std::function<std::string(const CutParameters&)>& evaluator,
    int jobs) {
  const std::vector<CutParameters> params =
      draw_parameters(ip, layout, sampler);

  std::vector<std::string> values(params.size());
  std::vector<RegionSignature> sigs(params.size());
  parallel_for(
      params.size(),
      [&](std::size_t i) {
        sigs[i] = signature_of(ip, params[i]);
        values[i] = evaluator(params[i]);
      },
      jobs);

  ConstancyReport report;
  report.samples = params.size();
  std::map<RegionSignature, std::size_t> representative;
  for (std::size_t i = 0; i < params.size(); ++i) {
    const auto [it, inserted] = representative.insert({sigs[i], i});
    if (inserted) continue;
    ++report.pairs_tested;
    const std::size_t rep = it->second;
    if (values[rep] != values[i]) {
      ++report.violations;
      if (report.violating.size() < 16) {
        report.violating.push_back(
            {params[rep], params[i], values[rep], values[i]});
      }
    }
  }
  report.groups = representative.size();
  return report;
}

RegionCount count_regions_grid(const IntegerProgram& ip, Index resolution,
                               std::uint64_t budget) {
  if (resolution < 2) throw std::invalid_argument("resolution must be >= 2");
  const std::vector<CutParameters> params = draw_parameters(
      ip, LayoutSpec::single(), SamplerSpec::grid(resolution), budget);

  std::map<RegionSignature, bool> seen;
  for (const CutParameters& p : params) {
    seen.insert({signature_of(ip, p), true});
  }

  const HyperplaneFamily fam =
      enumerate_hyperplanes_single(ip.matrix(), ip.rhs());
  Integer bound;
  mpz_ui_pow_ui(bound.get_mpz_t(), fam.size(),
                static_cast<unsigned long>(ip.num_constraints()));
  RegionCount out;
  out.distinct_signatures = seen.size();
  out.bound = bound;
  if (cmp(Integer(static_cast<unsigned long>(out.distinct_signatures)),
          bound) > 0) {
    throw std::logic_error("distinct signatures exceed the cell bound");
  }
  return out;
}

namespace {

Rational grid_point(const SweepGrid& grid, Index i) {
  if (grid.points < 2) throw std::invalid_argument("sweep needs >= 2 points");
  return grid.lo + (grid.hi - grid.lo) * Rational(static_cast<long>(i)) /
                       Rational(static_cast<long>(grid.points - 1));
}

std::uint64_t trace_hash(const std::vector<TraceEntry>& trace) {
  std::string bytes;
  for (const TraceEntry& t : trace) {
    bytes += std::to_string(t.round);
    bytes += ':';
    bytes += std::to_string(t.step);
    bytes += ':';
    bytes += std::to_string(t.action);
    bytes += ';';
  }
  return fnv1a(bytes);
}

}  // namespace

std::vector<SweepRow> mu_sweep(const IntegerProgram& ip,
                               const ScoringWeights& weights_template,
                               Index swept_index, const SweepGrid& grid,
                               long long kappa,
                               const std::vector<RatVec>& candidate_us,
                               int jobs) {
  if (swept_index < 0 || swept_index >= weights_template.cut.size()) {
    throw std::invalid_argument("swept index outside the cut-weight vector");
  }

  // The root relaxation is mu-independent; resolve the candidate filter once
  // so rows can report which family member won.
  std::vector<int> pool_to_family;
  std::vector<Cut> pool;
  for (std::size_t i = 0; i < candidate_us.size(); ++i) {
    Cut cut = cg_cut(ip.matrix(), ip.rhs(), candidate_us[i]);
    if (cut.alpha_is_zero()) continue;
    pool_to_family.push_back(static_cast<int>(i));
    pool.push_back(std::move(cut));
  }
  const LpOutcome root_lp = solve_relaxation(ip);
  std::vector<int> separating_to_family;
  if (root_lp.status == LpStatus::Optimal) {
    for (std::size_t p = 0; p < pool.size(); ++p) {
      if (separates(pool[p], root_lp.solution)) {
        separating_to_family.push_back(pool_to_family[p]);
      }
    }
  }

  std::vector<SweepRow> rows(static_cast<std::size_t>(grid.points));
  parallel_for(
      rows.size(),
      [&](std::size_t i) {
        const Rational value = grid_point(grid, static_cast<Index>(i));
        ScoringWeights w = weights_template;
        w.cut[swept_index] = value.to_double();
        const SearchResult res = run_branch_and_cut(
            ip, w, CutConfig::select(candidate_us), kappa);

        SweepRow row;
        row.param_value = value;
        row.tree_size = res.tree_size;
        row.hit_cap = res.hit_cap;
        row.signature_hash = trace_hash(res.action_trace);
        for (const TraceEntry& t : res.action_trace) {
          if (t.round == 0 && t.step == 1) {
            row.chosen_cut_index =
                separating_to_family[static_cast<std::size_t>(t.action)];
            break;
          }
        }
        rows[i] = std::move(row);
      },
      jobs);
  return rows;
}

std::vector<SweepRow> u_sweep(const IntegerProgram& ip, const RatVec& base_u,
                              Index swept_index, const SweepGrid& grid,
                              long long kappa, int jobs) {
  if (swept_index < 0 || swept_index >= base_u.size()) {
    throw std::invalid_argument("swept index outside the multiplier vector");
  }
  std::vector<SweepRow> rows(static_cast<std::size_t>(grid.points));
  parallel_for(
      rows.size(),
      [&](std::size_t i) {
        const Rational value = grid_point(grid, static_cast<Index>(i));
        RatVec u = base_u;
        u[swept_index] = value;
        const CutParameters params = CutParameters::single(u);
        const SearchResult res = run_branch_and_cut(
            ip, ScoringWeights::defaults(), CutConfig::fixed_root(params),
            kappa);

        SweepRow row;
        row.param_value = value;
        row.tree_size = res.tree_size;
        row.hit_cap = res.hit_cap;
        row.signature_hash = signature_of(ip, params).hash();
        rows[i] = std::move(row);
      },
      jobs);
  return rows;
}

std::size_t count_value_changes(const std::vector<SweepRow>& rows) {
  std::size_t changes = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].tree_size != rows[i - 1].tree_size) ++changes;
  }
  return changes;
}

}  // namespace cglab
