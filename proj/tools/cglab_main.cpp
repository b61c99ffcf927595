// Experiment runner: every laboratory workflow as a subcommand with
// reproducible seeds and bit-stable CSV/SVG output.
//
// Exit codes: 0 success, 2 invariant violation detected, 3 input error,
// 4 budget exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cglab/geometry.hpp"
#include "cglab/ip.hpp"
#include "cglab/learn.hpp"
#include "cglab/parallel.hpp"
#include "cglab/plot.hpp"
#include "cglab/rng.hpp"
#include "cglab/search.hpp"

namespace {

using namespace cglab;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 2;
constexpr int kExitInput = 3;
constexpr int kExitBudget = 4;

std::string fmt_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << content;
}

// Emits to stdout and, when a path is set, to the file as well.
void emit(const std::string& path, const std::string& content) {
  std::cout << content;
  if (!path.empty()) write_file(path, content);
}

RatVec parse_u_list(const std::string& text) {
  std::vector<Rational> entries;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    entries.push_back(Rational::parse(token));
  }
  RatVec u(static_cast<Index>(entries.size()));
  for (std::size_t i = 0; i < entries.size(); ++i) {
    u[static_cast<Index>(i)] = entries[i];
  }
  return u;
}

// Generator settings shared by the sample-driven commands.
struct InstanceSource {
  std::string instance_file;
  std::uint64_t seed = 1;
  int n = 5;
  int m = 3;
  int coeff_max = 5;

  IntegerProgram make() const {
    if (!instance_file.empty()) return read_instance_file(instance_file);
    return random_packing_ip(seed, n, m, coeff_max);
  }
};

void add_source_options(CLI::App* cmd, InstanceSource& src) {
  cmd->add_option("--instance", src.instance_file,
                  "instance file (overrides the generator)");
  cmd->add_option("--seed", src.seed, "generator seed");
  cmd->add_option("--gen-n", src.n, "generator variable count");
  cmd->add_option("--gen-m", src.m, "generator constraint count");
  cmd->add_option("--gen-coeff-max", src.coeff_max,
                  "generator coefficient cap");
}

std::vector<RatVec> make_candidates(const std::string& source, Index m,
                                    std::size_t count, std::uint64_t seed,
                                    long denominator) {
  if (source == "half") return half_integral_family(m, count);
  if (source == "random") {
    Rng rng(seed);
    std::vector<RatVec> fam;
    for (std::size_t c = 0; c < count; ++c) {
      RatVec u(m);
      for (Index i = 0; i < m; ++i) u[i] = rng.unit(denominator);
      fam.push_back(std::move(u));
    }
    return fam;
  }
  throw std::invalid_argument("candidate source must be 'half' or 'random'");
}

LayoutSpec parse_layout(const std::string& text) {
  if (text == "single") return LayoutSpec::single();
  if (text.rfind("sequential:", 0) == 0) {
    return LayoutSpec::sequential(std::stoi(text.substr(11)));
  }
  if (text.rfind("waves:", 0) == 0) {
    const std::string shape = text.substr(6);
    const auto x = shape.find('x');
    if (x == std::string::npos) {
      throw std::invalid_argument("waves layout is waves:WxK");
    }
    return LayoutSpec::waves(std::stoi(shape.substr(0, x)),
                             std::stoi(shape.substr(x + 1)));
  }
  throw std::invalid_argument("layout must be single, sequential:W, waves:WxK");
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "param_value,tree_size,hit_cap,signature_hash,chosen_cut_index\n";
  for (const SweepRow& r : rows) {
    os << r.param_value.str() << ',' << r.tree_size << ','
       << (r.hit_cap ? 1 : 0) << ',' << r.signature_hash << ','
       << r.chosen_cut_index << '\n';
  }
  return os.str();
}

// ---- jeroslow --------------------------------------------------------------

struct JeroslowArgs {
  int n = 7;
  bool scan = false;
  std::string u_text;
  long long kappa = 100000;
  std::string out;
  std::string trace;
};

int cmd_jeroslow(const JeroslowArgs& args) {
  const IntegerProgram ip = make_jeroslow(args.n);
  const long long floor_size = 1LL << ((args.n - 1) / 2);
  std::ostringstream report;
  report << "n=" << args.n << " kappa=" << args.kappa
         << " jeroslow_floor=" << floor_size << "\n";

  const auto run_with = [&](const CutConfig& config) {
    return run_branch_and_cut(ip, ScoringWeights::defaults(), config,
                              args.kappa);
  };

  bool violated = false;
  if (args.scan) {
    // Straddle the (n+1)/(2n) difference threshold by 1e-6 on both sides,
    // keeping the second coordinate at 1/5.
    const Rational threshold(args.n + 1, 2L * args.n);
    const Rational eps(1, 1000000);
    const Rational fifth(1, 5);
    const auto clip = [](const Rational& v) {
      return v > Rational(1) ? Rational(1) : (v.sign() < 0 ? Rational(0) : v);
    };
    const RatVec below = rat_vec({clip(threshold - eps + fifth), fifth});
    const RatVec above = rat_vec({clip(threshold + eps + fifth), fifth});

    const SearchResult below_run =
        run_with(CutConfig::fixed_root(CutParameters::single(below)));
    const SearchResult above_run =
        run_with(CutConfig::fixed_root(CutParameters::single(above)));
    const SearchResult baseline = run_with(CutConfig::none());

    report << "below: u=(" << below[0].str() << "," << below[1].str()
           << ") tree=" << below_run.tree_size
           << " hit_cap=" << below_run.hit_cap << "\n";
    report << "above: u=(" << above[0].str() << "," << above[1].str()
           << ") tree=" << above_run.tree_size
           << " hit_cap=" << above_run.hit_cap << "\n";
    report << "baseline: tree=" << baseline.tree_size
           << " hit_cap=" << baseline.hit_cap << "\n";

    violated = below_run.tree_size != 1 ||
               above_run.tree_size < floor_size ||
               baseline.tree_size < floor_size;
    report << "verdict: " << (violated ? "violation" : "ok") << "\n";
  } else {
    if (args.u_text.empty()) {
      throw std::invalid_argument("jeroslow needs --u or --scan");
    }
    const RatVec u = parse_u_list(args.u_text);
    const SearchResult run =
        run_with(CutConfig::fixed_root(CutParameters::single(u)));
    report << "u=(" << args.u_text << ") tree=" << run.tree_size
           << " hit_cap=" << run.hit_cap << "\n";
    if (!args.trace.empty()) {
      write_file(args.trace, trace_to_log(run.action_trace));
    }
  }

  emit(args.out, report.str());
  return violated ? kExitViolation : kExitOk;
}

// ---- sweep -----------------------------------------------------------------

struct SweepArgs {
  InstanceSource source;
  std::string mode = "mu";
  Index swept_index = 2;
  Index points = 101;
  std::string lo = "0";
  std::string hi = "1";
  long long kappa = 256;
  std::size_t candidates = 5;
  std::string candidate_source = "half";
  std::uint64_t candidate_seed = 1;
  std::string base_u;
  std::string out;
  std::string svg;
  int jobs = 1;
};

int cmd_sweep(const SweepArgs& args) {
  const IntegerProgram ip = args.source.make();
  SweepGrid grid;
  grid.lo = Rational::parse(args.lo);
  grid.hi = Rational::parse(args.hi);
  grid.points = args.points;

  std::vector<SweepRow> rows;
  if (args.mode == "mu") {
    const std::vector<RatVec> family =
        make_candidates(args.candidate_source, ip.num_constraints(),
                        args.candidates, args.candidate_seed, 20);
    rows = mu_sweep(ip, ScoringWeights::defaults(), args.swept_index, grid,
                    args.kappa, family, args.jobs);
  } else if (args.mode == "u") {
    const RatVec base =
        args.base_u.empty()
            ? RatVec::Constant(ip.num_constraints(), Rational(1, 5))
            : parse_u_list(args.base_u);
    rows = u_sweep(ip, base, args.swept_index, grid, args.kappa, args.jobs);
  } else {
    throw std::invalid_argument("sweep mode must be 'mu' or 'u'");
  }

  if (args.out.empty()) throw std::invalid_argument("sweep needs --out");
  write_file(args.out, sweep_csv(rows));
  std::cout << "rows=" << rows.size()
            << " value_changes=" << count_value_changes(rows) << "\n";

  if (!args.svg.empty()) {
    StepPlotSeries series;
    for (const SweepRow& r : rows) {
      series.x.push_back(r.param_value.to_double());
      series.y.push_back(static_cast<double>(r.tree_size));
    }
    write_file(args.svg,
               svg_step_plot(series,
                             args.mode == "mu" ? "mu[swept]" : "u[swept]",
                             "tree size"));
  }
  return kExitOk;
}

// ---- regions ---------------------------------------------------------------

struct RegionsArgs {
  InstanceSource source;
  std::string layout = "single";
  std::size_t samples = 500;
  Index grid_res = 0;  // > 0 switches the sampler to the exhaustive grid
  long denominator = 50;
  std::uint64_t sample_seed = 2;
  long long kappa = 64;
  Index count_res = 101;
  std::string out;
  int jobs = 1;
};

int cmd_regions(const RegionsArgs& args) {
  const IntegerProgram ip = args.source.make();
  const LayoutSpec layout = parse_layout(args.layout);
  const SamplerSpec sampler =
      args.grid_res > 0 ? SamplerSpec::grid(args.grid_res)
                        : SamplerSpec::random(args.sample_seed, args.samples,
                                              args.denominator);

  const ConstancyReport report = verify_piecewise_constancy(
      ip, layout, sampler,
      [&](const CutParameters& p) {
        const SearchResult res =
            run_branch_and_cut(ip, ScoringWeights::defaults(),
                               CutConfig::fixed_root(p), args.kappa);
        return std::to_string(res.tree_size);
      },
      args.jobs);

  std::ostringstream os;
  os << "samples=" << report.samples << "\n";
  os << "groups=" << report.groups << "\n";
  os << "pairs_tested=" << report.pairs_tested << "\n";
  os << "violations=" << report.violations << "\n";
  for (const ConstancyViolation& v : report.violating) {
    os << "violation: value " << v.value_first << " vs " << v.value_second
       << "\n";
  }
  if (layout.kind == CutParameters::Layout::Single) {
    const RegionCount rc = count_regions_grid(ip, args.count_res);
    os << "distinct_signatures=" << rc.distinct_signatures << "\n";
    os << "cell_bound=" << rc.bound.get_str() << "\n";
  }
  os << "status=" << (report.ok() ? "ok" : "violation") << "\n";
  emit(args.out, os.str());
  return report.ok() ? kExitOk : kExitViolation;
}

// ---- learn -----------------------------------------------------------------

struct LearnArgs {
  std::uint64_t seed = 1;
  std::size_t count = 40;
  int n = 4;
  int m = 3;
  int coeff_max = 3;
  std::size_t candidates = 8;
  std::string candidate_source = "half";
  std::uint64_t candidate_seed = 3;
  long long kappa = 64;
  double eps = 0.1;
  double delta = 0.01;
  double constant = 1.0;
  std::string out;
  int jobs = 1;
};

int cmd_learn(const LearnArgs& args) {
  const SampleSet samples = SampleSet::packing(args.seed, args.count, args.n,
                                               args.m, args.coeff_max);
  const std::vector<RatVec> family =
      make_candidates(args.candidate_source, args.m, args.candidates,
                      args.candidate_seed, 20);

  const ErmResult result = erm_learn(
      samples, family.size(),
      [&](std::size_t cand, const IntegerProgram& ip) {
        const SearchResult res = run_branch_and_cut(
            ip, ScoringWeights::defaults(),
            CutConfig::fixed_root(CutParameters::single(family[cand])),
            args.kappa);
        return clamp_tree_size(res.tree_size, args.kappa);
      },
      args.jobs);

  // The pdim bound uses the max norms measured on the sample.
  double alpha = 1, beta = 1;
  for (const IntegerProgram& ip : samples.instances) {
    alpha = std::max(alpha, ip.norm_a11().to_double());
    beta = std::max(beta, ip.norm_b1().to_double());
  }
  const double pdim =
      pdim_bound(PdimBoundSpec::single_cut(args.m, args.n, alpha, beta));
  const long long recommend =
      sample_size(args.eps, args.delta, pdim,
                  static_cast<double>(args.kappa), args.constant);

  std::ostringstream os;
  os << "# eps=" << fmt_double(args.eps) << "\n";
  os << "# delta=" << fmt_double(args.delta) << "\n";
  os << "# kappa=" << args.kappa << "\n";
  os << "# pdim_bound=" << fmt_double(pdim) << "\n";
  os << "# sample_size=" << recommend << "\n";
  os << "candidate_id,train_mean,test_mean,gap,selected\n";
  for (const ErmCandidateStats& row : result.table) {
    os << row.id << ',' << fmt_double(row.train_mean) << ','
       << fmt_double(row.test_mean) << ',' << fmt_double(row.gap) << ','
       << (row.selected ? 1 : 0) << '\n';
  }
  if (args.out.empty()) throw std::invalid_argument("learn needs --out");
  write_file(args.out, os.str());
  std::cout << "selected=" << result.best_index
            << " train_mean=" << fmt_double(result.best().train_mean) << "\n";
  return kExitOk;
}

// ---- rademacher ------------------------------------------------------------

struct RademacherArgs {
  std::uint64_t seed = 1;
  std::size_t count = 6;
  int n = 4;
  int m = 3;
  int coeff_max = 3;
  std::size_t candidates = 4;
  std::string candidate_source = "half";
  std::uint64_t candidate_seed = 3;
  long long kappa = 64;
  std::size_t draws = 10000;
  std::uint64_t sigma_seed = 7;
  bool exhaustive = false;
  std::string out;
  int jobs = 1;
};

int cmd_rademacher(const RademacherArgs& args) {
  const SampleSet samples = SampleSet::packing(args.seed, args.count, args.n,
                                               args.m, args.coeff_max);
  const std::vector<RatVec> family =
      make_candidates(args.candidate_source, args.m, args.candidates,
                      args.candidate_seed, 20);

  // Value matrix F[candidate][instance] of clamped tree sizes.
  const std::size_t cols = samples.instances.size();
  std::vector<std::vector<double>> values(family.size(),
                                          std::vector<double>(cols));
  parallel_for(
      family.size() * cols,
      [&](std::size_t flat) {
        const std::size_t cand = flat / cols;
        const std::size_t inst = flat % cols;
        const SearchResult res = run_branch_and_cut(
            samples.instances[inst], ScoringWeights::defaults(),
            CutConfig::fixed_root(CutParameters::single(family[cand])),
            args.kappa);
        values[cand][inst] = clamp_tree_size(res.tree_size, args.kappa);
      },
      args.jobs);

  const RademacherEstimate est =
      empirical_rademacher(values, args.draws, args.sigma_seed);

  std::ostringstream os;
  os << "candidates=" << family.size() << "\n";
  os << "instances=" << cols << "\n";
  os << "draws=" << est.draws << "\n";
  os << "estimate=" << fmt_double(est.estimate) << "\n";
  os << "std_error=" << fmt_double(est.std_error) << "\n";
  if (args.exhaustive) {
    os << "exact=" << fmt_double(empirical_rademacher_exact(values)) << "\n";
  }
  os << "data_dependent_bound="
     << fmt_double(data_dependent_rademacher_bound(
            samples, 1, 1, static_cast<double>(args.kappa)))
     << "\n";
  emit(args.out, os.str());
  return kExitOk;
}

// ---- config plumbing -------------------------------------------------------

// Loads the JSON config named by --config so its values become the defaults
// of the bound argument structs; explicit flags then override them.
json load_config(int argc, char** argv) {
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--config") {
      std::ifstream in(argv[i + 1]);
      if (!in) {
        throw std::invalid_argument(std::string("cannot open config file: ") +
                                    argv[i + 1]);
      }
      return json::parse(in);
    }
  }
  return json::object();
}

template <typename T>
void from_config(const json& cfg, const char* key, T& slot) {
  if (cfg.contains(key)) slot = cfg.at(key).get<T>();
}

void source_from_config(const json& cfg, InstanceSource& src) {
  from_config(cfg, "instance", src.instance_file);
  from_config(cfg, "seed", src.seed);
  from_config(cfg, "gen_n", src.n);
  from_config(cfg, "gen_m", src.m);
  from_config(cfg, "gen_coeff_max", src.coeff_max);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chvatal-Gomory cut laboratory"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "JSON config with flag defaults");

  json cfg;
  try {
    cfg = load_config(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }

  JeroslowArgs jero;
  from_config(cfg, "n", jero.n);
  from_config(cfg, "scan", jero.scan);
  from_config(cfg, "u", jero.u_text);
  from_config(cfg, "kappa", jero.kappa);
  from_config(cfg, "out", jero.out);
  from_config(cfg, "trace", jero.trace);
  CLI::App* jcmd = app.add_subcommand(
      "jeroslow", "threshold scan on the odd infeasible two-row instance");
  jcmd->add_option("--n", jero.n, "odd variable count");
  jcmd->add_flag("--scan", jero.scan, "straddle the threshold at +-1e-6");
  jcmd->add_option("--u", jero.u_text, "single multiplier 'p/q,p/q'");
  jcmd->add_option("--kappa", jero.kappa, "tree-size cap");
  jcmd->add_option("--config", config_path,
                   "JSON config with flag defaults");
  jcmd->add_option("--out", jero.out, "report file");
  jcmd->add_option("--trace", jero.trace, "action trace log file");

  SweepArgs sweep;
  source_from_config(cfg, sweep.source);
  from_config(cfg, "mode", sweep.mode);
  from_config(cfg, "swept_index", sweep.swept_index);
  from_config(cfg, "points", sweep.points);
  from_config(cfg, "lo", sweep.lo);
  from_config(cfg, "hi", sweep.hi);
  from_config(cfg, "kappa", sweep.kappa);
  from_config(cfg, "candidates", sweep.candidates);
  from_config(cfg, "candidate_source", sweep.candidate_source);
  from_config(cfg, "candidate_seed", sweep.candidate_seed);
  from_config(cfg, "base_u", sweep.base_u);
  from_config(cfg, "out", sweep.out);
  from_config(cfg, "svg", sweep.svg);
  from_config(cfg, "jobs", sweep.jobs);
  CLI::App* scmd = app.add_subcommand(
      "sweep", "piecewise-constant tree-size tables over one parameter");
  add_source_options(scmd, sweep.source);
  scmd->add_option("--mode", sweep.mode, "'mu' or 'u'");
  scmd->add_option("--swept-index", sweep.swept_index, "coordinate to vary");
  scmd->add_option("--points", sweep.points, "grid points");
  scmd->add_option("--lo", sweep.lo, "grid start (rational)");
  scmd->add_option("--hi", sweep.hi, "grid end (rational)");
  scmd->add_option("--kappa", sweep.kappa, "tree-size cap");
  scmd->add_option("--candidates", sweep.candidates, "candidate family size");
  scmd->add_option("--candidate-source", sweep.candidate_source,
                   "'half' or 'random'");
  scmd->add_option("--candidate-seed", sweep.candidate_seed,
                   "seed for random candidates");
  scmd->add_option("--base-u", sweep.base_u, "u-mode base multiplier");
  scmd->add_option("--config", config_path,
                   "JSON config with flag defaults");
  scmd->add_option("--out", sweep.out, "CSV output path");
  scmd->add_option("--svg", sweep.svg, "optional SVG step plot");
  scmd->add_option("--jobs", sweep.jobs, "worker threads");

  RegionsArgs regions;
  source_from_config(cfg, regions.source);
  from_config(cfg, "layout", regions.layout);
  from_config(cfg, "samples", regions.samples);
  from_config(cfg, "grid_res", regions.grid_res);
  from_config(cfg, "denominator", regions.denominator);
  from_config(cfg, "sample_seed", regions.sample_seed);
  from_config(cfg, "kappa", regions.kappa);
  from_config(cfg, "count_res", regions.count_res);
  from_config(cfg, "out", regions.out);
  from_config(cfg, "jobs", regions.jobs);
  CLI::App* rcmd = app.add_subcommand(
      "regions", "piecewise-constancy certification and region counting");
  add_source_options(rcmd, regions.source);
  rcmd->add_option("--layout", regions.layout,
                   "single | sequential:W | waves:WxK");
  rcmd->add_option("--samples", regions.samples, "random multiplier draws");
  rcmd->add_option("--grid-res", regions.grid_res,
                   "use an exhaustive grid at this resolution instead");
  rcmd->add_option("--denominator", regions.denominator,
                   "random multiplier denominator");
  rcmd->add_option("--sample-seed", regions.sample_seed, "sampler seed");
  rcmd->add_option("--kappa", regions.kappa, "tree-size cap");
  rcmd->add_option("--count-res", regions.count_res,
                   "grid resolution for region counting");
  rcmd->add_option("--config", config_path,
                   "JSON config with flag defaults");
  rcmd->add_option("--out", regions.out, "report file");
  rcmd->add_option("--jobs", regions.jobs, "worker threads");

  LearnArgs learn;
  from_config(cfg, "seed", learn.seed);
  from_config(cfg, "count", learn.count);
  from_config(cfg, "gen_n", learn.n);
  from_config(cfg, "gen_m", learn.m);
  from_config(cfg, "gen_coeff_max", learn.coeff_max);
  from_config(cfg, "candidates", learn.candidates);
  from_config(cfg, "candidate_source", learn.candidate_source);
  from_config(cfg, "candidate_seed", learn.candidate_seed);
  from_config(cfg, "kappa", learn.kappa);
  from_config(cfg, "eps", learn.eps);
  from_config(cfg, "delta", learn.delta);
  from_config(cfg, "constant", learn.constant);
  from_config(cfg, "out", learn.out);
  from_config(cfg, "jobs", learn.jobs);
  CLI::App* lcmd = app.add_subcommand(
      "learn", "ERM over a candidate family with sample-complexity sizes");
  lcmd->add_option("--seed", learn.seed, "sample-set seed");
  lcmd->add_option("--count", learn.count, "instances to draw");
  lcmd->add_option("--gen-n", learn.n, "generator variable count");
  lcmd->add_option("--gen-m", learn.m, "generator constraint count");
  lcmd->add_option("--gen-coeff-max", learn.coeff_max,
                   "generator coefficient cap");
  lcmd->add_option("--candidates", learn.candidates, "candidate family size");
  lcmd->add_option("--candidate-source", learn.candidate_source,
                   "'half' or 'random'");
  lcmd->add_option("--candidate-seed", learn.candidate_seed,
                   "seed for random candidates");
  lcmd->add_option("--kappa", learn.kappa, "tree-size cap");
  lcmd->add_option("--eps", learn.eps, "accuracy target");
  lcmd->add_option("--delta", learn.delta, "failure probability");
  lcmd->add_option("--constant", learn.constant, "hidden-constant knob");
  lcmd->add_option("--config", config_path,
                   "JSON config with flag defaults");
  lcmd->add_option("--out", learn.out, "report table path");
  lcmd->add_option("--jobs", learn.jobs, "worker threads");

  RademacherArgs rade;
  from_config(cfg, "seed", rade.seed);
  from_config(cfg, "count", rade.count);
  from_config(cfg, "gen_n", rade.n);
  from_config(cfg, "gen_m", rade.m);
  from_config(cfg, "gen_coeff_max", rade.coeff_max);
  from_config(cfg, "candidates", rade.candidates);
  from_config(cfg, "candidate_source", rade.candidate_source);
  from_config(cfg, "candidate_seed", rade.candidate_seed);
  from_config(cfg, "kappa", rade.kappa);
  from_config(cfg, "draws", rade.draws);
  from_config(cfg, "sigma_seed", rade.sigma_seed);
  from_config(cfg, "exhaustive", rade.exhaustive);
  from_config(cfg, "out", rade.out);
  from_config(cfg, "jobs", rade.jobs);
  CLI::App* mcmd = app.add_subcommand(
      "rademacher", "Monte-Carlo empirical Rademacher estimate over solver "
                    "values");
  mcmd->add_option("--seed", rade.seed, "sample-set seed");
  mcmd->add_option("--count", rade.count, "instances to draw");
  mcmd->add_option("--gen-n", rade.n, "generator variable count");
  mcmd->add_option("--gen-m", rade.m, "generator constraint count");
  mcmd->add_option("--gen-coeff-max", rade.coeff_max,
                   "generator coefficient cap");
  mcmd->add_option("--candidates", rade.candidates, "candidate family size");
  mcmd->add_option("--candidate-source", rade.candidate_source,
                   "'half' or 'random'");
  mcmd->add_option("--candidate-seed", rade.candidate_seed,
                   "seed for random candidates");
  mcmd->add_option("--kappa", rade.kappa, "tree-size cap");
  mcmd->add_option("--draws", rade.draws, "Monte-Carlo sigma draws");
  mcmd->add_option("--sigma-seed", rade.sigma_seed, "sigma stream seed");
  mcmd->add_flag("--exhaustive", rade.exhaustive,
                 "also report the exact 2^N enumeration");
  mcmd->add_option("--config", config_path,
                   "JSON config with flag defaults");
  mcmd->add_option("--out", rade.out, "report file");
  mcmd->add_option("--jobs", rade.jobs, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (jcmd->parsed()) return cmd_jeroslow(jero);
    if (scmd->parsed()) return cmd_sweep(sweep);
    if (rcmd->parsed()) return cmd_regions(regions);
    if (lcmd->parsed()) return cmd_learn(learn);
    if (mcmd->parsed()) return cmd_rademacher(rade);
  } catch (const BudgetError& e) {
    std::cerr << "budget error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
