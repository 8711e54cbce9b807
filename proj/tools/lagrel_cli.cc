#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "lagrel/bounds.h"
#include "lagrel/dual.h"
#include "lagrel/errors.h"
#include "lagrel/experiment.h"
#include "lagrel/hard_family.h"
#include "lagrel/instance_io.h"
#include "lagrel/learners.h"
#include "lagrel/packing.h"
#include "lagrel/seeding.h"
#include "lagrel/subproblem.h"
#include "lagrel/vrp.h"

namespace {

using json = nlohmann::json;
using namespace lagrel;

std::vector<double> ToStd(const Vector& v) { return {v.data(), v.data() + v.size()}; }

void Print(const json& j) { std::cout << j.dump(2) << '\n'; }

struct DualSolveArgs {
  std::string instance;
  double pi_max = 1.0;
  int iters = 1000;
  double violation_bound = 1.0;
};

void RunDualSolve(const DualSolveArgs& args) {
  const MilpInstance p = LoadInstanceFile(args.instance);
  DualSolveConfig cfg;
  cfg.iterations = args.iters;
  const DualSolveResult r = SolveDual(p, ProblemBounds(args.violation_bound, args.pi_max), cfg);
  json out = {{"value", r.value},
              {"pi_hat", ToStd(r.pi_hat.values())},
              {"best_iteration", r.best_iteration}};
  try {
    const OptSolution opt = SolveOptBruteForce(p);
    out["opt"] = opt.value;
    out["weak_duality_holds"] = r.value <= opt.value + 1e-9;
  } catch (const InfeasibleError& e) {
    out["opt"] = nullptr;
    out["opt_error"] = e.what();
  }
  Print(out);
}

struct FamilyArgs {
  std::string variant = "dual-lb";
  int s = 8;
  double mu = 1.0;
  double sigma = 1.0;
  double eps = 0.2;
  double pi_max = 3.0;
  double violation_bound = 1.0;
  std::string v = "alternating";
};

FamilyConfig ToFamilyConfig(const FamilyArgs& a) {
  FamilyConfig f;
  if (a.variant == "dual-lb") {
    f.variant = FamilyVariant::kDualLowerBound;
  } else if (a.variant == "warmstart-lb") {
    f.variant = FamilyVariant::kWarmStartLowerBound;
  } else {
    throw ConfigError("unknown family '" + a.variant + "'");
  }
  f.mu = a.mu;
  f.sigma = a.sigma;
  f.epsilon = a.eps;
  f.pi_max = a.pi_max;
  f.violation_bound = a.violation_bound;
  f.v_pattern = ParseVPattern(a.v);
  return f;
}

struct LearnArgs {
  std::string algo = "sga";
  FamilyArgs family;
  long long n = 100;
  std::uint64_t seed = 0;
  std::optional<long long> erm_iters;
};

void RunLearn(const LearnArgs& args) {
  const LearnerKind kind = ParseLearner(args.algo);
  const FamilyConfig family = ToFamilyConfig(args.family);
  const HardFamilySpec spec = MakeFamilySpec(family, args.family.s, args.seed);
  if (args.n < 1) throw ConfigError("--N must be >= 1");
  Rng rng(DeriveSeed(args.seed, {HashLabel("learn")}));
  std::vector<MilpInstance> sample;
  sample.reserve(static_cast<std::size_t>(args.n));
  for (long long i = 0; i < args.n; ++i) sample.push_back(SampleInstance(spec, rng));

  const ProblemBounds bounds(family.violation_bound, family.pi_max);
  LearnedMultipliers learned = [&] {
    switch (kind) {
      case LearnerKind::kSga:
        return SgaLearn(sample, {.pi_max = family.pi_max,
                                 .violation_bound = family.violation_bound,
                                 .seed = args.seed});
      case LearnerKind::kErm:
        return ErmLearn(sample, bounds, {.iterations = args.erm_iters, .seed = args.seed});
      case LearnerKind::kWarmStart:
        break;
    }
    return WarmStartLearn(sample, bounds);
  }();
  learned.seed = args.seed;

  json out = {{"learner", LearnerName(kind)},
              {"pi", ToStd(learned.pi.values())},
              {"N", learned.num_instances},
              {"seed", learned.seed},
              {"iterations", learned.iterations},
              {"v", spec.v()}};
  if (spec.variant() == FamilyVariant::kDualLowerBound && spec.epsilon() > 0.0) {
    const MultiplierVector pi_star = OptimalMultiplier(spec);
    out["pi_star"] = ToStd(pi_star.values());
    out["excess_risk"] = PopulationRisk(spec, pi_star) - PopulationRisk(spec, learned.pi);
  } else if (spec.variant() == FamilyVariant::kWarmStartLowerBound) {
    out["phi_star"] = ToStd(MeanCosts(spec));
    out["excess_risk"] = WarmStartExcessRisk(spec, learned.pi.values());
  }
  Print(out);
}

struct HardfamArgs {
  int s = 16;
  double mu = 1.0;
  double sigma = 1.0;
  double eps = 0.2;
  long long n = 100;
  std::optional<double> pi_max;
};

void RunHardfamVerify(const HardfamArgs& args) {
  const double pi_max = args.pi_max.value_or(args.mu + args.sigma + 1.0);
  std::vector<int> zeros(args.s, 0), ones(args.s, 1);
  json out = {{"s", args.s}, {"N", args.n}, {"epsilon", args.eps}};

  if (args.s >= 8 && args.s <= 24) {
    const PackingSet set = VgPacking(args.s);
    // The l1 distance between mu 1 + sigma v and mu 1 + sigma v' is
    // sigma d_H(v, v'), so the packing distance gives the separation.
    const auto min_d = MinPairwiseDistance(set.codewords, args.s);
    out["packing"] = {{"size", set.size()},
                      {"target_distance", set.target_distance},
                      {"min_hamming", min_d.value_or(0)},
                      {"min_l1_separation", args.sigma * min_d.value_or(0)},
                      {"required_separation", args.sigma * args.s / 8.0}};
  } else {
    out["packing"] = "not available (needs 8 <= s <= 24)";
  }

  const FanoDiagnostics f = KlAndFano(args.s, args.n, args.eps, zeros, ones, args.sigma);
  out["kl"] = {{"hamming", f.hamming},
               {"exact_single", f.kl_single},
               {"exact_sample", f.kl_sample},
               {"bound", f.kl_bound},
               {"exact_within_bound", f.kl_sample <= f.kl_bound}};
  if (f.fano_epsilon) {
    out["fano"] = {{"epsilon_star", *f.fano_epsilon},
                   {"lower_bound_radius_s_over_16", *f.lower_bound_packing_radius},
                   {"lower_bound_radius_s_over_8", *f.lower_bound_separation}};
  } else {
    out["fano"] = "not applicable (needs s > 16)";
  }

  // Closed form vs grid search, one coordinate per bias value.
  const HardFamilySpec spec(FamilyVariant::kDualLowerBound, {1, 0}, args.eps, pi_max, args.mu,
                            args.sigma);
  const Vector closed = OptimalMultiplier(spec).values();
  double worst = 0.0;
  for (int k = 0; k < 2; ++k) {
    double best = -1e300, best_x = 0.0;
    for (int i = 0; i * 1e-3 <= pi_max; ++i) {
      const double r = CoordinateRisk(spec, k, i * 1e-3);
      if (r > best) {
        best = r;
        best_x = i * 1e-3;
      }
    }
    worst = std::max(worst, std::abs(best_x - closed[k]));
  }
  out["maximizer_check"] = {{"max_abs_deviation", worst}, {"within_grid_step", worst <= 1e-3}};
  Print(out);
}

struct BoundsArgs {
  int s = 1;
  long long n = 1;
  double violation_bound = 1.0;
  double pi_max = 1.0;
  double delta = 1.0;
};

void RunBounds(const BoundsArgs& args) {
  const BoundReport r =
      MakeBoundReport(args.s, args.n, args.violation_bound, args.pi_max, args.delta);
  Print({{"s", r.s},
         {"N", r.num_samples},
         {"B", r.violation_bound},
         {"pi_max", r.pi_max},
         {"delta", r.delta},
         {"covering_log", r.covering_log},
         {"dudley_bound", r.dudley_bound},
         {"sga_bound", r.sga_bound},
         {"erm_excess_bound", r.erm_excess_bound},
         {"warmstart_bound", r.warmstart_bound},
         {"dudley_constant", r.dudley_constant},
         {"dudley_constant_note", "constant chosen by this implementation; the s^1.5/sqrt(N) order is the theory's"}});
}

struct VrpArgs {
  int nodes = 5;
  int vehicles = 2;
  double capacity = 6.0;
  std::uint64_t seed = 0;
  int iters = 100;
};

void RunVrpDemo(const VrpArgs& args) {
  const VrpInstance inst = RandomVrpInstance(args.nodes, args.vehicles, args.capacity, args.seed);
  const VrpDualState st = VrpDualAscent(inst, {.iterations = args.iters});
  Print({{"nodes", inst.num_nodes()},
         {"vehicles", inst.vehicles()},
         {"capacity", inst.capacity()},
         {"opt", st.opt ? json(*st.opt) : json(nullptr)},
         {"f0", st.initial_bound},
         {"best_bound", st.best_bound},
         {"best_pi", ToStd(st.best_pi)},
         {"gap", st.gap ? json(*st.gap) : json(nullptr)},
         {"iterations", st.iterations}});
}

struct RatesArgs {
  std::string config;
  std::string out;
  std::optional<int> workers;
};

void RunRates(const RatesArgs& args) {
  std::ifstream in(args.config);
  if (!in) throw ConfigError("cannot open config '" + args.config + "'");
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  ExperimentConfig cfg = ParseExperimentConfig(text);
  if (args.workers) cfg.workers = *args.workers;
  if (!args.out.empty()) cfg.output_path = args.out;
  if (cfg.output_path.empty()) throw ConfigError("no output path (--out or \"output\")");
  ValidateExperimentConfig(cfg);

  const auto records = RunRateExperiment(cfg);
  std::ofstream out(cfg.output_path);
  if (!out) throw ConfigError("cannot write '" + cfg.output_path + "'");
  WriteCsv(out, records);

  int flagged = 0;
  for (const TrialRecord& r : records) flagged += r.erm_gap_flagged;
  if (flagged > 0) {
    std::cerr << "warning: " << flagged
              << " ERM trials have optimization error above 10% of their excess risk\n";
  }
  std::cout << "wrote " << records.size() << " records to " << cfg.output_path << '\n';
}

struct SlopeArgs {
  std::string in;
  std::string learner = "sga";
  std::optional<int> s;
  int min_trials = 10;
};

void RunSlope(const SlopeArgs& args) {
  std::ifstream in(args.in);
  if (!in) throw ConfigError("cannot open '" + args.in + "'");
  const auto records = ReadCsv(in);
  const SlopeFit fit = FitLogLogSlope(records, ParseLearner(args.learner), args.s, args.min_trials);
  json cells = json::array();
  for (const CellSummary& c : fit.cells) {
    cells.push_back({{"N", c.num_samples},
                     {"trials", c.count},
                     {"mean_excess", c.mean_excess},
                     {"standard_error", c.standard_error},
                     {"mean_bound", c.mean_bound}});
  }
  Print({{"learner", args.learner},
         {"slope", fit.slope},
         {"intercept", fit.intercept},
         {"r2", fit.r2},
         {"cells", cells},
         {"undefined_cells", fit.undefined_cells}});
}

void AddFamilyOptions(CLI::App* cmd, FamilyArgs& f) {
  cmd->add_option("--family", f.variant, "dual-lb or warmstart-lb")->capture_default_str();
  cmd->add_option("--s", f.s, "Dimension")->capture_default_str();
  cmd->add_option("--mu", f.mu)->capture_default_str();
  cmd->add_option("--sigma", f.sigma)->capture_default_str();
  cmd->add_option("--eps", f.eps)->capture_default_str();
  cmd->add_option("--pi-max", f.pi_max)->capture_default_str();
  cmd->add_option("--B", f.violation_bound)->capture_default_str();
  cmd->add_option("--v", f.v, "alternating, ones, zeros or random")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Learned Lagrangian multipliers: dual solves, learners, bounds, experiments"};
  app.require_subcommand(1);

  DualSolveArgs dual;
  auto* dual_cmd = app.add_subcommand("dual-solve", "Maximize u(., P) for one JSON instance");
  dual_cmd->add_option("--instance", dual.instance)->required();
  dual_cmd->add_option("--pi-max", dual.pi_max)->required();
  dual_cmd->add_option("--iters", dual.iters)->capture_default_str();
  dual_cmd->add_option("--B", dual.violation_bound)->capture_default_str();
  dual_cmd->callback([&] { RunDualSolve(dual); });

  LearnArgs learn;
  auto* learn_cmd = app.add_subcommand("learn", "Learn multipliers on a sampled hard family");
  learn_cmd->add_option("--algo", learn.algo, "sga, erm or warmstart")->capture_default_str();
  AddFamilyOptions(learn_cmd, learn.family);
  learn_cmd->add_option("--N", learn.n)->capture_default_str();
  learn_cmd->add_option("--seed", learn.seed)->capture_default_str();
  learn_cmd->add_option("--erm-iters", learn.erm_iters);
  learn_cmd->callback([&] { RunLearn(learn); });

  HardfamArgs hard;
  auto* hard_cmd = app.add_subcommand("hardfam-verify", "Check the hard-family construction");
  hard_cmd->add_option("--s", hard.s)->capture_default_str();
  hard_cmd->add_option("--mu", hard.mu)->capture_default_str();
  hard_cmd->add_option("--sigma", hard.sigma)->capture_default_str();
  hard_cmd->add_option("--eps", hard.eps)->capture_default_str();
  hard_cmd->add_option("--N", hard.n)->capture_default_str();
  hard_cmd->add_option("--pi-max", hard.pi_max, "Defaults to mu + sigma + 1");
  hard_cmd->callback([&] { RunHardfamVerify(hard); });

  BoundsArgs bounds;
  auto* bounds_cmd = app.add_subcommand("bounds", "Print the bound report as JSON");
  bounds_cmd->add_option("--s", bounds.s)->required();
  bounds_cmd->add_option("--N", bounds.n)->required();
  bounds_cmd->add_option("--B", bounds.violation_bound)->capture_default_str();
  bounds_cmd->add_option("--pi-max", bounds.pi_max)->capture_default_str();
  bounds_cmd->add_option("--delta", bounds.delta)->capture_default_str();
  bounds_cmd->callback([&] { RunBounds(bounds); });

  VrpArgs vrp;
  auto* vrp_cmd = app.add_subcommand("vrp-demo", "Lagrangian bound on a random toy VRP");
  vrp_cmd->add_option("--nodes", vrp.nodes, "Including the depot")->capture_default_str();
  vrp_cmd->add_option("--vehicles", vrp.vehicles)->capture_default_str();
  vrp_cmd->add_option("--capacity", vrp.capacity)->capture_default_str();
  vrp_cmd->add_option("--seed", vrp.seed)->capture_default_str();
  vrp_cmd->add_option("--iters", vrp.iters)->capture_default_str();
  vrp_cmd->callback([&] { RunVrpDemo(vrp); });

  RatesArgs rates;
  auto* rates_cmd = app.add_subcommand("rates", "Run a rate experiment and write CSV");
  rates_cmd->add_option("--config", rates.config)->required();
  rates_cmd->add_option("--out", rates.out);
  rates_cmd->add_option("--workers", rates.workers);
  rates_cmd->callback([&] { RunRates(rates); });

  SlopeArgs slope;
  auto* slope_cmd = app.add_subcommand("slope", "Fit a log-log slope to experiment CSV");
  slope_cmd->add_option("--in", slope.in)->required();
  slope_cmd->add_option("--learner", slope.learner)->capture_default_str();
  slope_cmd->add_option("--s", slope.s);
  slope_cmd->add_option("--min-trials", slope.min_trials)->capture_default_str();
  slope_cmd->callback([&] { RunSlope(slope); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const lagrel::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
