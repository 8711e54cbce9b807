#include "lagrel/experiment.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <exception>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>
#include <tuple>

#include <nlohmann/json.hpp>

#include "lagrel/bounds.h"
#include "lagrel/errors.h"

namespace lagrel {
namespace {

using json = nlohmann::json;

constexpr double kNegativeExcessTol = 1e-9;
constexpr double kErmGapFraction = 0.1;

int LearnerOrder(LearnerKind kind) { return static_cast<int>(kind); }

FamilyVariant ParseVariant(std::string_view name) {
  if (name == "dual-lb") return FamilyVariant::kDualLowerBound;
  if (name == "warmstart-lb") return FamilyVariant::kWarmStartLowerBound;
  throw ConfigError("unknown family variant '" + std::string(name) + "'");
}

template <typename T>
T Get(const json& obj, const char* key, T fallback) {
  if (!obj.contains(key)) return fallback;
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config field '") + key + "': " + e.what());
  }
}

template <typename T>
T Require(const json& obj, const char* key) {
  if (!obj.contains(key)) {
    throw ConfigError(std::string("config is missing '") + key + "'");
  }
  return Get<T>(obj, key, T{});
}

std::string FormatDouble(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

}  // namespace

VPattern ParseVPattern(std::string_view name) {
  if (name == "alternating") return VPattern::kAlternating;
  if (name == "ones") return VPattern::kOnes;
  if (name == "zeros") return VPattern::kZeros;
  if (name == "random") return VPattern::kRandom;
  throw ConfigError("unknown v pattern '" + std::string(name) + "'");
}

std::string_view VPatternName(VPattern pattern) {
  switch (pattern) {
    case VPattern::kAlternating:
      return "alternating";
    case VPattern::kOnes:
      return "ones";
    case VPattern::kZeros:
      return "zeros";
    case VPattern::kRandom:
      return "random";
  }
  return "unknown";
}

std::vector<int> MakeBiasVector(VPattern pattern, int s,
                                std::uint64_t master_seed) {
  std::vector<int> v(s, 0);
  switch (pattern) {
    case VPattern::kAlternating:
      for (int k = 0; k < s; k += 2) v[k] = 1;
      break;
    case VPattern::kOnes:
      std::fill(v.begin(), v.end(), 1);
      break;
    case VPattern::kZeros:
      break;
    case VPattern::kRandom: {
      Rng rng(DeriveSeed(master_seed,
                         {HashLabel("v"), static_cast<std::uint64_t>(s)}));
      for (int& bit : v) bit = static_cast<int>(rng() >> 63);
      break;
    }
  }
  return v;
}

HardFamilySpec MakeFamilySpec(const FamilyConfig& family, int s,
                              std::uint64_t master_seed) {
  return HardFamilySpec(family.variant,
                        MakeBiasVector(family.v_pattern, s, master_seed),
                        family.epsilon, family.pi_max, family.mu,
                        family.sigma);
}

ExperimentConfig ParseExperimentConfig(std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ConfigError("config must be a JSON object");

  ExperimentConfig config;
  const json family = root.contains("family") ? root.at("family") : json::object();
  if (!family.is_object()) throw ConfigError("'family' must be an object");
  config.family.variant =
      ParseVariant(Get<std::string>(family, "variant", "dual-lb"));
  config.family.mu = Get<double>(family, "mu", 1.0);
  config.family.sigma = Get<double>(family, "sigma", 1.0);
  config.family.epsilon = Get<double>(family, "epsilon", 0.2);
  config.family.pi_max = Get<double>(family, "pi_max", 3.0);
  config.family.violation_bound = Get<double>(family, "B", 1.0);
  config.family.v_pattern =
      ParseVPattern(Get<std::string>(family, "v", "alternating"));

  for (const auto& name : Require<std::vector<std::string>>(root, "learners")) {
    config.learners.push_back(ParseLearner(name));
  }
  config.sample_sizes = Require<std::vector<long long>>(root, "N");
  config.dimensions = Require<std::vector<int>>(root, "s");
  config.trials = Get<int>(root, "trials", 1);
  config.master_seed = Get<std::uint64_t>(root, "seed", 0);
  config.workers = Get<int>(root, "workers", 1);
  config.timing = Get<bool>(root, "timing", true);
  if (root.contains("erm_iterations")) {
    config.erm_iterations = Get<long long>(root, "erm_iterations", 0);
  }
  config.output_path = Get<std::string>(root, "output", "");
  ValidateExperimentConfig(config);
  return config;
}

void ValidateExperimentConfig(const ExperimentConfig& config) {
  if (config.learners.empty()) throw ConfigError("no learners configured");
  for (LearnerKind learner : config.learners) {
    const bool wants_dual = learner != LearnerKind::kWarmStart;
    const bool has_dual =
        config.family.variant == FamilyVariant::kDualLowerBound;
    if (wants_dual != has_dual) {
      throw ConfigError("learner '" + std::string(LearnerName(learner)) +
                        "' has no closed-form excess risk on this family");
    }
    if (wants_dual && !(config.family.epsilon > 0.0)) {
      throw ConfigError("dual family needs epsilon > 0 for a unique optimum");
    }
  }
  std::vector<long long> sizes = config.sample_sizes;
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  if (sizes.size() < 2) {
    throw ConfigError("need at least two distinct N values for slope fitting");
  }
  if (sizes.front() < 1) throw ConfigError("N values must be >= 1");
  if (config.dimensions.empty()) throw ConfigError("no s values configured");
  if (config.trials < 1) throw ConfigError("trials must be >= 1");
  if (config.workers < 1) throw ConfigError("workers must be >= 1");
  if (!(config.family.violation_bound > 0.0)) {
    throw ConfigError("B must be positive");
  }
  if (config.erm_iterations && *config.erm_iterations < 1) {
    throw ConfigError("erm_iterations must be >= 1");
  }
  for (int s : config.dimensions) {
    try {
      MakeFamilySpec(config.family, s, config.master_seed);
    } catch (const Error& e) {
      throw ConfigError("family invalid for s = " + std::to_string(s) + ": " +
                        e.what());
    }
  }
}

std::uint64_t TrialSeed(std::uint64_t master_seed, LearnerKind learner, int s,
                        long long num_samples, int trial) {
  return DeriveSeed(master_seed, {HashLabel(LearnerName(learner)),
                                  static_cast<std::uint64_t>(s),
                                  static_cast<std::uint64_t>(num_samples),
                                  static_cast<std::uint64_t>(trial)});
}

TrialRecord RunTrial(const ExperimentConfig& config, LearnerKind learner,
                     int s, long long num_samples, int trial) {
  const auto start = std::chrono::steady_clock::now();
  TrialRecord record;
  record.learner = learner;
  record.s = s;
  record.num_samples = num_samples;
  record.trial = trial;
  record.seed = TrialSeed(config.master_seed, learner, s, num_samples, trial);

  const HardFamilySpec spec =
      MakeFamilySpec(config.family, s, config.master_seed);
  const ProblemBounds bounds(config.family.violation_bound,
                             config.family.pi_max);
  Rng rng(record.seed);
  std::vector<MilpInstance> sample;
  sample.reserve(static_cast<std::size_t>(num_samples));
  for (long long i = 0; i < num_samples; ++i) {
    sample.push_back(SampleInstance(spec, rng));
  }

  switch (learner) {
    case LearnerKind::kSga: {
      const SgaConfig sga{config.family.pi_max, config.family.violation_bound,
                          std::nullopt, record.seed};
      const LearnedMultipliers learned = SgaLearn(sample, sga);
      record.excess_risk_raw = PopulationRisk(spec, OptimalMultiplier(spec)) -
                               PopulationRisk(spec, learned.pi);
      record.theory_bound = SgaBound(s, config.family.violation_bound,
                                     config.family.pi_max, num_samples);
      break;
    }
    case LearnerKind::kErm: {
      const LearnedMultipliers learned =
          ErmLearn(sample, bounds, {config.erm_iterations, record.seed});
      record.excess_risk_raw = PopulationRisk(spec, OptimalMultiplier(spec)) -
                               PopulationRisk(spec, learned.pi);
      record.theory_bound = 2.0 * DudleyBound(s, config.family.violation_bound,
                                              config.family.pi_max,
                                              num_samples);
      if (auto optimum = RestrictedErmOptimum(sample, config.family.pi_max)) {
        record.erm_optimization_gap =
            *optimum - EmpiricalDualValue(sample, learned.pi);
        record.erm_gap_flagged =
            *record.erm_optimization_gap >
            kErmGapFraction * std::max(record.excess_risk_raw, 0.0);
      }
      break;
    }
    case LearnerKind::kWarmStart: {
      const LearnedMultipliers learned = WarmStartLearn(sample, bounds);
      record.excess_risk_raw = WarmStartExcessRisk(spec, learned.pi.values());
      record.theory_bound =
          WarmStartBound(s, config.family.pi_max, num_samples);
      break;
    }
  }
  if (record.excess_risk_raw < -kNegativeExcessTol) {
    throw Error("negative excess risk " + FormatDouble(record.excess_risk_raw) +
                " for " + std::string(LearnerName(learner)));
  }
  record.excess_risk = std::max(record.excess_risk_raw, 0.0);
  if (config.timing) {
    record.runtime_ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start)
                            .count();
  }
  return record;
}

std::vector<TrialRecord> RunRateExperiment(const ExperimentConfig& config) {
  ValidateExperimentConfig(config);
  struct Job {
    LearnerKind learner;
    int s;
    long long n;
    int trial;
  };
  std::vector<Job> jobs;
  for (LearnerKind learner : config.learners) {
    for (int s : config.dimensions) {
      for (long long n : config.sample_sizes) {
        for (int trial = 0; trial < config.trials; ++trial) {
          jobs.push_back({learner, s, n, trial});
        }
      }
    }
  }

  std::vector<TrialRecord> records(jobs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        const Job& job = jobs[i];
        records[i] = RunTrial(config, job.learner, job.s, job.n, job.trial);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = jobs.size();
      }
    }
  };
  const int threads =
      std::min<int>(config.workers, static_cast<int>(jobs.size()));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& thread : pool) thread.join();
  if (failure) std::rethrow_exception(failure);

  std::sort(records.begin(), records.end(),
            [](const TrialRecord& a, const TrialRecord& b) {
              return std::tuple(LearnerOrder(a.learner), a.s, a.num_samples,
                                a.trial) < std::tuple(LearnerOrder(b.learner),
                                                      b.s, b.num_samples,
                                                      b.trial);
            });
  return records;
}

void WriteCsv(std::ostream& out, const std::vector<TrialRecord>& records) {
  out << "learner,s,N,trial,seed,excess_risk,theory_bound,runtime_ms\n";
  char runtime[32];
  for (const TrialRecord& r : records) {
    std::snprintf(runtime, sizeof(runtime), "%.3f", r.runtime_ms);
    out << LearnerName(r.learner) << ',' << r.s << ',' << r.num_samples << ','
        << r.trial << ',' << r.seed << ',' << FormatDouble(r.excess_risk)
        << ',' << FormatDouble(r.theory_bound) << ',' << runtime << '\n';
  }
}

std::vector<TrialRecord> ReadCsv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) ||
      line != "learner,s,N,trial,seed,excess_risk,theory_bound,runtime_ms") {
    throw ConfigError("unexpected CSV header");
  }
  std::vector<TrialRecord> records;
  int line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream row(line);
    for (std::string field; std::getline(row, field, ',');) {
      fields.push_back(field);
    }
    if (fields.size() != 8) {
      throw ConfigError("CSV line " + std::to_string(line_number) +
                        ": expected 8 fields");
    }
    try {
      TrialRecord r;
      r.learner = ParseLearner(fields[0]);
      r.s = std::stoi(fields[1]);
      r.num_samples = std::stoll(fields[2]);
      r.trial = std::stoi(fields[3]);
      r.seed = std::stoull(fields[4]);
      r.excess_risk = std::stod(fields[5]);
      r.excess_risk_raw = r.excess_risk;
      r.theory_bound = std::stod(fields[6]);
      r.runtime_ms = std::stod(fields[7]);
      records.push_back(r);
    } catch (const std::logic_error& e) {
      throw ConfigError("CSV line " + std::to_string(line_number) + ": " +
                        e.what());
    }
  }
  return records;
}

std::vector<CellSummary> SummarizeCells(const std::vector<TrialRecord>& records,
                                        LearnerKind learner,
                                        std::optional<int> s) {
  struct Acc {
    int count = 0;
    double sum = 0.0;
    double sum_sq = 0.0;
    double bound = 0.0;
  };
  std::map<long long, Acc> cells;
  for (const TrialRecord& r : records) {
    if (r.learner != learner || (s && r.s != *s)) continue;
    Acc& acc = cells[r.num_samples];
    ++acc.count;
    acc.sum += r.excess_risk;
    acc.sum_sq += r.excess_risk * r.excess_risk;
    acc.bound += r.theory_bound;
  }
  std::vector<CellSummary> out;
  for (const auto& [n, acc] : cells) {
    CellSummary cell;
    cell.num_samples = n;
    cell.count = acc.count;
    cell.mean_excess = acc.sum / acc.count;
    cell.mean_bound = acc.bound / acc.count;
    if (acc.count > 1) {
      const double var = std::max(
          0.0, (acc.sum_sq - acc.count * cell.mean_excess * cell.mean_excess) /
                   (acc.count - 1));
      cell.standard_error = std::sqrt(var / acc.count);
    }
    out.push_back(cell);
  }
  return out;
}

SlopeFit FitLogLogSlope(const std::vector<TrialRecord>& records,
                        LearnerKind learner, std::optional<int> s,
                        int min_trials) {
  if (!s) {
    std::optional<int> seen;
    for (const TrialRecord& r : records) {
      if (r.learner != learner) continue;
      if (seen && *seen != r.s) {
        throw ConfigError("records span several s; pick one");
      }
      seen = r.s;
    }
  }
  SlopeFit fit;
  std::vector<double> xs;
  std::vector<double> ys;
  for (const CellSummary& cell : SummarizeCells(records, learner, s)) {
    if (cell.count < min_trials) continue;
    if (!(cell.mean_excess > 0.0)) {
      fit.undefined_cells.push_back(cell.num_samples);
      continue;
    }
    fit.cells.push_back(cell);
    xs.push_back(std::log(static_cast<double>(cell.num_samples)));
    ys.push_back(std::log(cell.mean_excess));
  }
  if (xs.size() < 2) {
    throw ConfigError("slope needs two N values with >= " +
                      std::to_string(min_trials) +
                      " trials and positive mean excess");
  }
  const double count = static_cast<double>(xs.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= count;
  my /= count;
  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r2 = syy > 0.0 ? (sxy * sxy) / (sxx * syy) : 1.0;
  return fit;
}

}  // namespace lagrel
