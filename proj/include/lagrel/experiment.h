#ifndef LAGREL_EXPERIMENT_H_
#define LAGREL_EXPERIMENT_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lagrel/hard_family.h"
#include "lagrel/learners.h"

namespace lagrel {

// How the family's bias vector v is chosen for each dimension s.
enum class VPattern { kAlternating, kOnes, kZeros, kRandom };

VPattern ParseVPattern(std::string_view name);
std::string_view VPatternName(VPattern pattern);

// alternating = (1, 0, 1, 0, ...); random draws each bit from a stream
// derived from (master_seed, s).
std::vector<int> MakeBiasVector(VPattern pattern, int s,
                                std::uint64_t master_seed);

struct FamilyConfig {
  FamilyVariant variant = FamilyVariant::kDualLowerBound;
  double mu = 1.0;
  double sigma = 1.0;
  double epsilon = 0.2;
  double pi_max = 3.0;
  double violation_bound = 1.0;
  VPattern v_pattern = VPattern::kAlternating;
};

HardFamilySpec MakeFamilySpec(const FamilyConfig& family, int s,
                              std::uint64_t master_seed);

struct ExperimentConfig {
  FamilyConfig family;
  std::vector<LearnerKind> learners;
  std::vector<long long> sample_sizes;
  std::vector<int> dimensions;
  int trials = 1;
  std::uint64_t master_seed = 0;
  int workers = 1;
  // When false runtime_ms is written as 0 so repeated runs are byte-identical.
  bool timing = true;
  // Overrides the ERM default of ceil(50 N sqrt(s)) iterations.
  std::optional<long long> erm_iterations;
  std::string output_path;
};

// Parses the JSON config documented in docs/experiment_config.md and
// validates it. Throws ConfigError.
ExperimentConfig ParseExperimentConfig(std::string_view json_text);

// Throws ConfigError on learner/family mismatch (sga and erm need the dual
// family, warmstart the warm-start family), fewer than two sample sizes,
// trials < 1, workers < 1, or a family that is invalid for some s.
void ValidateExperimentConfig(const ExperimentConfig& config);

struct TrialRecord {
  LearnerKind learner = LearnerKind::kSga;
  int s = 0;
  long long num_samples = 0;
  int trial = 0;
  std::uint64_t seed = 0;
  // max(raw, 0); raw values below -1e-9 are reported as errors.
  double excess_risk = 0.0;
  double excess_risk_raw = 0.0;
  double theory_bound = 0.0;
  double runtime_ms = 0.0;
  // ERM only: exact empirical optimum minus the learned empirical value.
  std::optional<double> erm_optimization_gap;
  // ERM only: gap above 10% of the excess risk.
  bool erm_gap_flagged = false;
};

// DeriveSeed(master, {HashLabel(learner), s, N, trial}).
std::uint64_t TrialSeed(std::uint64_t master_seed, LearnerKind learner, int s,
                        long long num_samples, int trial);

TrialRecord RunTrial(const ExperimentConfig& config, LearnerKind learner,
                     int s, long long num_samples, int trial);

// Every (learner, s, N, trial) cell, run on config.workers threads and
// returned sorted by (learner, s, N, trial).
std::vector<TrialRecord> RunRateExperiment(const ExperimentConfig& config);

// Header: learner,s,N,trial,seed,excess_risk,theory_bound,runtime_ms
void WriteCsv(std::ostream& out, const std::vector<TrialRecord>& records);
std::vector<TrialRecord> ReadCsv(std::istream& in);

struct CellSummary {
  long long num_samples = 0;
  int count = 0;
  double mean_excess = 0.0;
  double standard_error = 0.0;
  double mean_bound = 0.0;
};

// Per-N summaries for one learner (and one s when given), ascending in N.
std::vector<CellSummary> SummarizeCells(const std::vector<TrialRecord>& records,
                                        LearnerKind learner,
                                        std::optional<int> s = std::nullopt);

struct SlopeFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
  std::vector<CellSummary> cells;
  // Sample sizes left out because their mean excess was not positive.
  std::vector<long long> undefined_cells;
};

// Least squares of ln(mean excess) on ln N. Needs at least two cells with
// >= min_trials records and positive mean (ConfigError otherwise). When the
// records span several s, `s` must be given.
SlopeFit FitLogLogSlope(const std::vector<TrialRecord>& records,
                        LearnerKind learner,
                        std::optional<int> s = std::nullopt,
                        int min_trials = 10);

}  // namespace lagrel

#endif  // LAGREL_EXPERIMENT_H_
