#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "riglab/generators.hpp"
#include "riglab/properties.hpp"

namespace riglab {

class PlanningError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Theorem { ConnThm2i, KConnThm2ii, PmThm3, HcThm4, HcThm5, KConnThm6, MindegLemma8, MindegLemma10 };

std::string to_string(Theorem t);
/// Accepts "kconn-Thm2ii" or "kconn-Thm2ii(3)"; the parenthesised k is written to *k.
Theorem parse_theorem(const std::string& tag, int* k = nullptr);
/// True where the limit is 0/1 by the sign of c rather than f(c).
bool is_zero_one_law(Theorem t);

struct Profile {
  enum class Kind { Homogeneous, Explicit, Power };
  Kind kind = Kind::Homogeneous;
  std::vector<double> weights;  // explicit p-bar before scaling
  double exponent = 0.0;        // power profile: weight_i = (i+1)^{-exponent}
};

struct ExperimentConfig {
  Theorem theorem = Theorem::ConnThm2i;
  int k = 1;
  std::size_t n = 0;
  std::size_t m = 0;
  Profile profile;
  std::vector<double> c_grid;
  std::size_t trials_per_point = 1;
  std::uint64_t master_seed = 1;
  std::optional<double> omega;
  std::uint64_t hc_budget = 20'000'000;

  void validate() const;
  nlohmann::json to_json() const;
  static ExperimentConfig from_json(const nlohmann::json& j);
};

struct PlannedPoint {
  double c = 0.0;
  std::size_t vertex_count = 0;
  std::size_t m = 0;
  FeatureProbabilities p = FeatureProbabilities::homogeneous(1, 0.5);
  double target_s1 = 0.0;  // NaN for the refined homogeneous forms
  double s1 = 0.0;
  double a_n = 0.0;
  double scale = 1.0;      // multiplier on the profile weights
  double residual = 0.0;   // relative residual of the solve
  double omega = 0.0;
  std::optional<double> predicted;
};

PlannedPoint plan_point(const ExperimentConfig& config, double c);

struct TrialRecord {
  std::size_t point = 0;
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  Verdict verdict = Verdict::Unknown;
  std::size_t min_degree = 0;
  std::size_t edges = 0;
  bool consistent = true;  // per-trial implications (connected => delta >= 1, ...)
  double elapsed_ms = 0.0;
};

struct PointSummary {
  double c = 0.0;
  std::size_t trials = 0;
  std::size_t yes = 0;
  std::size_t no = 0;
  std::size_t unknown = 0;
  std::size_t min_degree_ge_1 = 0;
  std::size_t min_degree_ge_k = 0;
  std::size_t consistency_violations = 0;
  std::optional<double> frequency;  // yes / (yes + no)
  double wilson_low = 0.0;
  double wilson_high = 1.0;
  double unknown_rate = 0.0;
  std::optional<double> predicted;
  std::optional<double> gap;
  std::optional<bool> covers_prediction;
};

struct SweepResult {
  ExperimentConfig config;
  std::vector<PlannedPoint> points;
  std::vector<TrialRecord> records;  // sorted by (point, trial)
  bool aborted = false;
  std::string error;
  double wall_seconds = 0.0;
};

struct SweepOptions {
  unsigned threads = 1;
  bool record_timing = false;
};

SweepResult run_sweep(const ExperimentConfig& config, const SweepOptions& options = {});

/// Wilson score interval at 95%.
std::pair<double, double> wilson_interval(std::size_t successes, std::size_t total);

std::vector<PointSummary> compare_to_limit(const SweepResult& result);

/// Increasing-property check: no drop between neighbouring grid points beyond
/// twice the larger Wilson half-width.
bool monotone_within_slack(const std::vector<PointSummary>& summaries);

std::string results_csv(const SweepResult& result);
nlohmann::json summary_json(const SweepResult& result);
std::string plot_table(const SweepResult& result);

/// Writes results.csv, summary.json and plot.dat (plus timing.json when the
/// sweep recorded timing). Throws IoError with the offending path.
void emit_outputs(const SweepResult& result, const std::filesystem::path& dir);

}  // namespace riglab
