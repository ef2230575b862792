#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "riglab/generators.hpp"
#include "riglab/graph.hpp"
#include "riglab/random.hpp"
#include "riglab/thresholds.hpp"

namespace riglab {

/// Per-feature sizes X_i, the non-singleton sizes Y_i, odd-size indicators
/// Z_i, and the draw counts M2 = sum (Y_i - 3 Z_i)/2, M3 = sum Z_i.
struct FeatureDecomposition {
  std::vector<std::uint32_t> x;
  std::vector<std::uint32_t> y;
  std::vector<std::uint8_t> z;
  std::uint64_t m2 = 0;
  std::uint64_t m3 = 0;
  std::uint64_t sum_y = 0;
};

FeatureDecomposition decompose_sizes(std::vector<std::uint32_t> sizes);
FeatureDecomposition decompose_features(const RigInstance& r);

struct CoupledFeature {
  SimpleGraph graph;
  std::vector<Vertex> feature_set;
};

/// G*_2(n, (y-3z)/2) ∪ G*_3(n, z) together with a y-element vertex set that
/// contains every non-isolated vertex of that graph.
CoupledFeature couple_feature(std::uint32_t y, std::uint8_t z, std::size_t n, const Seed& seed);

/// Stream-sharing variant: draws come from the caller's pair/triple streams
/// and padding vertices from `pad`.
CoupledFeature couple_feature(std::uint32_t y, std::uint8_t z, std::size_t n, SubsetStream& pairs,
                              SubsetStream& triples, Rng& pad);

struct CouplingReport {
  bool contained = false;         // per-feature union inside the coupled RIG
  bool prefix_contained = false;  // G*_2(n,m2') ∪ G*_3(n,m3') inside the coupled RIG
  bool poisson_m2_ok = false;     // m2' <= M2
  bool poisson_m3_ok = false;     // m3' <= M3
  bool y_concentration_ok = false;
  bool regime_infeasible = false;  // omega^2 >= S3 / sqrt(S1)
  bool m2_mean_clamped = false;
  bool m3_mean_clamped = false;
  std::uint64_t m2 = 0, m3 = 0, sum_y = 0;
  std::uint64_t m2_prime = 0, m3_prime = 0;
  double m2_mean = 0.0, m3_mean = 0.0;
  double s1 = 0.0, s3 = 0.0, omega = 0.0;
  std::size_t rig_edges = 0;
  std::size_t coupled_edges = 0;
  std::size_t prefix_edges = 0;

  bool guards_hold() const { return poisson_m2_ok && poisson_m3_ok && y_concentration_ok; }
  std::map<std::string, bool> guard_events() const;
};

CouplingReport run_coupling_trial(std::size_t n, const FeatureProbabilities& p, double omega,
                                  const Seed& seed);

struct CollectorReport {
  std::uint64_t total_draws = 0;  // T = sum T_i
  std::uint64_t sum_y = 0;
  std::uint64_t overhead = 0;     // sum (T_i - Y_i)
  std::uint64_t covered_at = 0;   // draws until all n coupons seen (process continues past T)
  double t_minus = 0.0, t_plus = 0.0;
  bool a_minus = false;           // covered_at <= T-
  bool a_plus = false;            // covered_at <= T+
  bool b = false;                 // T- <= T <= T+
  bool b1 = false;                // T <= sum Y + S1 / (omega ln n)
  bool b2 = false;                // |sum Y - S1| <= omega sqrt(S1)
  bool delta_ge_1 = false;        // min degree of the coupled RIG is at least 1
  std::size_t rig_edges = 0;
  double s1 = 0.0, omega = 0.0;

  /// (A- and B) implies delta >= 1, and (delta >= 1 and B) implies A+.
  bool sandwich_holds() const { return !(a_minus && b && !delta_ge_1) && !(delta_ge_1 && b && !a_plus); }
};

CollectorReport coupon_collector_trial(std::size_t n, const FeatureProbabilities& p, double omega,
                                       const Seed& seed);
/// Same process for prescribed Y_i; s1 and omega only set the event thresholds.
CollectorReport coupon_collector_from_sizes(std::size_t n, const std::vector<std::uint32_t>& y, double s1,
                                            double omega, const Seed& seed);

struct PoissonizationReport {
  std::size_t trials = 0;
  double lambda = 0.0;
  double hyperedge_probability = 0.0;
  std::uint64_t subsets = 0;
  double mean_count_star = 0.0;
  double mean_count_independent = 0.0;
  double expected_count = 0.0;
  double count_sigma = 0.0;        // sd of the trial-mean count under the null
  std::vector<double> freq_star;   // per hyperedge, indexed by colex rank
  std::vector<double> freq_independent;
  double freq_sigma = 0.0;         // binomial sd of a per-hyperedge frequency
  double max_freq_z = 0.0;         // worst |freq - q| / sigma over both sides
  double chi_square = 0.0;
  int degrees_of_freedom = 0;
  double p_value = 1.0;
  double alpha = 0.01;
  bool accepted = true;
};

PoissonizationReport poissonization_test(std::size_t n, std::size_t arity, double lambda, std::size_t trials,
                                         const Seed& seed, double alpha = 0.01);

struct ChiSquareResult {
  double statistic = 0.0;
  int degrees_of_freedom = 0;
  double p_value = 1.0;
};

/// Two-sample chi-square homogeneity test on histograms over the same bins;
/// sparse bins are pooled until every expected count is at least 5.
ChiSquareResult chi_square_two_sample(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b);
double chi_square_survival(double statistic, int dof);

}  // namespace riglab
