#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "riglab/generators.hpp"

namespace riglab {

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class OutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Feature-sum statistics. s1t[j] holds S_{1,t} for t = j + 2.
struct ThresholdStats {
  std::size_t n = 0;
  std::size_t m = 0;
  double s1 = 0.0;
  double s2 = 0.0;
  double s3 = 0.0;
  std::vector<double> s1t;
  double a_n = 0.0;

  double s1_at(std::size_t t) const { return s1t.at(t - 2); }
};

enum class Regime { DominantS3, SmallS3 };
enum class CouplingVariant { Linear, Exponential };

struct CouplingParameters {
  double p_hat = 0.0;
  double p_hat2 = 0.0;
  double p_hat3 = 0.0;
  Regime regime = Regime::SmallS3;
  CouplingVariant variant = CouplingVariant::Linear;
  double omega = 0.0;
  bool p_hat_clamped = false;
  bool p_hat2_clamped = false;
  bool p_hat3_clamped = false;
};

std::string to_string(Regime r);
std::string to_string(CouplingVariant v);
CouplingVariant parse_variant(const std::string& s);

/// Default t_max for S_{1,t}: min(n, 12).
std::size_t default_t_max(std::size_t n);
/// Default omega(n) = max(2, ln ln n).
double default_omega(std::size_t n);

ThresholdStats summary_stats(std::size_t n, const FeatureProbabilities& p, std::size_t t_max);
ThresholdStats summary_stats(std::size_t n, const FeatureProbabilities& p);

CouplingParameters coupling_parameters(const ThresholdStats& stats, std::size_t n, double omega,
                                       CouplingVariant variant);

/// e^{-e^{-c}}, with the infinite endpoints mapped to 0 and 1.
double limit_probability(double c);

enum class ThresholdForm { KConnectivity, Hamiltonicity };

/// Inverts S1 = n(ln n + (k-1) ln ln n + c) or S1 = n(ln n + ln ln n + c).
double c_from_s1(std::size_t n, double s1, int k, ThresholdForm form);
/// The S1 value that c_from_s1 maps to c.
double s1_from_c(std::size_t n, double c, int k, ThresholdForm form);

/// g(p) = p(1 - (1-p)^{n-1}), strictly increasing on (0,1).
double per_feature_mass(std::size_t n, double p);
/// Solves g(p) = rhs by bisection; throws OutOfRange when rhs is not in g's range.
double homogeneous_p_for_target(std::size_t n, std::size_t m, double rhs);

enum class RefinedKind { HamiltonThm5, KConnThm6, MinDegreeLemma10 };

/// Numerator of the refined homogeneous threshold without the c term.
double refined_threshold_rhs(std::size_t n, double p, RefinedKind kind, int k = 1);

struct CorollaryParameters {
  double beta = 0.0;
  double slope = 0.0;
};

/// beta with beta*gamma*(1 - e^{-gamma}) = 1, plus the limit slope factor.
CorollaryParameters corollary_parameters(double gamma);

}  // namespace riglab
