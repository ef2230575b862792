#include "riglab/thresholds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace riglab {

namespace {

// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double x) {
    double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

double pairs(double n) { return n * (n - 1.0) / 2.0; }
double triples(double n) { return n * (n - 1.0) * (n - 2.0) / 6.0; }

double clamp_unit(double x, bool& clamped) {
  if (x < 0.0) {
    clamped = true;
    return 0.0;
  }
  if (x > 1.0) {
    clamped = true;
    return 1.0;
  }
  return x;
}

// 1 - exp(-x), with a nonpositive argument clamping to zero.
double saturating(double x, bool& clamped) {
  if (x < 0.0) {
    clamped = true;
    return 0.0;
  }
  return -std::expm1(-x);
}

}  // namespace

std::string to_string(Regime r) { return r == Regime::DominantS3 ? "dominant-S3" : "small-S3"; }

std::string to_string(CouplingVariant v) {
  return v == CouplingVariant::Linear ? "linear" : "exponential";
}

CouplingVariant parse_variant(const std::string& s) {
  if (s == "linear") return CouplingVariant::Linear;
  if (s == "exponential") return CouplingVariant::Exponential;
  throw ValidationError("unknown coupling variant '" + s + "'");
}

std::size_t default_t_max(std::size_t n) { return std::min<std::size_t>(n, 12); }

double default_omega(std::size_t n) {
  double lnln = n >= 3 ? std::log(std::log(static_cast<double>(n))) : 0.0;
  return std::max(2.0, lnln);
}

ThresholdStats summary_stats(std::size_t n, const FeatureProbabilities& p) {
  return summary_stats(n, p, default_t_max(n));
}

ThresholdStats summary_stats(std::size_t n, const FeatureProbabilities& p, std::size_t t_max) {
  if (n < 2) throw ValidationError("summary statistics need n >= 2");
  if (t_max < 2 || t_max > n) throw ValidationError("t_max must lie in [2, n]");
  const double nd = static_cast<double>(n);

  std::vector<double> log_weight(t_max + 1, 0.0);  // log(t * C(n,t))
  const double lg_n1 = std::lgamma(nd + 1.0);
  for (std::size_t t = 2; t <= t_max; ++t) {
    double td = static_cast<double>(t);
    log_weight[t] = std::log(td) + lg_n1 - std::lgamma(td + 1.0) - std::lgamma(nd - td + 1.0);
  }

  CompensatedSum s1, s2, s3;
  std::vector<CompensatedSum> s1t(t_max - 1);
  for (double pi : p.values()) {
    const double log_q = std::log1p(-pi);
    const double q_pow = std::exp((nd - 1.0) * log_q);        // (1-p)^{n-1}
    const double one_minus_q_pow = -std::expm1((nd - 1.0) * log_q);
    // (1-2p)^n and 1-(1-2p)^n; negative base handled by sign.
    double one_minus_r;
    if (pi < 0.5) {
      one_minus_r = -std::expm1(nd * std::log1p(-2.0 * pi));
    } else if (pi == 0.5) {
      one_minus_r = 1.0;
    } else {
      double mag = std::exp(nd * std::log(2.0 * pi - 1.0));
      one_minus_r = 1.0 - ((n % 2 == 1) ? -mag : mag);
    }
    const double np = nd * pi;
    s1.add(np * one_minus_q_pow);
    s2.add(np - one_minus_r / 2.0);
    s3.add(one_minus_r / 2.0 - np * q_pow);
    const double log_p = std::log(pi);
    for (std::size_t t = 2; t <= t_max; ++t) {
      double td = static_cast<double>(t);
      s1t[t - 2].add(std::exp(log_weight[t] + td * log_p + (nd - td) * log_q));
    }
  }

  ThresholdStats out;
  out.n = n;
  out.m = p.size();
  out.s1 = s1.value();
  out.s2 = s2.value();
  out.s3 = s3.value();
  out.s1t.reserve(s1t.size());
  for (const auto& s : s1t) out.s1t.push_back(s.value());
  out.a_n = out.s1 > 0.0 ? std::clamp(out.s1t[0] / out.s1, 0.0, 1.0) : 0.0;
  return out;
}

CouplingParameters coupling_parameters(const ThresholdStats& stats, std::size_t n, double omega,
                                       CouplingVariant variant) {
  if (!(omega > 0.0)) throw ValidationError("omega must be positive");
  if (n < 2) throw ValidationError("coupling parameters need n >= 2");
  const double nd = static_cast<double>(n);
  const double c2 = pairs(nd);
  const double c3 = triples(nd);
  const double s1 = stats.s1, s2 = stats.s2, s3 = stats.s3;
  const double root_s1 = std::sqrt(std::max(0.0, s1));
  const double root_s2 = std::sqrt(std::max(0.0, s2));

  CouplingParameters cp;
  cp.omega = omega;
  cp.variant = variant;
  // Finite-n stand-in for S3 >> sqrt(S1) with omega^2 << S3/sqrt(S1).
  cp.regime = s3 > omega * omega * root_s1 ? Regime::DominantS3 : Regime::SmallS3;
  const bool dominant = cp.regime == Regime::DominantS3;

  if (variant == CouplingVariant::Linear) {
    cp.p_hat = clamp_unit((s2 - omega * root_s2 - 2.0 * s2 * s2 / (nd * nd)) / (2.0 * c2), cp.p_hat_clamped);
    double pair_mass = dominant ? s1 - 3.0 * s3 : s1;
    cp.p_hat2 = clamp_unit((pair_mass - omega * root_s1 - 2.0 * s1 * s1 / (nd * nd)) / (2.0 * c2),
                           cp.p_hat2_clamped);
    if (dominant && c3 > 0.0) {
      cp.p_hat3 = clamp_unit((s3 - omega * root_s1 - 6.0 * s3 * s3 / (nd * nd * nd)) / c3,
                             cp.p_hat3_clamped);
    }
  } else {
    cp.p_hat = saturating((s2 - omega * root_s2) / (2.0 * c2), cp.p_hat_clamped);
    double pair_mass = dominant ? s1 - 3.0 * s3 : s1;
    cp.p_hat2 = saturating((pair_mass - omega * root_s1) / (2.0 * c2), cp.p_hat2_clamped);
    if (dominant && c3 > 0.0) {
      cp.p_hat3 = saturating((s3 - omega * root_s1) / c3, cp.p_hat3_clamped);
    }
  }
  return cp;
}

double limit_probability(double c) {
  if (std::isnan(c)) throw ValidationError("limit_probability: c is NaN");
  return std::exp(-std::exp(-c));
}

namespace {

double lnln_coefficient(int k, ThresholdForm form) {
  if (k < 1) throw ValidationError("k must be a positive integer");
  return form == ThresholdForm::Hamiltonicity ? 1.0 : static_cast<double>(k - 1);
}

double log_log(std::size_t n, double coefficient) {
  if (coefficient == 0.0) return 0.0;
  if (n < 3) throw DomainError("ln ln n term needs n >= 3");
  return std::log(std::log(static_cast<double>(n)));
}

}  // namespace

double c_from_s1(std::size_t n, double s1, int k, ThresholdForm form) {
  if (n < 2) throw DomainError("c_from_s1 needs n >= 2");
  if (!(s1 >= 0.0)) throw ValidationError("S1 must be nonnegative");
  double coeff = lnln_coefficient(k, form);
  double nd = static_cast<double>(n);
  return s1 / nd - std::log(nd) - coeff * log_log(n, coeff);
}

double s1_from_c(std::size_t n, double c, int k, ThresholdForm form) {
  if (n < 2) throw DomainError("s1_from_c needs n >= 2");
  double coeff = lnln_coefficient(k, form);
  double nd = static_cast<double>(n);
  return nd * (std::log(nd) + coeff * log_log(n, coeff) + c);
}

double per_feature_mass(std::size_t n, double p) {
  return p * -std::expm1((static_cast<double>(n) - 1.0) * std::log1p(-p));
}

double homogeneous_p_for_target(std::size_t n, std::size_t m, double rhs) {
  if (n < 2) throw ValidationError("homogeneous_p_for_target needs n >= 2");
  if (m < 1) throw ValidationError("homogeneous_p_for_target needs m >= 1");
  // g maps (0,1) onto (0,1).
  if (!(rhs > 0.0 && rhs < 1.0)) {
    throw OutOfRange("target " + std::to_string(rhs) + " is outside the range (0,1) of p(1-(1-p)^{n-1})");
  }
  double lo = 0.0, hi = 1.0;
  for (int iter = 0; iter < 4000 && hi - lo > 1e-14 * hi; ++iter) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (per_feature_mass(n, mid) < rhs) lo = mid; else hi = mid;
  }
  double p = 0.5 * (lo + hi);
  if (!(p > 0.0 && p < 1.0)) throw OutOfRange("target is not attainable in double precision");
  double residual = std::fabs(per_feature_mass(n, p) - rhs) / rhs;
  if (residual >= 1e-10) {
    throw OutOfRange("bisection residual " + std::to_string(residual) + " exceeds tolerance");
  }
  return p;
}

double refined_threshold_rhs(std::size_t n, double p, RefinedKind kind, int k) {
  if (!(p > 0.0 && p < 1.0)) throw ValidationError("refined threshold needs 0 < p < 1");
  if (n < 2) throw ValidationError("refined threshold needs n >= 2");
  if (k < 1) throw ValidationError("k must be a positive integer");
  const double ln_n = std::log(static_cast<double>(n));
  const double x = static_cast<double>(n) * p;
  // e^{-np} ln n / (1 - e^{-np})
  const double ratio = std::exp(-x) * ln_n / -std::expm1(-x);
  double inner;
  if (kind == RefinedKind::HamiltonThm5) {
    inner = std::log(x * ratio);
  } else {
    double km1 = static_cast<double>(k - 1);
    inner = std::pow(x, km1) * (std::pow(ratio, km1) + ratio);
  }
  return ln_n + std::log(std::max(1.0, inner));
}

CorollaryParameters corollary_parameters(double gamma) {
  if (!(gamma > 0.0)) throw DomainError("gamma must be positive");
  const double one_minus = -std::expm1(-gamma);
  return {1.0 / (gamma * one_minus), 1.0 + std::exp(-gamma) * gamma / one_minus};
}

}  // namespace riglab
