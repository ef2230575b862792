#include "riglab/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include "riglab/io.hpp"
#include "riglab/thresholds.hpp"

namespace riglab {

namespace {

constexpr const char* kCodeVersion = "riglab 0.1.0";
constexpr double kWilsonZ = 1.959963984540054;
constexpr double kMaxClipped = 1.0 - 1e-9;

struct TheoremInfo {
  Theorem theorem;
  const char* tag;
};

constexpr TheoremInfo kTheorems[] = {
    {Theorem::ConnThm2i, "conn-Thm2i"},       {Theorem::KConnThm2ii, "kconn-Thm2ii"},
    {Theorem::PmThm3, "pm-Thm3"},             {Theorem::HcThm4, "hc-Thm4"},
    {Theorem::HcThm5, "hc-Thm5"},             {Theorem::KConnThm6, "kconn-Thm6"},
    {Theorem::MindegLemma8, "mindeg-Lemma8"}, {Theorem::MindegLemma10, "mindeg-Lemma10"},
};

bool takes_k(Theorem t) {
  return t == Theorem::KConnThm2ii || t == Theorem::KConnThm6 || t == Theorem::MindegLemma10;
}

bool is_refined(Theorem t) {
  return t == Theorem::HcThm5 || t == Theorem::KConnThm6 || t == Theorem::MindegLemma10;
}

bool is_hamiltonicity(Theorem t) { return t == Theorem::HcThm4 || t == Theorem::HcThm5; }

std::string format_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

std::string theorem_label(const ExperimentConfig& cfg) {
  std::string tag = to_string(cfg.theorem);
  if (takes_k(cfg.theorem)) tag += "(" + std::to_string(cfg.k) + ")";
  return tag;
}

std::string point_error(double c, const std::string& what) {
  return "planning failed at c = " + format_double(c) + ": " + what;
}

std::vector<double> profile_weights(const ExperimentConfig& cfg) {
  switch (cfg.profile.kind) {
    case Profile::Kind::Homogeneous:
      return std::vector<double>(cfg.m, 1.0);
    case Profile::Kind::Explicit:
      return cfg.profile.weights;
    case Profile::Kind::Power: {
      std::vector<double> w(cfg.m);
      for (std::size_t i = 0; i < cfg.m; ++i) w[i] = std::pow(static_cast<double>(i + 1), -cfg.profile.exponent);
      return w;
    }
  }
  return {};
}

std::vector<double> scaled(const std::vector<double>& w, double s) {
  std::vector<double> out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = std::clamp(s * w[i], 0.0, kMaxClipped);
  return out;
}

double s1_of(std::size_t n, const std::vector<double>& p) {
  // S1 = n sum g(p_i), with compensated summation.
  double sum = 0.0, comp = 0.0;
  for (double pi : p) {
    double term = pi > 0.0 ? per_feature_mass(n, pi) : 0.0;
    double t = sum + term;
    if (std::fabs(sum) >= std::fabs(term)) comp += (sum - t) + term; else comp += (term - t) + sum;
    sum = t;
  }
  return static_cast<double>(n) * (sum + comp);
}

// Finds s with S1(s * w clipped) = target.
double solve_scale(std::size_t n, const std::vector<double>& w, double target, double c, double* residual) {
  double wmax = *std::max_element(w.begin(), w.end());
  if (!(wmax > 0.0)) throw PlanningError(point_error(c, "profile has no positive weight"));
  double lo = 0.0, hi = 1.0 / wmax;
  double s1_cap = s1_of(n, scaled(w, hi));
  if (s1_cap < target) {
    throw PlanningError(point_error(c, "target S1 = " + format_double(target) + " exceeds the attainable maximum " +
                                           format_double(s1_cap)));
  }
  double mid = hi;
  for (int iter = 0; iter < 300; ++iter) {
    mid = 0.5 * (lo + hi);
    double v = s1_of(n, scaled(w, mid));
    *residual = std::fabs(v - target) / target;
    if (*residual < 1e-12) break;
    if (v < target) lo = mid; else hi = mid;
    if (hi - lo <= 1e-17 * hi) break;
  }
  *residual = std::fabs(s1_of(n, scaled(w, mid)) - target) / target;
  if (*residual >= 1e-8) throw PlanningError(point_error(c, "profile scaling did not converge"));
  return mid;
}

// Solves m g(p) = R(p) + c for the refined homogeneous thresholds.
double solve_refined(const ExperimentConfig& cfg, std::size_t n, double c, double* residual) {
  RefinedKind kind = cfg.theorem == Theorem::HcThm5 ? RefinedKind::HamiltonThm5
                     : cfg.theorem == Theorem::KConnThm6 ? RefinedKind::KConnThm6
                                                         : RefinedKind::MinDegreeLemma10;
  const double md = static_cast<double>(cfg.m);
  auto h = [&](double p) { return md * per_feature_mass(n, p) - refined_threshold_rhs(n, p, kind, cfg.k) - c; };
  double lo = 1e-300, hi = kMaxClipped;
  if (h(lo) >= 0.0) throw PlanningError(point_error(c, "threshold right-hand side is not positive"));
  if (h(hi) <= 0.0) throw PlanningError(point_error(c, "target exceeds the range of m p(1-(1-p)^{n-1})"));
  for (int iter = 0; iter < 2000 && hi - lo > 1e-15 * hi; ++iter) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (h(mid) < 0.0) lo = mid; else hi = mid;
  }
  double p = 0.5 * (lo + hi);
  *residual = std::fabs(h(p)) / (md * per_feature_mass(n, p));
  if (*residual >= 1e-10) throw PlanningError(point_error(c, "refined threshold solve did not converge"));
  return p;
}

nlohmann::json optional_json(const std::optional<double>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

nlohmann::json finite_or_null(double v) { return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr); }

}  // namespace

std::string to_string(Theorem t) {
  for (const auto& info : kTheorems) {
    if (info.theorem == t) return info.tag;
  }
  return "unknown";
}

Theorem parse_theorem(const std::string& tag, int* k) {
  std::string base = tag;
  auto open = tag.find('(');
  if (open != std::string::npos) {
    if (tag.back() != ')') throw ConfigError("malformed theorem tag '" + tag + "'");
    base = tag.substr(0, open);
    int parsed = 0;
    const char* first = tag.data() + open + 1;
    const char* last = tag.data() + tag.size() - 1;
    auto res = std::from_chars(first, last, parsed);
    if (res.ec != std::errc() || res.ptr != last || parsed < 1) {
      throw ConfigError("malformed k in theorem tag '" + tag + "'");
    }
    if (k) *k = parsed;
  }
  for (const auto& info : kTheorems) {
    if (base == info.tag) {
      if (open != std::string::npos && !takes_k(info.theorem)) {
        throw ConfigError("theorem '" + base + "' takes no k");
      }
      return info.theorem;
    }
  }
  throw ConfigError("unknown theorem tag '" + tag + "'");
}

bool is_zero_one_law(Theorem t) {
  switch (t) {
    case Theorem::KConnThm2ii:
    case Theorem::HcThm4:
    case Theorem::HcThm5:
    case Theorem::KConnThm6:
    case Theorem::MindegLemma10:
      return true;
    default:
      return false;
  }
}

void ExperimentConfig::validate() const {
  if (n < 2) throw ConfigError("n must be at least 2");
  if (m < 1) throw ConfigError("m must be at least 1");
  if (k < 1) throw ConfigError("k must be at least 1");
  if (c_grid.empty()) throw ConfigError("c_grid must be nonempty");
  for (std::size_t i = 0; i < c_grid.size(); ++i) {
    if (!std::isfinite(c_grid[i])) throw ConfigError("c_grid entries must be finite");
    if (i > 0 && !(c_grid[i] > c_grid[i - 1])) throw ConfigError("c_grid must be strictly increasing");
  }
  if (trials_per_point < 1) throw ConfigError("trials_per_point must be at least 1");
  if (omega && !(*omega > 0.0)) throw ConfigError("omega must be positive");
  if (hc_budget < 1) throw ConfigError("hc_budget must be positive");
  if (profile.kind == Profile::Kind::Explicit) {
    if (profile.weights.size() != m) throw ConfigError("explicit profile length must equal m");
    for (double w : profile.weights) {
      if (!(w > 0.0 && w < 1.0)) throw ConfigError("explicit profile entries must lie in (0,1)");
    }
  }
  if (profile.kind == Profile::Kind::Power && !(profile.exponent >= 0.0)) {
    throw ConfigError("power profile exponent must be nonnegative");
  }
  if (is_refined(theorem) && profile.kind != Profile::Kind::Homogeneous) {
    throw ConfigError("theorem '" + to_string(theorem) + "' is stated for the homogeneous profile only");
  }
  if (theorem == Theorem::PmThm3 && n > std::numeric_limits<std::uint32_t>::max() / 2) {
    throw ConfigError("n too large");
  }
}

nlohmann::json ExperimentConfig::to_json() const {
  nlohmann::json prof;
  switch (profile.kind) {
    case Profile::Kind::Homogeneous:
      prof = {{"kind", "homogeneous"}};
      break;
    case Profile::Kind::Explicit:
      prof = {{"kind", "explicit"}, {"p", profile.weights}};
      break;
    case Profile::Kind::Power:
      prof = {{"kind", "power"}, {"exponent", profile.exponent}};
      break;
  }
  return {{"theorem", to_string(theorem)},
          {"k", k},
          {"n", n},
          {"m", m},
          {"profile", prof},
          {"c_grid", c_grid},
          {"trials_per_point", trials_per_point},
          {"master_seed", master_seed},
          {"omega", optional_json(omega)},
          {"hc_budget", hc_budget}};
}

ExperimentConfig ExperimentConfig::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  static const std::vector<std::string> known = {"theorem", "k", "n", "m", "profile", "c_grid", "trials_per_point",
                                                 "master_seed", "omega", "hc_budget", "threads"};
  for (const auto& [key, _] : j.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end()) throw ConfigError("unknown config key '" + key + "'");
  }
  ExperimentConfig cfg;
  try {
    int k_from_tag = 0;
    cfg.theorem = parse_theorem(j.at("theorem").get<std::string>(), &k_from_tag);
    if (k_from_tag > 0) cfg.k = k_from_tag;
    if (j.contains("k")) cfg.k = j.at("k").get<int>();
    if (k_from_tag > 0 && cfg.k != k_from_tag) throw ConfigError("k conflicts with the theorem tag");
    cfg.n = j.at("n").get<std::size_t>();
    if (j.contains("profile")) {
      const auto& p = j.at("profile");
      std::string kind = p.is_string() ? p.get<std::string>() : p.at("kind").get<std::string>();
      if (kind == "homogeneous") {
        cfg.profile.kind = Profile::Kind::Homogeneous;
      } else if (kind == "explicit") {
        cfg.profile.kind = Profile::Kind::Explicit;
        cfg.profile.weights = p.at("p").get<std::vector<double>>();
      } else if (kind == "power") {
        cfg.profile.kind = Profile::Kind::Power;
        cfg.profile.exponent = p.at("exponent").get<double>();
      } else {
        throw ConfigError("unknown profile kind '" + kind + "'");
      }
    }
    if (j.contains("m")) {
      cfg.m = j.at("m").get<std::size_t>();
    } else if (cfg.profile.kind == Profile::Kind::Explicit) {
      cfg.m = cfg.profile.weights.size();
    } else {
      throw ConfigError("m is required");
    }
    cfg.c_grid = j.at("c_grid").get<std::vector<double>>();
    if (j.contains("trials_per_point")) cfg.trials_per_point = j.at("trials_per_point").get<std::size_t>();
    if (j.contains("master_seed")) cfg.master_seed = j.at("master_seed").get<std::uint64_t>();
    if (j.contains("omega") && !j.at("omega").is_null()) cfg.omega = j.at("omega").get<double>();
    if (j.contains("hc_budget")) cfg.hc_budget = j.at("hc_budget").get<std::uint64_t>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("bad config: ") + e.what());
  }
  cfg.validate();
  return cfg;
}

PlannedPoint plan_point(const ExperimentConfig& cfg, double c) {
  cfg.validate();
  PlannedPoint pt;
  pt.c = c;
  pt.m = cfg.m;
  pt.vertex_count = cfg.theorem == Theorem::PmThm3 ? 2 * cfg.n : cfg.n;
  const std::size_t n = pt.vertex_count;
  pt.omega = cfg.omega ? *cfg.omega : default_omega(n);
  if (is_zero_one_law(cfg.theorem)) {
    if (c > 0.0) pt.predicted = 1.0;
    if (c < 0.0) pt.predicted = 0.0;
  } else {
    pt.predicted = limit_probability(c);
  }

  std::vector<double> p;
  if (is_refined(cfg.theorem)) {
    pt.target_s1 = std::numeric_limits<double>::quiet_NaN();
    double q = solve_refined(cfg, n, c, &pt.residual);
    p.assign(cfg.m, q);
    pt.scale = q;
  } else {
    int k = 1;
    ThresholdForm form = ThresholdForm::KConnectivity;
    if (cfg.theorem == Theorem::KConnThm2ii) k = cfg.k;
    if (cfg.theorem == Theorem::HcThm4) form = ThresholdForm::Hamiltonicity;
    try {
      pt.target_s1 = s1_from_c(n, c, k, form);
    } catch (const std::exception& e) {
      throw PlanningError(point_error(c, e.what()));
    }
    if (!(pt.target_s1 > 0.0)) throw PlanningError(point_error(c, "target S1 is not positive"));
    if (cfg.profile.kind == Profile::Kind::Homogeneous) {
      double rhs = pt.target_s1 / (static_cast<double>(n) * static_cast<double>(cfg.m));
      double q;
      try {
        q = homogeneous_p_for_target(n, cfg.m, rhs);
      } catch (const std::exception& e) {
        throw PlanningError(point_error(c, e.what()));
      }
      p.assign(cfg.m, q);
      pt.scale = q;
      pt.residual = std::fabs(per_feature_mass(n, q) - rhs) / rhs;
    } else {
      auto w = profile_weights(cfg);
      pt.scale = solve_scale(n, w, pt.target_s1, c, &pt.residual);
      p = scaled(w, pt.scale);
      for (double& v : p) {
        if (!(v > 0.0)) throw PlanningError(point_error(c, "scaled profile has a zero entry"));
      }
    }
  }
  pt.p = FeatureProbabilities(std::move(p));
  auto stats = summary_stats(n, pt.p, 2);
  pt.s1 = stats.s1;
  pt.a_n = stats.a_n;
  return pt;
}

namespace {

TrialRecord run_trial(const ExperimentConfig& cfg, const PlannedPoint& pt, std::size_t point, std::size_t trial,
                      bool record_timing) {
  auto start = std::chrono::steady_clock::now();
  TrialRecord rec;
  rec.point = point;
  rec.trial = trial;
  Seed seed{cfg.master_seed, label_hash(theorem_label(cfg)) ^ mix64(point + 1), trial, 0};
  rec.seed = seed.derive();

  auto rig = sample_rig(pt.vertex_count, pt.p, seed.with_stream(1));
  SimpleGraph g = project_rig(rig);
  rec.edges = g.edge_count();
  Adjacency adj(g);
  rec.min_degree = min_degree(adj);
  const auto k = static_cast<std::size_t>(cfg.k);
  bool yes = false;
  switch (cfg.theorem) {
    case Theorem::ConnThm2i:
      yes = is_connected(adj);
      rec.consistent = !yes || rec.min_degree >= 1;
      break;
    case Theorem::KConnThm2ii:
    case Theorem::KConnThm6:
      yes = is_k_connected(g, cfg.k);
      rec.consistent = !yes || rec.min_degree >= k;
      break;
    case Theorem::PmThm3:
      yes = has_perfect_matching(g);
      rec.consistent = !yes || rec.min_degree >= 1;
      break;
    case Theorem::HcThm4:
    case Theorem::HcThm5: {
      HamiltonicityOptions opts;
      opts.budget = cfg.hc_budget;
      opts.seed = seed.with_stream(9).derive();
      auto hv = hamiltonicity(g, opts);
      rec.verdict = hv.verdict;
      if (hv.verdict == Verdict::Yes) {
        rec.consistent = is_hamilton_cycle(g, hv.certificate) && is_k_connected(g, 2);
      }
      break;
    }
    case Theorem::MindegLemma8:
      yes = rec.min_degree >= 1;
      break;
    case Theorem::MindegLemma10:
      yes = rec.min_degree >= k;
      break;
  }
  if (!is_hamiltonicity(cfg.theorem)) rec.verdict = yes ? Verdict::Yes : Verdict::No;
  if (record_timing) {
    rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  return rec;
}

}  // namespace

SweepResult run_sweep(const ExperimentConfig& cfg, const SweepOptions& options) {
  auto start = std::chrono::steady_clock::now();
  SweepResult result;
  result.config = cfg;
  for (double c : cfg.c_grid) result.points.push_back(plan_point(cfg, c));

  const std::size_t per_point = cfg.trials_per_point;
  const std::size_t jobs = result.points.size() * per_point;
  std::vector<std::optional<TrialRecord>> slots(jobs);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::mutex error_mutex;
  std::size_t error_job = jobs;

  auto worker = [&] {
    while (!stop.load()) {
      std::size_t j = next.fetch_add(1);
      if (j >= jobs) return;
      try {
        slots[j] = run_trial(cfg, result.points[j / per_point], j / per_point, j % per_point, options.record_timing);
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (j < error_job) {
          error_job = j;
          result.error = "trial " + std::to_string(j % per_point) + " at c = " +
                         format_double(result.points[j / per_point].c) + ": " + e.what();
        }
        stop.store(true);
      }
    }
  };
  unsigned threads = std::max(1u, options.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  result.aborted = error_job < jobs;
  for (auto& slot : slots) {
    if (slot) result.records.push_back(*slot);
  }
  result.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::pair<double, double> wilson_interval(std::size_t successes, std::size_t total) {
  if (total == 0) return {0.0, 1.0};
  const double nn = static_cast<double>(total);
  const double ph = static_cast<double>(successes) / nn;
  const double z2 = kWilsonZ * kWilsonZ;
  const double denom = 1.0 + z2 / nn;
  const double centre = (ph + z2 / (2.0 * nn)) / denom;
  const double half = kWilsonZ * std::sqrt(ph * (1.0 - ph) / nn + z2 / (4.0 * nn * nn)) / denom;
  return {std::max(0.0, std::min(ph, centre - half)), std::min(1.0, std::max(ph, centre + half))};
}

std::vector<PointSummary> compare_to_limit(const SweepResult& result) {
  std::vector<PointSummary> out(result.points.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i].c = result.points[i].c;
    out[i].predicted = result.points[i].predicted;
  }
  const auto k = static_cast<std::size_t>(result.config.k);
  for (const auto& r : result.records) {
    auto& s = out[r.point];
    ++s.trials;
    if (r.verdict == Verdict::Yes) ++s.yes;
    if (r.verdict == Verdict::No) ++s.no;
    if (r.verdict == Verdict::Unknown) ++s.unknown;
    if (r.min_degree >= 1) ++s.min_degree_ge_1;
    if (r.min_degree >= k) ++s.min_degree_ge_k;
    if (!r.consistent) ++s.consistency_violations;
  }
  for (auto& s : out) {
    const std::size_t decided = s.yes + s.no;
    if (decided > 0) s.frequency = static_cast<double>(s.yes) / static_cast<double>(decided);
    std::tie(s.wilson_low, s.wilson_high) = wilson_interval(s.yes, decided);
    s.unknown_rate = s.trials ? static_cast<double>(s.unknown) / static_cast<double>(s.trials) : 0.0;
    if (s.frequency && s.predicted) {
      s.gap = std::fabs(*s.frequency - *s.predicted);
      s.covers_prediction = s.wilson_low <= *s.predicted && *s.predicted <= s.wilson_high;
    }
  }
  return out;
}

bool monotone_within_slack(const std::vector<PointSummary>& summaries) {
  for (std::size_t i = 1; i < summaries.size(); ++i) {
    const auto& a = summaries[i - 1];
    const auto& b = summaries[i];
    if (!a.frequency || !b.frequency) continue;
    double slack = std::max(a.wilson_high - a.wilson_low, b.wilson_high - b.wilson_low) / 2.0;
    if (*b.frequency < *a.frequency - 2.0 * slack) return false;
  }
  return true;
}

std::string results_csv(const SweepResult& result) {
  std::ostringstream out;
  out << "theorem,c,n,m,trial,seed,verdict,unknown_flag,elapsed_ms\n";
  const std::string label = theorem_label(result.config);
  for (const auto& r : result.records) {
    const auto& pt = result.points[r.point];
    out << label << ',' << format_double(pt.c) << ',' << pt.vertex_count << ',' << pt.m << ',' << r.trial << ','
        << r.seed << ',' << to_string(r.verdict) << ',' << (r.verdict == Verdict::Unknown ? 1 : 0) << ','
        << format_double(std::round(r.elapsed_ms * 1000.0) / 1000.0) << '\n';
  }
  return out.str();
}

nlohmann::json summary_json(const SweepResult& result) {
  auto summaries = compare_to_limit(result);
  const bool zero_one = is_zero_one_law(result.config.theorem);
  const bool a_n_hypothesis =
      result.config.theorem == Theorem::KConnThm2ii || result.config.theorem == Theorem::HcThm4;
  nlohmann::json points = nlohmann::json::array();
  for (std::size_t i = 0; i < summaries.size(); ++i) {
    const auto& s = summaries[i];
    const auto& pt = result.points[i];
    nlohmann::json j = {
        {"c", pt.c},
        {"vertex_count", pt.vertex_count},
        {"m", pt.m},
        {"p_max", pt.p.max()},
        {"scale", pt.scale},
        {"target_S1", finite_or_null(pt.target_s1)},
        {"S1", pt.s1},
        {"a_n", pt.a_n},
        {"omega", pt.omega},
        {"residual", pt.residual},
        {"trials", s.trials},
        {"yes", s.yes},
        {"no", s.no},
        {"unknown", s.unknown},
        {"unknown_rate", s.unknown_rate},
        {"frequency", optional_json(s.frequency)},
        {"wilson_low", s.wilson_low},
        {"wilson_high", s.wilson_high},
        {"predicted", optional_json(s.predicted)},
        {"gap", optional_json(s.gap)},
        {"covers_prediction", s.covers_prediction ? nlohmann::json(*s.covers_prediction) : nlohmann::json(nullptr)},
        {"min_degree_ge_1", s.min_degree_ge_1},
        {"min_degree_ge_k", s.min_degree_ge_k},
        {"consistency_violations", s.consistency_violations},
    };
    if (s.covers_prediction && !*s.covers_prediction) j["flag"] = "interval misses prediction";
    if (a_n_hypothesis && pt.predicted && *pt.predicted == 0.0) {
      j["a_n_note"] = "lower bound assumes a_n -> a in (0,1]; a_n reported, no claim made";
    }
    points.push_back(std::move(j));
  }
  std::size_t violations = 0;
  for (const auto& s : summaries) violations += s.consistency_violations;
  return {{"manifest",
           {{"config", result.config.to_json()},
            {"code_version", kCodeVersion},
            {"law", zero_one ? "zero-one" : "double-exponential"}}},
          {"points", points},
          {"records", result.records.size()},
          {"consistency_violations", violations},
          {"monotone_within_slack", monotone_within_slack(summaries)},
          {"aborted", result.aborted},
          {"error", result.error}};
}

std::string plot_table(const SweepResult& result) {
  std::ostringstream out;
  out << "# c empirical predicted wilson_low wilson_high\n";
  for (const auto& s : compare_to_limit(result)) {
    out << format_double(s.c) << ' ' << (s.frequency ? format_double(*s.frequency) : "NaN") << ' '
        << (s.predicted ? format_double(*s.predicted) : "NaN") << ' ' << format_double(s.wilson_low) << ' '
        << format_double(s.wilson_high) << '\n';
  }
  return out.str();
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace

void emit_outputs(const SweepResult& result, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
  write_file(dir / "results.csv", results_csv(result));
  write_file(dir / "summary.json", summary_json(result).dump(2) + "\n");
  write_file(dir / "plot.dat", plot_table(result));
  bool timed = std::any_of(result.records.begin(), result.records.end(),
                           [](const TrialRecord& r) { return r.elapsed_ms > 0.0; });
  if (timed) {
    nlohmann::json t = {{"wall_seconds", result.wall_seconds}};
    write_file(dir / "timing.json", t.dump(2) + "\n");
  }
}

}  // namespace riglab
