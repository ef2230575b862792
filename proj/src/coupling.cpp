#include "riglab/coupling.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <unordered_set>

#include <boost/math/special_functions/gamma.hpp>

#include "riglab/properties.hpp"

namespace riglab {

namespace {

struct DrawLog {
  std::vector<Edge> pairs;
  std::vector<std::array<Vertex, 3>> triples;
};

void add_clique_edges(std::span<const Vertex> vs, std::vector<Edge>& out) {
  for (std::size_t a = 0; a < vs.size(); ++a) {
    for (std::size_t b = a + 1; b < vs.size(); ++b) {
      out.push_back({std::min(vs[a], vs[b]), std::max(vs[a], vs[b])});
    }
  }
}

void validate_feature(std::uint32_t y, std::uint8_t z, std::size_t n) {
  if (y == 1) throw ValidationError("y = 1 is not a valid coupled feature size");
  if (y > n) throw ValidationError("feature size exceeds vertex count");
  if (z > 1 || z != (y % 2)) throw ValidationError("parity indicator z does not match y");
}

CoupledFeature couple_feature_logged(std::uint32_t y, std::uint8_t z, std::size_t n, SubsetStream* pairs,
                                     SubsetStream* triples, Rng& pad, DrawLog* log) {
  validate_feature(y, z, n);
  CoupledFeature out;
  out.graph = SimpleGraph(n);
  if (y == 0) return out;
  std::vector<Edge> edges;
  std::vector<Vertex> touched;
  const std::uint32_t pair_draws = (y - 3u * z) / 2u;
  for (std::uint32_t d = 0; d < pair_draws; ++d) {
    auto s = pairs->next();
    edges.push_back({s[0], s[1]});
    touched.insert(touched.end(), s.begin(), s.end());
    if (log) log->pairs.push_back({s[0], s[1]});
  }
  if (z == 1) {
    auto s = triples->next();
    add_clique_edges(s, edges);
    touched.insert(touched.end(), s.begin(), s.end());
    if (log) log->triples.push_back({s[0], s[1], s[2]});
  }
  std::sort(touched.begin(), touched.end());
  touched.erase(std::unique(touched.begin(), touched.end()), touched.end());

  // Pad the non-isolated vertices with uniform distinct vertices up to size y.
  std::size_t missing = y - touched.size();
  if (missing > 0) {
    std::unordered_set<Vertex> present(touched.begin(), touched.end());
    if (2 * (touched.size() + missing) <= n) {
      while (missing > 0) {
        auto v = static_cast<Vertex>(pad.below(n));
        if (present.insert(v).second) {
          touched.push_back(v);
          --missing;
        }
      }
    } else {
      std::vector<Vertex> rest;
      rest.reserve(n - touched.size());
      for (Vertex v = 0; v < n; ++v) {
        if (!present.count(v)) rest.push_back(v);
      }
      auto picks = sample_distinct(pad, static_cast<std::uint32_t>(rest.size()), static_cast<std::uint32_t>(missing));
      for (auto idx : picks) touched.push_back(rest[idx]);
    }
    std::sort(touched.begin(), touched.end());
  }
  out.graph = SimpleGraph::from_edges(n, std::move(edges));
  out.feature_set = std::move(touched);
  return out;
}

SimpleGraph graph_from_draws(std::size_t n, std::span<const Edge> pairs,
                             std::span<const std::array<Vertex, 3>> triples) {
  std::vector<Edge> edges(pairs.begin(), pairs.end());
  for (const auto& t : triples) add_clique_edges(t, edges);
  return SimpleGraph::from_edges(n, std::move(edges));
}

}  // namespace

FeatureDecomposition decompose_sizes(std::vector<std::uint32_t> sizes) {
  FeatureDecomposition d;
  d.x = std::move(sizes);
  d.y.resize(d.x.size());
  d.z.resize(d.x.size());
  std::uint64_t pair_sum = 0;
  for (std::size_t i = 0; i < d.x.size(); ++i) {
    d.y[i] = d.x[i] >= 2 ? d.x[i] : 0;
    d.z[i] = static_cast<std::uint8_t>(d.y[i] % 2);
    // Y_i - 3 Z_i is even and nonnegative for every admissible Y_i.
    pair_sum += d.y[i] - 3u * d.z[i];
    d.m3 += d.z[i];
    d.sum_y += d.y[i];
  }
  d.m2 = pair_sum / 2;
  return d;
}

FeatureDecomposition decompose_features(const RigInstance& r) {
  std::vector<std::uint32_t> sizes(r.feature_count());
  for (std::size_t i = 0; i < sizes.size(); ++i) sizes[i] = static_cast<std::uint32_t>(r.feature_set(i).size());
  return decompose_sizes(std::move(sizes));
}

CoupledFeature couple_feature(std::uint32_t y, std::uint8_t z, std::size_t n, SubsetStream& pairs,
                              SubsetStream& triples, Rng& pad) {
  return couple_feature_logged(y, z, n, &pairs, &triples, pad, nullptr);
}

CoupledFeature couple_feature(std::uint32_t y, std::uint8_t z, std::size_t n, const Seed& seed) {
  validate_feature(y, z, n);
  Rng pair_rng(seed.with_stream(seed.stream * 8 + 1));
  Rng triple_rng(seed.with_stream(seed.stream * 8 + 2));
  Rng pad(seed.with_stream(seed.stream * 8 + 3));
  std::optional<SubsetStream> pairs, triples;
  if (n >= 2) pairs.emplace(n, 2, pair_rng);
  if (n >= 3) triples.emplace(n, 3, triple_rng);
  return couple_feature_logged(y, z, n, pairs ? &*pairs : nullptr, triples ? &*triples : nullptr, pad, nullptr);
}

std::map<std::string, bool> CouplingReport::guard_events() const {
  return {{"poisson_m2_ok", poisson_m2_ok},
          {"poisson_m3_ok", poisson_m3_ok},
          {"y_concentration_ok", y_concentration_ok}};
}

CouplingReport run_coupling_trial(std::size_t n, const FeatureProbabilities& p, double omega,
                                  const Seed& seed) {
  if (!(omega > 0.0)) throw ValidationError("omega must be positive");
  auto stats = summary_stats(n, p, 2);
  if (!(stats.s1 > 0.0)) throw ValidationError("S1 is zero; the coupling is degenerate");

  CouplingReport rep;
  rep.s1 = stats.s1;
  rep.s3 = stats.s3;
  rep.omega = omega;
  const double root_s1 = std::sqrt(stats.s1);
  rep.regime_infeasible = omega * omega >= stats.s3 / root_s1;

  // (1) feature sizes and their decomposition.
  auto dec = decompose_sizes(sample_feature_sizes(n, p, seed.with_stream(1)));
  rep.m2 = dec.m2;
  rep.m3 = dec.m3;
  rep.sum_y = dec.sum_y;

  // (2) per-feature coupling over shared draw streams.
  Rng pair_rng(seed.with_stream(2));
  Rng triple_rng(seed.with_stream(3));
  Rng pad(seed.with_stream(4));
  std::optional<SubsetStream> pairs, triples;
  if (n >= 2) pairs.emplace(n, 2, pair_rng);
  if (n >= 3) triples.emplace(n, 3, triple_rng);
  DrawLog log;
  std::vector<std::vector<Vertex>> sets;
  sets.reserve(dec.y.size());
  for (std::size_t i = 0; i < dec.y.size(); ++i) {
    if (dec.y[i] == 0) continue;
    auto cf = couple_feature_logged(dec.y[i], dec.z[i], n, pairs ? &*pairs : nullptr,
                                    triples ? &*triples : nullptr, pad, &log);
    sets.push_back(std::move(cf.feature_set));
  }
  auto rig = clique_union(n, sets);
  auto coupled = graph_from_draws(n, log.pairs, log.triples);
  rep.rig_edges = rig.edge_count();
  rep.coupled_edges = coupled.edge_count();
  rep.contained = is_subgraph(coupled, rig);

  // (3) Poissonized draw counts and guard events.
  rep.m2_mean = (stats.s1 - 3.0 * stats.s3 - 5.0 * omega * root_s1) / 2.0;
  rep.m3_mean = stats.s3 - 2.0 * omega * root_s1;
  if (rep.m2_mean < 0.0) {
    rep.m2_mean = 0.0;
    rep.m2_mean_clamped = true;
  }
  if (rep.m3_mean < 0.0) {
    rep.m3_mean = 0.0;
    rep.m3_mean_clamped = true;
  }
  Rng poisson_rng(seed.with_stream(5));
  rep.m2_prime = poisson_rng.poisson(rep.m2_mean);
  rep.m3_prime = poisson_rng.poisson(rep.m3_mean);
  rep.poisson_m2_ok = !rep.m2_mean_clamped && rep.m2_prime <= rep.m2;
  rep.poisson_m3_ok = !rep.m3_mean_clamped && rep.m3_prime <= rep.m3;
  rep.y_concentration_ok = std::fabs(static_cast<double>(rep.sum_y) - stats.s1) <= omega * root_s1;

  // (4) prefix graphs: the first m2' / m3' draws of each stream, continuing
  // the streams past the per-feature draws when the counts run over.
  while (log.pairs.size() < rep.m2_prime && pairs) {
    auto s = pairs->next();
    log.pairs.push_back({s[0], s[1]});
  }
  while (log.triples.size() < rep.m3_prime && triples) {
    auto s = triples->next();
    log.triples.push_back({s[0], s[1], s[2]});
  }
  auto pair_prefix = std::span<const Edge>(log.pairs).first(std::min<std::size_t>(rep.m2_prime, log.pairs.size()));
  auto triple_prefix = std::span<const std::array<Vertex, 3>>(log.triples)
                           .first(std::min<std::size_t>(rep.m3_prime, log.triples.size()));
  auto prefix = graph_from_draws(n, pair_prefix, triple_prefix);
  rep.prefix_edges = prefix.edge_count();
  rep.prefix_contained = is_subgraph(prefix, rig);
  return rep;
}

CollectorReport coupon_collector_from_sizes(std::size_t n, const std::vector<std::uint32_t>& y, double s1,
                                            double omega, const Seed& seed) {
  if (n < 2) throw ValidationError("coupon collector needs n >= 2");
  CollectorReport rep;
  rep.s1 = s1;
  rep.omega = omega;
  Rng rng(seed.with_stream(7));
  std::vector<std::int64_t> phase_mark(n, -1);
  std::vector<char> seen(n, 0);
  std::size_t collected = 0;
  std::vector<std::vector<Vertex>> sets;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i] == 0) continue;
    if (y[i] == 1 || y[i] > n) throw ValidationError("phase sizes must be 0 or in [2, n]");
    rep.sum_y += y[i];
    std::vector<Vertex> phase;
    phase.reserve(y[i]);
    while (phase.size() < y[i]) {
      auto v = static_cast<Vertex>(rng.below(n));
      ++rep.total_draws;
      if (phase_mark[v] != static_cast<std::int64_t>(i)) {
        phase_mark[v] = static_cast<std::int64_t>(i);
        phase.push_back(v);
      }
      if (!seen[v]) {
        seen[v] = 1;
        if (++collected == n) rep.covered_at = rep.total_draws;
      }
    }
    sets.push_back(std::move(phase));
  }
  rep.overhead = rep.total_draws - rep.sum_y;
  std::uint64_t draws = rep.total_draws;
  while (collected < n) {
    auto v = static_cast<Vertex>(rng.below(n));
    ++draws;
    if (!seen[v]) {
      seen[v] = 1;
      if (++collected == n) rep.covered_at = draws;
    }
  }

  auto rig = clique_union(n, sets);
  rep.rig_edges = rig.edge_count();
  rep.delta_ge_1 = min_degree(rig) >= 1;

  const double root_s1 = std::sqrt(std::max(0.0, s1));
  const double slack = s1 / (omega * std::log(static_cast<double>(n)));
  rep.t_minus = s1 - omega * root_s1;
  rep.t_plus = s1 + omega * root_s1 + slack;
  const auto covered = static_cast<double>(rep.covered_at);
  const auto total = static_cast<double>(rep.total_draws);
  rep.a_minus = covered <= rep.t_minus;
  rep.a_plus = covered <= rep.t_plus;
  rep.b = rep.t_minus <= total && total <= rep.t_plus;
  rep.b1 = total <= static_cast<double>(rep.sum_y) + slack;
  rep.b2 = std::fabs(static_cast<double>(rep.sum_y) - s1) <= omega * root_s1;
  return rep;
}

CollectorReport coupon_collector_trial(std::size_t n, const FeatureProbabilities& p, double omega,
                                       const Seed& seed) {
  if (!(omega > 0.0)) throw ValidationError("omega must be positive");
  auto stats = summary_stats(n, p, 2);
  if (!(stats.s1 > 0.0)) throw ValidationError("S1 is zero; the collector process is degenerate");
  auto dec = decompose_sizes(sample_feature_sizes(n, p, seed.with_stream(1)));
  return coupon_collector_from_sizes(n, dec.y, stats.s1, omega, seed);
}

double chi_square_survival(double statistic, int dof) {
  if (dof <= 0) return 1.0;
  if (statistic <= 0.0) return 1.0;
  return boost::math::gamma_q(0.5 * dof, 0.5 * statistic);
}

ChiSquareResult chi_square_two_sample(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  const std::size_t bins = std::max(a.size(), b.size());
  auto at = [](const std::vector<std::uint64_t>& v, std::size_t i) { return i < v.size() ? v[i] : 0; };
  double total_a = 0, total_b = 0;
  for (std::size_t i = 0; i < bins; ++i) {
    total_a += static_cast<double>(at(a, i));
    total_b += static_cast<double>(at(b, i));
  }
  ChiSquareResult out;
  if (total_a == 0 || total_b == 0) return out;
  const double share_a = total_a / (total_a + total_b);
  const double share_b = 1.0 - share_a;

  std::vector<std::pair<double, double>> groups;
  double cur_a = 0, cur_b = 0;
  for (std::size_t i = 0; i < bins; ++i) {
    cur_a += static_cast<double>(at(a, i));
    cur_b += static_cast<double>(at(b, i));
    double pooled = cur_a + cur_b;
    if (pooled * std::min(share_a, share_b) >= 5.0) {
      groups.emplace_back(cur_a, cur_b);
      cur_a = cur_b = 0;
    }
  }
  if (cur_a + cur_b > 0) {
    if (groups.empty()) {
      groups.emplace_back(cur_a, cur_b);
    } else {
      groups.back().first += cur_a;
      groups.back().second += cur_b;
    }
  }
  for (auto [oa, ob] : groups) {
    double pooled = oa + ob;
    double ea = pooled * share_a, eb = pooled * share_b;
    out.statistic += (oa - ea) * (oa - ea) / ea + (ob - eb) * (ob - eb) / eb;
  }
  out.degrees_of_freedom = static_cast<int>(groups.size()) - 1;
  out.p_value = chi_square_survival(out.statistic, out.degrees_of_freedom);
  return out;
}

PoissonizationReport poissonization_test(std::size_t n, std::size_t arity, double lambda, std::size_t trials,
                                         const Seed& seed, double alpha) {
  if (trials < 1000) throw ValidationError("poissonization_test needs at least 1000 trials");
  PoissonizationReport rep;
  rep.trials = trials;
  rep.lambda = lambda;
  rep.alpha = alpha;
  rep.subsets = subset_count(n, arity);
  rep.hyperedge_probability = poissonized_hyperedge_probability(n, arity, lambda);
  const double q = rep.hyperedge_probability;
  const bool track_each = rep.subsets <= 1'000'000;
  std::vector<std::uint64_t> hits_star(track_each ? rep.subsets : 0, 0);
  std::vector<std::uint64_t> hits_indep(track_each ? rep.subsets : 0, 0);
  std::vector<std::uint64_t> hist_star, hist_indep;
  double sum_star = 0, sum_indep = 0;

  auto record = [&](const UniformHypergraph& h, std::vector<std::uint64_t>& hist, std::vector<std::uint64_t>& hits,
                    double& sum) {
    std::size_t count = h.hyperedge_count();
    if (hist.size() <= count) hist.resize(count + 1, 0);
    ++hist[count];
    sum += static_cast<double>(count);
    if (track_each) {
      for (std::size_t e = 0; e < count; ++e) ++hits[rank_subset(h.hyperedge(e))];
    }
  };
  for (std::size_t t = 0; t < trials; ++t) {
    Seed trial_seed = seed.with_trial(t);
    record(sample_g_star_poisson(n, arity, lambda, trial_seed.with_stream(1)), hist_star, hits_star, sum_star);
    record(sample_h_independent(n, arity, q, trial_seed.with_stream(2)), hist_indep, hits_indep, sum_indep);
  }
  const double td = static_cast<double>(trials);
  rep.mean_count_star = sum_star / td;
  rep.mean_count_independent = sum_indep / td;
  rep.expected_count = static_cast<double>(rep.subsets) * q;
  rep.count_sigma = std::sqrt(static_cast<double>(rep.subsets) * q * (1.0 - q) / td);
  rep.freq_sigma = std::sqrt(q * (1.0 - q) / td);
  if (track_each) {
    rep.freq_star.resize(rep.subsets);
    rep.freq_independent.resize(rep.subsets);
    for (std::size_t r = 0; r < rep.subsets; ++r) {
      rep.freq_star[r] = static_cast<double>(hits_star[r]) / td;
      rep.freq_independent[r] = static_cast<double>(hits_indep[r]) / td;
      if (rep.freq_sigma > 0.0) {
        rep.max_freq_z = std::max({rep.max_freq_z, std::fabs(rep.freq_star[r] - q) / rep.freq_sigma,
                                   std::fabs(rep.freq_independent[r] - q) / rep.freq_sigma});
      }
    }
  }
  auto chi = chi_square_two_sample(hist_star, hist_indep);
  rep.chi_square = chi.statistic;
  rep.degrees_of_freedom = chi.degrees_of_freedom;
  rep.p_value = chi.p_value;
  rep.accepted = rep.p_value >= alpha;
  return rep;
}

}  // namespace riglab
