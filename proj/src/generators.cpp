#include "riglab/generators.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace riglab {

namespace {

void require_supported_arity(std::size_t arity) {
  if (arity != 2 && arity != 3) {
    throw UnsupportedArity("arity " + std::to_string(arity) + " is not supported (use 2 or 3)");
  }
}

std::uint64_t choose2(std::uint64_t x) { return x < 2 ? 0 : x * (x - 1) / 2; }

std::uint64_t choose3(std::uint64_t x) {
  if (x < 3) return 0;
  // Divide early so intermediates stay within 64 bits for x up to ~2.6e6.
  std::uint64_t a = x, b = x - 1, c = x - 2;
  if (a % 2 == 0) a /= 2; else b /= 2;
  if (a % 3 == 0) a /= 3; else if (b % 3 == 0) b /= 3; else c /= 3;
  return a * b * c;
}

// Largest x with choose(x) <= rank, starting from a floating estimate.
template <typename Choose>
std::uint64_t largest_below(std::uint64_t rank, double estimate, Choose choose) {
  auto x = static_cast<std::uint64_t>(std::max(0.0, estimate));
  while (choose(x + 1) <= rank) ++x;
  while (x > 0 && choose(x) > rank) --x;
  return x;
}


}  // namespace

FeatureProbabilities::FeatureProbabilities(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw ValidationError("feature probability vector must be nonempty");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    double p = values_[i];
    if (!(p > 0.0 && p < 1.0)) {
      throw ValidationError("p_" + std::to_string(i) + " = " + std::to_string(p) +
                            " is not strictly inside (0,1)");
    }
  }
}

FeatureProbabilities FeatureProbabilities::homogeneous(std::size_t m, double p) {
  return FeatureProbabilities(std::vector<double>(m, p));
}

double FeatureProbabilities::max() const { return *std::max_element(values_.begin(), values_.end()); }

std::uint64_t subset_count(std::uint64_t n, std::size_t arity) {
  require_supported_arity(arity);
  return arity == 2 ? choose2(n) : choose3(n);
}

std::vector<Vertex> unrank_subset(std::uint64_t rank, std::size_t arity) {
  require_supported_arity(arity);
  std::vector<Vertex> out(arity);
  std::uint64_t r = rank;
  if (arity == 3) {
    std::uint64_t c = largest_below(r, std::cbrt(6.0 * static_cast<double>(r)), choose3);
    r -= choose3(c);
    out[2] = static_cast<Vertex>(c);
  }
  std::uint64_t b = largest_below(r, std::sqrt(2.0 * static_cast<double>(r)), choose2);
  out[1] = static_cast<Vertex>(b);
  out[0] = static_cast<Vertex>(r - choose2(b));
  return out;
}

std::uint64_t rank_subset(std::span<const Vertex> s) {
  require_supported_arity(s.size());
  std::uint64_t r = s[0] + choose2(s[1]);
  if (s.size() == 3) r += choose3(s[2]);
  return r;
}

SubsetStream::SubsetStream(std::size_t n, std::size_t arity, Rng& rng)
    : arity_(arity), total_(subset_count(n, arity)), rng_(&rng) {
  if (total_ == 0) throw ValidationError("no " + std::to_string(arity) + "-subsets of " +
                                         std::to_string(n) + " vertices");
}

std::vector<Vertex> SubsetStream::next() { return unrank_subset(rng_->below(total_), arity_); }

std::vector<std::uint32_t> sample_feature_sizes(std::size_t n, const FeatureProbabilities& p,
                                                const Seed& seed) {
  Rng rng(seed);
  std::vector<std::uint32_t> sizes(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) sizes[i] = static_cast<std::uint32_t>(rng.binomial(n, p[i]));
  return sizes;
}

RigInstance sample_rig(std::size_t n, const FeatureProbabilities& p, const Seed& seed) {
  if (n < 1) throw ValidationError("sample_rig needs n >= 1");
  Rng rng(seed);
  std::vector<std::vector<Vertex>> sets(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    // Same skip sequence as Rng::binomial, keeping the positions.
    std::uint64_t pos = 0;
    while (true) {
      std::uint64_t skip = rng.geometric(p[i], n);
      if (skip >= n - pos) break;
      pos += skip + 1;
      sets[i].push_back(static_cast<Vertex>(pos - 1));
      if (pos >= n) break;
    }
  }
  return RigInstance(n, std::move(sets));
}

UniformHypergraph sample_h_independent(std::size_t n, std::size_t arity, double phat,
                                       const Seed& seed) {
  require_supported_arity(arity);
  if (!(phat >= 0.0 && phat <= 1.0)) throw ValidationError("phat must lie in [0,1]");
  std::vector<std::vector<Vertex>> hyperedges;
  std::uint64_t total = subset_count(n, arity);
  if (phat > 0.0 && total > 0) {
    Rng rng(seed);
    hyperedges.reserve(static_cast<std::size_t>(std::min<double>(1e8, total * phat * 1.1 + 16)));
    // Walk the colex ranks with geometric gaps between hits.
    std::uint64_t pos = 0;
    while (true) {
      std::uint64_t skip = rng.geometric(phat, total);
      if (skip >= total - pos) break;
      pos += skip + 1;
      hyperedges.push_back(unrank_subset(pos - 1, arity));
      if (pos >= total) break;
    }
  }
  return UniformHypergraph::from_hyperedges(n, arity, std::move(hyperedges));
}

UniformHypergraph sample_g_star(std::size_t n, std::size_t arity, std::uint64_t draws,
                                const Seed& seed) {
  require_supported_arity(arity);
  std::vector<std::vector<Vertex>> hyperedges;
  if (draws > 0) {
    Rng rng(seed);
    SubsetStream stream(n, arity, rng);
    hyperedges.reserve(draws);
    for (std::uint64_t d = 0; d < draws; ++d) hyperedges.push_back(stream.next());
  }
  return UniformHypergraph::from_hyperedges(n, arity, std::move(hyperedges));
}

UniformHypergraph sample_g_star_poisson(std::size_t n, std::size_t arity, double lambda,
                                        const Seed& seed) {
  require_supported_arity(arity);
  if (!(lambda >= 0.0)) throw ValidationError("lambda must be nonnegative");
  Rng rng(seed.with_stream(seed.stream ^ 0x504f4953ULL));
  std::uint64_t draws = rng.poisson(lambda);
  return sample_g_star(n, arity, draws, seed);
}

double poissonized_hyperedge_probability(std::size_t n, std::size_t arity, double lambda) {
  auto total = static_cast<double>(subset_count(n, arity));
  return -std::expm1(-lambda / total);
}

}  // namespace riglab
