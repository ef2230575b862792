#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "riglab/graph.hpp"
#include "riglab/random.hpp"

namespace riglab {

class UnsupportedArity : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Per-feature selection probabilities p_1..p_m, each strictly inside (0,1).
class FeatureProbabilities {
 public:
  explicit FeatureProbabilities(std::vector<double> values);
  static FeatureProbabilities homogeneous(std::size_t m, double p);

  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  const std::vector<double>& values() const { return values_; }
  double max() const;

 private:
  std::vector<double> values_;
};

/// C(n, i) for the supported arities, exact in 64 bits.
std::uint64_t subset_count(std::uint64_t n, std::size_t arity);
/// Colexicographic unranking of i-subsets; rank < subset_count(n, arity).
std::vector<Vertex> unrank_subset(std::uint64_t rank, std::size_t arity);
std::uint64_t rank_subset(std::span<const Vertex> sorted_subset);

/// Draws uniform i-subsets one at a time; G*_i(n, t) is its first t draws.
class SubsetStream {
 public:
  SubsetStream(std::size_t n, std::size_t arity, Rng& rng);
  std::vector<Vertex> next();
  std::size_t arity() const { return arity_; }

 private:
  std::size_t arity_;
  std::uint64_t total_;
  Rng* rng_;
};

RigInstance sample_rig(std::size_t n, const FeatureProbabilities& p, const Seed& seed);
/// Feature sizes |V_i| only, drawn exactly as sample_rig would draw them.
std::vector<std::uint32_t> sample_feature_sizes(std::size_t n, const FeatureProbabilities& p,
                                                const Seed& seed);

UniformHypergraph sample_h_independent(std::size_t n, std::size_t arity, double phat,
                                       const Seed& seed);
UniformHypergraph sample_g_star(std::size_t n, std::size_t arity, std::uint64_t draws,
                                const Seed& seed);
UniformHypergraph sample_g_star_poisson(std::size_t n, std::size_t arity, double lambda,
                                        const Seed& seed);

/// Hyperedge probability 1 - exp(-lambda / C(n, i)) matching G*_i(n, Po(lambda)).
double poissonized_hyperedge_probability(std::size_t n, std::size_t arity, double lambda);

}  // namespace riglab
