#include <cmath>
#include <set>

#include <gtest/gtest.h>

#include "riglab/generators.hpp"

using namespace riglab;

TEST(FeatureProbabilities, Validation) {
  EXPECT_THROW(FeatureProbabilities({}), ValidationError);
  EXPECT_THROW(FeatureProbabilities({0.0}), ValidationError);
  EXPECT_THROW(FeatureProbabilities({1.0}), ValidationError);
  EXPECT_THROW(FeatureProbabilities({0.5, std::nan("")}), ValidationError);
  EXPECT_EQ(FeatureProbabilities::homogeneous(3, 0.2).size(), 3u);
}

TEST(SubsetRanking, RoundTripAndCounts) {
  EXPECT_EQ(subset_count(30, 2), 435u);
  EXPECT_EQ(subset_count(4000, 3), 10658668000u);
  EXPECT_THROW(subset_count(10, 4), UnsupportedArity);
  for (std::size_t arity : {2u, 3u}) {
    const std::uint64_t total = subset_count(12, arity);
    std::set<std::vector<Vertex>> seen;
    for (std::uint64_t r = 0; r < total; ++r) {
      auto s = unrank_subset(r, arity);
      ASSERT_EQ(s.size(), arity);
      ASSERT_TRUE(std::is_sorted(s.begin(), s.end()));
      ASSERT_LT(s.back(), 12u);
      ASSERT_EQ(rank_subset(s), r);
      seen.insert(s);
    }
    EXPECT_EQ(seen.size(), total);
  }
  auto big = unrank_subset(subset_count(4000, 3) - 1, 3);
  EXPECT_EQ(big, (std::vector<Vertex>{3997, 3998, 3999}));
}

TEST(SampleRig, Deterministic) {
  auto p = FeatureProbabilities::homogeneous(20, 0.3);
  Seed s{1, 2, 3, 4};
  auto a = sample_rig(50, p, s);
  auto b = sample_rig(50, p, s);
  EXPECT_EQ(a.feature_sets(), b.feature_sets());
  auto c = sample_rig(50, p, s.with_trial(4));
  EXPECT_NE(a.feature_sets(), c.feature_sets());
}

TEST(SampleRig, NearZeroProbabilitiesGiveEmptySets) {
  auto p = FeatureProbabilities::homogeneous(10, 1e-12);
  std::size_t total = 0;
  for (std::uint64_t t = 0; t < 1000; ++t) {
    auto r = sample_rig(100, p, Seed{5, 0, t, 0});
    for (const auto& s : r.feature_sets()) total += s.size();
  }
  EXPECT_EQ(total, 0u);
}

TEST(SampleRig, SingleVertexHasNoEdges) {
  auto r = sample_rig(1, FeatureProbabilities::homogeneous(5, 0.9), Seed{1});
  EXPECT_EQ(project_rig(r).edge_count(), 0u);
}

TEST(SampleRig, FeatureSizesAreBinomial) {
  // n=50, m=20, p=0.3: per-feature mean 15 and variance 10.5.
  const std::size_t n = 50, m = 20, trials = 10000;
  auto p = FeatureProbabilities::homogeneous(m, 0.3);
  double sum = 0, sq = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    auto r = sample_rig(n, p, Seed{11, 0, t, 0});
    for (const auto& s : r.feature_sets()) {
      sum += s.size();
      sq += static_cast<double>(s.size()) * s.size();
    }
  }
  const double count = static_cast<double>(trials * m);
  const double mean = sum / count;
  const double var = sq / count - mean * mean;
  EXPECT_NEAR(mean, 15.0, 3.0 * std::sqrt(10.5 / count));
  // sd of the sample variance is about sqrt(2 sigma^4 / N) for near-normal data
  EXPECT_NEAR(var, 10.5, 3.0 * std::sqrt(2.0 * 10.5 * 10.5 / count) * 1.1);
}

TEST(SampleRig, SizesMatchSizeSampler) {
  FeatureProbabilities p({0.1, 0.5, 0.02, 0.9});
  for (std::uint64_t t = 0; t < 50; ++t) {
    Seed s{3, 1, t, 2};
    auto r = sample_rig(40, p, s);
    auto sizes = sample_feature_sizes(40, p, s);
    ASSERT_EQ(sizes.size(), r.feature_count());
    for (std::size_t i = 0; i < sizes.size(); ++i) EXPECT_EQ(sizes[i], r.feature_set(i).size());
  }
}

TEST(SampleHIndependent, Examples) {
  EXPECT_EQ(sample_h_independent(10, 2, 0.0, Seed{1}).hyperedge_count(), 0u);
  EXPECT_EQ(sample_h_independent(4, 3, 1.0, Seed{1}).hyperedge_count(), 4u);
  EXPECT_THROW(sample_h_independent(10, 4, 0.5, Seed{1}), UnsupportedArity);
  EXPECT_THROW(sample_h_independent(10, 2, 1.5, Seed{1}), ValidationError);
}

TEST(SampleHIndependent, EdgeCountMean) {
  // n=30, i=2, phat=0.1: mean C(30,2)*0.1 = 43.5.
  const std::size_t trials = 10000;
  double sum = 0;
  for (std::uint64_t t = 0; t < trials; ++t) sum += sample_h_independent(30, 2, 0.1, Seed{2, 0, t, 0}).hyperedge_count();
  EXPECT_NEAR(sum / trials, 43.5, 3.0 * std::sqrt(435 * 0.1 * 0.9 / trials));
}

TEST(SampleHIndependent, SparseAtLargeN) {
  // C(4000,3) is about 1e10; skip sampling keeps this cheap.
  auto h = sample_h_independent(4000, 3, 1e-8, Seed{7});
  EXPECT_LT(h.hyperedge_count(), 300u);
  EXPECT_GT(h.hyperedge_count(), 30u);
}

TEST(SampleGStar, Examples) {
  EXPECT_EQ(sample_g_star(10, 2, 0, Seed{1}).hyperedge_count(), 0u);
  auto h = sample_g_star(3, 3, 5, Seed{1});
  ASSERT_EQ(h.hyperedge_count(), 1u);
  EXPECT_EQ(std::vector<Vertex>(h.hyperedge(0).begin(), h.hyperedge(0).end()), (std::vector<Vertex>{0, 1, 2}));
}

TEST(SampleGStar, CollisionFrequency) {
  // n=4, i=2, M=2: one distinct edge with probability 1/6.
  const std::size_t trials = 100000;
  std::size_t ones = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    auto h = sample_g_star(4, 2, 2, Seed{3, 0, t, 0});
    ASSERT_LE(h.hyperedge_count(), 2u);
    ones += h.hyperedge_count() == 1;
  }
  const double q = 1.0 / 6.0;
  EXPECT_NEAR(static_cast<double>(ones) / trials, q, 3.0 * std::sqrt(q * (1 - q) / trials));
}

TEST(SampleGStarPoisson, Examples) {
  EXPECT_EQ(sample_g_star_poisson(10, 2, 0.0, Seed{1}).hyperedge_count(), 0u);
  for (std::uint64_t t = 0; t < 20; ++t) EXPECT_EQ(sample_g_star_poisson(4, 2, 1e6, Seed{1, 0, t}).hyperedge_count(), 6u);
  EXPECT_NEAR(poissonized_hyperedge_probability(6, 3, 3.0), 1.0 - std::exp(-0.15), 1e-15);
  EXPECT_NEAR(poissonized_hyperedge_probability(6, 3, 3.0), 0.139292, 5e-7);
}

TEST(SampleGStarPoisson, PerHyperedgeFrequency) {
  const std::size_t trials = 20000;
  const double q = 1.0 - std::exp(-3.0 / 20.0);
  std::vector<std::size_t> hits(20, 0);
  for (std::uint64_t t = 0; t < trials; ++t) {
    auto h = sample_g_star_poisson(6, 3, 3.0, Seed{4, 0, t, 0});
    for (std::size_t e = 0; e < h.hyperedge_count(); ++e) ++hits[rank_subset(h.hyperedge(e))];
  }
  const double sigma = std::sqrt(q * (1 - q) / trials);
  double total = 0;
  for (auto h : hits) total += static_cast<double>(h) / trials;
  // Mean over the 20 hyperedges; the individual 3-sigma check lives in the acceptance suite.
  EXPECT_NEAR(total / 20.0, q, 3.0 * sigma);
}
