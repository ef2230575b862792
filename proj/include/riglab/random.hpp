#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <vector>

namespace riglab {

/// Stream identity for a random draw. Sub-seeds are a pure function of all
/// four fields, so trials can run in any order on any thread.
struct Seed {
  std::uint64_t master = 0;
  std::uint64_t experiment = 0;
  std::uint64_t trial = 0;
  std::uint64_t stream = 0;

  Seed with_experiment(std::uint64_t e) const { return {master, e, trial, stream}; }
  Seed with_trial(std::uint64_t t) const { return {master, experiment, t, stream}; }
  Seed with_stream(std::uint64_t s) const { return {master, experiment, trial, s}; }

  /// 64-bit sub-seed obtained by chaining splitmix64 finalizers over the labels.
  std::uint64_t derive() const;

  friend bool operator==(const Seed&, const Seed&) = default;
};

std::uint64_t mix64(std::uint64_t x);
/// Stable 64-bit hash of a label, used to turn experiment names into ids.
std::uint64_t label_hash(std::string_view label);

/// Engine plus hand-written distributions. The std:: distributions are not
/// specified bit-for-bit, so everything downstream of the raw mt19937_64
/// output is implemented here to keep samples identical across platforms.
class Rng {
 public:
  explicit Rng(const Seed& seed) : engine_(seed.derive()) {}
  explicit Rng(std::uint64_t raw_seed) : engine_(raw_seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  /// Uniform double in (0, 1].
  double uniform_pos() { return 1.0 - uniform(); }
  /// Uniform integer in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);
  bool bernoulli(double p) { return uniform() < p; }
  /// Number of failures before the first success, capped at `cap`.
  std::uint64_t geometric(double p, std::uint64_t cap);
  std::uint64_t poisson(double lambda);
  /// Count of successes among n independent Bernoulli(p) trials.
  std::uint64_t binomial(std::uint64_t n, double p);

  template <typename T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = below(i);
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::uint64_t poisson_inversion(double lambda);
  std::uint64_t poisson_ptrs(double lambda);

  std::mt19937_64 engine_;
};

/// k distinct values from [0, n), uniformly chosen, returned sorted.
std::vector<std::uint32_t> sample_distinct(Rng& rng, std::uint32_t n, std::uint32_t k);

}  // namespace riglab
