#include "riglab/random.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string_view>
#include <unordered_set>

namespace riglab {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t Seed::derive() const {
  std::uint64_t h = mix64(master);
  h = mix64(h ^ mix64(experiment + 0x1234567ULL));
  h = mix64(h ^ mix64(trial + 0x89abcdefULL));
  h = mix64(h ^ mix64(stream + 0x2545f491ULL));
  return h;
}

std::uint64_t label_hash(std::string_view label) {
  // FNV-1a, then a finalizer for avalanche.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : label) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return mix64(h);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  // Lemire's multiply-shift with rejection.
  std::uint64_t x = engine_();
  __uint128_t m = static_cast<__uint128_t>(x) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      x = engine_();
      m = static_cast<__uint128_t>(x) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

std::uint64_t Rng::geometric(double p, std::uint64_t cap) {
  if (p >= 1.0) return 0;
  if (p <= 0.0) return cap;
  double skips = std::floor(std::log(uniform_pos()) / std::log1p(-p));
  if (!(skips < static_cast<double>(cap))) return cap;
  return static_cast<std::uint64_t>(skips);
}

std::uint64_t Rng::poisson(double lambda) {
  if (lambda <= 0.0) return 0;
  return lambda < 30.0 ? poisson_inversion(lambda) : poisson_ptrs(lambda);
}

std::uint64_t Rng::poisson_inversion(double lambda) {
  double u = uniform();
  double prob = std::exp(-lambda);
  double cumulative = prob;
  std::uint64_t k = 0;
  while (u > cumulative) {
    ++k;
    prob *= lambda / static_cast<double>(k);
    double next = cumulative + prob;
    if (next == cumulative) break;  // tail exhausted in double precision
    cumulative = next;
  }
  return k;
}

// Hörmann's transformed rejection with squeeze (PTRS).
std::uint64_t Rng::poisson_ptrs(double lambda) {
  const double slam = std::sqrt(lambda);
  const double loglam = std::log(lambda);
  const double b = 0.931 + 2.53 * slam;
  const double a = -0.059 + 0.02483 * b;
  const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  const double vr = 0.9277 - 3.6224 / (b - 2.0);
  while (true) {
    double u = uniform() - 0.5;
    double v = uniform();
    double us = 0.5 - std::fabs(u);
    double kf = std::floor((2.0 * a / us + b) * u + lambda + 0.43);
    if (us >= 0.07 && v <= vr) return static_cast<std::uint64_t>(kf);
    if (kf < 0.0 || (us < 0.013 && v > us)) continue;
    if (std::log(v) + std::log(inv_alpha) - std::log(a / (us * us) + b) <=
        -lambda + kf * loglam - std::lgamma(kf + 1.0)) {
      return static_cast<std::uint64_t>(kf);
    }
  }
}

std::uint64_t Rng::binomial(std::uint64_t n, double p) {
  if (p <= 0.0 || n == 0) return 0;
  if (p >= 1.0) return n;
  // Geometric skipping over the n trials: O(np + 1) expected.
  std::uint64_t successes = 0;
  std::uint64_t pos = 0;
  while (true) {
    std::uint64_t skip = geometric(p, n);
    if (skip >= n - pos) break;
    pos += skip + 1;
    ++successes;
    if (pos >= n) break;
  }
  return successes;
}

std::vector<std::uint32_t> sample_distinct(Rng& rng, std::uint32_t n, std::uint32_t k) {
  std::vector<std::uint32_t> out;
  out.reserve(k);
  if (static_cast<std::uint64_t>(k) * 4 >= n) {
    std::vector<std::uint32_t> all(n);
    for (std::uint32_t i = 0; i < n; ++i) all[i] = i;
    for (std::uint32_t i = 0; i < k; ++i) {
      std::uint32_t j = i + static_cast<std::uint32_t>(rng.below(n - i));
      std::swap(all[i], all[j]);
    }
    out.assign(all.begin(), all.begin() + k);
  } else {
    std::unordered_set<std::uint32_t> seen;
    seen.reserve(k * 2);
    while (out.size() < k) {
      auto v = static_cast<std::uint32_t>(rng.below(n));
      if (seen.insert(v).second) out.push_back(v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace riglab
