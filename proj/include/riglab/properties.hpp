#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "riglab/graph.hpp"
#include "riglab/random.hpp"

namespace riglab {

std::size_t min_degree(const SimpleGraph& g);
std::size_t min_degree(const Adjacency& adj);
bool is_connected(const Adjacency& adj);
bool is_connected(const SimpleGraph& g);

enum class ConnectivityMode { Vertex, Edge };

/// Vertex mode: n > k and no vertex cut of size < k. Edge mode: no edge cut
/// of size < k (and n >= 2).
bool is_k_connected(const SimpleGraph& g, int k, ConnectivityMode mode = ConnectivityMode::Vertex);

/// Maximum matching in a general graph (Edmonds' blossom algorithm).
/// mate[v] is the partner of v or -1.
std::vector<std::int64_t> maximum_matching(const Adjacency& adj);
bool has_perfect_matching(const SimpleGraph& g);

enum class Verdict { Yes, No, Unknown };
std::string to_string(Verdict v);

struct HamiltonicityVerdict {
  Verdict verdict = Verdict::Unknown;
  std::vector<Vertex> certificate;  // Hamilton cycle order when verdict == Yes
  std::uint64_t effort = 0;         // node expansions plus rotations spent
  std::string reason;               // which stage settled the answer
};

struct HamiltonicityOptions {
  std::uint64_t budget = 20'000'000;
  std::uint64_t seed = 0x48434845ULL;
};

HamiltonicityVerdict hamiltonicity(const SimpleGraph& g, const HamiltonicityOptions& options = {});
bool is_hamilton_cycle(const SimpleGraph& g, const std::vector<Vertex>& cycle);

struct AuditParams {
  double gamma = 0.6;
  int k = 1;
  std::size_t degree_cutoff = 19;  // C
  std::size_t sample_count = 50;
  std::uint64_t seed = 1;
};

struct SampledCheck {
  std::size_t sets_sampled = 0;
  std::size_t violations = 0;
  std::size_t size_classes = 0;
  std::size_t min_size = 0;
  std::size_t max_size = 0;
};

struct AuditReport {
  SampledCheck b1;  // |N(S)| > 2|S| for n^gamma <= |S| <= n/4
  SampledCheck b2;  // |N(S)| > min(|S|, 4n ln ln n / ln n) for n^gamma <= |S| <= 2n/3
  SampledCheck b3;  // |N(S)| >= 2k|S| for high-degree S with |S| <= n^gamma
  std::size_t b3_eligible_vertices = 0;
  std::size_t b4_low_degree_vertices = 0;
  std::size_t b4_violating_pairs = 0;  // low-degree pairs at distance < 6
  bool b4_vacuous = true;
};

AuditReport structure_audit(const SimpleGraph& g, const AuditParams& params);

}  // namespace riglab
