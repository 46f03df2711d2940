#pragma once

// Global structure of the binary co-authorship graph: connected components,
// clustering coefficient, characteristic path length, a size-matched random
// baseline, and the degree distribution.

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "coauthor/netmodel.hpp"

namespace coauthor {

struct ComponentLabeling {
  // Component 0 is the largest; equal sizes are ordered by smallest member.
  std::vector<std::uint32_t> component_of;
  std::vector<std::size_t> sizes;  // non-increasing

  std::size_t count() const noexcept { return sizes.size(); }
};

ComponentLabeling components(const CoauthorGraph& g);

/// Induced subgraph on one component; node order follows the parent's
/// ascending ids and author() maps back to the parent's authors.
/// Throws DomainError for an unknown component id.
CoauthorGraph extract_component(const CoauthorGraph& g, const ComponentLabeling& labeling,
                                std::uint32_t component);

bool is_connected(const CoauthorGraph& g);

/// Mean local clustering coefficient; nodes of degree < 2 count as 0.
/// Throws DomainError when n < 3.
double clustering_coefficient(const CoauthorGraph& g);

/// Per-node local coefficients (0 for degree < 2).
std::vector<double> local_clustering(const CoauthorGraph& g);

/// Mean geodesic distance over unordered node pairs.
/// Throws DomainError if n < 2 or the graph is disconnected.
double characteristic_path_length(const CoauthorGraph& g);

struct BaselineReport {
  double mean_clustering = 0.0;
  double mean_path_length = 0.0;
  std::size_t seeds = 0;
};

/// Uniform random graph with exactly n nodes and m distinct edges.
CoauthorGraph sample_gnm(std::size_t n, std::size_t m, std::uint64_t seed);

/// Averages clustering and path length over `seeds` samples of G(n, m),
/// each restricted to its largest component. Sample s uses generator seed
/// derived from (rng_seed, s). Throws DomainError unless
/// 3 <= n, n - 1 <= m <= n(n-1)/2 and seeds >= 1.
BaselineReport random_baseline(std::size_t n, std::size_t m, std::size_t seeds,
                               std::uint64_t rng_seed);

struct SmallWorldReport {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  double clustering = 0.0;
  double path_length = 0.0;
  BaselineReport baseline;
};

inline constexpr std::size_t kDefaultBaselineSeeds = 20;

/// Throws DomainError if g is disconnected or has fewer than 3 nodes.
SmallWorldReport small_world(const CoauthorGraph& g, std::size_t seeds, std::uint64_t rng_seed);

std::map<std::size_t, std::size_t> degree_histogram(const CoauthorGraph& g);

/// Hop distances from `source`; -1 marks unreachable nodes.
std::vector<std::int64_t> bfs_distances(const CoauthorGraph& g, NodeId source);

}  // namespace coauthor
