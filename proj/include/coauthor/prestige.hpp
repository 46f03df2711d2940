#pragma once

// PageRank on the binary directed network and AuthorRank on the weighted
// one. Both iterate
//
//     score(i) = (1 - d) + d * sum over arcs j->i of score(j) * t(j, i)
//
// from score = 1 everywhere, with t(j, i) = 1 / outdeg(j) for PageRank and
// t(j, i) = w_ji for AuthorRank. Nodes without out-arcs pass nothing on.
// Updates are synchronous, so node order never affects the result.

#include <cstddef>

#include "coauthor/netmodel.hpp"
#include "coauthor/rank.hpp"

namespace coauthor {

struct RankConfig {
  double damping = 0.85;
  double tolerance = 1e-10;  // on the max absolute per-node change
  std::size_t max_iterations = 1000;

  /// Throws DomainError unless 0 < damping < 1, tolerance > 0 and
  /// max_iterations >= 1.
  void validate() const;
};

/// A non-converged result is still returned, with `converged == false`.
RankVector pagerank(const BinaryDigraph& g, const RankConfig& cfg = {});

/// Requires every node with out-arcs to have weights summing to 1 (1e-9);
/// throws DomainError otherwise.
RankVector authorrank(const WeightedDigraph& g, const RankConfig& cfg = {});

/// Diagnostic: per-iteration changes never grow after `warmup` iterations.
bool deltas_monotone_after(const RankVector& r, std::size_t warmup = 5);

}  // namespace coauthor
