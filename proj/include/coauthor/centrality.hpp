#pragma once

// Degree, closeness and betweenness centrality on the binary undirected
// co-authorship graph.

#include "coauthor/netmodel.hpp"
#include "coauthor/rank.hpp"

namespace coauthor {

RankVector degree_centrality(const CoauthorGraph& g);

/// (n - 1) / sum of distances to every other node. Throws DomainError on a
/// disconnected graph; pass a single component.
RankVector closeness_centrality(const CoauthorGraph& g);

/// Sum over unordered pairs {s, t} (s, t != v) of the fraction of s-t
/// geodesics passing through v. Pairs in different components add nothing.
RankVector betweenness_centrality(const CoauthorGraph& g);

}  // namespace coauthor
