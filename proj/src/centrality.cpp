#include "coauthor/centrality.hpp"

#include <algorithm>

#include "coauthor/error.hpp"
#include "coauthor/parallel.hpp"
#include "coauthor/topology.hpp"

namespace coauthor {
namespace {

RankVector blank(const char* metric, const CoauthorGraph& g) {
  RankVector r;
  r.metric = metric;
  r.authors.resize(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) r.authors[v] = g.author(v);
  r.scores.assign(g.node_count(), 0.0);
  return r;
}

}  // namespace

RankVector degree_centrality(const CoauthorGraph& g) {
  RankVector r = blank("degree", g);
  for (NodeId v = 0; v < g.node_count(); ++v) r.scores[v] = static_cast<double>(g.degree(v));
  return r;
}

RankVector closeness_centrality(const CoauthorGraph& g) {
  RankVector r = blank("closeness", g);
  const std::size_t n = g.node_count();
  std::vector<char> disconnected(block_count(n), 0);
  parallel_blocks(n, [&](const Block& b) {
    for (std::size_t s = b.begin; s < b.end; ++s) {
      std::int64_t total = 0;
      for (std::int64_t d : bfs_distances(g, static_cast<NodeId>(s))) {
        if (d < 0) {
          disconnected[b.index] = 1;
          return;
        }
        total += d;
      }
      r.scores[s] = total > 0 ? static_cast<double>(n - 1) / static_cast<double>(total) : 0.0;
    }
  });
  if (std::any_of(disconnected.begin(), disconnected.end(), [](char c) { return c != 0; }))
    throw DomainError("closeness centrality needs a connected graph");
  return r;
}

RankVector betweenness_centrality(const CoauthorGraph& g) {
  RankVector r = blank("betweenness", g);
  const std::size_t n = g.node_count();
  std::vector<std::vector<double>> partial(block_count(n));

  parallel_blocks(n, [&](const Block& b) {
    std::vector<double> acc(n, 0.0);
    std::vector<double> sigma(n);
    std::vector<double> delta(n);
    std::vector<std::int64_t> dist(n);
    std::vector<NodeId> order;
    order.reserve(n);

    for (std::size_t s = b.begin; s < b.end; ++s) {
      std::fill(sigma.begin(), sigma.end(), 0.0);
      std::fill(delta.begin(), delta.end(), 0.0);
      std::fill(dist.begin(), dist.end(), -1);
      order.clear();

      sigma[s] = 1.0;
      dist[s] = 0;
      order.push_back(static_cast<NodeId>(s));
      for (std::size_t head = 0; head < order.size(); ++head) {
        NodeId u = order[head];
        for (NodeId v : g.neighbors(u)) {
          if (dist[v] < 0) {
            dist[v] = dist[u] + 1;
            order.push_back(v);
          }
          if (dist[v] == dist[u] + 1) sigma[v] += sigma[u];
        }
      }
      // Dependencies in reverse BFS order; predecessors are the neighbors
      // one level closer to s.
      for (std::size_t k = order.size(); k-- > 1;) {
        NodeId w = order[k];
        const double coeff = (1.0 + delta[w]) / sigma[w];
        for (NodeId v : g.neighbors(w))
          if (dist[v] == dist[w] - 1) delta[v] += sigma[v] * coeff;
        acc[w] += delta[w];
      }
    }
    partial[b.index] = std::move(acc);
  });

  for (const auto& acc : partial)
    for (std::size_t v = 0; v < n; ++v) r.scores[v] += acc[v];
  // each unordered pair was accumulated from both endpoints
  for (double& s : r.scores) s *= 0.5;
  return r;
}

}  // namespace coauthor
