#include "coauthor/topology.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>
#include <random>
#include <string>
#include <unordered_set>

#include "coauthor/error.hpp"
#include "coauthor/kernels.hpp"
#include "coauthor/parallel.hpp"

namespace coauthor {

std::vector<std::int64_t> bfs_distances(const CoauthorGraph& g, NodeId source) {
  std::vector<std::int64_t> dist(g.node_count(), -1);
  std::vector<NodeId> queue;
  queue.reserve(g.node_count());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    NodeId u = queue[head];
    for (NodeId v : g.neighbors(u)) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

ComponentLabeling components(const CoauthorGraph& g) {
  const std::size_t n = g.node_count();
  constexpr auto unset = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> raw(n, unset);
  std::vector<std::size_t> raw_sizes;
  std::vector<NodeId> stack;
  for (NodeId s = 0; s < n; ++s) {
    if (raw[s] != unset) continue;
    const auto id = static_cast<std::uint32_t>(raw_sizes.size());
    std::size_t size = 0;
    raw[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      NodeId u = stack.back();
      stack.pop_back();
      ++size;
      for (NodeId v : g.neighbors(u)) {
        if (raw[v] == unset) {
          raw[v] = id;
          stack.push_back(v);
        }
      }
    }
    raw_sizes.push_back(size);
  }

  // Raw ids follow smallest member, so a stable sort by size gives the order.
  std::vector<std::uint32_t> order(raw_sizes.size());
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::uint32_t a, std::uint32_t b) { return raw_sizes[a] > raw_sizes[b]; });
  std::vector<std::uint32_t> rename(order.size());
  ComponentLabeling out;
  out.sizes.reserve(order.size());
  for (std::uint32_t k = 0; k < order.size(); ++k) {
    rename[order[k]] = k;
    out.sizes.push_back(raw_sizes[order[k]]);
  }
  out.component_of.resize(n);
  for (NodeId v = 0; v < n; ++v) out.component_of[v] = rename[raw[v]];
  return out;
}

CoauthorGraph extract_component(const CoauthorGraph& g, const ComponentLabeling& labeling,
                                std::uint32_t component) {
  if (component >= labeling.count())
    throw DomainError("unknown component id " + std::to_string(component));
  constexpr auto absent = std::numeric_limits<NodeId>::max();
  std::vector<NodeId> local(g.node_count(), absent);
  std::vector<AuthorId> authors;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (labeling.component_of[v] == component) {
      local[v] = static_cast<NodeId>(authors.size());
      authors.push_back(g.author(v));
    }
  }
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (auto [u, v] : g.edges())
    if (local[u] != absent && local[v] != absent) edges.emplace_back(local[u], local[v]);
  const std::size_t n = authors.size();
  return CoauthorGraph::from_edges(n, std::move(edges), std::move(authors));
}

bool is_connected(const CoauthorGraph& g) {
  if (g.node_count() == 0) return true;
  auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](std::int64_t d) { return d < 0; });
}

std::vector<double> local_clustering(const CoauthorGraph& g) {
  std::vector<double> local(g.node_count(), 0.0);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    const std::size_t d = g.degree(v);
    if (d < 2) continue;
    auto nv = g.neighbors(v);
    std::size_t links = 0;  // each neighbor-neighbor edge seen twice
    for (NodeId u : nv) {
      auto nu = g.neighbors(u);
      auto a = nv.begin();
      auto b = nu.begin();
      while (a != nv.end() && b != nu.end()) {
        if (*a < *b) {
          ++a;
        } else if (*b < *a) {
          ++b;
        } else {
          ++links;
          ++a;
          ++b;
        }
      }
    }
    local[v] = static_cast<double>(links) / static_cast<double>(d * (d - 1));
  }
  return local;
}

double clustering_coefficient(const CoauthorGraph& g) {
  if (g.node_count() < 3) throw DomainError("clustering coefficient needs at least 3 nodes");
  auto local = local_clustering(g);
  return kernels::sum(local) / static_cast<double>(g.node_count());
}

double characteristic_path_length(const CoauthorGraph& g) {
  const std::size_t n = g.node_count();
  if (n < 2) throw DomainError("characteristic path length needs at least 2 nodes");
  std::vector<std::uint64_t> partial(block_count(n), 0);
  std::vector<char> unreachable(block_count(n), 0);
  parallel_blocks(n, [&](const Block& b) {
    std::uint64_t total = 0;
    for (std::size_t s = b.begin; s < b.end; ++s) {
      for (std::int64_t d : bfs_distances(g, static_cast<NodeId>(s))) {
        if (d < 0) {
          unreachable[b.index] = 1;
          return;
        }
        total += static_cast<std::uint64_t>(d);
      }
    }
    partial[b.index] = total;
  });
  if (std::any_of(unreachable.begin(), unreachable.end(), [](char c) { return c != 0; }))
    throw DomainError("characteristic path length needs a connected graph");
  const std::uint64_t total = std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
  // every unordered pair was counted from both ends
  return static_cast<double>(total) / (static_cast<double>(n) * static_cast<double>(n - 1));
}

namespace {

// k-th pair (i < j) in the order (0,1), (0,2), (1,2), (0,3), ...
std::pair<NodeId, NodeId> pair_at(std::uint64_t k) {
  auto j = static_cast<std::uint64_t>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(k))) / 2.0);
  while (j * (j - 1) / 2 > k) --j;
  while ((j + 1) * j / 2 <= k) ++j;
  return {static_cast<NodeId>(k - j * (j - 1) / 2), static_cast<NodeId>(j)};
}

}  // namespace

CoauthorGraph sample_gnm(std::size_t n, std::size_t m, std::uint64_t seed) {
  const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n > 0 ? n - 1 : 0) / 2;
  if (m > pairs) throw DomainError("more edges requested than node pairs exist");

  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  std::mt19937_64 rng(seq);

  // Floyd's sampling: a uniform m-subset of the pair indices.
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(m * 2);
  std::vector<std::uint64_t> picked;
  picked.reserve(m);
  for (std::uint64_t top = pairs - m; top < pairs; ++top) {
    std::uniform_int_distribution<std::uint64_t> draw(0, top);
    std::uint64_t t = draw(rng);
    if (!chosen.insert(t).second) {
      chosen.insert(top);
      t = top;
    }
    picked.push_back(t);
  }
  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(m);
  for (std::uint64_t k : picked) edges.push_back(pair_at(k));
  return CoauthorGraph::from_edges(n, std::move(edges));
}

BaselineReport random_baseline(std::size_t n, std::size_t m, std::size_t seeds,
                               std::uint64_t rng_seed) {
  if (n < 3) throw DomainError("random baseline needs at least 3 nodes");
  if (m + 1 < n) throw DomainError("random baseline needs m >= n - 1");
  if (m > n * (n - 1) / 2) throw DomainError("random baseline: m exceeds n(n-1)/2");
  if (seeds == 0) throw DomainError("random baseline needs at least one seed");

  BaselineReport report;
  report.seeds = seeds;
  std::vector<double> cc(seeds);
  std::vector<double> len(seeds);
  for (std::size_t s = 0; s < seeds; ++s) {
    std::seed_seq mix{static_cast<std::uint32_t>(rng_seed), static_cast<std::uint32_t>(rng_seed >> 32),
                      static_cast<std::uint32_t>(s)};
    std::uint32_t derived[2];
    mix.generate(derived, derived + 2);
    const std::uint64_t sample_seed = (static_cast<std::uint64_t>(derived[1]) << 32) | derived[0];

    CoauthorGraph sample = sample_gnm(n, m, sample_seed);
    ComponentLabeling labels = components(sample);
    CoauthorGraph giant = labels.count() == 1 ? std::move(sample)
                                              : extract_component(sample, labels, 0);
    cc[s] = clustering_coefficient(giant);
    len[s] = characteristic_path_length(giant);
  }
  report.mean_clustering = kernels::sum(cc) / static_cast<double>(seeds);
  report.mean_path_length = kernels::sum(len) / static_cast<double>(seeds);
  return report;
}

SmallWorldReport small_world(const CoauthorGraph& g, std::size_t seeds, std::uint64_t rng_seed) {
  if (g.node_count() < 3) throw DomainError("small-world analysis needs at least 3 nodes");
  if (!is_connected(g)) throw DomainError("small-world analysis needs a connected graph");
  SmallWorldReport r;
  r.nodes = g.node_count();
  r.edges = g.edge_count();
  r.clustering = clustering_coefficient(g);
  r.path_length = characteristic_path_length(g);
  r.baseline = random_baseline(r.nodes, r.edges, seeds, rng_seed);
  return r;
}

std::map<std::size_t, std::size_t> degree_histogram(const CoauthorGraph& g) {
  std::map<std::size_t, std::size_t> hist;
  for (NodeId v = 0; v < g.node_count(); ++v) ++hist[g.degree(v)];
  return hist;
}

}  // namespace coauthor
