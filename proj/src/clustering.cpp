#include "coauthor/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "coauthor/error.hpp"
#include "coauthor/kernels.hpp"
#include "coauthor/parallel.hpp"

namespace coauthor {
namespace {

constexpr double kInactive = -std::numeric_limits<double>::infinity();

double norm(const SparseVector& v) { return std::sqrt(kernels::dot(v.value, v.value)); }

double cosine(double dot, double norm_u, double norm_v) {
  if (norm_u == 0.0 || norm_v == 0.0) return 0.0;
  return std::clamp(dot / (norm_u * norm_v), 0.0, 1.0);
}

}  // namespace

AuthorVectorSpace author_vectors(const WeightedDigraph& g, std::span<const NodeId> members,
                                 double self_weight) {
  if (!(self_weight >= 0.0)) throw DomainError("self weight must be non-negative");
  std::vector<NodeId> nodes(members.begin(), members.end());
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  for (NodeId v : nodes)
    if (v >= g.node_count()) throw DomainError("component member outside the weighted graph");

  AuthorVectorSpace space;
  space.authors.reserve(nodes.size());
  for (NodeId v : nodes) space.authors.push_back(g.author(v));
  space.vectors.resize(nodes.size());
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    SparseVector& vec = space.vectors[k];
    vec.dimension = nodes.size();
    auto targets = g.out_neighbors(nodes[k]);
    auto weights = g.out_weights(nodes[k]);
    bool self_placed = self_weight == 0.0;
    auto place_self = [&] {
      vec.index.push_back(static_cast<std::uint32_t>(k));
      vec.value.push_back(self_weight);
      self_placed = true;
    };
    for (std::size_t e = 0; e < targets.size(); ++e) {
      auto it = std::lower_bound(nodes.begin(), nodes.end(), targets[e]);
      if (it == nodes.end() || *it != targets[e]) continue;
      const auto coord = static_cast<std::uint32_t>(it - nodes.begin());
      if (!self_placed && coord > k) place_self();
      vec.index.push_back(coord);
      vec.value.push_back(weights[e]);
    }
    if (!self_placed) place_self();
  }
  return space;
}

AuthorVectorSpace author_vectors(const WeightedDigraph& g, const CoauthorGraph& component,
                                 double self_weight) {
  std::vector<NodeId> members(component.node_count());
  for (NodeId v = 0; v < component.node_count(); ++v) members[v] = component.author(v);
  return author_vectors(g, members, self_weight);
}

double pair_similarity(const SparseVector& u, const SparseVector& v) {
  if (u.dimension != v.dimension) throw DomainError("vector dimensions differ");
  double dot = 0.0;
  std::size_t a = 0;
  std::size_t b = 0;
  while (a < u.index.size() && b < v.index.size()) {
    if (u.index[a] < v.index[b]) {
      ++a;
    } else if (v.index[b] < u.index[a]) {
      ++b;
    } else {
      dot += u.value[a++] * v.value[b++];
    }
  }
  return cosine(dot, norm(u), norm(v));
}

std::vector<double> similarity_matrix(const AuthorVectorSpace& space) {
  const std::size_t n = space.size();
  std::vector<double> norms(n);
  for (std::size_t k = 0; k < n; ++k) norms[k] = norm(space.vectors[k]);

  // Column lists: for every coordinate, the rows holding it.
  std::vector<std::vector<std::pair<std::uint32_t, double>>> columns(n);
  for (std::uint32_t row = 0; row < n; ++row) {
    const auto& vec = space.vectors[row];
    for (std::size_t e = 0; e < vec.index.size(); ++e)
      columns[vec.index[e]].emplace_back(row, vec.value[e]);
  }

  // Products for a fixed pair are summed in ascending coordinate order from
  // either side, so the matrix is exactly symmetric and matches
  // pair_similarity bit for bit.
  std::vector<double> sim(n * n, 0.0);
  parallel_blocks(n, [&](const Block& b) {
    std::vector<double> dots(n);
    for (std::size_t u = b.begin; u < b.end; ++u) {
      std::fill(dots.begin(), dots.end(), 0.0);
      const auto& vec = space.vectors[u];
      for (std::size_t e = 0; e < vec.index.size(); ++e)
        for (auto [other, value] : columns[vec.index[e]]) dots[other] += vec.value[e] * value;
      double* row = sim.data() + u * n;
      for (std::size_t v = 0; v < n; ++v) row[v] = cosine(dots[v], norms[u], norms[v]);
    }
  });
  return sim;
}

Dendrogram agglomerate(const AuthorVectorSpace& space) {
  const std::size_t n = space.size();
  if (n < 2) throw DomainError("clustering needs at least 2 authors");

  Dendrogram tree;
  tree.leaves = space.authors;
  tree.merges.reserve(n - 1);

  std::vector<double> sim = similarity_matrix(space);
  auto row = [&sim, n](std::size_t i) { return std::span<double>(sim.data() + i * n, n); };
  for (std::size_t i = 0; i < n; ++i) sim[i * n + i] = kInactive;

  std::vector<std::uint32_t> cluster_of(n);  // slot -> current cluster id
  std::iota(cluster_of.begin(), cluster_of.end(), 0u);
  std::vector<std::size_t> size(n, 1);
  std::vector<char> active(n, 1);
  std::vector<double> row_max(n);
  for (std::size_t i = 0; i < n; ++i) row_max[i] = kernels::max_value(row(i));

  for (std::size_t step = 0; step + 1 < n; ++step) {
    double best = kInactive;
    for (std::size_t i = 0; i < n; ++i)
      if (active[i]) best = std::max(best, row_max[i]);

    // Among all pairs at the best level pick the smallest (cluster id) pair.
    std::size_t slot_a = n;
    std::size_t slot_b = n;
    std::pair<std::uint32_t, std::uint32_t> best_ids{std::numeric_limits<std::uint32_t>::max(),
                                                     std::numeric_limits<std::uint32_t>::max()};
    for (std::size_t i = 0; i < n; ++i) {
      if (!active[i] || row_max[i] != best) continue;
      auto r = row(i);
      for (std::size_t j = i + 1; j < n; ++j) {
        if (r[j] != best) continue;
        const std::pair<std::uint32_t, std::uint32_t> ids = std::minmax(cluster_of[i], cluster_of[j]);
        if (ids < best_ids) {
          best_ids = ids;
          slot_a = i;
          slot_b = j;
        }
      }
    }

    const std::size_t merged = size[slot_a] + size[slot_b];
    const auto new_id = static_cast<std::uint32_t>(n + step);
    tree.merges.push_back({best_ids.first, best_ids.second, best, new_id, merged});

    // Average linkage update into slot_a; slot_b retires.
    const double wa = static_cast<double>(size[slot_a]) / static_cast<double>(merged);
    const double wb = static_cast<double>(size[slot_b]) / static_cast<double>(merged);
    kernels::axpby(wb, row(slot_b), wa, row(slot_a));
    active[slot_b] = 0;
    size[slot_a] = merged;
    cluster_of[slot_a] = new_id;
    auto ra = row(slot_a);
    ra[slot_a] = kInactive;
    ra[slot_b] = kInactive;
    std::fill(row(slot_b).begin(), row(slot_b).end(), kInactive);
    row_max[slot_a] = kernels::max_value(ra);

    for (std::size_t i = 0; i < n; ++i) {
      if (!active[i] || i == slot_a) continue;
      auto ri = row(i);
      const double lost_a = ri[slot_a];
      const double lost_b = ri[slot_b];
      ri[slot_a] = ra[i];
      ri[slot_b] = kInactive;
      if (ri[slot_a] >= row_max[i]) {
        row_max[i] = ri[slot_a];
      } else if (lost_a == row_max[i] || lost_b == row_max[i]) {
        row_max[i] = kernels::max_value(ri);
      }
    }
  }
  return tree;
}

std::vector<std::uint32_t> Dendrogram::cut(double threshold) const {
  const std::size_t n = leaves.size();
  std::vector<std::uint32_t> parent(n + merges.size());
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&parent](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Merge& m : merges) {
    if (m.level < threshold) continue;
    parent[find(m.cluster_a)] = m.cluster;
    parent[find(m.cluster_b)] = m.cluster;
  }
  std::vector<std::uint32_t> labels(n);
  std::vector<std::uint32_t> relabel(parent.size(), std::numeric_limits<std::uint32_t>::max());
  std::uint32_t next = 0;
  for (std::uint32_t leaf = 0; leaf < n; ++leaf) {
    std::uint32_t root = find(leaf);
    if (relabel[root] == std::numeric_limits<std::uint32_t>::max()) relabel[root] = next++;
    labels[leaf] = relabel[root];
  }
  return labels;
}

}  // namespace coauthor
