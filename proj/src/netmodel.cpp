#include "coauthor/netmodel.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "coauthor/error.hpp"
#include "coauthor/kernels.hpp"

namespace coauthor {
namespace {

void check_authors(std::size_t n, const std::vector<AuthorId>& authors) {
  if (!authors.empty() && authors.size() != n)
    throw DomainError("author back-map must have one entry per node");
}

void check_node(std::size_t n, NodeId v) {
  if (v >= n) throw DomainError("node " + std::to_string(v) + " out of range");
}

// Counting sort of (key, payload) pairs into compressed rows.
template <typename Payload, typename KeyFn, typename PayloadFn, typename Item>
void compress(std::size_t n, const std::vector<Item>& items, KeyFn key, PayloadFn payload,
              std::vector<std::size_t>& offsets, std::vector<Payload>& out) {
  offsets.assign(n + 1, 0);
  for (const auto& it : items) ++offsets[key(it) + 1];
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
  out.resize(items.size());
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  for (const auto& it : items) out[cursor[key(it)]++] = payload(it);
}

}  // namespace

CoauthorGraph CoauthorGraph::from_edges(std::size_t n,
                                        std::vector<std::pair<NodeId, NodeId>> edges,
                                        std::vector<AuthorId> authors) {
  check_authors(n, authors);
  std::vector<std::pair<NodeId, NodeId>> arcs;
  arcs.reserve(edges.size() * 2);
  for (auto [u, v] : edges) {
    check_node(n, u);
    check_node(n, v);
    if (u == v) throw DomainError("self-loop on node " + std::to_string(u));
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

  CoauthorGraph g;
  compress<NodeId>(
      n, arcs, [](const auto& a) { return a.first; }, [](const auto& a) { return a.second; },
      g.offsets_, g.adjacency_);
  g.authors_ = std::move(authors);
  return g;
}

bool CoauthorGraph::has_edge(NodeId u, NodeId v) const {
  if (u >= node_count() || v >= node_count()) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<NodeId, NodeId>> CoauthorGraph::edges() const {
  std::vector<std::pair<NodeId, NodeId>> out;
  out.reserve(edge_count());
  for (NodeId u = 0; u < node_count(); ++u)
    for (NodeId v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

BinaryDigraph BinaryDigraph::from_arcs(std::size_t n, std::vector<std::pair<NodeId, NodeId>> arcs,
                                       std::vector<AuthorId> authors) {
  check_authors(n, authors);
  for (auto [u, v] : arcs) {
    check_node(n, u);
    check_node(n, v);
    if (u == v) throw DomainError("self-loop on node " + std::to_string(u));
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

  BinaryDigraph g;
  compress<NodeId>(
      n, arcs, [](const auto& a) { return a.first; }, [](const auto& a) { return a.second; },
      g.out_offsets_, g.out_);
  // arcs are sorted by source, so each in-list comes out sorted too
  compress<NodeId>(
      n, arcs, [](const auto& a) { return a.second; }, [](const auto& a) { return a.first; },
      g.in_offsets_, g.in_);
  g.authors_ = std::move(authors);
  return g;
}

bool BinaryDigraph::has_arc(NodeId u, NodeId v) const {
  if (u >= node_count() || v >= node_count()) return false;
  auto nb = out_neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

bool BinaryDigraph::is_symmetric() const {
  for (NodeId u = 0; u < node_count(); ++u)
    for (NodeId v : out_neighbors(u))
      if (!has_arc(v, u)) return false;
  return true;
}

WeightedDigraph WeightedDigraph::from_arcs(std::size_t n, std::vector<WeightedArc> arcs,
                                           std::vector<AuthorId> authors) {
  check_authors(n, authors);
  for (const auto& a : arcs) {
    check_node(n, a.from);
    check_node(n, a.to);
    if (a.from == a.to) throw DomainError("self-loop on node " + std::to_string(a.from));
    if (!(a.weight > 0.0 && a.weight <= 1.0 + 1e-12))
      throw DomainError("arc weight outside (0, 1]");
  }
  std::sort(arcs.begin(), arcs.end(), [](const WeightedArc& a, const WeightedArc& b) {
    return a.from != b.from ? a.from < b.from : a.to < b.to;
  });
  for (std::size_t k = 1; k < arcs.size(); ++k)
    if (arcs[k].from == arcs[k - 1].from && arcs[k].to == arcs[k - 1].to)
      throw DomainError("duplicate arc");

  WeightedDigraph g;
  auto src = [](const WeightedArc& a) { return a.from; };
  auto dst = [](const WeightedArc& a) { return a.to; };
  auto wt = [](const WeightedArc& a) { return a.weight; };
  compress<NodeId>(n, arcs, src, dst, g.out_offsets_, g.out_);
  compress<double>(n, arcs, src, wt, g.out_offsets_, g.out_weight_);
  compress<NodeId>(n, arcs, dst, src, g.in_offsets_, g.in_);
  compress<double>(n, arcs, dst, wt, g.in_offsets_, g.in_weight_);
  g.out_sum_.resize(n);
  for (NodeId v = 0; v < n; ++v) g.out_sum_[v] = kernels::sum(g.out_weights(v));
  g.authors_ = std::move(authors);
  return g;
}

double WeightedDigraph::weight(NodeId u, NodeId v) const {
  if (u >= node_count() || v >= node_count()) return 0.0;
  auto nb = out_neighbors(u);
  auto it = std::lower_bound(nb.begin(), nb.end(), v);
  if (it == nb.end() || *it != v) return 0.0;
  return out_weight_[out_offsets_[u] + static_cast<std::size_t>(it - nb.begin())];
}

void CoweightAccumulator::add(AuthorId i, AuthorId j, double credit) {
  if (i == j) throw DomainError("co-authorship credit on the diagonal");
  if (i >= size() || j >= size()) throw DomainError("author id out of range");
  auto bump = [this, credit](AuthorId row, AuthorId col) {
    auto& cols = cols_[row];
    auto it = std::lower_bound(cols.begin(), cols.end(), col);
    auto pos = static_cast<std::size_t>(it - cols.begin());
    if (it == cols.end() || *it != col) {
      cols.insert(it, col);
      values_[row].insert(values_[row].begin() + static_cast<std::ptrdiff_t>(pos), credit);
    } else {
      values_[row][pos] += credit;
    }
  };
  bump(i, j);
  bump(j, i);
}

double CoweightAccumulator::value(AuthorId i, AuthorId j) const {
  if (i >= size() || j >= size()) return 0.0;
  const auto& cols = cols_[i];
  auto it = std::lower_bound(cols.begin(), cols.end(), j);
  if (it == cols.end() || *it != j) return 0.0;
  return values_[i][static_cast<std::size_t>(it - cols.begin())];
}

std::size_t CoweightAccumulator::pair_count() const {
  std::size_t total = 0;
  for (const auto& row : cols_) total += row.size();
  return total / 2;
}

CoauthorGraph build_undirected(const std::vector<Publication>& pubs, std::size_t n) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (const auto& pub : pubs) {
    const auto& a = pub.authors;
    for (std::size_t x = 0; x < a.size(); ++x)
      for (std::size_t y = x + 1; y < a.size(); ++y)
        edges.emplace_back(std::min(a[x], a[y]), std::max(a[x], a[y]));
  }
  return CoauthorGraph::from_edges(n, std::move(edges));
}

BinaryDigraph build_directed_binary(const CoauthorGraph& g) {
  std::vector<std::pair<NodeId, NodeId>> arcs;
  arcs.reserve(2 * g.edge_count());
  std::vector<AuthorId> authors(g.node_count());
  for (NodeId u = 0; u < g.node_count(); ++u) {
    authors[u] = g.author(u);
    for (NodeId v : g.neighbors(u)) arcs.emplace_back(u, v);
  }
  return BinaryDigraph::from_arcs(g.node_count(), std::move(arcs), std::move(authors));
}

double exclusivity(const Publication& pub, AuthorId i, AuthorId j) {
  const std::size_t f = pub.author_count();
  if (f < 2) throw DomainError("exclusivity is undefined for a single-author article");
  if (i == j) throw DomainError("exclusivity needs two distinct authors");
  auto on_byline = [&pub](AuthorId a) {
    return std::find(pub.authors.begin(), pub.authors.end(), a) != pub.authors.end();
  };
  if (!on_byline(i) || !on_byline(j))
    throw DomainError("exclusivity asked for an author not on article " + pub.id);
  return 1.0 / static_cast<double>(f - 1);
}

CoweightAccumulator cofrequency(const std::vector<Publication>& pubs, std::size_t n) {
  CoweightAccumulator c(n);
  for (const auto& pub : pubs) {
    const auto& a = pub.authors;
    if (a.size() < 2) continue;
    for (std::size_t x = 0; x < a.size(); ++x)
      for (std::size_t y = x + 1; y < a.size(); ++y) c.add(a[x], a[y], exclusivity(pub, a[x], a[y]));
  }
  return c;
}

WeightedDigraph normalize_weights(const CoweightAccumulator& c) {
  std::vector<WeightedArc> arcs;
  arcs.reserve(2 * c.pair_count());
  for (AuthorId i = 0; i < c.size(); ++i) {
    auto partners = c.partners(i);
    auto values = c.values(i);
    const double total = kernels::sum(values);
    if (!(total > 0.0)) continue;
    for (std::size_t k = 0; k < partners.size(); ++k)
      arcs.push_back({i, partners[k], values[k] / total});
  }
  return WeightedDigraph::from_arcs(c.size(), std::move(arcs));
}

WeightedDigraph build_weighted(const std::vector<Publication>& pubs, std::size_t n) {
  return normalize_weights(cofrequency(pubs, n));
}

}  // namespace coauthor
