#pragma once

// The three co-authorship network models: binary undirected, binary
// directed (each edge doubled into two arcs) and weighted directed, where
// the weight of arc i->j is i's share of its total co-authorship credit
// that it shares with j.

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "coauthor/corpus.hpp"

namespace coauthor {

using NodeId = std::uint32_t;

// Graphs are immutable compressed adjacency lists. Node v of a graph stands
// for author(v); graphs built straight from a corpus use the identity map,
// extracted subgraphs carry the back-map to the parent's authors.
class CoauthorGraph {
 public:
  CoauthorGraph() = default;

  /// Parallel edges are merged; a self-loop or out-of-range endpoint throws
  /// DomainError. `authors` is empty (identity) or has one entry per node.
  static CoauthorGraph from_edges(std::size_t n, std::vector<std::pair<NodeId, NodeId>> edges,
                                  std::vector<AuthorId> authors = {});

  std::size_t node_count() const noexcept { return offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return adjacency_.size() / 2; }
  std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }
  std::span<const NodeId> neighbors(NodeId v) const {
    return {adjacency_.data() + offsets_[v], degree(v)};
  }
  bool has_edge(NodeId u, NodeId v) const;

  /// (i, j) with i < j, ascending.
  std::vector<std::pair<NodeId, NodeId>> edges() const;

  AuthorId author(NodeId v) const { return authors_.empty() ? v : authors_[v]; }

 private:
  std::vector<std::size_t> offsets_{0};
  std::vector<NodeId> adjacency_;  // sorted within each node
  std::vector<AuthorId> authors_;
};

class BinaryDigraph {
 public:
  BinaryDigraph() = default;
  static BinaryDigraph from_arcs(std::size_t n, std::vector<std::pair<NodeId, NodeId>> arcs,
                                 std::vector<AuthorId> authors = {});

  std::size_t node_count() const noexcept { return out_offsets_.size() - 1; }
  std::size_t arc_count() const noexcept { return out_.size(); }
  std::size_t out_degree(NodeId v) const { return out_offsets_[v + 1] - out_offsets_[v]; }
  std::span<const NodeId> out_neighbors(NodeId v) const {
    return {out_.data() + out_offsets_[v], out_degree(v)};
  }
  std::span<const NodeId> in_neighbors(NodeId v) const {
    return {in_.data() + in_offsets_[v], in_offsets_[v + 1] - in_offsets_[v]};
  }
  bool has_arc(NodeId u, NodeId v) const;
  bool is_symmetric() const;

  AuthorId author(NodeId v) const { return authors_.empty() ? v : authors_[v]; }

 private:
  std::vector<std::size_t> out_offsets_{0};
  std::vector<NodeId> out_;
  std::vector<std::size_t> in_offsets_{0};
  std::vector<NodeId> in_;
  std::vector<AuthorId> authors_;
};

struct WeightedArc {
  NodeId from;
  NodeId to;
  double weight;
};

class WeightedDigraph {
 public:
  WeightedDigraph() = default;
  /// Arcs must be unique and carry weights in (0, 1]; DomainError otherwise.
  static WeightedDigraph from_arcs(std::size_t n, std::vector<WeightedArc> arcs,
                                   std::vector<AuthorId> authors = {});

  std::size_t node_count() const noexcept { return out_offsets_.size() - 1; }
  std::size_t arc_count() const noexcept { return out_.size(); }
  std::size_t out_degree(NodeId v) const { return out_offsets_[v + 1] - out_offsets_[v]; }
  std::span<const NodeId> out_neighbors(NodeId v) const {
    return {out_.data() + out_offsets_[v], out_degree(v)};
  }
  std::span<const double> out_weights(NodeId v) const {
    return {out_weight_.data() + out_offsets_[v], out_degree(v)};
  }
  double out_weight_sum(NodeId v) const { return out_sum_[v]; }
  /// 0 when there is no arc.
  double weight(NodeId u, NodeId v) const;

  // Incoming arcs in compressed form (sources and weights per target), the
  // layout the power iteration pulls from.
  std::span<const std::size_t> in_offsets() const { return in_offsets_; }
  std::span<const NodeId> in_sources() const { return in_; }
  std::span<const double> in_weights() const { return in_weight_; }

  AuthorId author(NodeId v) const { return authors_.empty() ? v : authors_[v]; }

 private:
  std::vector<std::size_t> out_offsets_{0};
  std::vector<NodeId> out_;
  std::vector<double> out_weight_;
  std::vector<double> out_sum_;
  std::vector<std::size_t> in_offsets_{0};
  std::vector<NodeId> in_;
  std::vector<double> in_weight_;
  std::vector<AuthorId> authors_;
};

/// Symmetric sparse matrix of co-authorship frequencies c_ij, zero diagonal.
class CoweightAccumulator {
 public:
  explicit CoweightAccumulator(std::size_t n = 0) : cols_(n), values_(n) {}

  /// c_ij += credit and c_ji += credit. Throws DomainError for i == j.
  void add(AuthorId i, AuthorId j, double credit);

  double value(AuthorId i, AuthorId j) const;
  std::size_t size() const noexcept { return cols_.size(); }
  /// Partners of i in ascending id order, with matching values.
  std::span<const AuthorId> partners(AuthorId i) const { return cols_[i]; }
  std::span<const double> values(AuthorId i) const { return values_[i]; }
  std::size_t pair_count() const;

 private:
  std::vector<std::vector<AuthorId>> cols_;
  std::vector<std::vector<double>> values_;
};

/// Edge between every pair sharing a byline; sole-author papers add none.
CoauthorGraph build_undirected(const std::vector<Publication>& pubs, std::size_t n);

BinaryDigraph build_directed_binary(const CoauthorGraph& g);

/// Pairwise credit 1/(f-1) for one article with f authors. Throws
/// DomainError if f < 2, i == j, or either author is not on the byline.
double exclusivity(const Publication& pub, AuthorId i, AuthorId j);

CoweightAccumulator cofrequency(const std::vector<Publication>& pubs, std::size_t n);

/// w_ij = c_ij / sum_k c_ik; authors without partners get no arcs.
WeightedDigraph normalize_weights(const CoweightAccumulator& c);

WeightedDigraph build_weighted(const std::vector<Publication>& pubs, std::size_t n);

}  // namespace coauthor
