#pragma once

// Bottom-up average-linkage clustering of authors, each represented by its
// row of normalized co-authorship weights.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "coauthor/netmodel.hpp"

namespace coauthor {

struct SparseVector {
  std::size_t dimension = 0;
  std::vector<std::uint32_t> index;  // ascending
  std::vector<double> value;
};

struct AuthorVectorSpace {
  std::vector<AuthorId> authors;       // ascending; position = coordinate = leaf id
  std::vector<SparseVector> vectors;  // vectors[k] belongs to authors[k]

  std::size_t size() const noexcept { return authors.size(); }
};

// Each author also gets `self_weight` on their own coordinate. With 0 the
// vectors are the bare weight rows, and two authors who only wrote with
// each other have orthogonal vectors; a positive value lets direct
// collaborators share coordinates, so stronger ties mean higher similarity.
inline constexpr double kDefaultSelfWeight = 1.0;

/// Rows of w restricted to `members` (graph node ids). Entries are kept as
/// is, not renormalized. Throws DomainError for a member outside g or a
/// negative self weight.
AuthorVectorSpace author_vectors(const WeightedDigraph& g, std::span<const NodeId> members,
                                 double self_weight = kDefaultSelfWeight);

/// Members taken from a component subgraph's back-map.
AuthorVectorSpace author_vectors(const WeightedDigraph& g, const CoauthorGraph& component,
                                 double self_weight = kDefaultSelfWeight);

/// Cosine similarity in [0, 1]; 0 if either vector is zero.
/// Throws DomainError on a dimension mismatch.
double pair_similarity(const SparseVector& u, const SparseVector& v);

/// Dense row-major n x n cosine matrix; diagonal left at 1 for nonzero rows.
std::vector<double> similarity_matrix(const AuthorVectorSpace& space);

struct Merge {
  std::uint32_t cluster_a;  // cluster_a < cluster_b
  std::uint32_t cluster_b;
  double level;             // average pairwise similarity at the merge
  std::uint32_t cluster;    // id of the new cluster
  std::size_t size;
};

// Leaves are clusters 0..n-1 (positions in the vector space); merge k
// creates cluster n + k.
struct Dendrogram {
  std::vector<AuthorId> leaves;
  std::vector<Merge> merges;

  /// Flat partition keeping merges with level >= threshold. Labels are
  /// dense and numbered by first appearance in leaf order.
  std::vector<std::uint32_t> cut(double threshold) const;
};

/// Repeatedly joins the two clusters with the highest mean pairwise
/// similarity; ties go to the lexicographically smallest cluster-id pair.
/// Throws DomainError with fewer than 2 authors.
Dendrogram agglomerate(const AuthorVectorSpace& space);

}  // namespace coauthor
