#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "coauthor/corpus.hpp"

namespace coauthor {

/// One score per author for a named metric. Scores are stored in node
/// order of the graph they came from; `authors[k]` identifies node k.
struct RankVector {
  std::string metric;
  std::vector<AuthorId> authors;
  std::vector<double> scores;

  // Power-iteration diagnostics; left at defaults by non-iterative metrics.
  bool converged = true;
  std::size_t iterations = 0;
  std::vector<double> deltas;  // max absolute change per iteration

  std::size_t size() const noexcept { return scores.size(); }
};

struct RankedAuthor {
  AuthorId author;
  double score;
};

/// Descending score, ties by ascending canonical name.
std::vector<RankedAuthor> ranking(const RankVector& r, const AuthorTable& table);

/// Scores divided by their sum (unchanged if the sum is zero).
RankVector normalized(RankVector r);

}  // namespace coauthor
