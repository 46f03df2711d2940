#pragma once

// Comparing rankings with each other (Spearman), against a program
// committee roster, and the country-level collaboration network.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "coauthor/corpus.hpp"
#include "coauthor/rank.hpp"

namespace coauthor {

/// 1-based ranks in ascending score order; tied scores share their mean rank.
std::vector<double> average_ranks(std::span<const double> scores);

/// Throws DomainError for fewer than 2 values or a constant input.
double pearson(std::span<const double> x, std::span<const double> y);

/// Spearman correlation over the authors scored by both vectors.
/// Throws DomainError if fewer than 2 authors are shared or either side is
/// constant on the shared authors.
double spearman(const RankVector& a, const RankVector& b);

/// One name per line; '#' starts a comment; blank lines are skipped.
std::vector<std::string> read_roster(std::istream& in);

struct ValidationCurve {
  std::string metric;
  std::vector<std::size_t> matches;  // matches[k - 1] = rostered among the top k
  std::vector<std::string> unmatched_roster;  // roster names absent from the corpus
};

/// Names are compared after normalization and case folding.
/// Throws DomainError for an empty roster or top_k == 0.
ValidationCurve committee_overlap(const RankVector& r, const std::vector<std::string>& roster,
                                  std::size_t top_k, const AuthorTable& table);

struct CountryGraph {
  std::map<std::pair<std::string, std::string>, std::uint64_t> edges;  // first < second
  std::map<std::string, std::size_t> authors_per_country;  // includes "unknown"
  std::uint64_t cross_pairs = 0;
  std::uint64_t same_pairs = 0;
  std::uint64_t skipped_pairs = 0;  // at least one side without a country

  /// cross / (cross + same); 0 when no pair has two known countries.
  double cross_share() const;
};

/// Every co-author pair of every publication is tallied once.
CountryGraph country_network(const std::vector<Publication>& pubs, const AuthorTable& table);

}  // namespace coauthor
