#pragma once

// CSV and Graphviz DOT writers. All output is deterministic: rows and
// nodes come out in ascending id order unless a ranking order applies.

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "coauthor/clustering.hpp"
#include "coauthor/corpus.hpp"
#include "coauthor/evaluation.hpp"
#include "coauthor/netmodel.hpp"
#include "coauthor/rank.hpp"
#include "coauthor/topology.hpp"

namespace coauthor::report {

std::string fixed(double value, int decimals);
std::string csv_field(std::string_view text);
/// Bare identifier when safe, otherwise a quoted and escaped DOT string.
std::string dot_id(std::string_view text);

// rank,author,score ; top == 0 writes every author
void write_ranking(std::ostream& out, const RankVector& r, const AuthorTable& table,
                   std::size_t top = 0);

// Blocks: summary, per_year, authors_per_paper, papers_per_author,
// authors_per_country. Each block starts with a "# name" line and a header.
void write_stats(std::ostream& out, const CorpusStats& stats, const ParseReport& parse);

void write_components(std::ostream& out, const ComponentLabeling& labeling);  // rank,size
void write_degree_histogram(std::ostream& out, const CoauthorGraph& g);       // degree,count
void write_small_world(std::ostream& out, const SmallWorldReport& r);  // metric,value,baseline_mean,seeds
void write_country_edges(std::ostream& out, const CountryGraph& g);    // country_a,country_b,pairs
void write_country_summary(std::ostream& out, const CountryGraph& g);  // metric,value

void write_merges(std::ostream& out, const Dendrogram& d);  // step,cluster_a,cluster_b,level,size
void write_leaves(std::ostream& out, const Dendrogram& d, const AuthorTable& table);  // cluster,author

struct NamedCorrelation {
  std::vector<std::string> metrics;
  std::vector<std::vector<double>> values;  // NaN where undefined
};
void write_correlation_matrix(std::ostream& out, const NamedCorrelation& m);
void write_overlap(std::ostream& out, const std::vector<ValidationCurve>& curves);  // k,matches,metric

void write_dot(std::ostream& out, const CoauthorGraph& g, const AuthorTable& table);
void write_dot(std::ostream& out, const BinaryDigraph& g, const AuthorTable& table);
/// Arcs lighter than min_weight are left out; nodes are always listed.
void write_dot(std::ostream& out, const WeightedDigraph& g, const AuthorTable& table,
               double min_weight = 0.0);
void write_dot(std::ostream& out, const CountryGraph& g);
void write_dot(std::ostream& out, const Dendrogram& d, const AuthorTable& table);

}  // namespace coauthor::report
