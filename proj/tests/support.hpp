#pragma once
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "coauthor/corpus.hpp"
#include "coauthor/netmodel.hpp"
#include "oracles.hpp"

namespace test {

inline coauthor::Corpus parse(const std::string& jsonl) {
  std::istringstream in(jsonl);
  return coauthor::parse_publications(in);
}

inline const char* const kTwoArticles =
    R"({"id": "article-1", "year": 2001, "venue": "JCDL", "authors": ["v1", "v2", "v3"]})"
    "\n"
    R"({"id": "article-2", "year": 2002, "venue": "JCDL", "authors": ["v1", "v2"]})"
    "\n";

inline coauthor::CoauthorGraph to_graph(const oracle::Graph& g) {
  std::vector<std::pair<coauthor::NodeId, coauthor::NodeId>> edges;
  for (auto [u, v] : g.edges)
    edges.emplace_back(static_cast<coauthor::NodeId>(u), static_cast<coauthor::NodeId>(v));
  return coauthor::CoauthorGraph::from_edges(static_cast<std::size_t>(g.n), std::move(edges));
}

inline oracle::Graph cycle(int n) {
  oracle::Graph g{n, {}};
  for (int i = 0; i < n; ++i) g.edges.emplace_back(i, (i + 1) % n);
  return g;
}

inline oracle::Graph path(int n) {
  oracle::Graph g{n, {}};
  for (int i = 0; i + 1 < n; ++i) g.edges.emplace_back(i, i + 1);
  return g;
}

// Arc weights 1/outdeg on the doubled undirected graph.
inline coauthor::WeightedDigraph uniform_weights(const coauthor::CoauthorGraph& g) {
  std::vector<coauthor::WeightedArc> arcs;
  for (coauthor::NodeId u = 0; u < g.node_count(); ++u)
    for (auto v : g.neighbors(u))
      arcs.push_back({u, v, 1.0 / static_cast<double>(g.degree(u))});
  return coauthor::WeightedDigraph::from_arcs(g.node_count(), std::move(arcs));
}

}  // namespace test
