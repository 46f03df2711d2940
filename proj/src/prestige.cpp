#include "coauthor/prestige.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "coauthor/error.hpp"
#include "coauthor/kernels.hpp"

namespace coauthor {

void RankConfig::validate() const {
  if (!(damping > 0.0 && damping < 1.0)) throw DomainError("damping must lie in (0, 1)");
  if (!(tolerance > 0.0)) throw DomainError("tolerance must be positive");
  if (max_iterations < 1) throw DomainError("max iterations must be at least 1");
}

namespace {

// Transfer coefficients grouped by receiving node.
struct InflowMatrix {
  std::vector<std::size_t> offsets;
  std::vector<NodeId> sources;
  std::vector<double> coefficients;
};

RankVector iterate(const char* metric, const InflowMatrix& m, std::vector<AuthorId> authors,
                   const RankConfig& cfg) {
  cfg.validate();
  const std::size_t n = authors.size();
  RankVector r;
  r.metric = metric;
  r.authors = std::move(authors);
  r.converged = false;

  std::vector<double> current(n, 1.0);
  std::vector<double> next(n, 0.0);
  for (std::size_t it = 1; it <= cfg.max_iterations; ++it) {
    kernels::gather_rows(m.offsets, m.sources, m.coefficients, current, next);
    kernels::affine(next, 1.0 - cfg.damping, cfg.damping);
    const double delta = kernels::max_abs_diff(next, current);
    current.swap(next);
    r.deltas.push_back(delta);
    r.iterations = it;
    if (delta < cfg.tolerance) {
      r.converged = true;
      break;
    }
  }
  r.scores = std::move(current);
  return r;
}

}  // namespace

RankVector pagerank(const BinaryDigraph& g, const RankConfig& cfg) {
  const std::size_t n = g.node_count();
  InflowMatrix m;
  m.offsets.reserve(n + 1);
  m.offsets.push_back(0);
  m.sources.reserve(g.arc_count());
  m.coefficients.reserve(g.arc_count());
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j : g.in_neighbors(i)) {
      m.sources.push_back(j);
      m.coefficients.push_back(1.0 / static_cast<double>(g.out_degree(j)));
    }
    m.offsets.push_back(m.sources.size());
  }
  std::vector<AuthorId> authors(n);
  for (NodeId v = 0; v < n; ++v) authors[v] = g.author(v);
  return iterate("pagerank", m, std::move(authors), cfg);
}

RankVector authorrank(const WeightedDigraph& g, const RankConfig& cfg) {
  const std::size_t n = g.node_count();
  for (NodeId v = 0; v < n; ++v) {
    if (g.out_degree(v) > 0 && std::abs(g.out_weight_sum(v) - 1.0) > 1e-9)
      throw DomainError("out-weights of node " + std::to_string(v) + " do not sum to 1");
  }
  InflowMatrix m;
  auto offsets = g.in_offsets();
  auto sources = g.in_sources();
  auto weights = g.in_weights();
  m.offsets.assign(offsets.begin(), offsets.end());
  m.sources.assign(sources.begin(), sources.end());
  m.coefficients.assign(weights.begin(), weights.end());
  std::vector<AuthorId> authors(n);
  for (NodeId v = 0; v < n; ++v) authors[v] = g.author(v);
  return iterate("authorrank", m, std::move(authors), cfg);
}

bool deltas_monotone_after(const RankVector& r, std::size_t warmup) {
  // deltas[k] belongs to iteration k + 1
  for (std::size_t k = std::max<std::size_t>(warmup, 1); k < r.deltas.size(); ++k)
    if (r.deltas[k] > r.deltas[k - 1]) return false;
  return true;
}

}  // namespace coauthor
