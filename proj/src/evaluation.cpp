#include "coauthor/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "coauthor/error.hpp"
#include "coauthor/kernels.hpp"

namespace coauthor {

std::vector<double> average_ranks(std::span<const double> scores) {
  const std::size_t n = scores.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&scores](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });
  std::vector<double> ranks(n);
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j + 1 < n && scores[order[j + 1]] == scores[order[i]]) ++j;
    const double mean_rank = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = mean_rank;
    i = j + 1;
  }
  return ranks;
}

double pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw DomainError("correlation inputs differ in length");
  const std::size_t n = x.size();
  if (n < 2) throw DomainError("correlation needs at least 2 values");
  std::vector<double> cx(x.begin(), x.end());
  std::vector<double> cy(y.begin(), y.end());
  const double mx = kernels::sum(cx) / static_cast<double>(n);
  const double my = kernels::sum(cy) / static_cast<double>(n);
  for (double& v : cx) v -= mx;
  for (double& v : cy) v -= my;
  const double sxx = kernels::dot(cx, cx);
  const double syy = kernels::dot(cy, cy);
  if (sxx == 0.0 || syy == 0.0) throw DomainError("correlation of a constant input");
  return std::clamp(kernels::dot(cx, cy) / std::sqrt(sxx * syy), -1.0, 1.0);
}

double spearman(const RankVector& a, const RankVector& b) {
  std::unordered_map<AuthorId, double> b_score;
  b_score.reserve(b.size());
  for (std::size_t k = 0; k < b.size(); ++k) b_score.emplace(b.authors[k], b.scores[k]);

  std::vector<std::pair<AuthorId, std::pair<double, double>>> shared;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (auto it = b_score.find(a.authors[k]); it != b_score.end())
      shared.push_back({a.authors[k], {a.scores[k], it->second}});
  if (shared.size() < 2)
    throw DomainError("Spearman correlation needs at least 2 authors scored by both metrics");
  std::sort(shared.begin(), shared.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });

  std::vector<double> xs;
  std::vector<double> ys;
  xs.reserve(shared.size());
  ys.reserve(shared.size());
  for (const auto& [id, s] : shared) {
    xs.push_back(s.first);
    ys.push_back(s.second);
  }
  auto rx = average_ranks(xs);
  auto ry = average_ranks(ys);
  return pearson(rx, ry);
}

std::vector<std::string> read_roster(std::istream& in) {
  std::vector<std::string> names;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::string name = normalize_name(line);
    if (!name.empty()) names.push_back(std::move(name));
  }
  return names;
}

ValidationCurve committee_overlap(const RankVector& r, const std::vector<std::string>& roster,
                                  std::size_t top_k, const AuthorTable& table) {
  if (roster.empty()) throw DomainError("committee roster is empty");
  if (top_k == 0) throw DomainError("top-k must be at least 1");

  std::unordered_set<std::string> members;
  for (const auto& name : roster) members.insert(fold_name(name));

  ValidationCurve curve;
  curve.metric = r.metric;
  curve.matches.reserve(top_k);
  const auto ranked = ranking(r, table);
  std::size_t hits = 0;
  for (std::size_t k = 0; k < top_k; ++k) {
    if (k < ranked.size() && members.count(fold_name(table.name(ranked[k].author)))) ++hits;
    curve.matches.push_back(hits);
  }

  std::unordered_set<std::string> known;
  known.reserve(table.size());
  for (AuthorId a = 0; a < table.size(); ++a) known.insert(fold_name(table.name(a)));
  std::unordered_set<std::string> reported;
  for (const auto& name : roster) {
    std::string folded = fold_name(name);
    if (!known.count(folded) && reported.insert(folded).second)
      curve.unmatched_roster.push_back(name);
  }
  return curve;
}

double CountryGraph::cross_share() const {
  const std::uint64_t known = cross_pairs + same_pairs;
  return known == 0 ? 0.0 : static_cast<double>(cross_pairs) / static_cast<double>(known);
}

CountryGraph country_network(const std::vector<Publication>& pubs, const AuthorTable& table) {
  CountryGraph g;
  std::vector<char> seen(table.size(), 0);
  for (const auto& pub : pubs) {
    const auto& a = pub.authors;
    for (AuthorId id : a) {
      if (seen[id]) continue;
      seen[id] = 1;
      const auto& c = table.meta(id).country;
      ++g.authors_per_country[c ? *c : std::string(kUnknownCountry)];
    }
    for (std::size_t x = 0; x < a.size(); ++x) {
      for (std::size_t y = x + 1; y < a.size(); ++y) {
        const auto& cx = table.meta(a[x]).country;
        const auto& cy = table.meta(a[y]).country;
        if (!cx || !cy) {
          ++g.skipped_pairs;
        } else if (*cx == *cy) {
          ++g.same_pairs;
        } else {
          ++g.cross_pairs;
          ++g.edges[std::minmax(*cx, *cy)];
        }
      }
    }
  }
  return g;
}

}  // namespace coauthor
