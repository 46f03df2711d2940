#include "coauthor/rank.hpp"

#include <algorithm>

#include "coauthor/kernels.hpp"

namespace coauthor {

std::vector<RankedAuthor> ranking(const RankVector& r, const AuthorTable& table) {
  std::vector<RankedAuthor> out;
  out.reserve(r.size());
  for (std::size_t k = 0; k < r.size(); ++k) out.push_back({r.authors[k], r.scores[k]});
  std::sort(out.begin(), out.end(), [&table](const RankedAuthor& a, const RankedAuthor& b) {
    if (a.score != b.score) return a.score > b.score;
    return table.name(a.author) < table.name(b.author);
  });
  return out;
}

RankVector normalized(RankVector r) {
  const double total = kernels::sum(r.scores);
  if (total != 0.0) kernels::scale(r.scores, 1.0 / total);
  return r;
}

}  // namespace coauthor
