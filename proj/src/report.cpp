#include "coauthor/report.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace coauthor::report {

std::string fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  std::string s(buf);
  if (s.find_first_not_of("-0.") == std::string::npos && s.front() == '-') s.erase(0, 1);
  return s;
}

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string dot_id(std::string_view text) {
  bool bare = !text.empty() && !std::isdigit(static_cast<unsigned char>(text.front()));
  for (char c : text) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) {
      bare = false;
      break;
    }
  }
  // keywords are case-insensitive in DOT
  std::string lower;
  for (char c : text) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "graph" || lower == "digraph" || lower == "node" || lower == "edge" ||
      lower == "subgraph" || lower == "strict")
    bare = false;
  if (bare) return std::string(text);

  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  out += '"';
  return out;
}

void write_ranking(std::ostream& out, const RankVector& r, const AuthorTable& table,
                   std::size_t top) {
  out << "rank,author,score\n";
  const auto ranked = ranking(r, table);
  const std::size_t rows = top == 0 ? ranked.size() : std::min(top, ranked.size());
  for (std::size_t k = 0; k < rows; ++k) {
    out << (k + 1) << ',' << csv_field(table.name(ranked[k].author)) << ','
        << fixed(ranked[k].score, 6) << '\n';
  }
}

void write_stats(std::ostream& out, const CorpusStats& s, const ParseReport& parse) {
  out << "# summary\nmetric,value\n";
  out << "publications," << s.total_publications << '\n';
  out << "authors," << s.total_authors << '\n';
  out << "mean_authors_per_paper," << fixed(s.mean_authors_per_paper, 4) << '\n';
  out << "median_authors_per_paper," << fixed(s.median_authors_per_paper, 1) << '\n';
  out << "rejected_records," << parse.rejected_records << '\n';
  out << "duplicate_author_entries," << parse.duplicate_authors << '\n';
  out << "empty_author_names," << parse.empty_names << '\n';

  out << "\n# per_year\n"
         "year,publications,authors,new_authors,international_authors,unknown_country_authors\n";
  for (const auto& [year, y] : s.per_year) {
    out << year << ',' << y.publications << ',' << y.authors << ',' << y.new_authors << ','
        << y.international_authors << ',' << y.unknown_country_authors << '\n';
  }

  out << "\n# authors_per_paper\nauthors,papers,percent\n";
  for (const auto& [f, count] : s.authors_per_paper) {
    const double pct = 100.0 * static_cast<double>(count) / static_cast<double>(s.total_publications);
    out << f << ',' << count << ',' << fixed(pct, 1) << '\n';
  }

  out << "\n# papers_per_author\npapers,authors\n";
  for (const auto& [papers, count] : s.papers_per_author) out << papers << ',' << count << '\n';

  out << "\n# authors_per_country\ncountry,authors\n";
  for (const auto& [country, count] : s.authors_per_country)
    out << csv_field(country) << ',' << count << '\n';
}

void write_components(std::ostream& out, const ComponentLabeling& labeling) {
  out << "rank,size\n";
  for (std::size_t k = 0; k < labeling.sizes.size(); ++k)
    out << (k + 1) << ',' << labeling.sizes[k] << '\n';
}

void write_degree_histogram(std::ostream& out, const CoauthorGraph& g) {
  out << "degree,count\n";
  for (const auto& [degree, count] : degree_histogram(g)) out << degree << ',' << count << '\n';
}

void write_small_world(std::ostream& out, const SmallWorldReport& r) {
  out << "metric,value,baseline_mean,seeds\n";
  out << "nodes," << r.nodes << ",," << '\n';
  out << "edges," << r.edges << ",," << '\n';
  out << "clustering_coefficient," << fixed(r.clustering, 6) << ','
      << fixed(r.baseline.mean_clustering, 6) << ',' << r.baseline.seeds << '\n';
  out << "characteristic_path_length," << fixed(r.path_length, 6) << ','
      << fixed(r.baseline.mean_path_length, 6) << ',' << r.baseline.seeds << '\n';
}

void write_country_edges(std::ostream& out, const CountryGraph& g) {
  out << "country_a,country_b,pairs\n";
  for (const auto& [key, count] : g.edges)
    out << csv_field(key.first) << ',' << csv_field(key.second) << ',' << count << '\n';
}

void write_country_summary(std::ostream& out, const CountryGraph& g) {
  out << "metric,value\n";
  out << "cross_country_pairs," << g.cross_pairs << '\n';
  out << "same_country_pairs," << g.same_pairs << '\n';
  out << "skipped_pairs," << g.skipped_pairs << '\n';
  out << "cross_country_share," << fixed(g.cross_share(), 6) << '\n';
  for (const auto& [country, count] : g.authors_per_country)
    out << "authors_" << csv_field(country) << ',' << count << '\n';
}

void write_merges(std::ostream& out, const Dendrogram& d) {
  out << "step,cluster_a,cluster_b,level,size\n";
  for (std::size_t k = 0; k < d.merges.size(); ++k) {
    const Merge& m = d.merges[k];
    out << (k + 1) << ',' << m.cluster_a << ',' << m.cluster_b << ',' << fixed(m.level, 6) << ','
        << m.size << '\n';
  }
}

void write_leaves(std::ostream& out, const Dendrogram& d, const AuthorTable& table) {
  out << "cluster,author\n";
  for (std::size_t k = 0; k < d.leaves.size(); ++k)
    out << k << ',' << csv_field(table.name(d.leaves[k])) << '\n';
}

void write_correlation_matrix(std::ostream& out, const NamedCorrelation& m) {
  out << "metric";
  for (const auto& name : m.metrics) out << ',' << csv_field(name);
  out << '\n';
  for (std::size_t i = 0; i < m.metrics.size(); ++i) {
    out << csv_field(m.metrics[i]);
    for (double v : m.values[i]) out << ',' << (std::isnan(v) ? std::string("NA") : fixed(v, 6));
    out << '\n';
  }
}

void write_overlap(std::ostream& out, const std::vector<ValidationCurve>& curves) {
  out << "k,matches,metric\n";
  for (const auto& c : curves)
    for (std::size_t k = 0; k < c.matches.size(); ++k)
      out << (k + 1) << ',' << c.matches[k] << ',' << csv_field(c.metric) << '\n';
}

void write_dot(std::ostream& out, const CoauthorGraph& g, const AuthorTable& table) {
  out << "graph coauthors {\n";
  for (NodeId v = 0; v < g.node_count(); ++v) out << "  " << dot_id(table.name(g.author(v))) << ";\n";
  for (auto [u, v] : g.edges())
    out << "  " << dot_id(table.name(g.author(u))) << " -- " << dot_id(table.name(g.author(v)))
        << ";\n";
  out << "}\n";
}

void write_dot(std::ostream& out, const BinaryDigraph& g, const AuthorTable& table) {
  out << "digraph coauthors {\n";
  for (NodeId v = 0; v < g.node_count(); ++v) out << "  " << dot_id(table.name(g.author(v))) << ";\n";
  for (NodeId u = 0; u < g.node_count(); ++u)
    for (NodeId v : g.out_neighbors(u))
      out << "  " << dot_id(table.name(g.author(u))) << " -> " << dot_id(table.name(g.author(v)))
          << ";\n";
  out << "}\n";
}

void write_dot(std::ostream& out, const WeightedDigraph& g, const AuthorTable& table,
               double min_weight) {
  out << "digraph coauthors {\n";
  for (NodeId v = 0; v < g.node_count(); ++v) out << "  " << dot_id(table.name(g.author(v))) << ";\n";
  for (NodeId u = 0; u < g.node_count(); ++u) {
    auto targets = g.out_neighbors(u);
    auto weights = g.out_weights(u);
    for (std::size_t k = 0; k < targets.size(); ++k) {
      if (weights[k] < min_weight) continue;
      out << "  " << dot_id(table.name(g.author(u))) << " -> "
          << dot_id(table.name(g.author(targets[k]))) << " [label=" << fixed(weights[k], 4)
          << "];\n";
    }
  }
  out << "}\n";
}

void write_dot(std::ostream& out, const CountryGraph& g) {
  out << "graph countries {\n";
  for (const auto& [country, count] : g.authors_per_country)
    out << "  " << dot_id(country) << " [authors=" << count << "];\n";
  for (const auto& [key, count] : g.edges)
    out << "  " << dot_id(key.first) << " -- " << dot_id(key.second) << " [weight=" << count
        << ", label=" << count << "];\n";
  out << "}\n";
}

void write_dot(std::ostream& out, const Dendrogram& d, const AuthorTable& table) {
  out << "digraph dendrogram {\n";
  for (std::size_t k = 0; k < d.leaves.size(); ++k)
    out << "  c" << k << " [shape=box, label=" << dot_id(table.name(d.leaves[k])) << "];\n";
  for (const Merge& m : d.merges) {
    out << "  c" << m.cluster << " [label=\"" << fixed(m.level, 4) << "\"];\n";
    out << "  c" << m.cluster << " -> c" << m.cluster_a << ";\n";
    out << "  c" << m.cluster << " -> c" << m.cluster_b << ";\n";
  }
  out << "}\n";
}

}  // namespace coauthor::report
