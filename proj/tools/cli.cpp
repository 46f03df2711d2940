#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>

#include "coauthor/centrality.hpp"
#include "coauthor/clustering.hpp"
#include "coauthor/corpus.hpp"
#include "coauthor/error.hpp"
#include "coauthor/evaluation.hpp"
#include "coauthor/netmodel.hpp"
#include "coauthor/parallel.hpp"
#include "coauthor/prestige.hpp"
#include "coauthor/report.hpp"
#include "coauthor/topology.hpp"

namespace coauthor::cli {
namespace {

namespace fs = std::filesystem;

const std::vector<std::string> kAllMetrics = {"degree", "closeness", "betweenness", "pagerank",
                                              "authorrank"};

struct RunConfig {
  std::string input;
  std::string affiliations;
  std::string roster;
  std::string out = ".";
  std::vector<std::string> metrics;
  RankConfig rank;
  std::size_t top = 0;
  std::uint64_t seed = 1;
  std::size_t baseline_seeds = kDefaultBaselineSeeds;
  double min_weight = 0.0;
  bool normalize = false;
  bool overlap = false;
  std::optional<double> cut;
  unsigned threads = 0;
};

std::ifstream open_input(const std::string& path, const char* what) {
  if (!fs::exists(path)) throw InputError(std::string(what) + " not found: " + path);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(std::string("cannot read ") + what + ": " + path);
  return in;
}

// Loaded corpus plus the graphs derived from it, built on first use.
class Workspace {
 public:
  Workspace(const RunConfig& cfg, std::ostream& log) : cfg_(cfg), log_(log) {
    std::ifstream in = open_input(cfg.input, "bibliography");
    try {
      corpus_ = parse_publications(in);
    } catch (const ParseError& e) {
      throw InputError(cfg.input + ": " + e.what());
    }
    if (!cfg.affiliations.empty()) {
      std::ifstream aff = open_input(cfg.affiliations, "affiliation file");
      AffiliationReport report;
      try {
        report = load_affiliations(aff, corpus_.authors);
      } catch (const ParseError& e) {
        throw InputError(cfg.affiliations + ": " + e.what());
      }
      if (report.unknown_authors > 0)
        log_ << "note: " << report.unknown_authors
             << " affiliation record(s) name authors absent from the bibliography\n";
    }
    const auto& r = corpus_.report;
    if (r.rejected_records > 0)
      log_ << "note: rejected " << r.rejected_records << " record(s) without authors\n";
    if (r.duplicate_authors > 0)
      log_ << "note: dropped " << r.duplicate_authors << " repeated author name(s) within bylines\n";
  }

  const Corpus& corpus() const { return corpus_; }
  const AuthorTable& authors() const { return corpus_.authors; }
  std::size_t author_count() const { return corpus_.authors.size(); }

  const CoauthorGraph& undirected() {
    if (!undirected_) undirected_ = build_undirected(corpus_.publications, author_count());
    return *undirected_;
  }
  const BinaryDigraph& directed() {
    if (!directed_) directed_ = build_directed_binary(undirected());
    return *directed_;
  }
  const WeightedDigraph& weighted() {
    if (!weighted_) weighted_ = build_weighted(corpus_.publications, author_count());
    return *weighted_;
  }
  const ComponentLabeling& labeling() {
    if (!labeling_) labeling_ = components(undirected());
    return *labeling_;
  }
  const CoauthorGraph& largest_component() {
    if (!largest_) {
      const auto& labels = labeling();
      largest_ = labels.count() == 0 ? CoauthorGraph{}
                                     : extract_component(undirected(), labels, 0);
      log_ << "largest component: " << largest_->node_count() << " authors, "
           << largest_->edge_count() << " links\n";
    }
    return *largest_;
  }

  RankVector metric(const std::string& name) {
    if (auto it = cache_.find(name); it != cache_.end()) return it->second;
    RankVector r = compute(name);
    cache_.emplace(name, r);
    return r;
  }

 private:
  RankVector compute(const std::string& name) {
    if (name == "degree") return degree_centrality(undirected());
    if (name == "betweenness") return betweenness_centrality(undirected());
    if (name == "closeness") {
      if (labeling().count() <= 1) return closeness_centrality(undirected());
      log_ << "notice: closeness needs a connected graph; the network has " << labeling().count()
           << " components, restricting to the largest\n";
      return closeness_centrality(largest_component());
    }
    if (name == "pagerank" || name == "authorrank") {
      RankVector r = name == "pagerank" ? pagerank(directed(), cfg_.rank)
                                        : authorrank(weighted(), cfg_.rank);
      if (!r.converged)
        log_ << "warning: " << name << " did not converge within " << r.iterations
             << " iterations (last change " << r.deltas.back() << ")\n";
      else if (!deltas_monotone_after(r))
        log_ << "notice: " << name << " per-iteration change rose after the warm-up iterations"
             << " (diagnostic only; converged in " << r.iterations << ")\n";
      if (cfg_.normalize) r = normalized(std::move(r));
      return r;
    }
    throw InputError("unknown metric: " + name);
  }

  const RunConfig& cfg_;
  std::ostream& log_;
  Corpus corpus_;
  std::optional<CoauthorGraph> undirected_;
  std::optional<BinaryDigraph> directed_;
  std::optional<WeightedDigraph> weighted_;
  std::optional<ComponentLabeling> labeling_;
  std::optional<CoauthorGraph> largest_;
  std::map<std::string, RankVector> cache_;
};

class OutputDir {
 public:
  explicit OutputDir(const std::string& path) : root_(path) {
    std::error_code ec;
    fs::create_directories(root_, ec);
    if (ec || !fs::is_directory(root_))
      throw InputError("cannot create output directory: " + path);
  }

  template <typename Writer>
  void write(const std::string& name, Writer&& writer) {
    std::ostringstream buffer;
    writer(buffer);
    const fs::path path = root_ / name;
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw InputError("cannot write " + path.string());
    file << buffer.str();
    if (!file) throw InputError("failed writing " + path.string());
  }

 private:
  fs::path root_;
};

void check_metrics(const std::vector<std::string>& metrics) {
  for (const auto& m : metrics)
    if (std::find(kAllMetrics.begin(), kAllMetrics.end(), m) == kAllMetrics.end())
      throw InputError("unknown metric: " + m + " (expected degree, closeness, betweenness, "
                       "pagerank or authorrank)");
}

int cmd_stats(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
  Workspace ws(cfg, log);
  const CorpusStats stats = corpus_stats(ws.corpus().publications, ws.authors());
  OutputDir dir(cfg.out);
  dir.write("stats.csv", [&](std::ostream& o) { report::write_stats(o, stats, ws.corpus().report); });
  out << "publications=" << stats.total_publications << " authors=" << stats.total_authors << '\n';
  return kOk;
}

int cmd_rank(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
  std::vector<std::string> metrics = cfg.metrics.empty() ? kAllMetrics : cfg.metrics;
  check_metrics(metrics);
  Workspace ws(cfg, log);
  OutputDir dir(cfg.out);
  for (const auto& name : metrics) {
    RankVector r = ws.metric(name);
    dir.write("rank_" + name + ".csv",
              [&](std::ostream& o) { report::write_ranking(o, r, ws.authors(), cfg.top); });
    out << "wrote rank_" << name << ".csv\n";
  }
  return kOk;
}

int cmd_analyze(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
  Workspace ws(cfg, log);
  OutputDir dir(cfg.out);
  dir.write("components.csv", [&](std::ostream& o) { report::write_components(o, ws.labeling()); });
  dir.write("degree_histogram.csv",
            [&](std::ostream& o) { report::write_degree_histogram(o, ws.undirected()); });

  const CoauthorGraph& giant = ws.largest_component();
  if (giant.node_count() >= 3) {
    const SmallWorldReport sw = small_world(giant, cfg.baseline_seeds, cfg.seed);
    dir.write("small_world.csv", [&](std::ostream& o) { report::write_small_world(o, sw); });
  } else {
    log << "notice: largest component has fewer than 3 authors; small-world report left empty\n";
    dir.write("small_world.csv", [](std::ostream& o) { o << "metric,value,baseline_mean,seeds\n"; });
  }

  const CountryGraph countries = country_network(ws.corpus().publications, ws.authors());
  dir.write("country_edges.csv", [&](std::ostream& o) { report::write_country_edges(o, countries); });
  dir.write("country_summary.csv",
            [&](std::ostream& o) { report::write_country_summary(o, countries); });
  out << "components=" << ws.labeling().count() << " largest=" << giant.node_count() << '\n';
  return kOk;
}

Dendrogram cluster_largest(Workspace& ws) {
  const CoauthorGraph& giant = ws.largest_component();
  return agglomerate(author_vectors(ws.weighted(), giant));
}

int cmd_cluster(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
  Workspace ws(cfg, log);
  const Dendrogram tree = cluster_largest(ws);
  OutputDir dir(cfg.out);
  dir.write("dendrogram.csv", [&](std::ostream& o) { report::write_merges(o, tree); });
  dir.write("dendrogram_leaves.csv",
            [&](std::ostream& o) { report::write_leaves(o, tree, ws.authors()); });
  dir.write("dendrogram.dot", [&](std::ostream& o) { report::write_dot(o, tree, ws.authors()); });
  if (cfg.cut) {
    const auto labels = tree.cut(*cfg.cut);
    dir.write("partition.csv", [&](std::ostream& o) {
      o << "author,cluster\n";
      for (std::size_t k = 0; k < labels.size(); ++k)
        o << report::csv_field(ws.authors().name(tree.leaves[k])) << ',' << labels[k] << '\n';
    });
  }
  out << "merges=" << tree.merges.size() << '\n';
  return kOk;
}

int cmd_validate(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
  std::vector<std::string> metrics =
      cfg.metrics.empty() ? std::vector<std::string>{"degree", "pagerank", "authorrank"}
                          : cfg.metrics;
  check_metrics(metrics);
  if (metrics.size() < 2) throw InputError("validate needs at least 2 metrics for Spearman");
  const bool overlap = cfg.overlap || !cfg.roster.empty();
  if (overlap && cfg.roster.empty()) throw InputError("overlap curves need --roster");

  std::vector<std::string> roster;
  if (overlap) {
    std::ifstream in = open_input(cfg.roster, "roster");
    roster = read_roster(in);
  }

  Workspace ws(cfg, log);
  std::vector<RankVector> ranks;
  for (const auto& name : metrics) ranks.push_back(ws.metric(name));

  report::NamedCorrelation matrix;
  matrix.metrics = metrics;
  matrix.values.assign(metrics.size(), std::vector<double>(metrics.size()));
  for (std::size_t i = 0; i < metrics.size(); ++i) {
    for (std::size_t j = 0; j < metrics.size(); ++j) {
      try {
        matrix.values[i][j] = spearman(ranks[i], ranks[j]);
      } catch (const DomainError& e) {
        if (i <= j) log << "notice: spearman(" << metrics[i] << ", " << metrics[j] << "): " << e.what() << '\n';
        matrix.values[i][j] = std::numeric_limits<double>::quiet_NaN();
      }
    }
  }
  OutputDir dir(cfg.out);
  dir.write("spearman.csv", [&](std::ostream& o) { report::write_correlation_matrix(o, matrix); });

  if (overlap) {
    const std::size_t k = cfg.top == 0 ? 50 : cfg.top;
    std::vector<ValidationCurve> curves;
    for (const auto& r : ranks) curves.push_back(committee_overlap(r, roster, k, ws.authors()));
    dir.write("overlap.csv", [&](std::ostream& o) { report::write_overlap(o, curves); });
    dir.write("unmatched_roster.csv", [&](std::ostream& o) {
      o << "name\n";
      for (const auto& name : curves.front().unmatched_roster) o << report::csv_field(name) << '\n';
    });
    if (!curves.front().unmatched_roster.empty())
      log << "note: " << curves.front().unmatched_roster.size()
          << " roster name(s) match no author in the bibliography\n";
  }
  out << "wrote spearman.csv" << (overlap ? " overlap.csv" : "") << '\n';
  return kOk;
}

int cmd_export(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
  Workspace ws(cfg, log);
  OutputDir dir(cfg.out);
  dir.write("author_graph.dot",
            [&](std::ostream& o) { report::write_dot(o, ws.undirected(), ws.authors()); });
  dir.write("directed_graph.dot",
            [&](std::ostream& o) { report::write_dot(o, ws.directed(), ws.authors()); });
  dir.write("weighted_graph.dot", [&](std::ostream& o) {
    report::write_dot(o, ws.weighted(), ws.authors(), cfg.min_weight);
  });
  const CountryGraph countries = country_network(ws.corpus().publications, ws.authors());
  dir.write("country_graph.dot", [&](std::ostream& o) { report::write_dot(o, countries); });

  Dendrogram tree;
  if (ws.largest_component().node_count() >= 2) tree = cluster_largest(ws);
  dir.write("dendrogram.dot", [&](std::ostream& o) { report::write_dot(o, tree, ws.authors()); });
  out << "wrote 5 DOT files\n";
  return kOk;
}

void add_common(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--input", cfg.input, "Bibliography, JSON lines")->required();
  cmd->add_option("--affiliations", cfg.affiliations, "Author affiliations, JSON lines");
  cmd->add_option("--out", cfg.out, "Output directory")->capture_default_str();
  cmd->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");
}

void add_rank_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--metrics", cfg.metrics,
                  "Comma-separated: degree,closeness,betweenness,pagerank,authorrank")
      ->delimiter(',');
  cmd->add_option("--damping", cfg.rank.damping, "Damping factor d")->capture_default_str();
  cmd->add_option("--tol", cfg.rank.tolerance, "Convergence tolerance")->capture_default_str();
  cmd->add_option("--max-iter", cfg.rank.max_iterations, "Iteration cap")->capture_default_str();
  cmd->add_option("--top", cfg.top, "Rows per ranking (rank) / curve length (validate)");
  cmd->add_flag("--normalize", cfg.normalize, "Divide PageRank/AuthorRank scores by their sum");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Co-authorship network analysis", "coauthor"};
  app.set_config("--config", "", "INI/TOML configuration file; command-line flags win");
  app.require_subcommand(1);

  auto* stats = app.add_subcommand("stats", "Corpus statistics");
  add_common(stats, cfg);

  auto* rank = app.add_subcommand("rank", "Author rankings per metric");
  add_common(rank, cfg);
  add_rank_options(rank, cfg);

  auto* analyze = app.add_subcommand("analyze", "Components, small-world report, degrees, countries");
  add_common(analyze, cfg);
  analyze->add_option("--seed", cfg.seed, "Random baseline seed")->capture_default_str();
  analyze->add_option("--baseline-seeds", cfg.baseline_seeds, "Random graphs to average")
      ->capture_default_str();

  auto* cluster = app.add_subcommand("cluster", "Hierarchical clustering of the largest component");
  add_common(cluster, cfg);
  cluster->add_option("--cut", cfg.cut, "Also write the partition at this similarity level");

  auto* validate = app.add_subcommand("validate", "Spearman matrix and committee overlap curves");
  add_common(validate, cfg);
  add_rank_options(validate, cfg);
  validate->add_option("--roster", cfg.roster, "Program committee names, one per line");
  validate->add_flag("--overlap", cfg.overlap, "Require committee overlap curves");

  auto* exporter = app.add_subcommand("export", "Graphviz DOT exports");
  add_common(exporter, cfg);
  exporter->add_option("--min-weight", cfg.min_weight, "Omit weighted arcs below this weight");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    set_thread_count(cfg.threads);
    if (stats->parsed()) return cmd_stats(cfg, out, err);
    if (rank->parsed()) return cmd_rank(cfg, out, err);
    if (analyze->parsed()) return cmd_analyze(cfg, out, err);
    if (cluster->parsed()) return cmd_cluster(cfg, out, err);
    if (validate->parsed()) return cmd_validate(cfg, out, err);
    if (exporter->parsed()) return cmd_export(cfg, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return kUsageError;
}

}  // namespace coauthor::cli
