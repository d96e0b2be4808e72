#include "relflow/cli.hpp"

#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "relflow/baselines.hpp"
#include "relflow/eval.hpp"
#include "relflow/text_io.hpp"

namespace relflow::cli {

namespace fs = std::filesystem;

void Config::validate() const {
  if (depth < 1) throw std::invalid_argument("--depth must be at least 1");
  if (top_k < 1) throw std::invalid_argument("--topk must be at least 1");
  if (!(tolerance > 0.0)) throw std::invalid_argument("--tolerance must be positive");
  if (max_iterations < 1) throw std::invalid_argument("HITS iteration cap must be at least 1");
  if (inlink_cap < 1) throw std::invalid_argument("--inlink-cap must be at least 1");
  if (sibling_window < 0) throw std::invalid_argument("--sibling-window must be non-negative");
  if (jobs < 1) throw std::invalid_argument("--jobs must be at least 1");
}

BuildOptions Config::build_options() const {
  BuildOptions options;
  options.inlink_cap = inlink_cap;
  options.sibling_window = sibling_window;
  options.hits.tolerance = tolerance;
  options.hits.max_iterations = max_iterations;
  return options;
}

ScoreOptions Config::score_options() const { return ScoreOptions{depth, top_k, paper_scale}; }

namespace {

std::string net_file_name(std::size_t index) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "net_%05zu.tsv", index);
  return buf;
}

}  // namespace

void cmd_build(const fs::path& node_file, const fs::path& edge_file, const std::optional<fs::path>& keyword_file,
               const fs::path& out_dir, const Config& config, std::ostream& log) {
  config.validate();
  if (!keyword_file) throw std::invalid_argument("build needs a keyword file");
  LoadResult loaded = load_edge_list(node_file, edge_file, keyword_file, LoadOptions{config.drop_intra_host});
  const LoadReport& report = loaded.report;
  if (report.warning_count() > 0) {
    log << "warning: dropped " << report.self_loops << " self-loop(s), " << report.duplicates
        << " duplicate edge(s), " << report.intra_host << " intra-host edge(s)\n";
  }
  RelationModel model = RelationModel::build(loaded.graph, config.build_options(), config.jobs);

  std::ostringstream manifest;
  std::vector<std::pair<std::string, std::string>> files;
  for (std::size_t i = 0; i < model.networks().size(); ++i) {
    const Subnetwork& net = model.networks()[i];
    std::string name = net_file_name(i);
    manifest << net.keyword << '\t' << name << '\n';
    files.emplace_back(name, serialize_subnetwork(net));
    if (net.degenerate()) log << "warning: keyword '" << net.keyword << "' yields a network without edges\n";
  }

  fs::create_directories(out_dir);
  for (const auto& [name, content] : files) text::write_atomic(out_dir / name, content);
  text::write_atomic(out_dir / kPagesFile, serialize_nodes(loaded.graph));
  text::write_atomic(out_dir / kKeywordsFile, serialize_keywords(loaded.graph));
  text::write_atomic(out_dir / kManifestFile, manifest.str());
  log << "built " << model.networks().size() << " subnetwork(s) over " << loaded.graph.page_count() << " pages\n";
}

RelationModel load_model(const fs::path& cache_dir) {
  const fs::path pages = cache_dir / kPagesFile;
  const fs::path keywords = cache_dir / kKeywordsFile;
  const fs::path manifest = cache_dir / kManifestFile;
  for (const fs::path& p : {pages, keywords, manifest}) {
    if (!fs::exists(p)) throw std::runtime_error("cache is incomplete: missing " + p.string());
  }
  std::vector<std::string> urls = load_nodes(pages);
  KeywordIndex index = load_keywords(keywords, urls.size());
  std::vector<Subnetwork> networks;
  const std::string source = manifest.string();
  text::for_each_record(manifest, [&](std::size_t line, std::string_view record) {
    auto f = text::split(record, '\t');
    if (f.size() != 2) throw ParseError(source, line, "expected 'keyword<TAB>file'");
    Subnetwork net = load_subnetwork(cache_dir / std::string(f[1]));
    if (net.keyword != f[0]) throw ParseError(source, line, "file holds keyword '" + net.keyword + "'");
    networks.push_back(std::move(net));
  });
  return RelationModel(std::move(urls), std::move(index), std::move(networks));
}

void cmd_score(const fs::path& cache_dir, const std::string& u_url, const std::string& v_url, const Config& config,
               std::ostream& out) {
  config.validate();
  RelationModel model = load_model(cache_dir);
  PageId u = model.page(u_url);
  PageId v = model.page(v_url);
  out << format_score_line(u_url, v_url, model.score(u, v, config.score_options())) << '\n';
}

void cmd_rank(const fs::path& cache_dir, const std::string& target_url, Relation relation, std::size_t n,
              const Config& config, std::ostream& out) {
  config.validate();
  RelationModel model = load_model(cache_dir);
  auto ranked = model.rank_related(model.page(target_url), relation, n, config.score_options(), config.jobs);
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    out << (i + 1) << '\t' << model.url(ranked[i].page) << '\t' << text::format_sig(ranked[i].score, 6) << '\n';
  }
}

void cmd_baseline(const fs::path& node_file, const fs::path& edge_file, const std::string& algorithm,
                  const BaselineParams& params, std::ostream& out) {
  LoadResult loaded = load_edge_list(node_file, edge_file, std::nullopt);
  const Digraph& g = loaded.graph.links();
  if (algorithm == "simrank") {
    out << dump_matrix(simrank(g, params.decay, params.iterations));
  } else if (algorithm == "pagesim") {
    PageSimOptions options;
    options.pagerank.damping = params.damping;
    options.decay = params.pagesim_decay;
    options.radius = params.radius;
    out << dump_matrix(pagesim(g, options));
  } else {
    throw std::invalid_argument("unknown baseline '" + algorithm + "' (expected simrank or pagesim)");
  }
}

void cmd_eval(const fs::path& runs_file, const fs::path& judgments_file, std::size_t r_max, bool strict,
              std::ostream& out, std::ostream& log) {
  if (r_max < 1) throw std::invalid_argument("--r-max must be at least 1");
  auto runs = eval::load_runs(runs_file);
  auto judgments = eval::load_judgments(judgments_file);
  eval::PrecisionOptions options;
  options.missing = strict ? eval::MissingJudgment::error : eval::MissingJudgment::score_zero;
  std::size_t missing = 0;
  auto rows = eval::precision_table(runs, judgments, r_max, options, &missing);
  if (missing > 0) log << "warning: " << missing << " ranked result(s) had no judgment and scored 0\n";
  out << eval::format_precision_table(rows);
}

}  // namespace relflow::cli
