#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "relflow/cli.hpp"

namespace {

void add_score_flags(CLI::App& cmd, relflow::cli::Config& config) {
  cmd.add_option("-d,--depth", config.depth, "BFS depth for witness search")->capture_default_str();
  cmd.add_option("-k,--topk", config.top_k, "number of shared keywords scored")->capture_default_str();
  cmd.add_flag("--paper-scale", config.paper_scale, "report flows x1000 instead of normalizing by maxwt");
  cmd.add_option("--jobs", config.jobs, "worker threads")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace relflow;
  CLI::App app{"relflow: flow-based relationship scores for Web pages"};
  app.require_subcommand(1);

  cli::Config config;
  const char* env_cache = std::getenv("RELFLOW_CACHE");
  std::string cache_dir = env_cache ? env_cache : "";

  std::string node_file, edge_file, keyword_file, out_dir;
  auto* build = app.add_subcommand("build", "build keyword subnetworks into a cache directory");
  build->add_option("--nodes", node_file, "node file (id<TAB>url)")->required();
  build->add_option("--edges", edge_file, "edge file (src dst)")->required();
  build->add_option("--keywords", keyword_file, "keyword file (keyword<TAB>page_id[<TAB>gamma])")->required();
  build->add_option("-o,--out", out_dir, "cache directory (default $RELFLOW_CACHE)");
  build->add_option("--inlink-cap", config.inlink_cap, "in-linkers taken per page")->capture_default_str();
  build->add_option("--sibling-window", config.sibling_window, "links kept each side of a core link")
      ->capture_default_str();
  build->add_flag("--drop-intra-host", config.drop_intra_host, "ignore links between pages on the same host");
  build->add_option("--tolerance", config.tolerance, "HITS convergence tolerance")->capture_default_str();
  build->add_option("--jobs", config.jobs, "worker threads")->capture_default_str();

  std::string u_url, v_url;
  auto* score = app.add_subcommand("score", "score one page pair");
  score->add_option("u", u_url, "first page url")->required();
  score->add_option("v", v_url, "second page url")->required();
  score->add_option("--cache", cache_dir, "cache directory (default $RELFLOW_CACHE)");
  add_score_flags(*score, config);

  std::string target_url, relation_name = "seek";
  std::size_t top_n = 10;
  auto* rank = app.add_subcommand("rank", "rank pages related to a target");
  rank->add_option("target", target_url, "target page url")->required();
  rank->add_option("-r,--relation", relation_name, "seek, fact, surf-forward or surf-backward")->capture_default_str();
  rank->add_option("-n,--count", top_n, "results to return")->capture_default_str();
  rank->add_option("--cache", cache_dir, "cache directory (default $RELFLOW_CACHE)");
  add_score_flags(*rank, config);

  std::string algorithm = "simrank";
  cli::BaselineParams baseline_params;
  auto* baseline = app.add_subcommand("baseline", "SimRank or PageSim similarity matrix");
  baseline->add_option("--nodes", node_file, "node file")->required();
  baseline->add_option("--edges", edge_file, "edge file")->required();
  baseline->add_option("-a,--algorithm", algorithm, "simrank or pagesim")->capture_default_str();
  baseline->add_option("--decay", baseline_params.decay, "SimRank decay")->capture_default_str();
  baseline->add_option("--iterations", baseline_params.iterations, "SimRank iterations")->capture_default_str();
  baseline->add_option("--damping", baseline_params.damping, "PageRank damping (PageSim)")->capture_default_str();
  baseline->add_option("--pagesim-decay", baseline_params.pagesim_decay, "per-hop decay (PageSim)")
      ->capture_default_str();
  baseline->add_option("--radius", baseline_params.radius, "propagation radius (PageSim)")->capture_default_str();

  std::string runs_file, judgments_file;
  std::size_t r_max = 10;
  bool strict = false;
  auto* evaluate = app.add_subcommand("eval", "precision-at-r table from runs and judgments");
  evaluate->add_option("--runs", runs_file, "runs file (target<TAB>algorithm<TAB>rank<TAB>result)")->required();
  evaluate->add_option("--judgments", judgments_file, "judgments file (target<TAB>result<TAB>question<TAB>yes<TAB>total)")
      ->required();
  evaluate->add_option("--r-max", r_max, "largest r reported")->capture_default_str();
  evaluate->add_flag("--strict", strict, "fail on unjudged results instead of scoring them 0");

  CLI11_PARSE(app, argc, argv);

  try {
    auto need_cache = [&](const std::string& dir) {
      if (dir.empty()) throw std::invalid_argument("no cache directory: pass one or set RELFLOW_CACHE");
      return dir;
    };
    if (build->parsed()) {
      cli::cmd_build(node_file, edge_file, std::optional<std::filesystem::path>(keyword_file),
                     need_cache(out_dir.empty() ? cache_dir : out_dir), config, std::cerr);
    } else if (score->parsed()) {
      cli::cmd_score(need_cache(cache_dir), u_url, v_url, config, std::cout);
    } else if (rank->parsed()) {
      cli::cmd_rank(need_cache(cache_dir), target_url, parse_relation(relation_name), top_n, config, std::cout);
    } else if (baseline->parsed()) {
      cli::cmd_baseline(node_file, edge_file, algorithm, baseline_params, std::cout);
    } else if (evaluate->parsed()) {
      cli::cmd_eval(runs_file, judgments_file, r_max, strict, std::cout, std::cerr);
    }
  } catch (const std::exception& e) {
    std::cerr << "relflow: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
