#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "relflow/relscore.hpp"

namespace relflow::cli {

struct Config {
  int depth = 3;
  int top_k = 5;
  double tolerance = 1e-9;
  int max_iterations = 1000;
  std::size_t inlink_cap = 1000;
  int sibling_window = 5;
  bool drop_intra_host = false;
  bool paper_scale = false;
  int jobs = 1;

  /// Throws std::invalid_argument on a non-positive bound.
  void validate() const;
  BuildOptions build_options() const;
  ScoreOptions score_options() const;
};

/// Cache directory layout written by cmd_build.
inline constexpr const char* kPagesFile = "pages.tsv";
inline constexpr const char* kKeywordsFile = "keywords.tsv";
inline constexpr const char* kManifestFile = "manifest.tsv";

/// Loads the web graph, builds every keyword network and writes the cache:
/// pages.tsv, keywords.tsv, manifest.tsv (`keyword<TAB>file`) and one
/// subnetwork file per keyword. Nothing is written unless every build succeeds.
void cmd_build(const std::filesystem::path& node_file, const std::filesystem::path& edge_file,
               const std::optional<std::filesystem::path>& keyword_file, const std::filesystem::path& out_dir,
               const Config& config, std::ostream& log);

RelationModel load_model(const std::filesystem::path& cache_dir);

void cmd_score(const std::filesystem::path& cache_dir, const std::string& u_url, const std::string& v_url,
               const Config& config, std::ostream& out);

/// `rank<TAB>url<TAB>score` lines.
void cmd_rank(const std::filesystem::path& cache_dir, const std::string& target_url, Relation relation, std::size_t n,
              const Config& config, std::ostream& out);

struct BaselineParams {
  double decay = 1.0;          // SimRank; PageSim uses its own default unless set
  int iterations = 20;
  double damping = 0.85;
  double pagesim_decay = 0.8;
  int radius = 3;
};

/// algorithm: "simrank" or "pagesim".
void cmd_baseline(const std::filesystem::path& node_file, const std::filesystem::path& edge_file,
                  const std::string& algorithm, const BaselineParams& params, std::ostream& out);

void cmd_eval(const std::filesystem::path& runs_file, const std::filesystem::path& judgments_file, std::size_t r_max,
              bool strict, std::ostream& out, std::ostream& log);

}  // namespace relflow::cli
