#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace relflow::eval {

enum class Question { visit, similar, relevant };

Question parse_question(std::string_view name);
std::string_view question_name(Question q);

struct YesCount {
  int yes = 0;
  int total = 1;
};

/// Survey answers for one target page and one question, aggregated per result.
struct JudgmentSet {
  std::string target;
  Question question = Question::relevant;
  std::map<std::string, YesCount, std::less<>> results;

  /// Adds a result; throws std::invalid_argument if the counts are out of
  /// range (total >= 1, 0 <= yes <= total) or the result is repeated.
  void add(std::string result, YesCount count);
};

/// One algorithm's ranked answers for one target; results[0] is rank 1.
struct RankedRun {
  std::string target;
  std::string algorithm;
  std::vector<std::string> results;
};

/// Fraction of respondents answering yes. Throws std::out_of_range if the
/// result was not judged.
double rel(const JudgmentSet& judgments, std::string_view result);

enum class MissingJudgment { score_zero, error };

struct PrecisionOptions {
  MissingJudgment missing = MissingJudgment::score_zero;
};

/// Mean rel over ranks 1..r. Unjudged results score 0 (counted in
/// `missing_count` when given) or throw, per options. Throws
/// std::out_of_range unless 1 <= r <= run length.
double precision_at_r(const RankedRun& run, const JudgmentSet& judgments, std::size_t r,
                      const PrecisionOptions& options = {}, std::size_t* missing_count = nullptr);

/// Judgment sets keyed by (target, question).
using JudgmentTable = std::map<std::pair<std::string, Question>, JudgmentSet>;

/// Unweighted mean of precision_at_r over the runs. Every run's target must
/// have judgments for `question`. Throws std::invalid_argument on no runs.
double macro_precision(const std::vector<RankedRun>& runs, const JudgmentTable& judgments, Question question,
                       std::size_t r, const PrecisionOptions& options = {}, std::size_t* missing_count = nullptr);

/// `target<TAB>result<TAB>question<TAB>yes<TAB>total`
JudgmentTable load_judgments(const std::filesystem::path& path);
/// `target<TAB>algorithm<TAB>rank<TAB>result`; ranks of one run must be 1..n.
std::vector<RankedRun> load_runs(const std::filesystem::path& path);

struct PrecisionRow {
  std::string algorithm;
  Question question;
  std::size_t r;
  double precision;
};

/// For each algorithm and each question judged for its targets, macro
/// precision at r = 1..r_max over the runs at least r long. Sorted by
/// algorithm, question, r.
std::vector<PrecisionRow> precision_table(const std::vector<RankedRun>& runs, const JudgmentTable& judgments,
                                          std::size_t r_max, const PrecisionOptions& options = {},
                                          std::size_t* missing_count = nullptr);

/// `algorithm<TAB>question<TAB>r<TAB>precision` lines, 6 significant digits.
std::string format_precision_table(const std::vector<PrecisionRow>& rows);

}  // namespace relflow::eval
