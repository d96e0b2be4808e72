#include "relflow/eval.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "relflow/text_io.hpp"

namespace relflow::eval {

Question parse_question(std::string_view name) {
  if (name == "visit") return Question::visit;
  if (name == "similar") return Question::similar;
  if (name == "relevant") return Question::relevant;
  throw std::invalid_argument("unknown question '" + std::string(name) + "' (expected visit, similar or relevant)");
}

std::string_view question_name(Question q) {
  switch (q) {
    case Question::visit: return "visit";
    case Question::similar: return "similar";
    case Question::relevant: return "relevant";
  }
  return "?";
}

void JudgmentSet::add(std::string result, YesCount count) {
  if (count.total < 1) throw std::invalid_argument("a judgment needs at least one respondent");
  if (count.yes < 0 || count.yes > count.total) throw std::invalid_argument("yes count must lie in [0, total]");
  if (!results.emplace(std::move(result), count).second) throw std::invalid_argument("result judged twice");
}

double rel(const JudgmentSet& judgments, std::string_view result) {
  auto it = judgments.results.find(result);
  if (it == judgments.results.end()) {
    throw std::out_of_range("no judgment for " + std::string(result) + " under target " + judgments.target);
  }
  return static_cast<double>(it->second.yes) / static_cast<double>(it->second.total);
}

double precision_at_r(const RankedRun& run, const JudgmentSet& judgments, std::size_t r,
                      const PrecisionOptions& options, std::size_t* missing_count) {
  if (r < 1 || r > run.results.size()) {
    throw std::out_of_range("r = " + std::to_string(r) + " outside [1, " + std::to_string(run.results.size()) + "]");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < r; ++i) {
    const std::string& result = run.results[i];
    if (judgments.results.find(result) == judgments.results.end()) {
      if (options.missing == MissingJudgment::error) (void)rel(judgments, result);
      if (missing_count) ++*missing_count;
      continue;
    }
    sum += rel(judgments, result);
  }
  return sum / static_cast<double>(r);
}

double macro_precision(const std::vector<RankedRun>& runs, const JudgmentTable& judgments, Question question,
                       std::size_t r, const PrecisionOptions& options, std::size_t* missing_count) {
  if (runs.empty()) throw std::invalid_argument("macro precision over no runs");
  double sum = 0.0;
  for (const RankedRun& run : runs) {
    auto it = judgments.find({run.target, question});
    if (it == judgments.end()) {
      throw std::out_of_range("no '" + std::string(question_name(question)) + "' judgments for " + run.target);
    }
    sum += precision_at_r(run, it->second, r, options, missing_count);
  }
  return sum / static_cast<double>(runs.size());
}

JudgmentTable load_judgments(const std::filesystem::path& path) {
  const std::string source = path.string();
  JudgmentTable table;
  text::for_each_record(path, [&](std::size_t line, std::string_view record) {
    auto f = text::split(record, '\t');
    if (f.size() != 5) throw ParseError(source, line, "expected 'target<TAB>result<TAB>question<TAB>yes<TAB>total'");
    try {
      Question q = parse_question(f[2]);
      JudgmentSet& set = table[{std::string(f[0]), q}];
      set.target = std::string(f[0]);
      set.question = q;
      set.add(std::string(f[1]), YesCount{static_cast<int>(text::parse_int(f[3])), static_cast<int>(text::parse_int(f[4]))});
    } catch (const std::invalid_argument& e) {
      throw ParseError(source, line, e.what());
    }
  });
  return table;
}

std::vector<RankedRun> load_runs(const std::filesystem::path& path) {
  const std::string source = path.string();
  std::map<std::pair<std::string, std::string>, std::map<long long, std::pair<std::string, std::size_t>>> grouped;
  text::for_each_record(path, [&](std::size_t line, std::string_view record) {
    auto f = text::split(record, '\t');
    if (f.size() != 4) throw ParseError(source, line, "expected 'target<TAB>algorithm<TAB>rank<TAB>result'");
    long long rank = 0;
    try {
      rank = text::parse_int(f[2]);
    } catch (const std::invalid_argument& e) {
      throw ParseError(source, line, e.what());
    }
    if (rank < 1) throw ParseError(source, line, "ranks start at 1");
    auto& run = grouped[{std::string(f[0]), std::string(f[1])}];
    if (!run.emplace(rank, std::pair{std::string(f[3]), line}).second) {
      throw ParseError(source, line, "rank " + std::to_string(rank) + " repeated");
    }
  });
  if (grouped.empty()) throw ParseError(source, 0, "no runs");

  std::vector<RankedRun> runs;
  for (auto& [key, ranks] : grouped) {
    RankedRun run{key.first, key.second, {}};
    std::set<std::string> seen;
    long long expected = 1;
    for (auto& [rank, entry] : ranks) {
      if (rank != expected++) throw ParseError(source, entry.second, "ranks of a run must be 1..n without gaps");
      if (!seen.insert(entry.first).second) throw ParseError(source, entry.second, "result repeated within a run");
      run.results.push_back(std::move(entry.first));
    }
    runs.push_back(std::move(run));
  }
  return runs;
}

std::vector<PrecisionRow> precision_table(const std::vector<RankedRun>& runs, const JudgmentTable& judgments,
                                          std::size_t r_max, const PrecisionOptions& options,
                                          std::size_t* missing_count) {
  if (runs.empty()) throw std::invalid_argument("no runs to evaluate");
  std::map<std::string, std::vector<const RankedRun*>> by_algorithm;
  for (const RankedRun& run : runs) by_algorithm[run.algorithm].push_back(&run);

  std::vector<PrecisionRow> rows;
  for (const auto& [algorithm, algo_runs] : by_algorithm) {
    for (Question q : {Question::visit, Question::similar, Question::relevant}) {
      std::vector<RankedRun> judged;
      for (const RankedRun* run : algo_runs) {
        if (judgments.count({run->target, q})) judged.push_back(*run);
      }
      for (std::size_t r = 1; r <= r_max; ++r) {
        std::vector<RankedRun> long_enough;
        for (const RankedRun& run : judged) {
          if (run.results.size() >= r) long_enough.push_back(run);
        }
        if (long_enough.empty()) break;
        rows.push_back({algorithm, q, r, macro_precision(long_enough, judgments, q, r, options, missing_count)});
      }
    }
  }
  return rows;
}

std::string format_precision_table(const std::vector<PrecisionRow>& rows) {
  std::ostringstream out;
  for (const auto& row : rows) {
    out << row.algorithm << '\t' << question_name(row.question) << '\t' << row.r << '\t'
        << text::format_sig(row.precision, 6) << '\n';
  }
  return out.str();
}

}  // namespace relflow::eval
