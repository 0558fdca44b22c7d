#ifndef LSTAR_CORPUS_HPP
#define LSTAR_CORPUS_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lstar/parse.hpp"
#include "lstar/report.hpp"

namespace lstar {

enum class Pipeline { Check, Reflect, Star, Witness };

struct RunOptions {
  std::optional<Mode> mode;
  long long fuel = kDefaultFuel;
};

struct FileResult {
  std::string path;
  Mode mode = Mode::LStar;
  std::vector<WitnessReport> reports;
  std::string emitted;                  // reflect: the translated source text
  std::vector<std::string> file_errors;
  int exit_class = 0;                   // 0 ok, 1 failed, 2 fuel, 3 parse
};

// Runs one pipeline over every goal of a file. ParseError propagates to the
// caller; other failures land in the reports.
FileResult run_file(Pipeline pipeline, const std::string& path, const RunOptions& opts);

// Batch check over every .lst file of a directory, in name order.
std::vector<FileResult> run_corpus(const std::string& directory, const RunOptions& opts);

int exit_class(const std::vector<WitnessReport>& reports);

nlohmann::json report_json(const WitnessReport& report);
nlohmann::json file_json(const FileResult& result);
std::string render_report(const WitnessReport& report);

}  // namespace lstar

#endif  // LSTAR_CORPUS_HPP
