#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qgeval {

// One evaluation record: the prediction set and reference set for a single
// input (paragraph, sentence, ...), plus optional per-prediction
// answerability probabilities.
struct EvalSample {
  std::string id;
  std::vector<std::string> predictions;
  std::vector<std::string> references;
  std::optional<std::vector<double>> prediction_scores;
};

// Malformed input. `line()` is 1-based, 0 when not tied to a line.
class InputError : public std::runtime_error {
 public:
  InputError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct LoadOptions {
  bool allow_empty_references = false;
};

// Parses a single JSON object line. Throws InputError (with line 0).
EvalSample parse_sample(std::string_view json_line, const LoadOptions& opts = {});

// Reads line-delimited JSON records:
//   {"id": "...", "predictions": [...], "references": [...],
//    "prediction_scores": [...]}   // prediction_scores is optional
// Blank lines are skipped. Ids must be unique within a file.
std::vector<EvalSample> load_samples(std::istream& in, const LoadOptions& opts = {});
std::vector<EvalSample> load_samples(const std::filesystem::path& path,
                                     const LoadOptions& opts = {});

// Serializes a sample back into one JSON line.
std::string to_json_line(const EvalSample& sample);

}  // namespace qgeval
