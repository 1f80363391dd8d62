#include "qgeval/samples.hpp"

#include <fstream>
#include <set>

#include <nlohmann/json.hpp>

namespace qgeval {
namespace {

using nlohmann::json;

std::vector<std::string> string_list(const json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw InputError(0, std::string("missing \"") + key + "\"");
  if (!it->is_array()) throw InputError(0, std::string("\"") + key + "\" must be an array");
  std::vector<std::string> out;
  out.reserve(it->size());
  for (const auto& v : *it) {
    if (!v.is_string()) {
      throw InputError(0, std::string("\"") + key + "\" must contain only strings");
    }
    out.push_back(v.get<std::string>());
  }
  return out;
}

}  // namespace

EvalSample parse_sample(std::string_view json_line, const LoadOptions& opts) {
  json obj;
  try {
    obj = json::parse(json_line);
  } catch (const json::parse_error& e) {
    throw InputError(0, std::string("invalid JSON: ") + e.what());
  }
  if (!obj.is_object()) throw InputError(0, "record must be a JSON object");

  EvalSample s;
  const auto id = obj.find("id");
  if (id == obj.end() || !id->is_string() || id->get<std::string>().empty()) {
    throw InputError(0, "\"id\" must be a non-empty string");
  }
  s.id = id->get<std::string>();
  s.predictions = string_list(obj, "predictions");
  s.references = string_list(obj, "references");
  if (s.references.empty() && !opts.allow_empty_references) {
    throw InputError(0, "sample \"" + s.id + "\" has no references");
  }

  const auto scores = obj.find("prediction_scores");
  if (scores != obj.end() && !scores->is_null()) {
    if (!scores->is_array() || scores->size() != s.predictions.size()) {
      throw InputError(0, "\"prediction_scores\" must be an array aligned with \"predictions\"");
    }
    std::vector<double> values;
    for (const auto& v : *scores) {
      if (!v.is_number()) throw InputError(0, "\"prediction_scores\" must be numbers");
      const double p = v.get<double>();
      if (!(p >= 0.0 && p <= 1.0)) {
        throw InputError(0, "\"prediction_scores\" entries must lie in [0, 1]");
      }
      values.push_back(p);
    }
    s.prediction_scores = std::move(values);
  }
  return s;
}

std::vector<EvalSample> load_samples(std::istream& in, const LoadOptions& opts) {
  std::vector<EvalSample> out;
  std::set<std::string> ids;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    EvalSample s;
    try {
      s = parse_sample(line, opts);
    } catch (const InputError& e) {
      throw InputError(lineno, e.what());
    }
    if (!ids.insert(s.id).second) {
      throw InputError(lineno, "duplicate sample id \"" + s.id + "\"");
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<EvalSample> load_samples(const std::filesystem::path& path,
                                     const LoadOptions& opts) {
  std::ifstream in(path);
  if (!in) throw InputError(0, "cannot open " + path.string());
  return load_samples(in, opts);
}

std::string to_json_line(const EvalSample& sample) {
  nlohmann::ordered_json j;
  j["id"] = sample.id;
  j["predictions"] = sample.predictions;
  j["references"] = sample.references;
  if (sample.prediction_scores) j["prediction_scores"] = *sample.prediction_scores;
  return j.dump();
}

}  // namespace qgeval
