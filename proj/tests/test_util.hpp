#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "qgeval/text.hpp"

namespace qgeval::test {

inline TokenSeq seq(const std::string& raw) { return normalize(raw); }

inline std::vector<TokenSeq> seqs(const std::vector<std::string>& raws) {
  std::vector<TokenSeq> out;
  out.reserve(raws.size());
  for (const auto& r : raws) out.push_back(normalize(r));
  return out;
}

inline std::filesystem::path data_path(const std::string& name) {
  return std::filesystem::path(QGEVAL_TEST_DATA_DIR) / name;
}

inline std::filesystem::path repo_path(const std::string& name) {
  return std::filesystem::path(QGEVAL_SOURCE_DIR) / name;
}

// Four generated and six reference questions about one passage.
inline const std::vector<std::string> kSchoolPredictions{
    "what policy caused many families to lose their only child?",
    "what is the catch phrase for inadequately engineered schoolhouses?",
    "how many inadequately engineered schoolrooms collapsed in the earthquake?",
    "what is the age of the so-called illegal children?"};

inline const std::vector<std::string> kSchoolReferences{
    "how many schoolrooms collapsed in the quake?",
    "what catch-phrase was invented as a result of collapsed schools?",
    "why did so many schools collapse during the earthquake?",
    "what are the estimations of how many schoolrooms collapsed?",
    "what has the citizenry started calling these type of schools?",
    "what can illegal children be registered as in place of their dead siblings?"};

}  // namespace qgeval::test
