#include <sstream>

#include <nlohmann/json.hpp>

#include "doctest.h"
#include "qgeval/evaluation.hpp"
#include "qgeval/report.hpp"
#include "test_util.hpp"

using namespace qgeval;

namespace {

std::vector<EvalSample> parse_lines(const std::string& text, const LoadOptions& opts = {}) {
  std::istringstream in(text);
  return load_samples(in, opts);
}

const char* kTwoSamples =
    R"({"id": "s1", "predictions": ["what is it ?", "who is he ?"], "references": ["what is it ?"]})"
    "\n\n"
    R"({"id": "s2", "predictions": ["where is Paris ?"], "references": ["where is Paris ?", "why ?"], "prediction_scores": [0.7]})"
    "\n";

}  // namespace

TEST_CASE("load samples") {
  const auto s = parse_lines(kTwoSamples);
  REQUIRE(s.size() == 2);
  CHECK(s[0].id == "s1");
  CHECK(s[0].predictions.size() == 2);
  CHECK_FALSE(s[0].prediction_scores.has_value());
  CHECK(s[1].prediction_scores == std::vector<double>{0.7});

  const auto school = load_samples(test::repo_path("data/schoolrooms.jsonl"));
  REQUIRE(school.size() == 1);
  CHECK(school[0].predictions.size() == 4);
  CHECK(school[0].references.size() == 6);
  CHECK(school[0].predictions == test::kSchoolPredictions);
  CHECK(school[0].references == test::kSchoolReferences);
}

TEST_CASE("malformed samples cite the line") {
  CHECK_THROWS_WITH_AS(parse_lines("{\"id\":\"a\",\"predictions\":[]}\n"),
                       doctest::Contains("line 1"), InputError);
  CHECK_THROWS_WITH_AS(parse_lines(std::string(kTwoSamples) + "{not json\n"),
                       doctest::Contains("line 4"), InputError);
  CHECK_THROWS_WITH_AS(
      parse_lines(std::string(kTwoSamples) +
                  R"({"id": "s1", "predictions": [], "references": ["x"]})" "\n"),
      doctest::Contains("s1"), InputError);
  CHECK_THROWS_AS(parse_lines(R"({"id": "", "predictions": [], "references": ["x"]})"),
                  InputError);
  CHECK_THROWS_AS(parse_lines(R"({"id": "a", "predictions": [1], "references": ["x"]})"),
                  InputError);
  CHECK_THROWS_AS(parse_lines(R"({"id": "a", "predictions": ["q"], "references": ["x"], "prediction_scores": [1.5]})"),
                  InputError);
  CHECK_THROWS_AS(parse_lines(R"({"id": "a", "predictions": ["q"], "references": []})"),
                  InputError);
  LoadOptions lax;
  lax.allow_empty_references = true;
  CHECK(parse_lines(R"({"id": "a", "predictions": ["q"], "references": []})", lax).size() == 1);
}

TEST_CASE("sample json round trip") {
  for (const auto& s : parse_lines(kTwoSamples)) {
    const auto back = parse_sample(to_json_line(s));
    CHECK(back.id == s.id);
    CHECK(back.predictions == s.predictions);
    CHECK(back.references == s.references);
    CHECK(back.prediction_scores == s.prediction_scores);
  }
}

TEST_CASE("config parsing") {
  const auto cfg = parse_config(R"(// comment
  {"metrics": ["ROUGE_L", "BLEU1"], "avg_mode": "assigned", "select": "rank@3",
   "seed": 7, "answerability_threshold": 0.6, "output": "csv", "qbleu_delta": 0.5,
   /* block */ "meteor_gamma": 0.25, "dedup": false, "jobs": 0})");
  CHECK(cfg.metrics == std::vector<MetricId>{MetricId::ROUGE_L, MetricId::BLEU1});
  CHECK(cfg.avg_mode == AverageMode::AssignedPairs);
  CHECK(cfg.selection.kind == SelectionSpec::Kind::Rank);
  CHECK(cfg.selection.k == 3);
  CHECK(cfg.selection.threshold == 0.6);
  CHECK_FALSE(cfg.selection.dedup);
  CHECK(cfg.seed == 7);
  CHECK(cfg.format == ReportFormat::Csv);
  CHECK(cfg.settings.answerability.delta == 0.5);
  CHECK(cfg.settings.metric.meteor_gamma == 0.25);
  CHECK(cfg.jobs == 0);

  CHECK_THROWS_AS(parse_config(R"({"bogus": 1})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_config(R"({"seed": "x"})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_config(R"({"metrics": {"a": 1}})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_config("[1, 2]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_config(R"({"metrics": ""})").validate(), std::invalid_argument);

  const auto shipped = load_config(test::repo_path("config/default.json"));
  CHECK_NOTHROW(shipped.validate());
  const RunConfig defaults;
  CHECK(shipped.metrics == defaults.metrics);
  CHECK(shipped.seed == 13);
  CHECK(shipped.settings.answerability.delta == defaults.settings.answerability.delta);
  CHECK(shipped.settings.answerability.w_ne == defaults.settings.answerability.w_ne);
}

TEST_CASE("run_evaluation end to end") {
  const auto samples = parse_lines(kTwoSamples);
  RunConfig cfg;
  cfg.metrics = {MetricId::ROUGE_L};
  const auto r = run_evaluation(samples, cfg);
  REQUIRE(r.corpus.has_value());
  CHECK(r.failures == 0);
  CHECK(r.samples[0].m == 2);
  CHECK(r.samples[0].car_diff == -1);
  CHECK(r.samples[1].metrics[0].second.multi.multi ==
        doctest::Approx(2.0 * 100.0 / 3.0));

  const std::vector<EvalSample> same{
      parse_sample(R"({"id": "x", "predictions": ["a b c", "d e"], "references": ["a b c", "d e"]})")};
  const auto id = run_evaluation(same, cfg);
  CHECK(id.corpus->fields.at("ROUGE_L.multi").mean == doctest::Approx(100.0));
}

TEST_CASE("evaluation is deterministic and independent of the job count") {
  std::string text;
  for (int i = 0; i < 40; ++i) {
    text += R"({"id": "q)" + std::to_string(i) +
            R"(", "predictions": ["what is item )" + std::to_string(i) +
            R"( ?", "who made it ?", "when was it made ?", "why ?"], "references": ["what is item )" +
            std::to_string(i % 7) + R"( ?", "who built it ?"], "prediction_scores": [0.9, 0.4, 0.8, 0.6]})" + "\n";
  }
  const auto samples = parse_lines(text);
  for (const char* sel : {"none", "rand@2", "top@1", "rank@2"}) {
    RunConfig cfg;
    apply_setting(cfg, "select", sel);
    const auto one = emit_report(run_evaluation(samples, cfg), cfg, ReportFormat::Json);
    const auto again = emit_report(run_evaluation(samples, cfg), cfg, ReportFormat::Json);
    cfg.jobs = 4;
    const auto four = emit_report(run_evaluation(samples, cfg), cfg, ReportFormat::Json);
    CHECK(one == again);
    CHECK(one == four);
  }
}

TEST_CASE("failing samples and lenient mode") {
  const auto samples = parse_lines(
      R"({"id": "unscored", "predictions": ["a"], "references": ["a"]})" "\n"
      R"({"id": "scored", "predictions": ["a"], "references": ["a"], "prediction_scores": [0.5]})" "\n",
      {});
  RunConfig cfg;
  cfg.metrics = {MetricId::BLEU1};
  cfg.selection = parse_selection("rank@5");
  // The first sample has no scores, so rank@5 cannot run there.
  CHECK_THROWS_WITH_AS(run_evaluation(samples, cfg), doctest::Contains("unscored"), EvaluationError);
  cfg.lenient = true;
  const auto r = run_evaluation(samples, cfg);
  CHECK(r.failures == 1);
  REQUIRE(r.corpus.has_value());
  CHECK(r.corpus->samples == 1);
  CHECK(r.samples[0].error.has_value());
}

TEST_CASE("reports") {
  const auto samples = parse_lines(kTwoSamples);
  RunConfig cfg;
  cfg.metrics = {MetricId::ROUGE_L, MetricId::BLEU1};
  const auto r = run_evaluation(samples, cfg);

  const auto j = nlohmann::json::parse(emit_report(r, cfg, ReportFormat::Json));
  CHECK(j["samples"].size() == 2);
  const auto& m = j["samples"][1]["metrics"]["ROUGE_L"];
  CHECK(m["multi"].get<double>() == r.samples[1].metrics[0].second.multi.multi);
  CHECK(m["s"].get<double>() == r.samples[1].metrics[0].second.multi.s);
  CHECK(m["display"]["multi"] == display(r.samples[1].metrics[0].second.multi.multi));
  CHECK(j["aggregate"]["fields"]["ROUGE_L.multi"]["mean"].get<double>() ==
        r.corpus->fields.at("ROUGE_L.multi").mean);
  CHECK(j["samples"][0]["self_bleu2"].get<double>() == r.samples[0].self_bleu2);
  std::vector<std::string> keys;
  const auto ordered = nlohmann::ordered_json::parse(emit_report(r, cfg, ReportFormat::Json));
  for (const auto& [k, v] : ordered.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"config", "samples", "aggregate"});

  const std::vector<EvalSample> one(samples.begin(), samples.begin() + 1);
  const auto csv = emit_report(run_evaluation(one, cfg), cfg, ReportFormat::Csv);
  std::istringstream in(csv);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0].rfind("id,m,n,car_diff,self_bleu2,ROUGE_L.s", 0) == 0);
  CHECK(lines[1].rfind("s1,", 0) == 0);
  CHECK(lines[2].rfind("__aggregate__,", 0) == 0);

  CHECK(display(18.562) == "18.56");
  CHECK(display(23.2025) == "23.20");
  CHECK(display(92.81) == "92.81");

  EvaluationResult empty;
  CHECK_THROWS_AS(emit_report(empty, cfg, ReportFormat::Json), std::invalid_argument);
}

TEST_CASE("assignment dump") {
  const auto preds = test::seqs(test::kSchoolPredictions);
  const auto refs = test::seqs(test::kSchoolReferences);
  const auto scorer = make_scorer(MetricId::METEOR);
  const auto x = build_score_matrix(preds, refs, scorer);
  const auto text = format_assignment(preds, refs, scorer.name, x, multi_score(x));
  CHECK(text.find("Overall Match Score (S)") != std::string::npos);
  CHECK(text.find("assigned to Reference: how many schoolrooms collapsed in the quake?") !=
        std::string::npos);
}
