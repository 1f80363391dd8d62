// qgeval: set-level evaluation of generated questions.
//
//   qgeval evaluate --input samples.jsonl [--metrics BLEU4,METEOR] ...
//   qgeval assign   --input samples.jsonl --id <sample> [--metric METEOR]
//   qgeval qtype    [--input questions.txt]
//   qgeval selftest [--trials 1000]

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qgeval/evaluation.hpp"
#include "qgeval/qtype.hpp"
#include "qgeval/report.hpp"
#include "qgeval/selftest.hpp"

namespace {

struct EvaluateArgs {
  std::string input;
  std::string config;
  std::string report_path;
  std::string metrics;
  std::string avg_mode;
  std::string select;
  std::uint64_t seed = 13;
  double threshold = 0.5;
  std::string output;
  unsigned jobs = 1;
};

struct AssignArgs {
  std::string input;
  std::string id;
  std::string metric = "METEOR";
  std::string config;
};

int cmd_evaluate(const EvaluateArgs& a, const CLI::App& sub) {
  qgeval::RunConfig cfg;
  if (!a.config.empty()) cfg = qgeval::load_config(a.config, cfg);

  // Command-line flags override the config file.
  if (sub.count("--metrics")) qgeval::apply_setting(cfg, "metrics", a.metrics);
  if (sub.count("--avg-mode")) qgeval::apply_setting(cfg, "avg_mode", a.avg_mode);
  if (sub.count("--select")) qgeval::apply_setting(cfg, "select", a.select);
  if (sub.count("--seed")) cfg.seed = a.seed;
  if (sub.count("--answerability-threshold")) cfg.selection.threshold = a.threshold;
  if (sub.count("--output")) qgeval::apply_setting(cfg, "output", a.output);
  if (sub.count("--lenient")) cfg.lenient = true;
  if (sub.count("--no-dedup")) cfg.selection.dedup = false;
  if (sub.count("--allow-empty-references")) cfg.allow_empty_references = true;
  if (sub.count("--jobs")) cfg.jobs = a.jobs;
  cfg.validate();

  qgeval::LoadOptions load;
  load.allow_empty_references = cfg.allow_empty_references;
  const auto samples = qgeval::load_samples(a.input, load);
  if (samples.empty()) {
    std::cerr << "qgeval: " << a.input << " contains no samples\n";
    return 1;
  }

  const auto result = qgeval::run_evaluation(samples, cfg);
  for (const auto& s : result.samples) {
    if (s.error) std::cerr << "qgeval: skipped " << *s.error << '\n';
  }
  if (!result.corpus) {
    std::cerr << "qgeval: every sample failed\n";
    return 1;
  }

  const std::string text = qgeval::emit_report(result, cfg, cfg.format);
  if (a.report_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(a.report_path, std::ios::binary);
    if (!out) {
      std::cerr << "qgeval: cannot write " << a.report_path << '\n';
      return 1;
    }
    out << text;
  }
  return result.failures == 0 || cfg.lenient ? 0 : 1;
}

int cmd_assign(const AssignArgs& a) {
  qgeval::RunConfig cfg;
  if (!a.config.empty()) cfg = qgeval::load_config(a.config, cfg);
  const auto metric = qgeval::parse_metric(a.metric);
  if (!metric) {
    std::cerr << "qgeval: unknown metric " << a.metric << '\n';
    return 2;
  }

  qgeval::LoadOptions load;
  load.allow_empty_references = true;
  const auto samples = qgeval::load_samples(a.input, load);
  const qgeval::EvalSample* sample = nullptr;
  for (const auto& s : samples) {
    if (a.id.empty() || s.id == a.id) {
      sample = &s;
      break;
    }
  }
  if (!sample) {
    std::cerr << "qgeval: no sample " << (a.id.empty() ? "in file" : "\"" + a.id + "\"")
              << '\n';
    return 1;
  }

  std::vector<qgeval::TokenSeq> preds, refs;
  for (const auto& p : sample->predictions) preds.push_back(qgeval::normalize(p));
  for (const auto& r : sample->references) refs.push_back(qgeval::normalize(r));
  const auto scorer = qgeval::make_scorer(*metric, cfg.settings);
  const auto matrix = qgeval::build_score_matrix(preds, refs, scorer);
  const auto score = qgeval::multi_score(matrix);
  std::cout << "sample " << sample->id << " (m = " << score.m << ", n = " << score.n
            << ")\n"
            << qgeval::format_assignment(preds, refs, scorer.name, matrix, score);
  return 0;
}

int cmd_qtype(const std::string& input) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (!input.empty() && input != "-") {
    file.open(input);
    if (!file) {
      std::cerr << "qgeval: cannot open " << input << '\n';
      return 1;
    }
    in = &file;
  }
  std::string line;
  while (std::getline(*in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto q = qgeval::normalize(line);
    if (q.empty()) continue;
    std::cout << line << '\t' << qgeval::to_string(qgeval::determine_type(q)) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Set-level evaluation of generated questions"};
  app.require_subcommand(1);

  EvaluateArgs ev;
  auto* evaluate = app.add_subcommand("evaluate", "Score prediction sets against reference sets");
  evaluate->add_option("-i,--input", ev.input, "Line-delimited JSON samples")->required();
  evaluate->add_option("--config", ev.config, "Flat JSON config file (comments allowed)");
  evaluate->add_option("--metrics", ev.metrics,
                       "Comma list of BLEU1,BLEU2,BLEU4,ROUGE_L,METEOR,QBLEU1");
  evaluate->add_option("--avg-mode", ev.avg_mode, "all-refs | assigned");
  evaluate->add_option("--select", ev.select, "none | rand@K | top@1 | rank@K");
  evaluate->add_option("--seed", ev.seed, "Seed for rand@K (default 13)");
  evaluate->add_option("--answerability-threshold", ev.threshold,
                       "Minimum answerability kept by rank@K (default 0.5)");
  evaluate->add_option("--output", ev.output, "json | csv");
  evaluate->add_option("--report", ev.report_path, "Write the report here instead of stdout");
  evaluate->add_option("--jobs", ev.jobs, "Worker threads (0 = all cores)");
  evaluate->add_flag("--lenient", "Skip failing samples instead of aborting");
  evaluate->add_flag("--no-dedup", "Keep duplicate candidates in rank@K");
  evaluate->add_flag("--allow-empty-references", "Accept samples without references");

  AssignArgs as;
  auto* assign = app.add_subcommand("assign", "Show the score matrix and optimal pairs of one sample");
  assign->add_option("-i,--input", as.input, "Line-delimited JSON samples")->required();
  assign->add_option("--id", as.id, "Sample id (default: first sample)");
  assign->add_option("--metric", as.metric, "Pairwise metric (default METEOR)");
  assign->add_option("--config", as.config, "Config file for metric parameters");

  std::string qtype_input;
  auto* qtype = app.add_subcommand("qtype", "Label questions (one per line) with a question type");
  qtype->add_option("-i,--input", qtype_input, "Question file (default: stdin)");

  qgeval::SelftestOptions st;
  auto* selftest = app.add_subcommand("selftest", "Check the assignment solver against brute force");
  selftest->add_option("--trials", st.trials, "Random matrices (default 1000)");
  selftest->add_option("--max-dim", st.max_dim, "Largest dimension, at most 8 (default 7)")
      ->check(CLI::Range(std::size_t{0}, qgeval::kBruteForceMaxDim));
  selftest->add_option("--seed", st.seed, "Generator seed (default 13)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*evaluate) return cmd_evaluate(ev, *evaluate);
    if (*assign) return cmd_assign(as);
    if (*qtype) return cmd_qtype(qtype_input);
    if (*selftest) return qgeval::run_assignment_selftest(st, std::cout) ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "qgeval: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
