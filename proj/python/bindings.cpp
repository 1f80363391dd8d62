#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "qgeval/evaluation.hpp"
#include "qgeval/qtype.hpp"
#include "qgeval/report.hpp"
#include "qgeval/selection.hpp"

namespace py = pybind11;
using namespace qgeval;

namespace {

ScoreMatrix to_matrix(const std::vector<std::vector<double>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  ScoreMatrix x(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("score matrix rows are ragged");
    for (std::size_t j = 0; j < cols; ++j) x(i, j) = rows[i][j];
  }
  return x;
}

RunConfig to_config(const py::dict& options) {
  RunConfig cfg;
  for (const auto& [key, value] : options) {
    std::string text;
    if (py::isinstance<py::bool_>(value)) {
      text = value.cast<bool>() ? "true" : "false";
    } else if (py::isinstance<py::list>(value) || py::isinstance<py::tuple>(value)) {
      for (const auto& item : value) {
        if (!text.empty()) text += ',';
        text += py::str(item).cast<std::string>();
      }
    } else {
      text = py::str(value).cast<std::string>();
    }
    apply_setting(cfg, key.cast<std::string>(), text);
  }
  cfg.validate();
  return cfg;
}

std::string evaluate_lines(const std::string& jsonl, const py::dict& options) {
  const RunConfig cfg = to_config(options);
  std::istringstream in(jsonl);
  LoadOptions load;
  load.allow_empty_references = cfg.allow_empty_references;
  const auto samples = load_samples(in, load);
  py::gil_scoped_release release;
  return emit_report(run_evaluation(samples, cfg), cfg, cfg.format);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Set-level evaluation of generated questions (Multi-metrics)";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<EvaluationError>(m, "EvaluationError", PyExc_RuntimeError);

  py::class_<TokenSeq>(m, "TokenSeq")
      .def(py::init([](const std::string& raw) { return normalize(raw); }), py::arg("raw"))
      .def_readonly("tokens", &TokenSeq::tokens)
      .def_readonly("raw", &TokenSeq::raw)
      .def("__len__", &TokenSeq::size)
      .def("__eq__", [](const TokenSeq& a, const TokenSeq& b) { return a == b; })
      .def("__repr__", [](const TokenSeq& s) { return "TokenSeq(" + py::repr(py::cast(s.raw)).cast<std::string>() + ")"; });
  py::implicitly_convertible<py::str, TokenSeq>();

  m.def("normalize", &normalize, py::arg("raw"));
  m.def("lcs_length", py::overload_cast<const TokenSeq&, const TokenSeq&>(&lcs_length));
  m.def("stem", &stem, py::arg("token"));
  m.def("ngrams", [](const TokenSeq& seq, int order) {
    py::dict out;
    for (const auto& [gram, count] : ngrams(seq, order).counts) {
      out[py::tuple(py::cast(gram))] = count;
    }
    return out;
  }, py::arg("seq"), py::arg("order"));

  py::enum_<MetricId>(m, "MetricId")
      .value("BLEU1", MetricId::BLEU1)
      .value("BLEU2", MetricId::BLEU2)
      .value("BLEU4", MetricId::BLEU4)
      .value("ROUGE_L", MetricId::ROUGE_L)
      .value("METEOR", MetricId::METEOR)
      .value("QBLEU1", MetricId::QBLEU1);

  py::class_<MetricConfig>(m, "MetricConfig")
      .def(py::init<>())
      .def_readwrite("bleu_smoothing", &MetricConfig::bleu_smoothing)
      .def_readwrite("rouge_beta", &MetricConfig::rouge_beta)
      .def_readwrite("meteor_alpha", &MetricConfig::meteor_alpha)
      .def_readwrite("meteor_beta", &MetricConfig::meteor_beta)
      .def_readwrite("meteor_gamma", &MetricConfig::meteor_gamma);

  py::class_<AnswerabilityWeights>(m, "AnswerabilityWeights")
      .def(py::init<>())
      .def_readwrite("delta", &AnswerabilityWeights::delta)
      .def_readwrite("w_qt", &AnswerabilityWeights::w_qt)
      .def_readwrite("w_content", &AnswerabilityWeights::w_content)
      .def_readwrite("w_ne", &AnswerabilityWeights::w_ne)
      .def_readwrite("w_stop", &AnswerabilityWeights::w_stop);

  py::class_<MetricSettings>(m, "MetricSettings")
      .def(py::init<>())
      .def_readwrite("metric", &MetricSettings::metric)
      .def_readwrite("answerability", &MetricSettings::answerability);

  const MetricConfig default_cfg;
  m.def("bleu", [](const TokenSeq& p, const std::vector<TokenSeq>& refs, int max_n,
                   const MetricConfig& cfg) { return bleu(p, refs, max_n, cfg); },
        py::arg("pred"), py::arg("refs"), py::arg("max_n") = 4, py::arg("cfg") = default_cfg);
  m.def("rouge_l", [](const TokenSeq& p, const std::vector<TokenSeq>& refs,
                      const MetricConfig& cfg) { return rouge_l(p, refs, cfg); },
        py::arg("pred"), py::arg("refs"), py::arg("cfg") = default_cfg);
  m.def("meteor", [](const TokenSeq& p, const std::vector<TokenSeq>& refs,
                     const MetricConfig& cfg) { return meteor(p, refs, cfg); },
        py::arg("pred"), py::arg("refs"), py::arg("cfg") = default_cfg);
  m.def("self_bleu", [](const std::vector<TokenSeq>& preds, int n) { return self_bleu(preds, n); },
        py::arg("preds"), py::arg("n") = 2);
  m.def("answerability", &answerability, py::arg("pred"), py::arg("ref"),
        py::arg("weights") = AnswerabilityWeights{});
  m.def("qmetric", [](const TokenSeq& p, const std::vector<TokenSeq>& refs, MetricId base,
                      const AnswerabilityWeights& w) { return qmetric(p, refs, base, w); },
        py::arg("pred"), py::arg("refs"), py::arg("base") = MetricId::BLEU1,
        py::arg("weights") = AnswerabilityWeights{});

  py::class_<Assignment>(m, "Assignment")
      .def_readonly("pairs", &Assignment::pairs)
      .def_readonly("s", &Assignment::s);
  m.def("solve", [](const std::vector<std::vector<double>>& rows) { return solve(to_matrix(rows)); },
        py::arg("matrix"));
  m.def("brute_force_solve", [](const std::vector<std::vector<double>>& rows) {
    return brute_force_solve(to_matrix(rows));
  }, py::arg("matrix"));

  py::class_<MultiScore>(m, "MultiScore")
      .def_readonly("s", &MultiScore::s)
      .def_readonly("m", &MultiScore::m)
      .def_readonly("n", &MultiScore::n)
      .def_readonly("k", &MultiScore::k)
      .def_readonly("pr", &MultiScore::pr)
      .def_readonly("re", &MultiScore::re)
      .def_readonly("multi", &MultiScore::multi)
      .def_readonly("assignment", &MultiScore::assignment)
      .def_readonly("no_predictions", &MultiScore::no_predictions)
      .def_readonly("no_references", &MultiScore::no_references);

  m.def("multi_score", [](const std::vector<TokenSeq>& preds, const std::vector<TokenSeq>& refs,
                          MetricId metric, const MetricSettings& settings) {
    return multi_score(preds, refs, make_scorer(metric, settings));
  }, py::arg("preds"), py::arg("refs"), py::arg("metric"), py::arg("settings") = MetricSettings{});
  m.def("multi_score_from_matrix", [](const std::vector<std::vector<double>>& rows) {
    return multi_score(to_matrix(rows));
  }, py::arg("matrix"));
  m.def("score_matrix", [](const std::vector<TokenSeq>& preds, const std::vector<TokenSeq>& refs,
                           MetricId metric, const MetricSettings& settings) {
    const ScoreMatrix x = build_score_matrix(preds, refs, make_scorer(metric, settings));
    std::vector<std::vector<double>> out(x.rows());
    for (std::size_t i = 0; i < x.rows(); ++i) out[i].assign(x.row(i).begin(), x.row(i).end());
    return out;
  }, py::arg("preds"), py::arg("refs"), py::arg("metric"), py::arg("settings") = MetricSettings{});
  m.def("average_score", [](const std::vector<TokenSeq>& preds, const std::vector<TokenSeq>& refs,
                            MetricId metric, bool assigned, const MetricSettings& settings) {
    return average_score(preds, refs, make_scorer(metric, settings),
                         assigned ? AverageMode::AssignedPairs : AverageMode::AllReferences);
  }, py::arg("preds"), py::arg("refs"), py::arg("metric"), py::arg("assigned") = false,
     py::arg("settings") = MetricSettings{});
  m.def("cardinality_diff", &cardinality_diff, py::arg("predictions"), py::arg("references"));

  py::enum_<QuestionType>(m, "QuestionType")
      .value("who", QuestionType::who)
      .value("when", QuestionType::when)
      .value("where", QuestionType::where)
      .value("what", QuestionType::what)
      .value("why", QuestionType::why)
      .value("which", QuestionType::which)
      .value("how", QuestionType::how)
      .value("quantity", QuestionType::quantity)
      .value("other", QuestionType::other);
  m.def("determine_type", [](const TokenSeq& q, std::optional<std::string> answer) {
    return determine_type(q, answer ? std::optional<std::string_view>(*answer) : std::nullopt);
  }, py::arg("question"), py::arg("answer") = py::none());
  m.def("type_label_set", [](const std::vector<TokenSeq>& qs) {
    return type_label_set(qs).counts;
  }, py::arg("questions"));

  py::class_<Candidate>(m, "Candidate")
      .def(py::init([](const TokenSeq& text, std::optional<double> score, std::size_t origin) {
             return Candidate{text, score, origin};
           }),
           py::arg("text"), py::arg("answerability") = py::none(), py::arg("origin") = 0)
      .def_readonly("text", &Candidate::text)
      .def_readonly("answerability", &Candidate::answerability)
      .def_readonly("origin", &Candidate::origin);
  m.def("select_rand_k", [](const std::vector<Candidate>& c, std::size_t k, std::uint64_t seed) {
    return select_rand_k(c, k, seed);
  }, py::arg("cands"), py::arg("k") = 5, py::arg("seed") = 13);
  m.def("select_top1", [](const std::vector<Candidate>& c) { return select_top1(c); },
        py::arg("cands"));
  m.def("select_rank_k", [](const std::vector<Candidate>& c, std::size_t k, double t, bool dedup) {
    return select_rank_k(c, k, t, dedup);
  }, py::arg("cands"), py::arg("k") = 5, py::arg("threshold") = 0.5, py::arg("dedup") = true);

  m.def("evaluate_jsonl", &evaluate_lines, py::arg("jsonl"), py::arg("options") = py::dict(),
        "Evaluate line-delimited JSON samples; options use the config-file keys. "
        "Returns the report text.");
}
