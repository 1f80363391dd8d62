#include "doctest.h"
#include "qgeval/multimetrics.hpp"
#include "qgeval/qbleu.hpp"
#include "test_util.hpp"

using namespace qgeval;
using qgeval::test::seq;
using qgeval::test::seqs;

TEST_CASE("token roles") {
  const auto roles = token_roles(seq("What did Marie Curie discover in the lab ?"));
  const std::vector<TokenRole> want{TokenRole::QuestionWord, TokenRole::Function,
                                    TokenRole::NamedEntity,  TokenRole::NamedEntity,
                                    TokenRole::Content,      TokenRole::Function,
                                    TokenRole::Function,     TokenRole::Content,
                                    TokenRole::Ignored};
  CHECK(roles == want);
  CHECK(is_question_word("whom"));
  CHECK_FALSE(is_function_word("what"));
  CHECK(is_function_word("the"));
}

TEST_CASE("answerability") {
  const auto q = seq("What did Marie Curie discover ?");
  CHECK(answerability(q, q) == doctest::Approx(1.0));
  CHECK(answerability(seq("Who is Bob ? cats"), seq("where was Paris dogs")) ==
        doctest::Approx(0.0));
  // Only the question word is shared; the other components are non-empty
  // and disjoint on both sides.
  CHECK(answerability(seq("what is Paris food"), seq("what was London rain")) ==
        doctest::Approx(0.2));
  CHECK(answerability(seq("a"), seq("")) == doctest::Approx(0.2 + 0.6 + 0.1));
  // Punctuation is ignored.
  CHECK(answerability(seq("what ?"), seq("what")) == doctest::Approx(1.0));
}

TEST_CASE("qmetric interpolation") {
  const auto p = seq("what is the capital of france ?");
  const auto refs = seqs({"what is the capital city of France ?", "name a city"});
  AnswerabilityWeights w;
  w.delta = 0.0;
  CHECK(qmetric(p, refs, MetricId::BLEU1, w) == bleu(p, refs, 1));
  w.delta = 1.0;
  CHECK(qmetric(p, std::vector{p}, MetricId::BLEU1, w) == doctest::Approx(100.0));

}

TEST_CASE("qmetric with a zero base score") {
  AnswerabilityWeights w;
  w.delta = 0.5;
  // No shared token, so BLEU1 sits at the smoothing floor; the only
  // credit is the vacuous named-entity component (weight 0.6).
  const auto p = seq("who is cats");
  const auto r = seq("where was dogs");
  CHECK(answerability(p, r, w) == doctest::Approx(0.6));
  CHECK(bleu(p, std::vector{r}, 1) < 1e-6);
  CHECK(qmetric(p, std::vector{r}, MetricId::BLEU1, w) == doctest::Approx(30.0).epsilon(1e-7));

  const auto q = seq("what is the capital of France ?");
  const auto refs = seqs({"what is the capital city of France ?"});
  CHECK(qmetric(q, refs, MetricId::BLEU1, w) ==
        doctest::Approx(100.0 * (0.5 * answerability(q, refs[0], w) + 0.5 * bleu(q, refs, 1) / 100.0)));
}

TEST_CASE("weights are validated") {
  AnswerabilityWeights w;
  CHECK_NOTHROW(w.validate());
  w.w_ne = 0.5;
  CHECK_THROWS_AS(w.validate(), std::invalid_argument);
  w = {};
  w.delta = 1.2;
  CHECK_THROWS_AS(w.validate(), std::invalid_argument);
}

TEST_CASE("qmetric is monotone in answerability and base score") {
  AnswerabilityWeights w;
  const auto ref = seqs({"what did Marie Curie discover in the lab ?"});
  const auto worse = seq("what did she find ?");
  const auto better = seq("what did Marie Curie find ?");
  CHECK(qmetric(better, ref, MetricId::BLEU1, w) > qmetric(worse, ref, MetricId::BLEU1, w));
}

TEST_CASE("Multi-QBLEU1 with delta 0 equals Multi-BLEU1") {
  MetricSettings settings;
  settings.answerability.delta = 0.0;
  const auto preds = seqs(test::kSchoolPredictions);
  const auto refs = seqs(test::kSchoolReferences);
  const auto q = multi_score(preds, refs, make_scorer(MetricId::QBLEU1, settings));
  const auto b = multi_score(preds, refs, make_scorer(MetricId::BLEU1, settings));
  CHECK(q.s == b.s);
  CHECK(q.multi == b.multi);
  CHECK(q.assignment.pairs == b.assignment.pairs);
}
