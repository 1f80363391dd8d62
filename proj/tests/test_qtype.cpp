#include "doctest.h"
#include "qgeval/qtype.hpp"
#include "test_util.hpp"

using namespace qgeval;
using qgeval::test::seq;
using qgeval::test::seqs;

namespace {
QuestionType type_of(const std::string& q) { return determine_type(seq(q)); }
}  // namespace

TEST_CASE("question type rules") {
  CHECK(type_of("how many schoolrooms collapsed in the quake ?") == QuestionType::quantity);
  CHECK(type_of("how much did it cost ?") == QuestionType::quantity);
  CHECK(type_of("how did it collapse ?") == QuestionType::how);
  CHECK(type_of("the college of science began to offer civil engineering courses beginning at "
                "what time at notre dame ?") == QuestionType::what);
  CHECK(type_of("name the tallest mountain .") == QuestionType::other);
  CHECK(type_of("to whom was the letter addressed ?") == QuestionType::who);
  CHECK(type_of("whose idea was it ?") == QuestionType::who);
  CHECK(type_of("Where is Paris ?") == QuestionType::where);
  CHECK(type_of("when was it built ?") == QuestionType::when);
  CHECK(type_of("which river is longest ?") == QuestionType::which);
  CHECK(type_of("why did so many schools collapse ?") == QuestionType::why);
  CHECK(type_of("what quantity of rice ?") == QuestionType::what);
  CHECK(type_of("quantity or other ?") == QuestionType::other);
  CHECK_THROWS_AS(determine_type(seq("")), std::invalid_argument);
  CHECK(type_of(" ? ") == QuestionType::other);
}

TEST_CASE("yes/no answers make the type other") {
  CHECK(determine_type(seq("is it raining ?"), "yes") == QuestionType::other);
  CHECK(determine_type(seq("what is it ?"), "No") == QuestionType::other);
  CHECK(determine_type(seq("what is it ?"), "a dog") == QuestionType::what);
  CHECK(determine_type(seq("what is it ?"), std::nullopt) == QuestionType::what);
}

TEST_CASE("rule precedence") {
  // "how many" only decides the type when it is the first type word.
  CHECK(type_of("how many times did what happen ?") == QuestionType::quantity);
  CHECK(type_of("what is how many times it happened ?") == QuestionType::what);
  CHECK(type_of("what are the estimations of how many schoolrooms collapsed ?") ==
        QuestionType::what);
  // whose/whom outrank an earlier type word.
  CHECK(type_of("what was given to whom ?") == QuestionType::who);
}

TEST_CASE("type label sets") {
  const auto refs = seqs(test::kSchoolReferences);
  const auto labels = type_label_set(refs);
  CHECK(labels.total() == 6);
  CHECK(labels.counts.at(QuestionType::quantity) == 1);
  CHECK(labels.counts.at(QuestionType::what) == 4);
  CHECK(labels.counts.at(QuestionType::why) == 1);
  CHECK(labels.labels() == std::set<QuestionType>{QuestionType::what, QuestionType::why,
                                                   QuestionType::quantity});

  CHECK(type_label_set({}).total() == 0);
  const auto twice = type_label_set(seqs({"who is he ?", "who is he ?"}));
  CHECK(twice.counts.at(QuestionType::who) == 2);
  CHECK(twice.labels().size() == 1);
}
