"""Set-level evaluation of generated questions.

Thin Python layer over the C++ core: optimal prediction/reference
assignment, Multi-metrics, n-gram scorers, question typing and
candidate selection.
"""

from ._core import (
    AnswerabilityWeights,
    Assignment,
    Candidate,
    EvaluationError,
    InputError,
    MetricConfig,
    MetricId,
    MetricSettings,
    MultiScore,
    QuestionType,
    TokenSeq,
    answerability,
    average_score,
    bleu,
    brute_force_solve,
    cardinality_diff,
    determine_type,
    evaluate_jsonl,
    lcs_length,
    meteor,
    multi_score,
    multi_score_from_matrix,
    ngrams,
    normalize,
    qmetric,
    rouge_l,
    score_matrix,
    select_rand_k,
    select_rank_k,
    select_top1,
    self_bleu,
    solve,
    stem,
    type_label_set,
)

__version__ = "0.1.0"
