import json
import os
from pathlib import Path

import pytest

import qgeval

DATA = Path(os.environ.get("QGEVAL_DATA_DIR", Path(__file__).resolve().parents[2] / "data"))


def test_text_primitives():
    assert qgeval.normalize("Who is THERE?").tokens == ["who", "is", "there", "?"]
    assert qgeval.normalize("catch-phrase was invented").tokens[0] == "catch-phrase"
    assert qgeval.stem("running") == "run"
    assert qgeval.lcs_length("a b c d", "a c d") == 3
    assert qgeval.ngrams("a b a", 1) == {("a",): 2, ("b",): 1}
    with pytest.raises(ValueError):
        qgeval.ngrams("a", 5)


def test_metrics():
    assert qgeval.bleu("the cat sat", ["the cat sat down"], 1) == pytest.approx(71.653, abs=1e-3)
    assert qgeval.rouge_l("a c d", ["a b c d"]) == pytest.approx(83.562, abs=1e-3)
    assert qgeval.meteor("how many schoolrooms collapsed", ["how many schoolrooms collapsed"]) == pytest.approx(99.21875)
    assert qgeval.self_bleu(["what is it ?"]) == 0.0
    assert qgeval.qmetric("what is it ?", ["what is it ?"]) == pytest.approx(100.0)


def test_assignment_and_multi():
    x = [[1.0] * 6 for _ in range(4)]
    for (i, j), v in {(0, 2): 9.33, (1, 1): 18.19, (2, 0): 48.83, (3, 5): 16.46}.items():
        x[i][j] = v
    a = qgeval.solve(x)
    assert a.pairs == [(0, 2), (1, 1), (2, 0), (3, 5)]
    assert a.s == pytest.approx(92.81)
    assert qgeval.brute_force_solve(x).s == pytest.approx(a.s)
    ms = qgeval.multi_score_from_matrix(x)
    assert round(ms.multi, 2) == 18.56
    one = qgeval.multi_score(["what is it ?"], ["what is it ?", "who", "why"], qgeval.MetricId.ROUGE_L)
    assert one.multi == pytest.approx(50.0)
    assert qgeval.cardinality_diff(1, 5) == 4
    with pytest.raises(ValueError):
        qgeval.solve([[1.0, -1.0]])


def test_qtype_and_selection():
    assert qgeval.determine_type("how many schoolrooms collapsed ?") == qgeval.QuestionType.quantity
    assert qgeval.determine_type("is it ?", "yes") == qgeval.QuestionType.other
    cands = [qgeval.Candidate(f"q {i}", p, i) for i, p in enumerate([0.9, 0.4, 0.7, 0.95])]
    assert [c.origin for c in qgeval.select_rank_k(cands, 2, 0.5)] == [3, 0]
    assert [c.origin for c in qgeval.select_top1(cands)] == [0]
    assert len(qgeval.select_rand_k(cands, 2, 13)) == 2


def test_evaluate_jsonl():
    text = (DATA / "schoolrooms.jsonl").read_text()
    report = json.loads(qgeval.evaluate_jsonl(text, {"metrics": ["METEOR", "ROUGE_L"]}))
    sample = report["samples"][0]
    assert sample["m"] == 4 and sample["n"] == 6 and sample["car_diff"] == 2
    assert set(sample["metrics"]) == {"METEOR", "ROUGE_L"}
    csv = qgeval.evaluate_jsonl(text, {"output": "csv", "jobs": 2})
    assert csv.splitlines()[-1].startswith("__aggregate__")
    with pytest.raises(ValueError):
        qgeval.evaluate_jsonl(text, {"bogus": 1})
    with pytest.raises(qgeval.InputError):
        qgeval.evaluate_jsonl('{"id": "x"}\n')
