import pytest

from conftest import build_doc, build_token_line as tok
from thatsort import (
    SizeSchedule,
    learning_curve,
    load_gold_that,
    parse_conllu,
    relabel_that,
    summarize_distances,
    tag_inventory_evolution,
    that_noun_distance,
)
from thatsort.analysis import DistanceRecord, curve_to_csv, inventory_to_csv
from thatsort.errors import EmptyType, ScheduleExceedsCorpus
from thatsort.synth import uniform_evidence_files, uniform_evidence_gold_text


@pytest.fixture(scope="module")
def uniform_setup():
    files = [relabel_that(parse_conllu(t))[0] for t in uniform_evidence_files(30)]
    gold_doc = parse_conllu(uniform_evidence_gold_text())
    tests = [("uniform", gold_doc, load_gold_that(gold_doc))]
    return files, tests


def test_schedule_validation():
    with pytest.raises(ValueError):
        SizeSchedule((10, 10))
    with pytest.raises(ValueError):
        SizeSchedule((0, 5))
    with pytest.raises(ValueError):
        SizeSchedule(())


def test_default_schedule():
    assert SizeSchedule().file_counts == (10, 30, 100, 200, 300, 400, 500)


def test_curve_row_structure(uniform_setup):
    files, tests = uniform_setup
    rows = learning_curve(files, SizeSchedule((10, 30)), tests)
    assert len(rows) == 2 * 1 * 4
    assert [(r.size, r.tag) for r in rows[:4]] == [
        (10, "WPR"), (10, "CST"), (10, "IN"), (10, "DT")]


def test_curve_uniform_cst_recall_one(uniform_setup):
    files, tests = uniform_setup
    rows = learning_curve(files, SizeSchedule((10, 30)), tests)
    for row in rows:
        if row.tag == "CST":
            assert row.recall == 1.0


def test_curve_deterministic_csv(uniform_setup):
    files, tests = uniform_setup
    a = curve_to_csv(learning_curve(files, SizeSchedule((10, 30)), tests))
    b = curve_to_csv(learning_curve(files, SizeSchedule((10, 30)), tests))
    assert a == b


def test_curve_prefix_property(uniform_setup, gum_docs):
    files, tests = uniform_setup
    prefix_only = learning_curve(files[:10], SizeSchedule((10,)), tests)
    with_extra = learning_curve(files[:10] + [gum_docs["dev"]] * 5,
                                SizeSchedule((10,)), tests)
    assert prefix_only == with_extra


def test_curve_schedule_exceeds_corpus(uniform_setup):
    files, tests = uniform_setup
    with pytest.raises(ScheduleExceedsCorpus):
        learning_curve(files[:5], SizeSchedule((10,)), tests)


def test_inventory_rows_and_monotonicity(uniform_setup):
    files, _ = uniform_setup
    rows = tag_inventory_evolution(files, SizeSchedule((10, 30)))
    by_size = {}
    for size, tag_name, count in rows:
        by_size.setdefault(size, {})[tag_name] = count
    assert set(by_size) == {10, 30}
    for tag_name, count in by_size[10].items():
        assert by_size[30][tag_name] >= count
    assert len(by_size[30]) >= len(by_size[10])
    text = inventory_to_csv(rows)
    assert text.splitlines()[0] == "size,tag,count"


def test_inventory_single_file_counts():
    doc = build_doc([
        tok(1, "dogs", "NN", 2, "nsubj"),
        tok(2, "bark", "IN", 0, "root"),
        tok(3, "loud", "NN", 2, "obj"),
    ])
    rows = tag_inventory_evolution([doc], SizeSchedule((1,)))
    assert rows == [(1, "IN", 1), (1, "NN", 2)]


def suggestion_doc(yesterday_tag):
    return build_doc([
        tok(1, "the", "DT", 2, "det"),
        tok(2, "suggestion", "NN", 0, "root"),
        tok(3, "made", "VBN", 2, "acl"),
        tok(4, "yesterday", yesterday_tag, 3, "advmod" if yesterday_tag == "RB" else "obl:tmod"),
        tok(5, "that", "IN", 7, "mark"),
        tok(6, "he", "PRP", 7, "nsubj"),
        tok(7, "resign", "VB", 2, "acl"),
    ])


def test_distance_adjacent_ncc():
    doc = build_doc([
        tok(1, "the", "DT", 2, "det"),
        tok(2, "fact", "NN", 0, "root"),
        tok(3, "that", "IN", 5, "mark"),
        tok(4, "he", "PRP", 5, "nsubj"),
        tok(5, "left", "VBD", 2, "acl"),
    ])
    records, skipped = that_noun_distance(doc, "from_deprel")
    assert skipped == 0
    assert [(r.clause_type, r.distance) for r in records] == [("CST", 1)]


def test_distance_last_noun_semantics():
    # "yesterday" tagged NN is itself the last noun: distance 1
    records, _ = that_noun_distance(suggestion_doc("NN"), "from_deprel")
    assert [(r.clause_type, r.distance) for r in records] == [("CST", 1)]
    # tagged RB it is invisible; the distance reaches back to "suggestion"
    records, _ = that_noun_distance(suggestion_doc("RB"), "from_deprel")
    assert [(r.clause_type, r.distance) for r in records] == [("CST", 3)]


def test_distance_from_xpos():
    doc = build_doc([
        tok(1, "the", "DT", 2, "det"),
        tok(2, "book", "NN", 0, "root"),
        tok(3, "that", "WPR", 5, "obj"),
        tok(4, "you", "PRP", 5, "nsubj"),
        tok(5, "bought", "VBD", 2, "acl:relcl"),
    ])
    records, skipped = that_noun_distance(doc, "from_xpos")
    assert [(r.clause_type, r.distance) for r in records] == [("WPR", 1)]
    assert skipped == 0


def test_distance_skip_tally():
    doc = build_doc([
        tok(1, "that", "CST", 3, "mark"),
        tok(2, "he", "PRP", 3, "nsubj"),
        tok(3, "left", "VBD", 0, "root"),
    ])
    records, skipped = that_noun_distance(doc, "from_xpos")
    assert records == []
    assert skipped == 1


def test_distance_records_plus_skips_accounting(gum_docs):
    doc = gum_docs["dev"]
    records, skipped = that_noun_distance(doc, "from_deprel")
    classified = 0
    from thatsort.relabeler import scan_for_that
    for sent in doc.sentences:
        seen = set()
        for t in sent.tokens:
            if t.deprel in ("acl", "acl:relcl") and t.xpos.startswith("VB"):
                hit = scan_for_that(sent, t, frozenset({"IN", "WDT", "CST", "WPR"}))
                if hit is not None and hit.id not in seen:
                    seen.add(hit.id)
                    classified += 1
    assert len(records) + skipped == classified


def test_distance_ordering_property(gum_docs):
    records = []
    for doc in gum_docs.values():
        got, _ = that_noun_distance(doc, "from_deprel")
        records.extend(got)
    summary = summarize_distances(records)
    assert summary["CST"]["median"] >= summary["WPR"]["median"]
    assert summary["CST"]["max"] > summary["WPR"]["max"]


def test_summarize_constant():
    records = [DistanceRecord("CST", 1, 0, 1)] * 3
    summary = summarize_distances(records)["CST"]
    assert (summary["min"], summary["q1"], summary["median"],
            summary["q3"], summary["max"], summary["count"]) == (1, 1, 1, 1, 1, 3)


def test_summarize_quartiles_linear_interpolation():
    records = [DistanceRecord("WPR", d, 0, 1) for d in (1, 2, 3, 4, 5)]
    summary = summarize_distances(records)["WPR"]
    assert (summary["q1"], summary["median"], summary["q3"]) == (2.0, 3.0, 4.0)


def test_relabel_train_curve_pipeline_shows_cst_wpr_asymmetry():
    """End-to-end retagging experiment on parsed Brown-style files.

    Relative-pronoun evidence dominates the noun+that contexts, so recall for
    WPR on an RC-heavy test set is near-perfect while CST on an NCC-heavy set
    stays poor: the asymmetry the harness is built to expose.
    """
    from thatsort.synth import gold_test_text, parsed_brown_files

    files = [relabel_that(parse_conllu(t))[0] for t in parsed_brown_files(30)]
    rc_doc = parse_conllu(gold_test_text("rc"))
    ncc_doc = parse_conllu(gold_test_text("ncc"))
    tests = [("rc", rc_doc, load_gold_that(rc_doc)),
             ("ncc", ncc_doc, load_gold_that(ncc_doc))]
    rows = learning_curve(files, SizeSchedule((10, 30)), tests)
    assert len(rows) == 2 * 2 * 4
    by_key = {(r.size, r.test, r.tag): r for r in rows}
    wpr = by_key[(30, "rc", "WPR")]
    cst = by_key[(30, "ncc", "CST")]
    assert wpr.recall >= 0.95
    assert cst.recall < 0.3
    assert cst.recall < wpr.recall
    # most gold CST tokens get pulled to WPR, swelling its predicted count
    assert by_key[(30, "ncc", "WPR")].predicted > by_key[(30, "ncc", "WPR")].gold


def test_summarize_empty_type():
    with pytest.raises(EmptyType):
        summarize_distances([])
    with pytest.raises(EmptyType):
        summarize_distances([DistanceRecord("CST", 1, 0, 1)], types=("WPR",))
