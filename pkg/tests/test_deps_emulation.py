import random

import pytest

from conftest import build_doc, build_token_line as tok
from thatsort import emulate_deps, emulate_document, evaluate_deps, frequency_stats
from thatsort.deps_emulation import DepsLabel, deps_contains
from thatsort.errors import AlignmentMismatch, EmptyCorpus


def fact_that_sentence():
    # the fact that he left  ("left" is an adnominal clause on "fact")
    return build_doc([
        tok(1, "the", "DT", 2, "det"),
        tok(2, "fact", "NN", 0, "root"),
        tok(3, "that", "IN", 5, "mark"),
        tok(4, "he", "PRP", 5, "nsubj"),
        tok(5, "left", "VBD", 2, "acl"),
    ]).sentences[0]


def test_acl_that_refinement():
    sent = emulate_deps(fact_that_sentence())
    assert sent.tokens[4].deps == "2:acl:that"
    assert sent.tokens[0].deps == "2:det"
    assert sent.tokens[1].deps == "0:root"


def test_acl_relcl_copy():
    doc = build_doc([
        tok(1, "the", "DT", 2, "det"),
        tok(2, "book", "NN", 0, "root"),
        tok(3, "that", "WDT", 5, "obj"),
        tok(4, "you", "PRP", 5, "nsubj"),
        tok(5, "bought", "VBD", 2, "acl:relcl"),
    ])
    sent = emulate_deps(doc.sentences[0])
    assert sent.tokens[4].deps == "2:acl:relcl"


def test_plain_acl_without_adjacent_that():
    # the issues as he sees them: finite clause, no "that" after the governor
    doc = build_doc([
        tok(1, "the", "DT", 2, "det"),
        tok(2, "issues", "NNS", 0, "root"),
        tok(3, "as", "IN", 5, "mark"),
        tok(4, "he", "PRP", 5, "nsubj"),
        tok(5, "sees", "VBZ", 2, "acl"),
        tok(6, "them", "PRP", 5, "obj"),
    ])
    sent = emulate_deps(doc.sentences[0])
    assert sent.tokens[4].deps == "2:acl"


def test_that_match_is_case_insensitive():
    doc = build_doc([
        tok(1, "fact", "NN", 0, "root"),
        tok(2, "That", "IN", 4, "mark"),
        tok(3, "he", "PRP", 4, "nsubj"),
        tok(4, "left", "VBD", 1, "acl"),
    ])
    sent = emulate_deps(doc.sentences[0])
    assert sent.tokens[3].deps == "1:acl:that"


def test_refinement_requires_plain_acl():
    # same shape but deprel ccomp: never gets the :that suffix
    doc = build_doc([
        tok(1, "said", "VBD", 0, "root"),
        tok(2, "that", "IN", 4, "mark"),
        tok(3, "he", "PRP", 4, "nsubj"),
        tok(4, "left", "VBD", 1, "ccomp"),
    ])
    sent = emulate_deps(doc.sentences[0])
    assert sent.tokens[3].deps == "1:ccomp"


def test_emulation_idempotent_and_only_deps_changed():
    original = fact_that_sentence()
    once = emulate_deps(original)
    twice = emulate_deps(once)
    assert [t.deps for t in once.tokens] == [t.deps for t in twice.tokens]
    for before, after in zip(original.tokens, once.tokens):
        assert (before.form, before.xpos, before.head, before.deprel) == (
            after.form, after.xpos, after.head, after.deprel)
    # input untouched
    assert all(t.deps == "_" for t in original.tokens)


def test_deps_starts_with_own_head_property():
    rng = random.Random(3)
    deprels = ["det", "nsubj", "obj", "acl", "acl:relcl", "amod"]
    for _ in range(30):
        n = rng.randint(1, 7)
        lines = []
        for i in range(1, n + 1):
            head = rng.choice([h for h in range(0, n + 1) if h != i])
            form = rng.choice(["that", "fact", "he", "saw", "red"])
            lines.append(tok(i, form, "XX", head, rng.choice(deprels)))
        sent = emulate_deps(build_doc(lines).sentences[0])
        for t in sent.tokens:
            assert t.deps.startswith("%d:" % t.head)
            if t.deps.endswith("acl:that"):
                assert t.deprel == "acl"


def test_evaluate_identity_is_perfect(gum_docs):
    doc = emulate_document(gum_docs["dev"])
    report = evaluate_deps(doc, doc)
    assert report.accuracy("acl:that") == 1.0
    assert report.accuracy("acl:relcl") == 1.0


def test_evaluate_half_match():
    ref = build_doc(
        [tok(1, "fact", "NN", 0, "root"),
         tok(2, "that", "IN", 3, "mark"),
         tok(3, "left", "VBD", 1, "acl", deps="1:acl:that")],
        [tok(1, "fact", "NN", 0, "root"),
         tok(2, "that", "IN", 3, "mark"),
         tok(3, "left", "VBD", 1, "acl", deps="1:acl:that")],
    )
    pred = build_doc(
        [tok(1, "fact", "NN", 0, "root"),
         tok(2, "that", "IN", 3, "mark"),
         tok(3, "left", "VBD", 1, "acl", deps="1:acl:that")],
        [tok(1, "fact", "NN", 0, "root"),
         tok(2, "that", "IN", 3, "mark"),
         tok(3, "left", "VBD", 1, "acl", deps="1:acl")],
    )
    report = evaluate_deps(pred, ref, labels=("acl:that",))
    row = report.rows[0]
    assert (row.correct, row.total, row.accuracy) == (1, 2, 0.5)


def test_evaluate_alignment_mismatch():
    one = build_doc([tok(1, "a", "X", 0, "root")])
    two = build_doc([tok(1, "a", "X", 0, "root")], [tok(1, "b", "X", 0, "root")])
    with pytest.raises(AlignmentMismatch):
        evaluate_deps(one, two)


def test_emulation_accuracy_floors_on_fixture(gum_docs):
    report = evaluate_deps(emulate_document(gum_docs["test"]), gum_docs["test"])
    assert report.accuracy("acl:relcl") >= 0.92
    assert report.accuracy("acl:that") >= 0.71


def test_frequency_forced_arithmetic():
    # 1000 tokens, 3 of them acl:relcl
    lines = []
    sentences = []
    for s in range(100):
        group = []
        for i in range(1, 11):
            deprel = "acl:relcl" if (s < 3 and i == 10) else "dep"
            head = 0 if i == 1 else 1
            group.append(tok(i, "w%d" % i, "XX", head, deprel if i > 1 else "root"))
        sentences.append(group)
    doc = build_doc(*sentences)
    assert doc.token_count() == 1000
    table = frequency_stats([doc], labels=("acl:relcl",))
    row = table.row("acl:relcl")
    assert (row.count, row.rate) == (3, 3.0)
    assert "acl:relcl,3,3.000" in table.to_csv()


def test_frequency_counts_match_published_profile(gum_docs):
    table = frequency_stats([gum_docs["train"]])
    assert table.row("acl:that").count == 65
    assert table.row("acl:relcl").count == 1419
    assert abs(table.row("acl:that").rate - 0.513) <= 0.01
    assert abs(table.row("acl:relcl").rate - 11.21) <= 0.01


def test_frequency_empty_corpus():
    with pytest.raises(EmptyCorpus):
        frequency_stats([build_doc()])


def test_rc_ncc_ratio_property(gum_docs):
    for doc in gum_docs.values():
        table = frequency_stats([doc])
        assert table.row("acl:relcl").count >= 15 * table.row("acl:that").count


def test_deps_label_parse_format():
    label = DepsLabel.parse("4:acl:that")
    assert (label.head_ref, label.relation) == (4, "acl:that")
    assert str(label) == "4:acl:that"
    assert deps_contains("2:advcl|4:acl:relcl", "acl:relcl")
    assert not deps_contains("4:acl:relcl", "acl")
