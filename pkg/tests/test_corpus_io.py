import random

import pytest

from thatsort import (
    load_gold_that,
    parse_conllu,
    parse_slash_tagged,
    serialize_conllu,
    serialize_slash_tagged,
)
from thatsort.corpus_io import Document
from thatsort.errors import (
    HeadOutOfRange,
    MalformedLine,
    MissingTagSeparator,
    NonContiguousIds,
    UnknownGoldTag,
)

MINIMAL = "1\tfact\tfact\tNOUN\tNN\t_\t0\troot\t_\t_\n\n"


def test_minimal_row():
    doc = parse_conllu(MINIMAL)
    assert len(doc.sentences) == 1
    tok = doc.sentences[0].tokens[0]
    assert (tok.id, tok.form, tok.head, tok.deprel) == (1, "fact", 0, "root")


def test_minimal_row_round_trips():
    assert serialize_conllu(parse_conllu(MINIMAL)) == MINIMAL


def test_wrong_column_count_reports_line():
    bad = "# ok\n1\tfact\tfact\tNOUN\tNN\t_\t0\troot\t_\n"
    with pytest.raises(MalformedLine) as err:
        parse_conllu(bad)
    assert err.value.line_no == 2


def test_non_contiguous_ids():
    bad = (
        "1\ta\ta\tX\tX\t_\t0\troot\t_\t_\n"
        "3\tb\tb\tX\tX\t_\t1\tdep\t_\t_\n\n"
    )
    with pytest.raises(NonContiguousIds):
        parse_conllu(bad)


def test_head_out_of_range_and_self_head():
    with pytest.raises(HeadOutOfRange):
        parse_conllu("1\ta\ta\tX\tX\t_\t4\tdep\t_\t_\n\n")
    with pytest.raises(HeadOutOfRange):
        parse_conllu("1\ta\ta\tX\tX\t_\t1\tdep\t_\t_\n\n")


def test_bad_head_value_is_malformed():
    with pytest.raises(MalformedLine):
        parse_conllu("1\ta\ta\tX\tX\t_\tx\tdep\t_\t_\n\n")


def test_empty_document_serializes_empty():
    assert serialize_conllu(Document()) == ""


def test_comments_multiword_and_empty_nodes_round_trip():
    text = (
        "# sent_id = demo-1\n"
        "# text = He cannot leave\n"
        "1\tHe\the\tPRON\tPRP\t_\t4\tnsubj\t4:nsubj\t_\n"
        "2-3\tcannot\t_\t_\t_\t_\t_\t_\t_\tSpaceAfter=No\n"
        "2\tcan\tcan\tAUX\tMD\t_\t4\taux\t4:aux\t_\n"
        "3\tnot\tnot\tPART\tRB\t_\t4\tadvmod\t4:advmod\t_\n"
        "4\tleave\tleave\tVERB\tVB\t_\t0\troot\t0:root\t_\n"
        "4.1\tgone\tgo\tVERB\tVBN\t_\t_\t_\t4:conj\t_\n"
        "5\t.\t.\tPUNCT\t.\t_\t4\tpunct\t4:punct\t_\n"
        "\n"
    )
    doc = parse_conllu(text)
    sent = doc.sentences[0]
    assert [t.id for t in sent.tokens] == [1, 2, 3, 4, 5]
    assert sent.multiword_ranges[0].start == 2
    assert sent.multiword_ranges[0].end == 3
    assert sent.multiword_ranges[0].form == "cannot"
    assert sent.empty_nodes == [(4, "4.1\tgone\tgo\tVERB\tVBN\t_\t_\t_\t4:conj\t_")]
    assert serialize_conllu(doc) == text


def test_serialize_is_idempotent_on_fixture(gum_texts):
    text = gum_texts["dev"]
    once = serialize_conllu(parse_conllu(text))
    assert serialize_conllu(parse_conllu(once)) == once


def test_fixture_round_trip_all_splits(gum_texts):
    for split, text in gum_texts.items():
        assert serialize_conllu(parse_conllu(text)) == text, split


def test_crlf_normalization():
    crlf = MINIMAL.replace("\n", "\r\n")
    assert serialize_conllu(parse_conllu(crlf)) == MINIMAL


def test_slash_basic():
    doc = parse_slash_tagged("The/DT fact/NN that/IN\n")
    sent = doc.sentences[0]
    assert [t.xpos for t in sent.tokens] == ["DT", "NN", "IN"]
    assert [t.form for t in sent.tokens] == ["The", "fact", "that"]
    assert all(t.head == 0 and t.lemma == "_" for t in sent.tokens)


def test_slash_missing_separator():
    with pytest.raises(MissingTagSeparator) as err:
        parse_slash_tagged("The/DT fact here/NN".replace("here", ""))
    assert err.value.line_no == 1


def test_slash_item_without_slash():
    with pytest.raises(MissingTagSeparator):
        parse_slash_tagged("fact\n")


def test_slash_empty_form_or_tag():
    with pytest.raises(MissingTagSeparator):
        parse_slash_tagged("fact/\n")
    with pytest.raises(MissingTagSeparator):
        parse_slash_tagged("/NN\n")


def test_slash_splits_on_last_slash():
    doc = parse_slash_tagged("1/2/CD went/VBD\n")
    tok = doc.sentences[0].tokens[0]
    assert (tok.form, tok.xpos) == ("1/2", "CD")


def test_slash_round_trip():
    text = "The/DT 1/2/CD answer/NN ./.\nhe/PRP left/VBD\n"
    doc = parse_slash_tagged(text)
    assert serialize_slash_tagged(doc) == text


def test_gold_counts_rc_fixture(rc_gold_doc):
    records = load_gold_that(rc_gold_doc)
    counts = {}
    for rec in records:
        counts[rec.gold_tag] = counts.get(rec.gold_tag, 0) + 1
    assert counts == {"WPR": 189, "CST": 26, "DT": 15}


def test_gold_counts_ncc_fixture(ncc_gold_doc):
    records = load_gold_that(ncc_gold_doc)
    counts = {}
    for rec in records:
        counts[rec.gold_tag] = counts.get(rec.gold_tag, 0) + 1
    assert counts == {"CST": 194, "WPR": 17, "DT": 14}


def test_gold_records_point_at_that(rc_gold_doc):
    for rec in load_gold_that(rc_gold_doc):
        tok = rc_gold_doc.sentences[rec.sentence_index].token_by_id(rec.token_index)
        assert tok.form.lower() == "that"


def test_no_that_yields_empty():
    assert load_gold_that(parse_conllu(MINIMAL)) == []


def test_unknown_gold_tag():
    text = "1\tthat\tthat\tX\tXX\t_\t0\troot\t_\t_\n\n"
    with pytest.raises(UnknownGoldTag):
        load_gold_that(parse_conllu(text))


def test_random_documents_round_trip():
    rng = random.Random(7)
    forms = ["alpha", "beta", "gamma", "delta", "it's", "1/2", "naïve"]
    for _ in range(25):
        lines = []
        for s in range(rng.randint(1, 4)):
            if rng.random() < 0.5:
                lines.append("# sent_id = r-%d" % s)
            n = rng.randint(1, 6)
            for i in range(1, n + 1):
                head = rng.choice([h for h in range(0, n + 1) if h != i])
                lines.append(
                    "%d\t%s\t_\t_\tX%d\t_\t%d\tdep\t_\t_"
                    % (i, rng.choice(forms), rng.randint(0, 3), head)
                )
            lines.append("")
        text = "\n".join(lines) + "\n"
        assert serialize_conllu(parse_conllu(text)) == text
