from thatsort import parse_conllu, parse_slash_tagged
from thatsort.deps_emulation import deps_contains
from thatsort.synth import (
    GUM_SPLIT_SPECS,
    brown_slash_files,
    gum_fixture_text,
    uniform_evidence_files,
)


def test_split_token_totals(gum_docs):
    for split, doc in gum_docs.items():
        assert doc.token_count() == GUM_SPLIT_SPECS[split]["total"], split


def test_split_label_counts(gum_docs):
    for split, doc in gum_docs.items():
        spec = GUM_SPLIT_SPECS[split]
        relcl = sum(1 for s in doc.sentences for t in s.tokens
                    if t.deprel == "acl:relcl")
        that = sum(1 for s in doc.sentences for t in s.tokens
                   if deps_contains(t.deps, "acl:that"))
        assert relcl == spec["relcl"]
        assert that == spec["ncc"]


def test_generation_is_deterministic():
    assert gum_fixture_text("dev") == gum_fixture_text("dev")
    first = brown_slash_files()
    second = brown_slash_files()
    assert first == second


def test_fixture_contains_hard_parser_shapes(gum_texts):
    text = gum_texts["train"]
    assert "\ncannot\t" not in text  # ranges keep their id column
    assert "2-3\tcannot" in text
    assert "5.1\tbought" in text
    doc = parse_conllu(text)
    assert any(s.multiword_ranges for s in doc.sentences)
    assert any(s.empty_nodes for s in doc.sentences)


def test_brown_files_parse_and_carry_that_variety(brown_files):
    assert len(brown_files) == 50
    tags = set()
    for text in brown_files[:10]:
        doc = parse_slash_tagged(text)
        for sent in doc.sentences:
            for t in sent.tokens:
                if t.form == "that":
                    tags.add(t.xpos)
    assert tags == {"IN", "WDT", "DT"}


def test_parsed_brown_files_parse_and_vary():
    from thatsort.synth import parsed_brown_files

    files = parsed_brown_files(5)
    assert files == parsed_brown_files(5)
    assert len(set(files)) == 5
    for text in files:
        doc = parse_conllu(text)
        deprels = {t.deprel for s in doc.sentences for t in s.tokens}
        assert "acl" in deprels and "acl:relcl" in deprels


def test_uniform_files_are_identical():
    files = uniform_evidence_files(5)
    assert len(set(files)) == 1
    doc = parse_conllu(files[0])
    acl_verbs = [t for s in doc.sentences for t in s.tokens if t.deprel == "acl"]
    relcl_verbs = [t for s in doc.sentences for t in s.tokens if t.deprel == "acl:relcl"]
    assert len(acl_verbs) == 4
    assert len(relcl_verbs) == 4
