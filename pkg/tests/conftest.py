import pytest

from thatsort import parse_conllu
from thatsort.synth import (
    brown_slash_files,
    gold_test_text,
    gum_fixture_documents,
    gum_fixture_text,
)


def build_token_line(tid, form, xpos="_", head=0, deprel="_", upos="_",
                     lemma=None, deps="_", feats="_", misc="_"):
    if lemma is None:
        lemma = form.lower()
    return "\t".join((str(tid), form, lemma, upos, xpos, feats,
                      str(head), deprel, deps, misc))


def build_doc(*sentences):
    """Make a Document from lists of token lines (one list per sentence)."""
    blocks = ["\n".join(lines) for lines in sentences]
    return parse_conllu("\n\n".join(blocks) + "\n")


@pytest.fixture(scope="session")
def gum_docs():
    return gum_fixture_documents()


@pytest.fixture(scope="session")
def gum_texts():
    return {split: gum_fixture_text(split) for split in ("train", "dev", "test")}


@pytest.fixture(scope="session")
def rc_gold_doc():
    return parse_conllu(gold_test_text("rc"), source_name="rc-gold")


@pytest.fixture(scope="session")
def ncc_gold_doc():
    return parse_conllu(gold_test_text("ncc"), source_name="ncc-gold")


@pytest.fixture(scope="session")
def brown_files():
    return brown_slash_files()
