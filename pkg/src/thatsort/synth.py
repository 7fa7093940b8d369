"""Deterministic fixture corpora.

Real treebanks cannot be redistributed with the package, so these builders
produce GUM-style CoNLL-U splits, Brown-style slash-tagged files and gold
test sets with the same statistical profile (label counts, per-1000-token
rates, clause-type mix). Everything is seeded and cached: the same call
always returns the same bytes.

Use scripts/fetch_gum.py to run the same experiments against a real GUM
checkout instead (THATSORT_DATA_DIR points the tools at it).
"""

import random
from functools import lru_cache

from .corpus_io import parse_conllu

# Per-split targets: total tokens are chosen so the label rates land on the
# published per-1000 figures; counts are exact.
GUM_SPLIT_SPECS = {
    "train": dict(seed=11, total=126600, relcl=1419, relcl_multihead=100,
                  ncc=65, ncc_nonadjacent=14, as_clause=20, vcomp=40, deictic=25),
    "dev": dict(seed=12, total=19970, relcl=258, relcl_multihead=18,
                ncc=13, ncc_nonadjacent=3, as_clause=5, vcomp=8, deictic=6),
    "test": dict(seed=13, total=20180, relcl=216, relcl_multihead=10,
                 ncc=14, ncc_nonadjacent=3, as_clause=5, vcomp=8, deictic=6),
}

_PRON = ["He", "She", "They", "We"]
_TRANS_VBD = ["read", "noted", "saw", "heard", "found", "mentioned", "reviewed",
              "rejected", "accepted", "questioned", "supported", "recorded"]
_NOUNS = ["book", "letter", "paper", "report", "survey", "review", "article",
          "study", "plan", "record", "message", "document", "proposal", "essay"]
_SHELL_NOUNS = ["fact", "claim", "idea", "belief", "rumor", "suggestion",
                "notion", "promise", "statement", "argument"]
_INTRANS_VBD = ["left", "resigned", "lied", "agreed", "refused", "arrived",
                "vanished", "failed", "succeeded", "objected"]
_CLAUSE_VBD = ["bought", "borrowed", "wrote", "praised", "ignored", "admired",
               "repaired", "examined", "quoted", "copied"]
_FILLER_NOUNS = ["teacher", "doctor", "student", "officer", "lawyer", "farmer",
                 "artist", "driver", "builder", "painter", "singer", "editor",
                 "engine", "garden", "market", "village", "station", "bridge"]
_FILLER_VBD = ["arrived", "vanished", "failed", "succeeded", "waited", "agreed",
               "objected", "smiled", "nodded", "paused"]
_ADJS = ["old", "young", "quick", "small", "large", "bright", "dark", "quiet",
         "heavy", "light", "narrow", "wide", "warm", "cold", "fresh", "strange",
         "busy", "calm", "empty", "full"]
_GAP_ADVS = ["there", "recently", "earlier", "elsewhere", "quietly"]


def _tok(tid, form, upos, xpos, head, deprel, deps=None, lemma=None):
    if deps is None:
        deps = "%d:%s" % (head, deprel)
    if lemma is None:
        lemma = form.lower()
    return "\t".join((str(tid), form, lemma, upos, xpos, "_", str(head), deprel, deps, "_"))


def _punct(tid, head):
    return _tok(tid, ".", "PUNCT", ".", head, "punct", lemma=".")


class _Block:
    __slots__ = ("lines", "forms")

    def __init__(self, lines, forms):
        self.lines = lines
        self.forms = forms


def _block(rows):
    lines = [r for r in rows]
    forms = [r.split("\t")[1] for r in rows if "-" not in r.split("\t", 1)[0]
             and "." not in r.split("\t", 1)[0]]
    return _Block(lines, forms)


def _filler_sentence(rng, k):
    """The (ADJ...) NOUN VERB . -- any length >= 4."""
    n_adj = k - 4
    noun_id = 2 + n_adj
    verb_id = noun_id + 1
    rows = [_tok(1, "The", "DET", "DT", noun_id, "det", lemma="the")]
    for i in range(n_adj):
        rows.append(_tok(2 + i, rng.choice(_ADJS), "ADJ", "JJ", noun_id, "amod"))
    rows.append(_tok(noun_id, rng.choice(_FILLER_NOUNS), "NOUN", "NN", verb_id, "nsubj"))
    rows.append(_tok(verb_id, rng.choice(_FILLER_VBD), "VERB", "VBD", 0, "root"))
    rows.append(_punct(verb_id + 1, verb_id))
    return _block(rows)


def _rc_sentence(rng, multihead=False, that_xpos="WDT"):
    """PRON VERB the NOUN that PRON VERB .  (relative clause on the object)."""
    deps = "2:advcl|4:acl:relcl" if multihead else "4:acl:relcl"
    rows = [
        _tok(1, rng.choice(_PRON), "PRON", "PRP", 2, "nsubj"),
        _tok(2, rng.choice(_TRANS_VBD), "VERB", "VBD", 0, "root"),
        _tok(3, "the", "DET", "DT", 4, "det"),
        _tok(4, rng.choice(_NOUNS), "NOUN", "NN", 2, "obj"),
        _tok(5, "that", "PRON", that_xpos, 7, "obj"),
        _tok(6, "you", "PRON", "PRP", 7, "nsubj"),
        _tok(7, rng.choice(_CLAUSE_VBD), "VERB", "VBD", 4, "acl:relcl", deps=deps),
        _punct(8, 2),
    ]
    return _block(rows)


def _ncc_sentence(rng, gap=0, that_xpos="IN"):
    """PRON VERB the SHELL [VBN ADV*] that PRON VERB .  (noun complement).

    gap > 0 inserts a participle plus adverbs between the governing noun and
    "that", so the reconstructed deps column cannot see the complementizer.
    """
    rows = [
        _tok(1, rng.choice(_PRON), "PRON", "PRP", 2, "nsubj"),
        _tok(2, rng.choice(_TRANS_VBD), "VERB", "VBD", 0, "root"),
        _tok(3, "the", "DET", "DT", 4, "det"),
        _tok(4, rng.choice(_SHELL_NOUNS), "NOUN", "NN", 2, "obj"),
    ]
    nid = 5
    if gap:
        rows.append(_tok(nid, "made", "VERB", "VBN", 4, "acl"))
        nid += 1
        for _ in range(gap - 1):
            rows.append(_tok(nid, rng.choice(_GAP_ADVS), "ADV", "RB", nid - 1, "advmod"))
            nid += 1
    clause_verb = nid + 2
    rows.append(_tok(nid, "that", "SCONJ", that_xpos, clause_verb, "mark"))
    rows.append(_tok(nid + 1, "she", "PRON", "PRP", clause_verb, "nsubj"))
    rows.append(_tok(nid + 2, rng.choice(_INTRANS_VBD), "VERB", "VBD", 4, "acl",
                     deps="4:acl:that"))
    rows.append(_punct(nid + 3, 2))
    return _block(rows)


def _as_clause_sentence(rng):
    """PRON VERB the NOUN as PRON VERB them .  (plain acl, no "that")."""
    rows = [
        _tok(1, rng.choice(_PRON), "PRON", "PRP", 2, "nsubj"),
        _tok(2, "raised", "VERB", "VBD", 0, "root"),
        _tok(3, "the", "DET", "DT", 4, "det"),
        _tok(4, "issues", "NOUN", "NNS", 2, "obj"),
        _tok(5, "as", "SCONJ", "IN", 7, "mark"),
        _tok(6, "she", "PRON", "PRP", 7, "nsubj"),
        _tok(7, "sees", "VERB", "VBZ", 4, "acl"),
        _tok(8, "them", "PRON", "PRP", 7, "obj"),
        _punct(9, 2),
    ]
    return _block(rows)


def _vcomp_sentence(rng):
    """PRON said that PRON VERB .  (verbal that-clause, ccomp)."""
    rows = [
        _tok(1, rng.choice(_PRON), "PRON", "PRP", 2, "nsubj"),
        _tok(2, "said", "VERB", "VBD", 0, "root"),
        _tok(3, "that", "SCONJ", "IN", 5, "mark"),
        _tok(4, "she", "PRON", "PRP", 5, "nsubj"),
        _tok(5, rng.choice(_INTRANS_VBD), "VERB", "VBD", 2, "ccomp"),
        _punct(6, 2),
    ]
    return _block(rows)


def _deictic_sentence(rng, that_xpos="DT"):
    """PRON VERB that NOUN .  (deictic determiner "that")."""
    rows = [
        _tok(1, rng.choice(_PRON), "PRON", "PRP", 2, "nsubj"),
        _tok(2, rng.choice(_TRANS_VBD), "VERB", "VBD", 0, "root"),
        _tok(3, "that", "DET", that_xpos, 4, "det"),
        _tok(4, rng.choice(_NOUNS), "NOUN", "NN", 2, "obj"),
        _punct(5, 2),
    ]
    return _block(rows)


def _mwt_sentence(rng):
    """Sentence with a multiword-token range line ("cannot")."""
    mwt = "\t".join(("2-3", "cannot", "_", "_", "_", "_", "_", "_", "_", "_"))
    rows = [
        _tok(1, rng.choice(_PRON), "PRON", "PRP", 4, "nsubj"),
        _tok(2, "can", "AUX", "MD", 4, "aux", lemma="can"),
        _tok(3, "not", "PART", "RB", 4, "advmod", lemma="not"),
        _tok(4, "leave", "VERB", "VB", 0, "root"),
        _punct(5, 4),
    ]
    block = _block(rows)
    block.lines.insert(1, mwt)
    return block


def _empty_node_sentence(rng):
    """Gapped coordination carrying an empty-node line (id 5.1)."""
    rows = [
        _tok(1, "She", "PRON", "PRP", 2, "nsubj"),
        _tok(2, "bought", "VERB", "VBD", 0, "root"),
        _tok(3, "books", "NOUN", "NNS", 2, "obj"),
        _tok(4, "and", "CCONJ", "CC", 5, "cc"),
        _tok(5, "he", "PRON", "PRP", 2, "conj"),
        _tok(6, "magazines", "NOUN", "NNS", 5, "orphan"),
        _punct(7, 2),
    ]
    block = _block(rows)
    block.lines.insert(5, "\t".join(
        ("5.1", "bought", "buy", "VERB", "VBD", "_", "_", "_", "2:conj:and", "_")))
    return block


def _pad_with_fillers(rng, blocks, used, total):
    remaining = total - used
    if remaining < 0:
        raise ValueError("structural sentences exceed the token target")
    while remaining > 0:
        if remaining <= 18:
            k = remaining
        else:
            k = min(rng.randint(4, 12), remaining - 4)
        blocks.append(_filler_sentence(rng, k))
        remaining -= k


def _assemble(blocks, doc_id):
    out = ["# newdoc id = %s" % doc_id]
    for idx, block in enumerate(blocks, start=1):
        out.append("# sent_id = %s-%d" % (doc_id, idx))
        out.append("# text = %s" % " ".join(block.forms))
        out.extend(block.lines)
        out.append("")
    return "\n".join(out) + "\n"


@lru_cache(maxsize=None)
def gum_fixture_text(split):
    """One GUM-style CoNLL-U split with the pinned label/token profile."""
    spec = GUM_SPLIT_SPECS[split]
    rng = random.Random(spec["seed"])
    blocks = []
    for i in range(spec["relcl"]):
        blocks.append(_rc_sentence(rng, multihead=i < spec["relcl_multihead"]))
    n_adjacent = spec["ncc"] - spec["ncc_nonadjacent"]
    for _ in range(n_adjacent):
        blocks.append(_ncc_sentence(rng, gap=0))
    for _ in range(spec["ncc_nonadjacent"]):
        blocks.append(_ncc_sentence(rng, gap=rng.choice((2, 3))))
    for _ in range(spec["as_clause"]):
        blocks.append(_as_clause_sentence(rng))
    for _ in range(spec["vcomp"]):
        blocks.append(_vcomp_sentence(rng))
    for _ in range(spec["deictic"]):
        blocks.append(_deictic_sentence(rng))
    for _ in range(2):
        blocks.append(_mwt_sentence(rng))
        blocks.append(_empty_node_sentence(rng))
    used = sum(len(b.forms) for b in blocks)
    _pad_with_fillers(rng, blocks, used, spec["total"])
    rng.shuffle(blocks)
    return _assemble(blocks, "fixture-%s" % split)


def gum_fixture_documents():
    return {
        split: parse_conllu(gum_fixture_text(split), source_name="fixture-%s" % split)
        for split in GUM_SPLIT_SPECS
    }


@lru_cache(maxsize=None)
def gold_test_text(kind):
    """Gold test sets: CoNLL-U with the gold tag of every "that" in xpos.

    "rc" carries 189 WPR / 26 CST / 15 DT; "ncc" carries 194 CST / 17 WPR /
    14 DT, matching the published gold column totals.
    """
    n_wpr_like, n_cst_like, n_dt = {
        "rc": (189, 26, 15),
        "ncc": (17, 194, 14),
    }[kind]
    rng = random.Random(21 if kind == "rc" else 22)
    blocks = []
    for _ in range(n_wpr_like):
        blocks.append(_rc_sentence(rng, that_xpos="WPR"))
    for i in range(n_cst_like):
        blocks.append(_ncc_sentence(rng, gap=(2 if i % 12 == 0 else 0), that_xpos="CST"))
    for _ in range(n_dt):
        blocks.append(_deictic_sentence(rng, that_xpos="DT"))
    rng.shuffle(blocks)
    return _assemble(blocks, "goldtest-%s" % kind)


# ---------------------------------------------------------------------------
# Brown-style slash-tagged files


_B_DET = ["the", "a", "this", "every", "some", "no"]
_B_NOUN = ["report", "window", "garden", "teacher", "doctor", "student", "river",
           "market", "letter", "engine", "mountain", "village", "officer",
           "artist", "lawyer", "farmer", "singer", "builder", "painter",
           "driver", "sister", "brother", "morning", "evening", "meeting",
           "dinner", "library", "kitchen", "bridge", "castle", "forest",
           "valley", "harbor", "station", "ticket", "journal",
           "record", "answer", "plan", "study", "visit", "watch", "claim",
           "notice", "promise", "support"]
_B_SHELL = ["fact", "claim", "idea", "belief", "proof", "story", "promise", "answer"]
_B_VSTEM = ["walk", "open", "close", "jump", "talk", "call", "help", "follow",
            "join", "start", "record", "answer", "visit", "watch", "claim",
            "notice", "support", "paint", "clean", "cook", "push", "pull",
            "lift", "turn", "warn", "point", "repair", "deliver", "print",
            "sign", "plan", "study"]
_B_JJ = ["quick", "old", "young", "small", "large", "bright", "dark", "quiet",
         "heavy", "light", "narrow", "wide", "deep", "warm", "cold", "fresh",
         "strange", "simple", "busy", "calm", "empty", "full", "green", "blue",
         "red", "sharp", "smooth", "rough", "tall", "short"]
_B_RB = ["quickly", "slowly", "quietly", "carefully", "suddenly", "often",
         "always", "never", "soon", "here", "there", "early", "late"]
_B_IN = ["of", "in", "on", "at", "with", "from", "under", "over", "near",
         "through", "behind"]
_B_PRP = ["he", "she", "they", "we", "you", "it"]
_B_POSS = ["his", "her", "their", "our", "your", "its"]
_B_CC = ["and", "but", "or"]
_B_MD = ["can", "will", "must", "may", "should"]
_B_NNP = ["Parker", "Morgan", "Hunter", "Bailey", "Carter", "Mason", "Harper",
          "Sawyer"]
_B_SYL = ["vel", "mor", "tan", "rek", "sol", "bin", "gar", "lun", "pex", "dov"]


def _b_noun(rng):
    return rng.choice(_B_NOUN), "NN"


def _b_vbd(rng):
    return rng.choice(_B_VSTEM) + "ed", "VBD"


def _b_vbz(rng):
    return rng.choice(_B_VSTEM) + "s", "VBZ"


def _b_det_np(rng, adj_prob=0.35):
    out = [(rng.choice(_B_DET), "DT")]
    if rng.random() < adj_prob:
        out.append((rng.choice(_B_JJ), "JJ"))
    out.append(_b_noun(rng))
    return out


def _b_oov_form(rng, suffix):
    return rng.choice(_B_SYL) + rng.choice(_B_SYL) + suffix


def _brown_sentence(rng):
    """One slash-style tagged sentence drawn from a fixed template mix."""
    roll = rng.randrange(100)
    s = []
    if roll < 15:
        s += _b_det_np(rng) + [_b_vbd(rng)] + _b_det_np(rng)
    elif roll < 25:
        s += [(rng.choice(_B_PRP), "PRP"), _b_vbd(rng), (rng.choice(_B_IN), "IN")]
        s += _b_det_np(rng)
    elif roll < 33:
        s += _b_det_np(rng) + [_b_vbz(rng), (rng.choice(_B_RB), "RB")]
    elif roll < 41:
        s += [(rng.choice(_B_PRP), "PRP"), (rng.choice(_B_MD), "MD"),
              (rng.choice(_B_VSTEM), "VB")] + _b_det_np(rng)
    elif roll < 48:
        s += _b_det_np(rng) + [(rng.choice(_B_IN), "IN")] + _b_det_np(rng)
        s += [_b_vbd(rng)]
    elif roll < 56:
        # relative clause: ... the NOUN that you VERBED ...
        s += [(rng.choice(_B_PRP), "PRP"), _b_vbd(rng), (rng.choice(_B_DET), "DT"),
              _b_noun(rng), ("that", "WDT"), (rng.choice(_B_PRP), "PRP"), _b_vbd(rng)]
    elif roll < 62:
        # noun complement clause: ... the SHELL that they VERBED ...
        s += [(rng.choice(_B_PRP), "PRP"), _b_vbd(rng), (rng.choice(_B_DET), "DT"),
              (rng.choice(_B_SHELL), "NN"), ("that", "IN"), (rng.choice(_B_PRP), "PRP"),
              _b_vbd(rng)]
    elif roll < 67:
        # verbal that-clause
        s += [(rng.choice(_B_PRP), "PRP"), _b_vbd(rng), ("that", "IN"),
              (rng.choice(_B_PRP), "PRP"), _b_vbd(rng)]
    elif roll < 71:
        # deictic that
        s += [(rng.choice(_B_PRP), "PRP"), _b_vbd(rng), ("that", "DT"), _b_noun(rng)]
    elif roll < 77:
        s += [(rng.choice(_B_POSS), "PRP$"), _b_noun(rng), _b_vbd(rng),
              (rng.choice(_B_RB), "RB")]
    elif roll < 80:
        s += [(rng.choice(_B_DET), "DT"), (rng.choice(_B_VSTEM) + "ing", "VBG"),
              _b_noun(rng), _b_vbd(rng)]
    elif roll < 85:
        s += [(rng.choice(_B_NNP), "NNP"), _b_vbd(rng)] + _b_det_np(rng)
    elif roll < 89:
        s += _b_det_np(rng) + [(rng.choice(_B_VSTEM) + "ed", "VBN"),
                               (rng.choice(_B_IN), "IN")] + _b_det_np(rng) + [_b_vbd(rng)]
    elif roll < 93:
        s += [(rng.choice(_B_PRP), "PRP"), _b_vbd(rng)] + _b_det_np(rng)
        s += [(",", ","), (rng.choice(_B_CC), "CC"), (rng.choice(_B_PRP), "PRP"),
              _b_vbd(rng)] + _b_det_np(rng)
    elif roll < 96:
        s += [("there", "EX"), _b_vbz(rng)] + _b_det_np(rng)
        s += [(rng.choice(_B_IN), "IN")] + _b_det_np(rng)
    else:
        # out-of-vocabulary material with regular suffixes
        sub = rng.randrange(3)
        if sub == 0:
            s += [(rng.choice(_B_DET), "DT"), (_b_oov_form(rng, "ness"), "NN"),
                  _b_vbd(rng), (rng.choice(_B_RB), "RB")]
        elif sub == 1:
            s += [(rng.choice(_B_PRP), "PRP"), _b_vbd(rng),
                  (_b_oov_form(rng, "ly"), "RB")]
        else:
            s += [(rng.choice(_B_DET), "DT"), (_b_oov_form(rng, "ish"), "JJ"),
                  _b_noun(rng), _b_vbd(rng)]
    s.append((".", "."))
    return s


@lru_cache(maxsize=None)
def brown_slash_files(n_files=50, sentences_per_file=110):
    """Brown-style slash-tagged file texts, deterministic per index."""
    files = []
    for file_idx in range(n_files):
        rng = random.Random(3000 + file_idx)
        lines = []
        for _ in range(sentences_per_file):
            lines.append(" ".join("%s/%s" % (f, t) for f, t in _brown_sentence(rng)))
        files.append("\n".join(lines) + "\n")
    return files


@lru_cache(maxsize=None)
def parsed_brown_files(n_files=30, sentences_per_file=60):
    """Dependency-parsed Brown-style CoNLL-U files for retagging experiments.

    Each file mixes relative clauses (that/WDT), noun complement clauses
    (that/IN), verbal that-clauses, deictic that/DT and fillers, with heads
    and deprels filled in, so the relabel -> train -> curve pipeline can run
    on them end to end.
    """
    files = []
    for file_idx in range(n_files):
        rng = random.Random(7000 + file_idx)
        blocks = []
        for _ in range(sentences_per_file):
            roll = rng.randrange(100)
            if roll < 14:
                blocks.append(_rc_sentence(rng))
            elif roll < 24:
                blocks.append(_ncc_sentence(rng, gap=0 if roll < 22 else 2))
            elif roll < 32:
                blocks.append(_vcomp_sentence(rng))
            elif roll < 39:
                blocks.append(_deictic_sentence(rng))
            elif roll < 44:
                blocks.append(_as_clause_sentence(rng))
            else:
                blocks.append(_filler_sentence(rng, rng.randint(4, 10)))
        files.append(_assemble(blocks, "parsed-brown-%03d" % file_idx))
    return files


# ---------------------------------------------------------------------------
# Uniform-evidence corpus for learning-curve checks


_UNIFORM_SHELLS = ["fact", "claim", "idea", "belief"]
_UNIFORM_PLURALS = ["books", "letters", "papers", "tickets"]


def _uniform_blocks(that_tags):
    """The fixed 12-sentence inventory; that_tags picks pre- or post-relabel tags."""
    ncc_tag, rc_tag = that_tags
    blocks = []
    for shell in _UNIFORM_SHELLS:
        rows = [
            _tok(1, "He", "PRON", "PRP", 2, "nsubj"),
            _tok(2, "noted", "VERB", "VBD", 0, "root"),
            _tok(3, "the", "DET", "DT", 4, "det"),
            _tok(4, shell, "NOUN", "NN", 2, "obj"),
            _tok(5, "that", "SCONJ", ncc_tag, 7, "mark"),
            _tok(6, "she", "PRON", "PRP", 7, "nsubj"),
            _tok(7, "left", "VERB", "VBD", 4, "acl", deps="4:acl:that"),
            _punct(8, 2),
        ]
        blocks.append(_block(rows))
    for plural in _UNIFORM_PLURALS:
        rows = [
            _tok(1, "He", "PRON", "PRP", 2, "nsubj"),
            _tok(2, "read", "VERB", "VBD", 0, "root"),
            _tok(3, "two", "NUM", "CD", 4, "nummod"),
            _tok(4, plural, "NOUN", "NNS", 2, "obj"),
            _tok(5, "that", "PRON", rc_tag, 7, "obj"),
            _tok(6, "you", "PRON", "PRP", 7, "nsubj"),
            _tok(7, "bought", "VERB", "VBD", 4, "acl:relcl"),
            _punct(8, 2),
        ]
        blocks.append(_block(rows))
    for noun in ("book", "window"):
        rows = [
            _tok(1, "He", "PRON", "PRP", 2, "nsubj"),
            _tok(2, "opened", "VERB", "VBD", 0, "root"),
            _tok(3, "that", "DET", "DT", 4, "det"),
            _tok(4, noun, "NOUN", "NN", 2, "obj"),
            _punct(5, 2),
        ]
        blocks.append(_block(rows))
    for noun, verb in (("teacher", "arrived"), ("doctor", "agreed")):
        rows = [
            _tok(1, "The", "DET", "DT", 2, "det", lemma="the"),
            _tok(2, noun, "NOUN", "NN", 3, "nsubj"),
            _tok(3, verb, "VERB", "VBD", 0, "root"),
            _punct(4, 3),
        ]
        blocks.append(_block(rows))
    return blocks


@lru_cache(maxsize=None)
def uniform_evidence_file_text():
    """One training file: identical CST/WPR evidence, pre-relabel tags."""
    return _assemble(_uniform_blocks(("IN", "WDT")), "uniform-train")


def uniform_evidence_files(n_files):
    """n identical training files (the uniform-evidence corpus)."""
    return [uniform_evidence_file_text()] * n_files


@lru_cache(maxsize=None)
def uniform_evidence_gold_text():
    """Matching gold test set: the same sentences with gold CST/WPR tags."""
    return _assemble(_uniform_blocks(("CST", "WPR")), "uniform-gold")


@lru_cache(maxsize=None)
def qualitative_fixture_text():
    """Hand-built regression sentences covering the hard "that" patterns:

    a complement clause whose content clause carries its own object, an
    existential matrix with an NCC, a sentence mixing two deictic "that"
    with a relative clause, and a deictic "that" inside a PP that nothing
    may retag.
    """
    blocks = []
    blocks.append(_block([
        _tok(1, "The", "DET", "DT", 2, "det", lemma="the"),
        _tok(2, "statement", "NOUN", "NN", 9, "nsubj"),
        _tok(3, "that", "SCONJ", "IN", 6, "mark"),
        _tok(4, "the", "DET", "DT", 5, "det"),
        _tok(5, "tribunal", "NOUN", "NN", 6, "nsubj"),
        _tok(6, "made", "VERB", "VBD", 2, "acl", deps="2:acl:that"),
        _tok(7, "an", "DET", "DT", 8, "det", lemma="a"),
        _tok(8, "error", "NOUN", "NN", 6, "obj"),
        _tok(9, "means", "VERB", "VBZ", 0, "root"),
        _tok(10, "nothing", "PRON", "NN", 9, "obj"),
        _punct(11, 9),
    ]))
    blocks.append(_block([
        _tok(1, "There", "PRON", "EX", 2, "expl"),
        _tok(2, "was", "VERB", "VBD", 0, "root"),
        _tok(3, "no", "DET", "DT", 4, "det"),
        _tok(4, "dispute", "NOUN", "NN", 2, "nsubj"),
        _tok(5, "that", "SCONJ", "IN", 7, "mark"),
        _tok(6, "Bunn", "PROPN", "NNP", 7, "nsubj"),
        _tok(7, "acted", "VERB", "VBD", 4, "acl", deps="4:acl:that"),
        _tok(8, "with", "ADP", "IN", 9, "case"),
        _tok(9, "authority", "NOUN", "NN", 7, "obl"),
        _punct(10, 2),
    ]))
    blocks.append(_block([
        _tok(1, "that", "DET", "DT", 2, "det"),
        _tok(2, "meeting", "NOUN", "NN", 5, "nsubj"),
        _tok(3, "that", "DET", "DT", 4, "det"),
        _tok(4, "morning", "NOUN", "NN", 2, "nmod:tmod"),
        _tok(5, "was", "VERB", "VBD", 0, "root"),
        _tok(6, "about", "ADP", "IN", 9, "case"),
        _tok(7, "a", "DET", "DT", 9, "det"),
        _tok(8, "public", "ADJ", "JJ", 9, "amod"),
        _tok(9, "case", "NOUN", "NN", 5, "obl"),
        _tok(10, "that", "PRON", "WDT", 13, "obj"),
        _tok(11, "we", "PRON", "PRP", 13, "nsubj"),
        _tok(12, "might", "AUX", "MD", 13, "aux"),
        _tok(13, "make", "VERB", "VB", 9, "acl:relcl"),
        _punct(14, 5),
    ]))
    blocks.append(_block([
        _tok(1, "one", "PRON", "PRP", 4, "nsubj"),
        _tok(2, "does", "AUX", "VBZ", 4, "aux", lemma="do"),
        _tok(3, "not", "PART", "RB", 4, "advmod"),
        _tok(4, "affirm", "VERB", "VB", 0, "root"),
        _tok(5, "an", "DET", "DT", 7, "det", lemma="a"),
        _tok(6, "evil", "ADJ", "JJ", 7, "amod"),
        _tok(7, "order", "NOUN", "NN", 4, "obj"),
        _tok(8, "in", "ADP", "IN", 10, "case"),
        _tok(9, "that", "DET", "DT", 10, "det"),
        _tok(10, "sense", "NOUN", "NN", 4, "obl"),
        _punct(11, 4),
    ]))
    return _assemble(blocks, "qualitative")
