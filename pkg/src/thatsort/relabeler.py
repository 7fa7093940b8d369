"""Retag postnominal "that" as CST or WPR from dependency evidence.

Every verb attached as an adnominal clause (deprel acl or acl:relcl) triggers
a leftward scan for the "that" introducing its clause; a hit is retagged CST
for plain acl (noun complement clause) or WPR for acl:relcl (relative clause).
Only tags in the policy's retaggable set may be overwritten, so deictic DT
survives, and strict mode additionally protects WDT.
"""

from dataclasses import dataclass

from .corpus_io import Document, Sentence, replace_token
from .errors import AlignmentMismatch
from .reporting import TagCountReport, TagCountRow

CST = "CST"
WPR = "WPR"
REPORT_TAGS = (WPR, CST, "IN", "DT")
_RELATION_TAG = {"acl": CST, "acl:relcl": WPR}


@dataclass(frozen=True, slots=True)
class RelabelPolicy:
    """Which "that" tokens may be retagged and how far the scan reaches.

    window=None scans from the verb down to the token right after the verb's
    governor; window=k scans at most k tokens back from the verb.
    """

    retaggable_tags: frozenset = frozenset({"IN", "WDT"})
    strict: bool = False
    window: int | None = None

    def __post_init__(self):
        tags = frozenset({"IN"}) if self.strict else frozenset(self.retaggable_tags)
        if tags & {WPR, CST}:
            raise ValueError("retaggable_tags may not contain WPR or CST")
        object.__setattr__(self, "retaggable_tags", tags)
        if self.window is not None and self.window < 1:
            raise ValueError("window must be >= 1")


@dataclass(frozen=True, slots=True)
class RelabelTrace:
    sentence_index: int
    verb_index: int
    that_index: int
    old_tag: str
    new_tag: str
    relation: str


def scan_for_that(sentence: Sentence, verb, allowed_tags, window=None):
    """Return the nearest qualifying "that" left of `verb`, or None.

    The scan starts at the token before the verb and stops after the token
    right after the verb's governor (or after `window` steps when given).
    """
    if window is None:
        lowest = verb.head + 1
    else:
        lowest = verb.id - window
    lowest = max(lowest, 1)
    for position in range(verb.id - 1, lowest - 1, -1):
        tok = sentence.tokens[position - 1]
        if tok.form.lower() == "that" and tok.xpos in allowed_tags:
            return tok
    return None


def relabel_that(doc: Document, policy: RelabelPolicy = RelabelPolicy()):
    """Apply the retagging heuristic; returns (new document, traces)."""
    traces = []
    new_sentences = []
    for sent_idx, sent in enumerate(doc.sentences):
        current = sent
        for tok in sent.tokens:
            relation = tok.deprel
            if relation not in _RELATION_TAG or not tok.xpos.startswith("VB"):
                continue
            verb = current.tokens[tok.id - 1]
            hit = scan_for_that(current, verb, policy.retaggable_tags, policy.window)
            if hit is None:
                continue
            new_tag = _RELATION_TAG[relation]
            traces.append(
                RelabelTrace(
                    sentence_index=sent_idx,
                    verb_index=verb.id,
                    that_index=hit.id,
                    old_tag=hit.xpos,
                    new_tag=new_tag,
                    relation=relation,
                )
            )
            current = replace_token(current, hit.id, xpos=new_tag)
        new_sentences.append(current)
    return Document(sentences=new_sentences, source_name=doc.source_name), traces


def traces_to_csv(traces):
    import csv
    import io

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(("sentence", "verb_index", "that_index", "old_tag", "new_tag", "relation"))
    for t in traces:
        writer.writerow((t.sentence_index, t.verb_index, t.that_index, t.old_tag, t.new_tag, t.relation))
    return buf.getvalue()


def tag_count_report(tagged: Document, gold, equate_wdt_wpr=False, tags=REPORT_TAGS):
    """Tally predicted vs gold tags over the gold "that" records.

    With equate_wdt_wpr, WDT counts as WPR on both sides (WDT is the older,
    more general relative-pronoun label and shows up in Penn-tagged data).
    """

    def canon(tag):
        return WPR if equate_wdt_wpr and tag == "WDT" else tag

    predicted_counts = {t: 0 for t in tags}
    gold_counts = {t: 0 for t in tags}
    matched = {t: 0 for t in tags}
    for record in gold:
        if not 0 <= record.sentence_index < len(tagged.sentences):
            raise AlignmentMismatch(
                "gold record points at sentence %d of %d"
                % (record.sentence_index, len(tagged.sentences))
            )
        sent = tagged.sentences[record.sentence_index]
        tok = sent.token_by_id(record.token_index)
        if tok is None or tok.form.lower() != "that":
            raise AlignmentMismatch(
                "gold record (%d, %d) does not point at a 'that' token"
                % (record.sentence_index, record.token_index)
            )
        pred = canon(tok.xpos)
        goldtag = canon(record.gold_tag)
        if pred in predicted_counts:
            predicted_counts[pred] += 1
        if goldtag in gold_counts:
            gold_counts[goldtag] += 1
            if pred == goldtag:
                matched[goldtag] += 1
    return TagCountReport(
        rows=tuple(
            TagCountRow(t, predicted_counts[t], gold_counts[t], matched[t]) for t in tags
        )
    )
