"""Rebuild the enhanced-deps column from head+deprel, with the acl:that refinement.

The deps value of every token becomes "<head>:<deprel>". Tokens attached as
plain "acl" whose governor is immediately followed by "that" get the refined
"<head>:acl:that" instead, which is how that-introduced noun complement
clauses are told apart from other adnominal clauses.
"""

from dataclasses import dataclass, replace

from .corpus_io import Document, Sentence
from .errors import AlignmentMismatch, EmptyCorpus
from .reporting import DepsEvalReport, DepsEvalRow, FrequencyRow, FrequencyTable

ACL = "acl"
ACL_RELCL = "acl:relcl"
ACL_THAT = "acl:that"
DEFAULT_LABELS = (ACL_THAT, ACL_RELCL)


@dataclass(frozen=True, slots=True)
class DepsLabel:
    """One enhanced-deps entry, serialized as "<head_ref>:<relation>"."""

    head_ref: int
    relation: str

    def __str__(self):
        return "%d:%s" % (self.head_ref, self.relation)

    @classmethod
    def parse(cls, entry):
        head, _, relation = entry.partition(":")
        return cls(int(head), relation)


def deps_entries(deps_value):
    """Split a deps column value into (head_ref, relation) string pairs."""
    if deps_value in ("_", ""):
        return []
    entries = []
    for entry in deps_value.split("|"):
        head, _, relation = entry.partition(":")
        entries.append((head, relation))
    return entries


def deps_contains(deps_value, label):
    return any(relation == label for _, relation in deps_entries(deps_value))


def emulate_deps(sentence: Sentence) -> Sentence:
    """Return a copy of the sentence with the deps column reconstructed."""
    new_tokens = []
    for tok in sentence.tokens:
        deps = "%d:%s" % (tok.head, tok.deprel)
        if tok.deprel == ACL:
            after_governor = sentence.token_by_id(tok.head + 1)
            if after_governor is not None and after_governor.form.lower() == "that":
                deps = "%d:%s" % (tok.head, ACL_THAT)
        new_tokens.append(replace(tok, deps=deps))
    return Sentence(
        comments=sentence.comments,
        tokens=new_tokens,
        multiword_ranges=sentence.multiword_ranges,
        empty_nodes=sentence.empty_nodes,
    )


def emulate_document(doc: Document) -> Document:
    return Document(
        sentences=[emulate_deps(s) for s in doc.sentences],
        source_name=doc.source_name,
    )


def evaluate_deps(predicted: Document, reference: Document, labels=DEFAULT_LABELS):
    """Score a reconstructed deps column against a reference column.

    For each label the denominator is the set of reference tokens whose deps
    contains that relation; a token counts as correct only when the predicted
    deps string equals the reference deps string in full (head included).
    """
    if len(predicted.sentences) != len(reference.sentences):
        raise AlignmentMismatch(
            "sentence counts differ: %d vs %d"
            % (len(predicted.sentences), len(reference.sentences))
        )
    correct = {label: 0 for label in labels}
    total = {label: 0 for label in labels}
    for sent_idx, (pred_sent, ref_sent) in enumerate(
        zip(predicted.sentences, reference.sentences)
    ):
        if len(pred_sent.tokens) != len(ref_sent.tokens):
            raise AlignmentMismatch(
                "sentence %d: token counts differ: %d vs %d"
                % (sent_idx, len(pred_sent.tokens), len(ref_sent.tokens))
            )
        for pred_tok, ref_tok in zip(pred_sent.tokens, ref_sent.tokens):
            for label in labels:
                if deps_contains(ref_tok.deps, label):
                    total[label] += 1
                    if pred_tok.deps == ref_tok.deps:
                        correct[label] += 1
    return DepsEvalReport(
        rows=tuple(DepsEvalRow(label, correct[label], total[label]) for label in labels)
    )


def frequency_stats(doc_set, labels=DEFAULT_LABELS):
    """Count labels over a corpus and normalize per 1000 tokens.

    A token carries a label when its deps column contains the relation or its
    deprel equals it (the deprel fallback covers corpora with an empty deps
    column, where acl:relcl only ever shows up as a deprel).
    """
    total_tokens = sum(doc.token_count() for doc in doc_set)
    if total_tokens == 0:
        raise EmptyCorpus("no tokens in corpus")
    counts = {label: 0 for label in labels}
    for doc in doc_set:
        for sent in doc.sentences:
            for tok in sent.tokens:
                for label in labels:
                    if tok.deprel == label or deps_contains(tok.deps, label):
                        counts[label] += 1
    return FrequencyTable(
        rows=tuple(
            FrequencyRow(label, counts[label], 1000.0 * counts[label] / total_tokens)
            for label in labels
        ),
        total_tokens=total_tokens,
    )
