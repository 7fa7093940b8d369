"""Shared document model plus CoNLL-U and slash-tagged (Brown-style) I/O.

Both corpus formats are lifted into the same Token/Sentence/Document shape so
that every downstream operation works on either. Parsing and serialization are
inverse up to line-ending normalization: multiword ranges and empty-node lines
are preserved verbatim and re-emitted in place.
"""

import re
from dataclasses import dataclass, field, replace
from pathlib import Path

from .errors import (
    HeadOutOfRange,
    MalformedLine,
    MissingTagSeparator,
    NonContiguousIds,
    UnknownGoldTag,
)

GOLD_THAT_TAGS = frozenset({"WPR", "CST", "DT", "IN", "WDT"})

_MWT_ID = re.compile(r"^(\d+)-(\d+)$")
_EMPTY_ID = re.compile(r"^(\d+)\.\d+$")
_PLAIN_ID = re.compile(r"^\d+$")


@dataclass(frozen=True, slots=True)
class Token:
    """One syntactic-word row: ten CoNLL-U columns with id/head as ints."""

    id: int
    form: str
    lemma: str = "_"
    upos: str = "_"
    xpos: str = "_"
    feats: str = "_"
    head: int = 0
    deprel: str = "_"
    deps: str = "_"
    misc: str = "_"

    def to_line(self):
        return "\t".join(
            (
                str(self.id),
                self.form,
                self.lemma,
                self.upos,
                self.xpos,
                self.feats,
                str(self.head),
                self.deprel,
                self.deps,
                self.misc,
            )
        )


@dataclass(frozen=True, slots=True)
class MultiwordRange:
    """A surface-token range line ("3-4"), kept inert for id/head arithmetic."""

    start: int
    end: int
    form: str
    columns: tuple

    def to_line(self):
        return "\t".join(self.columns)


@dataclass(slots=True)
class Sentence:
    comments: list = field(default_factory=list)
    tokens: list = field(default_factory=list)
    multiword_ranges: list = field(default_factory=list)
    # (anchor_id, raw_line) pairs; anchor 0 means before the first token.
    empty_nodes: list = field(default_factory=list)

    def __len__(self):
        return len(self.tokens)

    def token_by_id(self, token_id):
        """Return the token with the given 1-based id, or None."""
        if 1 <= token_id <= len(self.tokens):
            return self.tokens[token_id - 1]
        return None


@dataclass(slots=True)
class Document:
    sentences: list = field(default_factory=list)
    source_name: str = "<string>"

    def __len__(self):
        return len(self.sentences)

    def token_count(self):
        return sum(len(s.tokens) for s in self.sentences)


@dataclass(frozen=True, slots=True)
class GoldThatRecord:
    """Location and gold tag of one 'that' token in a gold test set.

    sentence_index is 0-based within the document; token_index is the token's
    1-based id within its sentence.
    """

    sentence_index: int
    token_index: int
    gold_tag: str


def _normalize_newlines(text):
    return text.replace("\r\n", "\n").replace("\r", "\n")


def _parse_int(value, what, line_no):
    try:
        return int(value)
    except ValueError:
        raise MalformedLine("%s is not an integer: %r" % (what, value), line_no) from None


def _finish_sentence(sent, token_lines):
    """Validate id/head closure for a completed sentence."""
    n = len(sent.tokens)
    for position, (tok, line_no) in enumerate(zip(sent.tokens, token_lines), start=1):
        if tok.id != position:
            raise NonContiguousIds(
                "token id %d at position %d (ids must be 1..n)" % (tok.id, position),
                line_no,
            )
    for tok, line_no in zip(sent.tokens, token_lines):
        if not 0 <= tok.head <= n:
            raise HeadOutOfRange(
                "head %d outside [0, %d]" % (tok.head, n), line_no
            )
        if tok.head == tok.id:
            raise HeadOutOfRange("head %d equals token id" % tok.head, line_no)


def parse_conllu(text, source_name="<string>"):
    """Parse CoNLL-U text into a Document.

    Sentences split on blank lines; "#" lines are kept as comments; multiword
    range lines and empty-node lines are preserved verbatim but excluded from
    the token list.
    """
    doc = Document(source_name=source_name)
    sent = Sentence()
    token_lines = []
    pending = False

    for line_no, line in enumerate(_normalize_newlines(text).split("\n"), start=1):
        if line == "":
            if pending:
                _finish_sentence(sent, token_lines)
                doc.sentences.append(sent)
                sent = Sentence()
                token_lines = []
                pending = False
            continue
        pending = True
        if line.startswith("#"):
            sent.comments.append(line)
            continue
        fields = line.split("\t")
        if len(fields) != 10:
            raise MalformedLine("expected 10 columns, got %d" % len(fields), line_no)
        tok_id = fields[0]
        mwt = _MWT_ID.match(tok_id)
        if mwt:
            sent.multiword_ranges.append(
                MultiwordRange(
                    start=int(mwt.group(1)),
                    end=int(mwt.group(2)),
                    form=fields[1],
                    columns=tuple(fields),
                )
            )
            continue
        empty = _EMPTY_ID.match(tok_id)
        if empty:
            sent.empty_nodes.append((int(empty.group(1)), line))
            continue
        if not _PLAIN_ID.match(tok_id):
            raise MalformedLine("bad token id %r" % tok_id, line_no)
        sent.tokens.append(
            Token(
                id=int(tok_id),
                form=fields[1],
                lemma=fields[2],
                upos=fields[3],
                xpos=fields[4],
                feats=fields[5],
                head=_parse_int(fields[6], "head", line_no),
                deprel=fields[7],
                deps=fields[8],
                misc=fields[9],
            )
        )
        token_lines.append(line_no)

    if pending:
        _finish_sentence(sent, token_lines)
        doc.sentences.append(sent)
    return doc


def serialize_conllu(doc):
    """Render a Document back to CoNLL-U text ("\\n" endings throughout)."""
    out = []
    for sent in doc.sentences:
        out.extend(sent.comments)
        mwt_by_start = {}
        for rng in sent.multiword_ranges:
            mwt_by_start.setdefault(rng.start, []).append(rng)
        empties_by_anchor = {}
        for anchor, raw in sent.empty_nodes:
            empties_by_anchor.setdefault(anchor, []).append(raw)
        out.extend(empties_by_anchor.get(0, ()))
        for tok in sent.tokens:
            for rng in mwt_by_start.get(tok.id, ()):
                out.append(rng.to_line())
            out.append(tok.to_line())
            out.extend(empties_by_anchor.get(tok.id, ()))
        out.append("")
    return "\n".join(out) + ("\n" if out else "")


def parse_slash_tagged(text, source_name="<string>"):
    """Parse Brown-style form/TAG text, one sentence per line.

    Items split on the LAST slash so forms like "1/2" survive. The tag lands
    in xpos; all other columns stay "_" (head 0).
    """
    doc = Document(source_name=source_name)
    for line_no, line in enumerate(_normalize_newlines(text).split("\n"), start=1):
        items = line.split()
        if not items:
            continue
        tokens = []
        for position, item in enumerate(items, start=1):
            form, sep, tag = item.rpartition("/")
            if not sep or not form or not tag:
                raise MissingTagSeparator(item, line_no)
            tokens.append(Token(id=position, form=form, xpos=tag))
        doc.sentences.append(Sentence(tokens=tokens))
    return doc


def serialize_slash_tagged(doc):
    """Render a Document as form/TAG lines (xpos as the tag)."""
    lines = []
    for sent in doc.sentences:
        lines.append(" ".join("%s/%s" % (t.form, t.xpos) for t in sent.tokens))
    return "\n".join(lines) + ("\n" if lines else "")


def load_gold_that(doc):
    """Collect one GoldThatRecord per token whose form lowercases to "that"."""
    records = []
    for sent_idx, sent in enumerate(doc.sentences):
        for tok in sent.tokens:
            if tok.form.lower() != "that":
                continue
            if tok.xpos not in GOLD_THAT_TAGS:
                raise UnknownGoldTag(
                    "%s: sentence %d token %d: gold tag %r not in %s"
                    % (doc.source_name, sent_idx, tok.id, tok.xpos, sorted(GOLD_THAT_TAGS))
                )
            records.append(GoldThatRecord(sent_idx, tok.id, tok.xpos))
    return records


def read_document(path, fmt=None):
    """Load a corpus file; format from `fmt` or the file suffix (.conllu)."""
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    if fmt is None:
        fmt = "conllu" if path.suffix == ".conllu" else "slash"
    if fmt == "conllu":
        return parse_conllu(text, source_name=str(path))
    if fmt == "slash":
        return parse_slash_tagged(text, source_name=str(path))
    raise ValueError("unknown corpus format %r" % fmt)


def replace_token(sentence, token_id, **changes):
    """Return a copy of `sentence` with one token's fields replaced."""
    tokens = list(sentence.tokens)
    tokens[token_id - 1] = replace(tokens[token_id - 1], **changes)
    return Sentence(
        comments=sentence.comments,
        tokens=tokens,
        multiword_ranges=sentence.multiword_ranges,
        empty_nodes=sentence.empty_nodes,
    )
