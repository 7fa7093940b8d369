"""Versioned text serialization for tagger models.

Line-based, self-describing container: a magic+version line, a params line,
then tagset, lexicon, suffix and tree blocks. Every count is an integer and
every block is emitted in a canonical order, so saving is byte-stable:
save(load(save(m))) == save(m). Probabilities are re-derived from the counts
at load time with the stored smoothing weight, which reproduces tagging
behavior exactly.

Format (tab separates a form/suffix from its counts; counts are "idx:n" pairs
using 0-based tagset indices; the index equal to len(tagset) denotes the
sentence-boundary tag in tree tests):

    thatsort-tagger 1
    params suffix_len=<int> smoothing=<float> min_leaf=<int> gain_threshold=<float> case_normalize=<0|1>
    tags <N>
    <tag>          (N lines, tagset order)
    lexicon <N>
    <form>\t<idx>:<count> ...
    open <idx> ...
    prior <idx>:<count> ...
    suffixes <N>
    <suffix>\t<idx>:<count> ...
    tree
    s <offset> <idx>     (split node; yes subtree serialized first, then no)
    l <idx>:<count> ...  (leaf)
    end
"""

from pathlib import Path

from ..errors import CorruptModel, VersionMismatch
from .._util import atomic_write_text
from .model import (
    ContextTree,
    Lexicon,
    SuffixGuesser,
    TaggerModel,
    TrainParams,
    TreeLeaf,
    TreeSplit,
)

MAGIC = "thatsort-tagger"
FORMAT_VERSION = 1


def _pairs(counts, tag_index):
    items = sorted((tag_index[t], n) for t, n in counts.items())
    return " ".join("%d:%d" % (i, n) for i, n in items)


def _leaf_pairs(leaf):
    return " ".join("%d:%d" % (i, n) for i, n in enumerate(leaf.counts) if n)


def dumps_model(model):
    """Serialize a model to its canonical text form."""
    p = model.params
    idx = model.tag_index
    lines = [
        "%s %d" % (MAGIC, FORMAT_VERSION),
        "params suffix_len=%d smoothing=%r min_leaf=%d gain_threshold=%r case_normalize=%d"
        % (p.suffix_len, p.smoothing, p.min_leaf, p.gain_threshold, int(p.case_normalize)),
        "tags %d" % len(model.tagset),
    ]
    lines.extend(model.tagset)

    forms = sorted(model.lexicon.counts)
    lines.append("lexicon %d" % len(forms))
    for form in forms:
        lines.append("%s\t%s" % (form, _pairs(model.lexicon.counts[form], idx)))

    guesser = model.guesser
    lines.append("open %s" % " ".join(str(idx[t]) for t in guesser.open_tags))
    lines.append("prior %s" % _pairs(guesser.prior_counts, idx))
    suffixes = sorted(guesser.iter_suffixes())
    lines.append("suffixes %d" % len(suffixes))
    for suffix, counts in suffixes:
        lines.append("%s\t%s" % (suffix, _pairs(counts, idx)))

    lines.append("tree")

    def emit(node):
        if isinstance(node, TreeSplit):
            lines.append("s %d %d" % (node.offset, node.test_tag))
            emit(node.yes)
            emit(node.no)
        else:
            lines.append("l %s" % _leaf_pairs(node))

    emit(model.context.root)
    lines.append("end")
    return "\n".join(lines) + "\n"


def save_model(model, path):
    atomic_write_text(path, dumps_model(model))


def _parse_count_pairs(text, tagset, as_tags):
    counts = {}
    if text:
        for item in text.split(" "):
            i, _, n = item.partition(":")
            key = tagset[int(i)] if as_tags else int(i)
            counts[key] = int(n)
    return counts


def loads_model(text):
    """Parse the canonical text form back into a TaggerModel."""
    lines = text.split("\n")
    if not lines or lines[0] != "%s %d" % (MAGIC, FORMAT_VERSION):
        raise VersionMismatch(
            "expected %r header, got %r" % ("%s %d" % (MAGIC, FORMAT_VERSION), lines[:1])
        )
    try:
        cursor = iter(lines[1:])

        fields = dict(item.split("=", 1) for item in next(cursor).split(" ")[1:])
        params = TrainParams(
            min_leaf=int(fields["min_leaf"]),
            gain_threshold=float(fields["gain_threshold"]),
            suffix_len=int(fields["suffix_len"]),
            smoothing=float(fields["smoothing"]),
            case_normalize=bool(int(fields["case_normalize"])),
        )

        n_tags = int(next(cursor).split(" ")[1])
        tagset = [next(cursor) for _ in range(n_tags)]

        lexicon = Lexicon(case_normalize=params.case_normalize)
        n_forms = int(next(cursor).split(" ")[1])
        for _ in range(n_forms):
            form, _, pairs = next(cursor).partition("\t")
            lexicon.counts[form] = _parse_count_pairs(pairs, tagset, as_tags=True)

        guesser = SuffixGuesser(max_len=params.suffix_len, theta=params.smoothing)
        open_line = next(cursor).split(" ")
        guesser.open_tags = [tagset[int(i)] for i in open_line[1:] if i]
        prior_line = next(cursor).partition(" ")[2]
        guesser.prior_counts = _parse_count_pairs(prior_line, tagset, as_tags=True)
        n_suffixes = int(next(cursor).split(" ")[1])
        for _ in range(n_suffixes):
            suffix, _, pairs = next(cursor).partition("\t")
            guesser.insert_suffix(suffix, _parse_count_pairs(pairs, tagset, as_tags=True))

        if next(cursor) != "tree":
            raise CorruptModel("missing tree block")

        def read_node():
            parts = next(cursor).split(" ")
            if parts[0] == "s":
                offset, test_tag = int(parts[1]), int(parts[2])
                yes = read_node()
                no = read_node()
                return TreeSplit(offset, test_tag, yes, no)
            if parts[0] == "l":
                counts = [0] * n_tags
                for item in parts[1:]:
                    if item:
                        i, _, n = item.partition(":")
                        counts[int(i)] = int(n)
                return TreeLeaf(counts, params.smoothing)
            raise CorruptModel("unexpected tree line %r" % " ".join(parts))

        context = ContextTree(read_node())
        if next(cursor) != "end":
            raise CorruptModel("missing end marker")
    except (ValueError, IndexError, KeyError, StopIteration) as exc:
        raise CorruptModel("bad model file: %s" % exc) from exc

    return TaggerModel(tagset, lexicon, guesser, context, params)


def load_model(path):
    return loads_model(Path(path).read_text(encoding="utf-8"))
