"""Viterbi decoding over a trained model.

The model is compiled once into flat lookup tables (leaf index per context
pair, log distributions per leaf, cached per-form candidate arrays); the
actual dynamic program runs in a kernel selected at import time: the compiled
extension when it built, otherwise the pure-Python twin. Set
THATSORT_PURE_PYTHON=1 to force the fallback.
"""

import math
import os
from dataclasses import replace

import numpy as np

from ..corpus_io import Document, Sentence
from ..errors import EmptySentence
from .model import TaggerModel, TreeSplit

if os.environ.get("THATSORT_PURE_PYTHON"):
    from . import _viterbi_py as _kernel

    KERNEL = "python"
else:
    try:
        from . import _viterbi_c as _kernel

        KERNEL = "c"
    except ImportError:
        from . import _viterbi_py as _kernel

        KERNEL = "python"


def kernel_name():
    """Which Viterbi kernel is active: "c" or "python"."""
    return KERNEL


class CompiledModel:
    """Flat decoding tables derived from a TaggerModel."""

    __slots__ = ("tagset", "boundary", "leaf_index", "leaf_logdist", "_model", "_cand_cache")

    def __init__(self, model: TaggerModel):
        self._model = model
        self.tagset = model.tagset
        n_tags = len(model.tagset)
        self.boundary = n_tags

        leaves = []
        leaf_ids = {}

        def collect(node):
            if isinstance(node, TreeSplit):
                collect(node.yes)
                collect(node.no)
            elif id(node) not in leaf_ids:
                leaf_ids[id(node)] = len(leaves)
                leaves.append(node)

        collect(model.context.root)

        self.leaf_index = np.empty((n_tags + 1, n_tags + 1), dtype=np.int32)
        for t2 in range(n_tags + 1):
            for t1 in range(n_tags + 1):
                # Row index is the earlier tag, column the immediate predecessor.
                self.leaf_index[t2, t1] = leaf_ids[id(model.context.lookup(t1, t2))]

        self.leaf_logdist = np.empty((len(leaves), n_tags), dtype=np.float64)
        for li, leaf in enumerate(leaves):
            for ti, p in enumerate(leaf.probs):
                self.leaf_logdist[li, ti] = math.log(p)

        self._cand_cache = {}

    def candidates(self, form):
        """(tag indices, log emission probs) for a form, cached."""
        hit = self._cand_cache.get(form)
        if hit is None:
            index = self._model.tag_index
            scored = self._model.emission_candidates(form)
            ids = np.array([index[t] for t, _ in scored], dtype=np.int32)
            logs = np.array([math.log(p) for _, p in scored], dtype=np.float64)
            hit = (ids, logs)
            self._cand_cache[form] = hit
        return hit


def compiled(model: TaggerModel) -> CompiledModel:
    if model._compiled is None:
        model._compiled = CompiledModel(model)
    return model._compiled


def tag(model: TaggerModel, forms):
    """Most probable tag sequence for one sentence of forms."""
    if not forms:
        raise EmptySentence("cannot tag an empty sentence")
    tables = compiled(model)
    offs = np.empty(len(forms) + 1, dtype=np.int32)
    offs[0] = 0
    parts_tags = []
    parts_logs = []
    for i, form in enumerate(forms):
        ids, logs = tables.candidates(form)
        parts_tags.append(ids)
        parts_logs.append(logs)
        offs[i + 1] = offs[i] + len(ids)
    cand_tags = np.concatenate(parts_tags)
    cand_logs = np.concatenate(parts_logs)
    path = _kernel.viterbi_path(
        offs, cand_tags, cand_logs, tables.leaf_index, tables.leaf_logdist, tables.boundary
    )
    return [model.tagset[t] for t in path]


def tag_document(model: TaggerModel, doc: Document) -> Document:
    """Retag every sentence of a document, replacing xpos."""
    new_sentences = []
    for sent in doc.sentences:
        if not sent.tokens:
            new_sentences.append(sent)
            continue
        predicted = tag(model, [t.form for t in sent.tokens])
        new_sentences.append(
            Sentence(
                comments=sent.comments,
                tokens=[replace(t, xpos=p) for t, p in zip(sent.tokens, predicted)],
                multiword_ranges=sent.multiword_ranges,
                empty_nodes=sent.empty_nodes,
            )
        )
    return Document(sentences=new_sentences, source_name=doc.source_name)
