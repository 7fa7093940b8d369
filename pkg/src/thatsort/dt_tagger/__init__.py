"""Trainable decision-tree tagger: training, decoding, persistence."""

from .decode import kernel_name, tag, tag_document
from .model import (
    BOUNDARY,
    ContextTree,
    Lexicon,
    SuffixGuesser,
    TaggerModel,
    TrainParams,
    TreeLeaf,
    TreeSplit,
    train,
)
from .persist import dumps_model, load_model, loads_model, save_model

__all__ = [
    "BOUNDARY",
    "ContextTree",
    "Lexicon",
    "SuffixGuesser",
    "TaggerModel",
    "TrainParams",
    "TreeLeaf",
    "TreeSplit",
    "dumps_model",
    "kernel_name",
    "load_model",
    "loads_model",
    "save_model",
    "tag",
    "tag_document",
    "train",
]
