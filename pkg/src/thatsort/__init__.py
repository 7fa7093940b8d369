"""thatsort: tell relative-clause "that" (WPR) from noun-complement "that" (CST).

Toolkit pieces: CoNLL-U and slash-tagged corpus I/O, enhanced-deps
reconstruction with the acl:that refinement, dependency-driven retagging of
"that", a trainable decision-tree tagger with Viterbi decoding, and an
experiment harness (frequencies, per-tag recall, learning curves, distance
statistics).
"""

__version__ = "0.1.0"

from .analysis import (
    DistanceRecord,
    SizeSchedule,
    learning_curve,
    summarize_distances,
    tag_inventory_evolution,
    that_noun_distance,
)
from .corpus_io import (
    Document,
    GoldThatRecord,
    MultiwordRange,
    Sentence,
    Token,
    load_gold_that,
    parse_conllu,
    parse_slash_tagged,
    read_document,
    serialize_conllu,
    serialize_slash_tagged,
)
from .deps_emulation import (
    DepsLabel,
    emulate_deps,
    emulate_document,
    evaluate_deps,
    frequency_stats,
)
from .dt_tagger import (
    TaggerModel,
    TrainParams,
    kernel_name,
    load_model,
    save_model,
    tag,
    tag_document,
    train,
)
from .relabeler import RelabelPolicy, RelabelTrace, relabel_that, tag_count_report

__all__ = [
    "__version__",
    "DistanceRecord",
    "Document",
    "DepsLabel",
    "GoldThatRecord",
    "MultiwordRange",
    "RelabelPolicy",
    "RelabelTrace",
    "Sentence",
    "SizeSchedule",
    "TaggerModel",
    "Token",
    "TrainParams",
    "emulate_deps",
    "emulate_document",
    "evaluate_deps",
    "frequency_stats",
    "kernel_name",
    "learning_curve",
    "load_gold_that",
    "load_model",
    "parse_conllu",
    "parse_slash_tagged",
    "read_document",
    "relabel_that",
    "save_model",
    "serialize_conllu",
    "serialize_slash_tagged",
    "summarize_distances",
    "tag",
    "tag_count_report",
    "tag_document",
    "tag_inventory_evolution",
    "that_noun_distance",
    "train",
]
