"""Experiment harness: learning curves, tag-inventory growth, distance stats.

Learning curves retrain the tagger on growing prefixes of an ordered training
file list and score per-tag recall over gold "that" annotations; the distance
operation measures how many tokens separate a clause-introducing "that" from
the nearest preceding noun, split by clause type (CST vs WPR).
"""

import csv
import io
import statistics
from dataclasses import dataclass

from .corpus_io import Document
from .errors import EmptyType, ScheduleExceedsCorpus
from .relabeler import REPORT_TAGS, scan_for_that, tag_count_report
from .dt_tagger import tag_document, train

DEFAULT_SIZES = (10, 30, 100, 200, 300, 400, 500)
_NOMINAL_UPOS = {"NOUN", "PROPN"}
_DEPREL_TYPE = {"acl": "CST", "acl:relcl": "WPR"}
_SCAN_TAGS = frozenset({"IN", "WDT", "CST", "WPR"})


@dataclass(frozen=True, slots=True)
class SizeSchedule:
    file_counts: tuple = DEFAULT_SIZES

    def __post_init__(self):
        counts = tuple(int(c) for c in self.file_counts)
        if not counts or any(c <= 0 for c in counts):
            raise ValueError("file counts must be positive")
        if any(b <= a for a, b in zip(counts, counts[1:])):
            raise ValueError("file counts must be strictly increasing")
        object.__setattr__(self, "file_counts", counts)

    @property
    def maximum(self):
        return self.file_counts[-1]


@dataclass(frozen=True, slots=True)
class CurveRow:
    size: int
    test: str
    tag: str
    predicted: int
    gold: int
    matched: int

    @property
    def recall(self):
        return self.matched / self.gold if self.gold else None


@dataclass(frozen=True, slots=True)
class DistanceRecord:
    clause_type: str
    distance: int
    sentence_index: int
    token_index: int


def learning_curve(train_files, schedule, tests, params=None, equate_wdt_wpr=False):
    """Per-tag recall rows for models trained on growing file prefixes.

    `tests` is a list of (name, document, gold_records); the result holds one
    row per (schedule size, test set, reported tag).
    """
    if schedule.maximum > len(train_files):
        raise ScheduleExceedsCorpus(
            "schedule needs %d files, corpus has %d" % (schedule.maximum, len(train_files))
        )
    rows = []
    for size in schedule.file_counts:
        model = train(list(train_files[:size]), params)
        for name, doc, gold in tests:
            tagged = tag_document(model, doc)
            report = tag_count_report(tagged, gold, equate_wdt_wpr=equate_wdt_wpr)
            for tag_name in REPORT_TAGS:
                row = report.row(tag_name)
                rows.append(
                    CurveRow(size, name, tag_name, row.predicted, row.gold, row.matched)
                )
    return rows


def curve_to_csv(rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(("size", "test", "tag", "predicted", "gold", "recall"))
    for r in rows:
        writer.writerow(
            (r.size, r.test, r.tag, r.predicted, r.gold,
             "" if r.recall is None else "%.6f" % r.recall)
        )
    return buf.getvalue()


def tag_inventory_evolution(train_files, schedule):
    """(size, tag, count) rows over growing file prefixes, sorted for output."""
    if schedule.maximum > len(train_files):
        raise ScheduleExceedsCorpus(
            "schedule needs %d files, corpus has %d" % (schedule.maximum, len(train_files))
        )
    rows = []
    for size in schedule.file_counts:
        counts = {}
        for doc in train_files[:size]:
            for sent in doc.sentences:
                for tok in sent.tokens:
                    counts[tok.xpos] = counts.get(tok.xpos, 0) + 1
        rows.extend((size, tag, counts[tag]) for tag in sorted(counts))
    return rows


def inventory_to_csv(rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(("size", "tag", "count"))
    writer.writerows(rows)
    return buf.getvalue()


def _nearest_noun_distance(sentence, that_id):
    for position in range(that_id - 1, 0, -1):
        tok = sentence.tokens[position - 1]
        if tok.xpos.startswith("NN") or tok.upos in _NOMINAL_UPOS:
            return that_id - position
    return None


def that_noun_distance(doc: Document, source_of_type="from_deprel"):
    """Distances from classified "that" tokens back to the last noun.

    Classification comes either from the token's own tag (from_xpos: CST/WPR
    after relabeling) or from the governing clause verb's deprel (from_deprel:
    acl -> CST, acl:relcl -> WPR, locating the "that" by the same leftward
    scan the relabeler uses). Returns (records, skipped) where skipped counts
    classified tokens with no preceding noun in their sentence.
    """
    if source_of_type not in ("from_deprel", "from_xpos"):
        raise ValueError("source_of_type must be from_deprel or from_xpos")
    records = []
    skipped = 0
    for sent_idx, sent in enumerate(doc.sentences):
        classified = []
        if source_of_type == "from_xpos":
            for tok in sent.tokens:
                if tok.form.lower() == "that" and tok.xpos in ("CST", "WPR"):
                    classified.append((tok.id, tok.xpos))
        else:
            seen = set()
            for tok in sent.tokens:
                if tok.deprel not in _DEPREL_TYPE or not tok.xpos.startswith("VB"):
                    continue
                hit = scan_for_that(sent, tok, _SCAN_TAGS)
                if hit is not None and hit.id not in seen:
                    seen.add(hit.id)
                    classified.append((hit.id, _DEPREL_TYPE[tok.deprel]))
        for that_id, clause_type in classified:
            distance = _nearest_noun_distance(sent, that_id)
            if distance is None:
                skipped += 1
            else:
                records.append(DistanceRecord(clause_type, distance, sent_idx, that_id))
    return records, skipped


def distances_to_csv(records):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(("type", "distance", "sentence", "token"))
    for r in records:
        writer.writerow((r.clause_type, r.distance, r.sentence_index, r.token_index))
    return buf.getvalue()


def summarize_distances(records, types=None):
    """Five-number summary per clause type (quartiles by linear interpolation)."""
    grouped = {}
    for r in records:
        grouped.setdefault(r.clause_type, []).append(r.distance)
    if types is None:
        types = sorted(grouped)
    if not types:
        raise EmptyType("no distance records to summarize")
    summary = {}
    for clause_type in types:
        values = sorted(grouped.get(clause_type, []))
        if not values:
            raise EmptyType("no distance records for type %r" % clause_type)
        if len(values) == 1:
            q1 = median = q3 = float(values[0])
        else:
            q1, median, q3 = statistics.quantiles(values, n=4, method="inclusive")
        summary[clause_type] = {
            "min": float(values[0]),
            "q1": float(q1),
            "median": float(median),
            "q3": float(q3),
            "max": float(values[-1]),
            "count": len(values),
        }
    return summary
