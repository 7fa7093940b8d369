"""Evaluation-report containers and their CSV serializations."""

import csv
import io
from dataclasses import dataclass


def _csv_text(header, rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


@dataclass(frozen=True, slots=True)
class DepsEvalRow:
    label: str
    correct: int
    total: int

    @property
    def accuracy(self):
        return self.correct / self.total if self.total else None


@dataclass(frozen=True, slots=True)
class DepsEvalReport:
    rows: tuple

    def to_csv(self):
        return _csv_text(
            ("label", "correct", "total", "accuracy"),
            (
                (r.label, r.correct, r.total, _fmt(r.accuracy))
                for r in self.rows
            ),
        )

    def accuracy(self, label):
        for row in self.rows:
            if row.label == label:
                return row.accuracy
        raise KeyError(label)


@dataclass(frozen=True, slots=True)
class TagCountRow:
    tag: str
    predicted: int
    gold: int
    matched: int

    @property
    def recall(self):
        return self.matched / self.gold if self.gold else None


@dataclass(frozen=True, slots=True)
class TagCountReport:
    rows: tuple

    def to_csv(self):
        return _csv_text(
            ("tag", "predicted", "gold", "matched", "recall"),
            (
                (r.tag, r.predicted, r.gold, r.matched, _fmt(r.recall))
                for r in self.rows
            ),
        )

    def row(self, tag):
        for row in self.rows:
            if row.tag == tag:
                return row
        raise KeyError(tag)


@dataclass(frozen=True, slots=True)
class FrequencyRow:
    label: str
    count: int
    rate: float  # occurrences per 1000 tokens, unrounded


@dataclass(frozen=True, slots=True)
class FrequencyTable:
    rows: tuple
    total_tokens: int

    def to_csv(self):
        # Rates print with three decimals: enough to compare against
        # two-decimal published figures without losing the sub-1.0 rates.
        return _csv_text(
            ("label", "count", "rate"),
            ((r.label, r.count, "%.3f" % r.rate) for r in self.rows),
        )

    def row(self, label):
        for row in self.rows:
            if row.label == label:
                return row
        raise KeyError(label)


def _fmt(value):
    return "" if value is None else "%.6f" % value
