"""Per-category accuracy with deduplicated mistakes.

A mistake is a distinct surface form (folded) that the tagger got wrong at
least once in a category; repeats of the same wrong word count once.
Ratios are kept as :class:`fractions.Fraction` and only rounded when
rendered.
"""
from dataclasses import dataclass
from decimal import Decimal, ROUND_HALF_UP
from fractions import Fraction
import json

from .normalizer import fold
from .tagger import tag_sentence
from .tokenizer import tokens_from_surfaces


@dataclass(frozen=True)
class ReportRow:
    category: str
    words: int
    mistakes: int

    @property
    def accuracy(self):
        return accuracy(self.words, self.mistakes)


@dataclass(frozen=True)
class EvaluationReport:
    rows: tuple

    @property
    def total_words(self):
        return sum(r.words for r in self.rows)

    @property
    def total_mistakes(self):
        return sum(r.mistakes for r in self.rows)

    @property
    def total(self):
        return ReportRow("Total", self.total_words, self.total_mistakes)


def count_mistakes(triples):
    """Number of distinct folded surfaces with at least one wrong prediction."""
    return len({fold(surface) for surface, gold, pred in triples if gold != pred})


def accuracy(words, mistakes):
    if words <= 0:
        raise ValueError("accuracy is undefined for an empty category")
    if not 0 <= mistakes <= words:
        raise ValueError(f"mistakes must lie in [0, {words}], got {mistakes}")
    return Fraction(words - mistakes, words)


def format_percent(ratio, places=2):
    """Render a ratio as a percentage, rounding half away from zero."""
    ratio = Fraction(ratio)
    value = Decimal(ratio.numerator * 100) / Decimal(ratio.denominator)
    return f"{value.quantize(Decimal(1).scaleb(-places), rounding=ROUND_HALF_UP)}%"


def evaluate(gold, lex, suf, rules):
    """Re-tag every gold sentence and score each category.

    The tagger sees the gold segmentation, so predictions align with gold
    tokens by position.
    """
    rows = []
    for cat in gold.categories:
        triples = []
        for sentence in cat.sentences:
            surfaces = [surface for surface, _ in sentence]
            predicted = tag_sentence(lex, suf, rules, tokens_from_surfaces(surfaces))
            triples.extend(
                (surface, tag, pred.tag) for (surface, tag), pred in zip(sentence, predicted)
            )
        rows.append(ReportRow(cat.name, len(triples), count_mistakes(triples)))
    return EvaluationReport(tuple(rows))


def _row_dict(row):
    acc = row.accuracy
    return {
        "category": row.category,
        "words": row.words,
        "mistakes": row.mistakes,
        "accuracy": float(acc),
        "accuracy_exact": f"{acc.numerator}/{acc.denominator}",
        "accuracy_percent": format_percent(acc),
    }


def report_to_dict(report):
    return {
        "rows": [_row_dict(r) for r in report.rows],
        "total": _row_dict(report.total),
    }


def render_report(report, format="table"):
    """Render ``report`` as ``"table"`` (fixed-width columns) or ``"json"``."""
    if format == "json":
        return json.dumps(report_to_dict(report), ensure_ascii=False, indent=2) + "\n"
    if format != "table":
        raise ValueError(f"unknown report format {format!r}")
    header = ("No", "Category", "Words", "Mistakes", "Accuracy")
    body = [
        (str(i), r.category, str(r.words), str(r.mistakes), format_percent(r.accuracy))
        for i, r in enumerate(report.rows, 1)
    ]
    t = report.total
    body.append(("", "Total:", str(t.words), str(t.mistakes), format_percent(t.accuracy)))
    widths = [max(len(row[k]) for row in [header, *body]) for k in range(len(header))]
    lines = []
    for row in [header, *body]:
        cells = [
            cell.ljust(w) if k == 1 else cell.rjust(w)
            for k, (cell, w) in enumerate(zip(row, widths))
        ]
        lines.append("  ".join(cells).rstrip())
    return "\n".join(lines) + "\n"
