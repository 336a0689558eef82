"""Gold-list matching and the cumulative precision/recall protocol,
with CSV / aligned-text comparison reports."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from pathlib import Path

from .corpus import Corpus, cumulative_samples
from .linguistics import lemma_of, tokenize, WORD, NUMBER

log = logging.getLogger(__name__)


def normalize_term(raw: str) -> str:
    """Lowercase, collapse whitespace, lemmatize the final word."""
    words = raw.lower().split()
    if not words:
        return ""
    words[-1] = lemma_of(words[-1], "NOUN")
    return " ".join(words)


@dataclass(frozen=True)
class GoldList:
    terms: frozenset

    @classmethod
    def from_terms(cls, terms) -> "GoldList":
        return cls(frozenset(normalize_term(t) for t in terms if t.strip()))

    @classmethod
    def from_file(cls, path) -> "GoldList":
        lines = Path(path).read_text(encoding="utf-8").splitlines()
        return cls.from_terms([ln for ln in lines if not ln.lstrip().startswith("#")])

    def present_count(self, text: str) -> int:
        """Number of gold terms appearing in the text as a token subsequence.

        All words must match literally except the last, which may match by
        noun lemma (mirroring normalize_term).
        """
        tokens = [t.surface.lower() for t in tokenize(text)
                  if t.kind in (WORD, NUMBER)]
        lemmas = [lemma_of(t, "NOUN") for t in tokens]
        count = 0
        for term in self.terms:
            words = term.split()
            n = len(words)
            found = False
            for i in range(len(tokens) - n + 1):
                if (tokens[i:i + n - 1] == words[:-1]
                        and (tokens[i + n - 1] == words[-1]
                             or lemmas[i + n - 1] == words[-1])):
                    found = True
                    break
            if found:
                count += 1
        return count


def count_valid(extracted, gold: GoldList) -> int:
    """Distinct normalized extracted terms that appear in the gold list."""
    normalized = {normalize_term(t.term if hasattr(t, "term") else t)
                  for t in extracted}
    return len(normalized & gold.terms)


def precision_recall(nv: int, nt: int, t: int) -> tuple[float, float]:
    """Percent precision and recall; degenerate denominators report 0."""
    if nt > 0:
        p = 100.0 * nv / nt
    else:
        log.warning("precision undefined (no terms extracted); reporting 0")
        p = 0.0
    if t > 0:
        r = 100.0 * nv / t
    else:
        log.warning("recall undefined (no gold terms in sample); reporting 0")
        r = 0.0
    return p, r


@dataclass(frozen=True)
class EvalRow:
    iteration: int
    pages: int
    nv: int
    nt: int
    t: int
    precision: float
    recall: float


def run_protocol(corpus: Corpus, extractor, gold: GoldList,
                 steps: int = 10, pages_per_step: int = 5) -> list[EvalRow]:
    """Run the extractor on cumulative samples; one row per iteration."""
    samples = cumulative_samples(corpus, pages_per_step, steps)
    rows = []
    for sample in samples:
        extracted = extractor.extract(sample.as_corpus(corpus.page_size))
        distinct = {normalize_term(t.term) for t in extracted}
        nt = len(distinct)
        nv = len(distinct & gold.terms)
        t = gold.present_count(sample.text())
        p, r = precision_recall(nv, nt, t)
        rows.append(EvalRow(iteration=sample.index,
                            pages=pages_per_step * sample.index,
                            nv=nv, nt=nt, t=t, precision=p, recall=r))
    return rows


def truncate2(value: float) -> float:
    """Truncate (not round) to 2 decimals; reports display truncated values."""
    return math.floor(value * 100 + 1e-9) / 100


def column_average(values) -> float:
    values = list(values)
    return sum(values) / len(values) if values else 0.0


def render_csv(rows_by_tool: dict[str, list]) -> str:
    """Comparison table: pages column, then Precision %/Recall % per tool,
    average row last, values truncated to 2 decimals."""
    tools = list(rows_by_tool)
    header = ["pages"]
    for tool in tools:
        header += [f"{tool} precision %", f"{tool} recall %"]
    lines = [",".join(header)]
    n_rows = len(next(iter(rows_by_tool.values())))
    for i in range(n_rows):
        cells = [str(rows_by_tool[tools[0]][i].pages)]
        for tool in tools:
            row = rows_by_tool[tool][i]
            cells += [f"{truncate2(row.precision):.2f}", f"{truncate2(row.recall):.2f}"]
        lines.append(",".join(cells))
    cells = ["average"]
    for tool in tools:
        rows = rows_by_tool[tool]
        cells += [f"{truncate2(column_average(r.precision for r in rows)):.2f}",
                  f"{truncate2(column_average(r.recall for r in rows)):.2f}"]
    lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def render_text(rows_by_tool: dict[str, list]) -> str:
    """Human-readable aligned-column version of the comparison table."""
    csv_rows = [line.split(",") for line in render_csv(rows_by_tool).splitlines()]
    widths = [max(len(row[i]) for row in csv_rows) for i in range(len(csv_rows[0]))]
    out = []
    for row in csv_rows:
        out.append("  ".join(cell.rjust(w) for cell, w in zip(row, widths)))
    return "\n".join(out) + "\n"


def render_report(rows_by_tool: dict[str, list], fmt: str = "csv") -> str:
    if not rows_by_tool or not all(rows_by_tool.values()):
        raise ValueError("no evaluation rows to report")
    if fmt == "csv":
        return render_csv(rows_by_tool)
    if fmt == "text":
        return render_text(rows_by_tool)
    raise ValueError(f"unknown report format: {fmt!r}")
