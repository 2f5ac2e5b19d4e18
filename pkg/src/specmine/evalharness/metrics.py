"""Precision and recall of a mined model against a ground truth.

Both measures are ratios over bounded behavior sets. Precision is the share
of the mined model's behaviors that the ground truth accepts; recall is the
share of the ground truth's behaviors that the mined model accepts. Counts
are taken without materialising the sets whenever the counted model is
deterministic, which keeps heavily overgeneralized models cheap to score.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from fractions import Fraction

from specmine.automata import accepts, count_behaviors, enumerate_behaviors

CSV_HEADER = ("name", "algorithm", "params", "P", "R", "elapsed_ms", "states", "transitions")


@dataclass(frozen=True)
class EvalReport:
    precision: Fraction
    recall: Fraction
    elapsed: float
    mined_states: int
    mined_transitions: int
    visit_limit: int
    mined_behaviors: int = 0
    truth_behaviors: int = 0
    empty_mined: bool = False
    name: str = ""
    algorithm: str = ""
    params: str = ""
    warnings: tuple = field(default=())

    def csv_row(self, timing=True):
        elapsed = f"{self.elapsed:.1f}" if timing else ""
        return (self.name, self.algorithm, self.params, f"{float(self.precision):.3f}",
                f"{float(self.recall):.3f}", elapsed, str(self.mined_states),
                str(self.mined_transitions))


def _accepted_share(source, other, visit_limit):
    """(number of bounded behaviors of ``source``, how many ``other`` accepts)"""
    if source.deterministic:
        return count_behaviors(source, visit_limit, accepted_by=other)
    behaviors = enumerate_behaviors(source, visit_limit)
    return len(behaviors), sum(1 for t in behaviors if accepts(other, t))


def precision_recall(mined, truth, visit_limit=2, elapsed_ms=0.0, name="", algorithm="", params=""):
    truth_fsa = getattr(truth, "model", truth)
    name = name or getattr(truth, "name", "")
    m_total, m_ok = _accepted_share(mined, truth_fsa, visit_limit)
    g_total, g_ok = _accepted_share(truth_fsa, mined, visit_limit)
    warnings = []
    if m_total == 0:
        precision = Fraction(1)
        warnings.append("mined model has no bounded behaviors; precision set to 1")
    else:
        precision = Fraction(m_ok, m_total)
    if g_total == 0:
        recall = Fraction(1)
        warnings.append("ground truth has no bounded behaviors; recall set to 1")
    else:
        recall = Fraction(g_ok, g_total)
    return EvalReport(precision, recall, float(elapsed_ms), len(mined.states), len(mined.transitions),
                      visit_limit, m_total, g_total, m_total == 0, name, algorithm, params,
                      tuple(warnings))


def reports_to_csv(reports, timing=True):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in reports:
        writer.writerow(r.csv_row(timing))
    return buf.getvalue()


def _label(report):
    return f"{report.algorithm}, {report.params}" if report.params else report.algorithm


def render_table(reports, timing=True):
    """Approaches as rows, one P/R(/T) column group per subject system."""
    systems = list(dict.fromkeys(r.name for r in reports))
    rows = list(dict.fromkeys(_label(r) for r in reports))
    cell = {(_label(r), r.name): r for r in reports}
    sub = ("P", "R", "T") if timing else ("P", "R")
    header1 = ["Approach"] + [s if i == 0 else "" for s in systems for i in range(len(sub))]
    header2 = [""] + [x for _ in systems for x in sub]
    body = []
    for row in rows:
        line = [row]
        for s in systems:
            r = cell.get((row, s))
            if r is None:
                line += ["-"] * len(sub)
                continue
            line += [f"{float(r.precision):.3f}", f"{float(r.recall):.3f}"]
            if timing:
                line.append(f"{r.elapsed:.0f}")
        body.append(line)
    table = [header1, header2] + body
    widths = [max(len(r[i]) for r in table) for i in range(len(header1))]
    return "".join(
        " | ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() + "\n" for r in table
    )
