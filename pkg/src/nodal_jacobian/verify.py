"""Cross-route verification sweep.

For every ``(g0, k)`` in the sweep box, Betti, weight and Hodge numbers are
evaluated by four routes: the corrected closed forms, the structural table,
the basis census, and (for weights and Hodge numbers) the ``*_printed``
closed forms.  The first three must agree everywhere.  Points where
the printed form disagrees are collected as errata; they are reported but do
not count as failures.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import asdict, dataclass, field
from typing import Optional

from . import closed_form as cf
from .mhs_core import MixedHodgeTable, compactified_jacobian_table
from .oracle.census import (
    DEFAULT_CAP,
    CensusCapExceeded,
    choice_space_size,
    kunneth_basis_census,
)


@dataclass(frozen=True)
class VerificationRecord:
    kind: str  # "betti", "weight" or "hodge"
    g0: int
    k: int
    i: int
    l: Optional[int]
    p: Optional[int]
    q: Optional[int]
    value_closed_corrected: int
    value_structural: int
    value_census: int
    value_printed: Optional[int]

    @property
    def agree(self) -> bool:
        return (
            self.value_closed_corrected == self.value_structural == self.value_census
        )

    @property
    def printed_agrees(self) -> Optional[bool]:
        if self.value_printed is None:
            return None
        return self.value_printed == self.value_census

    def to_dict(self) -> dict:
        d = asdict(self)
        for key in list(d):
            if key.startswith("value_") and d[key] is not None:
                d[key] = str(d[key])
        d["agree"] = self.agree
        d["printed_agrees"] = self.printed_agrees
        return d


@dataclass
class VerificationReport:
    g0_max: int
    k_max: int
    records: list[VerificationRecord] = field(default_factory=list)

    @property
    def failures(self) -> list[VerificationRecord]:
        return [r for r in self.records if not r.agree]

    @property
    def printed_disagreements(self) -> list[VerificationRecord]:
        return [r for r in self.records if r.printed_agrees is False]

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> dict:
        kinds = Counter(r.kind for r in self.records)
        printed = Counter(r.kind for r in self.printed_disagreements)
        return {
            "g0_max": self.g0_max,
            "k_max": self.k_max,
            "cells": (self.g0_max + 1) * (self.k_max + 1),
            "records": dict(sorted(kinds.items())),
            "failures": len(self.failures),
            "printed_disagreements": dict(sorted(printed.items())),
            "ok": self.ok,
        }

    def to_dict(self) -> dict:
        return {
            "summary": self.summary(),
            "failures": [r.to_dict() for r in self.failures],
            "printed_disagreements": [r.to_dict() for r in self.printed_disagreements],
        }


def _graded(table: MixedHodgeTable):
    by_degree: Counter = Counter()
    by_weight: Counter = Counter()
    for piece, mult in table.items():
        by_degree[piece.degree] += mult
        by_weight[(piece.degree, piece.weight)] += mult
    return by_degree, by_weight


def verify_cell(g0: int, k: int, *, cap: int = DEFAULT_CAP, workers: int = 1):
    """All records for one ``(g0, k)``.

    Records with every value zero are dropped; the box scanned is every
    ``0 <= i, l <= 2(g0 + k)`` and ``p + q = l``.
    """
    params = cf.ClosedFormParams(g0, k)
    structural = compactified_jacobian_table(g0, k)
    census = kunneth_basis_census(g0, k, cap=cap, workers=workers)
    s_deg, s_wt = _graded(structural)
    c_deg, c_wt = _graded(census)
    top = 2 * (g0 + k)
    records = []

    def keep(rec: VerificationRecord) -> None:
        values = (
            rec.value_closed_corrected,
            rec.value_structural,
            rec.value_census,
            rec.value_printed or 0,
        )
        if any(values):
            records.append(rec)

    for i in range(top + 1):
        keep(
            VerificationRecord(
                "betti", g0, k, i, None, None, None,
                cf.betti_closed(params, i), s_deg[i], c_deg[i], None,
            )
        )
        for l in range(top + 1):
            keep(
                VerificationRecord(
                    "weight", g0, k, i, l, None, None,
                    cf.weight_closed_corrected(params, i, l),
                    s_wt[(i, l)],
                    c_wt[(i, l)],
                    cf.weight_closed_printed(params, i, l),
                )
            )
            for p in range(l + 1):
                q = l - p
                keep(
                    VerificationRecord(
                        "hodge", g0, k, i, l, p, q,
                        cf.hodge_closed_corrected(params, i, l, p, q),
                        structural[(i, l, p, q)],
                        census[(i, l, p, q)],
                        cf.hodge_closed_printed(params, i, l, p, q),
                    )
                )
    return records


def run_sweep(
    g0_max: int = 4, k_max: int = 6, *, cap: int = DEFAULT_CAP, workers: int = 1
) -> VerificationReport:
    largest = choice_space_size(g0_max, k_max)
    if largest > cap:
        raise CensusCapExceeded(g0_max, k_max, largest, cap)
    report = VerificationReport(g0_max, k_max)
    for g0 in range(g0_max + 1):
        for k in range(k_max + 1):
            report.records.extend(verify_cell(g0, k, cap=cap, workers=workers))
    return report
