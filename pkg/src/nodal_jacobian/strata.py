"""Index-set census of the stratification by successive singular loci.

Upstream (on the space of generalised parabolic bundles) a depth-``r``
stratum is indexed by a support ``{i_1 < ... < i_r}`` of nodes and a labeling
of each chosen node by 1 or 2.  Downstream the ``2^r`` labelings over a
support are identified, leaving one record per support.

Records describe index sets only.  Nothing here claims a record is a
connected component.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Optional


@dataclass(frozen=True)
class StratumRecord:
    support: tuple[int, ...]
    labeling: Optional[tuple[tuple[int, int], ...]]
    codimension: int
    local_model: str

    def __post_init__(self) -> None:
        if self.codimension != len(self.support):
            raise ValueError("codimension must equal the support size")
        if list(self.support) != sorted(set(self.support)):
            raise ValueError(f"support {self.support} is not strictly increasing")
        if self.labeling is not None:
            if tuple(node for node, _ in self.labeling) != self.support:
                raise ValueError("labeling domain must be exactly the support")
            if any(lab not in (1, 2) for _, lab in self.labeling):
                raise ValueError("labels must be 1 or 2")

    def to_dict(self) -> dict:
        return {
            "support": list(self.support),
            "labeling": None
            if self.labeling is None
            else {str(node): lab for node, lab in self.labeling},
            "codimension": self.codimension,
            "local_model": self.local_model,
        }


def local_model(r: int) -> str:
    """Label of the complete local ring at a depth-``r`` point."""
    if r < 0:
        raise ValueError(f"r must be >= 0, got {r}")
    if r == 0:
        return "smooth"
    variables = ",".join(f"u{j},v{j}" for j in range(1, r + 1))
    relations = ", ".join(f"u{j}*v{j}" for j in range(1, r + 1))
    return f"C[[{variables}]]/({relations})"


def gpb_fiber_count(r: int) -> int:
    if r < 0:
        raise ValueError(f"r must be >= 0, got {r}")
    return 2**r


def _check_range(k: int, r: int) -> None:
    if k < 0 or not 0 <= r <= k:
        raise ValueError(f"need 0 <= r <= k, got k={k}, r={r}")


def enumerate_strata_upstream(k: int, r: int) -> list[StratumRecord]:
    _check_range(k, r)
    model = local_model(r)
    return [
        StratumRecord(support, tuple(zip(support, labels)), r, model)
        for support in combinations(range(1, k + 1), r)
        for labels in product((1, 2), repeat=r)
    ]


def enumerate_strata_downstream(k: int, r: int) -> list[StratumRecord]:
    _check_range(k, r)
    model = local_model(r)
    return [
        StratumRecord(support, None, r, model)
        for support in combinations(range(1, k + 1), r)
    ]


@dataclass(frozen=True)
class StrataRow:
    r: int
    upstream: int
    downstream: int
    fiber: int
    local_model: str


def strata_summary(k: int) -> list[StrataRow]:
    """One row per depth ``r``: record counts, their ratio, and the local model."""
    rows = []
    for r in range(k + 1):
        up = len(enumerate_strata_upstream(k, r))
        down = len(enumerate_strata_downstream(k, r))
        rows.append(StrataRow(r, up, down, up // down, local_model(r)))
    return rows
