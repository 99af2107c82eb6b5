"""Brute-force Kunneth basis census of ``H*(J_0 x R^k)``.

A basis of ``H*(J_0)`` is the exterior algebra on ``g0`` classes of type
(1,0) and ``g0`` of type (0,1), i.e. a pair of subsets of ``{1..g0}``.  A basis
of ``H*(R^k)`` is a choice of ``H^0``, ``H^1`` or ``H^2`` in each factor.  We
walk every combination and tally its (degree, weight, p, q).

Nothing in here touches a binomial coefficient: the point of this route is to
be independent of both the closed forms and the table algebra.
"""

from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator

from ..mhs_core import MixedHodgeTable

DEFAULT_CAP = 2**28

# (degree, weight, hodge index) for H^0, H^1, H^2 of the nodal rational curve
_R_CLASSES = ((0, 0, 0), (1, 0, 0), (2, 2, 1))
R_LABELS = ("H0", "H1", "H2")


class CensusCapExceeded(RuntimeError):
    """The choice space is larger than the configured enumeration cap."""

    def __init__(self, g0: int, k: int, size: int, cap: int) -> None:
        super().__init__(
            f"census of (g0={g0}, k={k}) needs 4^{g0} * 3^{k} = {size} choices, "
            f"over the cap of {cap}"
        )
        self.size = size
        self.cap = cap


@dataclass(frozen=True)
class GeneratorChoice:
    torus_holo: frozenset[int]
    torus_anti: frozenset[int]
    r_choices: tuple[str, ...]

    def piece(self) -> tuple[int, int, int, int]:
        a, b = len(self.torus_holo), len(self.torus_anti)
        deg = wt = hp = 0
        for label in self.r_choices:
            d, w, h = _R_CLASSES[R_LABELS.index(label)]
            deg += d
            wt += w
            hp += h
        return (a + b + deg, a + b + wt, a + hp, b + hp)


def choice_space_size(g0: int, k: int) -> int:
    return 4**g0 * 3**k


def _decode(index: int, g0: int, k: int) -> tuple[int, int, tuple[int, ...]]:
    holo = index & ((1 << g0) - 1)
    index >>= g0
    anti = index & ((1 << g0) - 1)
    index >>= g0
    digits = []
    for _ in range(k):
        index, d = divmod(index, 3)
        digits.append(d)
    return holo, anti, tuple(digits)


def iter_choices(g0: int, k: int) -> Iterator[GeneratorChoice]:
    """Every generator choice, in index order (slow; for small cases)."""
    for index in range(choice_space_size(g0, k)):
        holo, anti, digits = _decode(index, g0, k)
        yield GeneratorChoice(
            frozenset(j + 1 for j in range(g0) if holo >> j & 1),
            frozenset(j + 1 for j in range(g0) if anti >> j & 1),
            tuple(R_LABELS[d] for d in digits),
        )


def _tally_range(args: tuple[int, int, int, int]) -> dict:
    g0, k, start, stop = args
    counts: Counter = Counter()
    mask = (1 << g0) - 1
    for index in range(start, stop):
        rest = index
        a = (rest & mask).bit_count()
        rest >>= g0
        b = (rest & mask).bit_count()
        rest >>= g0
        deg = wt = h = 0
        for _ in range(k):
            rest, d = divmod(rest, 3)
            cd, cw, ch = _R_CLASSES[d]
            deg += cd
            wt += cw
            h += ch
        counts[(a + b + deg, a + b + wt, a + h, b + h)] += 1
    return dict(counts)


def _chunks(size: int, parts: int) -> list[tuple[int, int]]:
    parts = max(1, min(parts, size))
    step, extra = divmod(size, parts)
    bounds, start = [], 0
    for n in range(parts):
        stop = start + step + (1 if n < extra else 0)
        bounds.append((start, stop))
        start = stop
    return bounds


def kunneth_basis_census(
    g0: int, k: int, *, cap: int = DEFAULT_CAP, workers: int = 1
) -> MixedHodgeTable:
    """Tally every Kunneth basis element of ``H*(J_0 x R^k)``.

    ``workers > 1`` splits the index range over a process pool; the result does
    not depend on the split.
    """
    if g0 < 0 or k < 0:
        raise ValueError(f"g0 and k must be >= 0, got g0={g0}, k={k}")
    size = choice_space_size(g0, k)
    if size > cap:
        raise CensusCapExceeded(g0, k, size, cap)
    jobs = [(g0, k, a, b) for a, b in _chunks(size, workers)]
    if len(jobs) == 1:
        partials = [_tally_range(jobs[0])]
    else:
        with ProcessPoolExecutor(max_workers=len(jobs)) as pool:
            partials = list(pool.map(_tally_range, jobs))
    total: Counter = Counter()
    for part in partials:
        total.update(part)
    return MixedHodgeTable(total, label=f"census(g0={g0},k={k})")


def max_workers() -> int:
    return os.cpu_count() or 1
