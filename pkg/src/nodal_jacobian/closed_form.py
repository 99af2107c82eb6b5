"""Binomial closed forms for Betti, weight and Hodge numbers of ``Jbar_k``.

Every evaluator is parameterised by ``g0``, the genus of the normalisation
(``g0 = g - k`` for arithmetic genus ``g`` and ``k`` nodes).  The weight and
Hodge numbers come in two flavours:

* ``*_printed`` is the commonly quoted form, which shifts the ``R^k`` indices
  by the torus degree ``t`` and therefore drops classes; kept for the errata
  report;
* ``*_corrected`` is the honest convolution of the torus with ``R^k``, and is
  the one the rest of the package treats as authoritative.

All sums run over full index ranges and lean on ``binom`` being zero out of
range, so no boundary case needs special handling.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .mhs_core import MixedHodgeTable


@dataclass(frozen=True)
class ClosedFormParams:
    g0: int
    k: int

    def __post_init__(self) -> None:
        if self.g0 < 0 or self.k < 0:
            raise ValueError(f"g0 and k must be >= 0, got g0={self.g0}, k={self.k}")

    @classmethod
    def from_arithmetic_genus(cls, g: int, k: int) -> ClosedFormParams:
        if g < k:
            raise ValueError(f"arithmetic genus {g} is smaller than node count {k}")
        return cls(g - k, k)


def binom(n: int, r: int) -> int:
    """``n choose r``, and 0 whenever ``r < 0``, ``r > n`` or ``n < 0``."""
    if n < 0 or r < 0 or r > n:
        return 0
    return comb(n, r)


def r_power_betti_closed(k: int, i: int) -> int:
    """``h^i(R^k) = sum_j C(k, j) C(j, 2j - i)``."""
    return sum(binom(k, j) * binom(j, 2 * j - i) for j in range(k + 1))


def r_power_weight_closed(k: int, i: int, l: int) -> int:
    """``dim gr_l^W H^i(R^k)``; zero for odd ``l``."""
    if l % 2:
        return 0
    m = l // 2
    return binom(k, i - m) * binom(i - m, i - 2 * m)


def betti_closed(p: ClosedFormParams, i: int) -> int:
    return sum(
        binom(2 * p.g0, i - l) * r_power_betti_closed(p.k, l)
        for l in range(min(i, 2 * p.k) + 1)
    )


def _same_parity(l: int):
    return range(l % 2, l + 1, 2) if l >= 0 else range(0)


def weight_closed_printed(p: ClosedFormParams, i: int, l: int) -> int:
    total = 0
    for t in _same_parity(l):
        m = (l - t) // 2
        total += binom(2 * p.g0, t) * binom(p.k, i - m) * binom(i - m, i - l + t)
    return total


def weight_closed_corrected(p: ClosedFormParams, i: int, l: int) -> int:
    """Torus degree ``t`` (pure of weight ``t``) convolved with ``R^k``."""
    return sum(
        binom(2 * p.g0, t) * r_power_weight_closed(p.k, i - t, l - t)
        for t in _same_parity(l)
    )


def hodge_closed_printed(
    p: ClosedFormParams, i: int, l: int, hp: int, hq: int
) -> int:
    if hp + hq != l or hp < 0 or hq < 0:
        return 0
    total = 0
    for t in _same_parity(l):
        m = (l - t) // 2
        total += (
            binom(p.g0, hp - m)
            * binom(p.g0, hq - m)
            * binom(p.k, i - m)
            * binom(i - m, i - l + t)
        )
    return total


def hodge_closed_corrected(
    p: ClosedFormParams, i: int, l: int, hp: int, hq: int
) -> int:
    """Mixed Hodge number ``h^{hp,hq}`` of ``gr_l^W H^i``.

    A torus class of type ``(r, s)`` paired with ``m = (l - t)/2`` copies of
    ``Q(-1)`` from the ``R^k`` side lands in type ``(r + m, s + m)``.
    """
    if hp + hq != l or hp < 0 or hq < 0:
        return 0
    total = 0
    for t in _same_parity(l):
        m = (l - t) // 2
        j = i - t - m
        total += (
            binom(p.g0, hp - m)
            * binom(p.g0, hq - m)
            * binom(p.k, j)
            * binom(j, i - l)
        )
    return total


def closed_form_table(p: ClosedFormParams) -> MixedHodgeTable:
    """Full table assembled point by point from :func:`hodge_closed_corrected`."""
    top = 2 * (p.g0 + p.k)
    pieces = {}
    for i in range(top + 1):
        for l in range(top + 1):
            for hp in range(l + 1):
                v = hodge_closed_corrected(p, i, l, hp, l - hp)
                if v:
                    pieces[(i, l, hp, l - hp)] = v
    return MixedHodgeTable(pieces, label=f"closed(g0={p.g0},k={p.k})")
