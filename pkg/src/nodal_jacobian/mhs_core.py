"""Dimension tables for mixed Hodge structures.

A :class:`MixedHodgeTable` records, for every cohomological degree ``i``,
weight ``w`` and Hodge type ``(p, q)`` with ``p + q = w``, the dimension of
``gr_F^p gr_Fbar^q gr_w^W H^i``.  Only dimensions are tracked: every space
built here is a direct sum of pure pieces, so nothing is lost by forgetting
the filtrations themselves.

Tables are immutable and stored sparsely (no zero multiplicities), so two
tables are equal exactly when they have the same support and values.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Mapping


@dataclass(frozen=True, order=True)
class HodgePiece:
    """One graded slot ``(degree, weight, p, q)`` of a table."""

    degree: int
    weight: int
    hodge_p: int
    hodge_q: int

    def __post_init__(self) -> None:
        if min(self.degree, self.weight, self.hodge_p, self.hodge_q) < 0:
            raise ValueError(f"negative index in {self!r}")
        if self.hodge_p + self.hodge_q != self.weight:
            raise ValueError(f"p + q != weight in {self!r}")

    def conjugate(self) -> HodgePiece:
        return HodgePiece(self.degree, self.weight, self.hodge_q, self.hodge_p)


def _key(piece) -> HodgePiece:
    if isinstance(piece, HodgePiece):
        return piece
    return HodgePiece(*piece)


class MixedHodgeTable:
    """Finitely supported map ``HodgePiece -> non-negative int``.

    ``label`` is a free-form tag; it does not take part in equality.
    """

    __slots__ = ("_pieces", "label")

    def __init__(self, pieces: Mapping | Iterable = (), label: str = "") -> None:
        items = pieces.items() if isinstance(pieces, Mapping) else pieces
        store: dict[HodgePiece, int] = {}
        for piece, mult in items:
            if not isinstance(mult, int) or isinstance(mult, bool):
                raise TypeError(f"multiplicity must be an int, got {mult!r}")
            if mult < 0:
                raise ValueError(f"negative multiplicity {mult} at {piece}")
            if mult:
                key = _key(piece)
                store[key] = store.get(key, 0) + mult
        self._pieces = dict(sorted(store.items()))
        self.label = label

    @property
    def pieces(self) -> Mapping[HodgePiece, int]:
        return MappingProxyType(self._pieces)

    def __getitem__(self, piece) -> int:
        return self._pieces.get(_key(piece), 0)

    def __iter__(self):
        return iter(self._pieces)

    def __len__(self) -> int:
        return len(self._pieces)

    def items(self):
        return self._pieces.items()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MixedHodgeTable):
            return NotImplemented
        return self._pieces == other._pieces

    def __hash__(self) -> int:
        return hash(frozenset(self._pieces.items()))

    def __repr__(self) -> str:
        body = ", ".join(
            f"({k.degree},{k.weight},{k.hodge_p},{k.hodge_q}):{v}"
            for k, v in self._pieces.items()
        )
        tag = f" {self.label!r}" if self.label else ""
        return f"<MixedHodgeTable{tag} {{{body}}}>"

    def max_degree(self) -> int:
        """Largest supported degree, or -1 for the zero table."""
        return max((k.degree for k in self._pieces), default=-1)

    def total_dimension(self) -> int:
        return sum(self._pieces.values())

    def is_conjugation_symmetric(self) -> bool:
        return all(self[k.conjugate()] == v for k, v in self._pieces.items())

    def relabel(self, label: str) -> MixedHodgeTable:
        return MixedHodgeTable(self._pieces, label=label)


def _check_nonneg(name: str, value: int) -> None:
    if value < 0:
        raise ValueError(f"{name} must be >= 0, got {value}")


# -- builders -----------------------------------------------------------------


def unit_table() -> MixedHodgeTable:
    """Cohomology of a point; the unit for :func:`tensor`."""
    return MixedHodgeTable({(0, 0, 0, 0): 1}, label="point")


def jacobian_table(g0: int) -> MixedHodgeTable:
    """Table of ``H*(J_0)`` for a smooth curve of genus ``g0``.

    ``H^t`` is pure of weight ``t`` with ``h^{r,s} = C(g0, r) C(g0, s)``.
    """
    _check_nonneg("g0", g0)
    # Rows of Pascal's triangle; math.comb would do, but this keeps the module
    # free of any closed-form helper.
    row = [1]
    for _ in range(g0):
        row = [a + b for a, b in zip([0] + row, row + [0])]
    pieces = {}
    for r in range(g0 + 1):
        for s in range(g0 + 1):
            t = r + s
            pieces[(t, t, r, s)] = row[r] * row[s]
    return MixedHodgeTable(pieces, label=f"J(g0={g0})")


def nodal_rational_table() -> MixedHodgeTable:
    """Table of the rational curve with one node.

    ``H^0`` and ``H^1`` have weight 0, type (0,0); ``H^2`` has weight 2, type (1,1).
    """
    return MixedHodgeTable(
        {(0, 0, 0, 0): 1, (1, 0, 0, 0): 1, (2, 2, 1, 1): 1}, label="R"
    )


# -- algebra ------------------------------------------------------------------


def direct_sum(a: MixedHodgeTable, b: MixedHodgeTable) -> MixedHodgeTable:
    return MixedHodgeTable(list(a.items()) + list(b.items()))


def tensor(a: MixedHodgeTable, b: MixedHodgeTable) -> MixedHodgeTable:
    """Kunneth product: degree, weight and Hodge bidegree all add."""
    out: dict[tuple[int, int, int, int], int] = defaultdict(int)
    for x, m in a.items():
        for y, n in b.items():
            out[
                (
                    x.degree + y.degree,
                    x.weight + y.weight,
                    x.hodge_p + y.hodge_p,
                    x.hodge_q + y.hodge_q,
                )
            ] += m * n
    return MixedHodgeTable(out)


def power(a: MixedHodgeTable, k: int) -> MixedHodgeTable:
    _check_nonneg("k", k)
    result = unit_table()
    base = a
    # square-and-multiply; tensor is associative and commutative
    while k:
        if k & 1:
            result = tensor(result, base)
        k >>= 1
        if k:
            base = tensor(base, base)
    return result


def compactified_jacobian_table(g0: int, k: int) -> MixedHodgeTable:
    """Structural route: ``H*(J_0) (x) H*(R)^{(x) k}``."""
    _check_nonneg("g0", g0)
    _check_nonneg("k", k)
    table = tensor(jacobian_table(g0), power(nodal_rational_table(), k))
    return table.relabel(f"Jbar(g0={g0},k={k})")


def tate_twist(a: MixedHodgeTable, m: int) -> MixedHodgeTable:
    """Twist by ``Q(m)``: weight drops by ``2m``, both Hodge indices by ``m``.

    Only effective results are supported; a twist pushing ``p`` or ``q`` below
    zero on a supported piece raises ``ValueError``.
    """
    out = {}
    for x, mult in a.items():
        p, q = x.hodge_p - m, x.hodge_q - m
        if p < 0 or q < 0:
            raise ValueError(f"twist by Q({m}) is not effective on {x}")
        out[(x.degree, x.weight - 2 * m, p, q)] = mult
    return MixedHodgeTable(out, label=a.label)


# -- queries ------------------------------------------------------------------


def betti(a: MixedHodgeTable, i: int) -> int:
    return sum(v for k, v in a.items() if k.degree == i)


def weight_dim(a: MixedHodgeTable, i: int, l: int) -> int:
    return sum(v for k, v in a.items() if k.degree == i and k.weight == l)


def hodge_number(a: MixedHodgeTable, i: int, p: int, q: int) -> int:
    if min(i, p, q) < 0:
        return 0
    return a[(i, p + q, p, q)]


def poincare_polynomial(a: MixedHodgeTable) -> tuple[int, ...]:
    """Betti numbers indexed by degree, trailing zeros trimmed."""
    coeffs = [0] * (a.max_degree() + 1)
    for k, v in a.items():
        coeffs[k.degree] += v
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def e_polynomial(a: MixedHodgeTable) -> dict[tuple[int, int], int]:
    """Signed Hodge-Deligne coefficients ``sum_i (-1)^i h^{p,q}(H^i)``.

    Every ``(p, q)`` that occurs in the table is present in the result, even
    when the signed sum cancels to zero.
    """
    out: dict[tuple[int, int], int] = {}
    for k, v in a.items():
        key = (k.hodge_p, k.hodge_q)
        out[key] = out.get(key, 0) + (-v if k.degree % 2 else v)
    return dict(sorted(out.items()))
