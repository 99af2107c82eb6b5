"""Finite chain complexes over Q with sparse exact-rational differentials.

A complex is stored as its chain ranks ``dims[0..n]`` and the maps
``d_i: C_i -> C_{i-1}`` for ``i = 1..n``.  ``differentials[i - 1]`` holds
``d_i`` as a sparse matrix ``{(row, col): Fraction}`` of shape
``(dims[i - 1], dims[i])``.  Ranks are computed by exact Gaussian elimination;
no floating point is involved anywhere.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Mapping, Sequence

SparseMatrix = dict[tuple[int, int], Fraction]

DEFAULT_KUNNETH_CAP = 64


class ComplexSizeExceeded(RuntimeError):
    pass


def _sparse(mat, shape: tuple[int, int]) -> SparseMatrix:
    rows, cols = shape
    out: SparseMatrix = {}
    if isinstance(mat, Mapping):
        items = mat.items()
    else:
        if len(mat) != rows or any(len(r) != cols for r in mat):
            raise ValueError(f"matrix does not have shape {shape}")
        items = (((i, j), v) for i, r in enumerate(mat) for j, v in enumerate(r))
    for (i, j), v in items:
        if not (0 <= i < rows and 0 <= j < cols):
            raise ValueError(f"entry ({i}, {j}) outside shape {shape}")
        v = Fraction(v)
        if v:
            out[(i, j)] = v
    return out


def _compose(left: SparseMatrix, right: SparseMatrix) -> SparseMatrix:
    """``left @ right`` for sparse matrices."""
    by_row: dict[int, list[tuple[int, Fraction]]] = {}
    for (i, j), v in right.items():
        by_row.setdefault(i, []).append((j, v))
    out: SparseMatrix = {}
    for (i, m), a in left.items():
        for j, b in by_row.get(m, ()):
            out[(i, j)] = out.get((i, j), 0) + a * b
    return {key: v for key, v in out.items() if v}


def rank(mat: SparseMatrix) -> int:
    """Rank over Q by row reduction with exact pivots."""
    rows: dict[int, dict[int, Fraction]] = {}
    for (i, j), v in mat.items():
        rows.setdefault(i, {})[j] = v
    pivots: dict[int, dict[int, Fraction]] = {}
    for row in rows.values():
        r = dict(row)
        while r:
            col = min(r)
            pivot = pivots.get(col)
            if pivot is None:
                lead = r[col]
                pivots[col] = {c: v / lead for c, v in r.items()}
                break
            f = r[col]
            for c, v in pivot.items():
                nv = r.get(c, 0) - f * v
                if nv:
                    r[c] = nv
                else:
                    r.pop(c, None)
    return len(pivots)


class ChainComplex:
    __slots__ = ("dims", "differentials")

    def __init__(self, dims: Sequence[int], differentials: Sequence = ()) -> None:
        dims = tuple(int(d) for d in dims)
        if any(d < 0 for d in dims):
            raise ValueError(f"negative chain rank in {dims}")
        if not differentials:
            differentials = [{}] * max(0, len(dims) - 1)
        if len(differentials) != max(0, len(dims) - 1):
            raise ValueError(
                f"{len(dims)} chain groups need {max(0, len(dims) - 1)} differentials, "
                f"got {len(differentials)}"
            )
        self.dims = dims
        self.differentials = tuple(
            _sparse(m, (dims[i], dims[i + 1])) for i, m in enumerate(differentials)
        )
        for i in range(len(self.differentials) - 1):
            if _compose(self.differentials[i], self.differentials[i + 1]):
                raise ValueError(f"d_{i + 1} o d_{i + 2} is not zero")

    def d(self, i: int) -> SparseMatrix:
        """The map ``C_i -> C_{i-1}`` (empty outside ``1..len(dims)-1``)."""
        if 1 <= i < len(self.dims):
            return self.differentials[i - 1]
        return {}

    def total_rank(self) -> int:
        return sum(self.dims)

    def __repr__(self) -> str:
        nnz = sum(len(m) for m in self.differentials)
        return f"ChainComplex(dims={self.dims}, nonzero entries={nnz})"


def homology_betti(c: ChainComplex) -> tuple[int, ...]:
    ranks = [rank(c.d(i)) for i in range(len(c.dims) + 1)]
    return tuple(c.dims[i] - ranks[i] - ranks[i + 1] for i in range(len(c.dims)))


def tensor_complex(a: ChainComplex, b: ChainComplex) -> ChainComplex:
    """Total complex of ``a (x) b`` with ``d(x(x)y) = dx(x)y + (-1)^|x| x(x)dy``.

    The basis of ``C_n`` lists blocks ``A_p (x) B_{n-p}`` by increasing ``p``;
    inside a block ``x_s (x) y_t`` sits at ``s * dim B_{n-p} + t``.
    """
    if not a.dims or not b.dims:
        return ChainComplex(())
    top = len(a.dims) + len(b.dims) - 2
    offsets: list[dict[int, int]] = []
    dims = []
    for n in range(top + 1):
        off, size = {}, 0
        for p in range(max(0, n - len(b.dims) + 1), min(n, len(a.dims) - 1) + 1):
            off[p] = size
            size += a.dims[p] * b.dims[n - p]
        offsets.append(off)
        dims.append(size)

    diffs = []
    for n in range(1, top + 1):
        mat: SparseMatrix = {}
        src, dst = offsets[n], offsets[n - 1]
        for p, base in src.items():
            q = n - p
            bq = b.dims[q]
            # dx (x) y
            if p >= 1:
                bq_dst = b.dims[q]
                for (r, s), v in a.d(p).items():
                    for t in range(bq):
                        key = (dst[p - 1] + r * bq_dst + t, base + s * bq + t)
                        mat[key] = mat.get(key, 0) + v
            # (-1)^p x (x) dy
            if q >= 1:
                sign = -1 if p % 2 else 1
                bq_dst = b.dims[q - 1]
                for (r, t), v in b.d(q).items():
                    for s in range(a.dims[p]):
                        key = (dst[p] + s * bq_dst + r, base + s * bq + t)
                        mat[key] = mat.get(key, 0) + sign * v
        diffs.append({k: v for k, v in mat.items() if v})
    return ChainComplex(dims, diffs)


def convolve(u: Sequence[int], v: Sequence[int]) -> tuple[int, ...]:
    if not u or not v:
        return ()
    out = [0] * (len(u) + len(v) - 1)
    for i, x in enumerate(u):
        for j, y in enumerate(v):
            out[i + j] += x * y
    return tuple(out)


def _trim(v: Sequence[int]) -> tuple[int, ...]:
    v = list(v)
    while v and v[-1] == 0:
        v.pop()
    return tuple(v)


def kunneth_check(
    a: ChainComplex, b: ChainComplex, *, cap: int = DEFAULT_KUNNETH_CAP
) -> bool:
    """Homology of ``a (x) b`` equals the convolution of the factors' homology."""
    for c in (a, b):
        if c.total_rank() > cap:
            raise ComplexSizeExceeded(
                f"complex of total rank {c.total_rank()} exceeds the cap of {cap}"
            )
    lhs = homology_betti(tensor_complex(a, b))
    rhs = convolve(homology_betti(a), homology_betti(b))
    return _trim(lhs) == _trim(rhs)


def point_complex() -> ChainComplex:
    return ChainComplex((1,))


def cw_nodal_rational() -> ChainComplex:
    return ChainComplex((1, 1, 1))


def cw_torus(g0: int) -> ChainComplex:
    """Product of ``2 * g0`` circles; chain ranks run along a Pascal row."""
    if g0 < 0:
        raise ValueError(f"g0 must be >= 0, got {g0}")
    dims = [1]
    for _ in range(2 * g0):
        dims = [x + y for x, y in zip([0] + dims, dims + [0])]
    return ChainComplex(dims)


def tensor_power(c: ChainComplex, k: int) -> ChainComplex:
    out = point_complex()
    for _ in range(k):
        out = tensor_complex(out, c)
    return out


def _random_unimodular(rng: random.Random, n: int, steps: int):
    """Random integer matrix of determinant +-1 together with its inverse."""
    m = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    inv = [row[:] for row in m]
    for _ in range(steps if n > 1 else 0):
        i, j = rng.sample(range(n), 2)
        c = rng.choice((-2, -1, 1, 2))
        # row_i += c * row_j on m; col_j -= c * col_i on the inverse
        m[i] = [x + c * y for x, y in zip(m[i], m[j])]
        for row in inv:
            row[j] -= c * row[i]
    return m, inv


def _dense_mul(a, b):
    return [
        [sum((a[i][k] * b[k][j] for k in range(len(b))), Fraction(0)) for j in range(len(b[0]))]
        for i in range(len(a))
    ]


def random_complex(
    rng: random.Random, length: int = 3, max_block: int = 2
) -> tuple[ChainComplex, tuple[int, ...]]:
    """A random complex with nonzero differentials and known homology.

    Built as a sum of one-cell pieces (which carry homology) and two-cell
    pieces ``Q -c-> Q`` (which cancel), then disguised by a random unimodular
    change of basis in every degree.  Returns the complex and its Betti vector.
    """
    betti = [rng.randint(0, max_block) for _ in range(length)]
    pairs = [0] + [rng.randint(1 if n == 1 else 0, max_block) for n in range(1, length)]
    dims = [
        betti[n] + pairs[n] + (pairs[n + 1] if n + 1 < length else 0)
        for n in range(length)
    ]
    # degree n basis: [homology | targets of pairs from n+1 | sources of pairs to n-1]
    diffs = []
    for n in range(1, length):
        mat = [[Fraction(0)] * dims[n] for _ in range(dims[n - 1])]
        for e in range(pairs[n]):
            row = betti[n - 1] + e
            col = betti[n] + (pairs[n + 1] if n + 1 < length else 0) + e
            mat[row][col] = Fraction(rng.choice((-3, -2, -1, 1, 2, 3)))
        diffs.append(mat)
    changes = [_random_unimodular(rng, d, 3 * d) for d in dims]
    disguised = []
    for n in range(1, length):
        p_lo, _ = changes[n - 1]
        _, q_hi = changes[n]
        if dims[n - 1] and dims[n]:
            disguised.append(_dense_mul(_dense_mul(p_lo, diffs[n - 1]), q_hi))
        else:
            disguised.append({})
    return ChainComplex(dims, disguised), tuple(betti)
