"""Exact rational linear algebra for adjacency matrices.

Everything runs over Q with arbitrary-precision integers underneath
(fractions.Fraction); no floating point appears anywhere.  Support
membership is a zero-versus-nonzero question, so any epsilon would be
unsound.

rref does fraction-free (Bareiss) forward elimination on integer-scaled
rows, which keeps intermediate entries to exact minors of the input, then
normalizes to reduced row-echelon form with rational back-substitution.
Pivoting is first-nonzero in column order, never by magnitude.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

Rational = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


class RationalMatrix:
    """Immutable dense matrix of Fractions, row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries):
        entries = tuple(
            x if isinstance(x, Fraction) else Fraction(x) for x in entries
        )
        if len(entries) != rows * cols:
            raise ValueError(f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(entries)}")
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, rows):
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, [x for r in rows for x in r])

    @classmethod
    def identity(cls, n):
        return cls(n, n, [_ONE if i == j else _ZERO for i in range(n) for j in range(n)])

    def entry(self, i, j):
        return self.entries[i * self.cols + j]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def apply(self, vec):
        """Matrix-vector product, exact."""
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        out = []
        for i in range(self.rows):
            base = i * self.cols
            s = _ZERO
            for j, x in enumerate(vec):
                if x:
                    s += self.entries[base + j] * x
            out.append(s)
        return tuple(out)

    def __eq__(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        body = "; ".join(
            " ".join(str(x) for x in self.row(i)) for i in range(self.rows)
        )
        return f"RationalMatrix({self.rows}x{self.cols}: {body})"


@dataclass(frozen=True)
class NullBasis:
    """Canonical kernel basis: one vector per free column, unit there."""

    vectors: tuple
    n: int

    @property
    def nullity(self):
        return len(self.vectors)


def adjacency_matrix(g):
    """0/1 adjacency matrix of a graph, as Fractions."""
    n = g.n
    ent = [_ZERO] * (n * n)
    for u, v in g.edges:
        ent[u * n + v] = _ONE
        ent[v * n + u] = _ONE
    return RationalMatrix(n, n, ent)


def rref(m):
    """Reduced row-echelon form over Q, exactly.  Returns (matrix, rank)."""
    rows, cols = m.rows, m.cols
    work = []
    for i in range(rows):
        r = m.row(i)
        scale = 1
        for x in r:
            d = x.denominator
            if d != 1:
                scale = scale * d // gcd(scale, d)
        work.append([x.numerator * (scale // x.denominator) for x in r])

    pivots = []
    prev = 1
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = None
        for i in range(r, rows):
            if work[i][c] != 0:
                p = i
                break
        if p is None:
            continue
        if p != r:
            work[r], work[p] = work[p], work[r]
        piv = work[r][c]
        wr = work[r]
        # One Bareiss step: every lower row is updated, including rows with
        # a zero in the pivot column, or the exact divisions below break.
        for i in range(r + 1, rows):
            wi = work[i]
            f = wi[c]
            for j in range(c, cols):
                q, rem = divmod(wi[j] * piv - f * wr[j], prev)
                if rem:
                    raise ArithmeticError("fraction-free elimination lost exactness")
                wi[j] = q
        pivots.append((r, c))
        prev = piv
        r += 1

    red = [[Fraction(x) for x in row] for row in work]
    for pr, pc in reversed(pivots):
        piv = red[pr][pc]
        if piv != 1:
            red[pr] = [x / piv for x in red[pr]]
        prow = red[pr]
        for i in range(pr):
            f = red[i][pc]
            if f:
                red[i] = [a - f * b for a, b in zip(red[i], prow)]
    flat = [x for row in red for x in row]
    return RationalMatrix(rows, cols, flat), len(pivots)


def _pivot_columns(reduced, rank):
    cols = []
    for i in range(rank):
        row = reduced.row(i)
        j = next(k for k, x in enumerate(row) if x != 0)
        cols.append(j)
    return cols


def kernel_basis(m):
    """Canonical kernel basis of any rational matrix.

    One vector per free column f, with coordinate 1 at f, the negated
    reduced-row entries at the pivot columns, and 0 elsewhere; vectors
    ordered by free column.
    """
    reduced, rank = rref(m)
    pivcols = _pivot_columns(reduced, rank)
    pivset = set(pivcols)
    vectors = []
    for f in range(m.cols):
        if f in pivset:
            continue
        vec = [_ZERO] * m.cols
        vec[f] = _ONE
        for i, pc in enumerate(pivcols):
            x = reduced.entry(i, f)
            if x:
                vec[pc] = -x
        vectors.append(tuple(vec))
    return vectors, rank


def nullity(g):
    """dim ker A(g), exactly."""
    _, rank = rref(adjacency_matrix(g))
    return g.n - rank


def null_basis(g):
    """Canonical kernel basis of A(g), verified exactly before returning.

    Each vector is checked to satisfy A x = 0 coordinate by coordinate;
    a failure would be an internal bug and raises ArithmeticError.
    """
    vectors, rank = kernel_basis(adjacency_matrix(g))
    for vec in vectors:
        for i in range(g.n):
            s = _ZERO
            for w in g.neighbors(i):
                s += vec[w]
            if s != 0:
                raise ArithmeticError("kernel vector fails A x = 0")
    if len(vectors) != g.n - rank:
        raise AssertionError("kernel dimension disagrees with rank")
    return NullBasis(tuple(vectors), g.n)


def support(g):
    """Vertices carrying a nonzero coordinate in some kernel vector.

    Basis-independent: a vertex coordinate vanishes on one basis of the
    kernel iff it vanishes on the whole kernel.
    """
    basis = null_basis(g)
    out = set()
    for vec in basis.vectors:
        for i, x in enumerate(vec):
            if x:
                out.add(i)
    return frozenset(out)
