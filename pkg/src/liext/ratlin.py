"""Exact linear algebra over the rationals.

Row reduction, kernels, subspace arithmetic and quotient bases, all on
``fractions.Fraction`` entries.  Subspaces are stored in reduced row-echelon
form with leading-1 pivots, so equal subspaces have identical bases and set
equality is plain ``==``.

Row reduction clears denominators and eliminates with integer
cross-multiplication (dividing each updated row by its gcd), which is
considerably faster than Fraction arithmetic in the inner loop; entries are
converted back to Fractions only when pivots are normalized at the end.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import AmbientMismatch, DimensionMismatch, NotASubspace, Singular

Q = Fraction

QZERO = Fraction(0)
QONE = Fraction(1)


def as_q(x) -> Fraction:
    """Coerce an int, string like ``-3/7``, or Fraction to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def qstr(x: Fraction) -> str:
    """Render a Fraction as ``p/q`` (or plain ``p`` for integers)."""
    x = as_q(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class Matrix:
    """Immutable dense matrix of Fractions (tuple of row tuples)."""

    data: tuple[tuple[Fraction, ...], ...]
    cols: int

    @staticmethod
    def from_rows(rows, cols: int | None = None) -> "Matrix":
        rows = [tuple(as_q(x) for x in row) for row in rows]
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise DimensionMismatch("ragged rows")
            if cols is not None and cols != width:
                raise DimensionMismatch(f"expected {cols} columns, got {width}")
            cols = width
        elif cols is None:
            cols = 0
        return Matrix(tuple(rows), cols)

    @staticmethod
    def zeros(rows: int, cols: int) -> "Matrix":
        return Matrix(tuple(tuple([QZERO] * cols) for _ in range(rows)), cols)

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix(
            tuple(tuple(QONE if i == j else QZERO for j in range(n)) for i in range(n)),
            n,
        )

    @property
    def rows(self) -> int:
        return len(self.data)

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.data[i]

    def transpose(self) -> "Matrix":
        return Matrix(tuple(zip(*self.data)) if self.data else (), self.rows)

    def matvec(self, v) -> tuple[Fraction, ...]:
        if len(v) != self.cols:
            raise DimensionMismatch("matvec length mismatch")
        return tuple(sum((r[j] * v[j] for j in range(self.cols)), QZERO) for r in self.data)

    def matmul(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise DimensionMismatch("matmul shape mismatch")
        bt = other.transpose().data
        out = tuple(
            tuple(sum((a[k] * b[k] for k in range(self.cols)), QZERO) for b in bt)
            for a in self.data
        )
        return Matrix(out, other.cols)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            return self.matmul(other)
        return NotImplemented

    def scale(self, c) -> "Matrix":
        c = as_q(c)
        return Matrix(tuple(tuple(c * x for x in r) for r in self.data), self.cols)

    def add(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionMismatch("matrix addition shape mismatch")
        return Matrix(
            tuple(tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(self.data, other.data)),
            self.cols,
        )

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.data for x in r)


def _int_rows(rows) -> list[list[int]]:
    """Scale each row by the lcm of its denominators; drop to plain ints."""
    out = []
    for row in rows:
        den = 1
        for x in row:
            d = x.denominator
            if d != 1:
                den = den * d // gcd(den, d)
        out.append([int(x * den) for x in row] if den != 1 else [x.numerator for x in row])
    return out


def _reduce_row(row: list[int]) -> None:
    g = 0
    for x in row:
        if x:
            g = gcd(g, x)
            if g == 1:
                return
    if g > 1:
        for j, x in enumerate(row):
            if x:
                row[j] = x // g


def _rref_int(rows: list[list[int]], cols: int):
    """Gauss-Jordan over integer rows; returns (fraction rows, pivots)."""
    pivots: list[int] = []
    nrows = len(rows)
    r = 0
    for c in range(cols):
        # pick the pivot row: smallest nonzero magnitude keeps entries small
        best = -1
        for i in range(r, nrows):
            v = rows[i][c]
            if v:
                if best < 0 or abs(v) < abs(rows[best][c]):
                    best = i
                    if abs(v) == 1:
                        break
        if best < 0:
            continue
        if best != r:
            rows[r], rows[best] = rows[best], rows[r]
        prow = rows[r]
        p = prow[c]
        for i in range(r + 1, nrows):
            row = rows[i]
            q = row[c]
            if q:
                for j in range(c, cols):
                    row[j] = p * row[j] - q * prow[j]
                _reduce_row(row)
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    # eliminate above each pivot, last to first
    for k in range(len(pivots) - 1, -1, -1):
        c = pivots[k]
        prow = rows[k]
        p = prow[c]
        for i in range(k):
            row = rows[i]
            q = row[c]
            if q:
                for j in range(c, cols):
                    row[j] = p * row[j] - q * prow[j]
                _reduce_row(row)
    out = []
    for k, c in enumerate(pivots):
        p = rows[k][c]
        out.append(tuple(Fraction(x, p) for x in rows[k]))
    return out, tuple(pivots)


def rref(m: Matrix):
    """Reduced row-echelon form.

    Returns ``(R, pivots)`` where ``R`` keeps the shape of ``m`` (zero rows
    at the bottom) and ``pivots`` lists the pivot columns.  The nonzero rows
    of ``R`` are the canonical basis of the row space.
    """
    reduced, pivots = _rref_int(_int_rows(m.data), m.cols)
    pad = [tuple([QZERO] * m.cols)] * (m.rows - len(reduced))
    return Matrix(tuple(reduced) + tuple(pad), m.cols), pivots


@dataclass(frozen=True)
class Subspace:
    """A linear subspace of Q^n held as an RREF basis (no zero rows)."""

    ambient_dim: int
    basis: Matrix
    pivots: tuple[int, ...]

    @staticmethod
    def from_vectors(vectors, ambient_dim: int) -> "Subspace":
        vecs = [tuple(as_q(x) for x in v) for v in vectors]
        for v in vecs:
            if len(v) != ambient_dim:
                raise AmbientMismatch(f"vector of length {len(v)} in ambient {ambient_dim}")
        reduced, pivots = _rref_int(_int_rows(vecs), ambient_dim)
        return Subspace(ambient_dim, Matrix(tuple(reduced), ambient_dim), pivots)

    @staticmethod
    def zero(ambient_dim: int) -> "Subspace":
        return Subspace(ambient_dim, Matrix((), ambient_dim), ())

    @staticmethod
    def full(ambient_dim: int) -> "Subspace":
        return Subspace(ambient_dim, Matrix.identity(ambient_dim), tuple(range(ambient_dim)))

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def reduce(self, v) -> tuple[Fraction, ...]:
        """Canonical coset representative of ``v`` modulo this subspace."""
        res = [as_q(x) for x in v]
        if len(res) != self.ambient_dim:
            raise AmbientMismatch("vector length does not match ambient")
        for row, p in zip(self.basis.data, self.pivots):
            c = res[p]
            if c:
                for j in range(p, self.ambient_dim):
                    if row[j]:
                        res[j] -= c * row[j]
        return tuple(res)

    def contains(self, v) -> bool:
        return all(x == 0 for x in self.reduce(v))

    def coords(self, v):
        """Coordinates of ``v`` in the stored basis, or None if outside."""
        res = [as_q(x) for x in v]
        if len(res) != self.ambient_dim:
            raise AmbientMismatch("vector length does not match ambient")
        coords = []
        for row, p in zip(self.basis.data, self.pivots):
            c = res[p]
            coords.append(c)
            if c:
                for j in range(p, self.ambient_dim):
                    if row[j]:
                        res[j] -= c * row[j]
        if any(x != 0 for x in res):
            return None
        return tuple(coords)


def member_coords(v, s: Subspace):
    """Coordinates of ``v`` in the basis of ``s``; None when ``v`` is outside."""
    return s.coords(v)


def kernel_basis(m: Matrix) -> Subspace:
    """Canonical RREF basis of the right null space of ``m``."""
    reduced, pivots = _rref_int(_int_rows(m.data), m.cols)
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    vectors = []
    for f in free:
        v = [QZERO] * m.cols
        v[f] = QONE
        for r, p in enumerate(pivots):
            v[p] = -reduced[r][f]
        vectors.append(v)
    return Subspace.from_vectors(vectors, m.cols)


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    if a.ambient_dim != b.ambient_dim:
        raise AmbientMismatch("ambient dimensions differ")
    return Subspace.from_vectors(list(a.basis.data) + list(b.basis.data), a.ambient_dim)


def _complement(s: Subspace) -> Subspace:
    """Orthogonal complement w.r.t. the standard dot product."""
    if s.dim == 0:
        return Subspace.full(s.ambient_dim)
    return kernel_basis(s.basis)


def subspace_intersect(a: Subspace, b: Subspace) -> Subspace:
    if a.ambient_dim != b.ambient_dim:
        raise AmbientMismatch("ambient dimensions differ")
    return _complement(subspace_sum(_complement(a), _complement(b)))


@dataclass(frozen=True)
class QuotientSpace:
    """total/sub with deterministic coset representatives."""

    total: Subspace
    sub: Subspace
    coset_reps: tuple[tuple[Fraction, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.coset_reps)


def quotient_basis(total: Subspace, sub: Subspace) -> QuotientSpace:
    """Extend ``sub`` to ``total`` greedily along total's RREF rows."""
    if total.ambient_dim != sub.ambient_dim:
        raise AmbientMismatch("ambient dimensions differ")
    for row in sub.basis.data:
        if not total.contains(row):
            raise NotASubspace("sub is not contained in total")
    reps = []
    spanned = sub
    for row in total.basis.data:
        if not spanned.contains(row):
            reps.append(row)
            spanned = subspace_sum(spanned, Subspace.from_vectors([row], total.ambient_dim))
    if len(reps) != total.dim - sub.dim:
        raise NotASubspace("quotient representative count mismatch")
    return QuotientSpace(total, sub, tuple(reps))


def solve_linear(a: Matrix, b) -> tuple[Fraction, ...] | None:
    """One solution of ``a @ x = b`` (free variables set to 0), or None."""
    b = [as_q(x) for x in b]
    if len(b) != a.rows:
        raise DimensionMismatch("right-hand side length mismatch")
    aug = [list(row) + [bi] for row, bi in zip(a.data, b)]
    reduced, pivots = _rref_int(_int_rows(aug), a.cols + 1)
    x = [QZERO] * a.cols
    for row, p in zip(reduced, pivots):
        if p == a.cols:
            return None  # inconsistent system
        x[p] = row[a.cols]
    return tuple(x)


def solve_coords(vectors, target) -> tuple[Fraction, ...] | None:
    """Coefficients writing ``target`` as a combination of ``vectors``."""
    vecs = [tuple(as_q(x) for x in v) for v in vectors]
    if not vecs:
        return () if all(as_q(x) == 0 for x in target) else None
    cols = Matrix.from_rows(vecs).transpose()
    return solve_linear(cols, target)


def inverse(m: Matrix) -> Matrix:
    """Inverse of a square matrix; raises Singular when rank-deficient."""
    n = m.rows
    if n != m.cols:
        raise DimensionMismatch("inverse of a non-square matrix")
    aug = [list(row) + [QONE if i == j else QZERO for j in range(n)] for i, row in enumerate(m.data)]
    reduced, pivots = _rref_int(_int_rows(aug), 2 * n)
    if len(pivots) < n or any(p >= n for p in pivots):
        raise Singular("matrix is singular")
    return Matrix(tuple(tuple(row[n:]) for row in reduced), n)
