"""Second cohomology of structure-constant Lie algebras.

Central coefficients (trivial action) and the twisted case, where a
one-dimensional coefficient line carries a weight action vanishing on the
nilradical.  Cocycle spaces are kernels of the cocycle identity assembled
over all basis triples; coboundaries are spans over a dual basis of linear
maps.  Both live in the flattened upper-triangle coordinate ambient: a pair
basis (i, j), i < j, ordered lexicographically, one block per coefficient
component.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DimensionMismatch, InvalidWeight
from .liecore import LieAlgebra, center, derived_series, nilradical_solvable
from .ratlin import (
    Matrix,
    QZERO,
    QuotientSpace,
    Subspace,
    as_q,
    kernel_basis,
    quotient_basis,
)


@lru_cache(maxsize=None)
def pair_index(dim: int):
    """Lexicographic list of index pairs (i, j), i < j, and its inverse map."""
    pairs = [(i, j) for i in range(dim) for j in range(i + 1, dim)]
    lookup = {p: t for t, p in enumerate(pairs)}
    return tuple(pairs), lookup


def pair_ambient(dim: int) -> int:
    return dim * (dim - 1) // 2


@dataclass(frozen=True)
class Cocycle:
    """Antisymmetric bilinear form with values in an s-dimensional space."""

    algebra_dim: int
    components: tuple[Matrix, ...]

    def __post_init__(self):
        for m in self.components:
            if m.rows != self.algebra_dim or m.cols != self.algebra_dim:
                raise DimensionMismatch("component shape does not match algebra_dim")
            for i in range(m.rows):
                if m.data[i][i] != 0:
                    raise DimensionMismatch("component has a nonzero diagonal")
                for j in range(i + 1, m.cols):
                    if m.data[i][j] != -m.data[j][i]:
                        raise DimensionMismatch("component is not antisymmetric")

    @property
    def coeff_dim(self) -> int:
        return len(self.components)

    @staticmethod
    def from_entries(dim: int, *component_entries) -> "Cocycle":
        """Build from ``{(i, j): value}`` maps (i < j, 0-based), one per component."""
        comps = []
        for entries in component_entries:
            grid = [[QZERO] * dim for _ in range(dim)]
            for (i, j), val in entries.items():
                if not 0 <= i < j < dim:
                    raise DimensionMismatch(f"entry index ({i}, {j}) is not i < j")
                val = as_q(val)
                grid[i][j] = val
                grid[j][i] = -val
            comps.append(Matrix.from_rows(grid))
        return Cocycle(dim, tuple(comps))

    @staticmethod
    def from_flat(dim: int, vector) -> "Cocycle":
        """Inverse of :meth:`flat` for a single component."""
        pairs, _ = pair_index(dim)
        vector = list(vector)
        if len(vector) % len(pairs):
            raise DimensionMismatch("flat vector length is not a pair multiple")
        s = len(vector) // len(pairs)
        comps = []
        for t in range(s):
            chunk = vector[t * len(pairs):(t + 1) * len(pairs)]
            comps.append({p: v for p, v in zip(pairs, chunk)})
        return Cocycle.from_entries(dim, *comps)

    def flat(self) -> tuple[Fraction, ...]:
        """Upper-triangle coordinates, components concatenated."""
        pairs, _ = pair_index(self.algebra_dim)
        out = []
        for m in self.components:
            out.extend(m.data[i][j] for i, j in pairs)
        return tuple(out)

    def value(self, u, v) -> tuple[Fraction, ...]:
        """Evaluate on two vectors; one scalar per component."""
        return tuple(
            sum((x * y for x, y in zip(m.matvec(v), u)), QZERO) for m in self.components
        )

    def entry(self, i: int, j: int, component: int = 0) -> Fraction:
        return self.components[component].data[i][j]

    def is_zero(self) -> bool:
        return all(m.is_zero() for m in self.components)

    def add(self, other: "Cocycle") -> "Cocycle":
        if self.algebra_dim != other.algebra_dim or self.coeff_dim != other.coeff_dim:
            raise DimensionMismatch("cocycle addition shape mismatch")
        return Cocycle(
            self.algebra_dim,
            tuple(a.add(b) for a, b in zip(self.components, other.components)),
        )

    def scale(self, c) -> "Cocycle":
        return Cocycle(self.algebra_dim, tuple(m.scale(c) for m in self.components))


def delta(dim: int, i: int, j: int, coeff=1) -> Cocycle:
    """The antisymmetrized elementary form with value ``coeff`` on (e_i, e_j)."""
    return Cocycle.from_entries(dim, {(i, j): coeff} if i < j else {(j, i): -as_q(coeff)})


@dataclass(frozen=True)
class WeightAction:
    """Scalar action of each basis element on a one-dimensional space."""

    weights: tuple[Fraction, ...]

    @staticmethod
    def of(weights) -> "WeightAction":
        return WeightAction(tuple(as_q(w) for w in weights))

    @staticmethod
    def zero(dim: int) -> "WeightAction":
        return WeightAction(tuple([QZERO] * dim))

    @property
    def dim(self) -> int:
        return len(self.weights)

    def is_zero(self) -> bool:
        return all(w == 0 for w in self.weights)


def validate_weight(L: LieAlgebra, theta: WeightAction) -> None:
    """Weights must vanish on [L, L] and on the nilradical."""
    if theta.dim != L.dim:
        raise InvalidWeight("weight vector length does not match the algebra")
    if theta.is_zero():
        return
    derived = derived_series(L).terms[1] if L.dim else None
    if derived is not None:
        for v in derived.basis.data:
            if sum((w * x for w, x in zip(theta.weights, v)), QZERO) != 0:
                raise InvalidWeight("weight does not vanish on [L, L]")
    nil = nilradical_solvable(L)
    for v in nil.basis.data:
        if sum((w * x for w, x in zip(theta.weights, v)), QZERO) != 0:
            raise InvalidWeight("weight does not vanish on the nilradical")


def _cocycle_rows(L: LieAlgebra, theta: WeightAction | None):
    """Equation rows of the (twisted) cocycle identity over all basis triples.

    Unknowns are the pair coordinates c_{(i,j)} = psi(e_i, e_j), i < j.
    The identity on (x, y, z) = (e_a, e_b, e_c), a < b < c reads
    psi(x,[y,z]) + psi(z,[x,y]) + psi(y,[z,x])
      + th(x) psi(y,z) + th(z) psi(x,y) + th(y) psi(z,x) = 0.
    """
    n = L.dim
    pairs, lookup = pair_index(n)
    w = theta.weights if theta is not None else None
    rows = []
    for a in range(n):
        for b in range(a + 1, n):
            for c in range(b + 1, n):
                row = [QZERO] * len(pairs)

                def put(i, j, coeff):
                    if i == j or not coeff:
                        return
                    if i < j:
                        row[lookup[(i, j)]] += coeff
                    else:
                        row[lookup[(j, i)]] -= coeff

                for (x, y, z) in ((a, b, c), (c, a, b), (b, c, a)):
                    for k, cf in L.bracket_basis(y, z).items():
                        put(x, k, cf)
                if w is not None:
                    put(b, c, w[a])
                    put(a, b, w[c])
                    put(c, a, w[b])
                if any(v != 0 for v in row):
                    rows.append(row)
    return rows, len(pairs)


@lru_cache(maxsize=None)
def central_cocycles(N: LieAlgebra) -> Subspace:
    """Z2 with trivial one-dimensional coefficients, as a pair-coordinate subspace."""
    rows, ambient = _cocycle_rows(N, None)
    if not rows:
        return Subspace.full(ambient)
    return kernel_basis(Matrix.from_rows(rows, ambient))


@lru_cache(maxsize=None)
def central_coboundaries(N: LieAlgebra) -> Subspace:
    """B2: spans of (x, y) -> f([x, y]) over the dual basis of f's."""
    pairs, _ = pair_index(N.dim)
    vectors = []
    for k in range(N.dim):
        vec = [N.bracket_basis(i, j).get(k, QZERO) for i, j in pairs]
        if any(v != 0 for v in vec):
            vectors.append(vec)
    return Subspace.from_vectors(vectors, len(pairs))


def central_h2(N: LieAlgebra) -> QuotientSpace:
    return quotient_basis(central_cocycles(N), central_coboundaries(N))


@lru_cache(maxsize=None)
def _twisted_cocycles_cached(L: LieAlgebra, theta: WeightAction) -> Subspace:
    rows, ambient = _cocycle_rows(L, theta)
    if not rows:
        return Subspace.full(ambient)
    return kernel_basis(Matrix.from_rows(rows, ambient))


def twisted_cocycles(L: LieAlgebra, theta: WeightAction) -> Subspace:
    """Z2 w.r.t. the weight action (reduces to the central case for theta = 0)."""
    validate_weight(L, theta)
    return _twisted_cocycles_cached(L, theta)


@lru_cache(maxsize=None)
def _twisted_coboundaries_cached(L: LieAlgebra, theta: WeightAction) -> Subspace:
    pairs, _ = pair_index(L.dim)
    w = theta.weights
    vectors = []
    for k in range(L.dim):
        vec = []
        for i, j in pairs:
            val = L.bracket_basis(i, j).get(k, QZERO)
            # df(e_i, e_j) = f([e_i, e_j]) + th(e_j) f(e_i) - th(e_i) f(e_j)
            if k == i:
                val += w[j]
            if k == j:
                val -= w[i]
            vec.append(val)
        if any(v != 0 for v in vec):
            vectors.append(vec)
    return Subspace.from_vectors(vectors, len(pairs))


def twisted_coboundaries(L: LieAlgebra, theta: WeightAction) -> Subspace:
    validate_weight(L, theta)
    return _twisted_coboundaries_cached(L, theta)


def twisted_h2(L: LieAlgebra, theta: WeightAction) -> QuotientSpace:
    return quotient_basis(twisted_cocycles(L, theta), twisted_coboundaries(L, theta))


def annihilator(N: LieAlgebra, psi: Cocycle) -> Subspace:
    """{x : psi(x, e_j) = 0 for all j, in every component}."""
    if psi.algebra_dim != N.dim:
        raise DimensionMismatch("cocycle does not live on this algebra")
    rows = []
    for m in psi.components:
        for j in range(N.dim):
            row = [m.data[i][j] for i in range(N.dim)]
            if any(v != 0 for v in row):
                rows.append(row)
    if not rows:
        return Subspace.full(N.dim)
    return kernel_basis(Matrix.from_rows(rows, N.dim))


def t1_condition(N: LieAlgebra, psi: Cocycle) -> bool:
    """Annihilator meets the center trivially (the non-split criterion)."""
    from .ratlin import subspace_intersect

    return subspace_intersect(annihilator(N, psi), center(N)).dim == 0


def restrict_to_nilradical(L: LieAlgebra, psi: Cocycle, nil: Subspace) -> Cocycle:
    """The form restricted to the nilradical, in nilradical coordinates."""
    if nil.ambient_dim != L.dim or psi.algebra_dim != L.dim:
        raise DimensionMismatch("restriction ambient mismatch")
    basis = nil.basis.data
    comps = []
    for m in psi.components:
        entries = {}
        for a in range(nil.dim):
            for b in range(a + 1, nil.dim):
                val = sum(
                    (basis[a][i] * sum((m.data[i][j] * basis[b][j] for j in range(L.dim)), QZERO)
                     for i in range(L.dim)),
                    QZERO,
                )
                if val:
                    entries[(a, b)] = val
        comps.append(entries)
    return Cocycle.from_entries(nil.dim, *comps)


def in_subspace(psi: Cocycle, space: Subspace) -> bool:
    """Membership of a one-component cocycle's flat vector in a pair-subspace."""
    return space.contains(psi.flat())
