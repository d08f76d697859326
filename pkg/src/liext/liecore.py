"""Lie algebras given by structure constants.

An algebra is a dimension, ordered basis labels, and a sparse table of
brackets ``[e_i, e_j]`` for ``i < j`` only; the mirror bracket and zero
diagonal are implied.  Everything downstream (series, center, nilradical,
gradation) is computed from this table with exact rational arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import (
    DimensionMismatch,
    InternalCheckFailed,
    NotFiliform,
    NotSolvable,
    Unrecognized,
)
from .errors import Singular
from .ratlin import (
    Matrix,
    QZERO,
    Subspace,
    as_q,
    inverse,
    kernel_basis,
    subspace_sum,
)

TYPE_NN1 = "chain"
TYPE_Q = "chain_with_pairing"


@dataclass(frozen=True)
class LieAlgebra:
    """Immutable structure-constant table.

    ``sc`` maps flattened as a sorted tuple of ``((i, j), ((k, c), ...))``
    entries with ``i < j`` and nonzero coefficients ``c`` only.
    """

    dim: int
    labels: tuple[str, ...]
    sc: tuple[tuple[tuple[int, int], tuple[tuple[int, Fraction], ...]], ...]

    @property
    def table(self) -> dict:
        d = self.__dict__.get("_table")
        if d is None:
            d = {pair: dict(terms) for pair, terms in self.sc}
            self.__dict__["_table"] = d
        return d

    def bracket_basis(self, i: int, j: int) -> dict[int, Fraction]:
        """[e_i, e_j] as a sparse {k: coeff} map, any i, j."""
        if i == j:
            return {}
        if i < j:
            return self.table.get((i, j), {})
        terms = self.table.get((j, i), {})
        return {k: -c for k, c in terms.items()}


def lie_algebra(dim: int, brackets, labels=None) -> LieAlgebra:
    """Build a LieAlgebra from ``{(i, j): {k: coeff}}`` with i < j (0-based)."""
    if labels is None:
        labels = tuple(f"e{i + 1}" for i in range(dim))
    labels = tuple(labels)
    if len(labels) != dim:
        raise DimensionMismatch("label count differs from dim")
    norm = {}
    for (i, j), terms in brackets.items():
        if not (0 <= i < j < dim):
            raise DimensionMismatch(f"bracket index ({i}, {j}) out of range for dim {dim}")
        cleaned = {}
        for k, c in terms.items():
            if not 0 <= k < dim:
                raise DimensionMismatch(f"bracket target {k} out of range")
            c = as_q(c)
            if c:
                cleaned[k] = c
        if cleaned:
            norm[(i, j)] = tuple(sorted(cleaned.items()))
    sc = tuple(sorted(norm.items()))
    return LieAlgebra(dim, labels, sc)


def bracket(L: LieAlgebra, u, v) -> tuple[Fraction, ...]:
    """Bilinear antisymmetric extension of the structure constants."""
    u = [as_q(x) for x in u]
    v = [as_q(x) for x in v]
    if len(u) != L.dim or len(v) != L.dim:
        raise DimensionMismatch("vector length does not match algebra dimension")
    out = [QZERO] * L.dim
    for (i, j), terms in L.sc:
        c = u[i] * v[j] - u[j] * v[i]
        if c:
            for k, coeff in terms:
                out[k] += c * coeff
    return tuple(out)


def ad_matrix(L: LieAlgebra, v) -> Matrix:
    """Matrix of ad(v): columns are [v, e_j] in basis coordinates."""
    cols = [bracket(L, v, _unit(L.dim, j)) for j in range(L.dim)]
    return Matrix.from_rows(list(zip(*cols)), L.dim)


def _unit(n: int, i: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(1) if j == i else QZERO for j in range(n))


def jacobi_violations(L: LieAlgebra):
    """Nonzero cyclic sums [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]]."""
    out = []
    n = L.dim
    units = [_unit(n, i) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                res = [QZERO] * n
                for (a, b, c) in ((i, j, k), (j, k, i), (k, i, j)):
                    inner = L.bracket_basis(b, c)
                    for m, cf in inner.items():
                        outer = L.bracket_basis(a, m)
                        for t, cf2 in outer.items():
                            res[t] += cf * cf2
                if any(x != 0 for x in res):
                    out.append((i, j, k, tuple(res)))
    return out


@dataclass(frozen=True)
class SeriesReport:
    kind: str  # "derived" or "lower-central"
    terms: tuple[Subspace, ...]
    stabilized: bool


def _bracket_span(L: LieAlgebra, a: Subspace, b: Subspace) -> Subspace:
    vecs = []
    for u in a.basis.data:
        for v in b.basis.data:
            w = bracket(L, u, v)
            if any(x != 0 for x in w):
                vecs.append(w)
    return Subspace.from_vectors(vecs, L.dim)


def lower_central_series(L: LieAlgebra) -> SeriesReport:
    full = Subspace.full(L.dim)
    terms = [full]
    for _ in range(L.dim + 1):
        nxt = _bracket_span(L, terms[-1], full)
        if nxt == terms[-1]:
            return SeriesReport("lower-central", tuple(terms), True)
        terms.append(nxt)
        if nxt.dim == 0:
            return SeriesReport("lower-central", tuple(terms), True)
    return SeriesReport("lower-central", tuple(terms), False)


def derived_series(L: LieAlgebra) -> SeriesReport:
    terms = [Subspace.full(L.dim)]
    for _ in range(L.dim + 1):
        nxt = _bracket_span(L, terms[-1], terms[-1])
        if nxt == terms[-1]:
            return SeriesReport("derived", tuple(terms), True)
        terms.append(nxt)
        if nxt.dim == 0:
            return SeriesReport("derived", tuple(terms), True)
    return SeriesReport("derived", tuple(terms), False)


def center(L: LieAlgebra) -> Subspace:
    """{x : [x, e_j] = 0 for all j} via the stacked adjoint system."""
    rows = []
    for j in range(L.dim):
        for k in range(L.dim):
            row = [QZERO] * L.dim
            nonzero = False
            for i in range(L.dim):
                c = L.bracket_basis(i, j).get(k)
                if c:
                    row[i] = c
                    nonzero = True
            if nonzero:
                rows.append(row)
    if not rows:
        return Subspace.full(L.dim)
    return kernel_basis(Matrix.from_rows(rows, L.dim))


def is_nilpotent(L: LieAlgebra) -> bool:
    rep = lower_central_series(L)
    return rep.terms[-1].dim == 0


def is_solvable(L: LieAlgebra) -> bool:
    rep = derived_series(L)
    return rep.terms[-1].dim == 0


def is_filiform(L: LieAlgebra) -> bool:
    """Nilpotent with dim L^i = n - i for every i in 2..n."""
    n = L.dim
    rep = lower_central_series(L)
    if rep.terms[-1].dim != 0:
        return False
    dims = [t.dim for t in rep.terms]
    expected = [n] + [n - i for i in range(2, n + 1)]
    return dims == expected


def _matrix_is_nilpotent(m: Matrix) -> bool:
    power = m
    for _ in range(m.rows):
        if power.is_zero():
            return True
        power = power * m
    return power.is_zero()


def _trace(m: Matrix) -> Fraction:
    return sum((m.data[i][i] for i in range(m.rows)), QZERO)


def _associative_closure(mats: list[Matrix], n: int) -> list[Matrix]:
    """Basis of the associative algebra generated by ``mats`` (n x n)."""
    basis: list[Matrix] = []
    span = Subspace.zero(n * n)
    queue = list(mats)
    while queue:
        m = queue.pop()
        flat = tuple(x for row in m.data for x in row)
        if span.contains(flat):
            continue
        span = subspace_sum(span, Subspace.from_vectors([flat], n * n))
        basis.append(m)
        for g in mats:
            queue.append(m * g)
    return basis


def nilradical_solvable(L: LieAlgebra) -> Subspace:
    """Nilradical of a solvable algebra: its ad-nilpotent elements.

    For solvable L in characteristic 0 the ad-nilpotent elements form a
    subspace (the nilradical) cut out by linear trace conditions: x is
    ad-nilpotent iff tr(ad(x) * P) = 0 for P ranging over the identity and
    the associative algebra generated by all ad(e_i).  The result is
    re-verified as a nilpotent ideal before returning.
    """
    if not is_solvable(L):
        raise NotSolvable("nilradical computation requires a solvable algebra")
    n = L.dim
    ads = [ad_matrix(L, _unit(n, i)) for i in range(n)]
    probes = [Matrix.identity(n)] + _associative_closure(ads, n)
    rows = []
    for p in probes:
        row = [_trace(ads[i] * p) for i in range(n)]
        if any(x != 0 for x in row):
            rows.append(row)
    cand = kernel_basis(Matrix.from_rows(rows, n)) if rows else Subspace.full(n)
    # safety net: the candidate must be a nilpotent ideal
    for j in range(n):
        ej = _unit(n, j)
        for v in cand.basis.data:
            if not cand.contains(bracket(L, ej, v)):
                raise InternalCheckFailed("nilradical candidate is not an ideal")
    if cand.dim and not is_nilpotent(subalgebra(L, cand)):
        raise InternalCheckFailed("nilradical candidate is not nilpotent")
    return cand


def subalgebra(L: LieAlgebra, s: Subspace, labels=None) -> LieAlgebra:
    """Restriction of L to a bracket-closed subspace, in s's basis coordinates."""
    basis = s.basis.data
    brackets = {}
    for a in range(s.dim):
        for b in range(a + 1, s.dim):
            w = bracket(L, basis[a], basis[b])
            coords = s.coords(w)
            if coords is None:
                raise InternalCheckFailed("subspace is not closed under the bracket")
            terms = {k: c for k, c in enumerate(coords) if c}
            if terms:
                brackets[(a, b)] = terms
    if labels is None:
        labels = tuple(f"v{i + 1}" for i in range(s.dim))
    return lie_algebra(s.dim, brackets, labels)


def change_basis(L: LieAlgebra, p: Matrix) -> LieAlgebra:
    """Transport structure constants through the basis change f_i = p[:, i]."""
    if p.rows != L.dim or p.cols != L.dim:
        raise DimensionMismatch("basis-change matrix must be dim x dim")
    pinv = inverse(p)  # raises Singular
    cols = [tuple(p.data[r][i] for r in range(L.dim)) for i in range(L.dim)]
    brackets = {}
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            w = bracket(L, cols[i], cols[j])
            coords = pinv.matvec(w)
            terms = {k: c for k, c in enumerate(coords) if c}
            if terms:
                brackets[(i, j)] = terms
    return lie_algebra(L.dim, brackets, L.labels)


@lru_cache(maxsize=None)
def _graded_algebra(L: LieAlgebra) -> LieAlgebra:
    """Associated graded algebra of a nilpotent L in an adapted basis.

    Coset representatives for each L^k/L^(k+1) are chosen greedily along
    RREF rows, so the output is deterministic.
    """
    rep = lower_central_series(L)
    terms = list(rep.terms) + [Subspace.zero(L.dim)]
    reps = []       # adapted basis vectors, grade by grade
    grades = []     # grade of each adapted vector
    for g in range(len(terms) - 1):
        cur, nxt = terms[g], terms[g + 1]
        spanned = nxt
        for row in cur.basis.data:
            if not spanned.contains(row):
                reps.append(row)
                grades.append(g + 1)
                spanned = subspace_sum(spanned, Subspace.from_vectors([row], L.dim))
    m = len(reps)
    if m != L.dim:
        raise InternalCheckFailed("adapted basis does not span")
    basis_matrix = Matrix.from_rows(reps).transpose()
    binv = inverse(basis_matrix)
    brackets = {}
    for a in range(m):
        for b in range(a + 1, m):
            w = bracket(L, reps[a], reps[b])
            coords = binv.matvec(w)
            target = grades[a] + grades[b]
            terms_ab = {k: c for k, c in enumerate(coords) if c and grades[k] == target}
            if terms_ab:
                brackets[(a, b)] = terms_ab
    return lie_algebra(m, brackets, tuple(f"g{i + 1}" for i in range(m)))


def graded_filiform_type(L: LieAlgebra) -> str:
    """Classify Gr(L) of a filiform algebra as TYPE_NN1 or TYPE_Q.

    Reconstructs a canonical basis inside Gr(L): the degree-1 direction that
    kills grade 2 is the non-chain generator, the chain is rebuilt by
    bracketing with its complement, the top grade comes from either the chain
    (pure chain type) or the degree-(1, n-2) product (pairing type), and the
    full product table is matched exactly against the two known patterns.
    """
    if not is_filiform(L):
        raise NotFiliform("graded type is defined for filiform algebras only")
    n = L.dim
    gr = _graded_algebra(L)
    # grade 1 is spanned by the first two adapted vectors, grade k by g_{k+1};
    # z is the degree-1 direction with [z, g_3] = 0
    g3 = _unit(n, 2)
    cols = [bracket(gr, _unit(n, i), g3) for i in range(2)]
    ker = kernel_basis(Matrix.from_rows(list(zip(*cols)), 2))
    if ker.dim != 1:
        raise Unrecognized("degree-1 chain direction is not unique")
    zc = ker.basis.data[0]
    z = tuple(zc[0] * x + zc[1] * y for x, y in zip(_unit(n, 0), _unit(n, 1)))
    g = _unit(n, 0) if zc[1] != 0 else _unit(n, 1)
    # f1 = g drives the chain, f2 = z, f_{i+1} = [f_i, f1] up to grade n-2
    f = [g, z]
    for _ in range(n - 3):
        nxt = bracket(gr, f[-1], f[0])
        if all(x == 0 for x in nxt):
            raise Unrecognized("chain terminates early in the graded algebra")
        f.append(nxt)
    top_chain = bracket(gr, f[-1], f[0])
    q_type = all(x == 0 for x in top_chain)
    if q_type:
        top = bracket(gr, f[1], f[-1])
        if all(x == 0 for x in top):
            raise Unrecognized("top grade is not reached by chain or pairing")
        f.append(top)
    else:
        f.append(top_chain)
    fm = Matrix.from_rows(f).transpose()
    try:
        canon = change_basis(gr, fm)
    except Singular as exc:
        raise Unrecognized("reconstructed chain is not a basis") from exc
    table = {pair: dict(terms) for pair, terms in canon.sc}
    # chain in 0-based sc form: [v_0, v_a] = -v_{a+1}
    chain_top = n - 2 if not q_type else n - 3
    expected = {(0, a): {a + 1: as_q(-1)} for a in range(1, chain_top + 1)}
    if q_type:
        if n % 2 != 0:
            raise Unrecognized("pairing products in odd dimension")
        for i1 in range(2, n // 2 + 1):
            expected[(i1 - 1, n - i1)] = {n - 1: as_q((-1) ** i1)}
    if table == expected:
        return TYPE_Q if q_type else TYPE_NN1
    raise Unrecognized("graded products match neither filiform pattern")


def structure_equal(a: LieAlgebra, b: LieAlgebra) -> bool:
    """Exact equality of structure constants in the stored basis order."""
    if a.dim != b.dim:
        raise DimensionMismatch("structure comparison across different dimensions")
    return a.sc == b.sc
