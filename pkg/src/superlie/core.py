"""Finite-dimensional Lie superalgebras over exact rationals.

An algebra is an ordered homogeneous basis (all even elements before all odd
ones) together with a table of structure constants for ordered index pairs
(i, j), i <= j; brackets for i > j are derived from graded skew-symmetry and
are never stored.  Every construction path runs the grading and graded-Jacobi
checks, so any in-memory algebra value satisfies the axioms.

All computations happen over the rationals.  Every quantity exposed here is a
rank of a rational matrix, and matrix rank does not change under field
extension, so the computed superdimensions are valid over any extension field
of characteristic zero.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from . import linalg
from .errors import (
    GradingError,
    InvalidParams,
    JacobiError,
    NonHomogeneous,
    NotAnIdeal,
    ParentMismatch,
    ParityMixing,
    SingularMatrix,
)
from .linalg import Vec
from .superdim import SuperDim, ZERO

# sparse coordinate vector: ((index, coefficient), ...) sorted by index
Coeffs = tuple[tuple[int, Fraction], ...]


def _sign(p: int, q: int) -> int:
    return -1 if (p and q) else 1


@dataclass(frozen=True)
class LieSuperalgebra:
    parities: tuple[int, ...]
    constants: tuple[tuple[tuple[int, int], Coeffs], ...]
    name: str = "L"
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        d = len(self.parities)
        if any(p not in (0, 1) for p in self.parities):
            raise InvalidParams("parities must be 0 or 1")
        if list(self.parities) != sorted(self.parities):
            raise InvalidParams("basis must list all even elements before all odd ones")
        if not self.labels:
            object.__setattr__(self, "labels", tuple(f"e{i + 1}" for i in range(d)))
        if len(self.labels) != d or len(set(self.labels)) != d:
            raise InvalidParams("labels must be distinct and match the basis size")
        self._check_storage()
        self._check_grading()
        self._check_jacobi()

    # -- construction-time checks -------------------------------------------

    def _check_storage(self):
        d = len(self.parities)
        seen = set()
        for (i, j), vec in self.constants:
            if not (0 <= i <= j < d):
                raise InvalidParams(f"bad constant key ({i},{j})")
            if (i, j) in seen:
                raise InvalidParams(f"duplicate constant key ({i},{j})")
            seen.add((i, j))
            if i == j and self.parities[i] == 0 and vec:
                raise InvalidParams(f"[e{i},e{i}] must vanish for even e{i}")
            if list(vec) != sorted(vec) or any(c == 0 for _, c in vec):
                raise InvalidParams(f"constant vector for ({i},{j}) is not normalized")
            if any(not (0 <= k < d) for k, _ in vec):
                raise InvalidParams(f"constant vector for ({i},{j}) has an out-of-range index")

    def _check_grading(self):
        for (i, j), vec in self.constants:
            deg = (self.parities[i] + self.parities[j]) % 2
            for k, _ in vec:
                if self.parities[k] != deg:
                    raise GradingError(i, j, k)

    def _check_jacobi(self):
        # Graded skew-symmetry makes the cyclic Jacobi expression symmetric
        # enough that sorted triples i <= j <= k cover all cases.
        p = self.parities
        for i, j, k in itertools.combinations_with_replacement(range(self.dim), 3):
            res: dict[int, Fraction] = {}
            for (a, b, c) in ((i, j, k), (j, k, i), (k, i, j)):
                s = _sign(p[a], p[c])
                inner = self.basis_bracket(a, b)
                for m, cm in inner.items():
                    outer = self.basis_bracket(m, c)
                    for t, ct in outer.items():
                        res[t] = res.get(t, Fraction(0)) + s * cm * ct
            res = {t: v for t, v in res.items() if v != 0}
            if res:
                raise JacobiError(i, j, k, res)

    # -- basic structure -----------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self.parities)

    @property
    def n_even(self) -> int:
        return sum(1 for p in self.parities if p == 0)

    @property
    def n_odd(self) -> int:
        return sum(1 for p in self.parities if p == 1)

    @property
    def sdim(self) -> SuperDim:
        return SuperDim(self.n_even, self.n_odd)

    def parity(self, i: int) -> int:
        return self.parities[i]

    @cached_property
    def _table(self) -> dict[tuple[int, int], dict[int, Fraction]]:
        return {key: dict(vec) for key, vec in self.constants}

    def basis_bracket(self, i: int, j: int) -> dict[int, Fraction]:
        """[e_i, e_j] as a sparse coordinate dict, any index order."""
        if i == j and self.parities[i] == 0:
            return {}
        if i <= j:
            return self._table.get((i, j), {})
        stored = self._table.get((j, i), {})
        s = -_sign(self.parities[i], self.parities[j])
        return {k: s * c for k, c in stored.items()}

    def basis_vector(self, i: int) -> Vec:
        return linalg.unit_vec(self.dim, i)

    def bracket(self, x: Vec, y: Vec) -> Vec:
        """Bilinear extension of the basis bracket to coordinate vectors."""
        out = [Fraction(0)] * self.dim
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            for j, yj in enumerate(y):
                if yj == 0:
                    continue
                for k, c in self.basis_bracket(i, j).items():
                    out[k] += xi * yj * c
        return tuple(out)

    def vector_parity(self, v: Vec) -> int | None:
        """Parity of a homogeneous coordinate vector, None if mixed or zero."""
        seen = {self.parities[i] for i, x in enumerate(v) if x != 0}
        if len(seen) == 1:
            return seen.pop()
        return None

    def even_indices(self) -> list[int]:
        return [i for i, p in enumerate(self.parities) if p == 0]

    def odd_indices(self) -> list[int]:
        return [i for i, p in enumerate(self.parities) if p == 1]

    def structure_equals(self, other: "LieSuperalgebra") -> bool:
        """Same basis parities and identical structure constants."""
        return self.parities == other.parities and self.constants == other.constants


def validate(parities, constants, name: str = "L", labels=None) -> LieSuperalgebra:
    """Normalize raw input data and build a checked algebra value.

    ``constants`` maps index pairs (i, j) with i <= j to either a sparse
    mapping {k: coefficient} or a dense coefficient sequence.  Coefficients
    may be ints, Fractions, or 'p/q' strings.
    """
    parities = tuple(int(p) for p in parities)
    norm = []
    for (i, j), raw in sorted(dict(constants).items()):
        if i > j:
            raise InvalidParams(f"constants must be indexed with i <= j, got ({i},{j})")
        if isinstance(raw, dict):
            items = raw.items()
        else:
            items = enumerate(raw)
        vec = tuple(sorted((int(k), Fraction(c)) for k, c in items if Fraction(c) != 0))
        if vec:
            norm.append(((i, j), vec))
    return LieSuperalgebra(parities, tuple(norm), name=name,
                           labels=tuple(labels) if labels else ())


# -- subspaces ---------------------------------------------------------------


@dataclass(frozen=True)
class Subspace:
    """A homogeneous subspace, stored as one reduced-echelon coordinate
    matrix per parity.  Canonical form makes equality syntactic."""

    parent: LieSuperalgebra
    even_rows: tuple[Vec, ...]
    odd_rows: tuple[Vec, ...]

    @classmethod
    def span(cls, parent: LieSuperalgebra, vectors) -> "Subspace":
        """Homogeneous span: each vector is split into its parity components.

        For the spans arising here (brackets of homogeneous elements, kernels
        computed per parity) this is the plain linear span.
        """
        ev, od = [], []
        for v in vectors:
            ve = tuple(x if parent.parities[i] == 0 else Fraction(0) for i, x in enumerate(v))
            vo = tuple(x if parent.parities[i] == 1 else Fraction(0) for i, x in enumerate(v))
            if any(ve):
                ev.append(ve)
            if any(vo):
                od.append(vo)
        return cls(parent, tuple(linalg.rref(ev)), tuple(linalg.rref(od)))

    @classmethod
    def full(cls, parent: LieSuperalgebra) -> "Subspace":
        return cls.span(parent, [parent.basis_vector(i) for i in range(parent.dim)])

    @classmethod
    def zero(cls, parent: LieSuperalgebra) -> "Subspace":
        return cls(parent, (), ())

    @property
    def sdim(self) -> SuperDim:
        return SuperDim(len(self.even_rows), len(self.odd_rows))

    @property
    def rows(self) -> tuple[Vec, ...]:
        return self.even_rows + self.odd_rows

    def contains(self, v: Vec) -> bool:
        return linalg.in_span(v, self.rows)

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(r) for r in other.rows)

    def add(self, other: "Subspace") -> "Subspace":
        self._check_parent(other)
        return Subspace.span(self.parent, self.rows + other.rows)

    def intersection(self, other: "Subspace") -> "Subspace":
        """Intersection, computed per parity from the coefficient kernel."""
        self._check_parent(other)
        out = []
        for mine, theirs in ((self.even_rows, other.even_rows), (self.odd_rows, other.odd_rows)):
            if not mine or not theirs:
                continue
            residuals = [linalg.reduce_mod(r, theirs) for r in mine]
            # coefficient vectors a with sum_r a_r * mine_r inside `theirs`
            eqs = [tuple(res[c] for res in residuals) for c in range(self.parent.dim)]
            for coeffs in linalg.nullspace(eqs, len(mine)):
                v = linalg.zero_vec(self.parent.dim)
                for a, row in zip(coeffs, mine):
                    if a != 0:
                        v = linalg.vec_add(v, linalg.vec_scale(a, row))
                out.append(v)
        return Subspace.span(self.parent, out)

    def _check_parent(self, other: "Subspace"):
        if self.parent is not other.parent and self.parent != other.parent:
            raise ParentMismatch("subspaces belong to different algebras")


@dataclass(frozen=True, eq=False)
class LinearMap:
    """A linear map given by its matrix (rows index the target basis)."""

    matrix: tuple[Vec, ...]

    def __call__(self, v: Vec) -> Vec:
        return linalg.mat_vec(self.matrix, v)


@dataclass(frozen=True, eq=False)
class DefiningPair:
    """A central extension K of some algebra with kernel M inside Z(K) and K²."""

    K: LieSuperalgebra
    M: Subspace
    projection: LinearMap

    def __post_init__(self):
        if self.M.parent is not self.K and self.M.parent != self.K:
            raise ParentMismatch("kernel subspace does not belong to the extension")
        if not center(self.K).contains_subspace(self.M):
            raise InvalidParams("kernel is not central in the extension")
        if not derived_subalgebra(self.K).contains_subspace(self.M):
            raise InvalidParams("kernel is not contained in the derived subalgebra")


# -- structural calculus -----------------------------------------------------


def bracket_subspaces(L: LieSuperalgebra, U: Subspace, W: Subspace) -> Subspace:
    """Span of all brackets [u, w] over spanning vectors of U and W."""
    for S in (U, W):
        if S.parent is not L and S.parent != L:
            raise ParentMismatch("subspace does not belong to the algebra")
    vectors = [L.bracket(u, w) for u in U.rows for w in W.rows]
    return Subspace.span(L, vectors)


def derived_subalgebra(L: LieSuperalgebra) -> Subspace:
    full = Subspace.full(L)
    return bracket_subspaces(L, full, full)


def _ad_kernel(L: LieSuperalgebra, targets: list[Vec]) -> Subspace:
    """Per-parity kernel of x -> ([x, t] for t in targets)."""
    rows_by_parity = {}
    for par in (0, 1):
        cols = [i for i in range(L.dim) if L.parities[i] == par]
        if not cols:
            rows_by_parity[par] = ()
            continue
        images = [[L.bracket(L.basis_vector(i), t) for t in targets] for i in cols]
        eqs = []
        for t_idx in range(len(targets)):
            for k in range(L.dim):
                eqs.append(tuple(images[c][t_idx][k] for c in range(len(cols))))
        kern = linalg.nullspace(eqs, len(cols))
        rows = []
        for coeffs in kern:
            v = [Fraction(0)] * L.dim
            for c, i in enumerate(cols):
                v[i] = coeffs[c]
            rows.append(tuple(v))
        rows_by_parity[par] = tuple(linalg.rref(rows))
    return Subspace(L, rows_by_parity[0], rows_by_parity[1])


def center(L: LieSuperalgebra) -> Subspace:
    return _ad_kernel(L, [L.basis_vector(i) for i in range(L.dim)])


def centralizer(L: LieSuperalgebra, z: Vec) -> Subspace:
    """Kernel of x -> [x, z] for a nonzero homogeneous z."""
    if L.vector_parity(z) is None:
        raise NonHomogeneous("centralizer requires a nonzero homogeneous element")
    return _ad_kernel(L, [z])


def second_center(L: LieSuperalgebra) -> Subspace:
    """Preimage in L of the center of L/Z(L)."""
    Z = center(L)
    if Z.sdim == L.sdim:
        return Subspace.full(L)
    Q, proj = quotient(L, Z)
    ZQ = center(Q)
    rows = []
    for par in (0, 1):
        cols = [i for i in range(L.dim) if L.parities[i] == par]
        if not cols:
            continue
        target_rows = ZQ.even_rows if par == 0 else ZQ.odd_rows
        residuals = [linalg.reduce_mod(proj(L.basis_vector(i)), target_rows) for i in cols]
        eqs = [tuple(res[k] for res in residuals) for k in range(Q.dim)]
        for coeffs in linalg.nullspace(eqs, len(cols)):
            v = [Fraction(0)] * L.dim
            for c, i in enumerate(cols):
                v[i] = coeffs[c]
            rows.append(tuple(v))
    return Subspace.span(L, rows)


def lower_central_series(L: LieSuperalgebra) -> list[Subspace]:
    """L ⊇ [L,L] ⊇ [L,[L,L]] ⊇ ... until stabilization."""
    full = Subspace.full(L)
    series = [full]
    while series[-1].sdim != ZERO:
        nxt = bracket_subspaces(L, full, series[-1])
        if nxt == series[-1]:
            break
        series.append(nxt)
    return series


def is_nilpotent(L: LieSuperalgebra) -> tuple[bool, int | None]:
    """(nilpotent?, class); class is the number of strict series steps."""
    series = lower_central_series(L)
    if series[-1].sdim != ZERO:
        return False, None
    return True, len(series) - 1


def quotient(L: LieSuperalgebra, I: Subspace) -> tuple[LieSuperalgebra, LinearMap]:
    """Algebra structure on L/I for an ideal I, plus the projection map.

    The coset basis extends I's echelon basis: it consists of the standard
    basis vectors at the non-pivot columns, which inherit the even-before-odd
    order from L.
    """
    if I.parent is not L and I.parent != L:
        raise ParentMismatch("subspace does not belong to the algebra")
    rows = I.rows
    for j in range(L.dim):
        ej = L.basis_vector(j)
        for r in rows:
            if not I.contains(L.bracket(ej, r)):
                raise NotAnIdeal("subspace is not an ideal")
    piv = set(linalg.pivots(rows))
    comp = [c for c in range(L.dim) if c not in piv]
    qparities = tuple(L.parities[c] for c in comp)

    def project(v: Vec) -> Vec:
        w = linalg.reduce_mod(v, rows)
        return tuple(w[c] for c in comp)

    proj_matrix = tuple(zip(*[project(L.basis_vector(i)) for i in range(L.dim)]))
    consts = {}
    for a in range(len(comp)):
        for b in range(a, len(comp)):
            if a == b and qparities[a] == 0:
                continue
            w = project(L.bracket(L.basis_vector(comp[a]), L.basis_vector(comp[b])))
            if any(w):
                consts[(a, b)] = {k: c for k, c in enumerate(w)}
    qlabels = tuple(L.labels[c] for c in comp)
    Q = validate(qparities, consts, name=f"{L.name}/I", labels=qlabels)
    return Q, LinearMap(proj_matrix)


def direct_sum(A: LieSuperalgebra, B: LieSuperalgebra) -> LieSuperalgebra:
    """Concatenated basis (re-sorted even-before-odd), cross brackets zero."""
    amap = {}
    bmap = {}
    pos = 0
    for i in A.even_indices():
        amap[i] = pos
        pos += 1
    for i in B.even_indices():
        bmap[i] = pos
        pos += 1
    for i in A.odd_indices():
        amap[i] = pos
        pos += 1
    for i in B.odd_indices():
        bmap[i] = pos
        pos += 1
    parities = [0] * (A.n_even + B.n_even) + [1] * (A.n_odd + B.n_odd)
    consts = {}
    for src, idxmap in ((A, amap), (B, bmap)):
        for (i, j), vec in src.constants:
            ni, nj = idxmap[i], idxmap[j]
            if ni > nj:
                s = -_sign(src.parities[i], src.parities[j])
                ni, nj = nj, ni
                vec = tuple((k, s * c) for k, c in vec)
            consts[(ni, nj)] = {idxmap[k]: c for k, c in vec}
    used = set(A.labels)
    blabels = []
    for lab in B.labels:
        while lab in used:
            lab += "'"
        used.add(lab)
        blabels.append(lab)
    labels = [""] * len(parities)
    for i, ni in amap.items():
        labels[ni] = A.labels[i]
    for i, ni in bmap.items():
        labels[ni] = blabels[i]
    return validate(parities, consts, name=f"{A.name}+{B.name}", labels=labels)


def change_basis(L: LieSuperalgebra, P) -> LieSuperalgebra:
    """Conjugate the structure constants by an invertible parity-preserving
    matrix whose columns are the new basis vectors in old coordinates."""
    P = [tuple(Fraction(x) for x in row) for row in P]
    d = L.dim
    if len(P) != d or any(len(r) != d for r in P):
        raise InvalidParams("base-change matrix has the wrong shape")
    for i in range(d):
        for a in range(d):
            if P[i][a] != 0 and L.parities[i] != L.parities[a]:
                raise ParityMixing(f"entry ({i},{a}) mixes parities")
    try:
        Pinv = linalg.invert(P)
    except ValueError as exc:
        raise SingularMatrix(str(exc)) from exc
    cols = [tuple(P[i][a] for i in range(d)) for a in range(d)]
    consts = {}
    for a in range(d):
        for b in range(a, d):
            if a == b and L.parities[a] == 0:
                continue
            v = L.bracket(cols[a], cols[b])
            u = linalg.mat_vec(Pinv, v)
            if any(u):
                consts[(a, b)] = {k: c for k, c in enumerate(u)}
    return validate(L.parities, consts, name=L.name, labels=L.labels)
