"""Second cohomology with one-dimensional trivial even coefficients.

A parity-π 2-cochain is a graded alternating bilinear form f with values in
the ground field, nonzero on a homogeneous pair (x, y) only when
|x| + |y| = π.  Cocycles satisfy the same cyclic sign pattern as the graded
Jacobi identity; coboundaries arise as (x, y) -> -g([x, y]) from linear
functionals g of parity π.  The quotient superdimension is the multiplier
superdimension, and extending by a full set of class representatives yields
cover candidates.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .core import (
    DefiningPair,
    LieSuperalgebra,
    LinearMap,
    Subspace,
    _sign,
    derived_subalgebra,
    quotient,
    validate,
)
from .errors import DependentClasses, InvalidParams, StemConditionFailed
from .linalg import Vec
from .superdim import SuperDim


def cochain_pairs(L: LieSuperalgebra, parity: int) -> list[tuple[int, int]]:
    """Free coordinates of a parity-π 2-cochain: ordered pairs (i, j) with
    i <= j, diagonal only for odd e_i, and |e_i| + |e_j| = π."""
    out = []
    for i in range(L.dim):
        for j in range(i, L.dim):
            if i == j and L.parities[i] == 0:
                continue
            if (L.parities[i] + L.parities[j]) % 2 == parity:
                out.append((i, j))
    return out


@dataclass(frozen=True)
class Cochain2:
    """A homogeneous 2-cochain, stored on its free coordinates."""

    parent: LieSuperalgebra
    parity: int
    values: tuple[tuple[tuple[int, int], Fraction], ...]

    def __post_init__(self):
        allowed = set(cochain_pairs(self.parent, self.parity))
        for key, c in self.values:
            if key not in allowed:
                raise InvalidParams(f"coordinate {key} not free for a parity-{self.parity} cochain")
            if c == 0:
                raise InvalidParams("cochain values must be normalized (no zeros)")

    def __call__(self, i: int, j: int) -> Fraction:
        """f(e_i, e_j) for any index order, via graded alternation."""
        table = dict(self.values)
        if i == j and self.parent.parities[i] == 0:
            return Fraction(0)
        if i <= j:
            return table.get((i, j), Fraction(0))
        s = -_sign(self.parent.parities[i], self.parent.parities[j])
        return s * table.get((j, i), Fraction(0))

    def as_vector(self, pairs=None) -> Vec:
        if pairs is None:
            pairs = cochain_pairs(self.parent, self.parity)
        table = dict(self.values)
        return tuple(table.get(p, Fraction(0)) for p in pairs)

    @classmethod
    def from_vector(cls, L: LieSuperalgebra, parity: int, vec: Vec) -> "Cochain2":
        pairs = cochain_pairs(L, parity)
        vals = tuple((p, c) for p, c in zip(pairs, vec) if c != 0)
        return cls(L, parity, vals)

    def scale(self, c) -> "Cochain2":
        c = Fraction(c)
        return Cochain2(self.parent, self.parity,
                        tuple((p, c * v) for p, v in self.values if c * v != 0))

    def plus(self, other: "Cochain2") -> "Cochain2":
        if other.parent != self.parent or other.parity != self.parity:
            raise InvalidParams("can only add cochains of equal parent and parity")
        pairs = cochain_pairs(self.parent, self.parity)
        vec = linalg.vec_add(self.as_vector(pairs), other.as_vector(pairs))
        return Cochain2.from_vector(self.parent, self.parity, vec)


def _cocycle_rows(L: LieSuperalgebra, parity: int, pairs) -> list[Vec]:
    """One linear constraint per basis triple with total degree π."""
    col = {p: c for c, p in enumerate(pairs)}
    p = L.parities
    rows = []
    for i, j, k in itertools.combinations_with_replacement(range(L.dim), 3):
        if (p[i] + p[j] + p[k]) % 2 != parity:
            continue
        row = [Fraction(0)] * len(pairs)
        for (a, b, c) in ((i, j, k), (j, k, i), (k, i, j)):
            s = _sign(p[a], p[c])
            for m, cm in L.basis_bracket(a, b).items():
                # f(e_m, e_c) in terms of the free coordinates
                if m == c and p[m] == 0:
                    continue
                if m <= c:
                    row[col[(m, c)]] += s * cm
                else:
                    row[col[(c, m)]] += -_sign(p[m], p[c]) * s * cm
        if any(row):
            rows.append(tuple(row))
    return rows


def cocycle_space(L: LieSuperalgebra, parity: int) -> list[Cochain2]:
    """Canonical basis of the parity-π 2-cocycles."""
    pairs = cochain_pairs(L, parity)
    kern = linalg.nullspace(_cocycle_rows(L, parity, pairs), len(pairs))
    return [Cochain2.from_vector(L, parity, v) for v in kern]


def _coboundary_rows(L: LieSuperalgebra, parity: int, pairs) -> list[Vec]:
    rows = []
    for k in range(L.dim):
        if L.parities[k] != parity:
            continue
        row = tuple(-L.basis_bracket(i, j).get(k, Fraction(0)) for (i, j) in pairs)
        rows.append(row)
    return linalg.rref(rows)


def coboundary_space(L: LieSuperalgebra, parity: int) -> list[Cochain2]:
    """Canonical basis of {(x,y) -> -g([x,y])} over parity-π functionals g."""
    pairs = cochain_pairs(L, parity)
    return [Cochain2.from_vector(L, parity, v) for v in _coboundary_rows(L, parity, pairs)]


@dataclass(frozen=True, eq=False)
class MultiplierResult:
    sdim_Z2: SuperDim
    sdim_B2: SuperDim
    sdim_M: SuperDim
    cocycle_basis: tuple[Cochain2, ...]  # one representative per class, even first


def multiplier(L: LieSuperalgebra) -> MultiplierResult:
    """Multiplier superdimension as cocycles-modulo-coboundaries, per parity,
    with canonical class representatives."""
    z_dims, b_dims, reps = [], [], []
    for parity in (0, 1):
        pairs = cochain_pairs(L, parity)
        zbasis = linalg.nullspace(_cocycle_rows(L, parity, pairs), len(pairs))
        bbasis = _coboundary_rows(L, parity, pairs)
        z_dims.append(len(zbasis))
        b_dims.append(len(bbasis))
        acc = list(bbasis)
        for zv in zbasis:
            resid = linalg.reduce_mod(zv, linalg.rref(acc))
            if any(resid):
                lead = next(x for x in resid if x != 0)
                resid = linalg.vec_scale(Fraction(1) / lead, resid)
                acc.append(resid)
                reps.append(Cochain2.from_vector(L, parity, resid))
    return MultiplierResult(
        sdim_Z2=SuperDim(z_dims[0], z_dims[1]),
        sdim_B2=SuperDim(b_dims[0], b_dims[1]),
        sdim_M=SuperDim(z_dims[0] - b_dims[0], z_dims[1] - b_dims[1]),
        cocycle_basis=tuple(reps),
    )


@dataclass(frozen=True, eq=False)
class CentralExtension:
    """A central extension of ``base`` by the chosen cocycles.

    ``kernel`` is always central by construction; ``stem_ok`` records whether
    it also lies in the derived subalgebra, which is what a defining pair
    requires.  A failed stem condition is reported, never silently repaired.
    """

    base: LieSuperalgebra
    algebra: LieSuperalgebra
    kernel: Subspace
    stem_ok: bool
    projection: LinearMap

    def as_defining_pair(self) -> DefiningPair:
        if not self.stem_ok:
            raise StemConditionFailed("extension kernel is not inside the derived subalgebra")
        return DefiningPair(self.algebra, self.kernel, self.projection)


def central_extension(L: LieSuperalgebra, chosen) -> CentralExtension:
    """Extend L by one new central generator per chosen cocycle."""
    chosen = list(chosen)
    for f in chosen:
        if f.parent != L:
            raise InvalidParams("cochain belongs to a different algebra")
    for parity in (0, 1):
        pairs = cochain_pairs(L, parity)
        bbasis = _coboundary_rows(L, parity, pairs)
        vecs = [f.as_vector(pairs) for f in chosen if f.parity == parity]
        if vecs and linalg.rank(list(bbasis) + vecs) != len(bbasis) + len(vecs):
            raise DependentClasses("chosen classes are dependent modulo coboundaries")

    even_new = [f for f in chosen if f.parity == 0]
    odd_new = [f for f in chosen if f.parity == 1]
    ordered = even_new + odd_new
    ne, no = L.n_even, L.n_odd
    ce, co = len(even_new), len(odd_new)

    def embed(i: int) -> int:
        return i if i < ne else i + ce

    gen_pos = {}
    for t, f in enumerate(even_new):
        gen_pos[id(f)] = ne + t
    for t, f in enumerate(odd_new):
        gen_pos[id(f)] = ne + ce + no + t

    parities = [0] * (ne + ce) + [1] * (no + co)
    consts: dict[tuple[int, int], dict[int, Fraction]] = {}
    for i in range(L.dim):
        for j in range(i, L.dim):
            if i == j and L.parities[i] == 0:
                continue
            vec = {embed(k): c for k, c in L.basis_bracket(i, j).items()}
            for f in ordered:
                c = f(i, j)
                if c != 0:
                    vec[gen_pos[id(f)]] = c
            if vec:
                consts[(embed(i), embed(j))] = vec

    used = set(L.labels)
    clabels = []
    t = 1
    while len(clabels) < ce + co:
        cand = f"c{t}"
        t += 1
        if cand not in used:
            used.add(cand)
            clabels.append(cand)
    labels = [""] * len(parities)
    for i in range(L.dim):
        labels[embed(i)] = L.labels[i]
    for t, f in enumerate(ordered):
        labels[gen_pos[id(f)]] = clabels[t]

    K = validate(parities, consts, name=f"Ext({L.name})", labels=labels)
    gen_vectors = [K.basis_vector(gen_pos[id(f)]) for f in ordered]
    M = Subspace.span(K, gen_vectors)
    K2 = derived_subalgebra(K)
    stem_ok = K2.contains_subspace(M)
    _, proj = quotient(K, M)
    return CentralExtension(base=L, algebra=K, kernel=M, stem_ok=stem_ok, projection=proj)


def cover_candidate(L: LieSuperalgebra) -> CentralExtension:
    """Central extension by a full set of class representatives; when the
    stem condition holds this realizes the multiplier superdimension."""
    return central_extension(L, multiplier(L).cocycle_basis)
