"""Exact linear algebra over the rationals.

Everything here works on dense row vectors (tuples of Fraction).  Echelon
forms are fully reduced with pivots normalized to 1 and rows ordered by pivot
column, so a subspace has exactly one matrix representation and subspace
equality is syntactic.
"""

from __future__ import annotations

from fractions import Fraction

Vec = tuple[Fraction, ...]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def zero_vec(n: int) -> Vec:
    return (_ZERO,) * n


def unit_vec(n: int, i: int) -> Vec:
    return tuple(_ONE if j == i else _ZERO for j in range(n))


def vec_add(a: Vec, b: Vec) -> Vec:
    return tuple(x + y for x, y in zip(a, b))

def vec_sub(a: Vec, b: Vec) -> Vec:
    return tuple(x - y for x, y in zip(a, b))


def vec_scale(c: Fraction, a: Vec) -> Vec:
    return tuple(c * x for x in a)


def is_zero(a: Vec) -> bool:
    return not any(a)


def rref(rows) -> list[Vec]:
    """Reduced row echelon form; zero rows dropped.

    Pivot rule: leftmost nonzero column, first available row, pivot scaled
    to 1, eliminated above and below.
    """
    mat = [list(r) for r in rows if any(r)]
    if not mat:
        return []
    ncols = len(mat[0])
    piv_row = 0
    for col in range(ncols):
        pr = None
        for r in range(piv_row, len(mat)):
            if mat[r][col] != 0:
                pr = r
                break
        if pr is None:
            continue
        mat[piv_row], mat[pr] = mat[pr], mat[piv_row]
        inv = _ONE / mat[piv_row][col]
        mat[piv_row] = [inv * x for x in mat[piv_row]]
        for r in range(len(mat)):
            if r != piv_row and mat[r][col] != 0:
                f = mat[r][col]
                mat[r] = [x - f * y for x, y in zip(mat[r], mat[piv_row])]
        piv_row += 1
        if piv_row == len(mat):
            break
    return [tuple(r) for r in mat[:piv_row] if any(r)]


def pivots(rref_rows) -> list[int]:
    return [next(i for i, x in enumerate(r) if x != 0) for r in rref_rows]


def rank(rows) -> int:
    return len(rref(rows))


def reduce_mod(v: Vec, rref_rows) -> Vec:
    """Residual of v after elimination against an echelon basis."""
    w = list(v)
    for row in rref_rows:
        p = next(i for i, x in enumerate(row) if x != 0)
        if w[p] != 0:
            f = w[p]
            w = [x - f * y for x, y in zip(w, row)]
    return tuple(w)


def in_span(v: Vec, rref_rows) -> bool:
    return is_zero(reduce_mod(v, rref_rows))


def nullspace(rows, ncols: int) -> list[Vec]:
    """Canonical echelon basis of {x : A x = 0} for A given by rows."""
    red = rref(rows)
    piv = set(pivots(red))
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for c in free:
        v = [_ZERO] * ncols
        v[c] = _ONE
        for row in red:
            p = next(i for i, x in enumerate(row) if x != 0)
            v[p] = -row[c]
        basis.append(tuple(v))
    return rref(basis)


def invert(rows) -> list[Vec]:
    """Inverse of a square matrix, or raise ValueError if singular."""
    n = len(rows)
    aug = [list(r) + [_ONE if i == j else _ZERO for j in range(n)] for i, r in enumerate(rows)]
    red = rref(aug)
    if len(red) < n or pivots(red) != list(range(n)):
        raise ValueError("matrix is singular")
    return [tuple(r[n:]) for r in red]


def mat_vec(rows, v: Vec) -> Vec:
    return tuple(sum((a * b for a, b in zip(row, v)), _ZERO) for row in rows)
