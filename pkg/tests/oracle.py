"""Independent second-cohomology oracle used to freeze expected values.

Deliberately shares nothing with the package's cohomology path: unknowns
range over ALL ordered basis pairs, constraints (support, graded alternation,
cocycle condition over all ordered triples) are assembled densely, and every
rank is computed by sympy.
"""

import itertools

from sympy import Matrix, Rational


def _rat(c):
    return Rational(c.numerator, c.denominator)


def multiplier_oracle(L):
    """(even, odd) multiplier dimensions via dense rank computations."""
    d = L.dim
    p = L.parities
    pairs = list(itertools.product(range(d), repeat=2))
    idx = {pair: k for k, pair in enumerate(pairs)}
    dims = []
    for parity in (0, 1):
        rows = []
        for i, j in pairs:
            if (p[i] + p[j]) % 2 != parity:
                r = [0] * len(pairs)
                r[idx[(i, j)]] = 1
                rows.append(r)
        for i, j in pairs:
            r = [0] * len(pairs)
            sgn = -1 if p[i] and p[j] else 1
            r[idx[(i, j)]] += 1
            r[idx[(j, i)]] += sgn
            if any(r):
                rows.append(r)
        for x, y, z in itertools.product(range(d), repeat=3):
            r = [0] * len(pairs)
            for a, b, c in ((x, y, z), (y, z, x), (z, x, y)):
                s = -1 if p[a] and p[c] else 1
                for m, cm in L.basis_bracket(a, b).items():
                    r[idx[(m, c)]] += s * _rat(cm)
            if any(r):
                rows.append(r)
        A = Matrix(rows) if rows else Matrix.zeros(1, len(pairs))
        zdim = len(pairs) - A.rank()
        brows = []
        for k in range(d):
            if p[k] != parity:
                continue
            brows.append([-_rat(L.basis_bracket(i, j).get(k, 0))
                          if k in L.basis_bracket(i, j) else 0
                          for (i, j) in pairs])
        bdim = Matrix(brows).rank() if brows else 0
        dims.append(zdim - bdim)
    return tuple(dims)
