"""Seeded random nilpotent algebras for the property suites.

Random structure-constant tables almost never satisfy the Jacobi identity, so
the corpus is built the other way around: start from a small abelian algebra
and apply iterated central extensions by random rational combinations of
cohomology class representatives.  Central extensions preserve nilpotency, so
every corpus algebra is nilpotent by construction.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .cohomology import central_extension, multiplier
from .constructions import abelian
from .core import LieSuperalgebra

MAX_EVEN = 4
MAX_ODD = 3


def _random_fraction(rng: random.Random) -> Fraction:
    num = rng.choice([-2, -1, 1, 2, 3])
    den = rng.choice([1, 1, 1, 2])
    return Fraction(num, den)


def random_nilpotent(rng: random.Random, max_even: int = MAX_EVEN,
                     max_odd: int = MAX_ODD) -> LieSuperalgebra:
    m = rng.randint(0, 2)
    n = rng.randint(0, 2)
    if m + n == 0:
        m = 1
    L = abelian(m, n)
    for _ in range(rng.randint(1, 3)):
        reps = multiplier(L).cocycle_basis
        even_reps = [f for f in reps if f.parity == 0]
        odd_reps = [f for f in reps if f.parity == 1]
        room_e = max_even - L.n_even
        room_o = max_odd - L.n_odd
        ke = rng.randint(0, min(room_e, len(even_reps), 2))
        ko = rng.randint(0, min(room_o, len(odd_reps), 2))
        if ke + ko == 0:
            break
        chosen = rng.sample(even_reps, ke) + rng.sample(odd_reps, ko)
        mixed = []
        for f in chosen:
            g = f.scale(_random_fraction(rng))
            # Mixing in unchosen representatives keeps the classes independent.
            others = [h for h in (even_reps if f.parity == 0 else odd_reps)
                      if h not in chosen]
            if others and rng.random() < 0.5:
                g = g.plus(rng.choice(others).scale(_random_fraction(rng)))
            mixed.append(g)
        L = central_extension(L, mixed).algebra
    return L


def corpus(seed: int, size: int, max_even: int = MAX_EVEN,
           max_odd: int = MAX_ODD) -> list[LieSuperalgebra]:
    """Reproducible list of random nilpotent algebras."""
    rng = random.Random(seed)
    return [random_nilpotent(rng, max_even, max_odd) for _ in range(size)]
