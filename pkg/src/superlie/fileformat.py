"""The ``.lsa`` structure-constant file format.

Line-oriented, ``#`` starts a comment::

    algebra "<name>"
    even <id> <id> ...
    odd  <id> <id> ...
    [<id>,<id>] = <coef> <id> (+ <coef> <id>)*

Coefficients are integers or p/q rationals; a coefficient of 1 may be
omitted.  Brackets given with the arguments in either order are normalized
via graded skew-symmetry; conflicting orientations are rejected.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .core import LieSuperalgebra, _sign, validate
from .errors import (
    DuplicateIdentifier,
    InconsistentBracket,
    ParseError,
    UnknownIdentifier,
)

_IDENT = r"[A-Za-z_][A-Za-z0-9_']*"
_BRACKET_RE = re.compile(rf"^\[\s*({_IDENT})\s*,\s*({_IDENT})\s*\]\s*=\s*(.+)$")
_TERM_RE = re.compile(rf"^\s*(?:(-?\d+(?:/\d+)?)\s+)?({_IDENT})\s*$")
_ALGEBRA_RE = re.compile(r'^algebra\s+"([^"]*)"\s*$')


def _strip_comment(line: str) -> str:
    in_quote = False
    for pos, ch in enumerate(line):
        if ch == '"':
            in_quote = not in_quote
        elif ch == "#" and not in_quote:
            return line[:pos]
    return line


def parse(text: str) -> LieSuperalgebra:
    """Parse and validate a structure-constant file."""
    name = None
    even: list[str] = []
    odd: list[str] = []
    seen_even = seen_odd = False
    brackets: list[tuple[int, str, str, dict[str, Fraction]]] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw).strip()
        if not line:
            continue
        if name is None:
            m = _ALGEBRA_RE.match(line)
            if not m:
                raise ParseError(lineno, 1, 'expected algebra "<name>"')
            name = m.group(1)
            continue
        head = line.split()[0]
        if head in ("even", "odd"):
            ids = line.split()[1:]
            for ident in ids:
                if not re.fullmatch(_IDENT, ident):
                    raise ParseError(lineno, line.index(ident) + 1,
                                     f"bad identifier {ident!r}")
            if head == "even":
                if seen_even:
                    raise ParseError(lineno, 1, "duplicate even section")
                seen_even, even = True, ids
            else:
                if seen_odd:
                    raise ParseError(lineno, 1, "duplicate odd section")
                seen_odd, odd = True, ids
            continue
        m = _BRACKET_RE.match(line)
        if not m:
            raise ParseError(lineno, 1, "expected a bracket line '[a,b] = ...'")
        lhs, rhs, body = m.group(1), m.group(2), m.group(3)
        combo: dict[str, Fraction] = {}
        for term in body.split("+"):
            tm = _TERM_RE.match(term)
            if not tm:
                raise ParseError(lineno, line.index(body) + 1,
                                 f"bad term {term.strip()!r}")
            coef = Fraction(tm.group(1)) if tm.group(1) else Fraction(1)
            ident = tm.group(2)
            combo[ident] = combo.get(ident, Fraction(0)) + coef
        brackets.append((lineno, lhs, rhs, combo))

    if name is None:
        raise ParseError(1, 1, "empty file")

    ids = even + odd
    index: dict[str, int] = {}
    for pos, ident in enumerate(ids):
        if ident in index:
            raise DuplicateIdentifier(1, 1, f"identifier {ident!r} declared twice")
        index[ident] = pos
    parities = [0] * len(even) + [1] * len(odd)

    consts: dict[tuple[int, int], dict[int, Fraction]] = {}
    for lineno, lhs, rhs, combo in brackets:
        for ident in (lhs, rhs, *combo):
            if ident not in index:
                raise UnknownIdentifier(lineno, 1, f"unknown identifier {ident!r}")
        i, j = index[lhs], index[rhs]
        vec = {index[t]: c for t, c in combo.items() if c != 0}
        if i > j:
            s = -_sign(parities[i], parities[j])
            i, j = j, i
            vec = {k: s * c for k, c in vec.items()}
        if (i, j) in consts:
            if consts[(i, j)] != vec:
                raise InconsistentBracket(
                    lineno, 1, f"bracket [{lhs},{rhs}] conflicts with an earlier line")
            continue
        consts[(i, j)] = vec
    return validate(parities, consts, name=name, labels=ids)


def _format_coef(c: Fraction) -> str:
    return "" if c == 1 else f"{c} "


def emit(L: LieSuperalgebra) -> str:
    """Canonical text for an algebra; parse(emit(L)) reproduces L exactly."""
    lines = [f'algebra "{L.name}"']
    lines.append(" ".join(["even"] + [L.labels[i] for i in L.even_indices()]).rstrip())
    lines.append(" ".join(["odd"] + [L.labels[i] for i in L.odd_indices()]).rstrip())
    for (i, j), vec in sorted(L.constants):
        terms = " + ".join(f"{_format_coef(c)}{L.labels[k]}" for k, c in vec)
        lines.append(f"[{L.labels[i]},{L.labels[j]}] = {terms}")
    return "\n".join(lines) + "\n"
