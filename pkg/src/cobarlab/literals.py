"""Text syntax for group words and cobar words, and canonical chain printing.

Group words:  ``t(x)^-1 * t(s1 s0 y)``  (``1`` or ``[]`` is the identity)
Cobar words:  ``[s-1 sigma | inv x | s-1 (s0 y)]`` (``[]`` is the unit)
"""

from __future__ import annotations

import re

from .chains import Chain, render
from .cobar import Cobar, render_word
from .loop_group import Word, reduce_letters
from .simplicial import Simplex, SimplicialError, SimplicialSet


class LiteralError(ValueError):
    pass


def parse_simplex(X: SimplicialSet, text: str) -> Simplex:
    tokens = text.strip().strip("()").split()
    if not tokens:
        raise LiteralError("empty simplex reference")
    *ops, name = tokens
    degens = []
    for t in ops:
        if not re.fullmatch(r"s\d+", t):
            raise LiteralError(f"bad degeneracy {t!r} in {text!r}")
        degens.append(int(t[1:]))
    try:
        base = X.cell_named(name)
    except SimplicialError as err:
        raise LiteralError(str(err)) from None
    # applied one at a time so that any order of indices is accepted
    x = Simplex(base)
    for i in reversed(degens):
        if not 0 <= i <= x.dim:
            raise LiteralError(f"degeneracy s{i} out of range in {text!r}")
        x = X.degeneracy(x, i)
    return x


_LETTER = re.compile(r"^t\((?P<ref>[^()]*)\)(?:\^(?P<exp>[+-]?1))?$")


def parse_word(X: SimplicialSet, text: str, degree: int | None = None) -> Word:
    body = text.strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1].strip()
    if body in ("", "1"):
        if degree is None:
            raise LiteralError("the identity word needs an explicit degree")
        return Word(degree)
    letters = []
    for part in body.split("*"):
        m = _LETTER.match(part.strip())
        if not m:
            raise LiteralError(f"cannot parse group letter {part.strip()!r}")
        x = parse_simplex(X, m.group("ref"))
        if x.dim < 1:
            raise LiteralError(f"tau needs a simplex of positive dimension: {part.strip()!r}")
        letters.append((x, -1 if (m.group("exp") or "1").startswith("-") else 1))
    degs = {x.dim - 1 for x, _ in letters}
    if len(degs) != 1:
        raise LiteralError(f"letters of different degrees in {text!r}")
    n = degs.pop()
    if degree is not None and degree != n:
        raise LiteralError(f"word {text!r} has degree {n}, expected {degree}")
    return Word(n, reduce_letters(letters))


def parse_cobar(cobar: Cobar, text: str) -> Chain:
    body = text.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise LiteralError(f"cobar words are written in brackets: {text!r}")
    body = body[1:-1].strip()
    if not body:
        return cobar.unit()
    factors = []
    for part in body.split("|"):
        part = part.strip()
        if part.startswith("s-1 "):
            x = parse_simplex(cobar.X, part[4:])
            if x.dim < 1:
                raise LiteralError(f"cannot desuspend a 0-simplex: {part!r}")
            factors.append(cobar.susp(x))
        elif part.startswith("inv "):
            x = parse_simplex(cobar.X, part[4:])
            if x.dim != 1:
                raise LiteralError(f"inverse generators need a 1-simplex: {part!r}")
            factors.append(cobar.bar(x))
        else:
            raise LiteralError(f"cannot parse cobar letter {part!r}")
    return cobar.product(*factors)


def print_group_chain(c: Chain, long: bool = False) -> str:
    return render(c, str, long)


def print_cobar_chain(c: Chain, long: bool = False) -> str:
    return render(c, render_word, long)


def print_chain(c: Chain, long: bool = False) -> str:
    """Dispatch on the key type: group words or cobar words."""
    if not c:
        return "0"
    key = next(iter(c.terms))
    return print_group_chain(c, long) if isinstance(key, Word) else print_cobar_chain(c, long)


def phi_table(X: SimplicialSet, max_degree: int = 3) -> str:
    """phi(s^-1 x) for every nondegenerate x of degree <= max_degree, one block per generator."""
    from .engine import engine_for

    E = engine_for(X)
    blocks = []
    for d in range(1, min(X.dimension, max_degree + 1) + 1):
        for c in X.cells(d):
            e = E.cobar.susp(Simplex(c))
            (word, _), = e
            blocks.append(f"phi({render_word(word)})\n{print_chain(E.phi(e), long=True)}\n")
    return "\n".join(blocks)
