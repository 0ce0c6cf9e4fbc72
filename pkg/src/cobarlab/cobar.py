"""The extended cobar construction on the normalized chains of a 0-reduced X.

Letters are desuspended nondegenerate simplices ``s^-1 c`` (degree dim c - 1)
and adjoined inverses ``inv x`` of ``1 + s^-1 x`` for nondegenerate 1-simplices x.
A word is normalized when no ``inv x`` sits next to ``s^-1 x``; the relations

    inv x . s^-1 x = 1 - inv x = s^-1 x . inv x

rewrite any word into a combination of normalized ones.
"""

from __future__ import annotations

import random
from typing import NamedTuple

from .chains import Chain, reduced_coproduct
from .simplicial import Cell, Simplex, SimplicialSet, SimplicialError


class CobarLetter(NamedTuple):
    kind: str  # "s" for s^-1 c, "i" for the inverse generator
    cell: Cell

    @property
    def degree(self) -> int:
        return self.cell.dim - 1 if self.kind == "s" else 0

    def __str__(self):
        return f"s-1 {self.cell.name}" if self.kind == "s" else f"inv {self.cell.name}"


CobarWord = tuple[CobarLetter, ...]


def word_degree(w: CobarWord) -> int:
    return sum(a.degree for a in w)


def render_word(w: CobarWord) -> str:
    return "[" + " | ".join(str(a) for a in w) + "]"


def _forbidden(a: CobarLetter, b: CobarLetter) -> bool:
    return a.cell == b.cell and a.cell.dim == 1 and a.kind != b.kind


def is_normal(w: CobarWord) -> bool:
    return not any(_forbidden(a, b) for a, b in zip(w, w[1:]))


def redexes(w: CobarWord) -> list[int]:
    return [p for p in range(len(w) - 1) if _forbidden(w[p], w[p + 1])]


def rewrite_at(w: CobarWord, p: int) -> list[tuple[CobarWord, int]]:
    """One rewrite step at position p: the pair becomes 1 - inv x."""
    x = w[p].cell
    return [(w[:p] + w[p + 2:], 1), (w[:p] + (CobarLetter("i", x),) + w[p + 2:], -1)]


class Cobar:
    def __init__(self, X: SimplicialSet):
        if not X.is_zero_reduced:
            raise SimplicialError(f"{X.name} is not 0-reduced")
        self.X = X
        self._norm: dict[CobarWord, Chain] = {}
        self._dletter: dict[CobarLetter, Chain] = {}

    # constructors --------------------------------------------------------

    def unit(self) -> Chain:
        return Chain.basis(0, ())

    def susp(self, x: Simplex, coeff: int = 1) -> Chain:
        """s^-1 x; zero on degenerate simplices and on the basepoint."""
        if x.degens or x.dim == 0:
            return Chain(max(x.dim - 1, 0))
        return Chain.basis(x.dim - 1, (CobarLetter("s", x.base),), coeff)

    def bar(self, x: Simplex) -> Chain:
        """The inverse of 1 + s^-1 x for a 1-simplex x; the unit when x is degenerate."""
        if x.dim != 1:
            raise ValueError("inverse generators exist only for 1-simplices")
        if x.degens:
            return self.unit()
        return Chain.basis(0, (CobarLetter("i", x.base),))

    def one_plus_susp(self, x: Simplex) -> Chain:
        return self.unit() + self.susp(x)

    def word(self, letters: CobarWord) -> Chain:
        return self.normalize(Chain.basis(word_degree(letters), tuple(letters)))

    # ring structure ------------------------------------------------------

    def normalize_word(self, w: CobarWord) -> Chain:
        hit = self._norm.get(w)
        if hit is not None:
            return hit
        rs = redexes(w)
        if not rs:
            res = Chain.basis(word_degree(w), w)
        else:
            res = Chain(word_degree(w))
            for w2, c in rewrite_at(w, rs[0]):
                res = res + c * self.normalize_word(w2)
        self._norm[w] = res
        return res

    def normalize(self, c: Chain) -> Chain:
        return c.map(self.normalize_word, c.degree)

    def mul(self, a: Chain, b: Chain) -> Chain:
        acc: dict = {}
        for u, cu in a:
            for v, cv in b:
                w = u + v
                if u and v and _forbidden(u[-1], v[0]):
                    parts = self.normalize_word(w)
                else:
                    parts = ((w, 1),)
                for k, c in parts:
                    val = acc.get(k, 0) + cu * cv * c
                    if val:
                        acc[k] = val
                    else:
                        del acc[k]
        res = Chain(a.degree + b.degree)
        res.terms = acc
        return res

    def product(self, *factors: Chain) -> Chain:
        out = self.unit()
        for f in factors:
            out = self.mul(out, f)
        return out

    # differential ----------------------------------------------------------

    def diff_letter(self, a: CobarLetter) -> Chain:
        """-s^-1 dc + sum (-1)^{|c_i|} s^-1 c_i . s^-1 c^i, and zero in degree 0."""
        hit = self._dletter.get(a)
        if hit is not None:
            return hit
        n = a.degree
        if n == 0:
            res = Chain(-1)
        else:
            X, c = self.X, Simplex(a.cell)
            terms = []
            for k, y in enumerate(X.faces[a.cell]):
                if not y.degens:
                    terms.append(((CobarLetter("s", y.base),), -((-1) ** k)))
            for front, back in reduced_coproduct(X, c):
                terms.append(((CobarLetter("s", front.base), CobarLetter("s", back.base)), (-1) ** front.dim))
            res = self.normalize(Chain(n - 1, terms))
        self._dletter[a] = res
        return res

    def diff(self, e: Chain) -> Chain:
        """The derivation extending diff_letter with Koszul signs."""
        def d(w: CobarWord) -> Chain:
            acc = Chain(e.degree - 1)
            sign = 1
            for pos, a in enumerate(w):
                if a.degree > 0:
                    da = self.diff_letter(a)
                    left = Chain.basis(word_degree(w[:pos]), w[:pos])
                    right = Chain.basis(word_degree(w[pos + 1:]), w[pos + 1:])
                    acc = acc + sign * self.mul(self.mul(left, da), right)
                sign *= (-1) ** a.degree
            return acc
        return e.map(d, e.degree - 1)

    # sampling ----------------------------------------------------------------

    def letters(self, max_dim: int | None = None) -> list[CobarLetter]:
        X = self.X
        top = X.dimension if max_dim is None else max_dim
        out = []
        for d in range(1, top + 1):
            for c in X.cells(d):
                out.append(CobarLetter("s", c))
                if d == 1:
                    out.append(CobarLetter("i", c))
        return out

    def random_raw_word(self, max_len: int, rng: random.Random, max_dim: int | None = None) -> CobarWord:
        pool = self.letters(max_dim)
        if not pool:
            return ()
        return tuple(rng.choice(pool) for _ in range(rng.randint(0, max_len)))

    def random_word(self, degree: int, max_len: int, rng: random.Random, tries: int = 200) -> CobarWord | None:
        """A random normalized word of the given degree (None if none found)."""
        pool = [a for a in self.letters() if a.degree <= degree]
        if not pool:
            return () if degree == 0 else None
        for _ in range(tries):
            w: list[CobarLetter] = []
            remaining = degree
            while len(w) < max_len:
                choices = [a for a in pool if a.degree <= remaining
                           and not (w and _forbidden(w[-1], a))]
                if not choices:
                    break
                if remaining == 0 and rng.random() < 0.3:
                    break
                a = rng.choice(choices)
                w.append(a)
                remaining -= a.degree
            if remaining == 0:
                return tuple(w)
        return None


def all_normal_forms(w: CobarWord, memo: dict | None = None) -> set[frozenset]:
    """Normal forms reachable from ``w`` under every choice of rewrite order.

    Returned as frozensets of (word, coeff) so they can be compared; a
    confluent system yields exactly one element for every input.
    """
    if memo is None:
        memo = {}
    if w in memo:
        return memo[w]
    rs = redexes(w)
    if not rs:
        out = {frozenset({(w, 1)})}
    else:
        out = set()
        for p in rs:
            combos = [{}]
            for w2, c in rewrite_at(w, p):
                forms = all_normal_forms(w2, memo)
                new = []
                for acc in combos:
                    for f in forms:
                        d = dict(acc)
                        for k, v in f:
                            d[k] = d.get(k, 0) + c * v
                        new.append(d)
                combos = new
            for d in combos:
                out.add(frozenset((k, v) for k, v in d.items() if v))
    memo[w] = out
    return out
