"""Szczarba operators and the DGA map phi from the extended cobar construction to CGX."""

from __future__ import annotations

import itertools
from functools import lru_cache

from .chains import Chain
from .cobar import Cobar, CobarLetter, CobarWord
from .loop_group import LoopGroup, Word, reduce_letters
from .simplicial import (Operator, Simplex, compose, degeneracy, derived, face, identity)

SzSequence = tuple[int, ...]


def enumerate_s(n: int) -> list[SzSequence]:
    """The n! sequences (i_1..i_n) with 0 <= i_k <= n-k, in lexicographic order."""
    if n < 1:
        raise ValueError("S_n is defined for n >= 1")
    return list(itertools.product(*(range(n - k + 1) for k in range(1, n + 1))))


def parity(i: SzSequence) -> int:
    return sum(i) % 2


def kappa(i: SzSequence) -> int:
    """Least k (1-based) with i_k = 0."""
    return next(k for k, v in enumerate(i, start=1) if v == 0)


@lru_cache(maxsize=None)
def d_operator(j: int, i: SzSequence) -> Operator:
    """D^{n+1}_{j;i}: G_{n-j} -> G_n, by recursion on the length n of i."""
    n = len(i)
    if not 0 <= j <= n:
        raise ValueError(f"j={j} out of range for sequence of length {n}")
    if n == 0:
        return identity(0)
    i1, rest = i[0], i[1:]
    if j < i1:
        return compose(derived(d_operator(j, rest)),
                       compose(degeneracy(0, n - j - 1), face(i1 - j, n - j)))
    if j == i1:
        return derived(d_operator(j, rest))
    return compose(derived(d_operator(j - 1, rest)), degeneracy(0, n - j))


class Szczarba:
    def __init__(self, G: LoopGroup, cobar: Cobar):
        self.G = G
        self.cobar = cobar
        self.X = G.X
        self._gen: dict[CobarLetter, Chain] = {}

    def d0_power(self, x: Simplex, j: int) -> Simplex:
        for _ in range(j):
            x = self.X.face(x, 0)
        return x

    def factor(self, j: int, i: SzSequence, x: Simplex) -> Word:
        """D_{j;i} (tau d_0^j x), evaluated letterwise through the derived operator."""
        y = self.X.apply(derived(d_operator(j, i)), self.d0_power(x, j))
        return Word(len(i), reduce_letters([(y, 1)]))

    def sz(self, i: SzSequence, x: Simplex) -> Word:
        n = len(i)
        if x.dim != n + 1:
            raise ValueError(f"Sz_i with |i|={n} needs a simplex of dimension {n + 1}, got {x.dim}")
        letters = []
        for j in range(n + 1):
            y = self.X.apply(derived(d_operator(j, i)), self.d0_power(x, j))
            letters.append((y, -1))
        return Word(n, reduce_letters(letters))

    def common_degeneracy_product(self, i: SzSequence, x: Simplex) -> Word:
        """D_{0;i}(tau x) . Sz_i x."""
        from .loop_group import mul
        return mul(self.factor(0, i, x), self.sz(i, x))

    def common_degeneracy_check(self, i: SzSequence, x: Simplex) -> bool:
        return self.G.is_degenerate(self.common_degeneracy_product(i, x))

    def phi_letter(self, a: CobarLetter) -> Chain:
        hit = self._gen.get(a)
        if hit is not None:
            return hit
        G, x = self.G, Simplex(a.cell)
        if a.kind == "i":
            res = G.chain(G.tau(x))
        elif a.cell.dim == 1:
            res = G.chain(Word(0, ((x, -1),))) - G.unit()
        else:
            n = a.cell.dim - 1
            res = G.chain_of(n, ((self.sz(i, x), (-1) ** sum(i)) for i in enumerate_s(n)))
        self._gen[a] = res
        return res

    def phi_word(self, w: CobarWord) -> Chain:
        out = self.G.unit()
        for a in w:
            out = self.G.shuffle_mul(out, self.phi_letter(a))
        return out

    def phi(self, e: Chain) -> Chain:
        return e.map(self.phi_word, e.degree)
