"""The Kan loop group GX of a 0-reduced simplicial set and the chain algebra CGX.

(GX)_n is the free group on X_{n+1} modulo the generators s_0 X_n. A word is
stored freely reduced with no s_0-degenerate generators. The simplicial
structure comes from the universal twisting function:

    s_i tau x = tau s_{i+1} x
    d_0 tau x = (tau d_0 x)^-1 . tau d_1 x
    d_i tau x = tau d_{i+1} x        (i >= 1)
"""

from __future__ import annotations

import itertools
import random
from typing import Iterable, NamedTuple

from .chains import Chain
from .simplicial import Operator, Simplex, SimplicialSet, SimplicialError

Letter = tuple[Simplex, int]


class Word(NamedTuple):
    degree: int
    letters: tuple[Letter, ...] = ()

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        if not self.letters:
            return "[]"
        return "[" + " * ".join(f"t({x})" + ("^-1" if e < 0 else "") for x, e in self.letters) + "]"


def reduce_letters(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    stack: list[Letter] = []
    for x, e in letters:
        if x.degens and x.degens[-1] == 0:
            continue
        if stack and stack[-1][0] == x and stack[-1][1] == -e:
            stack.pop()
        else:
            stack.append((x, e))
    return tuple(stack)


def mul(a: Word, b: Word) -> Word:
    if a.degree != b.degree:
        raise ValueError(f"cannot multiply words of degrees {a.degree} and {b.degree}")
    if not a.letters:
        return b
    if not b.letters:
        return a
    return Word(a.degree, reduce_letters(a.letters + b.letters))


def inv(a: Word) -> Word:
    return Word(a.degree, tuple((x, -e) for x, e in reversed(a.letters)))


def shuffles(p: int, q: int) -> list[tuple[tuple[int, ...], tuple[int, ...], int]]:
    """All (p,q)-shuffles as (mu, nu, sign).

    ``mu`` (q indices) degenerates the degree-p factor and ``nu`` (p indices)
    the degree-q factor; the sign is that of the permutation listing nu then mu.
    """
    out = []
    n = p + q
    for nu in itertools.combinations(range(n), p):
        nus = set(nu)
        mu = tuple(i for i in range(n) if i not in nus)
        perm = nu + mu
        inversions = sum(1 for a, b in itertools.combinations(perm, 2) if a > b)
        out.append((mu, nu, -1 if inversions % 2 else 1))
    return out


class LoopGroup:
    def __init__(self, X: SimplicialSet):
        if not X.is_zero_reduced:
            raise SimplicialError(f"{X.name} is not 0-reduced; the Kan loop group needs a single vertex")
        self.X = X
        self._face_cache: dict[tuple[Word, int], Word] = {}
        self._degen_cache: dict[tuple[Word, int], Word] = {}
        self._isdeg_cache: dict[Word, bool] = {}
        self._gens: dict[int, list[Simplex]] = {}

    def identity(self, n: int) -> Word:
        return Word(n)

    def tau(self, x: Simplex) -> Word:
        if x.dim < 1:
            raise ValueError("tau is defined on simplices of dimension >= 1")
        return Word(x.dim - 1, reduce_letters([(x, 1)]))

    def generators(self, n: int) -> list[Simplex]:
        """Simplices of X_{n+1} that are not s_0-degenerate."""
        if n not in self._gens:
            self._gens[n] = [x for x in self.X.simplices(n + 1) if not (x.degens and x.degens[-1] == 0)]
        return self._gens[n]

    def face(self, w: Word, i: int) -> Word:
        if not 0 <= i <= w.degree or w.degree == 0:
            raise ValueError(f"face d{i} out of range on degree {w.degree}")
        key = (w, i)
        hit = self._face_cache.get(key)
        if hit is not None:
            return hit
        X = self.X
        out: list[Letter] = []
        for x, e in w.letters:
            if i == 0:
                a, b = X.face(x, 0), X.face(x, 1)
                out.extend([(a, -1), (b, 1)] if e > 0 else [(b, -1), (a, 1)])
            else:
                out.append((X.face(x, i + 1), e))
        res = Word(w.degree - 1, reduce_letters(out))
        self._face_cache[key] = res
        return res

    def degeneracy(self, w: Word, i: int) -> Word:
        if not 0 <= i <= w.degree:
            raise ValueError(f"degeneracy s{i} out of range on degree {w.degree}")
        key = (w, i)
        hit = self._degen_cache.get(key)
        if hit is None:
            X = self.X
            hit = Word(w.degree + 1, reduce_letters((X.degeneracy(x, i + 1), e) for x, e in w.letters))
            self._degen_cache[key] = hit
        return hit

    def apply(self, op: Operator, w: Word) -> Word:
        """Apply a simplicial operator to a group element (letters of the normal form, right first)."""
        if op.source_dim != w.degree:
            raise SimplicialError(f"operator {op} does not act on degree {w.degree}")
        for j in reversed(op.faces):
            w = self.face(w, j)
        for i in reversed(op.degeneracies):
            w = self.degeneracy(w, i)
        return w

    def apply_frontal(self, op: Operator, w: Word) -> Word:
        """Frontal operators act letterwise: D tau x = tau D' x."""
        if 0 in op.faces:
            raise SimplicialError(f"{op} is not frontal")
        from .simplicial import derived
        dop = derived(op)
        return Word(op.target_dim, reduce_letters((self.X.apply(dop, x), e) for x, e in w.letters))

    def is_degenerate(self, w: Word) -> bool:
        if w.degree == 0:
            return False
        hit = self._isdeg_cache.get(w)
        if hit is None:
            hit = any(self.degeneracy(self.face(w, j), j) == w for j in range(w.degree))
            self._isdeg_cache[w] = hit
        return hit

    # chains --------------------------------------------------------------

    def chain(self, w: Word, coeff: int = 1) -> Chain:
        """A group element as a normalized chain (zero when degenerate)."""
        if self.is_degenerate(w):
            return Chain(w.degree)
        return Chain.basis(w.degree, w, coeff)

    def chain_of(self, degree: int, terms: Iterable[tuple[Word, int]]) -> Chain:
        return Chain(degree, ((w, c) for w, c in terms if not self.is_degenerate(w)))

    def boundary(self, c: Chain) -> Chain:
        if c.degree < 1:
            raise ValueError("boundary of a degree-0 chain is not defined")

        def d(w: Word) -> Chain:
            return self.chain_of(w.degree - 1, ((self.face(w, i), (-1) ** i) for i in range(w.degree + 1)))
        return c.map(d, c.degree - 1)

    def unit(self) -> Chain:
        return Chain.basis(0, Word(0))

    def _shuffle_words(self, g: Word, h: Word) -> Chain:
        p, q = g.degree, h.degree
        terms = []
        for mu, nu, sign in shuffles(p, q):
            a = g
            for i in mu:
                a = self.degeneracy(a, i)
            b = h
            for i in nu:
                b = self.degeneracy(b, i)
            terms.append((mul(a, b), sign))
        return self.chain_of(p + q, terms)

    def shuffle_mul(self, a: Chain, b: Chain) -> Chain:
        """Eilenberg-Zilber shuffle product followed by the group multiplication."""
        acc: dict = {}
        for g, cg in a:
            for h, ch in b:
                for w, c in self._shuffle_words(g, h):
                    v = acc.get(w, 0) + cg * ch * c
                    if v:
                        acc[w] = v
                    else:
                        del acc[w]
        res = Chain(a.degree + b.degree)
        res.terms = acc
        return res

    # sampling ------------------------------------------------------------

    def random_word(self, n: int, max_len: int, rng: random.Random) -> Word:
        gens = self.generators(n)
        if not gens:
            return Word(n)
        length = rng.randint(1, max_len)
        return Word(n, reduce_letters((rng.choice(gens), rng.choice((1, -1))) for _ in range(length)))

    def words(self, n: int, max_len: int) -> list[Word]:
        """Every reduced word of degree n with at most ``max_len`` letters."""
        gens = self.generators(n)
        letters = [(x, e) for x in gens for e in (1, -1)]
        out = [Word(n)]
        frontier = [()]
        for _ in range(max_len):
            nxt = []
            for ls in frontier:
                for x, e in letters:
                    if ls and ls[-1] == (x, -e):
                        continue
                    nl = ls + ((x, e),)
                    nxt.append(nl)
                    out.append(Word(n, nl))
            frontier = nxt
        return out
