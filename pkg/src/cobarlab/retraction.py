"""The retraction psi: CGX -> extended cobar, by induction on degree and word length.

For x in X_{n+1}:

    psi(tau x . g)     = inv x01 . ( psi(g) - sum_{i=1}^n s^-1 x_(0..i+1) . psi(v_i(x, g)) )
    psi(tau x^-1 . h)  = (1 + s^-1 x01) . psi(h) + sum_{i=1}^n s^-1 x_(0..i+1) . psi(vbar_i(x, h))

with v_i(x, g) = tau d_1^i x . d_0^i g and vbar_i(x, h) = tau d_0 d_2^{i-1} x . d_0^i h.
"""

from __future__ import annotations

from .chains import Chain, front
from .cobar import Cobar
from .loop_group import LoopGroup, Word, mul
from .simplicial import Simplex


class Retraction:
    def __init__(self, G: LoopGroup, cobar: Cobar):
        self.G = G
        self.cobar = cobar
        self.X = G.X
        self._memo: dict[Word, Chain] = {}

    def _d0_power(self, g: Word, i: int) -> Word:
        for _ in range(i):
            g = self.G.face(g, 0)
        return g

    def v(self, i: int, x: Simplex, g: Word) -> Word:
        n = g.degree
        if not 1 <= i <= n or x.dim != n + 1:
            raise ValueError(f"v_{i} needs 1 <= i <= {n} and x of dimension {n + 1}")
        y = x
        for _ in range(i):
            y = self.X.face(y, 1)
        return mul(self.G.tau(y), self._d0_power(g, i))

    def vbar(self, i: int, x: Simplex, h: Word) -> Word:
        n = h.degree
        if not 1 <= i <= n or x.dim != n + 1:
            raise ValueError(f"vbar_{i} needs 1 <= i <= {n} and x of dimension {n + 1}")
        y = x
        for _ in range(i - 1):
            y = self.X.face(y, 2)
        y = self.X.face(y, 0)
        return mul(self.G.tau(y), self._d0_power(h, i))

    def psi_word(self, w: Word) -> Chain:
        """psi on a single group element; degenerate elements come out as zero."""
        hit = self._memo.get(w)
        if hit is not None:
            return hit
        n, O = w.degree, self.cobar
        if not w.letters:
            res = O.unit() if n == 0 else Chain(n)
        else:
            (x, e), rest = w.letters[0], Word(n, w.letters[1:])
            # recursive calls shrink (degree, length) lexicographically
            x01 = front(self.X, x, 1)
            tail = Chain(n)
            for i in range(1, n + 1):
                aux = self.v(i, x, rest) if e > 0 else self.vbar(i, x, rest)
                assert aux.degree < n
                tail = tail + O.mul(O.susp(front(self.X, x, i + 1)), self.psi_word(aux))
            if e > 0:
                res = O.mul(O.bar(x01), self.psi_word(rest) - tail)
            else:
                res = O.mul(O.one_plus_susp(x01), self.psi_word(rest)) + tail
        self._memo[w] = res
        return res

    def psi(self, c: Chain) -> Chain:
        return c.map(self.psi_word, c.degree)
