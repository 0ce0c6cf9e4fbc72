"""Integer chains: finitely supported linear combinations of basis keys.

Keys are whatever the owning complex uses (cells of X, group words, cobar
words, tuples of those for tensor products). Coefficients are Python ints.
"""

from __future__ import annotations

from typing import Callable, Hashable, Iterable, Iterator

from .simplicial import Cell, Simplex, SimplicialSet, Operator


class Chain:
    __slots__ = ("degree", "terms")

    def __init__(self, degree: int, terms: dict | Iterable[tuple[Hashable, int]] = ()):
        self.degree = degree
        items = terms.items() if isinstance(terms, dict) else terms
        acc: dict = {}
        for k, c in items:
            if c:
                v = acc.get(k, 0) + c
                if v:
                    acc[k] = v
                else:
                    del acc[k]
        self.terms = acc

    @classmethod
    def basis(cls, degree: int, key: Hashable, coeff: int = 1) -> "Chain":
        return cls(degree, {key: coeff})

    @classmethod
    def zero(cls, degree: int) -> "Chain":
        return cls(degree)

    def __iter__(self) -> Iterator[tuple[Hashable, int]]:
        return iter(self.terms.items())

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __contains__(self, key):
        return key in self.terms

    def __getitem__(self, key) -> int:
        return self.terms.get(key, 0)

    def _check(self, other: "Chain"):
        if self.degree != other.degree and self.terms and other.terms:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")

    def __add__(self, other: "Chain") -> "Chain":
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        res = Chain(self.degree if self.terms or not other.terms else other.degree)
        res.terms = out
        return res

    def __neg__(self) -> "Chain":
        res = Chain(self.degree)
        res.terms = {k: -c for k, c in self.terms.items()}
        return res

    def __sub__(self, other: "Chain") -> "Chain":
        return self + (-other)

    def __rmul__(self, scalar: int) -> "Chain":
        if not scalar:
            return Chain(self.degree)
        res = Chain(self.degree)
        res.terms = {k: scalar * c for k, c in self.terms.items()}
        return res

    def __eq__(self, other):
        if not isinstance(other, Chain):
            return NotImplemented
        if not self.terms and not other.terms:
            return True
        return self.degree == other.degree and self.terms == other.terms

    def __repr__(self):
        return f"Chain({self.degree}, {self.terms!r})"

    def map(self, f: Callable[[Hashable], "Chain"], degree: int) -> "Chain":
        """Linear extension of ``f`` (which returns chains of the given degree)."""
        acc: dict = {}
        for k, c in self.terms.items():
            for k2, c2 in f(k).terms.items():
                v = acc.get(k2, 0) + c * c2
                if v:
                    acc[k2] = v
                else:
                    acc.pop(k2, None)
        res = Chain(degree)
        res.terms = acc
        return res


def render(c: Chain, render_key: Callable[[Hashable], str], long: bool = False) -> str:
    """Canonical text: terms sorted by rendered key, explicit signed coefficients."""
    if not c:
        return "0"
    parts = sorted((render_key(k), v) for k, v in c)
    lines = [f"{v:+d}·{k}" for k, v in parts]
    return "\n".join(lines) if long else " ".join(lines)


# normalized chains on a simplicial set ---------------------------------

def simplex_chain(x: Simplex, coeff: int = 1) -> Chain:
    """A simplex as a normalized chain (zero when degenerate)."""
    if x.degens:
        return Chain(x.dim)
    return Chain.basis(x.dim, x.base, coeff)


def boundary(X: SimplicialSet, c: Chain) -> Chain:
    if c.degree < 1:
        raise ValueError("boundary of a degree-0 chain is not defined")

    def d(cell: Cell) -> Chain:
        return Chain(cell.dim - 1, ((y.base, (-1) ** i) for i, y in enumerate(X.faces[cell])
                                    if not y.degens))
    return c.map(d, c.degree - 1)


def front(X: SimplicialSet, x: Simplex, i: int) -> Simplex:
    """x_{(0,...,i)}."""
    return X.apply(Operator((), tuple(range(i + 1, x.dim + 1)), x.dim), x)


def back(X: SimplicialSet, x: Simplex, i: int) -> Simplex:
    """x_{(i,...,n)}."""
    return X.apply(Operator((), tuple(range(i)), x.dim), x)


def aw_coproduct(X: SimplicialSet, x: Simplex) -> Chain:
    """Alexander-Whitney diagonal on a simplex, in the normalized tensor square (keys are cell pairs)."""
    n = x.dim
    if n == 0:
        return Chain(0, {(x.base, x.base): 1}) if not x.degens else Chain(0)
    terms = []
    for i in range(n + 1):
        a, b = front(X, x, i), back(X, x, i)
        if not a.degens and not b.degens:
            terms.append(((a.base, b.base), 1))
    return Chain(n, terms)


def reduced_coproduct(X: SimplicialSet, x: Simplex) -> list[tuple[Simplex, Simplex]]:
    """The pairs (x_{(0..i)}, x_{(i..n)}) for 0 < i < n with both factors nondegenerate."""
    out = []
    for i in range(1, x.dim):
        a, b = front(X, x, i), back(X, x, i)
        if not a.degens and not b.degens:
            out.append((a, b))
    return out


def tensor_boundary(X: SimplicialSet, c: Chain) -> Chain:
    """Koszul differential on chains keyed by tuples of cells."""
    def d(key: tuple[Cell, ...]) -> Chain:
        acc = Chain(c.degree - 1)
        sign = 1
        for pos, cell in enumerate(key):
            if cell.dim > 0:
                db = boundary(X, Chain.basis(cell.dim, cell))
                acc = acc + Chain(c.degree - 1, ((key[:pos] + (k,) + key[pos + 1:], sign * v) for k, v in db))
            sign *= (-1) ** cell.dim
        return acc
    return c.map(d, c.degree - 1)


def coproduct_left(X: SimplicialSet, c: Chain) -> Chain:
    """(Delta x 1) applied to a chain keyed by cell pairs."""
    return c.map(lambda k: Chain(c.degree, ((a + (k[1],), v) for a, v in aw_coproduct(X, Simplex(k[0])))),
                 c.degree)


def coproduct_right(X: SimplicialSet, c: Chain) -> Chain:
    """(1 x Delta) applied to a chain keyed by cell pairs."""
    return c.map(lambda k: Chain(c.degree, (((k[0],) + b, v) for b, v in aw_coproduct(X, Simplex(k[1])))),
                 c.degree)


def counit_left(c: Chain) -> Chain:
    """(eps x 1): keep terms whose first factor has degree 0."""
    return Chain(c.degree, ((k[1], v) for k, v in c if k[0].dim == 0))


def counit_right(c: Chain) -> Chain:
    return Chain(c.degree, ((k[0], v) for k, v in c if k[1].dim == 0))
