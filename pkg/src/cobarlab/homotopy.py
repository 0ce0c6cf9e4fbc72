"""Cone contractions on deltabar models and the homotopy Phi with dPhi + Phi d = phi psi - Id.

On deltabar(n) (and on a wedge of copies) the group homomorphism h sends
tau x to tau(x . n), the simplex with the cone vertex appended inside x's own
summand; hbar = (-1)^{i+1} h on degree i contracts the normalized chains in
positive degrees.

Phi is built by acyclic models: on the canonical word
tau d_1^{a_1} ... tau d_k^{a_k} of the wedge W_k(n+1) it is
hbar(phi psi(w) - w - Phi(dw)); on an arbitrary word of GX it is transported
along the classifying map Psi_w : W_k(n+1) -> X.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .chains import Chain
from .engine import engine_for
from .homology import solve_integer
from .loop_group import LoopGroup, Word, reduce_letters
from .simplicial import (Simplex, SimplicialError, SimplicialMap, SimplicialSet, cone_last_vertex,
                         representing_map, wedge)


class DepthError(ValueError):
    pass


def cone_word(X: SimplicialSet, w: Word) -> Word:
    """The group homomorphism h: tau x -> tau(x . n), letterwise."""
    return Word(w.degree + 1, reduce_letters((cone_last_vertex(X, x), e) for x, e in w.letters))


def contraction(G: LoopGroup, c: Chain) -> Chain:
    """hbar = (-1)^{i+1} h on degree i normalized chains of G(deltabar n) or a wedge of copies.

    d_j h = h d_j for j <= i and d_{i+1} h = Id give dh - hd = (-1)^{i+1} Id, so
    this sign makes hbar a contraction in positive degrees.
    """
    X = G.X
    if X.cone_vertex is None or not X.is_zero_reduced:
        raise SimplicialError(f"{X.name} is not a deltabar model or wedge of them")
    sign = (-1) ** (c.degree + 1)
    return c.map(lambda w: G.chain(cone_word(X, w), sign), c.degree + 1)


mp_contraction = contraction
wedge_contraction = contraction


def group_map(G_target: LoopGroup, f: SimplicialMap, c: Chain) -> Chain:
    """C(Gf) on normalized chains."""
    def img(w: Word) -> Chain:
        return G_target.chain(Word(w.degree, reduce_letters((f(x), e) for x, e in w.letters)))
    return c.map(img, c.degree)


def psi_w(X: SimplicialSet, w: Word) -> tuple[SimplicialMap, Word]:
    """The classifying map W_k(n+1) -> X of a reduced word and the canonical model word."""
    if not w.letters:
        raise ValueError("the empty word has no classifying map")
    n, k = w.degree, len(w.letters)
    W = wedge_model(k, n + 1)
    f = representing_map(W, X, {m: x for m, (x, _) in enumerate(w.letters, start=1)})
    return f, model_word(k, n + 1, tuple(e for _, e in w.letters))


_WEDGES: dict[tuple[int, int], SimplicialSet] = {}


def wedge_model(k: int, n: int) -> SimplicialSet:
    key = (k, n)
    if key not in _WEDGES:
        _WEDGES[key] = wedge(k, n)
    return _WEDGES[key]


def model_word(k: int, n: int, exponents: tuple[int, ...]) -> Word:
    """tau d_1^{a_1} ... tau d_k^{a_k} in GW_k(n), d_m the top simplex of summand m."""
    W = wedge_model(k, n)
    top = "".join(str(v) for v in range(n + 1))
    letters = [(Simplex(W.cell(n, f"{top}@{m}" if k > 1 else top)), e)
               for m, e in enumerate(exponents, start=1)]
    return Word(n - 1, tuple(letters))


@dataclass
class Homotopy:
    """Phi with memo tables keyed by (degree, exponent pattern)."""
    max_degree: int = 2
    use_solver: bool = False
    solver_length: int = 2
    _models: dict[tuple[int, tuple[int, ...]], Chain] = field(default_factory=dict, repr=False)
    path: dict[tuple[int, tuple[int, ...]], str] = field(default_factory=dict, repr=False)

    def model_phi(self, n: int, exponents: tuple[int, ...]) -> Chain:
        key = (n, exponents)
        hit = self._models.get(key)
        if hit is not None:
            return hit
        k = len(exponents)
        W = wedge_model(k, n + 1)
        E = engine_for(W)
        w = model_word(k, n + 1, exponents)
        wc = E.G.chain(w)
        z = E.phi(E.psi(wc)) - wc - self.big_phi(W, E.G.boundary(wc))
        res = None
        if not self.use_solver:
            res = contraction(E.G, z)
            if E.G.boundary(res) != z:
                res = None
        if res is None:
            res = preimage_solver(E.G, z, self.solver_length)
            self.path[key] = "solver"
        else:
            self.path[key] = "contraction"
        self._models[key] = res
        return res

    def phi_word(self, X: SimplicialSet, w: Word) -> Chain:
        n = w.degree
        E = engine_for(X)
        if n == 0 or E.G.is_degenerate(w):
            return Chain(n + 1)
        if n > self.max_degree:
            raise DepthError(f"Phi is limited to degree <= {self.max_degree}; got {n}")
        f, _ = psi_w(X, w)
        model = self.model_phi(n, tuple(e for _, e in w.letters))
        return group_map(E.G, f, model)

    def big_phi(self, X: SimplicialSet, c: Chain) -> Chain:
        if c.degree == 0:
            return Chain(1)
        return c.map(lambda w: self.phi_word(X, w), c.degree + 1)

    def residual(self, X: SimplicialSet, c: Chain) -> Chain:
        """dPhi + Phi d - (phi psi - Id); zero when the homotopy identity holds."""
        E = engine_for(X)
        G = E.G
        lhs = G.boundary(self.big_phi(X, c))
        if c.degree > 0:
            lhs = lhs + self.big_phi(X, G.boundary(c))
        return lhs - (E.phi(E.psi(c)) - c)


def preimage_solver(G: LoopGroup, cycle: Chain, max_length: int = 2) -> Chain:
    """An integer chain z with dz = cycle over reduced words of length <= max_length.

    The basis grows quickly with the length (184 words of degree 2 and length <= 3
    on deltabar(2), about 1500 on a wedge of two copies), so this is a fallback
    for small models only.
    """
    n = cycle.degree
    if n >= 1 and G.boundary(cycle):
        raise ValueError("input is not a cycle")
    if not cycle:
        return Chain(n + 1)
    basis = [w for w in G.words(n + 1, max_length) if not G.is_degenerate(w)]
    columns = [G.boundary(G.chain(w)) for w in basis]
    rows = sorted({k for col in columns for k in col.terms} | set(cycle.terms), key=str)
    index = {k: r for r, k in enumerate(rows)}
    A = [[0] * len(basis) for _ in rows]
    for j, col in enumerate(columns):
        for k, v in col:
            A[index[k]][j] = v
    b = [cycle[k] for k in rows]
    x = solve_integer(A, b)
    if x is None:
        raise ValueError(f"no preimage among words of length <= {max_length}; increase the bound")
    return Chain(n + 1, ((w, v) for w, v in zip(basis, x) if v))
