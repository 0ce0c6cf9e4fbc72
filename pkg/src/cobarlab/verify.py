"""Verification suites: every identity is an executable, exact check.

A suite never stops at the first failure; each check records its residual.
Randomized checks draw from a seeded ``random.Random`` whose seed is part of
the report.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import asdict, dataclass, field
from typing import Callable

from .chains import (Chain, aw_coproduct, boundary, coproduct_left, coproduct_right, front,
                     tensor_boundary)
from .cobar import CobarLetter, all_normal_forms, render_word
from .engine import engine_for
from .homology import cobar_homology
from .homotopy import Homotopy, contraction, group_map, preimage_solver, psi_w, wedge_model
from .literals import print_chain
from .loop_group import Word, inv, mul
from .simplicial import (Operator, Simplex, SimplicialMap, SimplicialSet, compose, derived,
                         is_frontal, model, sphere)
from .szczarba import d_operator, enumerate_s, kappa

SUITES = ("twisting", "cobar", "szczarba", "retraction", "sdr", "contraction", "homology")


@dataclass
class VerifyConfig:
    max_degree: int = 3
    max_word_length: int = 3
    samples: int = 100
    seed: int = 0
    sdr_degree: int = 2
    sdr_word_length: int = 2
    max_dim: int = 4


@dataclass
class Check:
    name: str
    anchor: str
    instance: str
    passed: bool
    residual: str = ""


@dataclass
class SuiteReport:
    suite: str
    model: str
    seed: int
    checks: list[Check] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> int:
        return sum(c.passed for c in self.checks)

    @property
    def failed(self) -> int:
        return len(self.checks) - self.passed

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def summary(self) -> dict[str, tuple[int, int]]:
        """Per identity name: (passed, total)."""
        out: dict[str, tuple[int, int]] = {}
        for c in self.checks:
            p, t = out.get(c.name, (0, 0))
            out[c.name] = (p + c.passed, t + 1)
        return dict(sorted(out.items()))

    def to_text(self, verbose: bool = False) -> str:
        lines = [f"suite {self.suite} on {self.model} (seed {self.seed})"]
        for name, (p, t) in self.summary().items():
            status = "PASS" if p == t else "FAIL"
            anchor = next(c.anchor for c in self.checks if c.name == name)
            lines.append(f"  [{status}] {name}: {p}/{t}  ({anchor})")
        for c in sorted(self.checks, key=lambda c: (c.name, c.instance)):
            if not c.passed or verbose:
                lines.append(f"    {'ok  ' if c.passed else 'FAIL'} {c.name} @ {c.instance}"
                             + (f"\n      residual: {c.residual}" if c.residual else ""))
        lines.extend(f"  note: {n}" for n in self.notes)
        lines.append(f"  total: {self.passed}/{len(self.checks)} passed in {self.seconds:.2f}s")
        return "\n".join(lines)

    def to_json(self) -> dict:
        d = asdict(self)
        d["checks"] = sorted(d["checks"], key=lambda c: (c["name"], c["instance"]))
        d.update(passed=self.passed, failed=self.failed, ok=self.ok)
        return d


class _Recorder:
    def __init__(self, report: SuiteReport):
        self.report = report

    def equal(self, name: str, anchor: str, instance: str, lhs, rhs):
        try:
            a = lhs() if callable(lhs) else lhs
            b = rhs() if callable(rhs) else rhs
            ok = a == b
            residual = ""
            if not ok:
                residual = (print_chain(a - b) if isinstance(a, Chain) and isinstance(b, Chain)
                            else f"{a} != {b}")
        except Exception as err:  # a failing check never aborts the suite
            ok, residual = False, f"{type(err).__name__}: {err}"
        self.report.checks.append(Check(name, anchor, instance, ok, residual))
        return ok

    def true(self, name: str, anchor: str, instance: str, pred: Callable[[], bool] | bool, detail: str = ""):
        try:
            ok = bool(pred() if callable(pred) else pred)
        except Exception as err:
            ok, detail = False, f"{type(err).__name__}: {err}"
        self.report.checks.append(Check(name, anchor, instance, ok, "" if ok else detail or "false"))
        return ok


def sample_words(G, n: int, count: int, max_len: int, rng: random.Random,
                 nondegenerate: bool = True, attempts: int = 50) -> list[Word]:
    """Random reduced words; with ``nondegenerate`` rejects degenerate ones (bounded attempts)."""
    out = []
    for _ in range(count * attempts if nondegenerate else count):
        if len(out) >= count:
            break
        w = G.random_word(n, max_len, rng)
        if nondegenerate and (not w.letters or G.is_degenerate(w)):
            continue
        out.append(w)
    return out


# suites ------------------------------------------------------------------

def suite_twisting(X: SimplicialSet, cfg: VerifyConfig, rng: random.Random, rec: _Recorder):
    G = engine_for(X).G
    anchor = "twisting function axioms"
    for d in range(0, cfg.max_dim + 1):
        for x in X.simplices(d):
            if d + 1 <= cfg.max_dim:
                rec.equal("tau s0 x = 1", anchor, str(x), lambda: G.tau(X.degeneracy(x, 0)), Word(d))
            if d == 0:
                continue
            t = G.tau(x)
            for i in range(d):
                rec.equal("s_i tau x = tau s_{i+1} x", anchor, f"i={i} x={x}",
                          lambda: G.degeneracy(t, i), lambda: G.tau(X.degeneracy(x, i + 1)))
            if d >= 2:
                rec.equal("d_0 tau x = (tau d_0 x)^-1 tau d_1 x", anchor, str(x), lambda: G.face(t, 0),
                          lambda: mul(inv(G.tau(X.face(x, 0))), G.tau(X.face(x, 1))))
                for i in range(1, d):
                    rec.equal("d_i tau x = tau d_{i+1} x", anchor, f"i={i} x={x}",
                              lambda: G.face(t, i), lambda: G.tau(X.face(x, i + 1)))
    ident = "simplicial identities in GX"
    for n in range(1, cfg.max_dim + 1):
        for w in sample_words(G, n, cfg.samples, cfg.max_word_length, rng, nondegenerate=False):
            for i in range(n if n >= 2 else 0):
                for j in range(i + 1, n + 1):
                    rec.equal("d_i d_j = d_{j-1} d_i", ident, f"{w} i={i} j={j}",
                              lambda: G.face(G.face(w, j), i), lambda: G.face(G.face(w, i), j - 1))
            for i in range(n + 1):
                for j in range(i, n + 1):
                    rec.equal("s_i s_j = s_{j+1} s_i", ident, f"{w} i={i} j={j}",
                              lambda: G.degeneracy(G.degeneracy(w, j), i),
                              lambda: G.degeneracy(G.degeneracy(w, i), j + 1))
            for i in range(n + 1):
                for j in range(n + 1):
                    def lhs():
                        return G.face(G.degeneracy(w, j), i)

                    if i < j:
                        rhs = (lambda: G.degeneracy(G.face(w, i), j - 1))
                    elif i in (j, j + 1):
                        rhs = (lambda: w)
                    else:
                        rhs = (lambda: G.degeneracy(G.face(w, i - 1), j))
                    rec.equal("d_i s_j identities", ident, f"{w} i={i} j={j}", lhs, rhs)
    for n in range(1, min(cfg.max_dim, 3) + 1):
        for _ in range(max(1, cfg.samples // 4)):
            a = G.random_word(n, cfg.max_word_length, rng)
            b = G.random_word(n, cfg.max_word_length, rng)
            for i in range(n + 1):
                rec.equal("faces are homomorphisms", ident, f"{a} {b} d{i}",
                          lambda: G.face(mul(a, b), i), lambda: mul(G.face(a, i), G.face(b, i)))
                rec.equal("degeneracies are homomorphisms", ident, f"{a} {b} s{i}",
                          lambda: G.degeneracy(mul(a, b), i), lambda: mul(G.degeneracy(a, i), G.degeneracy(b, i)))


def suite_chains(X: SimplicialSet, cfg: VerifyConfig, rng: random.Random, rec: _Recorder):
    """d^2 = 0 in CX, CGX and the cobar construction; coalgebra checks on CX."""
    E = engine_for(X)
    anchor = "normalized chains"
    for d in range(2, min(cfg.max_dim, X.dimension) + 1):
        for c in X.cells(d):
            ch = Chain.basis(d, c)
            rec.equal("dd = 0 in CX", anchor, c.name, lambda: boundary(X, boundary(X, ch)), Chain(d - 2))
    for d in range(1, min(cfg.max_dim, X.dimension) + 1):
        for c in X.cells(d):
            x = Simplex(c)
            delta = aw_coproduct(X, x)
            rec.equal("AW coassociative", "Alexander-Whitney diagonal", c.name,
                      lambda: coproduct_left(X, delta), lambda: coproduct_right(X, delta))
            rec.equal("AW is a chain map", "Alexander-Whitney diagonal", c.name,
                      lambda: tensor_boundary(X, delta),
                      lambda: boundary(X, Chain.basis(d, c)).map(
                          lambda k: aw_coproduct(X, Simplex(k)), d - 1))
    for n in range(2, cfg.max_dim + 1):
        for w in sample_words(E.G, n, cfg.samples, cfg.max_word_length, rng, nondegenerate=False):
            c = E.G.chain(w)
            rec.equal("dd = 0 in CGX", anchor, str(w), lambda: E.G.boundary(E.G.boundary(c)), Chain(n - 2))
    for a in E.cobar.letters(cfg.max_dim):
        if a.degree >= 1:
            e = Chain.basis(a.degree, (a,))
            rec.equal("dd = 0 in cobar", "cobar differential", str(a),
                      lambda: E.cobar.diff(E.cobar.diff(e)), Chain(a.degree - 2))


def suite_cobar(X: SimplicialSet, cfg: VerifyConfig, rng: random.Random, rec: _Recorder):
    O = engine_for(X).cobar
    anchor = "cobar relations"
    edges = X.cells(1)
    for x in edges:
        s, i = CobarLetter("s", x), CobarLetter("i", x)
        for crit in ((s, i, s), (i, s, i)):
            forms = all_normal_forms(crit)
            rec.true("critical pair resolves", anchor, render_word(crit), len(forms) == 1)
        rec.equal("inv x (1 + s^-1 x) = 1", anchor, x.name,
                  lambda: O.mul(O.bar(Simplex(x)), O.one_plus_susp(Simplex(x))), O.unit())
        rec.equal("(1 + s^-1 x) inv x = 1", anchor, x.name,
                  lambda: O.mul(O.one_plus_susp(Simplex(x)), O.bar(Simplex(x))), O.unit())
    if edges:
        for _ in range(cfg.samples):
            w = O.random_raw_word(8, rng, max_dim=min(2, X.dimension))
            rec.true("rewriting is confluent", anchor, render_word(w), lambda: len(all_normal_forms(w)) == 1)
    for a in O.letters(cfg.max_dim):
        if a.degree >= 1:
            e = Chain.basis(a.degree, (a,))
            rec.equal("dd = 0 on generators", "cobar differential", str(a),
                      lambda: O.diff(O.diff(e)), Chain(a.degree - 2))
    for _ in range(cfg.samples):
        p, q = rng.randint(0, 2), rng.randint(0, 2)
        u, v = O.random_word(p, 3, rng), O.random_word(q, 3, rng)
        if u is None or v is None:
            continue
        a, b = Chain.basis(p, u), Chain.basis(q, v)
        rec.equal("differential is a derivation", "cobar differential", f"{render_word(u)} {render_word(v)}",
                  lambda: O.diff(O.mul(a, b)),
                  lambda: O.mul(O.diff(a), b) + (-1) ** p * O.mul(a, O.diff(b)))
    if X.is_one_reduced:
        found = [k for a in O.letters(cfg.max_dim) if a.degree >= 1
                 for k, _ in O.diff(Chain.basis(a.degree, (a,))) if any(b.kind == "i" for b in k)]
        rec.true("1-reduced: no inverse generators", "classical cobar construction", X.name,
                 not found and all(a.kind == "s" for a in O.letters()))


def suite_szczarba(X: SimplicialSet, cfg: VerifyConfig, rng: random.Random, rec: _Recorder):
    E = engine_for(X)
    G, O, S = E.G, E.cobar, E.szczarba
    top = min(cfg.max_dim, X.dimension)
    for n in range(1, top):
        rec.equal("|S_n| = n!", "Szczarba sequences", f"n={n}", len(enumerate_s(n)),
                  math.factorial(n))
        for i in enumerate_s(n):
            for j in range(n + 1):
                D = d_operator(j, i)
                rec.true("D_{j;i} is frontal", "Szczarba operators", f"j={j} i={i}",
                         lambda: is_frontal(D) and compose(derived(D), Operator((0,), (), D.source_dim))
                         == compose(Operator((0,), (), D.target_dim), D))
                if j > 0:
                    rec.true("D_{j;i} is s_{kappa-1}-degenerate", "common degeneracy", f"j={j} i={i}",
                             lambda: kappa(i) - 1 in D.degeneracies)
            for c in X.cells(n + 1):
                x = Simplex(c)
                sz = S.sz(i, x)
                rec.equal("d_0 Sz_i = Sz_{i2..} d_{i1+1}", "Szczarba relations", f"i={i} x={c.name}",
                          lambda: G.face(sz, 0),
                          lambda: S.sz(i[1:], X.face(x, i[0] + 1)) if n > 1 else inv(G.tau(X.face(x, i[0] + 1))))
                for k in range(1, n):
                    if i[k - 1] > i[k]:
                        swapped = i[:k - 1] + (i[k], i[k - 1] - 1) + i[k + 1:]
                        rec.equal("d_k Sz_i = d_k Sz_swap", "Szczarba relations", f"k={k} i={i} x={c.name}",
                                  lambda: G.face(sz, k), lambda: G.face(S.sz(swapped, x), k))
                rec.true("common degeneracy", "common degeneracy", f"i={i} x={c.name}",
                         lambda: S.common_degeneracy_check(i, x))
                rec.equal("frontal action D tau = tau D'", "Szczarba operators", f"i={i} x={c.name}",
                          lambda: Word(n, tuple(l for j in range(n + 1) for l in inv(G.apply(
                              d_operator(j, i), G.tau(S.d0_power(x, j)))).letters)),
                          lambda: Word(n, tuple(l for j in range(n + 1) for l in inv(S.factor(j, i, x)).letters)))
    for a in O.letters(cfg.max_dim):
        e = Chain.basis(a.degree, (a,))
        if a.degree >= 1:
            rec.equal("phi is a chain map", "phi is a DGA map", str(a),
                      lambda: G.boundary(S.phi(e)), lambda: S.phi(O.diff(e)))
    for _ in range(cfg.samples):
        p, q = rng.randint(0, 2), rng.randint(0, 2)
        u, v = O.random_word(p, 3, rng), O.random_word(q, 3, rng)
        if u is None or v is None:
            continue
        a, b = Chain.basis(p, u), Chain.basis(q, v)
        rec.equal("phi is multiplicative", "phi is a DGA map", f"{render_word(u)} {render_word(v)}",
                  lambda: S.phi(O.mul(a, b)), lambda: G.shuffle_mul(S.phi(a), S.phi(b)))


def suite_retraction(X: SimplicialSet, cfg: VerifyConfig, rng: random.Random, rec: _Recorder):
    E = engine_for(X)
    G, O, S, R = E.G, E.cobar, E.szczarba, E.retraction
    for x in (Simplex(c) for c in X.cells(1)):
        rec.equal("psi_0(tau x) = inv x", "degree-0 isomorphism", x.base.name, R.psi(G.chain(G.tau(x))), O.bar(x))
        rec.equal("psi_0(tau x^-1) = 1 + s^-1 x", "degree-0 isomorphism", x.base.name,
                  R.psi(G.chain(inv(G.tau(x)))), O.one_plus_susp(x))
    for x in G.generators(1):
        rec.equal("psi_1(tau x) low-degree formula", "low-degree formulas", str(x),
                  lambda: R.psi_word(G.tau(x)),
                  lambda: -1 * O.product(O.bar(front(X, x, 1)), O.susp(x), O.bar(X.sub(x, (0, 2)))))
        rec.equal("psi_1(tau x^-1) low-degree formula", "low-degree formulas", str(x),
                  lambda: R.psi_word(inv(G.tau(x))), lambda: O.mul(O.susp(x), O.bar(X.sub(x, (1, 2)))))
    for _ in range(cfg.samples):
        w = G.random_word(0, 2 * cfg.max_word_length, rng)
        rec.equal("phi_0 psi_0 = Id", "degree-0 isomorphism", str(w),
                  lambda: S.phi(R.psi_word(w)), G.chain(w))
        u = O.random_word(0, 2 * cfg.max_word_length, rng)
        if u is not None:
            e = Chain.basis(0, u)
            rec.equal("psi_0 phi_0 = Id", "degree-0 isomorphism", render_word(u), lambda: R.psi(S.phi(e)), e)
    for n in range(1, cfg.max_degree + 1):
        words = sample_words(G, n, cfg.samples, cfg.max_word_length, rng)
        if len(words) < cfg.samples:
            rec.report.notes.append(f"degree {n}: only {len(words)} nondegenerate words found by sampling")
        for w in words:
            c = G.chain(w)
            rec.equal("psi is a chain map", "psi is a chain map", str(w),
                      lambda: O.diff(R.psi(c)), lambda: R.psi(G.boundary(c)))
        for w in sample_words(G, n, max(1, cfg.samples // 4), cfg.max_word_length, rng, nondegenerate=False):
            if G.is_degenerate(w):
                rec.equal("psi vanishes on degenerate words", "psi is well-defined", str(w),
                          lambda: R.psi_word(w), Chain(n))
    for _ in range(cfg.samples):
        p = rng.randint(1, cfg.max_degree - 1) if cfg.max_degree > 1 else 1
        q = rng.randint(0, cfg.max_degree - p)
        v = sample_words(G, p, 1, cfg.max_word_length, rng)
        w = sample_words(G, q, 1, cfg.max_word_length, rng) if q else [G.random_word(0, 3, rng)]
        if not v or not w:
            continue
        a, b = G.chain(v[0]), G.chain(w[0])
        rec.equal("psi is multiplicative", "psi is an algebra map", f"{v[0]} {w[0]}",
                  lambda: R.psi(G.shuffle_mul(a, b)), lambda: O.mul(R.psi(a), R.psi(b)))
    for a in O.letters(cfg.max_dim):
        e = Chain.basis(a.degree, (a,))
        rec.equal("psi phi = Id on generators", "psi phi = Id", str(a), lambda: R.psi(S.phi(e)), e)
        if a.kind == "s" and a.cell.dim >= 2:
            n = a.cell.dim - 1
            for i in enumerate_s(n):
                expected = e if not any(i) else Chain(n)
                rec.equal("psi Sz_i x = x iff i = 0", "psi phi = Id", f"i={i} x={a.cell.name}",
                          lambda: R.psi_word(S.sz(i, Simplex(a.cell))), expected)
    for _ in range(cfg.samples):
        d = rng.randint(1, cfg.max_degree)
        u = O.random_word(d, cfg.max_word_length, rng)
        if u is None:
            continue
        e = Chain.basis(d, u)
        rec.equal("psi phi = Id on words", "psi phi = Id", render_word(u), lambda: R.psi(S.phi(e)), e)


def permutation_map(W: SimplicialSet, perm: dict[int, int]) -> SimplicialMap:
    """The wedge automorphism sending summand m to summand perm[m]."""
    images = {}
    for c in W.all_cells():
        if c in W.vertices:
            m, verts = W.vertices[c]
            images[c] = W.from_vertices(perm[m], verts)
        else:
            images[c] = Simplex(c)
    return SimplicialMap(W, W, images)


def suite_contraction(cfg: VerifyConfig, rng: random.Random, rec: _Recorder,
                      models: tuple[tuple[int, int], ...] = ((1, 2), (1, 3), (2, 2), (3, 2), (2, 3))):
    """Cone contractions on deltabar(n) (k = 1) and wedges W_k(n)."""
    for k, n in models:
        W = wedge_model(k, n) if k > 1 else model(f"deltabar{n}")
        G = engine_for(W).G
        label = "cone contraction" if k == 1 else "wedge contraction"
        for d in range(1, 4):
            words = sample_words(G, d, max(cfg.samples // 2, 50), cfg.max_word_length, rng)
            if k > 1:
                words = [w for w in words if len({W.vertices.get(x.base, (0,))[0] for x, _ in w.letters}) > 1] or words
            for w in words:
                c = G.chain(w)
                rec.equal("dh + hd = Id", label, f"{W.name} {w}",
                          lambda: G.boundary(contraction(G, c)) + contraction(G, G.boundary(c)), c)
                rec.equal("h h = 0", label, f"{W.name} {w}", lambda: contraction(G, contraction(G, c)), Chain(d + 2))
        if k > 1:
            perm = {m: (m % k) + 1 for m in range(1, k + 1)}
            P = permutation_map(W, perm)
            rec.true("permutation map is simplicial", label, W.name, P.check)
            for d in range(0, 3):
                for w in sample_words(G, d, 20, cfg.max_word_length, rng, nondegenerate=d > 0):
                    c = G.chain(w)
                    rec.equal("C(Psi) h = h C(Psi) for summand permutations", label, f"{W.name} {w}",
                              lambda: group_map(G, P, contraction(G, c)), lambda: contraction(G, group_map(G, P, c)))
    X = model("deltabar2")
    G = engine_for(X).G
    x = Simplex(X.cell(2, "012"))
    target = G.boundary(G.chain(G.tau(x)))
    rec.equal("preimage solver inverts a boundary", "acyclicity (solver path)", "d tau(012) in deltabar2",
              lambda: G.boundary(preimage_solver(G, target, 1)), target)


def suite_sdr(X: SimplicialSet, cfg: VerifyConfig, rng: random.Random, rec: _Recorder,
              homotopy: Homotopy | None = None):
    H = homotopy or Homotopy(max_degree=cfg.sdr_degree)
    E = engine_for(X)
    G = E.G
    anchor = "strong deformation retract"
    for n in range(1, cfg.sdr_degree + 1):
        for w in G.words(n, cfg.sdr_word_length):
            if not w.letters or G.is_degenerate(w):
                continue
            c = G.chain(w)
            rec.equal("dPhi + Phi d = phi psi - Id", anchor, f"{X.name} {w}", lambda: H.residual(X, c), Chain(n))
            f, mw = psi_w(X, w)
            rec.equal("Psi_w(model word) = w", anchor, f"{X.name} {w}",
                      lambda: Word(n, tuple((f(y), e) for y, e in mw.letters)), w)
    for (n, exps), value in sorted(H._models.items()):
        W = wedge_model(len(exps), n + 1)
        rec.equal("h Phi = 0 on models", anchor, f"n={n} exps={exps}",
                  lambda: contraction(engine_for(W).G, value), Chain(n + 2))
    # naturality along the collapse of the other cells onto the top cell
    tops = X.cells(X.dimension)
    if len(tops) == 1 and X.dimension >= 2 and X.cells(1):
        S = sphere(X.dimension)
        g = collapse_map(X, tops[0], S)
        GS = engine_for(S).G
        for n in range(1, cfg.sdr_degree + 1):
            for w in sample_words(G, n, max(5, cfg.samples // 10), cfg.sdr_word_length, rng):
                c = G.chain(w)
                rec.equal("Phi is natural", "naturality of Phi", f"{X.name} -> {S.name} {w}",
                          lambda: group_map(GS, g, H.big_phi(X, c)), lambda: H.big_phi(S, group_map(GS, g, c)))
    solver = sorted(k for k, v in H.path.items() if v == "solver")
    rec.report.notes.append("model homotopies via " + (
        f"preimage solver for {solver}" if solver else "the wedge contraction only (no solver fallback)"))


def collapse_map(X: SimplicialSet, top, S: SimplicialSet) -> SimplicialMap:
    images = {c: (Simplex(S.cell(c.dim, "sigma")) if c == top else S.base_degenerate(c.dim))
              for c in X.all_cells()}
    return SimplicialMap(X, S, images)


def homology_oracle(generator_degrees: list[int], n: int) -> int:
    """Rank of the degree-n part of a tensor algebra on generators of the given degrees."""
    ranks = [1] + [0] * n
    for d in range(1, n + 1):
        ranks[d] = sum(ranks[d - g] for g in generator_degrees if 1 <= g <= d)
    return ranks[n]


def suite_homology(cfg: VerifyConfig, rec: _Recorder):
    for k, top in ((2, 3), (3, 4)):
        X = sphere(k)
        groups = cobar_homology(X, top)
        for h in groups:
            expected = homology_oracle([k - 1], h.degree)
            rec.equal("H_n(cobar S^k) matches tensor algebra", "homology", f"S^{k} n={h.degree}",
                      (h.betti, tuple(h.torsion)), (expected, ()))


def run_suite(name: str, X: SimplicialSet | None, cfg: VerifyConfig | None = None) -> SuiteReport:
    cfg = cfg or VerifyConfig()
    if name not in SUITES and name != "chains":
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    rng = random.Random(cfg.seed)
    report = SuiteReport(name, X.name if X is not None else "builtin", cfg.seed)
    rec = _Recorder(report)
    t0 = time.perf_counter()
    if name == "twisting":
        suite_twisting(X, cfg, rng, rec)
    elif name == "chains":
        suite_chains(X, cfg, rng, rec)
    elif name == "cobar":
        suite_chains(X, cfg, rng, rec)
        suite_cobar(X, cfg, rng, rec)
    elif name == "szczarba":
        suite_szczarba(X, cfg, rng, rec)
    elif name == "retraction":
        suite_retraction(X, cfg, rng, rec)
    elif name == "sdr":
        suite_sdr(X, cfg, rng, rec)
    elif name == "contraction":
        suite_contraction(cfg, rng, rec)
    elif name == "homology":
        suite_homology(cfg, rec)
    report.seconds = time.perf_counter() - t0
    return report
