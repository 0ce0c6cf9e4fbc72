"""Acceptance gate: one PASS/FAIL line per criterion, printed in the terminal summary.

Every check is exact over the integers; each criterion also asserts its time budget.
"""

import random
import time
from contextlib import contextmanager


from cobarlab.chains import Chain, boundary
from cobarlab.cobar import all_normal_forms, render_word
from cobarlab.engine import engine_for
from cobarlab.homology import cobar_homology
from cobarlab.homotopy import Homotopy, contraction, group_map, wedge_model
from cobarlab.loop_group import mul, inv
from cobarlab.simplicial import Simplex, model
from cobarlab.szczarba import enumerate_s
from cobarlab.verify import homology_oracle, permutation_map, sample_words

FIVE = ("sphere2", "sphere3", "deltabar2", "deltabar3", "deltabar4")
RESULTS: list[str] = []
SEED = 20240917


class Tally:
    def __init__(self):
        self.checked = 0
        self.failures: list[str] = []
        self.notes: list[str] = []

    def check(self, ok: bool, what: str):
        self.checked += 1
        if not ok:
            self.failures.append(what)


@contextmanager
def criterion(number: int, title: str, budget: float):
    tally = Tally()
    t0 = time.perf_counter()
    error = None
    try:
        yield tally
    except Exception as err:  # recorded, then re-raised below
        error = err
    elapsed = time.perf_counter() - t0
    ok = error is None and not tally.failures and tally.checked > 0 and elapsed < budget
    detail = f"{tally.checked} checks, {len(tally.failures)} failed, {elapsed:.1f}s (limit {budget:.0f}s)"
    if tally.notes:
        detail += "; " + "; ".join(tally.notes)
    if error is not None:
        detail += f"; error: {type(error).__name__}: {error}"
    RESULTS.append(f"criterion {number:2d} {'PASS' if ok else 'FAIL'}  {title}: {detail}")
    if error is not None:
        raise error
    assert not tally.failures, tally.failures[:5]
    assert tally.checked > 0
    assert elapsed < budget, f"{elapsed:.1f}s over the {budget}s budget"


def test_01_twisting_axioms():
    with criterion(1, "twisting axioms for tau on five models, dims <= 4", 5) as t:
        for name in FIVE:
            X = model(name)
            G = engine_for(X).G
            for d in range(0, 5):
                for x in X.simplices(d):
                    if d <= 3:
                        t.check(G.tau(X.degeneracy(x, 0)) == G.identity(d), f"{name} tau s0 {x}")
                    if d == 0:
                        continue
                    tx = G.tau(x)
                    for i in range(d):
                        t.check(G.degeneracy(tx, i) == G.tau(X.degeneracy(x, i + 1)), f"{name} s{i} {x}")
                    if d >= 2:
                        t.check(G.face(tx, 0) == mul(inv(G.tau(X.face(x, 0))), G.tau(X.face(x, 1))),
                                f"{name} d0 {x}")
                        for i in range(1, d):
                            t.check(G.face(tx, i) == G.tau(X.face(x, i + 1)), f"{name} d{i} {x}")


def test_02_boundary_squares_to_zero():
    rng = random.Random(SEED)
    with criterion(2, "dd = 0 in CX, CGX (200 words/degree) and the cobar construction", 30) as t:
        for name in FIVE:
            X = model(name)
            E = engine_for(X)
            for d in range(2, X.dimension + 1):
                for c in X.cells(d):
                    t.check(not boundary(X, boundary(X, Chain.basis(d, c))), f"CX {name} {c}")
            for n in range(2, 5):
                for _ in range(200):
                    w = E.G.random_word(n, 3, rng)
                    t.check(not E.G.boundary(E.G.boundary(E.G.chain(w))), f"CGX {name} {w}")
            for a in E.cobar.letters(4):
                if a.degree >= 1:
                    e = Chain.basis(a.degree, (a,))
                    t.check(not E.cobar.diff(E.cobar.diff(e)), f"cobar {name} {a}")


def test_03_rewriting_confluence():
    rng = random.Random(SEED)
    with criterion(3, "all rewrite orders agree on 1000 raw words of <= 8 letters", 10) as t:
        for name in ("deltabar2", "deltabar3"):
            O = engine_for(model(name)).cobar
            memo: dict = {}
            for _ in range(500):
                w = O.random_raw_word(8, rng, max_dim=2)
                forms = all_normal_forms(w, memo)
                t.check(len(forms) == 1 and dict(next(iter(forms))) == dict(O.word(w).terms),
                        f"{name} {render_word(w)}")


def test_04_degree_zero_isomorphism():
    rng = random.Random(SEED)
    with criterion(4, "phi0 psi0 = Id and psi0 phi0 = Id on 500 degree-0 words", 5) as t:
        E = engine_for(model("deltabar3"))
        done = 0
        while done < 500:
            w = E.G.random_word(0, 8, rng)
            t.check(E.phi(E.retraction.psi_word(w)) == E.G.chain(w), f"phi psi {w}")
            u = E.cobar.random_word(0, 8, rng)
            if u is not None:
                e = Chain.basis(0, u)
                t.check(E.psi(E.phi(e)) == e, f"psi phi {render_word(u)}")
                done += 1


def test_05_phi_is_a_dga_map():
    rng = random.Random(SEED)
    with criterion(5, "phi chain map on all generators (dim <= 4, five models), multiplicative on 100 pairs",
                   120) as t:
        for name in FIVE:
            E = engine_for(model(name))
            for a in E.cobar.letters(4):
                if a.degree >= 1:
                    e = Chain.basis(a.degree, (a,))
                    t.check(E.G.boundary(E.phi(e)) == E.phi(E.cobar.diff(e)), f"{name} {a}")
        pairs = 0
        while pairs < 100:
            name = ("deltabar2", "deltabar3", "deltabar4")[pairs % 3]
            E = engine_for(model(name))
            p, q = rng.randint(0, 2), rng.randint(0, 2)
            u, v = E.cobar.random_word(p, 3, rng), E.cobar.random_word(q, 3, rng)
            if u is None or v is None:
                continue
            a, b = Chain.basis(p, u), Chain.basis(q, v)
            t.check(E.phi(E.cobar.mul(a, b)) == E.G.shuffle_mul(E.phi(a), E.phi(b)),
                    f"{name} {render_word(u)} {render_word(v)}")
            pairs += 1


def test_06_szczarba_relations():
    with criterion(6, "Szczarba relations and common degeneracy, all i in S_n, n <= 3, deltabar4", 60) as t:
        X = model("deltabar4")
        E = engine_for(X)
        G, S = E.G, E.szczarba
        for n in range(1, 4):
            for c in X.cells(n + 1):
                x = Simplex(c)
                for i in enumerate_s(n):
                    sz = S.sz(i, x)
                    rhs = S.sz(i[1:], X.face(x, i[0] + 1)) if n > 1 else inv(G.tau(X.face(x, i[0] + 1)))
                    t.check(G.face(sz, 0) == rhs, f"relation 1 {i} {c}")
                    for k in range(1, n):
                        if i[k - 1] > i[k]:
                            swapped = i[:k - 1] + (i[k], i[k - 1] - 1) + i[k + 1:]
                            t.check(G.face(sz, k) == G.face(S.sz(swapped, x), k), f"relation 2 {i} k={k} {c}")
                    t.check(S.common_degeneracy_check(i, x), f"common degeneracy {i} {c}")


def test_07_retraction():
    rng = random.Random(SEED)
    with criterion(7, "psi chain map, algebra map, psi phi = Id, degree-0 round trips", 60) as t:
        for name in ("sphere2", "deltabar2", "deltabar3"):
            E = engine_for(model(name))
            G, O, R = E.G, E.cobar, E.retraction
            for n in (1, 2, 3):
                if len(G.generators(n)) <= 6:
                    # small population: every nondegenerate word beats 100 draws with repeats
                    words = [w for w in G.words(n, 3) if w.letters and not G.is_degenerate(w)]
                    t.notes.append(f"{name} degree {n}: all {len(words)} nondegenerate words")
                else:
                    words = sample_words(G, n, 100, 3, rng)
                    t.notes.append(f"{name} degree {n}: {len(words)} sampled words")
                t.check(bool(words), f"{name} degree {n}: no words")
                for w in words:
                    c = G.chain(w)
                    t.check(O.diff(E.psi(c)) == E.psi(G.boundary(c)), f"chain map {name} {w}")
                for w in sample_words(G, n, 20, 3, rng, nondegenerate=False):
                    if G.is_degenerate(w):
                        t.check(not R.psi_word(w), f"degenerate {name} {w}")
            pairs = 0
            while pairs < 40:
                p = rng.randint(1, 2)
                q = rng.randint(0, 3 - p)
                v = sample_words(G, p, 1, 2, rng)
                w = sample_words(G, q, 1, 2, rng) if q else [G.random_word(0, 3, rng)]
                if not v or not w:
                    continue
                a, b = G.chain(v[0]), G.chain(w[0])
                t.check(E.psi(G.shuffle_mul(a, b)) == O.mul(E.psi(a), E.psi(b)), f"algebra {name} {v[0]} {w[0]}")
                pairs += 1
            for a in O.letters(4):
                e = Chain.basis(a.degree, (a,))
                t.check(E.psi(E.phi(e)) == e, f"psi phi {name} {a}")
                if a.kind == "s" and a.cell.dim >= 2:
                    for i in enumerate_s(a.cell.dim - 1):
                        want = e if not any(i) else Chain(a.degree)
                        t.check(R.psi_word(E.szczarba.sz(i, Simplex(a.cell))) == want, f"Sz {i} {a}")
            done = 0
            while done < 100:
                d = rng.randint(0, 3)
                u = O.random_word(d, 3, rng)
                if u is None:
                    continue
                e = Chain.basis(d, u)
                t.check(E.psi(E.phi(e)) == e, f"psi phi {name} {render_word(u)}")
                done += 1
            for _ in range(100):
                w = G.random_word(0, 6, rng)
                t.check(E.phi(R.psi_word(w)) == G.chain(w), f"phi0 psi0 {name} {w}")
        for name in ("deltabar4", "sphere3"):
            E = engine_for(model(name))
            for a in E.cobar.letters(4):
                e = Chain.basis(a.degree, (a,))
                t.check(E.psi(E.phi(e)) == e, f"psi phi {name} {a}")


def contraction_checks(t: Tally, W, rng, per_degree: int, mixed: bool):
    G = engine_for(W).G
    for d in (1, 2, 3):
        words = []
        for w in sample_words(G, d, per_degree * 20, 3, rng):
            if mixed and len({W.vertex_sequence(x)[0] for x, _ in w.letters}) < 2:
                continue
            words.append(w)
            if len(words) == per_degree:
                break
        t.notes.append(f"{W.name} d{d}: {len(words)}")
        t.check(len(words) >= per_degree, f"{W.name}: only {len(words)} words in degree {d}")
        for w in words:
            c = G.chain(w)
            t.check(G.boundary(contraction(G, c)) + contraction(G, G.boundary(c)) == c, f"{W.name} dh+hd {w}")
            t.check(not contraction(G, contraction(G, c)), f"{W.name} hh {w}")


def test_08_cone_contraction():
    rng = random.Random(SEED)
    with criterion(8, "dh + hd = Id and hh = 0 on deltabar2, deltabar3 (50 words/degree)", 30) as t:
        for n in (2, 3):
            contraction_checks(t, model(f"deltabar{n}"), rng, 50, mixed=False)


def test_09_wedge_contraction():
    rng = random.Random(SEED)
    with criterion(9, "wedge contraction on mixed-summand words (k <= 3) and permutation naturality", 60) as t:
        for k, n in ((2, 2), (3, 2), (2, 3)):
            W = wedge_model(k, n)
            contraction_checks(t, W, rng, 30, mixed=True)
            G = engine_for(W).G
            P = permutation_map(W, {m: m % k + 1 for m in range(1, k + 1)})
            t.check(P.check(), f"{W.name} permutation is simplicial")
            for d in (0, 1, 2):
                for w in sample_words(G, d, 20, 3, rng, nondegenerate=d > 0):
                    c = G.chain(w)
                    t.check(group_map(G, P, contraction(G, c)) == contraction(G, group_map(G, P, c)),
                            f"{W.name} naturality {w}")
        if not t.failures:
            t.notes.append("no fallback needed: the candidate contracts every tested word")


def test_10_strong_deformation_retract():
    with criterion(10, "dPhi + Phi d = phi psi - Id on all nondegenerate words, length <= 2, degrees 1-2",
                   300) as t:
        H = Homotopy(max_degree=2)
        for name in ("sphere2", "deltabar2"):
            X = model(name)
            G = engine_for(X).G
            count = 0
            for n in (1, 2):
                for w in G.words(n, 2):
                    if w.letters and not G.is_degenerate(w):
                        t.check(not H.residual(X, G.chain(w)), f"{name} {w}")
                        count += 1
            t.notes.append(f"{name}: {count} words")
        for (n, exps), value in H._models.items():
            W = wedge_model(len(exps), n + 1)
            t.check(not contraction(engine_for(W).G, value), f"h Phi model {n} {exps}")
        solver = [k for k, v in H.path.items() if v == "solver"]
        t.notes.append(f"{len(H._models)} models" + (f", solver fallback for {solver}" if solver else
                                                      ", wedge contraction path only"))


def test_11_homology():
    with criterion(11, "cobar homology of S^2 (n <= 3) and S^3 (n <= 4) against the tensor algebra", 30) as t:
        for k, top in ((2, 3), (3, 4)):
            for h in cobar_homology(model(f"sphere{k}"), top):
                want = homology_oracle([k - 1], h.degree)
                t.check(h.betti == want and not h.torsion, f"S^{k} H_{h.degree} = {h}")
