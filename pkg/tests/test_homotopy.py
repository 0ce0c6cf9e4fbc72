import pytest

from cobarlab.chains import Chain
from cobarlab.engine import engine_for
from cobarlab.homotopy import (DepthError, Homotopy, contraction, group_map, model_word,
                               preimage_solver, psi_w, wedge_model)
from cobarlab.loop_group import Word, inv, mul
from cobarlab.simplicial import Simplex, SimplicialError, model
from cobarlab.verify import collapse_map, permutation_map, sample_words


def test_contraction_example():
    X = model("deltabar2")
    G = engine_for(X).G
    t = G.chain(G.tau(Simplex(X.cell_named("01"))))
    assert contraction(G, t) == -1 * G.chain(G.tau(Simplex(X.cell_named("012"))))


def test_wedge_contraction_stays_in_its_summand():
    W = wedge_model(2, 2)
    G = engine_for(W).G
    t = G.chain(G.tau(Simplex(W.cell_named("01@2"))))
    assert contraction(G, t) == -1 * G.chain(G.tau(Simplex(W.cell_named("012@2"))))


@pytest.mark.parametrize("k,n", [(1, 2), (1, 3), (2, 2), (3, 2), (2, 3)])
def test_contraction_identities(k, n, rng):
    W = wedge_model(k, n) if k > 1 else model(f"deltabar{n}")
    G = engine_for(W).G
    for d in (1, 2, 3):
        for w in sample_words(G, d, 25, 3, rng):
            c = G.chain(w)
            assert G.boundary(contraction(G, c)) + contraction(G, G.boundary(c)) == c
            assert not contraction(G, contraction(G, c))


def test_contraction_commutes_with_summand_permutations(rng):
    W = wedge_model(3, 2)
    G = engine_for(W).G
    P = permutation_map(W, {1: 2, 2: 3, 3: 1})
    assert P.check()
    for d in (0, 1, 2):
        for w in sample_words(G, d, 20, 3, rng, nondegenerate=d > 0):
            c = G.chain(w)
            assert group_map(G, P, contraction(G, c)) == contraction(G, group_map(G, P, c))


def test_contraction_needs_a_cone_model():
    with pytest.raises(SimplicialError):
        contraction(engine_for(model("sphere2")).G, Chain(1))


def test_representing_map_recovers_the_word():
    S = model("sphere2")
    G = engine_for(S).G
    sigma = Simplex(S.cell_named("sigma"))
    w = G.tau(sigma)
    f, mw = psi_w(S, w)
    assert f.check()
    assert mw == model_word(1, 2, (1,))
    assert Word(1, tuple((f(x), e) for x, e in mw.letters)) == w


def test_representing_map_is_natural_under_collapse():
    X = model("deltabar2")
    S = model("sphere2")
    g = collapse_map(X, X.cell_named("012"), S)
    assert g.check()
    GX = engine_for(X).G
    w = mul(GX.tau(Simplex(X.cell_named("012"))), inv(GX.tau(X.degeneracy(Simplex(X.cell_named("01")), 1))))
    fw, mw = psi_w(X, w)
    gw = Word(1, tuple((g(x), e) for x, e in w.letters))
    fg, mg = psi_w(S, gw)
    # both classify the same image word
    assert Word(1, tuple((g(fw(x)), e) for x, e in mw.letters)) == gw
    assert Word(1, tuple((fg(x), e) for x, e in mg.letters)) == gw


def test_homotopy_degree_zero_and_limits():
    H = Homotopy(max_degree=1)
    S = model("sphere2")
    G = engine_for(S).G
    assert H.big_phi(S, G.unit()) == Chain(1)
    sigma = Simplex(S.cell_named("sigma"))
    w = Word(2, ((S.degeneracy(sigma, 1), 1), (S.degeneracy(sigma, 2), 1)))
    assert not G.is_degenerate(w)
    with pytest.raises(DepthError):
        H.phi_word(S, w)


@pytest.mark.parametrize("name", ["sphere2", "deltabar2"])
def test_homotopy_identity(name):
    X = model(name)
    G = engine_for(X).G
    H = Homotopy()
    for n in (1, 2):
        for w in G.words(n, 2):
            if w.letters and not G.is_degenerate(w):
                assert not H.residual(X, G.chain(w))
    for (n, exps), value in H._models.items():
        W = wedge_model(len(exps), n + 1)
        assert not contraction(engine_for(W).G, value)
    assert set(H.path.values()) == {"contraction"}


def test_homotopy_on_sphere_generator():
    S = model("sphere2")
    E = engine_for(S)
    c = E.G.chain(E.G.tau(Simplex(S.cell_named("sigma"))))
    H = Homotopy()
    assert E.G.boundary(H.big_phi(S, c)) == E.phi(E.psi(c)) - c


def test_solver_path_agrees_with_contraction():
    a, b = Homotopy(), Homotopy(use_solver=True, solver_length=3)
    for exps in ((1,), (-1,)):
        va, vb = a.model_phi(1, exps), b.model_phi(1, exps)
        W = wedge_model(len(exps), 2)
        G = engine_for(W).G
        assert G.boundary(va) == G.boundary(vb)
    assert set(b.path.values()) == {"solver"}


def test_preimage_solver():
    X = model("deltabar2")
    G = engine_for(X).G
    assert preimage_solver(G, Chain(1)) == Chain(2)
    t = G.chain(G.tau(Simplex(X.cell_named("012"))))
    target = G.boundary(t)
    assert G.boundary(preimage_solver(G, target, 1)) == target
    with pytest.raises(ValueError):
        preimage_solver(G, t)
