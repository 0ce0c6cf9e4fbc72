import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cobarlab.homology import cobar_homology, matmul, smith_normal_form, solve_integer
from cobarlab.simplicial import SimplicialError, model
from cobarlab.verify import homology_oracle

matrices = st.integers(1, 4).flatmap(
    lambda m: st.integers(1, 4).flatmap(
        lambda n: st.lists(st.lists(st.integers(-6, 6), min_size=n, max_size=n), min_size=m, max_size=m)))


def det(A):
    if len(A) == 1:
        return A[0][0]
    return sum((-1) ** j * A[0][j] * det([row[:j] + row[j + 1:] for row in A[1:]]) for j in range(len(A)))


def test_snf_examples():
    assert smith_normal_form([[0, 0], [0, 0]]).rank == 0
    assert smith_normal_form([[1, 0], [0, 1]]).factors == [1, 1]
    s = smith_normal_form([[2, 4], [6, 8]])
    assert s.factors == [2, 4]
    assert s.factors[0] == 2 and math.prod(s.factors) == abs(det([[2, 4], [6, 8]]))


@given(matrices)
def test_snf_is_a_unimodular_diagonalization(A):
    s = smith_normal_form(A)
    assert matmul(matmul(s.U, A), s.V) == s.D
    assert abs(det(s.U)) == 1 and abs(det(s.V)) == 1
    assert all(f > 0 for f in s.factors)
    assert all(b % a == 0 for a, b in zip(s.factors, s.factors[1:]))
    g = math.gcd(*(v for row in A for v in row))
    if g:
        assert s.factors[0] == g
    if len(A) == len(A[0]):
        assert math.prod(s.factors) == abs(det(A)) or det(A) == 0


@given(matrices, st.data())
def test_solve_integer(A, data):
    x = data.draw(st.lists(st.integers(-5, 5), min_size=len(A[0]), max_size=len(A[0])))
    b = [sum(a * v for a, v in zip(row, x)) for row in A]
    y = solve_integer(A, b)
    assert y is not None
    assert [sum(a * v for a, v in zip(row, y)) for row in A] == b


def test_solve_integer_detects_no_solution():
    assert solve_integer([[2]], [1]) is None
    assert solve_integer([[1], [1]], [1, 2]) is None


@pytest.mark.parametrize("k,top", [(2, 3), (3, 4), (4, 5)])
def test_sphere_homology(k, top):
    groups = cobar_homology(model(f"sphere{k}"), top)
    for h in groups:
        assert h.torsion == []
        assert h.betti == homology_oracle([k - 1], h.degree)
    assert [str(h) for h in cobar_homology(model("sphere3"), 4)] == ["Z", "0", "Z", "0", "Z"]


def test_homology_needs_one_reduced():
    with pytest.raises(SimplicialError):
        cobar_homology(model("deltabar2"), 2)
