"""Smith normal form over the integers and homology of the cobar construction of a 1-reduced X.

Only the cobar side is computed: (GX)_n has infinitely many nondegenerate
elements, so CGX has no finite basis to reduce.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chains import Chain
from .cobar import Cobar, CobarLetter, CobarWord, render_word
from .simplicial import SimplicialError, SimplicialSet

Matrix = list[list[int]]


def identity_matrix(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(A: Matrix, B: Matrix) -> Matrix:
    if not A:
        return []
    inner = len(B)
    cols = len(B[0]) if B else 0
    return [[sum(A[i][k] * B[k][j] for k in range(inner)) for j in range(cols)] for i in range(len(A))]


@dataclass
class SNF:
    """U @ A @ V == D with D diagonal, d_1 | d_2 | ... and U, V unimodular."""
    D: Matrix
    U: Matrix
    V: Matrix
    factors: list[int]

    @property
    def rank(self) -> int:
        return len(self.factors)


def smith_normal_form(A: Matrix, ncols: int | None = None) -> SNF:
    m = len(A)
    n = len(A[0]) if A else (ncols or 0)
    D = [list(row) for row in A]
    U = identity_matrix(m)
    V = identity_matrix(n)

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, q):  # row dst += q * row src
        if q:
            D[dst] = [a + q * b for a, b in zip(D[dst], D[src])]
            U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]

    def add_col(src, dst, q):  # col dst += q * col src
        if q:
            for row in D:
                row[dst] += q * row[src]
            for row in V:
                row[dst] += q * row[src]

    t = 0
    while t < min(m, n):
        # pivot: smallest nonzero absolute value in the remaining block
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = D[i][j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
        if best is None:
            break
        _, i, j = best
        swap_rows(t, i)
        swap_cols(t, j)
        done = False
        while not done:
            done = True
            p = D[t][t]
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(t, i, -(D[i][t] // p))
                    if D[i][t]:
                        swap_rows(t, i)
                        done = False
                        break
            if not done:
                continue
            p = D[t][t]
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(t, j, -(D[t][j] // p))
                    if D[t][j]:
                        swap_cols(t, j)
                        done = False
                        break
            if not done:
                continue
            # divisibility: fold any entry not divisible by the pivot into row t
            p = D[t][t]
            for i in range(t + 1, m):
                if any(D[i][j] % p for j in range(t + 1, n)):
                    add_row(i, t, 1)
                    done = False
                    break
        if D[t][t] < 0:
            D[t] = [-a for a in D[t]]
            U[t] = [-a for a in U[t]]
        t += 1
    factors = [D[i][i] for i in range(min(m, n)) if D[i][i]]
    return SNF(D, U, V, factors)


def solve_integer(A: Matrix, b: list[int]) -> list[int] | None:
    """An integer solution of A x = b, or None if none exists."""
    m = len(A)
    n = len(A[0]) if A else 0
    s = smith_normal_form(A, n)
    ub = [sum(s.U[i][k] * b[k] for k in range(m)) for i in range(m)]
    y = [0] * n
    for i in range(m):
        d = s.D[i][i] if i < n else 0
        if d:
            if ub[i] % d:
                return None
            y[i] = ub[i] // d
        elif ub[i]:
            return None
    return [sum(s.V[i][k] * y[k] for k in range(n)) for i in range(n)]


# cobar homology -----------------------------------------------------------

def cobar_basis(X: SimplicialSet, degree: int) -> list[CobarWord]:
    """Words in s^-1 c (dim c >= 2) of total degree ``degree``; requires X 1-reduced."""
    letters = [CobarLetter("s", c) for d in range(2, X.dimension + 1) for c in X.cells(d)]
    out: list[CobarWord] = []

    def extend(prefix: tuple, remaining: int):
        if remaining == 0:
            out.append(prefix)
            return
        for a in letters:
            if a.degree <= remaining:
                extend(prefix + (a,), remaining - a.degree)
    extend((), degree)
    return sorted(out, key=render_word)


def boundary_matrix(cobar: Cobar, degree: int) -> tuple[Matrix, int, int]:
    """Matrix of the cobar differential (degree -> degree-1) in the word bases."""
    src = cobar_basis(cobar.X, degree)
    tgt = cobar_basis(cobar.X, degree - 1) if degree > 0 else []
    index = {w: i for i, w in enumerate(tgt)}
    M = [[0] * len(src) for _ in tgt]
    for j, w in enumerate(src):
        for k, v in cobar.diff(Chain.basis(degree, w)):
            M[index[k]][j] = v
    return M, len(tgt), len(src)


@dataclass
class HomologyGroup:
    degree: int
    betti: int
    torsion: list[int]

    def __str__(self):
        parts = ([f"Z^{self.betti}" if self.betti != 1 else "Z"] if self.betti else []) + \
                [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) if parts else "0"


def cobar_homology(X: SimplicialSet, n_max: int) -> list[HomologyGroup]:
    if not X.is_one_reduced:
        raise SimplicialError(f"{X.name} is not 1-reduced: the degree-0 part is not finitely generated")
    cobar = Cobar(X)
    mats = {d: boundary_matrix(cobar, d) for d in range(1, n_max + 2)}
    for d in range(2, n_max + 2):
        prod = matmul(mats[d - 1][0], mats[d][0])
        if any(any(row) for row in prod):
            raise AssertionError(f"cobar boundary matrices do not compose to zero in degree {d}")
    snfs = {d: smith_normal_form(M, cols) for d, (M, _, cols) in mats.items()}
    out = []
    for d in range(n_max + 1):
        dim_c = len(cobar_basis(X, d))
        rank_out = snfs[d].rank if d >= 1 else 0
        incoming = snfs[d + 1]
        betti = dim_c - rank_out - incoming.rank
        out.append(HomologyGroup(d, betti, [f for f in incoming.factors if f > 1]))
    return out
