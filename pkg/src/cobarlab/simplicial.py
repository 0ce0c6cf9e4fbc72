"""Simplicial operators, finitely presented simplicial sets and built-in models.

An operator ``X_n -> X_m`` is stored in normal form ``s_{i1}...s_{iq} d_{j1}...d_{jr}``
with ``i1 > ... > iq`` and ``j1 < ... < jr``; the rightmost letter acts first.
Every simplex is stored in Eilenberg-Zilber normal form: a pure degeneracy
operator applied to a nondegenerate cell.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Iterable, NamedTuple


class SimplicialError(ValueError):
    pass


@dataclass(frozen=True)
class Operator:
    degeneracies: tuple[int, ...]
    faces: tuple[int, ...]
    source_dim: int

    def __post_init__(self):
        if self.source_dim < 0:
            raise SimplicialError(f"negative source dimension {self.source_dim}")
        if any(a <= b for a, b in zip(self.degeneracies, self.degeneracies[1:])):
            raise SimplicialError(f"degeneracies not strictly decreasing: {self.degeneracies}")
        if any(a >= b for a, b in zip(self.faces, self.faces[1:])):
            raise SimplicialError(f"faces not strictly increasing: {self.faces}")
        r = len(self.faces)
        # d_{jr} acts first on dimension source_dim, d_{j1} last
        for k, j in enumerate(self.faces):
            if not 0 <= j <= self.source_dim - (r - 1 - k):
                raise SimplicialError(f"face index d{j} out of range in {self!r}")
        e = self.source_dim - r
        if e < 0:
            raise SimplicialError(f"too many faces for dimension {self.source_dim}")
        q = len(self.degeneracies)
        for k, i in enumerate(self.degeneracies):
            if not 0 <= i <= e + (q - 1 - k):
                raise SimplicialError(f"degeneracy index s{i} out of range in {self!r}")

    @property
    def target_dim(self) -> int:
        return self.source_dim - len(self.faces) + len(self.degeneracies)

    @property
    def is_identity(self) -> bool:
        return not self.faces and not self.degeneracies

    def __str__(self):
        letters = [f"s{i}" for i in self.degeneracies] + [f"d{j}" for j in self.faces]
        return " ".join(letters) if letters else "id"

    def monotone(self) -> tuple[int, ...]:
        """The monotone map [target_dim] -> [source_dim] represented by this operator."""
        removed = set(self.faces)
        seq = [v for v in range(self.source_dim + 1) if v not in removed]
        for i in reversed(self.degeneracies):
            seq.insert(i, seq[i])
        return tuple(seq)


def identity(n: int) -> Operator:
    return Operator((), (), n)


def face(i: int, n: int) -> Operator:
    """d_i acting on X_n."""
    return Operator((), (i,), n)


def degeneracy(i: int, n: int) -> Operator:
    """s_i acting on X_n."""
    return Operator((i,), (), n)


def from_monotone(f: Iterable[int], source_dim: int) -> Operator:
    f = tuple(f)
    if any(a > b for a, b in zip(f, f[1:])) or (f and not 0 <= f[0] <= f[-1] <= source_dim):
        raise SimplicialError(f"{f} is not a monotone map into [{source_dim}]")
    image = set(f)
    faces = tuple(v for v in range(source_dim + 1) if v not in image)
    degens = tuple(i for i in reversed(range(len(f) - 1)) if f[i] == f[i + 1])
    return Operator(degens, faces, source_dim)


def _rewrite(word: list[tuple[str, int]]) -> list[tuple[str, int]]:
    # adjacent-pair rewriting with the simplicial identities; each d moves right
    # past s letters or vanishes, so the process terminates
    changed = True
    while changed:
        changed = False
        for p in range(len(word) - 1):
            (k1, a), (k2, b) = word[p], word[p + 1]
            if k1 == "d" and k2 == "s":
                if a < b:
                    word[p:p + 2] = [("s", b - 1), ("d", a)]
                elif a == b or a == b + 1:
                    word[p:p + 2] = []
                else:
                    word[p:p + 2] = [("s", b), ("d", a - 1)]
            elif k1 == "d" and k2 == "d" and a >= b:
                word[p:p + 2] = [("d", b), ("d", a + 1)]
            elif k1 == "s" and k2 == "s" and a <= b:
                word[p:p + 2] = [("s", b + 1), ("s", a)]
            else:
                continue
            changed = True
            break
    return word


@lru_cache(maxsize=None)
def compose(a: Operator, b: Operator) -> Operator:
    """Normal form of ``a o b`` (b acts first)."""
    if a.source_dim != b.target_dim:
        raise SimplicialError(
            f"cannot compose {a} (source {a.source_dim}) after {b} (target {b.target_dim})")
    word = ([("s", i) for i in a.degeneracies] + [("d", j) for j in a.faces]
            + [("s", i) for i in b.degeneracies] + [("d", j) for j in b.faces])
    word = _rewrite(word)
    return Operator(tuple(i for k, i in word if k == "s"),
                    tuple(j for k, j in word if k == "d"), b.source_dim)


def derived(t: Operator) -> Operator:
    return Operator(tuple(i + 1 for i in t.degeneracies), tuple(j + 1 for j in t.faces),
                    t.source_dim + 1)


def is_frontal(t: Operator) -> bool:
    return 0 not in t.faces


def parse_operator(text: str, source_dim: int) -> Operator:
    """Parse a word such as ``"s2 s0 d1"`` into a normal-form operator on X_source_dim."""
    op = identity(source_dim)
    for token in reversed(text.split()):
        kind, idx = token[0], token[1:]
        if kind not in "sd" or not idx.isdigit():
            raise SimplicialError(f"bad operator letter {token!r}")
        n = op.target_dim
        letter = degeneracy(int(idx), n) if kind == "s" else face(int(idx), n)
        op = compose(letter, op)
    return op


class Cell(NamedTuple):
    """A nondegenerate simplex, identified by dimension and name."""
    dim: int
    name: str


class Simplex(NamedTuple):
    base: Cell
    degens: tuple[int, ...] = ()

    @property
    def dim(self) -> int:
        return self.base.dim + len(self.degens)

    @property
    def is_degenerate(self) -> bool:
        return bool(self.degens)

    def __str__(self):
        return " ".join([f"s{i}" for i in self.degens] + [self.base.name])


def cell_simplex(c: Cell) -> Simplex:
    return Simplex(c, ())


class SimplicialSet:
    """A simplicial set with finitely many nondegenerate simplices.

    ``faces[c]`` lists ``d_0 c, ..., d_n c`` in normal form. Models built by
    the cone-supporting constructors also carry ``vertices[c] = (summand, vertex tuple)``.
    """

    def __init__(self, name: str, cells: Iterable[Cell], faces: dict[Cell, tuple[Simplex, ...]],
                 vertices: dict[Cell, tuple[int, tuple[int, ...]]] | None = None,
                 cone_vertex: int | None = None, validate: bool = True):
        self.name = name
        self._cells: dict[int, list[Cell]] = {}
        for c in cells:
            self._cells.setdefault(c.dim, []).append(c)
        self._cell_set = {c for cs in self._cells.values() for c in cs}
        self._by_name = {(c.dim, c.name): c for c in self._cell_set}
        self.faces = {c: tuple(fs) for c, fs in faces.items()}
        self.vertices = vertices or {}
        self._by_vertices = {v: c for c, v in self.vertices.items()}
        self.cone_vertex = cone_vertex
        self._apply_cache: dict[tuple[Operator, Simplex], Simplex] = {}
        if validate:
            self._validate()

    def __repr__(self):
        return f"SimplicialSet({self.name!r})"

    @property
    def dimension(self) -> int:
        return max(self._cells) if self._cells else -1

    def cells(self, dim: int) -> list[Cell]:
        return list(self._cells.get(dim, []))

    def all_cells(self) -> list[Cell]:
        return [c for d in sorted(self._cells) for c in self._cells[d]]

    def cell(self, dim: int, name: str) -> Cell:
        try:
            return self._by_name[(dim, name)]
        except KeyError:
            raise SimplicialError(f"unknown simplex {name!r} of dimension {dim} in {self.name}") from None

    def cell_named(self, name: str) -> Cell:
        found = [c for c in self._cell_set if c.name == name]
        if len(found) != 1:
            raise SimplicialError(f"simplex name {name!r} is unknown or ambiguous in {self.name}")
        return found[0]

    @property
    def is_zero_reduced(self) -> bool:
        return len(self._cells.get(0, [])) == 1

    @property
    def is_one_reduced(self) -> bool:
        return self.is_zero_reduced and not self._cells.get(1)

    @property
    def basepoint(self) -> Cell:
        if not self.is_zero_reduced:
            raise SimplicialError(f"{self.name} is not 0-reduced")
        return self._cells[0][0]

    def base_degenerate(self, dim: int) -> Simplex:
        """The totally degenerate simplex s_{dim-1}...s_0(*)."""
        return Simplex(self.basepoint, tuple(range(dim - 1, -1, -1)))

    def simplices(self, dim: int) -> list[Simplex]:
        """All simplices of dimension ``dim``, degenerate ones included."""
        out = []
        for e in range(dim + 1):
            for c in self._cells.get(e, []):
                for idx in itertools.combinations(range(dim), dim - e):
                    out.append(Simplex(c, tuple(sorted(idx, reverse=True))))
        return out

    def apply(self, op: Operator, x: Simplex) -> Simplex:
        if op.source_dim != x.dim:
            raise SimplicialError(f"operator {op} on X_{op.source_dim} applied to simplex of dim {x.dim}")
        key = (op, x)
        hit = self._apply_cache.get(key)
        if hit is not None:
            return hit
        if x.base not in self._cell_set:
            raise SimplicialError(f"unknown simplex {x.base.name!r} in {self.name}")
        t = compose(op, Operator(x.degens, (), x.base.dim))
        base = x.base
        while t.faces:
            y = self.faces[base][t.faces[-1]]
            t = compose(Operator(t.degeneracies, t.faces[:-1], y.dim), Operator(y.degens, (), y.base.dim))
            base = y.base
        result = Simplex(base, t.degeneracies)
        self._apply_cache[key] = result
        return result

    def face(self, x: Simplex, i: int) -> Simplex:
        return self.apply(face(i, x.dim), x)

    def degeneracy(self, x: Simplex, i: int) -> Simplex:
        return self.apply(degeneracy(i, x.dim), x)

    def sub(self, x: Simplex, vertices: Iterable[int]) -> Simplex:
        """x_{(v0,...,vm)} in the vertex-sequence notation."""
        return self.apply(from_monotone(vertices, x.dim), x)

    def _validate(self):
        for c in self._cell_set:
            if c.dim == 0:
                if self.faces.get(c):
                    raise SimplicialError(f"0-simplex {c.name} has faces")
                continue
            fs = self.faces.get(c)
            if fs is None or len(fs) != c.dim + 1:
                raise SimplicialError(f"simplex {c.name} needs {c.dim + 1} faces")
            for y in fs:
                if y.base not in self._cell_set:
                    raise SimplicialError(f"face of {c.name} refers to unknown simplex {y.base.name}")
                if y.dim != c.dim - 1:
                    raise SimplicialError(f"face {y} of {c.name} has wrong dimension")
                try:
                    Operator(y.degens, (), y.base.dim)
                except SimplicialError as err:
                    raise SimplicialError(f"face {y} of {c.name} not in normal form: {err}") from None
        for c in sorted(self._cell_set):
            if c.dim < 2:
                continue
            fs = self.faces[c]
            for i in range(c.dim + 1):
                for j in range(i + 1, c.dim + 1):
                    lhs = self.face(fs[j], i)
                    rhs = self.face(fs[i], j - 1)
                    if lhs != rhs:
                        raise SimplicialError(
                            f"simplicial identity d{i}d{j} = d{j - 1}d{i} fails on {c.name}: {lhs} != {rhs}")

    # cone-supporting models ---------------------------------------------

    def vertex_sequence(self, x: Simplex) -> tuple[int, tuple[int, ...]]:
        if x.base not in self.vertices:
            raise SimplicialError(f"{self.name} carries no vertex data for {x.base.name}")
        summand, verts = self.vertices[x.base]
        f = Operator(x.degens, (), x.base.dim).monotone()
        return summand, tuple(verts[k] for k in f)

    def from_vertices(self, summand: int, seq: tuple[int, ...]) -> Simplex:
        distinct = tuple(sorted(set(seq)))
        degens = tuple(i for i in reversed(range(len(seq) - 1)) if seq[i] == seq[i + 1])
        if len(distinct) == 1:
            return Simplex(self.basepoint, degens)
        c = self._by_vertices.get((summand, distinct))
        if c is None:
            raise SimplicialError(f"no simplex with vertices {distinct} in summand {summand}")
        return Simplex(c, degens)


def cone_last_vertex(X: SimplicialSet, x: Simplex) -> Simplex:
    """The simplex x.n obtained by appending the cone vertex (within x's own summand)."""
    if X.cone_vertex is None:
        raise SimplicialError(f"{X.name} does not support coning")
    if X.is_zero_reduced and x.base == X.basepoint:
        # constant sequences: any choice of vertex gives an s0-degenerate cone for dim >= 1
        if x.dim == 0:
            raise SimplicialError("cone of the basepoint is not defined")
        return X.base_degenerate(x.dim + 1)
    summand, seq = X.vertex_sequence(x)
    return X.from_vertices(summand, seq + (X.cone_vertex,))


# models ----------------------------------------------------------------

def _vname(verts: tuple[int, ...]) -> str:
    return "".join(str(v) for v in verts)


def _simplex_models(n: int, copies: int, collapse: bool, name: str) -> SimplicialSet:
    if n > 9:
        raise SimplicialError("vertex labels are single digits; n <= 9 required")
    cells, faces, vertices = [], {}, {}
    base = Cell(0, "*")
    if collapse:
        cells.append(base)
    min_size = 2 if collapse else 1

    def cell_for(m: int, verts: tuple[int, ...]) -> Cell:
        label = _vname(verts)
        return Cell(len(verts) - 1, label if copies == 1 else f"{label}@{m}")

    for m in range(1, copies + 1):
        for size in range(min_size, n + 2):
            for verts in itertools.combinations(range(n + 1), size):
                c = cell_for(m, verts)
                cells.append(c)
                vertices[c] = (m, verts)
                if size == 1:
                    continue
                fs = []
                for i in range(size):
                    sub = verts[:i] + verts[i + 1:]
                    fs.append(Simplex(base) if len(sub) < min_size else Simplex(cell_for(m, sub)))
                faces[c] = tuple(fs)
    return SimplicialSet(name, cells, faces, vertices, cone_vertex=n)


def delta(n: int) -> SimplicialSet:
    """The standard simplex Delta[n]."""
    return _simplex_models(n, 1, False, f"delta{n}")


def deltabar(n: int) -> SimplicialSet:
    """Delta[n] with its 0-skeleton collapsed to a point."""
    if n < 1:
        raise SimplicialError("deltabar needs n >= 1")
    return _simplex_models(n, 1, True, f"deltabar{n}")


def wedge(k: int, n: int) -> SimplicialSet:
    """k copies of deltabar(n) glued at the basepoint; summands are numbered 1..k."""
    if n < 1 or k < 1:
        raise SimplicialError("wedge needs k >= 1 and n >= 1")
    return _simplex_models(n, k, True, f"wedge{k}x{n}")


def sphere(n: int) -> SimplicialSet:
    """Delta[n] / boundary: a basepoint and one nondegenerate n-simplex."""
    if n < 1:
        raise SimplicialError("sphere needs n >= 1")
    base = Cell(0, "*")
    sigma = Cell(n, "sigma")
    collapsed = Simplex(base, tuple(range(n - 2, -1, -1)))
    return SimplicialSet(f"sphere{n}", [base, sigma], {sigma: (collapsed,) * (n + 1)})


_MODEL_CACHE: dict[str, SimplicialSet] = {}


def model(name: str) -> SimplicialSet:
    """Built-in model by name: ``delta3``, ``deltabar2``, ``sphere2``, ``wedge2x3`` (k copies x dim)."""
    if name in _MODEL_CACHE:
        return _MODEL_CACHE[name]
    s = name.replace(" ", "").lower()
    try:
        if s.startswith("deltabar"):
            X = deltabar(int(s[8:]))
        elif s.startswith("delta"):
            X = delta(int(s[5:]))
        elif s.startswith("sphere"):
            X = sphere(int(s[6:]))
        elif s.startswith("wedge"):
            k, n = s[5:].split("x")
            X = wedge(int(k), int(n))
        else:
            raise SimplicialError(f"unknown model {name!r}")
    except ValueError as err:
        if isinstance(err, SimplicialError):
            raise
        raise SimplicialError(f"cannot parse model name {name!r}") from None
    _MODEL_CACHE[name] = X
    return X


# maps ------------------------------------------------------------------

@dataclass
class SimplicialMap:
    """A simplicial map given by the images of the nondegenerate simplices."""
    source: SimplicialSet
    target: SimplicialSet
    images: dict[Cell, Simplex]
    _cache: dict[Simplex, Simplex] = field(default_factory=dict, repr=False)

    def __call__(self, x: Simplex) -> Simplex:
        hit = self._cache.get(x)
        if hit is None:
            y = self.images[x.base]
            hit = self.target.apply(Operator(x.degens, (), y.dim), y) if x.degens else y
            self._cache[x] = hit
        return hit

    def check(self) -> bool:
        """True iff the map commutes with all face operators."""
        for c in self.source.all_cells():
            for i in range(c.dim + 1 if c.dim else 0):
                if self(self.source.faces[c][i]) != self.target.face(self.images[c], i):
                    return False
        return True


def representing_map(source: SimplicialSet, target: SimplicialSet, images: dict[int, Simplex]) -> SimplicialMap:
    """Map from a deltabar/wedge model sending the top simplex of summand m to ``images[m]``.

    Summands absent from ``images`` are collapsed to the basepoint.
    """
    top = source.cone_vertex
    out: dict[Cell, Simplex] = {}
    for c in source.all_cells():
        if c not in source.vertices:
            out[c] = Simplex(target.basepoint)
            continue
        m, verts = source.vertices[c]
        x = images.get(m)
        if x is None:
            out[c] = target.base_degenerate(c.dim)
        else:
            if x.dim != top:
                raise SimplicialError(f"image {x} must have dimension {top}")
            out[c] = target.sub(x, verts)
    return SimplicialMap(source, target, out)


# file format -----------------------------------------------------------

def _parse_ref(text: str, dim: int, table: dict[tuple[int, str], Cell]) -> Simplex:
    tokens = text.split()
    if not tokens:
        raise SimplicialError("empty simplex reference")
    *ops, name = tokens
    degens = []
    for t in ops:
        if not (t.startswith("s") and t[1:].isdigit()):
            raise SimplicialError(f"bad degeneracy {t!r} in {text!r}")
        degens.append(int(t[1:]))
    bdim = dim - len(degens)
    if (bdim, name) not in table:
        raise SimplicialError(f"unknown simplex {name!r} of dimension {bdim}")
    return Simplex(table[(bdim, name)], tuple(degens))


def load_json(data: dict) -> SimplicialSet:
    """Build a simplicial set from the JSON file format (strictly validated)."""
    try:
        name = data["name"]
        blocks = {int(d): entries for d, entries in data["simplices"].items()}
    except (KeyError, TypeError, ValueError) as err:
        raise SimplicialError(f"malformed simplicial-set file: {err}") from None
    table: dict[tuple[int, str], Cell] = {}
    for d, entries in blocks.items():
        for e in entries:
            key = (d, e["id"])
            if key in table:
                raise SimplicialError(f"duplicate simplex {e['id']!r} in dimension {d}")
            table[key] = Cell(d, e["id"])
    faces = {}
    for d, entries in blocks.items():
        for e in entries:
            c = table[(d, e["id"])]
            if d == 0:
                if e.get("faces"):
                    raise SimplicialError(f"0-simplex {c.name} must not list faces")
                continue
            fs = e.get("faces")
            if not isinstance(fs, list) or len(fs) != d + 1:
                raise SimplicialError(f"simplex {c.name} needs {d + 1} faces")
            faces[c] = tuple(_parse_ref(f"{f.get('op', '')} {f['base']}", d - 1, table) for f in fs)
    return SimplicialSet(name, table.values(), faces)


def load_file(path: str | Path) -> SimplicialSet:
    with open(path, encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as err:
            raise SimplicialError(f"{path}: invalid JSON: {err}") from None
    return load_json(data)


def to_json(X: SimplicialSet) -> dict:
    simplices: dict[str, list] = {}
    for c in X.all_cells():
        entry: dict = {"id": c.name}
        if c.dim > 0:
            entry["faces"] = [{"op": " ".join(f"s{i}" for i in y.degens), "base": y.base.name}
                              for y in X.faces[c]]
        simplices.setdefault(str(c.dim), []).append(entry)
    return {"name": X.name, "simplices": simplices}


def resolve_model(name: str) -> SimplicialSet:
    """A built-in model name or a path to a JSON file."""
    if name.endswith(".json") or Path(name).is_file():
        return load_file(name)
    return model(name)
