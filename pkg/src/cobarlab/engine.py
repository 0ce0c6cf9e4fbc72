"""One bundle of loop group, cobar construction, phi and psi per simplicial set."""

from __future__ import annotations

from weakref import WeakKeyDictionary

from .chains import Chain
from .cobar import Cobar
from .loop_group import LoopGroup
from .retraction import Retraction
from .simplicial import SimplicialSet
from .szczarba import Szczarba


class Engine:
    def __init__(self, X: SimplicialSet):
        self.X = X
        self.G = LoopGroup(X)
        self.cobar = Cobar(X)
        self.szczarba = Szczarba(self.G, self.cobar)
        self.retraction = Retraction(self.G, self.cobar)

    def phi(self, e: Chain) -> Chain:
        return self.szczarba.phi(e)

    def psi(self, c: Chain) -> Chain:
        return self.retraction.psi(c)


_ENGINES: "WeakKeyDictionary[SimplicialSet, Engine]" = WeakKeyDictionary()


def engine_for(X: SimplicialSet) -> Engine:
    E = _ENGINES.get(X)
    if E is None:
        E = _ENGINES[X] = Engine(X)
    return E
