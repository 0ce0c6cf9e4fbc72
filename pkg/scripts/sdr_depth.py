"""Check dPhi + Phi d = phi psi - Id exhaustively on short words, one degree at a time.

Degree 3 is past the acceptance range and takes a few minutes, almost all of it
spent building the model homotopies on the wedges W_k(4).

    python scripts/sdr_depth.py --model sphere2 --degree 3 --length 3
"""

import argparse
import time

from cobarlab.engine import engine_for
from cobarlab.homotopy import Homotopy
from cobarlab.literals import print_chain
from cobarlab.simplicial import resolve_model


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--model", default="sphere2")
    parser.add_argument("--degree", type=int, default=2)
    parser.add_argument("--length", type=int, default=2)
    args = parser.parse_args()

    X = resolve_model(args.model)
    G = engine_for(X).G
    H = Homotopy(max_degree=args.degree)
    failures = 0
    for n in range(1, args.degree + 1):
        t0 = time.perf_counter()
        words = [w for w in G.words(n, args.length) if w.letters and not G.is_degenerate(w)]
        for w in words:
            r = H.residual(X, G.chain(w))
            if r:
                failures += 1
                print(f"  residual at {w}: {print_chain(r)}")
        print(f"degree {n}: {len(words)} words, {time.perf_counter() - t0:.1f}s")
    paths = sorted(set(H.path.values()))
    print(f"{len(H._models)} model homotopies via {', '.join(paths) or 'nothing'}; {failures} failures")
    raise SystemExit(1 if failures else 0)


if __name__ == "__main__":
    main()
