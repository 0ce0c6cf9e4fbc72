"""``cobarlab`` command line.

Exit codes: 0 when everything checks out, 1 when an identity fails, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys

from .chains import Chain
from .engine import engine_for
from .homology import cobar_homology
from .homotopy import DepthError, Homotopy
from .literals import LiteralError, parse_cobar, parse_word, print_chain
from .simplicial import SimplicialError, resolve_model, to_json
from .verify import SUITES, VerifyConfig, run_suite

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--model", default="sphere2",
                   help="built-in model (sphere2, delta3, deltabar2, wedge2x3, ...) or a JSON file")
    p.add_argument("--long", action="store_true", help="one term per line")
    p.add_argument("--format", choices=("text", "json"), default="text")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cobarlab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    common = [_common()]

    sub.add_parser("model", parents=common, help="validate a model and print its cells")

    p = sub.add_parser("phi", parents=common, help="apply phi to a cobar word")
    p.add_argument("word", help='cobar word, e.g. "[s-1 sigma]" or "[inv 01 | s-1 012]"')

    p = sub.add_parser("psi", parents=common, help="apply psi to a group word")
    p.add_argument("word", help='group word, e.g. "t(sigma)^-1 * t(s1 sigma)"')
    p.add_argument("--degree", type=int, default=None, help="needed only for the identity word")

    p = sub.add_parser("homotopy", parents=common, help="apply Phi and report the homotopy residual")
    p.add_argument("--word", required=True)
    p.add_argument("--degree", type=int, default=None)
    p.add_argument("--max-degree", type=int, default=2)

    p = sub.add_parser("homology", parents=common, help="homology of the cobar construction (1-reduced X)")
    p.add_argument("--max-degree", type=int, default=4)

    p = sub.add_parser("verify", parents=common, help="run verification suites")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--max-degree", type=int, default=3)
    p.add_argument("--max-word-length", type=int, default=3)
    p.add_argument("--sdr-degree", type=int, default=2)
    p.add_argument("--verbose", action="store_true", help="list passing checks as well")
    return parser


def _emit(args, text: str, payload: dict) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True) if args.format == "json" else text)


def _chain_payload(c: Chain) -> dict:
    return {"degree": c.degree, "chain": print_chain(c)}


def cmd_model(args, X) -> int:
    lines = [f"{X.name}: dimension {X.dimension}, "
             f"{'1-reduced' if X.is_one_reduced else '0-reduced' if X.is_zero_reduced else 'not reduced'}"]
    for d in range(X.dimension + 1):
        lines.append(f"  dim {d}: " + " ".join(c.name for c in X.cells(d)))
    _emit(args, "\n".join(lines), to_json(X))
    return EXIT_OK


def cmd_phi(args, X) -> int:
    E = engine_for(X)
    c = E.phi(parse_cobar(E.cobar, args.word))
    _emit(args, print_chain(c, args.long), _chain_payload(c))
    return EXIT_OK


def cmd_psi(args, X) -> int:
    E = engine_for(X)
    w = parse_word(X, args.word, args.degree)
    c = E.psi(E.G.chain(w))
    _emit(args, print_chain(c, args.long), _chain_payload(c))
    return EXIT_OK


def cmd_homotopy(args, X) -> int:
    E = engine_for(X)
    w = parse_word(X, args.word, args.degree)
    H = Homotopy(max_degree=args.max_degree)
    c = E.G.chain(w)
    value = H.big_phi(X, c)
    residual = H.residual(X, c)
    text = f"Phi({w}) =\n{print_chain(value, True)}\nresidual: {print_chain(residual)}"
    _emit(args, text, {"phi": _chain_payload(value), "residual": print_chain(residual),
                       "paths": {f"{k[0]}:{k[1]}": v for k, v in sorted(H.path.items())}})
    return EXIT_OK if not residual else EXIT_FAIL


def cmd_homology(args, X) -> int:
    groups = cobar_homology(X, args.max_degree)
    text = "\n".join(f"H_{h.degree} = {h}" for h in groups)
    _emit(args, text, {"model": X.name, "groups": [
        {"degree": h.degree, "betti": h.betti, "torsion": h.torsion} for h in groups]})
    return EXIT_OK


def cmd_verify(args, X) -> int:
    cfg = VerifyConfig(max_degree=args.max_degree, max_word_length=args.max_word_length,
                       samples=args.samples, seed=args.seed, sdr_degree=args.sdr_degree)
    names = SUITES if args.suite == "all" else (args.suite,)
    reports = [run_suite(name, X, cfg) for name in names]
    if args.format == "json":
        print(json.dumps([r.to_json() for r in reports], indent=2, sort_keys=True))
    else:
        print("\n".join(r.to_text(args.verbose) for r in reports))
    return EXIT_OK if all(r.ok for r in reports) else EXIT_FAIL


COMMANDS = {"model": cmd_model, "phi": cmd_phi, "psi": cmd_psi, "homotopy": cmd_homotopy,
            "homology": cmd_homology, "verify": cmd_verify}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        X = resolve_model(args.model)
        return COMMANDS[args.command](args, X)
    except (LiteralError, SimplicialError, DepthError, OSError, json.JSONDecodeError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
