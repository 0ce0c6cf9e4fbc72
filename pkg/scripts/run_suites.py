"""Run every verification suite on a list of models and write a JSON report.

    python scripts/run_suites.py --models sphere2 deltabar3 --samples 50 --out reports/suites.json
"""

import argparse
import json
from dataclasses import asdict
from pathlib import Path

from cobarlab.simplicial import resolve_model
from cobarlab.verify import SUITES, VerifyConfig, run_suite

MODEL_FREE = {"contraction", "homology"}


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--models", nargs="+", default=["sphere2", "sphere3", "deltabar2", "deltabar3"])
    parser.add_argument("--suites", nargs="+", choices=SUITES, default=list(SUITES))
    parser.add_argument("--samples", type=int, default=100)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--max-degree", type=int, default=3)
    parser.add_argument("--sdr-degree", type=int, default=2)
    parser.add_argument("--out", type=Path, default=None)
    args = parser.parse_args()

    cfg = VerifyConfig(samples=args.samples, seed=args.seed, max_degree=args.max_degree,
                       sdr_degree=args.sdr_degree)
    reports = []
    for suite in args.suites:
        targets = [None] if suite in MODEL_FREE else [resolve_model(m) for m in args.models]
        for X in targets:
            r = run_suite(suite, X, cfg)
            reports.append(r)
            print(f"{suite:12s} {r.model:10s} {r.passed:6d}/{len(r.checks):<6d} "
                  f"{'ok' if r.ok else 'FAILED'}  {r.seconds:6.2f}s")
    if args.out:
        args.out.parent.mkdir(parents=True, exist_ok=True)
        args.out.write_text(json.dumps({"config": asdict(cfg), "reports": [r.to_json() for r in reports]},
                                       indent=2, sort_keys=True))
        print(f"wrote {args.out}")
    raise SystemExit(0 if all(r.ok for r in reports) else 1)


if __name__ == "__main__":
    main()
