"""Regenerate tests/golden/phi_<model>.txt; the test suite compares these byte for byte."""

import argparse
from pathlib import Path

from cobarlab.literals import phi_table
from cobarlab.simplicial import model

GOLDEN_MODELS = ("sphere2", "sphere3", "deltabar3")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", type=Path, default=Path(__file__).resolve().parents[1] / "tests" / "golden")
    args = parser.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    for name in GOLDEN_MODELS:
        path = args.out / f"phi_{name}.txt"
        path.write_text(phi_table(model(name)), encoding="utf-8")
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
