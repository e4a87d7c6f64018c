"""Run check suites and write the JSON report to disk.

    python scripts/run_verification.py --suite all --seed 7 --out results/verification.json
"""
from __future__ import annotations

import argparse
import pathlib
import sys

from harmonica.checks import Config, suites
from harmonica.report import all_passed, run_suite, to_human, to_json


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--suite", action="append", choices=sorted(suites()))
    p.add_argument("--trunc", type=int, default=Config.truncation)
    p.add_argument("--seed", type=int, default=Config.seed)
    p.add_argument("--samples", type=int, default=Config.samples)
    p.add_argument("--out", type=pathlib.Path, default=pathlib.Path("results/verification.json"))
    args = p.parse_args()

    rep = run_suite(args.suite or ["all"], Config(args.trunc, args.seed, args.samples))
    args.out.parent.mkdir(parents=True, exist_ok=True)
    args.out.write_text(to_json(rep) + "\n")
    print(to_human(rep))
    print(f"report written to {args.out}")
    return 0 if all_passed(rep) else 1


if __name__ == "__main__":
    sys.exit(main())
