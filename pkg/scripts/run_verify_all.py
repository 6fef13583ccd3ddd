#!/usr/bin/env python3
"""Run every property suite on its default family and save the JSON reports.

Usage:
    python3 scripts/run_verify_all.py [--samples N] [--seed S] [--out FILE]
"""

import argparse
import sys

from portho.cli import main as cli_main


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--samples", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", default="verify_all.json")
    args = ap.parse_args()
    return cli_main(
        [
            "verify",
            "all",
            "--samples",
            str(args.samples),
            "--seed",
            str(args.seed),
            "--out",
            args.out,
        ]
    )


if __name__ == "__main__":
    sys.exit(main())
