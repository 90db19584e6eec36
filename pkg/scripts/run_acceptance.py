#!/usr/bin/env python3
"""Run the acceptance checks and print one line per criterion.

Writes a JSON report with --json PATH.  Exit status is 1 if anything fails.
"""

import argparse
import json
import sys

from kisslat.suite import SuiteConfig, run_suite


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--fast", action="store_true", help="skip the extended 32-dimensional check")
    ap.add_argument("--jobs", type=int, default=4)
    ap.add_argument("--json")
    args = ap.parse_args()
    results = run_suite(full=not args.fast, cfg=SuiteConfig(jobs=args.jobs))
    for r in results:
        print(f"{r.line()}  ({r.runtime_s:.2f}s)")
    if args.json:
        with open(args.json, "w") as f:
            json.dump([r.to_dict() for r in results], f, indent=2, sort_keys=True)
    return 0 if all(r.passed for r in results) else 1


if __name__ == "__main__":
    sys.exit(main())
