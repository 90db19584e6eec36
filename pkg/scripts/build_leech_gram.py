#!/usr/bin/env python3
"""Regenerate src/kisslat/data/leech.gram from the Golay-code generators.

Pass --check to compare against the shipped file instead of writing it.
"""

import argparse
import sys
from pathlib import Path

from kisslat.algebra.matrix import int_det
from kisslat.lattices.catalog import leech_gram_from_golay, leech_gram_shipped
from kisslat.lattices.io import format_gram

DEST = Path(__file__).resolve().parents[1] / "src" / "kisslat" / "data" / "leech.gram"


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--check", action="store_true")
    args = ap.parse_args()
    G = leech_gram_from_golay()
    det = int_det([list(r) for r in G])
    if det != 1 or min(G[i][i] for i in range(24)) != 4:
        print(f"unexpected Gram: det={det}", file=sys.stderr)
        return 1
    if args.check:
        same = G == leech_gram_shipped()
        print("shipped Gram matches" if same else "shipped Gram differs")
        return 0 if same else 1
    DEST.write_text(format_gram(G))
    print(f"wrote {DEST}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
