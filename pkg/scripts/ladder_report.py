#!/usr/bin/env python3
"""Table of the named lattices: dimension, minimum norm, kissing number,
center density squared."""

import argparse

from kisslat.lattices import NAMES, TLattice, catalog, shortest_vectors


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--jobs", type=int, default=4)
    ap.add_argument("names", nargs="*", default=[n for n in NAMES if n not in ("L32bar", "Leech")])
    args = ap.parse_args()
    print(f"{'name':10} {'dim':>4} {'min':>5} {'kissing':>9}  density^2")
    for name in args.names:
        lat = catalog(name)
        lat = lat.lattice if isinstance(lat, TLattice) else lat
        r = shortest_vectors(lat, jobs=args.jobs)
        print(f"{name:10} {lat.dim:>4} {str(r.min_norm):>5} {r.count:>9}  {lat.center_density_squared(r.min_norm)}")


if __name__ == "__main__":
    main()
