"""kisslat command line.

Exit codes: 0 success, 1 a check failed, 2 bad usage or unreadable input.
JSON on stdout is sorted and free of timings unless ``--timings`` is given,
so identical invocations print identical bytes.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any

from . import __version__
from .algebra.field import gf
from .algebra.polynomial import Polynomial
from .bounds import formulas as fm
from .bounds.report import REGISTRY, ag_rate_report, constant, m_scan
from .codes import (
    ChainError,
    LinearCode,
    NestedCodeChain,
    ag_code,
    chain_complete,
    check_chain,
    elliptic_y2_y_x3_data,
    extended_hamming_8,
    golay_code,
    light_vector_bound,
    parity_check_code,
    projective_line_data,
    reed_muller,
    reed_solomon,
    repetition_code,
    simplex_concat,
    simplex_inner,
)
from .codes.io import read_code, read_codes, weights_csv, write_chain, write_code
from .curves import (
    PreconditionError,
    densify_ladder,
    drinfeld_genus,
    elkies_points,
    gs_genus,
    gs_points,
    points_csv,
    x0m_invariants,
    x0m_raw,
)
from .lattices import (
    NAMES,
    ConstructionError,
    DyadicLattice,
    TLattice,
    catalog,
    construction_a,
    construction_d,
    construction_e_tlattice,
    format_lattice,
    format_tlattice,
    read_lattice,
    read_tlattice,
    shortest_vectors,
    theta_prefix,
    verify_t_axioms,
)


class UsageError(Exception):
    pass


class CheckFailed(Exception):
    pass


@dataclass
class RunManifest:
    command: list[str]
    parameters: dict[str, Any]
    input_hashes: dict[str, str]
    version: str
    precision: dict[str, Any]
    wall_clock_s: float = 0.0
    exit_code: int = 0
    extra: dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, indent=2)


def _sha256(path: str) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def _strip_timings(obj):
    if isinstance(obj, dict):
        return {k: _strip_timings(v) for k, v in obj.items() if k not in ("runtime_ms", "runtime_s")}
    if isinstance(obj, list):
        return [_strip_timings(v) for v in obj]
    return obj


def _emit(args, obj) -> None:
    if not getattr(args, "timings", False):
        obj = _strip_timings(obj)
    print(json.dumps(obj, sort_keys=True, indent=2))


def _out(args, text: str) -> None:
    if getattr(args, "output", None):
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)


def _ints(text: str | None) -> list[int] | None:
    if text is None:
        return None
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError as e:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from e


# -- code ------------------------------------------------------------------

def _code_recipe(args) -> LinearCode:
    r = args.recipe
    if r == "rs":
        return reed_solomon(args.q, args.a)
    if r == "ag-line":
        return ag_code(projective_line_data(args.q, args.a))
    if r == "ag-elliptic":
        return ag_code(elliptic_y2_y_x3_data(args.a))
    if r == "simplex":
        if args.outer:
            return simplex_concat(args.s, outer=read_code(args.outer))
        return simplex_inner(args.s)
    if r == "rm":
        return reed_muller(args.r, args.m)
    if r == "golay":
        return golay_code()
    if r == "hamming8":
        return extended_hamming_8()
    if r == "parity":
        return parity_check_code(gf(args.q), args.n)
    if r == "repetition":
        return repetition_code(gf(args.q), args.n)
    raise UsageError(f"unknown recipe {r}")


def cmd_code(args) -> int:
    if args.recipe == "weights":
        _out(args, weights_csv(read_code(args.file).weight_distribution))
        return 0
    if args.recipe == "verify-chain":
        codes = read_codes(args.file)
        rep = check_chain(codes, _ints(args.profile))
        if args.json:
            _emit(args, {"ok": rep.ok, "levels": rep.lines()})
        else:
            print("\n".join(rep.lines()))
            print("PASS" if rep.ok else "FAIL")
        return 0 if rep.ok else 1
    if args.recipe == "complete-chain":
        top = read_code(args.file)
        chain = chain_complete(top, _ints(args.profile))
        _out(args, write_chain(chain))
        return 0
    if args.recipe == "light":
        rep = light_vector_bound(read_code(args.file), args.g, args.a, args.bits)
        _emit(args, rep.to_dict())
        return 0 if rep.details["holds"] else 1
    code = _code_recipe(args)
    if args.weights:
        _out(args, weights_csv(code.weight_distribution))
    else:
        _out(args, write_code(code))
    return 0


# -- lattice ---------------------------------------------------------------

def _load_lattice(spec: str) -> DyadicLattice | TLattice:
    p = Path(spec)
    if p.exists():
        return read_tlattice(p) if p.suffix == ".tlat" else read_lattice(p)
    try:
        return catalog(spec)
    except KeyError as e:
        raise UsageError(f"{spec!r} is neither a file nor a named lattice ({', '.join(NAMES)})") from e


def _plain(lat) -> DyadicLattice:
    return lat.lattice if isinstance(lat, TLattice) else lat


def _kiss(lat, args) -> dict:
    r = shortest_vectors(_plain(lat), jobs=args.jobs)
    d = r.to_dict()
    d["dim"] = _plain(lat).dim
    d["det"] = str(_plain(lat).det)
    return d


def cmd_lattice(args) -> int:
    sub = args.sub
    if sub == "list":
        print("\n".join(NAMES))
        return 0
    if sub == "kiss":
        _emit(args, _kiss(_load_lattice(args.lattice), args))
        return 0
    if sub == "theta":
        th = theta_prefix(_plain(_load_lattice(args.lattice)), args.bound, args.jobs)
        _emit(args, {str(k): v for k, v in th.items()})
        return 0
    if sub == "verify-t":
        lat = _load_lattice(args.lattice)
        if not isinstance(lat, TLattice):
            raise UsageError("verify-t needs a .tlat file or a named T-lattice")
        rep = verify_t_axioms(lat)
        _emit(args, rep.to_dict())
        return 0 if rep.ok else 1
    if sub == "export":
        lat = _load_lattice(args.lattice)
        _out(args, format_tlattice(lat) if isinstance(lat, TLattice) else format_lattice(lat))
        return 0
    if sub == "construct-a":
        lat = construction_a(read_code(args.code))
    elif sub == "construct-d":
        codes = read_codes(args.chain)
        lat = construction_d(NestedCodeChain.build(codes, _ints(args.profile)))
    elif sub == "construct-e":
        base = _load_lattice(args.base)
        if not isinstance(base, TLattice):
            raise UsageError("the base of Construction E must be a T-lattice")
        lat = construction_e_tlattice(base, NestedCodeChain.build(read_codes(args.chain)), args.name or "")
    else:
        raise UsageError(sub)
    text = format_tlattice(lat) if isinstance(lat, TLattice) else format_lattice(lat)
    if args.output:
        Path(args.output).write_text(text)
    report = _kiss(lat, args)
    meta = _plain(lat).meta
    for k in ("m_bar", "K", "a"):
        if k in meta:
            report[k] = str(meta[k])
    if not args.output:
        sys.stdout.write(text)
        print(json.dumps(_strip_timings(report) if not args.timings else report, sort_keys=True), file=sys.stderr)
    else:
        _emit(args, report)
    return 0


# -- curve -----------------------------------------------------------------

def _factors(q: int, text: str):
    """'c0,c1,...^r; ...' with coefficients listed from the constant term up."""
    F = gf(q)
    out = []
    for part in text.split(";"):
        part = part.strip()
        if not part:
            continue
        poly, _, r = part.partition("^")
        out.append((Polynomial.parse(F, poly), int(r or 1)))
    return out


def cmd_curve(args) -> int:
    sub = args.sub
    if sub == "elkies":
        allp, ss = elkies_points(args.q, args.k)
        pts = ss if args.supersingular else allp
        if args.csv:
            _out(args, points_csv(pts))
        else:
            _emit(args, {"q": args.q, "k": args.k, "points": len(allp), "supersingular": len(ss),
                         "expected_supersingular": args.q**args.k})
        return 0
    if sub == "gs":
        pts = gs_points(args.q, args.n)
        if args.csv:
            _out(args, points_csv(pts))
        else:
            _emit(args, {"q": args.q, "n": args.n, "points": len(pts)})
        return 0
    if sub == "genus":
        rec = gs_genus(args.q, args.k) if args.family == "gs" else drinfeld_genus(args.q, args.k)
        _emit(args, rec.to_dict())
        return 0
    if sub == "x0m":
        fac = _factors(args.q, args.factors)
        if args.raw:
            eps, kap, g, pb = x0m_raw(args.q, [(P.degree, r) for P, r in fac])
            _emit(args, {"epsilon": eps, "kappa": kap, "genus": g, "point_bound": pb, "checked": False})
        else:
            _emit(args, x0m_invariants(args.q, fac).to_dict())
        return 0
    if sub == "densify":
        recs = densify_ladder(args.q, args.k_start, args.k_end)
        _emit(args, [r.to_dict() for r in recs])
        return 0
    raise UsageError(sub)


# -- bounds ----------------------------------------------------------------

def cmd_bounds(args) -> int:
    if args.list:
        print("\n".join(sorted(REGISTRY)))
        return 0
    if args.m_scan:
        _emit(args, [r.to_dict() for r in m_scan(range(2, 13), args.threshold, args.bits)])
        return 0
    if args.ag_rate is not None:
        _emit(args, ag_rate_report(args.ag_rate, args.bits).to_dict())
        return 0
    names = sorted(REGISTRY) if args.all else args.const
    if not names:
        raise UsageError("give --const NAME, --all, --list, --m-scan or --ag-rate Q")
    try:
        reps = [constant(n, args.bits) for n in names]
    except KeyError as e:
        raise UsageError(e.args[0]) from e
    _emit(args, [r.to_dict() for r in reps] if len(reps) > 1 else reps[0].to_dict())
    return 1 if any(r.passes is False for r in reps) else 0


# -- verify ----------------------------------------------------------------

def cmd_verify(args) -> int:
    from .suite import CRITERIA, SuiteConfig, run_criterion

    cfg = SuiteConfig(jobs=args.jobs, bits=args.bits)
    only = _ints(args.only)
    ids = [i for i, _, _, ext in CRITERIA if (args.suite == "full" or not ext) and (not only or i in only)]
    results = []
    for i in ids:
        r = run_criterion(i, cfg)
        print(r.line(), file=sys.stderr)
        results.append(r.to_dict())
    ok = all(r["passed"] for r in results)
    _emit(args, {"suite": args.suite, "passed": ok, "criteria": results})
    return 0 if ok else 1


# -- parser ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--jobs", type=int, default=1, help="worker threads for enumeration")
    common.add_argument("--bits", type=int, default=None, help="mpmath precision (default KF_PRECISION_BITS or 160)")
    common.add_argument("--manifest", help="write a run manifest JSON here")
    common.add_argument("--timings", action="store_true", help="include runtimes in JSON output")
    common.add_argument("-o", "--output", help="write the main output to this file")

    p = argparse.ArgumentParser(prog="kisslat", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    top = p.add_subparsers(dest="cmd", required=True)

    code = top.add_parser("code", help="build and inspect codes")
    cs = code.add_subparsers(dest="recipe", required=True)

    def recipe(name, help_, **params):
        sp = cs.add_parser(name, parents=[common], help=help_)
        for flag, kw in params.items():
            sp.add_argument(f"--{flag}", required=True, **kw)
        sp.add_argument("--weights", action="store_true", help="print the weight distribution as CSV")
        return sp

    I = {"type": int}
    recipe("rs", "Reed-Solomon code: polynomials of degree <= a on GF(q)", q=I, a=I)
    recipe("ag-line", "evaluation code on the projective line", q=I, a=I)
    recipe("ag-elliptic", "evaluation code on y^2+y=x^3 over GF(4)", a=I)
    sx = recipe("simplex", "one-weight inner code of length 2^{2s}", s=I)
    sx.add_argument("--outer", help="outer code over GF(2^{2s}) to concatenate")
    recipe("rm", "Reed-Muller RM(r, m)", r=I, m=I)
    recipe("golay", "extended binary Golay code")
    recipe("hamming8", "extended Hamming [8,4,4]")
    recipe("parity", "[n, n-1, 2] parity-check code", q=I, n=I)
    recipe("repetition", "[n, 1, n] repetition code", q=I, n=I)
    w = cs.add_parser("weights", parents=[common], help="weight distribution of a code file")
    w.add_argument("file")
    vc = cs.add_parser("verify-chain", parents=[common], help="check inclusions and distance floors")
    vc.add_argument("file")
    vc.add_argument("--profile", help="distance floors d_0,...,d_a")
    vc.add_argument("--json", action="store_true")
    cc = cs.add_parser("complete-chain", parents=[common], help="greedy chain under a code file")
    cc.add_argument("file")
    cc.add_argument("--profile", required=True)
    lv = cs.add_parser("light", parents=[common], help="minimum-weight count against the averaging bound")
    lv.add_argument("file")
    lv.add_argument("--g", type=int, required=True)
    lv.add_argument("--a", type=int, required=True)

    lat = top.add_parser("lattice", help="construct, enumerate and verify lattices")
    ls = lat.add_subparsers(dest="sub", required=True)
    ls.add_parser("list", parents=[common], help="named lattices")
    for name, help_ in [("kiss", "minimum norm and kissing number"), ("verify-t", "check the T-lattice axioms"),
                        ("export", "write a named lattice to a file")]:
        sp = ls.add_parser(name, parents=[common], help=help_)
        sp.add_argument("lattice", help="file or name")
    th = ls.add_parser("theta", parents=[common], help="vector counts by norm up to a bound")
    th.add_argument("lattice")
    th.add_argument("--bound", type=str, required=True)
    ca = ls.add_parser("construct-a", parents=[common], help="Construction A from a binary code file")
    ca.add_argument("code")
    cd = ls.add_parser("construct-d", parents=[common], help="Construction D from a binary chain file")
    cd.add_argument("chain")
    cd.add_argument("--profile")
    ce = ls.add_parser("construct-e", parents=[common], help="Construction E on a T-lattice base")
    ce.add_argument("--base", required=True)
    ce.add_argument("--chain", required=True)
    ce.add_argument("--name")

    cur = top.add_parser("curve", help="tower points and genus formulas")
    us = cur.add_subparsers(dest="sub", required=True)
    el = us.add_parser("elkies", parents=[common])
    el.add_argument("--q", type=int, required=True)
    el.add_argument("--k", type=int, required=True)
    el.add_argument("--supersingular", action="store_true")
    el.add_argument("--csv", action="store_true")
    g = us.add_parser("gs", parents=[common])
    g.add_argument("--q", type=int, required=True)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--csv", action="store_true")
    gn = us.add_parser("genus", parents=[common])
    gn.add_argument("family", choices=["gs", "drinfeld"])
    gn.add_argument("--q", type=int, required=True)
    gn.add_argument("--k", type=int, required=True)
    x0 = us.add_parser("x0m", parents=[common], help="invariants of X_0(M)")
    x0.add_argument("--q", type=int, required=True)
    x0.add_argument("--factors", required=True, help="'c0,c1,...^r;...' coefficients from the constant term")
    x0.add_argument("--raw", action="store_true", help="skip the admissibility checks")
    dn = us.add_parser("densify", parents=[common])
    dn.add_argument("--q", type=int, required=True)
    dn.add_argument("--k-start", type=int, required=True)
    dn.add_argument("--k-end", type=int, required=True)

    b = top.add_parser("bounds", parents=[common], help="evaluate named bound constants")
    b.add_argument("--const", action="append", help="constant name (repeatable)")
    b.add_argument("--all", action="store_true")
    b.add_argument("--list", action="store_true")
    b.add_argument("--m-scan", action="store_true")
    b.add_argument("--threshold", type=float, default=0.03)
    b.add_argument("--ag-rate", type=int)

    v = top.add_parser("verify", parents=[common], help="run the acceptance checks")
    v.add_argument("--suite", choices=["fast", "full"], default="fast")
    v.add_argument("--only", help="comma-separated criterion ids")
    return p


HANDLERS = {"code": cmd_code, "lattice": cmd_lattice, "curve": cmd_curve, "bounds": cmd_bounds, "verify": cmd_verify}


def _inputs(args) -> list[str]:
    keys = ("file", "code", "chain", "outer", "base", "lattice")
    return [getattr(args, k) for k in keys if isinstance(getattr(args, k, None), str) and Path(getattr(args, k)).is_file()]


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    t0 = time.perf_counter()
    try:
        code = HANDLERS[args.cmd](args)
    except (UsageError, FileNotFoundError, KeyError) as e:
        msg = e.args[0] if isinstance(e, KeyError) and e.args else e
        print(f"kisslat: error: {msg}", file=sys.stderr)
        code = 2
    except (ChainError, ConstructionError, PreconditionError, CheckFailed) as e:
        print(f"kisslat: check failed: {e}", file=sys.stderr)
        code = 1
    except ValueError as e:
        print(f"kisslat: error: {e}", file=sys.stderr)
        code = 2
    if args.manifest:
        params = {k: v for k, v in vars(args).items() if k not in ("manifest",)}
        m = RunManifest(
            command=argv,
            parameters=params,
            input_hashes={p: _sha256(p) for p in _inputs(args)},
            version=__version__,
            precision={"bits": fm.precision_bits(args.bits), "env": os.environ.get("KF_PRECISION_BITS")},
            wall_clock_s=round(time.perf_counter() - t0, 3),
            exit_code=code,
        )
        Path(args.manifest).write_text(m.to_json() + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
