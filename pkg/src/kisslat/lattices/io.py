"""Plain-text lattice formats.

Basis file: header ``m e``, then m rows of m integers (numerators at scale
2^-e).  Gram file: header ``gram m``, then m rows of m integers.

T-lattice file (``.tlat``)::

    tlat m nu
    basis e
    <m rows>
    T e
    <m rows>

optionally followed by ``vr e`` and b rows fixing the chosen minimal vectors.
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path

from ..algebra.dyadic import DyadicMatrix
from .lattice import DyadicLattice
from .tlattice import TLattice


def _clean(text: str) -> list[list[str]]:
    out = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            out.append(line.split())
    return out


def _rows(lines, m: int) -> tuple[tuple[int, ...], ...]:
    rows = tuple(tuple(int(t) for t in lines.pop(0)) for _ in range(m))
    if any(len(r) != m for r in rows):
        raise ValueError(f"expected {m} integers per row")
    return rows


def parse_gram(text: str) -> tuple[tuple[int, ...], ...]:
    lines = _clean(text)
    head = lines.pop(0)
    if head[0] != "gram":
        raise ValueError("Gram file must start with 'gram m'")
    return _rows(lines, int(head[1]))


def parse_lattice(text: str, name: str = "") -> DyadicLattice:
    lines = _clean(text)
    head = lines[0]
    if head[0] == "gram":
        return DyadicLattice.from_gram(parse_gram(text), name=name)
    lines.pop(0)
    m, e = int(head[0]), int(head[1])
    return DyadicLattice(basis=DyadicMatrix(_rows(lines, m), e), name=name)


def read_lattice(path) -> DyadicLattice:
    return parse_lattice(Path(path).read_text(), Path(path).stem)


def format_lattice(lat: DyadicLattice) -> str:
    if lat.basis is None:
        return format_gram(lat.gram_num)
    B = lat.basis
    lines = [f"{lat.dim} {B.exp}"] + [" ".join(str(x) for x in r) for r in B.num]
    return "\n".join(lines) + "\n"


def format_gram(G) -> str:
    return "\n".join([f"gram {len(G)}"] + [" ".join(str(x) for x in r) for r in G]) + "\n"


def write_lattice(lat: DyadicLattice, path) -> None:
    Path(path).write_text(format_lattice(lat))


def parse_tlattice(text: str, name: str = "") -> TLattice:
    lines = _clean(text)
    head = lines.pop(0)
    if head[0] != "tlat":
        raise ValueError("T-lattice file must start with 'tlat m nu'")
    m, nu = int(head[1]), int(head[2])
    blocks = {}
    while lines:
        tag, e = lines.pop(0)
        count = m if tag in ("basis", "T") else None
        if tag == "vr":
            count = m // nu
        if count is None:
            raise ValueError(f"unknown block {tag!r}")
        rows = tuple(tuple(int(t) for t in lines.pop(0)) for _ in range(count))
        blocks[tag] = DyadicMatrix(rows, int(e))
    lat = DyadicLattice(basis=blocks["basis"], name=name)
    vr = None
    if "vr" in blocks:
        vr = [tuple(r) for r in blocks["vr"].to_fractions()]
    return TLattice(lat, blocks["T"], nu, name=name, vr=vr)


def read_tlattice(path) -> TLattice:
    return parse_tlattice(Path(path).read_text(), Path(path).stem)


def format_tlattice(t: TLattice, with_vr: bool = True) -> str:
    def block(tag, M: DyadicMatrix):
        return [f"{tag} {M.exp}"] + [" ".join(str(x) for x in r) for r in M.num]

    lines = [f"tlat {t.m} {t.nu}"] + block("basis", t.lattice.basis) + block("T", t.T)
    if with_vr and t.vr:
        lines += block("vr", DyadicMatrix.of([[Fraction(x) for x in v] for v in t.vr]))
    return "\n".join(lines) + "\n"
