"""Text formats for codes, chains and weight distributions.

Code file::

    q n k
    <k lines of n symbols>

Symbols are field-element indices in the polynomial-basis enumeration of the
default GF(q).  A chain file is ``chain <count>`` followed by that many code
blocks, widest code first.
"""

from __future__ import annotations

import io
from pathlib import Path
from typing import Sequence, TextIO

from ..algebra.field import gf
from .chain import NestedCodeChain
from .linear import LinearCode


def _lines(src: TextIO):
    for line in src:
        line = line.split("#", 1)[0].strip()
        if line:
            yield line


def _read_code_block(it, name: str = "") -> LinearCode:
    q, n, k = (int(t) for t in next(it).split())
    F = gf(q)
    rows = []
    for _ in range(k):
        row = tuple(int(t) for t in next(it).split())
        if len(row) != n:
            raise ValueError(f"expected {n} symbols, got {len(row)}")
        if any(not 0 <= x < q for x in row):
            raise ValueError(f"symbol out of range for GF({q})")
        rows.append(row)
    return LinearCode.from_rows(F, rows, n, name) if rows else LinearCode.zero(F, n)


def _write_code_block(code: LinearCode, out: TextIO):
    out.write(f"{code.q} {code.n} {code.k}\n")
    for r in code.generator:
        out.write(" ".join(str(x) for x in r) + "\n")


def read_code(path) -> LinearCode:
    with open(path) as f:
        return _read_code_block(_lines(f), Path(path).stem)


def write_code(code: LinearCode, path=None) -> str:
    buf = io.StringIO()
    _write_code_block(code, buf)
    if path is not None:
        Path(path).write_text(buf.getvalue())
    return buf.getvalue()


def read_codes(path) -> list[LinearCode]:
    """The codes of a chain file, unchecked."""
    with open(path) as f:
        it = _lines(f)
        head = next(it).split()
        if head[0] != "chain":
            raise ValueError("chain file must start with 'chain <count>'")
        return [_read_code_block(it) for _ in range(int(head[1]))]


def read_chain(path, profile: Sequence[int] | None = None) -> NestedCodeChain:
    return NestedCodeChain.build(read_codes(path), profile)


def write_chain(chain: NestedCodeChain, path=None) -> str:
    buf = io.StringIO()
    buf.write(f"chain {len(chain.codes)}\n")
    for c in chain.codes:
        _write_code_block(c, buf)
    if path is not None:
        Path(path).write_text(buf.getvalue())
    return buf.getvalue()


def weights_csv(dist: Sequence[int]) -> str:
    return "w,count\n" + "".join(f"{w},{c}\n" for w, c in enumerate(dist))
