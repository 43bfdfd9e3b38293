"""Text formats: one-matroid files and revlex catalog lines.

Matroid file::

    n=4 rank=2
    bases:
    1 2
    1 3
    ...

Catalog line: ``r=<rank> n=<size> <string>`` where the string has one
character per r-subset of 1..n in reverse-lexicographic order (``*`` for a
basis, ``0`` otherwise). In that order A precedes B iff the largest element
of their symmetric difference lies in B, which is increasing bitmask order.
"""

from __future__ import annotations

import re
from itertools import combinations
from math import comb
from pathlib import Path
from typing import Iterator

from .bitset import MAX_ELEMENTS, elements, full_mask, to_mask
from .errors import ExchangeAxiomViolated, MatroidError, ParseError
from .matroid import Matroid

_HEADER = re.compile(r"n=(\d+) rank=(\d+)")
_CATALOG = re.compile(r"r=(\d+) n=(\d+) ([*0]*)")


def to_text(M: Matroid) -> str:
    """Serialize with labels compressed to 1..n (relative order kept)."""
    N = M.normalized()
    lines = [f"n={N.n} rank={N.rank}", "bases:"]
    lines += [" ".join(map(str, elements(b))) for b in N.bases]
    return "\n".join(lines) + "\n"


def parse_matroid(text: str) -> Matroid:
    lines = [line.rstrip() for line in text.splitlines()]
    if len(lines) < 2:
        raise ParseError("expected a header line and a 'bases:' line", 1)
    head = _HEADER.fullmatch(lines[0])
    if not head:
        raise ParseError(f"bad header {lines[0]!r}, expected 'n=<int> rank=<int>'", 1)
    n, rank = int(head[1]), int(head[2])
    if not 1 <= n <= MAX_ELEMENTS:
        raise ParseError(f"n={n} outside 1..{MAX_ELEMENTS}", 1)
    if lines[1] != "bases:":
        raise ParseError(f"expected 'bases:', got {lines[1]!r}", 2)
    body = lines[2:]
    while body and not body[-1]:
        body.pop()
    if rank == 0:
        # The empty basis is written as an empty line (or omitted).
        if body:
            raise ParseError("a rank-0 matroid has exactly one, empty, basis", 3)
        body = [""]
    seen = set()
    for lineno, line in enumerate(body, start=3):
        try:
            members = [int(tok) for tok in line.split()]
        except ValueError:
            raise ParseError(f"non-integer element in {line!r}", lineno) from None
        if members != sorted(set(members)):
            raise ParseError(f"elements not strictly ascending in {line!r}", lineno)
        if len(members) != rank:
            raise ParseError(f"basis {line!r} does not have {rank} elements", lineno)
        if members and not (1 <= members[0] and members[-1] <= n):
            raise ParseError(f"element outside 1..{n} in {line!r}", lineno)
        mask = to_mask(members)
        if mask in seen:
            raise ParseError(f"duplicate basis {line!r}", lineno)
        seen.add(mask)
    if not seen:
        raise ParseError("no bases listed", 3)
    return Matroid(full_mask(n), seen)


def read_matroid(path) -> Matroid:
    return parse_matroid(Path(path).read_text())


def write_matroid(M: Matroid, path) -> None:
    Path(path).write_text(to_text(M))


def revlex_subsets(n: int, r: int) -> list:
    """All r-subsets of 1..n as bitmasks, in reverse-lexicographic order."""
    return sorted(to_mask(c) for c in combinations(range(1, n + 1), r))


def to_revlex(M: Matroid) -> str:
    N = M.normalized()
    bases = N._basis_set
    chars = "".join("*" if s in bases else "0" for s in revlex_subsets(N.n, N.rank))
    return f"r={N.rank} n={N.n} {chars}"


def parse_revlex(line: str, lineno: int | None = None) -> Matroid:
    m = _CATALOG.fullmatch(line.strip())
    if not m:
        raise ParseError(f"bad catalog line {line.strip()!r}", lineno)
    r, n, chars = int(m[1]), int(m[2]), m[3]
    if not 1 <= n <= MAX_ELEMENTS or r > n:
        raise ParseError(f"invalid sizes r={r} n={n}", lineno)
    if len(chars) != comb(n, r):
        raise ParseError(f"string length {len(chars)} != C({n},{r}) = {comb(n, r)}", lineno)
    family = [s for s, c in zip(revlex_subsets(n, r), chars) if c == "*"]
    if not family:
        raise ParseError("no bases in catalog string", lineno)
    try:
        return Matroid(full_mask(n), family)
    except ExchangeAxiomViolated as exc:
        prefix = f"line {lineno}: " if lineno is not None else ""
        raise ExchangeAxiomViolated(prefix + str(exc), exc.witness) from None
    except MatroidError as exc:
        raise ParseError(str(exc), lineno) from None


def iter_catalog(path) -> Iterator[Matroid]:
    with open(path) as fh:
        for lineno, line in enumerate(fh, start=1):
            if line.strip() and not line.lstrip().startswith("#"):
                yield parse_revlex(line, lineno)
