"""Counting (k, l)-uniform matroids on [n].

For n <= 6 every labeled matroid is enumerated directly. Larger n needs a
catalog file of isomorphism-class representatives in revlex format (none
is bundled); labeled counts are then recovered as n!/|Aut| per class.
The tables are finite-n data only.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from math import factorial
from pathlib import Path
from typing import Iterable, Iterator

import numpy as np

from .bitset import elements, full_mask
from .errors import CrossCheckFailure, SourceUnavailable, UniverseTooLargeForBruteForce
from .formats import iter_catalog, revlex_subsets, to_revlex
from .isominor import automorphism_count
from .matroid import Matroid
from .uniformity import is_kl_uniform_flats, is_kl_uniform_tutte

BRUTE_FORCE_MAX = 6
SOURCES = ("brute_force", "catalog")


@dataclass(frozen=True)
class CensusRecord:
    n: int
    k: int
    l: int
    labeled_count: int
    unlabeled_count: int
    source: str

    def to_line(self) -> str:
        return "\t".join(
            map(str, (self.n, self.k, self.l, self.labeled_count, self.unlabeled_count, self.source))
        )

    @classmethod
    def from_line(cls, line: str) -> CensusRecord:
        n, k, l, lab, unl, source = line.rstrip("\n").split("\t")
        return cls(int(n), int(k), int(l), int(lab), int(unl), source)


def _valid_families(n: int, r: int):
    """Bitmask codes (over the revlex r-subsets) of all basis families on [n].

    Family ``F`` fails exchange iff for some (r-1)-set S inside a member of
    F, the set Y = {y : S + y in F} misses some member of F. That test is
    evaluated for every candidate family at once with boolean arrays.
    """
    cands = revlex_subsets(n, r)
    m = len(cands)
    codes = np.arange(1, 1 << m, dtype=np.int64)
    if r == 0:
        return cands, codes
    index = {c: i for i, c in enumerate(cands)}
    member = [((codes >> i) & 1).astype(bool) for i in range(m)]
    bad = np.zeros(codes.shape, dtype=bool)
    full = full_mask(n)
    for s in revlex_subsets(n, r - 1):
        above = [index[s | (1 << (e - 1))] for e in elements(full & ~s)]
        s_used = np.logical_or.reduce([member[i] for i in above])
        for j, c in enumerate(cands):
            if c & s == s:
                continue
            meets = np.logical_or.reduce(
                [member[index[s | (1 << (y - 1))]] for y in elements(c & ~s)]
            )
            bad |= s_used & member[j] & ~meets
    return cands, codes[~bad]


def enumerate_labeled(n: int) -> Iterator[Matroid]:
    """Every matroid on [n] once, ordered by rank and then by family code."""
    if n > BRUTE_FORCE_MAX:
        raise UniverseTooLargeForBruteForce(f"brute force is capped at n={BRUTE_FORCE_MAX}")
    if n < 1:
        raise ValueError("n must be at least 1")
    ground = full_mask(n)
    for r in range(n + 1):
        cands, codes = _valid_families(n, r)
        for code in codes.tolist():
            family = [c for i, c in enumerate(cands) if code >> i & 1]
            yield Matroid._trusted(ground, family)


@lru_cache(maxsize=None)
def labeled_matroids(n: int) -> tuple:
    return tuple(enumerate_labeled(n))


def _perm_tables(n: int) -> list:
    tables = []
    for p in permutations(range(n)):
        table = [0] * (1 << n)
        for mask in range(1, 1 << n):
            low = mask & -mask
            table[mask] = table[mask ^ low] | (1 << p[low.bit_length() - 1])
        tables.append(table)
    return tables


@lru_cache(maxsize=None)
def iso_classes(n: int) -> tuple:
    """``(representative, orbit size)`` per isomorphism class on [n].

    The representative is the first class member in enumeration order.
    """
    tables = _perm_tables(n)
    seen = set()
    out = []
    for M in labeled_matroids(n):
        if M.bases in seen:
            continue
        orbit = {tuple(sorted(t[b] for b in M.bases)) for t in tables}
        seen |= orbit
        out.append((M, len(orbit)))
    return tuple(out)


def ingest_catalog(path) -> Iterator[Matroid]:
    """One validated representative per catalog line."""
    return iter_catalog(path)


def catalog_classes(path, n: int) -> list:
    """``(representative, n!/|Aut|)`` for the catalog entries on n elements."""
    return [(M, factorial(n) // automorphism_count(M)) for M in ingest_catalog(path) if M.n == n]


def write_catalog(matroids: Iterable[Matroid], path) -> None:
    Path(path).write_text("".join(to_revlex(M) + "\n" for M in matroids))


def count_uniform(
    n: int,
    k: int,
    l: int,
    source: str = "brute_force",
    catalog=None,
    recheck_fraction: float = 0.01,
    seed: int = 0,
) -> CensusRecord:
    """Labeled and unlabeled counts of (k, l)-uniform matroids on [n]."""
    if source == "brute_force":
        if n > BRUTE_FORCE_MAX:
            raise SourceUnavailable(f"no brute-force census above n={BRUTE_FORCE_MAX}")
        everything = labeled_matroids(n)
        labeled = sum(1 for M in everything if is_kl_uniform_tutte(M, k, l))
        classes = iso_classes(n)
        unlabeled = sum(1 for M, _ in classes if is_kl_uniform_tutte(M, k, l))
        if sum(size for M, size in classes if is_kl_uniform_tutte(M, k, l)) != labeled:
            raise CrossCheckFailure(f"orbit sizes disagree with the labeled count at n={n}")
        rng = random.Random(f"{seed}:{n}:{k}:{l}")
        sample = rng.sample(everything, max(1, round(recheck_fraction * len(everything))))
        for M in sample:
            if is_kl_uniform_flats(M, k, l) != is_kl_uniform_tutte(M, k, l):
                raise CrossCheckFailure(f"flats and Tutte tests disagree on {M!r}")
    elif source == "catalog":
        if catalog is None:
            raise SourceUnavailable(f"no catalog given for n={n}")
        classes = _catalog_cache(str(catalog), n)
        if not classes:
            raise SourceUnavailable(f"catalog {catalog} has no matroids on {n} elements")
        hits = [size for M, size in classes if is_kl_uniform_tutte(M, k, l)]
        labeled, unlabeled = sum(hits), len(hits)
    else:
        raise ValueError(f"unknown source {source!r}")
    return CensusRecord(n, k, l, labeled, unlabeled, source)


@lru_cache(maxsize=None)
def _catalog_cache(path: str, n: int) -> tuple:
    return tuple(catalog_classes(path, n))


def load_records(path) -> dict:
    path = Path(path)
    if not path.exists():
        return {}
    records = {}
    for line in path.read_text().splitlines():
        if line.strip():
            rec = CensusRecord.from_line(line)
            records[(rec.n, rec.k, rec.l, rec.source)] = rec
    return records


def save_records(records: dict, path) -> None:
    lines = [records[key].to_line() for key in sorted(records)]
    Path(path).write_text("".join(line + "\n" for line in lines))


def _fmt_ratio(num: int, den: int) -> str:
    return f"{num / den:.6f}"


def ratio_table(
    n_list: Iterable[int],
    kl_list: Iterable[tuple],
    source: str = "brute_force",
    catalog=None,
    fmt: str = "tsv",
    records: dict | None = None,
) -> str:
    """Tabulate m_n(k,l) against m_n(k+1,l) and m_n(k,l+1).

    ``records`` (keyed by ``(n, k, l, source)``) is read and updated in place
    so repeated calls can skip finished counts.
    """
    if records is None:
        records = {}

    def get(n, k, l):
        key = (n, k, l, source)
        if key not in records:
            records[key] = count_uniform(n, k, l, source=source, catalog=catalog)
        return records[key].labeled_count

    header = ["n", "k", "l", "m(k,l)", "m(k+1,l)", "m(k,l+1)", "m(k,l)/m(k+1,l)", "m(k,l)/m(k,l+1)", "note"]
    rows = []
    kl_list = list(kl_list)
    for n in n_list:
        for k, l in kl_list:
            base, up_k, up_l = get(n, k, l), get(n, k + 1, l), get(n, k, l + 1)
            note = "(1,1) is outside the conjecture" if (k, l) == (1, 1) else ""
            rows.append(
                [str(n), str(k), str(l), str(base), str(up_k), str(up_l),
                 _fmt_ratio(base, up_k), _fmt_ratio(base, up_l), note]
            )
    if fmt == "tsv":
        lines = ["# finite-n counts of labeled matroids; ratios are data, not limits"]
        lines.append("\t".join(header))
        lines += ["\t".join(row) for row in rows]
    elif fmt == "md":
        lines = ["Finite-n counts of labeled matroids; ratios are data, not limits.", ""]
        lines.append("| " + " | ".join(header) + " |")
        lines.append("|" + "---|" * len(header))
        lines += ["| " + " | ".join(row) + " |" for row in rows]
    else:
        raise ValueError(f"unknown format {fmt!r}")
    return "\n".join(lines) + "\n"
