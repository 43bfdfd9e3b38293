"""Isomorphism, automorphism counting and minor containment by exhaustive search."""

from __future__ import annotations

from collections import Counter
from itertools import combinations
from typing import Iterator

from .bitset import elements, to_mask
from .matroid import Matroid
from .tutte import tutte_by_activities


def _degrees(M: Matroid) -> dict:
    deg = {e: 0 for e in M.elements}
    for b in M.bases:
        for e in elements(b):
            deg[e] += 1
    return deg


def _pair_degrees(M: Matroid) -> dict:
    pd = Counter()
    for b in M.bases:
        members = tuple(elements(b))
        for i, x in enumerate(members):
            for y in members[i + 1:]:
                pd[(x, y)] += 1
                pd[(y, x)] += 1
    return pd


def _invariants_match(M: Matroid, N: Matroid) -> bool:
    if (M.n, M.rank, len(M.bases)) != (N.n, N.rank, len(N.bases)):
        return False
    if sorted(_degrees(M).values()) != sorted(_degrees(N).values()):
        return False
    return tutte_by_activities(M) == tutte_by_activities(N)


def _maps_onto(M: Matroid, N: Matroid, mapping: dict) -> bool:
    table = {1 << (e - 1): 1 << (f - 1) for e, f in mapping.items()}
    target = N._basis_set
    for b in M.bases:
        out = 0
        while b:
            low = b & -b
            out |= table[low]
            b ^= low
        if out not in target:
            return False
    return True


def _isomorphisms(M: Matroid, N: Matroid) -> Iterator[dict]:
    """Backtracking over element maps that respect (pair) basis degrees."""
    dm, dn = _degrees(M), _degrees(N)
    pm, pn = _pair_degrees(M), _pair_degrees(N)
    # Assign rare degrees first; they have the fewest candidates.
    freq = Counter(dm.values())
    order = sorted(M.elements, key=lambda e: (freq[dm[e]], dm[e], e))
    targets = N.elements
    mapping = {}
    used = set()

    def extend(pos):
        if pos == len(order):
            if _maps_onto(M, N, mapping):
                yield dict(mapping)
            return
        x = order[pos]
        for y in targets:
            if y in used or dn[y] != dm[x]:
                continue
            if any(pm[(x, a)] != pn[(y, mapping[a])] for a in order[:pos]):
                continue
            mapping[x] = y
            used.add(y)
            yield from extend(pos + 1)
            used.discard(y)
            del mapping[x]

    yield from extend(0)


def is_isomorphic(M: Matroid, N: Matroid) -> dict | None:
    """Return an element map carrying the bases of ``M`` onto those of ``N``, or None."""
    if not _invariants_match(M, N):
        return None
    return next(_isomorphisms(M, N), None)


def automorphism_count(M: Matroid) -> int:
    return sum(1 for _ in _isomorphisms(M, M))


def has_minor(M: Matroid, N: Matroid) -> bool:
    return find_minor(M, N) is not None


def find_minor(M: Matroid, N: Matroid):
    """Search for ``(C, D)`` with ``M / C - D`` isomorphic to ``N``.

    ``C`` ranges over independent sets of size ``r(M) - r(N)`` and ``D`` over
    sets that are coindependent in ``M / C``; every minor arises this way.
    Returns ``(C, D)`` as sorted tuples, or None.
    """
    c_size = M.rank - N.rank
    d_size = (M.n - N.n) - c_size
    if c_size < 0 or d_size < 0:
        return None
    labels = M.elements
    n_bases = len(N.bases)
    for C in combinations(labels, c_size):
        cm = to_mask(C)
        above = [b & ~cm for b in M.bases if b & cm == cm]
        if not above:
            continue
        rest = tuple(e for e in labels if not cm & (1 << (e - 1)))
        for D in combinations(rest, d_size):
            dm = to_mask(D)
            # Nonempty iff D is coindependent in M / C.
            minor_bases = [b for b in above if not b & dm]
            if len(minor_bases) != n_bases:
                continue
            minor = Matroid._trusted(M.ground & ~cm & ~dm, minor_bases)
            if is_isomorphic(minor, N) is not None:
                return C, D
    return None
