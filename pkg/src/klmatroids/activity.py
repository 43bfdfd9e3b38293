"""Fundamental (co)circuits and internal/external activities of bases.

Activities are always taken with respect to the natural order of the
labels. To study another order, relabel the matroid first.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

from .bitset import elements, to_mask, to_set
from .errors import ElementInBasis, ElementNotInBasis, MatroidError, NotABasis
from .matroid import Matroid


class ActivityPair(NamedTuple):
    internal: int
    external: int


def _basis_mask(M: Matroid, B) -> int:
    mask = B if isinstance(B, int) else to_mask(B)
    if not M.is_basis_mask(mask):
        raise NotABasis(f"{sorted(to_set(mask))} is not a basis")
    return mask


def fundamental_circuit_mask(M: Matroid, B: int, v: int) -> int:
    vb = 1 << (v - 1)
    out = vb
    for w in elements(B):
        if (B & ~(1 << (w - 1))) | vb in M._basis_set:
            out |= 1 << (w - 1)
    return out


def fundamental_cocircuit_mask(M: Matroid, B: int, v: int) -> int:
    vb = 1 << (v - 1)
    rest = B & ~vb
    out = vb
    for w in elements(M.ground & ~B):
        if rest | (1 << (w - 1)) in M._basis_set:
            out |= 1 << (w - 1)
    return out


def fundamental_circuit(M: Matroid, B: Iterable[int], v: int) -> frozenset:
    """The unique circuit inside ``B + v`` for ``v`` outside the basis ``B``."""
    B = _basis_mask(M, B)
    if not M.ground & (1 << (v - 1)):
        raise MatroidError(f"{v} is not a ground-set element")
    if B & (1 << (v - 1)):
        raise ElementInBasis(f"{v} lies in the basis")
    return to_set(fundamental_circuit_mask(M, B, v))


def fundamental_cocircuit(M: Matroid, B: Iterable[int], v: int) -> frozenset:
    """The unique cocircuit inside ``(E - B) + v`` for ``v`` in the basis ``B``."""
    B = _basis_mask(M, B)
    if not B & (1 << (v - 1)):
        raise ElementNotInBasis(f"{v} is not in the basis")
    return to_set(fundamental_cocircuit_mask(M, B, v))


def activity_pair_mask(M: Matroid, B: int) -> ActivityPair:
    bases = M._basis_set
    outside = M.ground & ~B
    internal = 0
    for v in elements(B):
        rest = B & ~(1 << (v - 1))
        # v is active iff no smaller outside element w gives B - v + w a basis.
        smaller = outside & ((1 << (v - 1)) - 1)
        if not any(rest | (1 << (w - 1)) in bases for w in elements(smaller)):
            internal += 1
    external = 0
    for v in elements(outside):
        vb = 1 << (v - 1)
        smaller = B & (vb - 1)
        if not any((B & ~(1 << (w - 1))) | vb in bases for w in elements(smaller)):
            external += 1
    return ActivityPair(internal, external)


def activity_pair(M: Matroid, B: Iterable[int]) -> ActivityPair:
    return activity_pair_mask(M, _basis_mask(M, B))


def internal_activity(M: Matroid, B: Iterable[int]) -> int:
    return activity_pair(M, B).internal


def external_activity(M: Matroid, B: Iterable[int]) -> int:
    return activity_pair(M, B).external


def gale_smallest_basis_mask(M: Matroid) -> int:
    sorted_bases = [tuple(elements(b)) for b in M.bases]
    smallest = tuple(min(col) for col in zip(*sorted_bases))
    mask = to_mask(smallest)
    if not M.is_basis_mask(mask):
        raise AssertionError(
            f"componentwise minimum {smallest} is not a basis; the basis family is corrupt"
        )
    return mask


def gale_smallest_basis(M: Matroid) -> frozenset:
    """The basis that is componentwise smallest among all sorted bases."""
    return to_set(gale_smallest_basis_mask(M))
