"""Matroids stored by their basis family over a small labeled ground set.

Element sets are int bitmasks internally (label ``e`` is bit ``e - 1``).
Public methods take and return plain collections of labels; methods whose
name ends in ``_mask`` work on bitmasks directly and exist for the hot loops
in the activity, Tutte and census code.
"""

from __future__ import annotations

import math
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .bitset import MAX_ELEMENTS, compress, elements, full_mask, popcount, to_mask, to_set
from .errors import (
    ElementOutOfRange,
    EmptyBasisList,
    ExchangeAxiomViolated,
    GroundSetExhausted,
    InvalidCorank,
    NotAPermutation,
    RankZeroTruncation,
    UnequalCardinalities,
    UniverseTooLarge,
)

ElementSet = frozenset


class Matroid:
    """An immutable matroid given by its bases.

    ``ground`` is the bitmask of element labels (a subset of 1..16) and
    ``bases`` the basis bitmasks in increasing integer order, which is the
    reverse-lexicographic order on equal-size sets. Minors keep the labels
    of the surviving elements, so the ground set need not be ``1..n``.
    """

    __slots__ = ("ground", "rank", "bases", "_basis_set", "_hash")

    def __init__(self, ground: int, bases: Iterable[int]):
        if ground == 0:
            raise GroundSetExhausted("a matroid needs a nonempty ground set")
        if ground >> MAX_ELEMENTS:
            raise UniverseTooLarge(f"labels above {MAX_ELEMENTS} are not representable")
        family = sorted(set(bases))
        if not family:
            raise EmptyBasisList("the basis family is empty")
        for b in family:
            if b & ~ground:
                raise ElementOutOfRange(
                    f"basis {sorted(to_set(b))} has elements outside the ground set"
                )
        rank = popcount(family[0])
        for b in family:
            if popcount(b) != rank:
                raise UnequalCardinalities(
                    f"bases {sorted(to_set(family[0]))} and {sorted(to_set(b))} differ in size"
                )
        self._init(ground, rank, tuple(family))
        witness = exchange_violation(self.bases, ground)
        if witness is not None:
            b1, b2, x = witness
            raise ExchangeAxiomViolated(
                f"no exchange for x={x} from {sorted(to_set(b1))} into {sorted(to_set(b2))}",
                witness=(to_set(b1), to_set(b2), x),
            )

    def _init(self, ground, rank, bases):
        self.ground = ground
        self.rank = rank
        self.bases = bases
        self._basis_set = frozenset(bases)
        self._hash = hash((ground, bases))

    @classmethod
    def _trusted(cls, ground: int, bases: Iterable[int]) -> Matroid:
        # For families that are matroids by construction (minors, duals, sums...).
        family = tuple(sorted(set(bases)))
        if ground == 0:
            raise GroundSetExhausted("a matroid needs a nonempty ground set")
        self = object.__new__(cls)
        self._init(ground, popcount(family[0]), family)
        return self

    def __eq__(self, other):
        if not isinstance(other, Matroid):
            return NotImplemented
        return self.ground == other.ground and self.bases == other.bases

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return (
            f"Matroid(n={self.n}, rank={self.rank}, "
            f"bases={[sorted(to_set(b)) for b in self.bases]})"
        )

    # ---- basic accessors -------------------------------------------------

    @property
    def n(self) -> int:
        return popcount(self.ground)

    @property
    def elements(self) -> tuple:
        return tuple(elements(self.ground))

    def basis_sets(self) -> list:
        return [to_set(b) for b in self.bases]

    def is_basis(self, B: Iterable[int]) -> bool:
        return to_mask(B) in self._basis_set

    def is_basis_mask(self, B: int) -> bool:
        return B in self._basis_set

    def is_independent(self, S: Iterable[int]) -> bool:
        return self.is_independent_mask(to_mask(S))

    def is_independent_mask(self, S: int) -> bool:
        return any(b & S == S for b in self.bases)

    def _check_subset(self, S: int) -> int:
        if S & ~self.ground:
            raise ElementOutOfRange(f"{sorted(to_set(S))} is not a subset of the ground set")
        return S

    # ---- rank, closure, flats --------------------------------------------

    def rank_of(self, S: Iterable[int]) -> int:
        return self.rank_mask(self._check_subset(to_mask(S)))

    def rank_mask(self, S: int) -> int:
        best = 0
        for b in self.bases:
            c = popcount(b & S)
            if c > best:
                best = c
        return best

    def nullity(self, S: Iterable[int]) -> int:
        S = self._check_subset(to_mask(S))
        return popcount(S) - self.rank_mask(S)

    def closure(self, S: Iterable[int]) -> ElementSet:
        return to_set(self.closure_mask(self._check_subset(to_mask(S))))

    def closure_mask(self, S: int) -> int:
        r = self.rank_mask(S)
        out = S
        for e in elements(self.ground & ~S):
            if self.rank_mask(S | (1 << (e - 1))) == r:
                out |= 1 << (e - 1)
        return out

    def flats_of_corank_masks(self, k: int) -> list:
        if not 0 <= k <= self.rank:
            raise InvalidCorank(f"corank {k} outside 0..{self.rank}")
        # Every flat of rank r is the closure of an independent r-set.
        target = self.rank - k
        independents = set()
        for b in self.bases:
            for sub in combinations(tuple(elements(b)), target):
                independents.add(to_mask(sub))
        return sorted({self.closure_mask(s) for s in independents})

    def flats_of_corank(self, k: int) -> list:
        return [to_set(f) for f in self.flats_of_corank_masks(k)]

    # ---- loops, coloops, circuits ----------------------------------------

    def loops_mask(self) -> int:
        union = 0
        for b in self.bases:
            union |= b
        return self.ground & ~union

    def coloops_mask(self) -> int:
        inter = self.ground
        for b in self.bases:
            inter &= b
        return inter

    def loops(self) -> ElementSet:
        return to_set(self.loops_mask())

    def coloops(self) -> ElementSet:
        return to_set(self.coloops_mask())

    def circuits_masks(self) -> list:
        independent = set()
        for b in self.bases:
            sub = b
            while True:
                independent.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & b
        out = []
        sub = self.ground
        while sub:
            if sub not in independent and all(
                (sub & ~(1 << (e - 1))) in independent for e in elements(sub)
            ):
                out.append(sub)
            sub = (sub - 1) & self.ground
        return sorted(out)

    def circuits(self) -> list:
        return [to_set(c) for c in self.circuits_masks()]

    def cocircuits(self) -> list:
        return self.dual().circuits()

    def girth(self) -> float:
        """Size of a smallest circuit; ``math.inf`` for a free matroid."""
        circuits = self.circuits_masks()
        if not circuits:
            return math.inf
        return min(popcount(c) for c in circuits)

    # ---- constructions ----------------------------------------------------

    def delete(self, S: Iterable[int]) -> Matroid:
        return self.delete_mask(self._check_subset(to_mask(S)))

    def delete_mask(self, S: int) -> Matroid:
        keep = self.ground & ~S
        if keep == 0:
            raise GroundSetExhausted("deleting the whole ground set")
        restricted = [b & keep for b in self.bases]
        r = max(popcount(b) for b in restricted)
        return Matroid._trusted(keep, (b for b in restricted if popcount(b) == r))

    def contract(self, S: Iterable[int]) -> Matroid:
        return self.contract_mask(self._check_subset(to_mask(S)))

    def contract_mask(self, S: int) -> Matroid:
        keep = self.ground & ~S
        if keep == 0:
            raise GroundSetExhausted("contracting the whole ground set")
        r = self.rank_mask(S)
        return Matroid._trusted(keep, (b & keep for b in self.bases if popcount(b & S) == r))

    def restrict(self, S: Iterable[int]) -> Matroid:
        return self.delete_mask(self.ground & ~self._check_subset(to_mask(S)))

    def dual(self) -> Matroid:
        g = self.ground
        return Matroid._trusted(g, (g ^ b for b in self.bases))

    def truncate(self, m: int = 1) -> Matroid:
        """Truncate ``m`` times; each step keeps the non-basis independent sets."""
        if m < 0:
            raise ValueError("m must be nonnegative")
        if m > self.rank:
            raise RankZeroTruncation(f"cannot truncate a rank-{self.rank} matroid {m} times")
        M = self
        for _ in range(m):
            M = Matroid._trusted(
                M.ground, {b & ~(1 << (e - 1)) for b in M.bases for e in elements(b)}
            )
        return M

    def relabel(self, perm: Mapping[int, int] | Sequence[int]) -> Matroid:
        """Apply a bijection of the ground set.

        ``perm`` is a dict ``{old: new}`` or, for ground set ``1..n``, a
        sequence whose ``i``-th entry is the image of ``i + 1``.
        """
        labels = self.elements
        if not isinstance(perm, Mapping):
            perm = dict(zip(labels, perm)) if len(perm) == len(labels) else None
        if perm is None or set(perm) != set(labels) or set(perm.values()) != set(labels):
            raise NotAPermutation("relabeling must be a bijection of the ground set")
        table = {1 << (e - 1): 1 << (perm[e] - 1) for e in labels}

        def image(mask):
            out = 0
            while mask:
                low = mask & -mask
                out |= table[low]
                mask ^= low
            return out

        return Matroid._trusted(self.ground, (image(b) for b in self.bases))

    def normalized(self) -> Matroid:
        """Same matroid with labels compressed to ``1..n``, order preserved."""
        if self.ground == full_mask(self.n):
            return self
        return Matroid._trusted(full_mask(self.n), (compress(b, self.ground) for b in self.bases))


def exchange_violation(bases: Sequence[int], ground: int):
    """Return ``(B1, B2, x)`` breaking basis exchange, or ``None``.

    For ``S = B1 - x`` let ``Y`` be the elements ``y`` with ``S + y`` a basis.
    Exchange from ``B1`` at ``x`` succeeds against every ``B2`` exactly when
    ``Y`` meets every basis, so it suffices to test each distinct ``S`` once.
    """
    basis_set = set(bases)
    seen = set()
    for b1 in bases:
        for x in elements(b1):
            s = b1 & ~(1 << (x - 1))
            if s in seen:
                continue
            seen.add(s)
            y_mask = 0
            for y in elements(ground & ~s):
                if s | (1 << (y - 1)) in basis_set:
                    y_mask |= 1 << (y - 1)
            for b2 in bases:
                if not b2 & y_mask:
                    return b1, b2, x
    return None


def from_bases(n: int, basis_list: Iterable[Iterable[int]]) -> Matroid:
    """Build a validated matroid on ``1..n`` from a list of bases (deduplicated)."""
    if n < 1:
        raise GroundSetExhausted("n must be at least 1")
    if n > MAX_ELEMENTS:
        raise UniverseTooLarge(f"n={n} exceeds {MAX_ELEMENTS}")
    masks = []
    for B in basis_list:
        B = list(B)
        for e in B:
            if not 1 <= e <= n:
                raise ElementOutOfRange(f"element {e} outside 1..{n}")
        masks.append(to_mask(B))
    return Matroid(full_mask(n), masks)


def direct_sum(*matroids: Matroid) -> Matroid:
    """Direct sum; each operand's labels are placed after all earlier ones."""
    if not matroids:
        raise ValueError("direct_sum needs at least one matroid")
    total = sum(M.n for M in matroids)
    if total > MAX_ELEMENTS:
        raise UniverseTooLarge(f"direct sum has {total} > {MAX_ELEMENTS} elements")
    family = [0]
    offset = 0
    for M in matroids:
        N = M.normalized()
        family = [f | (b << offset) for f in family for b in N.bases]
        offset += N.n
    return Matroid._trusted(full_mask(total), family)
