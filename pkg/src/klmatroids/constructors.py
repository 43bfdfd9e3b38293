"""Named matroids: uniform, Schubert (with lattice-path activities), and the
truncated direct sums ``tau^m(N + U(r, s))`` that are excluded minors for
almost (k, l)-uniformity.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .activity import ActivityPair
from .bitset import MAX_ELEMENTS, full_mask, to_mask
from .errors import (
    InvalidParameters,
    InvalidRank,
    LoopOrColoopPresent,
    MatroidError,
    NotABasis,
    UniverseTooLarge,
)
from .matroid import Matroid, direct_sum


def uniform(r: int, n: int) -> Matroid:
    """U(r, n): every r-subset of 1..n is a basis."""
    if n < 1 or not 0 <= r <= n:
        raise InvalidRank(f"need 0 <= r <= n and n >= 1, got r={r}, n={n}")
    if n > MAX_ELEMENTS:
        raise UniverseTooLarge(f"n={n} exceeds {MAX_ELEMENTS}")
    return Matroid._trusted(full_mask(n), (to_mask(c) for c in combinations(range(1, n + 1), r)))


def free_plus_loops(i: int, j: int) -> Matroid:
    """U(i, i) + U(0, j): coloops 1..i followed by loops i+1..i+j."""
    parts = [uniform(i, i)] if i else []
    if j:
        parts.append(uniform(0, j))
    if not parts:
        raise InvalidRank("U(0,0) + U(0,0) has an empty ground set")
    return direct_sum(*parts)


@dataclass(frozen=True)
class SchubertSpec:
    """A defining set ``a_1 < ... < a_d`` inside ``1..n``."""

    n: int
    defining_set: tuple

    def __post_init__(self):
        a = tuple(self.defining_set)
        object.__setattr__(self, "defining_set", a)
        if not 1 <= self.n <= MAX_ELEMENTS:
            raise UniverseTooLarge(f"n={self.n} outside 1..{MAX_ELEMENTS}")
        if any(x >= y for x, y in zip(a, a[1:])):
            raise MatroidError(f"defining set {a} is not strictly increasing")
        if a and not (1 <= a[0] and a[-1] <= self.n):
            raise MatroidError(f"defining set {a} not inside 1..{self.n}")

    @property
    def rank(self) -> int:
        return len(self.defining_set)

    @property
    def lower_path(self) -> str:
        """P = E^(n-d) N^d, the path of the Gale-largest subset."""
        return "E" * (self.n - self.rank) + "N" * self.rank

    @property
    def upper_path(self) -> str:
        """Q, with its north steps at the positions of the defining set."""
        return path_word(self.n, self.defining_set)


def path_word(n: int, members: Iterable[int]) -> str:
    members = set(members)
    return "".join("N" if i in members else "E" for i in range(1, n + 1))


def _segments(word: str) -> set:
    """Unit steps of a lattice path from the origin, as ``(dir, x, y)``."""
    x = y = 0
    out = set()
    for step in word:
        out.add((step, x, y))
        if step == "N":
            y += 1
        else:
            x += 1
    return out


def schubert(spec: SchubertSpec) -> Matroid:
    """Bases are the d-subsets ``b`` with ``a_i <= b_i`` for every i."""
    a = spec.defining_set
    family = [
        to_mask(b)
        for b in combinations(range(1, spec.n + 1), spec.rank)
        if all(ai <= bi for ai, bi in zip(a, b))
    ]
    return Matroid._trusted(full_mask(spec.n), family)


def lattice_path_activity(spec: SchubertSpec, B: Iterable[int]) -> ActivityPair:
    """Activities read off the lattice path of ``B``.

    Internal activity counts north steps lying on the upper bounding path,
    external activity counts east steps lying on the lower one. Steps are
    compared as lattice segments, not by their index in the word.
    """
    B = tuple(sorted(B))
    a = spec.defining_set
    if len(B) != spec.rank or not all(ai <= bi for ai, bi in zip(a, B)) or (
        B and not (1 <= B[0] and B[-1] <= spec.n)
    ):
        raise NotABasis(f"{B} is not a basis of the Schubert matroid of {a}")
    path = _segments(path_word(spec.n, B))
    upper = {s for s in _segments(spec.upper_path) if s[0] == "N"}
    lower = {s for s in _segments(spec.lower_path) if s[0] == "E"}
    return ActivityPair(len(path & upper), len(path & lower))


def excluded_minor_parameters(N: Matroid, m: int) -> tuple:
    """The (k, l) for which ``excluded_minor_construct(N, m)`` is an excluded minor."""
    return N.rank - m, N.n - N.rank


def excluded_minor_construct(N: Matroid, m: int) -> Matroid:
    """``tau^m(N + U(r, s))`` with ``r = rank(N)``, ``s = |E(N)|``.

    N must be loopless and coloopless. With ``k = r - m`` and ``l = s - r``
    (both at least 1) the result is a loopless, coloopless excluded minor
    for almost (k, l)-uniform matroids.
    """
    if N.loops_mask() or N.coloops_mask():
        raise LoopOrColoopPresent(
            f"N has loops {sorted(N.loops())} and coloops {sorted(N.coloops())}"
        )
    k, l = excluded_minor_parameters(N, m)
    if m < 0 or k < 1 or l < 1:
        raise InvalidParameters(f"need m >= 0, k >= 1, l >= 1; got m={m}, k={k}, l={l}")
    return direct_sum(N, uniform(N.rank, N.n)).truncate(m)
