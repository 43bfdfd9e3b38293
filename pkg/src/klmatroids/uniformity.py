"""(k, l)-uniformity, almost (k, l)-uniformity and their excluded minors.

A matroid is (k, l)-uniform when it has no minor isomorphic to
U(k, k) + U(0, l). Three equivalent tests are provided (minor search,
corank-k flats, Tutte support) and the Tutte test is the one used
everywhere else. ``(i, j) > (k, l)`` below always means the strict
product order: ``i >= k``, ``j >= l`` and ``(i, j) != (k, l)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .bitset import elements, popcount
from .constructors import free_plus_loops
from .errors import InvalidParameters
from .isominor import has_minor, is_isomorphic
from .matroid import Matroid
from .tutte import tutte_by_activities, vanishes_at_or_above, vanishes_strictly_above


class KLPair(NamedTuple):
    k: int
    l: int


def _check_kl(k: int, l: int) -> None:
    if k < 1 or l < 1:
        raise InvalidParameters(f"k and l must be positive, got ({k}, {l})")


def is_kl_uniform_tutte(M: Matroid, k: int, l: int) -> bool:
    _check_kl(k, l)
    return vanishes_at_or_above(tutte_by_activities(M), k, l)


def is_kl_uniform_flats(M: Matroid, k: int, l: int) -> bool:
    """Every corank-k flat has nullity below l (vacuously true when k > rank)."""
    _check_kl(k, l)
    if k > M.rank:
        return True
    return all(
        popcount(F) - M.rank_mask(F) < l for F in M.flats_of_corank_masks(k)
    )


def is_kl_uniform_minor(M: Matroid, k: int, l: int) -> bool:
    _check_kl(k, l)
    return not has_minor(M, free_plus_loops(k, l))


is_kl_uniform = is_kl_uniform_tutte

UNIFORM_METHODS = {
    "tutte": is_kl_uniform_tutte,
    "flats": is_kl_uniform_flats,
    "minor": is_kl_uniform_minor,
}


def is_paving(M: Matroid) -> bool:
    return is_kl_uniform_tutte(M, 2, 1)


def _single_element_minors(M: Matroid, v: int):
    vb = 1 << (v - 1)
    return M.delete_mask(vb), M.contract_mask(vb)


def is_almost_kl_uniform_def(M: Matroid, k: int, l: int) -> bool:
    """For every element v, ``M - v`` or ``M / v`` is (k, l)-uniform."""
    _check_kl(k, l)
    if M.n == 1:
        # Both single-element minors are the empty matroid, whose Tutte
        # polynomial is 1 and which is (k, l)-uniform for all k, l >= 1.
        return True
    for v in elements(M.ground):
        deleted, contracted = _single_element_minors(M, v)
        if not (is_kl_uniform(deleted, k, l) or is_kl_uniform(contracted, k, l)):
            return False
    return True


def is_almost_kl_uniform_tutte(M: Matroid, k: int, l: int) -> bool:
    """``t[k][l] <= 1`` and ``t[i][j] == 0`` for ``(i, j) > (k, l)``."""
    _check_kl(k, l)
    T = tutte_by_activities(M)
    return T.coefficient(k, l) <= 1 and vanishes_strictly_above(T, k, l)


is_almost_kl_uniform = is_almost_kl_uniform_tutte

ALMOST_METHODS = {
    "tutte": is_almost_kl_uniform_tutte,
    "def": is_almost_kl_uniform_def,
}


def is_excluded_minor_def(M: Matroid, k: int, l: int) -> bool:
    """M is not almost (k, l)-uniform but all its single-element minors are.

    Checking single-element minors suffices because the almost class is
    minor-closed.
    """
    _check_kl(k, l)
    if is_almost_kl_uniform_def(M, k, l):
        return False
    if M.n == 1:
        return True
    for v in elements(M.ground):
        for minor in _single_element_minors(M, v):
            if not is_almost_kl_uniform_def(minor, k, l):
                return False
    return True


def is_excluded_minor_tutte(M: Matroid, k: int, l: int) -> bool:
    _check_kl(k, l)
    if M.n == k + l + 1 and (
        is_isomorphic(M, free_plus_loops(k + 1, l)) is not None
        or is_isomorphic(M, free_plus_loops(k, l + 1)) is not None
    ):
        return True
    free = M.ground & ~M.loops_mask() & ~M.coloops_mask()
    if not free:
        return False
    T = tutte_by_activities(M)
    if T.coefficient(k, l) != 2 or not vanishes_strictly_above(T, k, l):
        return False
    for v in elements(free):
        for minor in _single_element_minors(M, v):
            if tutte_by_activities(minor).coefficient(k, l) != 1:
                return False
    return True


is_excluded_minor = is_excluded_minor_tutte

EXCLUDED_METHODS = {
    "tutte": is_excluded_minor_tutte,
    "def": is_excluded_minor_def,
}


@dataclass(frozen=True)
class UniformityProfile:
    """Minimal (k, l) within the bounds for which the matroid is (k, l)-uniform.

    Membership is upward closed, so M is (k, l)-uniform (for (k, l) inside the
    bounds) exactly when (k, l) dominates one of ``minimal_pairs``.
    """

    minimal_pairs: tuple
    k_max: int
    l_max: int

    def is_uniform(self, k: int, l: int) -> bool:
        return any(k >= a and l >= b for a, b in self.minimal_pairs)


def uniformity_profile(M: Matroid, k_max: int, l_max: int) -> UniformityProfile:
    if k_max < 1 or l_max < 1:
        raise InvalidParameters("profile bounds must be positive")
    support = tutte_by_activities(M).support()

    def uniform_at(k, l):
        return not any(i >= k and j >= l for i, j in support)

    minimal = []
    for k in range(1, k_max + 1):
        for l in range(1, l_max + 1):
            if not uniform_at(k, l):
                continue
            if (k == 1 or not uniform_at(k - 1, l)) and (l == 1 or not uniform_at(k, l - 1)):
                minimal.append(KLPair(k, l))
    return UniformityProfile(tuple(minimal), k_max, l_max)
