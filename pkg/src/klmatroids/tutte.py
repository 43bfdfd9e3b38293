"""Tutte polynomials: the activity sum and the deletion-contraction recursion."""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from typing import Iterator, Mapping

from .activity import activity_pair_mask
from .bitset import popcount
from .matroid import Matroid


class TuttePolynomial:
    """Sparse integer polynomial in ``x`` and ``y``; zero terms are never stored."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[tuple, int] = ()):
        clean = {}
        for (i, j), c in dict(coeffs).items():
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent ({i}, {j})")
            if c < 0:
                raise ValueError(f"negative coefficient at ({i}, {j})")
            if c:
                clean[(i, j)] = c
        self._coeffs = clean

    @classmethod
    def monomial(cls, i: int, j: int, c: int = 1) -> TuttePolynomial:
        return cls({(i, j): c})

    @property
    def coeffs(self) -> dict:
        return dict(self._coeffs)

    def coefficient(self, i: int, j: int) -> int:
        return self._coeffs.get((i, j), 0)

    def terms(self) -> Iterator[tuple]:
        """``(i, j, c)`` in lexicographic ``(i, j)`` order."""
        for (i, j) in sorted(self._coeffs):
            yield i, j, self._coeffs[(i, j)]

    def support(self) -> list:
        return sorted(self._coeffs)

    def total(self) -> int:
        return sum(self._coeffs.values())

    def swap(self) -> TuttePolynomial:
        return TuttePolynomial({(j, i): c for (i, j), c in self._coeffs.items()})

    def shift(self, di: int, dj: int) -> TuttePolynomial:
        return TuttePolynomial({(i + di, j + dj): c for (i, j), c in self._coeffs.items()})

    def __add__(self, other):
        out = Counter(self._coeffs)
        out.update(other._coeffs)
        return TuttePolynomial(out)

    def __mul__(self, other):
        out = Counter()
        for (i1, j1), c1 in self._coeffs.items():
            for (i2, j2), c2 in other._coeffs.items():
                out[(i1 + i2, j1 + j2)] += c1 * c2
        return TuttePolynomial(out)

    def __eq__(self, other):
        if not isinstance(other, TuttePolynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __repr__(self):
        return f"TuttePolynomial({self})"

    def __str__(self):
        if not self._coeffs:
            return "0"
        parts = []
        for i, j, c in sorted(self.terms(), key=lambda t: (-t[0] - t[1], -t[0])):
            mono = "".join(
                v if e == 1 else f"{v}^{e}" for v, e in (("x", i), ("y", j)) if e
            )
            if not mono:
                parts.append(str(c))
            else:
                parts.append(mono if c == 1 else f"{c}{mono}")
        return " + ".join(parts)


@lru_cache(maxsize=1 << 17)
def tutte_by_activities(M: Matroid) -> TuttePolynomial:
    """Sum of ``x**internal * y**external`` over all bases."""
    counts = Counter(activity_pair_mask(M, b) for b in M.bases)
    return TuttePolynomial({(p.internal, p.external): c for p, c in counts.items()})


def tutte(M: Matroid) -> TuttePolynomial:
    return tutte_by_activities(M)


def _dc(ground: int, bases: tuple, cache) -> Counter:
    if cache is not None:
        key = (ground, bases)
        hit = cache.get(key)
        if hit is not None:
            return hit
    union = 0
    inter = ground
    for b in bases:
        union |= b
        inter &= b
    loops = ground & ~union
    coloops = inter
    free = ground & ~loops & ~coloops
    if not free:
        out = Counter({(popcount(coloops), popcount(loops)): 1})
    else:
        # Pivot on the smallest element that is neither a loop nor a coloop.
        vb = free & -free
        rest = ground & ~vb
        deleted = tuple(b for b in bases if not b & vb)
        contracted = tuple(b & ~vb for b in bases if b & vb)
        out = _dc(rest, deleted, cache) + _dc(rest, contracted, cache)
    if cache is not None:
        cache[key] = out
    return out


def tutte_by_deletion_contraction(M: Matroid, cache: dict | None = None) -> TuttePolynomial:
    """Recursive Tutte polynomial.

    Loops and coloops are never pivoted on: once only they remain the
    result is the monomial ``x**coloops * y**loops``, which is what the
    ``x T(M - v)`` and ``y T(M - v)`` branches unwind to. Pass a dict as
    ``cache`` to share subresults between calls.
    """
    return TuttePolynomial(_dc(M.ground, M.bases, cache))


def coefficient(T: TuttePolynomial, i: int, j: int) -> int:
    return T.coefficient(i, j)


def vanishes_at_or_above(T: TuttePolynomial, k: int, l: int) -> bool:
    """No term ``x^i y^j`` with ``i >= k`` and ``j >= l``."""
    return not any(i >= k and j >= l for (i, j) in T._coeffs)


def vanishes_strictly_above(T: TuttePolynomial, k: int, l: int) -> bool:
    """No term ``x^i y^j`` with ``(i, j) > (k, l)``.

    ``>`` is the strict product order: ``i >= k``, ``j >= l`` and
    ``(i, j) != (k, l)``. Requiring ``i > k`` and ``j > l`` instead would
    call ``x^3 y`` "not above" ``(2, 1)``.
    """
    return not any(i >= k and j >= l and (i, j) != (k, l) for (i, j) in T._coeffs)
