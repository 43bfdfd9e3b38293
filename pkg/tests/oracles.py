"""Slow, independent reference computations used to derive expected values.

Nothing here calls the package's rank, activity, Tutte, isomorphism or
enumeration code; matroids are handled as plain ``(n, set of frozensets)``.
"""

from collections import Counter
from itertools import chain, combinations, permutations
from math import comb


def powerset(items):
    items = list(items)
    return chain.from_iterable(combinations(items, r) for r in range(len(items) + 1))


def plain(M):
    """``(ground labels, set of basis frozensets)`` from a package Matroid."""
    return tuple(M.elements), {frozenset(b) for b in M.basis_sets()}


def rank(bases, S):
    S = frozenset(S)
    return max(len(S & B) for B in bases)


def is_independent(bases, S):
    return any(frozenset(S) <= B for B in bases)


def circuits(ground, bases):
    dep = [frozenset(S) for S in powerset(ground) if S and not is_independent(bases, S)]
    return {C for C in dep if not any(D < C for D in dep)}


def cocircuits(ground, bases):
    """Minimal sets meeting every basis."""
    hitting = [frozenset(S) for S in powerset(ground) if S and all(set(S) & B for B in bases)]
    return {C for C in hitting if not any(D < C for D in hitting)}


def activities(ground, bases, B):
    """Activity pair of ``B`` from explicit circuit/cocircuit lists."""
    B = frozenset(B)
    circs, cocircs = circuits(ground, bases), cocircuits(ground, bases)
    internal = 0
    for v in B:
        (C,) = [C for C in cocircs if v in C and C <= (frozenset(ground) - B) | {v}]
        internal += v == min(C)
    external = 0
    for v in set(ground) - B:
        (C,) = [C for C in circs if v in C and C <= B | {v}]
        external += v == min(C)
    return internal, external


def tutte_rank_generating(ground, bases):
    """Coefficients of sum_S (x-1)^(r-r(S)) (y-1)^(|S|-r(S))."""
    r = rank(bases, ground)
    out = Counter()
    for S in powerset(ground):
        rs = rank(bases, S)
        a, b = r - rs, len(S) - rs
        for i in range(a + 1):
            for j in range(b + 1):
                out[(i, j)] += comb(a, i) * comb(b, j) * (-1) ** (a - i + b - j)
    return {key: c for key, c in out.items() if c}


def satisfies_exchange(bases):
    for B1 in bases:
        for B2 in bases:
            for x in B1 - B2:
                if not any((B1 - {x}) | {y} in bases for y in B2 - B1):
                    return False
    return True


def reference_matroid_count(n):
    """Count basis families on [n] by literal pairwise exchange.

    Families are visited largest-first, unlike the package enumerator.
    """
    total = 0
    for r in range(n + 1):
        cands = [frozenset(c) for c in combinations(range(1, n + 1), r)]
        for size in range(len(cands), 0, -1):
            for family in combinations(cands, size):
                if satisfies_exchange(set(family)):
                    total += 1
    return total


def isomorphic(m1, m2):
    (g1, b1), (g2, b2) = m1, m2
    if len(g1) != len(g2) or len(b1) != len(b2):
        return False
    for image in permutations(g2):
        f = dict(zip(g1, image))
        if {frozenset(f[e] for e in B) for B in b1} == b2:
            return True
    return False


def minor_plain(ground, bases, C, D):
    """Contract C then delete D, from the definitions."""
    C, D = frozenset(C), frozenset(D)
    rc = rank(bases, C)
    contracted = {B - C for B in bases if len(B & C) == rc}
    rest = [e for e in ground if e not in C and e not in D]
    top = max(len(B - D) for B in contracted)
    return tuple(rest), {B - D for B in contracted if len(B - D) == top}


def has_minor_unrestricted(m, target):
    """Try every disjoint (C, D) of the right total size."""
    ground, bases = m
    drop = len(ground) - len(target[0])
    if drop < 0:
        return False
    for removed in combinations(ground, drop):
        for c_size in range(drop + 1):
            for C in combinations(removed, c_size):
                D = set(removed) - set(C)
                if isomorphic(minor_plain(ground, bases, C, D), target):
                    return True
    return False


def automorphisms(ground, bases):
    count = 0
    for image in permutations(ground):
        f = dict(zip(ground, image))
        if {frozenset(f[e] for e in B) for B in bases} == bases:
            count += 1
    return count


def kl_uniform_flats(ground, bases, k, l):
    """Every corank-k flat has nullity below l (vacuous when k > rank)."""
    r = rank(bases, ground)
    for S in powerset(ground):
        rs = rank(bases, S)
        if rs != r - k:
            continue
        if all(rank(bases, set(S) | {e}) > rs for e in ground if e not in S):
            if len(S) - rs >= l:
                return False
    return True
