import random
from itertools import combinations, product

import pytest

from klmatroids import (
    SchubertSpec,
    activity_pair,
    direct_sum,
    free_plus_loops,
    fundamental_circuit,
    fundamental_cocircuit,
    gale_smallest_basis,
    is_excluded_minor,
    is_excluded_minor_def,
    is_kl_uniform,
    lattice_path_activity,
    schubert,
    excluded_minor_construct,
    tutte_by_activities,
    uniform,
)
from klmatroids.census import labeled_matroids
from klmatroids.constructors import excluded_minor_parameters
from klmatroids.errors import (
    InvalidParameters,
    InvalidRank,
    LoopOrColoopPresent,
    MatroidError,
    NotABasis,
)


FIG1 = SchubertSpec(10, (1, 2, 4, 6, 7))


def test_uniform_examples():
    assert len(uniform(2, 4).bases) == 6
    U = uniform(0, 2)
    assert U.basis_sets() == [frozenset()] and U.loops() == {1, 2}
    assert tutte_by_activities(direct_sum(uniform(3, 3), uniform(0, 2))).coeffs == {(3, 2): 1}


@pytest.mark.parametrize("r,n", [(3, 2), (-1, 2), (0, 0)])
def test_uniform_errors(r, n):
    with pytest.raises(InvalidRank):
        uniform(r, n)


def test_schubert_examples():
    M = schubert(FIG1)
    assert M.rank == 5 and len(M.bases) == 216
    T = tutte_by_activities(M)
    assert T.coefficient(3, 1) == 1 and T.coefficient(2, 2) == 1
    assert schubert(SchubertSpec(6, (1, 2, 3))) == uniform(3, 6)
    top = schubert(SchubertSpec(6, (4, 5, 6)))
    assert top.basis_sets() == [frozenset({4, 5, 6})]
    assert top.coloops() == {4, 5, 6} and top.loops() == {1, 2, 3}


def test_schubert_bases_are_gale_upper_set():
    # Independent count: d-subsets dominating the defining set, by brute force.
    for n in range(1, 8):
        for d in range(n + 1):
            for a in combinations(range(1, n + 1), d):
                M = schubert(SchubertSpec(n, a))
                expected = {frozenset(b) for b in combinations(range(1, n + 1), d)
                            if all(x <= y for x, y in zip(a, b))}
                assert set(M.basis_sets()) == expected
                assert gale_smallest_basis(M) == set(a)


def test_schubert_spec_errors():
    with pytest.raises(MatroidError):
        SchubertSpec(5, (2, 2))
    with pytest.raises(MatroidError):
        SchubertSpec(5, (1, 6))


def test_bounding_paths():
    assert FIG1.lower_path == "EEEEENNNNN"
    assert FIG1.upper_path == "NNENENNEEE"


def test_lattice_path_schubert_example():
    assert lattice_path_activity(FIG1, {2, 3, 4, 6, 7}) == (3, 1)
    assert lattice_path_activity(FIG1, {3, 4, 5, 6, 7}) == (2, 2)
    assert lattice_path_activity(FIG1, FIG1.defining_set) == (5, 0)
    with pytest.raises(NotABasis):
        lattice_path_activity(FIG1, {1, 2, 3, 4, 5})


def test_lattice_path_matches_activities():
    rng = random.Random(7)
    specs = [FIG1]
    for _ in range(25):
        n = rng.randint(1, 10)
        d = rng.randint(0, n)
        specs.append(SchubertSpec(n, tuple(sorted(rng.sample(range(1, n + 1), d)))))
    for spec in specs:
        M = schubert(spec)
        for B in M.basis_sets():
            assert lattice_path_activity(spec, B) == activity_pair(M, B)


def test_excluded_minor_construct_examples():
    M = excluded_minor_construct(uniform(1, 2), 0)
    assert M == direct_sum(uniform(1, 2), uniform(1, 2))
    assert is_excluded_minor(M, 1, 1)
    M = excluded_minor_construct(uniform(2, 3), 0)
    assert excluded_minor_parameters(uniform(2, 3), 0) == (2, 1)
    assert is_excluded_minor_def(M, 2, 1)
    M = excluded_minor_construct(uniform(2, 3), 1)
    assert (M.n, M.rank) == (6, 3)
    assert is_excluded_minor_def(M, 1, 1)


def test_excluded_minor_construct_errors():
    with pytest.raises(LoopOrColoopPresent):
        excluded_minor_construct(free_plus_loops(1, 1), 0)
    with pytest.raises(InvalidParameters):
        excluded_minor_construct(uniform(2, 3), 2)
    with pytest.raises(InvalidParameters):
        excluded_minor_construct(uniform(1, 2), -1)


def test_excluded_minor_construct_small_instances():
    for n in range(2, 5):
        for N in labeled_matroids(n):
            if N.loops() or N.coloops():
                continue
            for m in range(N.rank):
                k, l = excluded_minor_parameters(N, m)
                M = excluded_minor_construct(N, m)
                assert not M.loops() and not M.coloops()
                assert is_excluded_minor_def(M, k, l)


def test_fourth_power_is_not_excluded():
    M = direct_sum(*[uniform(1, 2)] * 4)
    assert not is_excluded_minor(M, 2, 2)


def test_truncation_keeps_uniformity():
    for M in [M for n in range(1, 6) for M in labeled_matroids(n)]:
        if M.rank == 0:
            continue
        T = M.truncate()
        for k, l in product(range(1, 5), repeat=2):
            if is_kl_uniform(M, k, l):
                assert is_kl_uniform(T, k, l)


def _active(M, B):
    internal = {v for v in B if min(fundamental_cocircuit(M, B, v)) == v}
    external = {v for v in set(M.elements) - B if min(fundamental_circuit(M, B, v)) == v}
    return internal, external


def test_active_elements_stay_in_left_block():
    # For a basis of tau^m(N + U) meeting E(N) in the wrong number of
    # elements, the active elements all lie in E(N).
    checked = 0
    for n in range(2, 5):
        for N in labeled_matroids(n):
            if N.loops() or N.coloops():
                continue
            for m in range(1, N.rank):
                d = N.rank - m
                M = excluded_minor_construct(N, m)
                left = set(range(1, N.n + 1))
                for B in M.basis_sets():
                    internal, external = _active(M, B)
                    size = len(B & left)
                    if size != d:
                        assert external <= left
                    if size != d + m:
                        assert internal <= left
                    checked += 1
    assert checked > 0
