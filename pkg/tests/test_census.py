from itertools import combinations, product
from math import factorial

import pytest

from klmatroids import is_isomorphic, parse_revlex, to_revlex, uniform
from klmatroids.census import (
    CensusRecord,
    count_uniform,
    enumerate_labeled,
    ingest_catalog,
    iso_classes,
    labeled_matroids,
    load_records,
    ratio_table,
    save_records,
    write_catalog,
)
from klmatroids.errors import (
    ExchangeAxiomViolated,
    ParseError,
    SourceUnavailable,
    UniverseTooLargeForBruteForce,
)

import oracles

LABELED = {1: 2, 2: 5, 3: 16, 4: 68, 5: 406, 6: 3807}
UNLABELED = {1: 2, 2: 4, 3: 8, 4: 17, 5: 38, 6: 98}


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_counts_agree_with_reference(n):
    assert len(labeled_matroids(n)) == oracles.reference_matroid_count(n) == LABELED[n]


@pytest.mark.slow
def test_count_n5_agrees_with_reference():
    assert oracles.reference_matroid_count(5) == len(labeled_matroids(5)) == 406


def test_count_n6():
    assert len(labeled_matroids(6)) == 3807


def test_enumeration_is_distinct_and_valid():
    for n in range(1, 5):
        seen = [M.bases for M in enumerate_labeled(n)]
        assert len(seen) == len(set(seen))
        for M in labeled_matroids(n):
            assert oracles.satisfies_exchange({frozenset(b) for b in M.basis_sets()})


def test_n2_by_rank():
    ranks = [M.rank for M in labeled_matroids(2)]
    assert ranks.count(0) == 1 and ranks.count(1) == 3 and ranks.count(2) == 1


def test_enumeration_cap():
    with pytest.raises(UniverseTooLargeForBruteForce):
        list(enumerate_labeled(7))


@pytest.mark.parametrize("n", range(1, 7))
def test_iso_classes(n):
    classes = iso_classes(n)
    assert len(classes) == UNLABELED[n]
    assert sum(size for _, size in classes) == LABELED[n]


def test_catalog_examples():
    assert parse_revlex("r=2 n=4 ******") == uniform(2, 4)
    M = parse_revlex("r=1 n=2 *0")
    assert M.basis_sets() == [frozenset({1})]
    assert to_revlex(uniform(2, 4)) == "r=2 n=4 ******"


def test_revlex_order():
    # r=2, n=4 in revlex: 12 13 23 14 24 34
    M = parse_revlex("r=2 n=4 **0*00")
    assert set(M.basis_sets()) == {frozenset(s) for s in [(1, 2), (1, 3), (1, 4)]}


def test_catalog_errors(tmp_path):
    with pytest.raises(ParseError):
        parse_revlex("r=2 n=4 ***")
    with pytest.raises(ParseError):
        parse_revlex("rank=2 n=4 ******")
    path = tmp_path / "bad.txt"
    path.write_text("r=1 n=2 **\n# comment\n\nr=2 n=4 *0000*\n")
    with pytest.raises(ExchangeAxiomViolated) as info:
        list(ingest_catalog(path))
    assert "line 4" in str(info.value)


@pytest.mark.parametrize("n", range(1, 7))
def test_round_trip(n):
    for M in labeled_matroids(n):
        back = parse_revlex(to_revlex(M))
        assert back == M and is_isomorphic(back, M) is not None


@pytest.fixture(scope="module")
def catalog(tmp_path_factory):
    path = tmp_path_factory.mktemp("cat") / "reps.txt"
    write_catalog([M for n in range(1, 7) for M, _ in iso_classes(n)], path)
    return path


def test_catalog_labeled_counts_match(catalog):
    for n in range(1, 7):
        for k, l in product(range(1, 4), repeat=2):
            brute = count_uniform(n, k, l)
            cat = count_uniform(n, k, l, source="catalog", catalog=catalog)
            assert (brute.labeled_count, brute.unlabeled_count) == (
                cat.labeled_count, cat.unlabeled_count)


def test_uniform_counts_match_oracle():
    for n in range(1, 5):
        families = [oracles.plain(M) for M in labeled_matroids(n)]
        for k, l in product(range(1, 4), repeat=2):
            expected = sum(oracles.kl_uniform_flats(g, b, k, l) for g, b in families)
            assert count_uniform(n, k, l).labeled_count == expected


def test_n2_uniform():
    # All but U(1,1) + U(0,1) and U(0,1) + U(1,1).
    assert count_uniform(2, 1, 1).labeled_count == 3


def test_monotone_and_saturated():
    for n in range(1, 6):
        for k, l in product(range(1, 5), repeat=2):
            m = count_uniform(n, k, l).labeled_count
            assert m <= count_uniform(n, k + 1, l).labeled_count
            assert m <= count_uniform(n, k, l + 1).labeled_count
        assert count_uniform(n, n + 1, 1).labeled_count == LABELED[n]
        assert count_uniform(n, 1, n + 1).labeled_count == LABELED[n]


def test_count_errors():
    with pytest.raises(SourceUnavailable):
        count_uniform(7, 1, 1)
    with pytest.raises(SourceUnavailable):
        count_uniform(4, 1, 1, source="catalog")


def test_record_line_round_trip(tmp_path):
    rec = CensusRecord(5, 1, 2, 121, 30, "brute_force")
    assert CensusRecord.from_line(rec.to_line()) == rec
    path = tmp_path / "records.tsv"
    save_records({(5, 1, 2, "brute_force"): rec}, path)
    assert load_records(path) == {(5, 1, 2, "brute_force"): rec}
    assert load_records(tmp_path / "missing.tsv") == {}


def test_ratio_table():
    records = {}
    text = ratio_table([4], [(1, 1), (1, 2)], records=records)
    lines = text.splitlines()
    assert lines[0].startswith("#")
    header = lines[1].split("\t")
    assert header[:6] == ["n", "k", "l", "m(k,l)", "m(k+1,l)", "m(k,l+1)"]
    rows = [line.split("\t") for line in lines[2:]]
    assert len(rows) == 2
    assert rows[0][8] and not rows[1][8]
    for row in rows:
        assert 0 < float(row[6]) <= 1 and 0 < float(row[7]) <= 1
        assert int(row[3]) == count_uniform(4, int(row[1]), int(row[2])).labeled_count
    assert (4, 1, 1, "brute_force") in records
    md = ratio_table([4], [(1, 1)], fmt="md", records=records)
    assert "| n | k | l |" in md
