import random

import pytest

from conftest import brute_morphisms
from involute.errors import DegreeMismatchError, NotAnInvolutionError
from involute.families import (
    cyclic_group,
    direct_product_table,
    dual_table,
    full_transformation_monoid,
    partition_monoid,
    rectangular_band,
    star_map,
    sym_group_table,
)
from involute.morphisms import (
    enumerate_anti_automorphisms,
    enumerate_automorphisms,
    find_anti_isomorphism,
    find_isomorphism,
    involutions,
    is_anti_homomorphism,
    is_homomorphism,
    is_proper_involution,
    order_two_automorphisms,
)
from involute.perms import Permutation, compose
from involute.semigroups import atoms, validate


def test_is_homomorphism_examples(klein):
    ident = Permutation.identity(4)
    assert is_homomorphism(ident, klein, klein)
    z2 = cyclic_group(2)
    assert not is_homomorphism(Permutation((1, 0)), z2, z2)
    z5 = cyclic_group(5)
    negation = Permutation(tuple((-x) % 5 for x in range(5)))
    assert is_homomorphism(negation, z5, z5)
    with pytest.raises(DegreeMismatchError):
        is_homomorphism(Permutation((0, 1)), z5, z5)


def test_is_anti_homomorphism_examples():
    s3 = sym_group_table(3)
    inversion = Permutation(tuple(s3.table[x].index(s3.identity) for x in range(6)))
    assert is_anti_homomorphism(inversion, s3, s3)
    z5 = cyclic_group(5)
    assert is_anti_homomorphism(Permutation.identity(5), z5, z5)
    band = rectangular_band(2, 2)
    assert not is_anti_homomorphism(Permutation.identity(4), band, band)


def test_enumerate_automorphisms_counts(klein):
    assert len(enumerate_automorphisms(klein)) == 6
    assert len(enumerate_automorphisms(full_transformation_monoid(3))) == 6
    assert len(enumerate_automorphisms(cyclic_group(8))) == 4


def test_enumerate_anti_automorphisms_counts():
    assert len(enumerate_anti_automorphisms(full_transformation_monoid(3))) == 0
    assert len(enumerate_anti_automorphisms(rectangular_band(2, 3))) == 0
    z12 = cyclic_group(12)
    anti = enumerate_anti_automorphisms(z12)
    assert len(anti) == 4
    assert anti.elements == enumerate_automorphisms(z12).elements


def test_involutions_counts(klein):
    assert len(involutions(klein)) == 3
    assert len(involutions(cyclic_group(12))) == 3
    assert len(involutions(full_transformation_monoid(2))) == 0


def test_order_two_automorphisms_counts():
    z8 = order_two_automorphisms(cyclic_group(8))
    assert len(z8) == 4
    s3 = order_two_automorphisms(sym_group_table(3))
    assert len(s3) == 4
    assert Permutation.identity(6) in s3.elements
    trivial = validate([[0]])
    assert [p.mapping for p in order_two_automorphisms(trivial)] == [(0,)]


def test_is_proper_involution():
    s3 = sym_group_table(3)
    inversion = Permutation(tuple(s3.table[x].index(s3.identity) for x in range(6)))
    assert is_proper_involution(inversion, s3)
    z12 = cyclic_group(12)
    for alpha in involutions(z12):
        assert not is_proper_involution(alpha, z12)
    assert is_proper_involution(star_map(2), partition_monoid(2))
    with pytest.raises(NotAnInvolutionError):
        is_proper_involution(Permutation.identity(6), s3)


def test_find_isomorphism_examples(klein):
    z4 = cyclic_group(4)
    assert find_isomorphism(z4, klein) is None
    z6 = cyclic_group(6)
    z2xz3 = direct_product_table(cyclic_group(2), cyclic_group(3))
    iso = find_isomorphism(z6, z2xz3)
    assert iso is not None
    assert is_homomorphism(iso, z6, z2xz3)


def test_find_anti_isomorphism_examples(left_zero_2, right_zero_2):
    t2 = full_transformation_monoid(2)
    assert find_anti_isomorphism(t2, t2) is None
    assert find_anti_isomorphism(left_zero_2, right_zero_2) is not None
    band = rectangular_band(2, 3)
    anti = find_anti_isomorphism(band, dual_table(band))
    assert anti is not None
    assert is_anti_homomorphism(anti, band, dual_table(band))


def test_soundness_every_result_passes_the_equation(klein):
    for s in (klein, full_transformation_monoid(2), rectangular_band(2, 2)):
        for p in enumerate_automorphisms(s):
            assert is_homomorphism(p, s, s)
        for p in enumerate_anti_automorphisms(s):
            assert is_anti_homomorphism(p, s, s)


def test_completeness_against_brute_force_small_corpus():
    rng = random.Random(3)
    corpus = [
        cyclic_group(5),
        rectangular_band(2, 2),
        full_transformation_monoid(2),
        validate([[0, 0], [1, 1]]),
    ]
    while len(corpus) < 24:
        n = rng.choice((2, 3))
        table = [[rng.randrange(n) for _ in range(n)] for _ in range(n)]
        try:
            corpus.append(validate(table))
        except Exception:
            continue
    for s in corpus:
        assert [p.mapping for p in enumerate_automorphisms(s)] == brute_morphisms(s)
        assert [p.mapping for p in enumerate_anti_automorphisms(s)] == brute_morphisms(s, anti=True)


def test_anti_automorphisms_form_one_aut_coset():
    # |Aut-| is 0 or |Aut|, and any single anti-automorphism translates Aut onto Aut-
    for s in (
        sym_group_table(3),
        rectangular_band(2, 3),
        rectangular_band(2, 2),
        full_transformation_monoid(3),
        partition_monoid(2),
    ):
        auts = enumerate_automorphisms(s)
        anti = enumerate_anti_automorphisms(s)
        assert len(anti) in (0, len(auts))
        if anti:
            beta = anti.elements[0]
            translated = sorted(compose(a.mapping, beta.mapping) for a in auts)
            assert translated == [p.mapping for p in anti]


def test_atoms_are_preserved_by_all_morphisms():
    from involute.graphs import frucht_semigroup, path_graph

    for s in (frucht_semigroup(path_graph(4)), cyclic_group(8), partition_monoid(2)):
        a = atoms(s)
        for p in enumerate_automorphisms(s):
            assert {p.mapping[x] for x in a} == a
        for p in enumerate_anti_automorphisms(s):
            assert {p.mapping[x] for x in a} == a


def test_commutative_collapse():
    z12 = cyclic_group(12)
    assert enumerate_anti_automorphisms(z12).elements == enumerate_automorphisms(z12).elements
    expected = {p for p in order_two_automorphisms(z12) if not p.is_identity()}
    assert set(involutions(z12).elements) == expected


def test_two_anti_automorphisms_compose_to_an_automorphism():
    b = rectangular_band(3, 3)
    anti = enumerate_anti_automorphisms(b).elements
    auts = set(enumerate_automorphisms(b).elements)
    for i in range(0, len(anti), 7):
        for j in range(0, len(anti), 7):
            assert anti[i] * anti[j] in auts


def test_fingerprint_preservation_under_morphisms():
    s = partition_monoid(2)
    fps = s.fingerprints
    for p in enumerate_automorphisms(s):
        assert all(fps[p.mapping[x]] == fps[x] for x in range(s.n))
    for p in enumerate_anti_automorphisms(s):
        assert all(fps[p.mapping[x]] == fps[x].swapped() for x in range(s.n))


def test_parallel_jobs_match_sequential(klein):
    seq = enumerate_automorphisms(klein)
    par = enumerate_automorphisms(klein, jobs=2)
    assert seq.elements == par.elements


def test_search_budget_is_enforced():
    from involute.errors import SearchBudgetExceededError

    with pytest.raises(SearchBudgetExceededError):
        enumerate_automorphisms(sym_group_table(4), budget=5)
