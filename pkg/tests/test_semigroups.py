import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from involute.errors import (
    IndexOutOfRangeError,
    InputFormatError,
    NotAssociativeError,
)
from involute.families import (
    cyclic_group,
    full_transformation_monoid,
    rectangular_band,
    zero_semigroup,
)
from involute.graphs import complete_graph, frucht_semigroup
from involute.semigroups import (
    atoms,
    closure_of_subset,
    from_json_dict,
    generating_set,
    index_and_period,
    load_table,
    to_json_dict,
    validate,
)


def test_validate_z2():
    s = validate([[0, 1], [1, 0]])
    assert s.identity == 0
    assert s.n == 2


def test_validate_nonassociative_witness():
    with pytest.raises(NotAssociativeError) as exc:
        validate([[0, 0], [1, 0]])
    i, j, k = exc.value.witness
    t = [[0, 0], [1, 0]]
    assert t[t[i][j]][k] != t[i][t[j][k]]


def test_validate_left_zero_has_no_identity(left_zero_2):
    assert left_zero_2.identity is None


def test_validate_rejects_bad_entries():
    with pytest.raises(IndexOutOfRangeError):
        validate([[0, 2], [1, 0]])
    with pytest.raises(InputFormatError):
        validate([[0, 1], [1]])
    with pytest.raises(InputFormatError):
        validate([])


def test_commutativity():
    assert cyclic_group(5).is_commutative
    assert not validate([[0, 0], [1, 1]]).is_commutative
    assert not rectangular_band(2, 2).is_commutative


def test_atoms_examples():
    s = frucht_semigroup(complete_graph(3))
    assert atoms(s) == frozenset({0, 1, 2})
    assert atoms(cyclic_group(2)) == frozenset({1})
    assert atoms(cyclic_group(5)) == frozenset()


def test_atoms_against_brute_force_on_random_tables():
    rng = random.Random(11)
    found = 0
    while found < 25:
        n = rng.choice((2, 3))
        table = [[rng.randrange(n) for _ in range(n)] for _ in range(n)]
        try:
            s = validate(table)
        except Exception:
            continue
        found += 1
        e = s.identity
        others = [x for x in range(n) if x != e]
        brute = {
            a
            for a in range(n)
            if a != e and all(table[b][c] != a for b in others for c in others)
        }
        assert atoms(s) == brute


def test_green_rectangular_band():
    g = rectangular_band(2, 3).green
    assert sorted(len(c) for c in g.r_classes) == [3, 3]
    assert sorted(len(c) for c in g.l_classes) == [2, 2, 2]
    assert len(g.h_classes) == 6
    assert len(g.d_classes) == 1
    assert g.d_classes == g.j_classes


def test_green_t2_rank_classes():
    g = full_transformation_monoid(2).green
    # constants {[0 0], [1 1]} and bijections {id, swap}
    assert sorted(sorted(c) for c in g.d_classes) == [[0, 3], [1, 2]]


def test_green_group_is_a_single_class():
    g = cyclic_group(6).green
    for part in (g.r_classes, g.l_classes, g.h_classes, g.d_classes, g.j_classes):
        assert len(part) == 1


def test_generating_set_examples():
    assert generating_set(cyclic_group(6)) == [1]
    t3 = full_transformation_monoid(3)
    gens = generating_set(t3)
    assert closure_of_subset(t3, gens) == frozenset(range(27))
    z = zero_semigroup(3)
    assert sorted(generating_set(z)) == [0, 1, 2]


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=2, max_value=40))
def test_generating_set_generates_cyclic(n):
    s = cyclic_group(n)
    assert closure_of_subset(s, generating_set(s)) == frozenset(range(n))


def test_fingerprint_examples():
    z6 = cyclic_group(6)
    fps = z6.fingerprints
    assert fps[0].is_idempotent and (fps[0].index, fps[0].period) == (1, 1)
    assert (fps[1].index, fps[1].period) == (1, 6)
    t3 = full_transformation_monoid(3)
    const = t3.fingerprints[0]  # the map sending everything to 0
    assert const.is_idempotent
    assert const.right_mult_rank == 1


def test_index_and_period_bounds():
    t3 = full_transformation_monoid(3)
    for x in range(27):
        i, p = index_and_period(t3, x)
        assert 1 <= i and 1 <= p and i + p - 1 <= 3


def test_json_roundtrip(tmp_path, klein):
    doc = to_json_dict(klein)
    back = from_json_dict(json.loads(json.dumps(doc)))
    assert back.table == klein.table
    assert back.identity == 0
    path = tmp_path / "klein.json"
    path.write_text(json.dumps(doc))
    assert load_table(path).table == klein.table


def test_json_rejects_inconsistencies():
    with pytest.raises(InputFormatError):
        from_json_dict({"n": 3, "table": [[0, 1], [1, 0]]})
    with pytest.raises(InputFormatError):
        from_json_dict({"table": [[0, 1], [1, 0]], "identity": 1})
    with pytest.raises(InputFormatError):
        from_json_dict([1, 2, 3])
