import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import H35, example1, example2, reference_h35, reference_h615
from heffter.constructions import construct_agreeable, construct_perfect
from heffter.core import (
    HeffterArray,
    array_from_factors,
    is_globally_simple,
    is_isomorphic_prime,
    multiplier_group_brute,
    multiplier_group_rank_one,
    partial_sums,
    perm_equivalent,
    rank_one_factors,
    verify_heffter,
)
from heffter.cyclotomy import ElementSet, is_half_set
from heffter.errors import DimensionMismatch, NotRankOne, UnsupportedField
from heffter.field import make_field
from heffter.numtheory import lcm, odd_part


def test_verify_example1(ex1):
    r = verify_heffter(ex1)
    assert (r.half_set, r.rows_zero_sum, r.cols_zero_sum, r.rank_one, r.globally_simple) == (True,) * 5
    assert r.failures == []


def test_verify_h615(h615):
    r = verify_heffter(h615)
    assert r.is_heffter and r.rank_one
    # Each coset block of a row sums to zero, so row 1 repeats the partial sum 0.
    assert r.globally_simple is False
    assert r.failures == [("globally_simple", "row 1")]


def test_verify_perturbed_example1(ex1):
    # swapping 1 for -1 keeps a half-set but breaks row 1 and column 1
    rows = [list(r) for r in ex1.entries]
    rows[0][0] = 18
    r = verify_heffter(HeffterArray(ex1.field, rows))
    assert r.half_set
    assert not r.rows_zero_sum and not r.cols_zero_sum
    assert r.failures[:2] == [("row_zero_sum", "row 1"), ("col_zero_sum", "column 1")]
    assert not r.is_heffter


@pytest.mark.parametrize("value, reason", [(3, "equal"), (16, "opposite"), (0, "zero")])
def test_verify_half_set_failures(ex1, value, reason):
    rows = [list(r) for r in ex1.entries]
    rows[0][0] = value
    r = verify_heffter(HeffterArray(ex1.field, rows))
    assert not r.half_set
    assert r.failures[0][0] == "half_set" and reason in r.failures[0][1]


def test_verify_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        HeffterArray(make_field(31), [[1, 2, 3], [4, 5, 6], [7, 8, 9]])
    with pytest.raises(DimensionMismatch):
        HeffterArray(make_field(13), [[1, 2, 3], [4, 5, 6]])


def test_rank_one_factors_examples(ex1, ex2):
    fac = rank_one_factors(ex1)
    assert fac.x == (1, 7, 11) and fac.y == (1, 3, 15)
    f = ex2.field
    fac2 = rank_one_factors(ex2)
    assert [f.format(v) for v in fac2.x] == ["1", "3g+1", "2g+3"]
    assert [f.format(v) for v in fac2.y] == ["1", "g", "g+4", "3g"]
    rows = [list(r) for r in ex1.entries]
    rows[1][0], rows[1][1] = rows[1][1], rows[1][0]
    assert rank_one_factors(HeffterArray(ex1.field, rows)) is None


def test_perm_equivalent_examples(ex1, h35):
    swapped = [ex1.entries[1], ex1.entries[0], ex1.entries[2]]
    assert perm_equivalent(ex1, swapped)
    assert perm_equivalent(h35.scaled(9), h35)
    assert not perm_equivalent(ex1.scaled(18), ex1)
    assert not perm_equivalent(h35.scaled(30), h35)
    assert not perm_equivalent([[1, 2]], [[1, 2], [3, 4]])


def test_times_nine_is_cyclic_shift(h35):
    # rows shift by one, columns by three
    shifted = [[H35[(i + 1) % 3][(j + 3) % 5] for j in range(5)] for i in range(3)]
    nine = h35.scaled(9).entries
    assert sorted(map(sorted, nine)) == sorted(map(sorted, shifted))
    assert perm_equivalent(nine, shifted)


def _random_matrix(rng, m, n, alphabet):
    return [[rng.choice(alphabet) for _ in range(n)] for _ in range(m)]


def _permute(rng, mat):
    rows = list(range(len(mat)))
    cols = list(range(len(mat[0])))
    rng.shuffle(rows)
    rng.shuffle(cols)
    return [[mat[i][j] for j in cols] for i in rows]


def test_perm_equivalent_is_equivalence_relation():
    rng = random.Random(11)
    for _ in range(200):
        m, n = rng.randint(1, 4), rng.randint(1, 4)
        a = _random_matrix(rng, m, n, [1, 2, 3])
        b = _permute(rng, a)
        c = _permute(rng, b)
        assert perm_equivalent(a, a)
        assert perm_equivalent(a, b) and perm_equivalent(b, a)
        assert perm_equivalent(a, c)
        d = _random_matrix(rng, m, n, [1, 2, 3])
        assert perm_equivalent(a, d) == perm_equivalent(d, a)
        assert perm_equivalent(a, d) == _brute_perm_equivalent(a, d)


def _brute_perm_equivalent(a, b):
    from itertools import permutations

    m, n = len(a), len(a[0])
    for pi in permutations(range(m)):
        for psi in permutations(range(n)):
            if all(b[i][j] == a[pi[i]][psi[j]] for i in range(m) for j in range(n)):
                return True
    return False


def test_multiplier_group_examples(ex1, ex2, h35):
    assert multiplier_group_brute(ex1).elements == {1, 7, 11}
    f = ex2.field
    expected = {f.parse("1"), f.parse("3g+1"), f.parse("2g+3")}
    assert multiplier_group_brute(ex2).elements == expected
    assert multiplier_group_rank_one(ex2).elements == expected
    squares = {v * v % 31 for v in range(1, 31)}
    assert multiplier_group_brute(h35).elements == squares


def test_multiplier_group_rank_one_examples(ex1, h615, h35):
    g = multiplier_group_rank_one(ex1)
    assert g.s_part == {1, 7, 11} and g.t_part == {1} and g.elements == {1, 7, 11}
    g = multiplier_group_rank_one(h615)
    assert (len(g.s_part), len(g.t_part), g.order) == (3, 5, 15)
    assert g.order == lcm(3, 15)
    g = multiplier_group_rank_one(h35)
    assert g.elements == {v * v % 31 for v in range(1, 31)}


def test_multiplier_group_rank_one_rejects_non_rank_one(ex1):
    rows = [list(r) for r in ex1.entries]
    rows[1][0], rows[1][1] = rows[1][1], rows[1][0]
    with pytest.raises(NotRankOne):
        multiplier_group_rank_one(HeffterArray(ex1.field, rows))


def test_partial_sums_examples():
    f = make_field(31)
    assert partial_sums(f, [1, 2, 4, 8, 16]) == [1, 3, 7, 15, 0]
    assert partial_sums(f, [1, 5, 25]) == [1, 6, 0]
    assert partial_sums(f, []) == []
    assert partial_sums(make_field(7), [2, 5, 3, 4]) == [2, 0, 3, 0]


def test_globally_simple_examples(ex1, h35):
    assert is_globally_simple(h35, "fast")
    assert is_globally_simple(h35, "full")
    assert is_globally_simple(ex1, "full")


def test_globally_simple_detects_collision():
    # non-rank-one 3x3 array over F_19 whose first row repeats a partial sum
    f = make_field(19)
    a = HeffterArray(f, [[2, 17, 0], [1, 1, 1], [1, 1, 1]])
    assert not is_globally_simple(a, "full")
    with pytest.raises(NotRankOne):
        is_globally_simple(a, "fast")


def test_isomorphic_prime_examples(ex1):
    assert is_isomorphic_prime(ex1, ex1.scaled(7))
    assert is_isomorphic_prime(ex1, ex1.transpose())
    assert is_isomorphic_prime(ex1, ex1.scaled(18))
    with pytest.raises(UnsupportedField):
        is_isomorphic_prime(example2(), example2())


def test_isomorphism_distinguishes_multiplier_orders():
    # X = {1, 19, 11} is not a subgroup, so this H(3,5) has only the 5 multipliers of Y
    f = make_field(31)
    b = array_from_factors(f, [1, 19, 11], [1, 16, 8, 4, 2])
    assert verify_heffter(b).is_heffter
    assert multiplier_group_brute(b).order == 5
    assert not is_isomorphic_prime(construct_perfect(3, 5), b)
    assert is_isomorphic_prime(construct_perfect(3, 5), reference_h35())


def _rank_one_arrays():
    yield example1()
    yield example2()
    yield reference_h35()
    yield reference_h615()
    for m, n in [(3, 5), (5, 3), (3, 7), (7, 3), (5, 7), (7, 9), (3, 11), (3, 13), (9, 19)]:
        yield construct_perfect(m, n)
    for m, n in [(6, 15), (15, 6), (3, 10), (10, 3), (6, 5), (3, 20), (5, 18)]:
        yield construct_agreeable(m, n)


@pytest.mark.parametrize("arr", list(_rank_one_arrays()), ids=repr)
def test_rank_one_invariants(arr):
    g = multiplier_group_rank_one(arr)
    bound = lcm(odd_part(arr.m), odd_part(arr.n))
    assert bound % g.order == 0
    assert arr.field.minus_one not in g.elements
    assert is_globally_simple(arr, "fast") == is_globally_simple(arr, "full")
    if arr.field.q <= 600:
        assert multiplier_group_brute(arr).elements == g.elements
    for u in g.elements:
        assert verify_heffter(arr.scaled(u), rank=False, simple=False).is_heffter


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 30))
def test_scaling_preserves_heffter_iff_half_set(u):
    a = reference_h35()
    ua = a.scaled(u)
    expect = is_half_set(ElementSet(a.field, ua.entry_set()))
    assert verify_heffter(ua, rank=False, simple=False).is_heffter == expect


def test_array_from_factors_matches_reference_h35():
    f = make_field(31)
    assert array_from_factors(f, [1, 5, 25], [1, 2, 4, 8, 16]).entries == tuple(map(tuple, H35))
