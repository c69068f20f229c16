import itertools

import pytest

from domdodom import beta, covering_number, is_intersecting, make_family
from domdodom.constructions import (
    CONSTRUCTION_NAMES,
    NamedConstruction,
    check_design10,
    design10,
    design10_lift,
    f23,
    f23_beta_p1,
    f23_size,
    fano,
    fano_beta_p2,
    fano_lift,
    lift,
    lift_beta_lower,
    star,
    triangle,
)
from domdodom.errors import BadParams, CoverTooLarge
from domdodom.family import Family, binom, mask_of, restrict

from conftest import as_sets, brute_beta, brute_tau


def test_f23_6_3_by_enumeration():
    brute = [c for c in itertools.combinations(range(1, 7), 3) if len(set(c) & {1, 2, 3}) >= 2]
    exactly2 = sum(1 for c in brute if len(set(c) & {1, 2, 3}) == 2)
    assert (len(brute), exactly2) == (10, 9)
    F = f23(6, 3)
    assert sorted(F.as_lists()) == sorted(map(list, brute))
    assert f23_size(6, 3) == 10


@pytest.mark.parametrize("n, k", [(5, 2), (7, 3), (9, 4), (10, 5), (8, 8)])
def test_f23_size_formula(n, k):
    assert len(f23(n, k)) == f23_size(n, k)


def test_f23_3_2_is_triangle():
    assert f23(3, 2).as_lists() == [[1, 2], [1, 3], [2, 3]]


def test_f23_12_4_diversity():
    F = f23(12, 4)
    assert brute_beta(F, 0, 1)[0] == binom(9, 2) == 36
    assert beta(F, 0, 1).value == 36


def test_f23_bad_params():
    with pytest.raises(BadParams):
        f23(2, 2)
    with pytest.raises(BadParams):
        f23(5, 1)


def test_fano_lines():
    F = fano()
    assert len(F) == 7 and F.n == 7
    assert F.as_lists() == sorted(F.as_lists(), key=mask_of)
    lines = as_sets(F)
    for pair in itertools.combinations(range(1, 8), 2):
        assert sum(1 for L in lines if set(pair) <= L) == 1
    assert covering_number(F) == 3


def test_exactly_two_lines_avoid_each_pair():
    lines = as_sets(fano())
    for pair in itertools.combinations(range(1, 8), 2):
        avoiding = [L for L in lines if not L & set(pair)]
        assert len(avoiding) == 2
        assert len(avoiding[0] | avoiding[1]) == 5


def test_design10_properties():
    D = design10()
    sets = as_sets(D)
    assert len(sets) == 10
    full = frozenset(range(1, 7))
    for t in itertools.combinations(range(1, 7), 3):
        t = frozenset(t)
        if min(t) == 1:
            assert (t in sets) != ((full - t) in sets)
    for pair in itertools.combinations(range(1, 7), 2):
        assert sum(1 for s in sets if set(pair) <= s) == 2
    assert check_design10(D) == []
    assert brute_beta(D, 0, 2)[0] == 2 and beta(D, 0, 2).value == 2


def test_check_design10_catches_bad_instance():
    bad = make_family(6, 3, [[1, 2, 3], [1, 2, 4], [1, 3, 5]])
    assert check_design10(bad)


def test_lift_fano_is_fano_lift():
    for n, k in [(7, 3), (9, 4), (12, 5)]:
        assert lift(fano(), n, k) == fano_lift(n, k)


@pytest.mark.parametrize("n", [3, 5, 8, 10])
def test_lift_triangle_is_f23(n):
    assert lift(triangle(), n, 3) == f23(n, 3)


def test_lift_lower_bound_fano_12_5():
    bound = lift_beta_lower(12, 5, 0, 2)
    assert bound == binom(7, 2) == 21
    assert brute_beta(lift(fano(), 12, 5), 0, 2)[0] == 41 >= bound


def test_lift_errors():
    with pytest.raises(CoverTooLarge):
        lift([[1, 2, 3, 4]], 8, 3)
    with pytest.raises(BadParams):
        lift([[1, 9]], 8, 3)


def test_triangle():
    T = triangle()
    assert [t.elements for t in T] == [[1, 2], [2, 3], [1, 3]]
    F = make_family(3, 2, [t.elements for t in T])
    assert brute_tau(F.as_lists(), 3) == 2 and covering_number(F) == 2
    assert all(a.bits & b.bits for a, b in itertools.combinations(T, 2))
    assert brute_beta(F, 0, 1)[0] == 1 and beta(F, 0, 1).value == 1


@pytest.mark.parametrize("n, k", [(5, 3), (10, 4), (12, 2)])
def test_star_size(n, k):
    assert len(star([1], n, k)) == binom(n - 1, k - 1)


def test_star_beta_values():
    S = star([1], 10, 4)
    assert brute_beta(S, 1, 0)[0] == binom(8, 2) == 28
    assert beta(S, 1, 0).value == 28
    assert beta(S, 0, 1).value == 0


def test_star_rejects_big_center():
    with pytest.raises(CoverTooLarge):
        star([1, 2, 3, 4], 8, 3)


@pytest.mark.parametrize("name", CONSTRUCTION_NAMES)
def test_named_constructions_are_intersecting(name):
    gens = {"star": (mask_of([2, 5]),), "lift": (mask_of([1, 2]), mask_of([2, 3]), mask_of([1, 3, 4]))}
    F = NamedConstruction(name, 9, 4, gens.get(name, ())).build()
    assert is_intersecting(F)
    assert all(m.bit_count() == F.k and m >> F.n == 0 for m in F.masks)


def test_named_construction_unknown():
    with pytest.raises(BadParams):
        NamedConstruction("nope", 5, 3).build()


@pytest.mark.parametrize("n, k, p", [(8, 3, 0), (9, 4, 1), (11, 5, 2), (10, 4, 0)])
def test_f23_restriction_counts(n, k, p):
    F = f23(n, k)
    outside = list(range(4, n + 1))
    for j in (1, 2, 3):
        for P in itertools.islice(itertools.combinations(outside, p), 5):
            got = len(restrict(F, mask_of(P), mask_of([j])))
            assert got == f23_beta_p1(n, k, p)
    assert beta(F, p, 1).value == f23_beta_p1(n, k, p)


@pytest.mark.parametrize("n, k, p", [(9, 4, 0), (10, 5, 0), (11, 5, 1), (12, 6, 1)])
def test_fano_lift_restriction_counts(n, k, p):
    F = fano_lift(n, k)
    outside = list(range(8, n + 1))
    for Q in itertools.combinations(range(1, 8), 2):
        for P in itertools.islice(itertools.combinations(outside, p), 3):
            assert len(restrict(F, mask_of(P), mask_of(Q))) == fano_beta_p2(n, k, p)


def test_design10_lift_ties_fano_lift_for_small_k():
    # both correction terms vanish when k < p + 5
    for n in (7, 8, 9):
        assert beta(design10_lift(n, 3), 0, 2).value == beta(fano_lift(n, 3), 0, 2).value == 2


def test_design10_lift_loses_for_k5():
    n, k = 11, 5
    d = beta(design10_lift(n, k), 0, 2).value
    f = beta(fano_lift(n, k), 0, 2).value
    assert f == fano_beta_p2(n, k, 0)
    assert d == 2 * binom(n - 5, k - 3) - binom(n - 6, k - 4) < f


def test_constructions_family_type():
    assert isinstance(fano(), Family) and isinstance(design10(), Family)
