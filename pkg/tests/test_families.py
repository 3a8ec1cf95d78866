import pytest

from srdf.families import (
    ClaimKind, ConstructionError, construct, construct_c3_join_cycle, construct_fan, construct_friendship,
    construct_join_cycles, construct_join_cycles_22, construct_join_cycles_23, construct_join_cycles_33,
    construct_join_cycles_weight4, construct_wheel, cycle_closed_sums, cycle_open_sums, every_third, gamma_formula,
    wheel_equation,
)
from srdf.graph import FamilySpec, Kind, cycle, join_cycles, path, wheel
from srdf.labeling import verify
from srdf.solver import solve_exact


def sides(c, m):
    values = list(c.labeling)
    return values[:m], values[m:]


def assert_gated(c):
    report = verify(c.graph, c.labeling)
    assert report.valid
    assert report.weight == c.claimed_weight


@pytest.mark.parametrize("n", [3, 6, 9, 12])
def test_c3_join(n):
    c = construct_c3_join_cycle(n)
    assert_gated(c)
    a, b = sides(c, 3)
    assert a == [1, 1, -1]
    assert b == every_third(n)
    assert (sum(a), sum(b)) == (1, 0)
    assert c.claim_kind is ClaimKind.EXACT and c.claimed_weight == 1


def test_c3_join_matches_solver():
    assert solve_exact(join_cycles(3, 9)).gamma == 1


def test_c3_join_rejects_non_multiple():
    with pytest.raises(ConstructionError):
        construct_c3_join_cycle(7)


@pytest.mark.parametrize("m,n", [(5, 6), (7, 7), (4, 4), (3, 10), (12, 9)])
def test_weight4_construction(m, n):
    c = construct_join_cycles_weight4(m, n)
    assert_gated(c)
    a, b = sides(c, m)
    assert sum(a) == sum(b) == 2
    assert c.claim_kind is ClaimKind.UPPER_BOUND and c.claimed_weight == 4


def test_weight4_patterns_by_parity():
    a, b = sides(construct_join_cycles_weight4(5, 6), 5)
    assert a == [2, -1, 1, -1, 1]
    assert b == [2, -1, 2, -1, 1, -1]


def test_weight4_upper_bound_against_solver():
    for m, n in [(4, 4), (3, 5), (4, 6), (5, 5)]:
        gamma = solve_exact(join_cycles(m, n)).gamma
        assert 1 <= gamma <= 4


@pytest.mark.parametrize("m,n", [(14, 14), (14, 17), (20, 29)])
def test_both_sides_two_mod_three(m, n):
    c = construct_join_cycles_22(m, n)
    assert_gated(c)
    a, b = sides(c, m)
    assert sum(a) == sum(b) == 1
    assert c.claimed_weight == 2


def test_closed_sums_on_both_sides_of_c14_join_c14():
    a, b = sides(construct_join_cycles_22(14, 14), 14)
    for side in (a, b):
        sums = cycle_closed_sums(side)
        assert sums[-1] == 3
        assert set(sums[:-1]) == {0}


@pytest.mark.parametrize("m,n,last", [(14, 15, 1), (14, 16, 2), (17, 13, 2)])
def test_one_side_two_mod_three(m, n, last):
    c = construct_join_cycles_23(m, n)
    assert_gated(c)
    a, b = sides(c, m)
    assert (sum(a), sum(b)) == (1, 2)
    assert b[-1] == last
    assert c.claimed_weight == 3


def test_weight_two_side_closed_sums_nonnegative():
    _, b = sides(construct_join_cycles_23(14, 15), 14)
    assert min(cycle_closed_sums(b)) >= 0


@pytest.mark.parametrize("m,n", [(15, 16), (16, 15), (15, 15), (13, 13), (18, 22)])
def test_neither_side_two_mod_three(m, n):
    c = construct_join_cycles_33(m, n)
    assert_gated(c)
    a, b = sides(c, m)
    assert (sum(a), sum(b)) == (1, 2)
    # the weight-2 side lifts every closed sum on this side from >= -1 to >= 1
    assert min(cycle_closed_sums(a)) >= -1
    assert min(cycle_closed_sums(b)) >= -1


def test_weight_one_side_open_sums_can_reach_minus_two():
    # a vertex labelled 2 between two -1 vertices: the bound only holds for closed sums
    a, _ = sides(construct_join_cycles_33(15, 15), 15)
    assert min(cycle_open_sums(a)) == -2
    assert min(cycle_closed_sums(a)) == -1


def test_tail_ones_pattern_positions():
    a, _ = sides(construct_join_cycles_33(15, 15), 15)
    assert (a[12], a[13]) == (1, 1)
    assert a[0] == 2 and a[14] == -1
    a, _ = sides(construct_join_cycles_33(16, 15), 16)
    assert a[15] == 1


@pytest.mark.parametrize("bad", [
    lambda: construct_join_cycles_22(14, 15),
    lambda: construct_join_cycles_22(11, 14),
    lambda: construct_join_cycles_23(15, 14),
    lambda: construct_join_cycles_33(14, 15),
    lambda: construct_join_cycles_weight4(2, 5),
])
def test_join_preconditions(bad):
    with pytest.raises(ConstructionError):
        bad()


def test_join_dispatch_mirrors_sides():
    c = construct_join_cycles(15, 14)
    assert_gated(c)
    a, b = sides(c, 15)
    assert (sum(a), sum(b)) == (2, 1)
    c = construct_join_cycles(9, 3)
    assert_gated(c)
    assert list(c.labeling)[9:] == [1, 1, -1]
    assert construct_join_cycles(5, 7).claim_kind is ClaimKind.UPPER_BOUND


@pytest.mark.parametrize("n,tag", [(12, "mod3-0"), (10, "mod3-1"), (8, "mod3-2"), (5, "odd")])
def test_wheel_equations(n, tag):
    assert wheel_equation(n)[0] == tag
    c = construct_wheel(n)
    assert_gated(c)
    assert c.claimed_weight == 1


def test_wheel4_and_wheel12_values():
    c = construct_wheel(4)
    assert list(c.labeling) == [2, 1, -1, 1, -1] and c.claimed_weight == 2
    hub, *rim = construct_wheel(12).labeling
    assert hub == 1
    assert rim == [2 if i % 3 == 0 else -1 for i in range(1, 13)]


def test_wheel5_rim():
    assert list(construct_wheel(5).labeling) == [2, -1, 1, -1, 1, -1]


@pytest.mark.parametrize("n,values,weight", [
    (1, [2, -1], 1), (2, [2, -1, 1], 2), (4, [2, -1, 1, -1, 1], 2), (5, [2, -1, 1, -1, 1, -1], 1),
])
def test_fan_small_cases(n, values, weight):
    c = construct_fan(n)
    assert list(c.labeling) == values
    assert c.claimed_weight == weight


def test_fan_even_orders_use_rotated_rim():
    # the unrotated wheel pattern leaves the first path vertex uncovered
    for n in (6, 8, 10, 12, 14):
        _, hub, rim = wheel_equation(n)
        assert not verify(construct_fan(n).graph, [hub] + rim).valid
        c = construct_fan(n)
        assert_gated(c)
        assert c.source.endswith("shift1")


@pytest.mark.parametrize("m", [1, 2, 5, 30])
def test_friendship(m):
    c = construct_friendship(m)
    assert_gated(c)
    assert list(c.labeling) == [2] + [1, -1] * m


def test_friendship_m2_matches_solver():
    assert solve_exact(construct_friendship(2).graph).gamma == 2


def test_exact_constructions_agree_with_solver_up_to_order_13():
    specs = [FamilySpec(Kind.WHEEL, n=n) for n in range(3, 13)]
    specs += [FamilySpec(Kind.FAN, n=n) for n in range(1, 13)]
    specs += [FamilySpec(Kind.FRIENDSHIP, m=m) for m in range(1, 7)]
    specs += [FamilySpec(Kind.JOIN_CYCLES, m=3, n=n) for n in (3, 6, 9)]
    for spec in specs:
        c = construct(spec)
        assert c.graph.order <= 13
        assert solve_exact(c.graph).gamma == c.claimed_weight, spec


def test_construct_rejects_families_without_labelers():
    with pytest.raises(ConstructionError):
        construct(FamilySpec(Kind.CYCLE, n=5))


@pytest.mark.parametrize("spec,value", [
    (FamilySpec(Kind.CYCLE, n=7), 5),
    (FamilySpec(Kind.COMPLETE, n=3), 2),
    (FamilySpec(Kind.JOIN_CYCLES, m=14, n=16), 3),
    (FamilySpec(Kind.JOIN_CYCLES, m=14, n=17), 2),
    (FamilySpec(Kind.JOIN_CYCLES, m=5, n=7), None),
    (FamilySpec(Kind.JOIN_CYCLES, m=6, n=3), 1),
    (FamilySpec(Kind.PATH, n=7), 4),
    (FamilySpec(Kind.PATH, n=1), 1),
    (FamilySpec(Kind.WHEEL, n=4), 2),
    (FamilySpec(Kind.FAN, n=2), 2),
    (FamilySpec(Kind.FAN, n=3), 1),
    (FamilySpec(Kind.EMPTY, n=5), 5),
    (FamilySpec(Kind.MATCHING, m=3), 3),
])
def test_gamma_formula(spec, value):
    assert gamma_formula(spec) == value


def test_formula_against_solver_on_small_cycles_and_paths():
    for n in range(1, 11):
        assert solve_exact(path(n)).gamma == gamma_formula(FamilySpec(Kind.PATH, n=n))
    for n in range(3, 11):
        assert solve_exact(cycle(n)).gamma == gamma_formula(FamilySpec(Kind.CYCLE, n=n))
    assert solve_exact(wheel(4)).gamma == 2
