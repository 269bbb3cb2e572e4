import random

import pytest

from mcurves import fixtures
from mcurves.arrangement import (Arrangement, WeakCombinatorics, bezout_pairs, conic_trace,
                                 defining_form, delete_component, singular_points, validate,
                                 weak_combinatorics)
from mcurves.errors import (DuplicateComponent, InvalidComponent, MultiplicityTooHigh,
                            NonOrdinarySingularity, SingularConic, TooFewComponents,
                            UnknownComponent, ZeroForm)
from mcurves.exactpoly import HForm
from mcurves.mtheory import bezout_check

from helpers import line_points_by_cross_products, random_arrangements, random_invertible

x, y, z = (HForm.variable(v) for v in "xyz")
L = HForm.linear
circle = HForm.conic(1, 1, -1, 0, 0, 0)

GOLDEN = {
    "cl1": (6, 1, {2: 3, 4: 4}),
    "cl2": (7, 1, {2: 5, 3: 2, 4: 4}),
    "cl3": (9, 1, {2: 6, 3: 4, 4: 6}),
    "st": (3, 2, {2: 1, 4: 3}),
}


@pytest.mark.parametrize("name", sorted(GOLDEN))
def test_golden_weak_combinatorics(name):
    d, k, counts = GOLDEN[name]
    assert weak_combinatorics(fixtures.load(name)) == WeakCombinatorics(d, k, counts)


def test_golden_conic_traces():
    assert conic_trace(fixtures.load("cl1"), "C0") == 4
    assert conic_trace(fixtures.load("cl2"), "C0") == 6
    assert conic_trace(fixtures.load("cl3"), "C0") == 6
    st = fixtures.load("st")
    assert [conic_trace(st, c) for c in ("C0", "C1")] == [4, 4]


def test_weak_combinatorics_formatting():
    wc = WeakCombinatorics.from_sequence(6, 1, [3, 0, 4])
    assert str(wc) == "C(6,1;3,0,4)"
    assert wc.sequence() == [3, 0, 4] and wc.t == 4 and wc.n(3) == 0


def test_validate_normalizes():
    arr = validate(Arrangement([L(-2, 0, 0), L(0, 3, 3)], [HForm.conic(-2, -2, 2, 0, 0, 0)]))
    assert arr.lines == (L(1, 0, 0), L(0, 1, 1))
    assert arr.conics == (circle,)


@pytest.mark.parametrize("lines,conics,err", [
    ([HForm(1)], [], ZeroForm),
    ([x * y], [], InvalidComponent),
    ([x, L(2, 0, 0)], [], DuplicateComponent),
    ([x], [x * y], SingularConic),
    ([x], [x * x], SingularConic),
])
def test_validate_errors(lines, conics, err):
    with pytest.raises(err):
        validate(Arrangement(lines, conics))


def test_tangent_line_is_rejected():
    arr = validate(Arrangement([L(1, 0, -1)], [circle]))
    with pytest.raises(NonOrdinarySingularity):
        singular_points(arr)


def test_tangent_conics_rejected():
    other = HForm.conic(1, 2, -1, 0, 0, 0)  # touches the circle at (1:0:1) and (-1:0:1)
    arr = validate(Arrangement([], [circle, other]))
    with pytest.raises(NonOrdinarySingularity):
        singular_points(arr)


def test_five_concurrent_lines_rejected():
    arr = validate(Arrangement([x, y, L(1, 1, 0), L(1, -1, 0), L(1, 2, 0)], []))
    with pytest.raises(MultiplicityTooHigh):
        singular_points(arr)


def test_irrational_points_counted_with_degree():
    # the line y = z meets x^2 + y^2 - 3 z^2 in the pair x = +-sqrt(2)
    arr = validate(Arrangement([L(0, 1, -1)], [HForm.conic(1, 1, -3, 0, 0, 0)]))
    pts = singular_points(arr)
    assert [(p.multiplicity, p.local_count, p.field_degree) for p in pts] == [(2, 2, 2)]
    assert conic_trace(arr, "C0") == 2


def test_two_conics_generic_four_points():
    arr = validate(Arrangement([], [circle, HForm.conic(1, 3, -2, 0, 0, 0)]))
    wc = weak_combinatorics(arr)
    assert wc == WeakCombinatorics(0, 2, {2: 4})


def test_point_coordinates_are_exact():
    for name in GOLDEN:
        arr = fixtures.load(name)
        for p in singular_points(arr):
            for cid, form in arr.components():
                on = form.evaluate(p.witness.coords) == 0
                assert on == (cid in p.incidence)


@pytest.mark.parametrize("name", sorted(GOLDEN))
def test_invariance_under_linear_changes(name):
    arr = fixtures.load(name)
    base = weak_combinatorics(arr)
    rng = random.Random(name)
    for _ in range(10):
        moved = validate(arr.transform(random_invertible(rng)))
        assert weak_combinatorics(moved, seed=rng.randrange(100)) == base


def test_seed_does_not_change_result():
    arr = fixtures.load("st")
    assert {weak_combinatorics(arr, seed=s) for s in range(5)} == {weak_combinatorics(arr)}


def test_random_arrangements_bezout_and_multiplicity():
    for arr in random_arrangements(25, seed=7):
        pts = singular_points(arr)
        wc = weak_combinatorics(arr, points=pts)
        assert bezout_check(wc).satisfied
        assert all(p.multiplicity <= 4 for p in pts)
        # a conic meets the other components in at most 2(d + 2(k - 1)) points
        for j in range(arr.k):
            assert conic_trace(arr, f"C{j}", points=pts) <= 2 * (arr.d + 2 * (arr.k - 1))


def test_line_arrangements_match_cross_product_oracle():
    rng = random.Random(3)
    checked = 0
    while checked < 30:
        d = rng.randint(2, 7)
        lines = [L(*[rng.randint(-2, 2) for _ in range(3)]) for _ in range(d)]
        try:
            arr = validate(Arrangement(lines, []))
            wc = weak_combinatorics(arr)
        except (ZeroForm, DuplicateComponent, MultiplicityTooHigh):
            continue
        expected = line_points_by_cross_products(list(arr.lines))
        assert dict(wc.counts) == expected
        checked += 1


def test_bezout_pairs():
    assert bezout_pairs(6, 1) == 27
    assert bezout_pairs(3, 2) == 19
    assert bezout_pairs(0, 2) == 4


def test_deletion_and_defining_form():
    arr = fixtures.load("cl1")
    rest = delete_component(arr, "C0")
    assert rest.d == 6 and rest.k == 0
    assert weak_combinatorics(rest) == WeakCombinatorics(6, 0, {2: 3, 3: 4})
    assert defining_form(arr).degree == 8
    with pytest.raises(UnknownComponent):
        delete_component(arr, "C3")
    with pytest.raises(UnknownComponent):
        delete_component(arr, "Q1")
    with pytest.raises(TooFewComponents):
        delete_component(Arrangement([x, y], []), "L0")
