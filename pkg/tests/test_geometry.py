from fractions import Fraction

from hypothesis import given, strategies as st

from patchentropy.geometry import (
    ScaleV,
    box,
    c_connected_to_zero,
    closure_difference,
    cube,
    format_region,
    integer_points,
    intersection,
    interval,
    k_boundary,
    min_connecting_c,
    minkowski_sum,
    parse_region,
    point_set,
    region_from_json,
    region_to_json,
    sym_diff,
    translate,
    union,
    volume,
)
from patchentropy.exact import floor_exp

F = Fraction


def test_volume_examples():
    assert volume(union(interval(0, 1), interval(2, 3))) == 2
    assert volume(union(interval(0, 2), interval(1, 3))) == 3
    assert volume(union(interval(0, 5), point_set([7, 9, F(1, 2)]))) == 5


def test_minkowski_examples():
    e = F(1, 8)
    assert minkowski_sum(interval(0, 1), interval(-e, e)) == interval(-e, 1 + e)
    assert minkowski_sum(union(interval(0, 1), interval(5, 6)), interval(0, 1)) == \
        union(interval(0, 2), interval(5, 7))
    assert minkowski_sum(box((0, 0), (1, 1)), box((0, 0), (1, 1))) == box((0, 0), (2, 2))


def test_sym_diff_examples():
    assert volume(sym_diff(interval(0, 4), interval(0, 4))) == 0
    assert volume(sym_diff(interval(0, 10), translate(interval(0, 10), F(3, 2)))) == 3
    assert volume(sym_diff(interval(0, 1), interval(2, 3))) == 2


def test_k_boundary_of_centred_interval():
    for n in (2, 5, 9):
        kb = k_boundary(interval(-1, 1), interval(-n, n))
        assert kb == union(interval(-n - 1, -n + 1), interval(n - 1, n + 1))
        assert volume(kb) == 4


def test_k_boundary_point_kernel():
    assert volume(k_boundary(point_set([0]), interval(0, 3))) == 0


def test_k_boundary_of_interval_with_dust():
    # the unit neighbourhoods of consecutive integers overlap, so the
    # boundary is [0, floor(e^n) + 1] minus the open core (2, n - 1)
    for n in (2, 3, 4, 6):
        A = union(interval(1, n), integer_points(1, floor_exp(n)))
        assert volume(k_boundary(interval(-1, 1), A)) == floor_exp(n) + 1 - max(0, n - 3)


def test_k_boundary_in_two_dimensions():
    K = cube(1, 2)
    A = box((0, 0), (4, 4))
    # (K + A) minus the interior shrunk by K
    assert volume(k_boundary(K, A)) == 36 - 4


def test_connectedness_examples():
    A = union(interval(0, 1), interval(F(3, 2), 2))
    assert not c_connected_to_zero(A, F(2, 5))
    assert c_connected_to_zero(A, F(1, 2))
    assert min_connecting_c(A) == F(1, 2)
    assert min_connecting_c(interval(0, 7)) == 0
    assert min_connecting_c(interval(5, 7)) == 5


def test_connectedness_in_two_dimensions():
    A = union(box((0, 0), (1, 1)), box((3, 0), (4, 1)))
    assert min_connecting_c(A) == 2


def test_scale_v_is_open():
    V = ScaleV(F(1, 4))
    assert V.contains((F(1, 5),)) and not V.contains((F(1, 4),))


def test_text_and_json_roundtrip():
    A = parse_region("[0,1] u [2,5/2] u {4..9}")
    assert parse_region(format_region(A)) == A
    assert region_from_json(region_to_json(A)) == A
    B = parse_region("[0,1]x[-1/2,1/2]")
    assert B.dim == 2 and volume(B) == 1


ends = st.fractions(min_value=-20, max_value=20, max_denominator=8)


@st.composite
def interval_unions(draw):
    parts = draw(st.lists(st.tuples(ends, ends), min_size=1, max_size=5))
    return union(*[interval(min(a, b), max(a, b)) for a, b in parts])


@given(interval_unions(), interval_unions())
def test_inclusion_exclusion(A, B):
    assert volume(union(A, B)) == volume(A) + volume(B) - volume(intersection(A, B))


@given(interval_unions(), interval_unions())
def test_sym_diff_volume(A, B):
    assert volume(sym_diff(A, B)) == volume(A) + volume(B) - 2 * volume(intersection(A, B))


@given(interval_unions(), interval_unions())
def test_difference_volume(A, B):
    assert volume(closure_difference(A, B)) == volume(A) - volume(intersection(A, B))


@given(interval_unions(), ends)
def test_translation_preserves_volume(A, g):
    assert volume(translate(A, g)) == volume(A)


@st.composite
def boxes2d(draw):
    parts = []
    for _ in range(draw(st.integers(1, 4))):
        x0, y0 = draw(st.integers(-5, 5)), draw(st.integers(-5, 5))
        w, h = draw(st.integers(1, 4)), draw(st.integers(1, 4))
        parts.append(box((x0, y0), (x0 + w, y0 + h)))
    return union(*parts)


def _cells(A):
    return {(x, y) for x in range(-6, 12) for y in range(-6, 12)
            if any(b.contains((x + F(1, 2), y + F(1, 2))) for b in A.boxes)}


@given(boxes2d(), boxes2d())
def test_box_volume_matches_unit_cells(A, B):
    assert volume(A) == len(_cells(A))
    assert volume(union(A, B)) == len(_cells(A) | _cells(B))
    assert volume(sym_diff(A, B)) == len(_cells(A) ^ _cells(B))
