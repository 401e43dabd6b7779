from fractions import Fraction

import pytest

from patchentropy.exact import make
from patchentropy.geometry import box, interval, parse_region
from patchentropy.pointsets import (
    CutProject,
    GeneratorError,
    HalflineMix,
    Lattice,
    Punctured,
    ShiftedUnion,
    WordSet,
    block_start,
    champernowne_bit,
    make_generator,
    verify_delone,
)
from patchentropy.patches import enumerate_patches, patch_count

F = Fraction


def flat(points):
    return [p[0] for p in points]


def test_lattice_queries():
    assert flat(Lattice().query(interval(0, 3))) == [0, 1, 2, 3]
    assert Lattice(2).query(box((0, 0), (1, 1))) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert flat(Lattice(1, F(1, 2)).query(interval(0, 1))) == [0, F(1, 2), 1]


def test_shifted_union_queries():
    om = ShiftedUnion(F(1, 8))
    assert flat(om.query(interval(0, 1))) == [0, F(1, 8), 1]
    assert flat(om.query(interval(F(1, 8), F(1, 4)))) == [F(1, 8)]
    assert flat(om.query(interval(-1, 0))) == [-1, F(-7, 8), 0]


def test_halfline_queries():
    om = HalflineMix()
    a = make(0, 1, "sqrt2m1")
    assert flat(om.query(interval(0, 1))) == [0, a, 2 * a]
    assert flat(om.query(interval(-2, 0))) == [-2, -1, 0]
    # 24 alpha < 10 < 10.1 < 25 alpha
    assert om.query(interval(10, F(101, 10))) == []
    got = flat(om.query(interval(10, 12)))
    assert got == [k * a for k in range(25, 29)]


def test_champernowne_prefix():
    # 0 1 00 01 10 11 000 ...
    assert [champernowne_bit(n) for n in range(1, 11)] == [0, 1, 0, 0, 0, 1, 1, 0, 1, 1]
    assert block_start(1) == 1 and block_start(2) == 3 and block_start(3) == 11


def test_word_set_queries():
    om = WordSet()
    got = flat(om.query(interval(1, 6)))
    assert got == [F(3, 2), 2, F(5, 2), F(7, 2), F(9, 2), F(11, 2), 6]
    assert flat(om.query(interval(F(1, 2), F(1, 2)))) == [F(1, 2)]


def test_punctured_queries():
    om = Punctured()
    assert flat(om.query(interval(-1, 1))) == [-1, 1]
    assert flat(om.query(interval(5, 7))) == [5, 6, 7]
    assert om.query(interval(0, 0)) == []


def test_cut_project_two_tiles():
    om = CutProject()
    pts = flat(om.query(interval(0, 100)))
    gaps = {q - p for p, q in zip(pts, pts[1:])}
    assert len(gaps) == 2
    small, large = sorted(gaps)
    tau = make(0, 1, "golden") + 1
    assert large == small * tau


def test_cut_project_degenerate_window():
    om = CutProject("golden", (F(1, 3), F(1, 3)))
    assert len(om.query(interval(-50, 50))) <= 1


def test_delone_reports():
    rep = verify_delone(Lattice(), interval(0, 100))
    assert rep.min_gap == 1 and rep.max_gap == F(1, 2) and rep.discrete_ok and rep.dense_ok
    rep = verify_delone(ShiftedUnion(F(1, 8)), interval(-10, 10))
    assert rep.min_gap == F(1, 8) and rep.discrete_ok and rep.dense_ok
    rep = verify_delone(WordSet(), interval(0, 60))
    assert rep.min_gap == F(1, 2) and rep.max_gap <= F(1, 2) and rep.discrete_ok and rep.dense_ok
    for om in (Punctured(), HalflineMix(), CutProject()):
        rep = verify_delone(om, interval(-20, 20))
        assert rep.discrete_ok and rep.dense_ok


def test_registry():
    assert isinstance(make_generator("word-set"), WordSet)
    assert make_generator("shifted_union", {"eps": "1/5"}).eps == F(1, 5)
    with pytest.raises(GeneratorError):
        make_generator("nothing")


@pytest.mark.parametrize("text", ["[0,1]", "[0,3]", "[-2,2]", "[1/2,3]", "[-1/4,11/4]",
                                  "[0,1] u [5/2,4]", "{0..4}", "[-3,0]"])
def test_word_set_closed_form_matches_enumeration(text):
    om = WordSet()
    A = parse_region(text)
    assert om.structural_count(A) == enumerate_patches(om, A).count


def test_word_set_count_on_intervals():
    om = WordSet()
    for m in range(1, 7):
        assert patch_count(om, interval(0, m), "enumerate")[0] == 2 ** (m + 1) - 1


def test_lattice_has_one_patch():
    for m in range(1, 6):
        assert patch_count(Lattice(), interval(0, m), "enumerate")[0] == 1
