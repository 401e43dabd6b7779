from fractions import Fraction

import pytest

from patchentropy.geometry import cube, interval, minkowski_sum, volume, k_boundary
from patchentropy.windows import (
    SequenceError,
    comb_teeth,
    connected_min_c,
    connectedness_report,
    diagnostics,
    ergodic_ratio,
    folner_ratio,
    make_sequence,
    shift_for,
    vanhove_ratio,
)

F = Fraction
K1 = interval(-1, 1)


def test_basic_sequences():
    assert make_sequence("intervals_0n")(5) == interval(0, 5)
    assert make_sequence("shifted_intervals", {"kappa": "1/2", "rounding": "ceil"})(4) == interval(8, 12)
    assert make_sequence("folner_comb", {"rho": "1"})(6) == interval(0, 6)
    assert make_sequence("centered_boxes", {"dim": 2})(3) == cube(3, 2)


def test_rejects_bad_parameters():
    with pytest.raises(SequenceError):
        make_sequence("folner_comb", {"rho": "3/2"})
    with pytest.raises(SequenceError):
        make_sequence("no_such_sequence")


def test_vanhove_examples():
    seq = make_sequence("centered_boxes")
    for n in (3, 10, 25):
        assert vanhove_ratio(seq, K1, n) == F(4, 2 * n)
    assert vanhove_ratio(make_sequence("remark_comb"), K1, 3) >= 5
    assert vanhove_ratio(make_sequence("folner_comb", {"rho": "1/2"}), K1, 50) > F(1, 2)


def test_folner_examples():
    seq = make_sequence("intervals_0n")
    for n in (4, 12):
        assert folner_ratio(seq, K1, n) <= F(4, n)
    assert folner_ratio(make_sequence("ergodic_dust", {"rho": "1/2"}), K1, 40) > F(1, 10)


def test_ergodic_examples():
    assert ergodic_ratio(make_sequence("ergodic_dust", {"rho": "1/2"}), F(1, 3), 60) < F(1, 5)
    assert ergodic_ratio(make_sequence("remark_comb"), F(1, 2), 20) < F(1, 5)
    assert ergodic_ratio(make_sequence("folner_comb", {"rho": "1/2"}), 0, 9) == 0


def test_connectedness():
    assert connected_min_c(make_sequence("intervals_0n"), 7) == 0
    for n in (5, 20, 40):
        assert connected_min_c(make_sequence("folner_comb", {"rho": "1/2"}), n) <= 1
    for kappa in ("3/10", "1/2"):
        seq = make_sequence("shifted_intervals", {"kappa": kappa})
        for n in (4, 8, 12):
            assert connected_min_c(seq, n) == shift_for(F(kappa), n)
        assert connectedness_report(seq, range(4, 13)).unbounded
    assert not connectedness_report(make_sequence("shifted_intervals", {"kappa": "0"}), range(4, 13)).unbounded


def test_dilated_comb_becomes_van_hove():
    seq = make_sequence("folner_comb", {"rho": "1/2"})
    ratios = []
    for n in range(10, 81, 10):
        B = minkowski_sum(cube(1), seq(n))
        ratios.append(volume(k_boundary(K1, B)) / volume(B))
    assert all(a > b for a, b in zip(ratios, ratios[1:]))
    A = seq(80)
    assert abs(volume(minkowski_sum(cube(1), A)) / volume(A) - 1) < F(1, 10)


def test_volumes_grow():
    # the built-in Van Hove sequences (the combs and dusts are not Van Hove)
    seqs = [make_sequence("intervals_0n"), make_sequence("centered_boxes"),
            make_sequence("centered_boxes", {"dim": 2}), make_sequence("shifted_intervals", {"kappa": "1/10"})]
    for seq in seqs:
        assert volume(seq(101)) > 100


def test_comb_teeth_shape():
    teeth = comb_teeth(5)
    assert len(teeth) == 10
    assert teeth[0].lo == (F(1, 8),) and teeth[0].hi == (F(3, 8),)


def test_diagnostics_rows():
    rows = diagnostics(make_sequence("remark_comb"), [1, 2, 3], K1, F(1, 2))
    assert rows[0].vanhove_ratio is None
    assert rows[2].vanhove_ratio == F(21, 2) and rows[2].ergodic_ratio == F(1, 2)


def test_bare_comb_folner_ratio_closed_form():
    # 2n - 1 notches of width 2/(n+3) plus the two end pieces of length k,
    # over the comb volume n(n-1)/(n+3)
    seq = make_sequence("folner_comb", {"rho": "0"})
    for k in (1, 2):
        for n in (5, 9, 20, 50):
            assert folner_ratio(seq, interval(-k, k), n) == F(2 * k * (n + 3) + 4 * n - 2, n * (n - 1))
