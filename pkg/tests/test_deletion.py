from fractions import Fraction

import pytest

from combibounds.bounds import ldu_iterated
from combibounds.channel import check_cover
from combibounds.deletion import (
    FVY_WEIGHT,
    deletion_cover_thm1_vector,
    deletion_cover_thm1_weight,
    deletion_fvy_vector,
    deletion_fvy_weight,
    deletion_kk_bound,
    deletion_thm2_bound,
    fvy_weight_lower_bound,
    grain_cover_thm4,
)
from combibounds.runs import enumerate_sum
from combibounds.zoo import deletion_channel, grain_channel


def test_two_step_cover_weights():
    assert deletion_cover_thm1_weight(5).floor == 7
    assert deletion_cover_thm1_weight(24).floor == 697865


def test_two_step_cover_n20_just_below_integer():
    # just below an integer, so the floor is 52719
    v = deletion_cover_thm1_weight(20).exact
    assert 52719 < v < 52720
    assert 52720 - v < Fraction(1, 1000)


def test_asymptotic_bound_values():
    assert deletion_thm2_bound(14).floor == 1248
    assert deletion_thm2_bound(24).floor == 702697
    assert deletion_thm2_bound(5).floor == 12
    assert all(deletion_thm2_bound(n).params["dominates_two_step_cover"] for n in range(2, 25))


def test_fvy_cover_weights():
    assert deletion_fvy_weight(11).floor == 197
    assert deletion_fvy_weight(24).floor == 705511
    for n in range(3, 25):
        assert deletion_fvy_weight(n).exact >= fvy_weight_lower_bound(n)


def test_kk_is_one_step():
    for n in range(3, 10):
        assert deletion_kk_bound(n).exact == ldu_iterated(deletion_channel(n), k=1).exact


@pytest.mark.parametrize("n", range(2, 11))
def test_explicit_vectors(n):
    A = deletion_channel(n)
    thm1 = deletion_cover_thm1_vector(n)
    assert check_cover(A, thm1)
    assert thm1.total() == deletion_cover_thm1_weight(n).exact
    fvy = deletion_fvy_vector(n)
    assert check_cover(A, fvy)
    assert fvy.total() == enumerate_sum(n - 1, FVY_WEIGHT)


def test_grain_cover_n2():
    vec, rep = grain_cover_thm4(2)
    A = grain_channel(2)
    assert check_cover(A, vec)
    assert vec[A.output_labels.index("00")] == Fraction(3, 2)


@pytest.mark.parametrize("n", range(2, 13))
def test_grain_cover_feasible(n):
    vec, rep = grain_cover_thm4(n)
    assert check_cover(grain_channel(n), vec)
    assert rep.certificate.verify(grain_channel(n))


def test_grain_weight_without_vector():
    vec, rep = grain_cover_thm4(22, explicit=False)
    assert vec is None and rep.exact > 0


def test_grain_envelope():
    prev = None
    for n in range(8, 21):
        _, rep = grain_cover_thm4(n, explicit=False)
        ratio = rep.exact * (n + 2) / 2 ** (n + 1)
        assert 0 < ratio - 1 <= Fraction(26, n * n)
        if prev is not None:
            assert ratio < prev
        prev = ratio


def test_small_n_rejected():
    with pytest.raises(ValueError):
        deletion_cover_thm1_weight(1)
