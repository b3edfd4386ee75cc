"""Closed-form covers for the single-deletion and single-grain channels.

The deletion channel with input length n has outputs [2]^(n-1), so every
cover weight for "n" is a class sum over words of length n - 1. The grain
channel has X = Y = [2]^n.
"""

from __future__ import annotations

from fractions import Fraction

from .channel import Certificate, WeightVec
from .report import BoundReport
from .runs import ClassFunction, class_sum
from .zoo import MAX_EXPLICIT_N, run_profile


def _thm1(r: int, u: int, b: int) -> Fraction:
    bump = Fraction(max(2 * u - b - 2, 0), (r + 2) * (r + 1))
    return 1 / (r * (1 + bump))


def _fvy(r: int, u: int, b: int) -> Fraction:
    if u - b >= 2:
        return Fraction(1, r) * (1 - Fraction(u - b, r * r))
    return Fraction(1, r)


def _grain(r: int, u: int, bl: int, br: int) -> Fraction:
    bump = Fraction(2 * u - 2 * br - bl - 2, (r + 2) * (r + 1))
    return 1 / (r * (1 + bump))


THM1_WEIGHT = ClassFunction.of_rub(_thm1, "two-step local degree cover (deletion)")
FVY_WEIGHT = ClassFunction.of_rub(_fvy, "FVY cover (deletion)")
INV_RUNS = ClassFunction.of_rub(lambda r, u, b: Fraction(1, r), "one-step local degree cover")
GRAIN_WEIGHT = ClassFunction(_grain, "two-step local degree cover (grain)")


def _check_n(n: int, low: int = 2):
    if n < low:
        raise ValueError(f"n must be at least {low}, got {n}")


def word_vector(length: int, f: ClassFunction, side: str = "output") -> WeightVec:
    """Evaluate f on the run profile of every word of the given length."""
    if length > MAX_EXPLICIT_N:
        raise ValueError(f"explicit vectors are limited to length {MAX_EXPLICIT_N}")
    vals = []
    for y in range(1 << length):
        p = run_profile(format(y, f"0{length}b"))
        vals.append(f(p.r, p.u, p.b_left, p.b_right))
    return WeightVec(side, vals)


def deletion_cover_thm1_vector(n: int) -> WeightVec:
    _check_n(n)
    return word_vector(n - 1, THM1_WEIGHT)


def deletion_cover_thm1_weight(n: int) -> BoundReport:
    """Weight of the two-step local degree cover of the n-bit deletion channel."""
    _check_n(n)
    return BoundReport(
        "thm1", "upper-on-p", class_sum(n - 1, THM1_WEIGHT), iterations=2, params={"n": n}
    )


def deletion_fvy_vector(n: int) -> WeightVec:
    _check_n(n)
    return word_vector(n - 1, FVY_WEIGHT)


def fvy_weight_lower_bound(n: int) -> Fraction:
    """Analytic lower bound on the FVY cover weight (needs n >= 3)."""
    _check_n(n, 3)
    return Fraction(2**n - 2, n + 1) * (
        1 + Fraction(1, n - 1) - Fraction(3, (n - 1) * (n - 2))
    )


def deletion_fvy_weight(n: int) -> BoundReport:
    _check_n(n)
    value = class_sum(n - 1, FVY_WEIGHT)
    params: dict = {"n": n}
    if n >= 3:
        lb = fvy_weight_lower_bound(n)
        params["analytic_lower"] = lb
        params["analytic_lower_holds"] = value >= lb
    return BoundReport("fvy", "upper-on-p", value, params=params)


def deletion_kk_bound(n: int) -> BoundReport:
    """One local degree step from the all-ones cover: (2^n - 2)/(n - 1)."""
    _check_n(n)
    return BoundReport(
        "kk", "upper-on-p", Fraction(2**n - 2, n - 1), iterations=1, params={"n": n}
    )


def deletion_thm2_bound(n: int) -> BoundReport:
    """(2^n/(n+1)) (1 + 26/(n(n-1))), with a flag comparing it to the two-step cover."""
    _check_n(n)
    value = Fraction(2**n, n + 1) * (1 + Fraction(26, n * (n - 1)))
    thm1 = class_sum(n - 1, THM1_WEIGHT)
    return BoundReport(
        "thm2",
        "upper-on-p",
        value,
        params={"n": n, "dominates_two_step_cover": thm1 <= value},
    )


def grain_cover_thm4(n: int, explicit: bool = True) -> tuple[WeightVec | None, BoundReport]:
    """Two-step local degree cover of the n-bit grain channel and its weight.

    The weight comes from run-class sums; the explicit vector (indexed like
    ``grain_channel(n)`` outputs) is built only when ``explicit`` is set.
    """
    _check_n(n)
    weight = class_sum(n, GRAIN_WEIGHT)
    vec = word_vector(n, GRAIN_WEIGHT) if explicit else None
    cert = Certificate("cover", vec, weight) if vec is not None else None
    if vec is not None and vec.total() != weight:
        raise AssertionError("grain cover: class sum disagrees with explicit vector")
    return vec, BoundReport("thm4", "upper-on-p", weight, certificate=cert, params={"n": n})


def deletion_table_closed_forms(n: int) -> dict:
    """Floors of the closed-form columns for one table row."""
    return {
        "thm1": deletion_cover_thm1_weight(n).floor,
        "fvy": deletion_fvy_weight(n).floor,
        "kk": deletion_kk_bound(n).floor,
        "thm2": deletion_thm2_bound(n).floor,
    }
