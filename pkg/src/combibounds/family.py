"""Substitution/erasure family: interpolating between Hamming and Singleton.

A_{q,n,a,b} erases a fixed set of a positions and makes up to b
substitutions elsewhere. It is input- and output-regular, so its covering
number is q^(n-a) over the Hamming ball volume in the surviving n-a
positions. With a = s - 2b every member protects against s "half errors";
b = s/2 is the Hamming bound and b = 0 the Singleton bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .report import BoundReport


def _check_qn(q: int, n: int):
    if q < 2 or n < 1:
        raise ValueError("need q >= 2 and n >= 1")


def ball_volume(q: int, m: int, b: int) -> int:
    """Number of q-ary words of length m within Hamming distance b of a point."""
    return sum(math.comb(m, i) * (q - 1) ** i for i in range(min(b, m) + 1))


def hs_value(q: int, n: int, a: int, b: int) -> Fraction:
    _check_qn(q, n)
    if not (0 <= a <= n and b >= 0):
        raise ValueError(f"need 0 <= a <= n and b >= 0, got a={a}, b={b}")
    return Fraction(q ** (n - a), ball_volume(q, n - a, b))


def hs_kappa(q: int, n: int, a: int, b: int) -> BoundReport:
    """kappa*(A_{q,n,a,b}), an upper bound on the size of any code for it."""
    return BoundReport(
        "hs-kappa", "upper-on-p", hs_value(q, n, a, b), params={"q": q, "n": n, "a": a, "b": b}
    )


def _check_s(n: int, s: int):
    if s % 2 or not 0 <= s <= n - 1:
        raise ValueError(f"s must be even with 0 <= s <= n-1, got s={s}, n={n}")


def split_scan(q: int, n: int, s: int) -> list[int]:
    """All b in 0..s/2 minimising kappa*(A_{q,n,s-2b,b}) (direct evaluation)."""
    _check_s(n, s)
    vals = {b: hs_value(q, n, s - 2 * b, b) for b in range(s // 2 + 1)}
    low = min(vals.values())
    return [b for b, v in vals.items() if v == low]


def split_formula(q: int, n: int, s: int) -> int:
    """Closed-form optimal number of substitutions for s half errors.

    Where the objective is flat across two values of b, this returns the
    larger one.
    """
    _check_s(n, s)
    if q == 2 or s * q <= 2 * (n - 1):
        return s // 2
    return (n - 1 - s) // (q - 2)


def hs_optimal_split(q: int, n: int, s: int) -> tuple[int, BoundReport]:
    """Best erasure/substitution split for s; the scan double-checks the formula."""
    b = split_formula(q, n, s)
    scan = split_scan(q, n, s)
    report = BoundReport(
        "hs-optimal",
        "upper-on-p",
        hs_value(q, n, s - 2 * b, b),
        params={"q": q, "n": n, "s": s, "b": b, "scan_minimizers": scan, "agrees": b in scan},
    )
    return b, report


def lemma3_condition(q: int, n: int, a: int, b: int) -> bool:
    return b >= 1 and a + 2 <= n and a + q * b <= n - 1


def lemma3_holds(q: int, n: int, a: int, b: int) -> bool:
    """Trading one substitution for two erasures does not help when a + qb <= n-1."""
    if not lemma3_condition(q, n, a, b):
        raise ValueError("requires a + q*b <= n-1")
    return hs_value(q, n, a, b) <= hs_value(q, n, a + 2, b - 1)


def even_s(delta: float, n: int) -> int:
    s = min(math.floor(delta * n), n - 1)
    return s - (s % 2)


def hs_asymptote(q: int, delta: float, n: int) -> float:
    """(1/n) ln of the optimised bound at s = floor(delta n), rounded down to even."""
    s = even_s(delta, n)
    b = split_formula(q, n, s)
    v = hs_value(q, n, s - 2 * b, b)
    return (math.log(v.numerator) - math.log(v.denominator)) / n


def limit_exponent(q: int, delta: float) -> float:
    """The large-n value (1 - delta) ln(q - 1) on the Singleton-side branch."""
    return (1 - delta) * math.log(q - 1)


@dataclass(frozen=True)
class FamilyPoint:
    s: int
    delta: Fraction
    hamming: Fraction
    singleton: Fraction
    optimized: Fraction
    b_star: int

    def exponent(self, which: str, n: int) -> float:
        v = getattr(self, which)
        return (math.log(v.numerator) - math.log(v.denominator)) / n


def family_curve(q: int, n: int) -> list[FamilyPoint]:
    """One point per even s in 0..n-1."""
    _check_qn(q, n)
    out = []
    for s in range(0, n, 2):
        b = split_formula(q, n, s)
        out.append(
            FamilyPoint(
                s,
                Fraction(s, n),
                hs_value(q, n, 0, s // 2),
                hs_value(q, n, s, 0),
                hs_value(q, n, s - 2 * b, b),
                b,
            )
        )
    return out
