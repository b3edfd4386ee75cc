"""Exact sums over binary words grouped by run statistics.

Any per-word weight that depends only on (r, u, b_left, b_right) can be
summed over [2]^n with O(n^2) terms by weighting each run class with its
word count. The expectation operators below are the normalised forms of the
same sums: ``expectation_r`` averages over the run count and
``expectation_ub`` over (u, b) given r.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass
from fractions import Fraction

from .zoo import count_strings_split, gbinom, run_profile


@dataclass(frozen=True)
class ClassFunction:
    """A weight f(r, u, b_left, b_right) on binary words."""

    evaluate: Callable[[int, int, int, int], Fraction]
    name: str = ""

    def __call__(self, r, u, b_left, b_right) -> Fraction:
        return Fraction(self.evaluate(r, u, b_left, b_right))

    @classmethod
    def of_rub(cls, fn: Callable[[int, int, int], Fraction], name: str = "") -> "ClassFunction":
        """Wrap a weight that only sees b = b_left + b_right."""
        return cls(lambda r, u, bl, br: fn(r, u, bl + br), name)

    def on_word(self, word: str) -> Fraction:
        p = run_profile(word)
        return self(p.r, p.u, p.b_left, p.b_right)


def run_classes(n: int):
    """Yield (r, u, b_left, b_right, count) for every nonempty class of [2]^n.

    Single-run words use the profile (1, 0, 0, 0) for every n, matching the
    convention that the inner expectation at r = 1 is f(1, 0, 0).
    """
    yield 1, 0, 0, 0, 2
    for r in range(2, n + 1):
        for u in range(r + 1):
            for bl in (0, 1):
                for br in (0, 1):
                    c = count_strings_split(n, r, u, bl, br)
                    if c:
                        yield r, u, bl, br, c


def class_sum(n: int, f: ClassFunction) -> Fraction:
    """Sum of f(profile(y)) over all y in [2]^n, by run classes."""
    if n < 1:
        raise ValueError("n must be positive")
    return sum((c * f(r, u, bl, br) for r, u, bl, br, c in run_classes(n)), Fraction(0))


def enumerate_sum(n: int, f: ClassFunction) -> Fraction:
    """Direct sum over all 2^n words; the oracle for :func:`class_sum`."""
    total = Fraction(0)
    for y in range(1 << n):
        word = format(y, f"0{n}b")
        p = run_profile(word)
        if p.r == 1:
            total += f(1, 0, 0, 0)
        else:
            total += f(p.r, p.u, p.b_left, p.b_right)
    return total


def expectation_r(n: int, g: Callable[[int], Fraction]) -> Fraction:
    """Average of g(r) when r is the run count of a uniform word in [2]^n."""
    return Fraction(
        sum(gbinom(n - 1, n - r) * Fraction(g(r)) for r in range(1, n + 1)), 2 ** (n - 1)
    )


def expectation_ub(n: int, r: int, h: Callable[[int, int, int], Fraction]) -> Fraction:
    """Average of h(r, u, b) over words of [2]^n with exactly r runs."""
    if r == 1:
        return Fraction(h(1, 0, 0))
    norm = gbinom(n - 1, n - r)
    if norm == 0:
        raise ValueError(f"no words of length {n} with {r} runs")
    total = Fraction(0)
    for u in range(r + 1):
        head = gbinom(n - r - 1, n - 2 * r + u)
        if not head:
            continue
        for b in range(3):
            c = head * gbinom(r - 2, u - b) * gbinom(2, b)
            if c:
                total += c * Fraction(h(r, u, b))
    return total / norm


def nested_expectation_sum(n: int, f: Callable[[int, int, int], Fraction]) -> Fraction:
    """2^n E_r[E_{u,b}[f]]; equals class_sum for weights that ignore the b split."""
    return 2**n * expectation_r(n, lambda r: expectation_ub(n, r, f))


# -- identities ---------------------------------------------------------------


def identity_r_terms(n: int, k: int) -> tuple[Fraction, Fraction, Fraction]:
    """(E_r[1/C(r+k-1, r-1)], closed middle form, upper bound 2^k / C(n+k-1, n-1))."""
    lhs = expectation_r(n, lambda r: Fraction(1, gbinom(r + k - 1, r - 1)))
    den = gbinom(n + k - 1, n - 1)
    middle = Fraction(sum(gbinom(n + k - 1, n - r) for r in range(1, n + 1)), 2 ** (n - 1) * den)
    return lhs, middle, Fraction(2**k, den)


def verify_identity_r(n: int, k: int) -> bool:
    if not 0 <= k <= 4:
        raise ValueError("k must be in 0..4")
    lhs, middle, bound = identity_r_terms(n, k)
    return lhs == middle and middle <= bound


def identity_u_terms(n: int, r: int, k: int) -> tuple[Fraction, Fraction]:
    den = gbinom(n - 1, n - k - 1)
    if den == 0:
        raise ValueError(f"identity needs k < n, got n={n}, k={k}")
    lhs = expectation_ub(n, r, lambda r_, u, b: gbinom(u, u - k))
    rhs = Fraction(gbinom(r, r - k) * gbinom(r - 1, r - k - 1), den)
    return lhs, rhs


def verify_identity_u(n: int, r: int, k: int) -> bool:
    lhs, rhs = identity_u_terms(n, r, k)
    return lhs == rhs


def identity_b_terms(n: int, r: int) -> tuple[Fraction, Fraction]:
    return expectation_ub(n, r, lambda r_, u, b: b), Fraction(2 * (r - 1), n - 1)


def verify_identity_b(n: int, r: int) -> bool:
    lhs, rhs = identity_b_terms(n, r)
    return lhs == rhs
