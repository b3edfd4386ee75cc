"""Sphere-packing upper bounds and sphere-covering lower bounds.

Upper bounds on the code size p(A) come from feasible fractional output
covers (``z >= 0``, ``Az >= 1``); lower bounds on p*(A) come from feasible
fractional input packings. Every bound takes a positive weight vector ``t``
that defaults to all ones. Graph bounds (Caro-Wei, Motzkin-Straus, Turán)
use ``B = adjacency + I``.

All arithmetic is exact (``fractions.Fraction``).
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from fractions import Fraction

from .channel import (
    Certificate,
    Channel,
    ChannelError,
    Graph,
    WeightVec,
    apply,
    apply_transpose,
)
from .report import BoundReport


class BoundError(ValueError):
    """A bound's positivity precondition does not hold for the given t."""


def _weights(t, size: int, side: str) -> list[Fraction]:
    if t is None:
        return [Fraction(1)] * size
    vals = list(t.values if isinstance(t, WeightVec) else t)
    if len(vals) != size:
        raise ChannelError(f"t has length {len(vals)}, expected {size} ({side} side)")
    vals = [Fraction(v) for v in vals]
    if any(v < 0 for v in vals):
        raise BoundError("t must be nonnegative")
    return vals


# -- upper bounds (covers) ---------------------------------------------------


def mdu(A: Channel, t=None) -> BoundReport:
    """Minimum degree upper bound: scale t until it covers the weakest input."""
    tv = _weights(t, A.num_outputs, "output")
    At = apply(A, tv)
    low = min(At)
    if low <= 0:
        raise BoundError("mdu needs (At)_x > 0 for every input")
    z = WeightVec("output", [v / low for v in tv])
    value = sum(tv, Fraction(0)) / low
    return BoundReport("mdu", "upper-on-p", value, Certificate("cover", z, value))


def local_degree_step(A: Channel, z) -> WeightVec:
    """phi_A(z)_y = z_y / min over x in N(y) of (Az)_x."""
    zv = _weights(z, A.num_outputs, "output")
    Az = apply(A, zv)
    if any(s <= 0 for s in Az):
        raise BoundError("local degree step needs Az > 0")
    return WeightVec(
        "output", [zv[y] / min(Az[x] for x in col) for y, col in enumerate(A.output_nbrs)]
    )


def ldu_iterated(A: Channel, t=None, k: int | None = 1, max_iter: int = 1000) -> BoundReport:
    """Weight of phi^k(t). ``k=None`` iterates until phi(z) = z (or ``max_iter``)."""
    if k is not None and k < 1:
        raise ValueError("k must be at least 1")
    z = WeightVec("output", _weights(t, A.num_outputs, "output"))
    steps = 0
    fixpoint = False
    limit = max_iter if k is None else k
    while steps < limit:
        nz = local_degree_step(A, z)
        steps += 1
        fixpoint = nz == z
        z = nz
        if fixpoint and k is None:
            break
    value = z.total()
    params = {"k": k if k is not None else "inf"}
    if k is None:
        params["fixpoint"] = fixpoint
    return BoundReport(
        f"ldu:{k if k is not None else 'inf'}",
        "upper-on-p",
        value,
        Certificate("cover", z, value),
        iterations=steps,
        params=params,
    )


def dsu(A: Channel, t=None) -> BoundReport:
    """Degree sequence upper bound with the matching dual cover.

    Fractional knapsack over inputs sorted by (At)_x: inputs strictly below
    the threshold degree d are taken whole, inputs at d share what is left
    of the budget 1^T t. The certificate is the cover
    z_y = t_y (1/d + sum over x in N(y) of max(1/(At)_x - 1/d, 0)),
    which dominates phi_A(t) componentwise; ``params['dominates_phi']``
    records that check.
    """
    tv = _weights(t, A.num_outputs, "output")
    At = apply(A, tv)
    if any(s <= 0 for s in At):
        raise BoundError("dsu needs (At)_x > 0 for every input")
    budget = sum(tv, Fraction(0))
    d = _dsu_threshold_degree(At, budget)
    inv_d = Fraction(0) if d is None else 1 / d
    below = [x for x, s in enumerate(At) if d is None or s < d]
    used = sum((At[x] for x in below), Fraction(0))
    value = Fraction(len(below)) + (budget - used) * inv_d
    z = WeightVec(
        "output",
        [
            tv[y] * (inv_d + sum((max(1 / At[x] - inv_d, Fraction(0)) for x in col), Fraction(0)))
            for y, col in enumerate(A.output_nbrs)
        ],
    )
    if z.total() != value:
        raise AssertionError("dsu: dual cover weight differs from primal value")
    phi = local_degree_step(A, tv)
    return BoundReport(
        "dsu",
        "upper-on-p",
        value,
        Certificate("cover", z, value),
        params={"threshold": d if d is not None else "inf", "dominates_phi": phi <= z},
    )


def _dsu_threshold_degree(At: Sequence[Fraction], budget: Fraction) -> Fraction | None:
    """The degree d with sum_{s<d} s <= budget <= sum_{s<=d} s; None if all inputs fit."""
    levels: dict[Fraction, Fraction] = {}
    for s in At:
        levels[s] = levels.get(s, Fraction(0)) + s
    cum = Fraction(0)
    for d in sorted(levels):
        if cum <= budget <= cum + levels[d]:
            if cum + levels[d] == budget and d != max(levels):
                # whole level fits exactly; keep it below the next threshold
                cum += levels[d]
                continue
            return d
        cum += levels[d]
    return None


def dsu_threshold(A: Channel, d) -> BoundReport:
    """Degree-sequence bound for a simplified sequence (inputs below d count as degree 1).

    Inputs of degree >= d are treated as degree exactly d and the rest as
    degree 1, with the output count |Y| as the budget, giving
    min(|S|, |Y|) + max(|Y| - |S|, 0)/d, capped at |X|, where S is the set
    of inputs of degree < d. Always at least ``dsu(A)``.
    """
    d = Fraction(d)
    if d < 1:
        raise BoundError("threshold degree must be at least 1")
    low = sum(1 for row in A.input_nbrs if len(row) < d)
    ny = A.num_outputs
    value = min(Fraction(min(low, ny)) + Fraction(max(ny - low, 0)) / d, Fraction(A.num_inputs))
    # (|X| - |S|)/d + |S| is kept for comparison; it can undershoot dsu
    xs_form = Fraction(A.num_inputs - low) / d + low
    return BoundReport(
        "dsu-threshold",
        "upper-on-p",
        value,
        params={"d": d, "low_degree_inputs": low, "xs_form": xs_form},
    )


def edge_only_upper(A: Channel) -> BoundReport:
    """kappa(A) <= |X| - |E|/|Y| + 1, using only the edge count."""
    value = A.num_inputs - Fraction(A.num_edges, A.num_outputs) + 1
    return BoundReport("edge-upper", "upper-on-kappa", value)


def edge_only_upper_tight(num_inputs: int, num_outputs: int, packing_size: int) -> Channel:
    """Channel meeting the edge-only cover bound with equality.

    Inputs 0..s-1 get disjoint neighbourhoods partitioning Y (so they form a
    code); every other input sees all of Y. Then |E| = |Y| (|X| - s + 1).
    """
    s = packing_size
    if not 1 <= s <= min(num_inputs, num_outputs):
        raise ValueError("need 1 <= |S| <= min(|X|, |Y|)")
    nbrs = [[y for y in range(num_outputs) if y % s == x] for x in range(s)]
    nbrs += [list(range(num_outputs)) for _ in range(num_inputs - s)]
    return Channel.from_neighborhoods(nbrs, num_outputs)


# -- lower bounds (packings) -------------------------------------------------


def mdl(A: Channel, t=None) -> BoundReport:
    """Maximum degree lower bound on p*(A): scale t until the busiest output is full."""
    tv = _weights(t, A.num_inputs, "input")
    ATt = apply_transpose(A, tv)
    high = max(ATt)
    if high <= 0:
        raise BoundError("mdl needs t != 0")
    w = WeightVec("input", [v / high for v in tv])
    value = sum(tv, Fraction(0)) / high
    return BoundReport("mdl", "lower-on-kappa-star", value, Certificate("packing", w, value))


def ldl(A: Channel, t=None) -> BoundReport:
    """Local degree lower bound: w_x = t_x / max over y in N(x) of (A^T t)_y."""
    tv = _weights(t, A.num_inputs, "input")
    ATt = apply_transpose(A, tv)
    vals = []
    for x, row in enumerate(A.input_nbrs):
        m = max(ATt[y] for y in row)
        if m <= 0:
            raise BoundError(f"ldl needs (A^T t)_y > 0 for some y in N({x})")
        vals.append(tv[x] / m)
    w = WeightVec("input", vals)
    value = w.total()
    return BoundReport("ldl", "lower-on-kappa-star", value, Certificate("packing", w, value))


def dsl(A: Channel, t=None) -> BoundReport:
    """Degree sequence lower bound on kappa*(A).

    Value of min 1^T z subject to 0 <= z <= 1 and (A^T t)^T z >= 1^T t,
    a relaxation of the covering program; solved greedily by filling
    outputs in order of decreasing weighted degree.
    """
    tv = _weights(t, A.num_inputs, "input")
    D = apply_transpose(A, tv)
    need = sum(tv, Fraction(0))
    if need <= 0:
        raise BoundError("dsl needs t != 0")
    value = Fraction(0)
    for y in sorted(range(A.num_outputs), key=lambda y: (-D[y], y)):
        if need <= 0:
            break
        if D[y] <= 0:
            break
        if D[y] <= need:
            value += 1
            need -= D[y]
        else:
            value += need / D[y]
            need = Fraction(0)
    return BoundReport("dsl", "lower-on-kappa-star", value)


def edge_only_lower(A: Channel) -> BoundReport:
    """|X| + |Y| - |E| <= p(A), using only the edge count."""
    value = Fraction(A.num_inputs + A.num_outputs - A.num_edges)
    return BoundReport("edge-lower", "lower-on-p", value)


def edge_only_lower_tight(num_inputs: int, num_outputs: int, cover_size: int) -> Channel:
    """Channel meeting the edge-only packing bound with equality.

    Outputs 0..r-1 get disjoint neighbourhoods partitioning X (a cover of
    size r); every other output has the single neighbour 0. Then
    |E| = |X| + |Y| - r and p(A) = r.
    """
    r = cover_size
    if not 1 <= r <= min(num_inputs, num_outputs):
        raise ValueError("need 1 <= |R| <= min(|X|, |Y|)")
    nbrs: list[list[int]] = [[x % r] for x in range(num_inputs)]
    for y in range(r, num_outputs):
        nbrs[0].append(y)
    return Channel.from_neighborhoods(nbrs, num_outputs)


# -- graph lower bounds on alpha ---------------------------------------------


def _closed_sums(G: Graph, tv: list[Fraction]) -> list[Fraction]:
    return [tv[v] + sum((tv[u] for u in G.adjacency[v]), Fraction(0)) for v in range(G.num_vertices)]


def caro_wei(G: Graph, t=None) -> BoundReport:
    """alpha(G) >= sum_x t_x / (Bt)_x."""
    tv = _weights(t, G.num_vertices, "vertex")
    Bt = _closed_sums(G, tv)
    if any(s <= 0 for s in Bt):
        raise BoundError("caro_wei needs Bt > 0")
    value = sum((tv[x] / Bt[x] for x in range(G.num_vertices)), Fraction(0))
    return BoundReport("caro-wei", "lower-on-p", value)


def motzkin_straus(G: Graph, t=None) -> BoundReport:
    """alpha(G) >= (1^T t)^2 / (t^T B t)."""
    tv = _weights(t, G.num_vertices, "vertex")
    Bt = _closed_sums(G, tv)
    quad = sum((a * b for a, b in zip(tv, Bt)), Fraction(0))
    if quad <= 0:
        raise BoundError("motzkin_straus needs t^T B t > 0")
    return BoundReport("motzkin-straus", "lower-on-p", sum(tv, Fraction(0)) ** 2 / quad)


def turan(G: Graph) -> BoundReport:
    """alpha(G) >= |X| / (1 + average degree)."""
    m = G.num_vertices
    if m == 0:
        raise BoundError("empty vertex set")
    return BoundReport("turan", "lower-on-p", Fraction(m * m, m + 2 * G.num_edges))


def integer_floor_ceil(report: BoundReport) -> int:
    """The integer implied for p(A): floor for upper bounds, ceiling for lower bounds."""
    if report.direction.startswith("upper"):
        return math.floor(report.exact)
    return math.ceil(report.exact)
