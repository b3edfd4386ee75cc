"""Exact solvers for the packing and covering programs of a channel.

``fractional_packing`` solves max 1^T w s.t. A^T w <= 1, w >= 0 with a
revised simplex over the rationals (FLINT linear algebra, Bland's rule
through degenerate stretches).
The optimal basis also yields the dual cover, so one solve gives both
p*(A) and kappa*(A). On larger instances the starting basis can be taken
from a floating-point HiGHS solve; the basis is then re-solved exactly,
checked, and repaired with exact pivots if needed, so the reported
optimum never depends on floating point.

``integer_packing`` is a maximum independent set search on the
confusability graph, ``integer_covering`` a branch-and-bound set cover.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction

import flint

from .channel import (
    Certificate,
    Channel,
    ChannelError,
    Graph,
    WeightVec,
    check_cover,
    check_packing,
    confusability,
    is_code,
)
from .zoo import vertex_clique_channel

log = logging.getLogger(__name__)


class CapExceeded(ChannelError):
    """An instance is larger than the configured solver cap."""


@dataclass(frozen=True)
class SolverConfig:
    lp_cap: int = 6000  # |X| + |Y|
    ilp_cap: int = 512
    clique_vertex_cap: int = 128
    clique_count_cap: int = 20000
    warm_start_above: int = 100  # |X| + |Y| beyond which HiGHS supplies the basis
    node_limit: int | None = None  # branch-and-bound nodes; None = unlimited
    highs_solver: str = "ipm"  # HiGHS algorithm for the warm start; crossover yields a basis
    rounding_denominator: int = 10**4  # for rounding a float optimum before the exact check


DEFAULT_CONFIG = SolverConfig()


@dataclass(frozen=True)
class LpResult:
    value: Fraction
    primal: WeightVec
    dual: WeightVec
    method: str = "exact"
    pivots: int = 0

    def certificates(self) -> tuple[Certificate, Certificate]:
        return (
            Certificate("packing", self.primal, self.value),
            Certificate("cover", self.dual, self.value),
        )


@dataclass(frozen=True)
class IntResult:
    """Best integer solution found.

    ``bound`` is a proven bound on the optimum from the other side: an
    upper bound for packings, a lower bound for covers. It equals
    ``value`` exactly when ``optimality_proved`` holds.
    """

    value: int
    witness: tuple[int, ...]
    optimality_proved: bool = True
    nodes: int = field(default=0, compare=False)
    bound: int | None = None

    def __post_init__(self):
        if self.bound is None:
            object.__setattr__(self, "bound", self.value)


# -- exact revised simplex ---------------------------------------------------
#
# Columns 0..|X|-1 are the inputs, column |X|+y is the slack of row y.


def _to_fraction(q) -> Fraction:
    return Fraction(int(q.p), int(q.q))


class _ExactLP:
    def __init__(self, A: Channel):
        self.A = A
        self.nx = A.num_inputs
        self.ny = A.num_outputs

    def _column(self, j: int):
        return self.A.input_nbrs[j] if j < self.nx else (j - self.nx,)

    def _basis_matrix(self, basis: list[int]):
        M = flint.fmpq_mat(self.ny, self.ny)
        for k, j in enumerate(basis):
            for y in self._column(j):
                M[y, k] = 1
        return M

    def solve_basis(self, basis: list[int]):
        """Return (x_B, y) for the basis, or None if it is singular."""
        M = self._basis_matrix(basis)
        try:
            xb = M.solve(flint.fmpq_mat(self.ny, 1, [1] * self.ny))
            cb = flint.fmpq_mat(self.ny, 1, [1 if j < self.nx else 0 for j in basis])
            dual = M.transpose().solve(cb)
        except ZeroDivisionError:
            return None
        return [xb[i, 0] for i in range(self.ny)], [dual[i, 0] for i in range(self.ny)], M

    def reduced_costs(self, dual) -> list:
        out = []
        for row in self.A.input_nbrs:
            s = flint.fmpq(1)
            for y in row:
                s -= dual[y]
            out.append(s)
        out.extend(-dual[y] for y in range(self.ny))
        return out

    def run(self, basis: list[int], max_pivots: int | None = None) -> tuple[list[int], list, list, int]:
        """Pivot to optimality from a primal feasible basis.

        Entering column: largest reduced cost, except that after a
        degenerate pivot Bland's rule (smallest index) is used until the
        objective strictly improves again, which rules out cycling.
        """
        pivots = 0
        bland = False
        while True:
            solved = self.solve_basis(basis)
            if solved is None:
                raise ArithmeticError("singular basis")
            xb, dual, M = solved
            if any(v < 0 for v in xb):
                raise ArithmeticError("basis is not primal feasible")
            rc = self.reduced_costs(dual)
            candidates = [j for j, c in enumerate(rc) if c > 0]
            if not candidates:
                return basis, xb, dual, pivots
            if max_pivots is not None and pivots >= max_pivots:
                raise ArithmeticError("pivot limit reached")
            j = candidates[0] if bland else max(candidates, key=lambda j: (rc[j], -j))
            col = flint.fmpq_mat(self.ny, 1)
            for y in self._column(j):
                col[y, 0] = 1
            d = M.solve(col)
            leave = None
            best = None
            for i in range(self.ny):
                di = d[i, 0]
                if di > 0:
                    ratio = xb[i] / di
                    if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                        best, leave = ratio, i
            if leave is None:
                raise ArithmeticError("unbounded direction in a bounded program")
            bland = best == 0
            basis = basis[:leave] + [j] + basis[leave + 1 :]
            pivots += 1


@dataclass
class _FloatSolution:
    basis: list[int] | None
    primal: list[float]
    dual: list[float]


def _highs_solve(A: Channel, solver: str = "ipm") -> _FloatSolution | None:
    try:
        import highspy
        import numpy as np
    except ImportError:  # pragma: no cover - optional accelerator
        return None
    nx, ny = A.num_inputs, A.num_outputs
    h = highspy.Highs()
    h.setOptionValue("output_flag", False)
    h.setOptionValue("solver", solver)
    lp = highspy.HighsLp()
    lp.num_col_ = nx
    lp.num_row_ = ny
    lp.col_cost_ = np.ones(nx)
    lp.col_lower_ = np.zeros(nx)
    lp.col_upper_ = np.full(nx, highspy.kHighsInf)
    lp.row_lower_ = np.full(ny, -highspy.kHighsInf)
    lp.row_upper_ = np.ones(ny)
    start, index = [0], []
    for row in A.input_nbrs:
        index.extend(row)
        start.append(len(index))
    lp.a_matrix_.format_ = highspy.MatrixFormat.kColwise
    lp.a_matrix_.start_ = np.array(start, dtype=np.int32)
    lp.a_matrix_.index_ = np.array(index, dtype=np.int32)
    lp.a_matrix_.value_ = np.ones(len(index))
    lp.sense_ = highspy.ObjSense.kMaximize
    h.passModel(lp)
    h.run()
    b = h.getBasis()
    basic = highspy.HighsBasisStatus.kBasic
    cols = [j for j, s in enumerate(b.col_status) if s == basic]
    rows = [nx + i for i, s in enumerate(b.row_status) if s == basic]
    basis = cols + rows
    sol = h.getSolution()
    return _FloatSolution(
        basis if len(basis) == ny else None, list(sol.col_value), [abs(v) for v in sol.row_dual]
    )


def _rounded_certificates(A: Channel, sol: _FloatSolution, max_den: int):
    """Round a float primal/dual pair to rationals; keep it only if exactly optimal.

    Feasible w and z with 1^T w = 1^T z are optimal by weak duality. Besides
    the rounded vectors, uniform vectors of the rounded objective value are
    tried (they are optimal whenever A is regular).
    """
    rounded = [max(Fraction(v).limit_denominator(max_den), Fraction(0)) for v in sol.primal]
    guess = Fraction(sum(sol.primal)).limit_denominator(max_den)
    for w in (rounded, [guess / A.num_inputs] * A.num_inputs):
        primal = WeightVec("input", w)
        if not check_packing(A, primal):
            continue
        value = primal.total()
        duals = (
            [max(Fraction(v).limit_denominator(max_den), Fraction(0)) for v in sol.dual],
            [value / A.num_outputs] * A.num_outputs,
        )
        for z in duals:
            cover = WeightVec("output", z)
            if cover.total() == value and check_cover(A, cover):
                return primal, cover
    return None


def _uniform_certificates(A: Channel):
    """Constant w and z, optimal by weak duality when their weights agree (e.g. biregular A)."""
    w = Fraction(1, max(len(c) for c in A.output_nbrs))
    z = Fraction(1, min(len(r) for r in A.input_nbrs))
    if w * A.num_inputs != z * A.num_outputs:
        return None
    return WeightVec("input", [w] * A.num_inputs), WeightVec("output", [z] * A.num_outputs)


def fractional_packing(
    A: Channel, config: SolverConfig = DEFAULT_CONFIG, method: str = "auto"
) -> LpResult:
    """Exact p*(A) = kappa*(A) with a packing and a cover certificate.

    ``method`` is ``"exact"`` (start from the slack basis), ``"warm"``
    (use a HiGHS solution) or ``"auto"``, which first tries constant
    certificates and then goes warm above the configured size.
    A warm solve is first rounded to small-denominator rationals and
    accepted if the rounded pair is exactly feasible with equal weights;
    otherwise its basis is re-solved exactly and pivoted to optimality. A
    basis that turns out infeasible falls back to the slack basis.
    """
    size = A.num_inputs + A.num_outputs
    if size > config.lp_cap:
        raise CapExceeded(f"|X|+|Y| = {size} exceeds the LP cap {config.lp_cap}")
    if method not in ("auto", "exact", "warm"):
        raise ValueError(f"unknown method {method!r}")
    if method == "auto":
        uniform = _uniform_certificates(A)
        if uniform is not None:
            primal, cover = uniform
            return LpResult(primal.total(), primal, cover, "uniform", 0)
    lp = _ExactLP(A)
    slack = [A.num_inputs + y for y in range(A.num_outputs)]
    warm = method == "warm" or (method == "auto" and size > config.warm_start_above)
    result = None
    used = "exact"
    if warm:
        sol = _highs_solve(A, config.highs_solver)
        if sol is not None:
            rounded = _rounded_certificates(A, sol, config.rounding_denominator)
            if rounded is not None:
                primal, cover = rounded
                return LpResult(primal.total(), primal, cover, "rounded", 0)
        if sol is not None and sol.basis is not None:
            try:
                result = lp.run(sol.basis)
                used = "warm"
            except ArithmeticError as exc:
                log.info("warm start rejected (%s); restarting from slack basis", exc)
    if result is None:
        result = lp.run(slack)
    basis, xb, dual, pivots = result

    w = [Fraction(0)] * A.num_inputs
    for i, j in enumerate(basis):
        if j < A.num_inputs:
            w[j] = _to_fraction(xb[i])
    z = [_to_fraction(v) for v in dual]
    primal = WeightVec("input", w)
    cover = WeightVec("output", z)
    value = primal.total()
    # duality and feasibility are re-checked in plain Fractions
    if cover.total() != value or not check_packing(A, primal) or not check_cover(A, cover):
        raise AssertionError("exact LP certificate failed verification")
    return LpResult(value, primal, cover, used, pivots)


# -- integer packing: maximum independent set --------------------------------


def _color_bound(P: int, comp: list[int]) -> tuple[list[int], list[int]]:
    """Greedy colouring of P in the search graph; returns vertices and colour counts."""
    verts, colors = [], []
    k = 0
    uncolored = P
    while uncolored:
        k += 1
        Q = uncolored
        while Q:
            low = Q & -Q
            v = low.bit_length() - 1
            Q &= ~low
            Q &= ~comp[v]
            uncolored &= ~low
            verts.append(v)
            colors.append(k)
    return verts, colors


def greedy_independent_set(G: Graph) -> list[int]:
    """Repeatedly take a minimum-degree vertex of what is left (ties by index)."""
    alive = set(range(G.num_vertices))
    deg = {v: len(G.adjacency[v]) for v in alive}
    out = []
    while alive:
        v = min(alive, key=lambda u: (deg[u], u))
        out.append(v)
        gone = {v} | (G.adjacency[v] & alive)
        alive -= gone
        for u in gone:
            for w in G.adjacency[u] & alive:
                deg[w] -= 1
    return sorted(out)


def max_independent_set(
    G: Graph,
    config: SolverConfig = DEFAULT_CONFIG,
    upper: int | None = None,
    seed: list[int] | None = None,
) -> IntResult:
    """Maximum independent set, as a maximum clique search on the complement.

    Vertices are relabelled by descending degree in the complement (ties
    by index); the bound at each node is a greedy colouring of the
    complement, i.e. a greedy clique cover of G. A known global upper
    bound ``upper`` ends the search as soon as it is attained.
    """
    m = G.num_vertices
    if m == 0:
        return IntResult(0, ())
    nb = G.bitsets()
    full = (1 << m) - 1
    comp_orig = [full & ~nb[v] & ~(1 << v) for v in range(m)]
    order = sorted(range(m), key=lambda v: (-bin(comp_orig[v]).count("1"), v))
    pos = {v: i for i, v in enumerate(order)}
    comp = [0] * m
    for v in range(m):
        bits = 0
        c = comp_orig[v]
        while c:
            low = c & -c
            bits |= 1 << pos[low.bit_length() - 1]
            c &= ~low
        comp[pos[v]] = bits

    start = greedy_independent_set(G)
    if seed is not None and len(seed) > len(start):
        if not G.is_independent(seed):
            raise ValueError("seed is not an independent set")
        start = sorted(seed)
    best: list[int] = [pos[v] for v in start]
    nodes = 0
    aborted = False

    def expand(R: list[int], P: int):
        nonlocal best, nodes, aborted
        nodes += 1
        if config.node_limit is not None and nodes > config.node_limit:
            aborted = True
            return
        verts, colors = _color_bound(P, comp)
        for i in range(len(verts) - 1, -1, -1):
            if len(R) + colors[i] <= len(best) or aborted or len(best) == upper:
                return
            v = verts[i]
            R.append(v)
            NP = P & comp[v]
            if NP:
                expand(R, NP)
            elif len(R) > len(best):
                best = list(R)
            R.pop()
            P &= ~(1 << v)

    if len(best) != upper:
        expand([], full)
    witness = tuple(sorted(order[v] for v in best))
    if not G.is_independent(witness):
        raise AssertionError("independent set search returned a dependent set")
    proved = not aborted or len(witness) == upper
    bound = len(witness) if proved else (upper if upper is not None else m)
    return IntResult(len(witness), witness, proved, nodes, bound)


def integer_packing(
    A: Channel, config: SolverConfig = DEFAULT_CONFIG, seed: list[int] | None = None
) -> IntResult:
    """Exact p(A): the largest code, with a witness.

    ``seed`` is an optional known code used as the starting incumbent.
    """
    if A.num_inputs > config.ilp_cap:
        raise CapExceeded(f"|X| = {A.num_inputs} exceeds the integer cap {config.ilp_cap}")
    # floor(p*) caps the search; hitting it proves optimality early
    upper = None
    if A.num_inputs + A.num_outputs <= config.lp_cap:
        upper = math.floor(fractional_packing(A, config).value)
    res = max_independent_set(confusability(A), config, upper, seed)
    if not is_code(A, res.witness):
        raise AssertionError("witness is not a code")
    return res


# -- integer covering: set cover ---------------------------------------------


def integer_covering(A: Channel, config: SolverConfig = DEFAULT_CONFIG) -> IntResult:
    """Exact kappa(A): the fewest outputs whose neighbourhoods cover X."""
    nx, ny = A.num_inputs, A.num_outputs
    if ny > config.ilp_cap:
        raise CapExceeded(f"|Y| = {ny} exceeds the integer cap {config.ilp_cap}")
    sets = [0] * ny
    for y, col in enumerate(A.output_nbrs):
        for x in col:
            sets[y] |= 1 << x
    coverers = [list(row) for row in A.input_nbrs]
    # an input conflicts with another if some output covers both
    conflict = [0] * nx
    for x, row in enumerate(A.input_nbrs):
        for y in row:
            conflict[x] |= sets[y]
    full = (1 << nx) - 1

    # greedy incumbent
    chosen: list[int] = []
    U = full
    while U:
        y = max(range(ny), key=lambda y: ((sets[y] & U).bit_count(), -y))
        chosen.append(y)
        U &= ~sets[y]
    best = sorted(chosen)
    nodes = 0
    aborted = False

    def lower_bound(U: int) -> int:
        # inputs pairwise without a common output each need their own set
        k = 0
        while U:
            low = U & -U
            x = low.bit_length() - 1
            U &= ~conflict[x]
            k += 1
        return k

    def search(U: int, picked: list[int]):
        nonlocal best, nodes, aborted
        nodes += 1
        if config.node_limit is not None and nodes > config.node_limit:
            aborted = True
            return
        if not U:
            if len(picked) < len(best):
                best = sorted(picked)
            return
        if len(picked) + lower_bound(U) >= len(best):
            return
        # branch on the uncovered input with fewest coverers
        x = min(
            (v for v in range(nx) if U >> v & 1),
            key=lambda v: (len(coverers[v]), v),
        )
        options = sorted(coverers[x], key=lambda y: (-(sets[y] & U).bit_count(), y))
        for y in options:
            picked.append(y)
            search(U & ~sets[y], picked)
            picked.pop()
            if aborted:
                return

    search(full, [])
    proved = not aborted
    bound = len(best)
    if not proved:
        bound = lower_bound(full)
        if nx + ny <= config.lp_cap:
            bound = max(bound, math.ceil(fractional_packing(A, config).value))
    witness = tuple(best)
    if not check_cover(A, Certificate.from_index_set("integer-cover", "output", ny, witness).vector):
        raise AssertionError("set cover witness does not cover")
    return IntResult(len(witness), witness, proved, nodes, bound)


# -- fractional clique cover -------------------------------------------------


def maximal_cliques(G: Graph, config: SolverConfig = DEFAULT_CONFIG) -> list[tuple[int, ...]]:
    """All maximal cliques (Bron-Kerbosch with pivoting), sorted."""
    m = G.num_vertices
    if m > config.clique_vertex_cap:
        raise CapExceeded(f"{m} vertices exceeds the clique vertex cap {config.clique_vertex_cap}")
    nb = G.bitsets()
    out: list[tuple[int, ...]] = []

    def members(bits: int) -> list[int]:
        res = []
        while bits:
            low = bits & -bits
            res.append(low.bit_length() - 1)
            bits &= ~low
        return res

    def bk(R: int, P: int, X: int):
        if not P and not X:
            out.append(tuple(members(R)))
            if len(out) > config.clique_count_cap:
                raise CapExceeded(
                    f"more than {config.clique_count_cap} maximal cliques; raise clique_count_cap"
                )
            return
        pivot = max(members(P | X), key=lambda u: bin(P & nb[u]).count("1"))
        for v in members(P & ~nb[pivot]):
            bk(R | 1 << v, P & nb[v], X & nb[v])
            P &= ~(1 << v)
            X |= 1 << v

    bk(0, (1 << m) - 1, 0)
    return sorted(out)


def theta_star(G: Graph, config: SolverConfig = DEFAULT_CONFIG) -> LpResult:
    """Minimum fractional cover of the vertices by maximal cliques."""
    cliques = maximal_cliques(G, config)
    H = vertex_clique_channel(G.num_vertices, cliques)
    return fractional_packing(H, config)
