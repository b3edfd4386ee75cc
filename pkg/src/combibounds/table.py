"""Rows of the deletion-channel comparison table."""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .deletion import deletion_table_closed_forms
from .lp import SolverConfig, fractional_packing
from .zoo import deletion_channel, vt_size

SENTINEL = "—"
COLUMNS = ("n", "vt_size", "p_star", "thm1", "fvy", "kk", "thm2")


@dataclass(frozen=True)
class TableRow:
    n: int
    vt_size: int
    p_star: int | None
    thm1_floor: int
    fvy_floor: int
    kk_floor: int
    thm2_floor: int

    def cells(self) -> list[str]:
        p = SENTINEL if self.p_star is None else str(self.p_star)
        vals = (self.vt_size, p, self.thm1_floor, self.fvy_floor, self.kk_floor, self.thm2_floor)
        return [str(self.n)] + [str(v) for v in vals]

    def flags(self) -> list[str]:
        """Soft consistency notes; these never make a row fail."""
        out = []
        uppers = [self.thm1_floor, self.fvy_floor, self.kk_floor, self.thm2_floor]
        if any(u < self.vt_size for u in uppers):
            out.append("an upper bound is below the VT size")
        if self.p_star is not None and not self.vt_size <= self.p_star <= self.thm1_floor:
            out.append("vt <= p* <= thm1 violated")
        if self.n >= 12 and self.thm1_floor > self.fvy_floor:
            out.append("thm1 above fvy")
        return out


def table_row(n: int, pstar_cap: int = 10, config: SolverConfig | None = None) -> TableRow:
    closed = deletion_table_closed_forms(n)
    p_star = None
    if n <= pstar_cap:
        p_star = math.floor(fractional_packing(deletion_channel(n), config or SolverConfig()).value)
    return TableRow(
        n, vt_size(n), p_star, closed["thm1"], closed["fvy"], closed["kk"], closed["thm2"]
    )


def _row_job(args) -> TableRow:
    return table_row(*args)


def deletion_table(
    n_min: int = 5, n_max: int = 24, pstar_cap: int = 10, jobs: int = 1
) -> list[TableRow]:
    """Rows n_min..n_max in order; rows are computed in parallel when jobs > 1."""
    tasks = [(n, pstar_cap) for n in range(n_min, n_max + 1)]
    if jobs <= 1:
        return [table_row(*t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_row_job, tasks))
