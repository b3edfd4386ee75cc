"""Combinatorial channels, confusability graphs and exact feasibility checks.

A channel is a 0/1 incidence between an input set X = range(num_inputs) and
an output set Y = range(num_outputs). It is stored as two sorted adjacency
tables (one per side); everything is immutable after construction.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

Rational = Union[int, Fraction]

SIDES = ("input", "output", "vertex")
CERTIFICATE_KINDS = ("packing", "cover", "integer-packing", "integer-cover")


class ChannelError(ValueError):
    """Malformed channel, graph or weight vector."""


@dataclass(frozen=True)
class WeightVec(Sequence):
    """Exact-rational vector indexed by one side of a channel or graph."""

    side: str
    values: tuple[Fraction, ...]

    def __post_init__(self):
        if self.side not in SIDES:
            raise ChannelError(f"unknown side {self.side!r}")
        object.__setattr__(self, "values", tuple(Fraction(v) for v in self.values))

    def __getitem__(self, i):
        return self.values[i]

    def __len__(self):
        return len(self.values)

    def total(self) -> Fraction:
        return sum(self.values, Fraction(0))

    def scaled(self, c: Rational) -> "WeightVec":
        return WeightVec(self.side, [c * v for v in self.values])

    def __le__(self, other) -> bool:
        # componentwise order, used for the phi-law checks
        if len(self) != len(other):
            raise ChannelError("length mismatch in componentwise comparison")
        return all(a <= b for a, b in zip(self.values, other))

    @classmethod
    def ones(cls, side: str, size: int) -> "WeightVec":
        return cls(side, [Fraction(1)] * size)


@dataclass(frozen=True, eq=False)
class Channel:
    """A combinatorial channel: sparse bipartite incidence between X and Y.

    Use :meth:`from_edges` or :meth:`from_neighborhoods` rather than the raw
    constructor; they validate and build both adjacency tables.
    """

    num_inputs: int
    num_outputs: int
    input_nbrs: tuple[tuple[int, ...], ...]
    output_nbrs: tuple[tuple[int, ...], ...]
    input_labels: Sequence[str] | None = field(default=None, repr=False)
    output_labels: Sequence[str] | None = field(default=None, repr=False)

    @classmethod
    def from_neighborhoods(
        cls,
        nbrs: Sequence[Iterable[int]],
        num_outputs: int,
        input_labels: Sequence[str] | None = None,
        output_labels: Sequence[str] | None = None,
    ) -> "Channel":
        num_inputs = len(nbrs)
        rows = []
        cols: list[list[int]] = [[] for _ in range(num_outputs)]
        for x, nb in enumerate(nbrs):
            row = sorted(nb)
            for i, y in enumerate(row):
                if not 0 <= y < num_outputs:
                    raise ChannelError(f"output index {y} out of range for input {x}")
                if i and row[i - 1] == y:
                    raise ChannelError(f"duplicate edge ({x}, {y})")
                cols[y].append(x)
            if not row:
                raise ChannelError(
                    f"isolated input {x}: every input must produce at least one output"
                )
            rows.append(tuple(row))
        for y, col in enumerate(cols):
            if not col:
                raise ChannelError(
                    f"isolated output {y}: every output must be producible by some input"
                )
        _check_labels(input_labels, num_inputs, "input")
        _check_labels(output_labels, num_outputs, "output")
        return cls(
            num_inputs,
            num_outputs,
            tuple(rows),
            tuple(tuple(c) for c in cols),
            input_labels,
            output_labels,
        )

    @classmethod
    def from_edges(
        cls,
        num_inputs: int,
        num_outputs: int,
        edges: Iterable[tuple[int, int]],
        input_labels: Sequence[str] | None = None,
        output_labels: Sequence[str] | None = None,
    ) -> "Channel":
        nbrs: list[list[int]] = [[] for _ in range(num_inputs)]
        for x, y in edges:
            if not 0 <= x < num_inputs:
                raise ChannelError(f"input index {x} out of range")
            nbrs[x].append(y)
        return cls.from_neighborhoods(nbrs, num_outputs, input_labels, output_labels)

    @classmethod
    def identity(cls, k: int) -> "Channel":
        return cls.from_neighborhoods([(i,) for i in range(k)], k)

    @property
    def num_edges(self) -> int:
        return sum(len(r) for r in self.input_nbrs)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges in ascending lexicographic order."""
        for x, row in enumerate(self.input_nbrs):
            for y in row:
                yield x, y

    def has_edge(self, x: int, y: int) -> bool:
        row = self.input_nbrs[x]
        return y in row

    def transpose(self) -> "Channel":
        return Channel(
            self.num_outputs,
            self.num_inputs,
            self.output_nbrs,
            self.input_nbrs,
            self.output_labels,
            self.input_labels,
        )

    def is_input_regular(self) -> bool:
        return len({len(r) for r in self.input_nbrs}) == 1

    def is_output_regular(self) -> bool:
        return len({len(c) for c in self.output_nbrs}) == 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, Channel):
            return NotImplemented
        return (
            self.num_inputs == other.num_inputs
            and self.num_outputs == other.num_outputs
            and self.input_nbrs == other.input_nbrs
        )

    def __hash__(self):
        return hash((self.num_inputs, self.num_outputs, self.input_nbrs))


def _check_labels(labels, size, side):
    if labels is not None and len(labels) != size:
        raise ChannelError(f"{len(labels)} {side} labels for {size} {side}s")


@dataclass(frozen=True, eq=False)
class Graph:
    """Undirected simple graph on range(num_vertices)."""

    num_vertices: int
    adjacency: tuple[frozenset[int], ...]

    @classmethod
    def from_edges(cls, num_vertices: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj: list[set[int]] = [set() for _ in range(num_vertices)]
        for u, v in edges:
            if u == v:
                raise ChannelError(f"loop at vertex {u}")
            if not (0 <= u < num_vertices and 0 <= v < num_vertices):
                raise ChannelError(f"edge ({u}, {v}) out of range")
            adj[u].add(v)
            adj[v].add(u)
        return cls(num_vertices, tuple(frozenset(a) for a in adj))

    @property
    def edges(self) -> set[tuple[int, int]]:
        return {(u, v) for u, a in enumerate(self.adjacency) for v in a if u < v}

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def bitsets(self) -> list[int]:
        """Open neighbourhoods as Python-int bitsets."""
        out = []
        for a in self.adjacency:
            m = 0
            for v in a:
                m |= 1 << v
            out.append(m)
        return out

    def is_independent(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        return all(v not in self.adjacency[u] for i, u in enumerate(vs) for v in vs[i + 1 :])

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.num_vertices == other.num_vertices and self.adjacency == other.adjacency

    def __hash__(self):
        return hash((self.num_vertices, self.adjacency))


@dataclass(frozen=True)
class Certificate:
    """A feasible point (or integer witness) backing a reported value."""

    kind: str
    vector: WeightVec
    value: Fraction

    def __post_init__(self):
        if self.kind not in CERTIFICATE_KINDS:
            raise ChannelError(f"unknown certificate kind {self.kind!r}")
        object.__setattr__(self, "value", Fraction(self.value))

    @classmethod
    def from_index_set(cls, kind: str, side: str, size: int, indices: Iterable[int]):
        chosen = set(indices)
        vec = WeightVec(side, [1 if i in chosen else 0 for i in range(size)])
        return cls(kind, vec, Fraction(len(chosen)))

    def verify(self, A: Channel) -> bool:
        if self.kind in ("cover", "integer-cover"):
            ok = check_cover(A, self.vector)
        else:
            ok = check_packing(A, self.vector)
        if self.kind.startswith("integer") and any(v.denominator != 1 for v in self.vector):
            return False
        return ok and self.vector.total() == self.value


# -- degrees and products ---------------------------------------------------


def input_degrees(A: Channel) -> WeightVec:
    return WeightVec("input", [len(r) for r in A.input_nbrs])


def output_degrees(A: Channel) -> WeightVec:
    return WeightVec("output", [len(c) for c in A.output_nbrs])


def _as_values(v, size, what):
    vals = v.values if isinstance(v, WeightVec) else tuple(Fraction(x) for x in v)
    if len(vals) != size:
        raise ChannelError(f"{what} has length {len(vals)}, expected {size}")
    return vals


def apply(A: Channel, z: Sequence[Rational]) -> list[Fraction]:
    """(Az)_x = sum of z over N(x), for z indexed by outputs."""
    zv = _as_values(z, A.num_outputs, "output vector")
    return [sum((zv[y] for y in row), Fraction(0)) for row in A.input_nbrs]


def apply_transpose(A: Channel, w: Sequence[Rational]) -> list[Fraction]:
    """(A^T w)_y = sum of w over N(y), for w indexed by inputs."""
    wv = _as_values(w, A.num_inputs, "input vector")
    return [sum((wv[x] for x in col), Fraction(0)) for col in A.output_nbrs]


def compose(A: Channel, B: Channel) -> Channel:
    """Boolean product: N(x) in A∘B is the union of N_B(y) over y in N_A(x)."""
    if A.num_outputs != B.num_inputs:
        raise ChannelError(
            f"cannot compose: A has {A.num_outputs} outputs, B has {B.num_inputs} inputs"
        )
    nbrs = []
    for row in A.input_nbrs:
        acc: set[int] = set()
        for y in row:
            acc.update(B.input_nbrs[y])
        nbrs.append(acc)
    return Channel.from_neighborhoods(nbrs, B.num_outputs, A.input_labels, B.output_labels)


def confusability(A: Channel) -> Graph:
    """Graph on X with u ~ v iff u != v and N(u), N(v) intersect."""
    adj = []
    for x, row in enumerate(A.input_nbrs):
        acc: set[int] = set()
        for y in row:
            acc.update(A.output_nbrs[y])
        acc.discard(x)
        adj.append(frozenset(acc))
    return Graph(A.num_inputs, tuple(adj))


def closed_neighborhood_channel(G: Graph) -> Channel:
    """The channel B with adjacency B - I = G, i.e. N_B(x) = {x} ∪ N_G(x)."""
    return Channel.from_neighborhoods(
        [set(a) | {v} for v, a in enumerate(G.adjacency)], G.num_vertices
    )


# -- feasibility -------------------------------------------------------------


def is_code(A: Channel, S: Iterable[int]) -> bool:
    chosen = set(S)
    for x in chosen:
        if not 0 <= x < A.num_inputs:
            raise ChannelError(f"input index {x} out of range")
    for col in A.output_nbrs:
        hits = 0
        for x in col:
            if x in chosen:
                hits += 1
                if hits > 1:
                    return False
    return True


def cover_violations(A: Channel, z: Sequence[Rational]) -> list[int]:
    """Inputs x with (Az)_x < 1; a negative entry of z is reported as -1 - y."""
    zv = _as_values(z, A.num_outputs, "cover")
    bad = [-1 - y for y, v in enumerate(zv) if v < 0]
    bad += [x for x, s in enumerate(apply(A, zv)) if s < 1]
    return bad


def packing_violations(A: Channel, w: Sequence[Rational]) -> list[int]:
    """Outputs y with (A^T w)_y > 1; a negative entry of w is reported as -1 - x."""
    wv = _as_values(w, A.num_inputs, "packing")
    bad = [-1 - x for x, v in enumerate(wv) if v < 0]
    bad += [y for y, s in enumerate(apply_transpose(A, wv)) if s > 1]
    return bad


def check_cover(A: Channel, z: Sequence[Rational]) -> bool:
    """z >= 0 and Az >= 1, checked exactly."""
    return not cover_violations(A, z)


def check_packing(A: Channel, w: Sequence[Rational]) -> bool:
    """w >= 0 and A^T w <= 1, checked exactly."""
    return not packing_violations(A, w)
