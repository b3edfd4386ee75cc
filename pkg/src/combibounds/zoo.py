"""Concrete channels and graphs, run statistics of binary words, VT codes.

Binary words of length n are indexed by ``int(word, 2)``: the word's first
(least-index) symbol is the most significant bit.
"""

from __future__ import annotations

import itertools
import math
import random
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from .channel import Channel, ChannelError, Graph

# explicit deletion/grain channels beyond this length are never built
MAX_EXPLICIT_N = 20
ERASURE_SIZE_GUARD = 1 << 20


class WordLabels(Sequence):
    """Lazy 0/1-string labels for range(2**n)."""

    def __init__(self, n: int):
        self.n = n

    def __len__(self):
        return 1 << self.n

    def __getitem__(self, i):
        if isinstance(i, slice):
            return [self[j] for j in range(*i.indices(len(self)))]
        if not 0 <= i < len(self):
            raise IndexError(i)
        return format(i, f"0{self.n}b")

    def index(self, word: str, *args) -> int:
        if len(word) != self.n:
            raise ValueError(f"{word!r} is not a word of length {self.n}")
        return int(word, 2)


@dataclass(frozen=True)
class RunProfile:
    """Run statistics of a binary word.

    ``r`` runs, ``u`` of them of length one; ``b_left``/``b_right`` flag a
    unit first/last run. A single-symbol word is one unit run that is both
    first and last, so it has u = b_left = b_right = 1.
    """

    r: int
    u: int
    b_left: int
    b_right: int

    @property
    def b(self) -> int:
        return self.b_left + self.b_right


def run_lengths(word: str) -> list[int]:
    if not word:
        raise ValueError("empty word")
    return [len(list(g)) for _, g in itertools.groupby(word)]


def run_profile(word: str) -> RunProfile:
    lengths = run_lengths(word)
    return RunProfile(
        r=len(lengths),
        u=sum(1 for L in lengths if L == 1),
        b_left=int(lengths[0] == 1),
        b_right=int(lengths[-1] == 1),
    )


def run_count(x: int, n: int) -> int:
    """Number of runs of the length-n word with index x."""
    return 1 + bin((x ^ (x >> 1)) & ((1 << (n - 1)) - 1)).count("1")


# -- binomials and string counts -------------------------------------------


def gbinom(m: int, j: int) -> int:
    """Binomial coefficient with the polynomial convention.

    C(m, j) = m (m-1) ... (m-j+1) / j! for j >= 0 and any integer m (so it
    can be nonzero for negative m), and 0 for j < 0.
    """
    if j < 0:
        return 0
    if m >= 0:
        return math.comb(m, j)
    # C(m, j) = (-1)^j C(j - m - 1, j)
    return (-1) ** j * math.comb(j - m - 1, j)


def count_strings(n: int, r: int, u: int | None = None, b: int | None = None) -> int:
    """Number of words in [2]^n with r runs (and u unit runs, b external unit runs)."""
    if n < 1:
        raise ValueError("n must be positive")
    if b is not None and u is None:
        raise ValueError("b requires u")
    if r < 1:
        return 0
    if u is None:
        return 2 * gbinom(n - 1, n - r)
    if b is None:
        return 2 * gbinom(n - r - 1, n - 2 * r + u) * gbinom(r, r - u)
    if r == 1:
        const = run_profile("0" * n)
        return 2 if (u, b) == (const.u, const.b) else 0
    return 2 * gbinom(n - r - 1, n - 2 * r + u) * gbinom(r - 2, u - b) * gbinom(2, b)


def count_strings_split(n: int, r: int, u: int, b_left: int, b_right: int) -> int:
    """Words with a given (r, u, b_left, b_right); each end split gets an equal share."""
    if r == 1:
        const = run_profile("0" * n)
        return 2 if (u, b_left, b_right) == (const.u, const.b_left, const.b_right) else 0
    if r < 1:
        return 0
    return 2 * gbinom(n - r - 1, n - 2 * r + u) * gbinom(r - 2, u - b_left - b_right)


# -- channels ----------------------------------------------------------------


def _check_explicit(n: int):
    if n < 2:
        raise ChannelError(f"word length must be at least 2, got {n}")
    if n > MAX_EXPLICIT_N:
        raise ChannelError(
            f"n={n} exceeds the explicit construction limit {MAX_EXPLICIT_N}; "
            "use the run-class closed forms instead"
        )


def deletion_neighbors(x: int, n: int) -> set[int]:
    """Indices of the distinct words obtained from x by deleting one symbol."""
    out = set()
    for i in range(n):
        # position i from the left is bit n-1-i
        low = x & ((1 << (n - 1 - i)) - 1)
        high = x >> (n - i)
        out.add((high << (n - 1 - i)) | low)
    return out


def deletion_channel(n: int) -> Channel:
    """Binary single-deletion channel: X = [2]^n, Y = [2]^(n-1)."""
    _check_explicit(n)
    nbrs = [deletion_neighbors(x, n) for x in range(1 << n)]
    return Channel.from_neighborhoods(nbrs, 1 << (n - 1), WordLabels(n), WordLabels(n - 1))


def grain_neighbors(x: int, n: int) -> set[int]:
    """x itself plus every word with y_j = x_(j+1) at one position j <= n-2."""
    out = {x}
    for j in range(n - 1):
        bj = n - 1 - j
        nxt = (x >> (bj - 1)) & 1
        out.add((x & ~(1 << bj)) | (nxt << bj))
    return out


def grain_channel(n: int) -> Channel:
    """Binary single-grain channel (one grain of length two at most): X = Y = [2]^n."""
    _check_explicit(n)
    nbrs = [grain_neighbors(x, n) for x in range(1 << n)]
    labels = WordLabels(n)
    return Channel.from_neighborhoods(nbrs, 1 << n, labels, labels)


def erasure_substitution_channel(q: int, n: int, a: int, b: int) -> Channel:
    """q-ary length-n channel that erases exactly a symbols and substitutes up to b.

    An output is a pair (erased position set, word on the remaining n-a
    positions); output index = rank(position set) * q**(n-a) + word value.
    """
    if q < 2 or n < 1 or not 0 <= a <= n or b < 0:
        raise ChannelError(f"bad parameters q={q}, n={n}, a={a}, b={b}")
    if q**n > ERASURE_SIZE_GUARD:
        raise ChannelError(f"q^n = {q**n} exceeds the explicit size guard {ERASURE_SIZE_GUARD}")
    m = n - a
    erase_sets = list(itertools.combinations(range(n), a))
    block = q**m
    # substitution patterns on m symbols: (positions, nonzero offsets)
    patterns = [()]
    for i in range(1, min(b, m) + 1):
        for pos in itertools.combinations(range(m), i):
            for offs in itertools.product(range(1, q), repeat=i):
                patterns.append(tuple(zip(pos, offs)))
    pw = [q ** (m - 1 - p) for p in range(m)]
    nbrs = []
    for xv in range(q**n):
        digits = [(xv // q ** (n - 1 - i)) % q for i in range(n)]
        row = []
        for k, E in enumerate(erase_sets):
            Es = set(E)
            kept = [d for i, d in enumerate(digits) if i not in Es]
            base = sum(d * pw[p] for p, d in enumerate(kept))
            for pat in patterns:
                val = base
                for p, off in pat:
                    d = kept[p]
                    val += (((d + off) % q) - d) * pw[p]
                row.append(k * block + val)
        nbrs.append(row)
    return Channel.from_neighborhoods(nbrs, len(erase_sets) * block)


def random_channel(
    num_inputs: int, num_outputs: int, density: float = 0.3, rng: random.Random | None = None
) -> Channel:
    """Random channel with no isolated vertex on either side."""
    rng = rng or random.Random()
    nbrs = [
        {y for y in range(num_outputs) if rng.random() < density} for _ in range(num_inputs)
    ]
    for x in range(num_inputs):
        if not nbrs[x]:
            nbrs[x].add(rng.randrange(num_outputs))
    hit = set().union(*nbrs)
    for y in range(num_outputs):
        if y not in hit:
            nbrs[rng.randrange(num_inputs)].add(y)
    return Channel.from_neighborhoods(nbrs, num_outputs)


# -- VT codes ---------------------------------------------------------------


def vt_syndromes(n: int, start: int = 0, stop: int | None = None) -> np.ndarray:
    """sum_{i=1..n} i x_i mod (n+1) for word indices in [start, stop)."""
    stop = (1 << n) if stop is None else stop
    idx = np.arange(start, stop, dtype=np.int64)
    syn = np.zeros(idx.shape, dtype=np.int64)
    for i in range(1, n + 1):
        syn += i * ((idx >> (n - i)) & 1)
    return syn % (n + 1)


def vt_code(n: int, a: int = 0, chunk: int = 1 << 20) -> list[int]:
    """Varshamov-Tenengolts code VT_a(n) as sorted word indices."""
    if n < 1:
        raise ValueError("n must be positive")
    a %= n + 1
    out: list[int] = []
    for start in range(0, 1 << n, chunk):
        stop = min(start + chunk, 1 << n)
        hits = np.nonzero(vt_syndromes(n, start, stop) == a)[0] + start
        out.extend(hits.tolist())
    return out


def vt_size(n: int, a: int = 0) -> int:
    a %= n + 1
    total = 0
    for start in range(0, 1 << n, 1 << 20):
        stop = min(start + (1 << 20), 1 << n)
        total += int(np.count_nonzero(vt_syndromes(n, start, stop) == a))
    return total


# -- graphs -----------------------------------------------------------------


def path_graph(m: int) -> Graph:
    return Graph.from_edges(m, [(i, i + 1) for i in range(m - 1)])


def cycle_graph(m: int) -> Graph:
    return Graph.from_edges(m, [(i, (i + 1) % m) for i in range(m)])


def star_graph(k: int) -> Graph:
    """K_{1,k}: centre 0 joined to leaves 1..k."""
    return Graph.from_edges(k + 1, [(0, i) for i in range(1, k + 1)])


def complete_graph(m: int) -> Graph:
    return Graph.from_edges(m, itertools.combinations(range(m), 2))


def empty_graph(m: int) -> Graph:
    return Graph.from_edges(m, [])


def complete_multipartite(parts: Sequence[int]) -> Graph:
    owner = [p for p, size in enumerate(parts) for _ in range(size)]
    m = len(owner)
    return Graph.from_edges(
        m, [(u, v) for u, v in itertools.combinations(range(m), 2) if owner[u] != owner[v]]
    )


def strong_product(G: Graph, H: Graph) -> Graph:
    """(g, h) ~ (g', h') iff each coordinate is equal or adjacent, and not both equal."""
    nh = H.num_vertices
    edges = []
    for g in range(G.num_vertices):
        gs = {g} | G.adjacency[g]
        for h in range(nh):
            hs = {h} | H.adjacency[h]
            u = g * nh + h
            for g2 in gs:
                for h2 in hs:
                    v = g2 * nh + h2
                    if u < v:
                        edges.append((u, v))
    return Graph.from_edges(G.num_vertices * nh, edges)


def strong_power(G: Graph, m: int) -> Graph:
    out = G
    for _ in range(m - 1):
        out = strong_product(out, G)
    return out


def vertex_clique_channel(num_vertices: int, cliques: Sequence[Sequence[int]]) -> Channel:
    """Vertex/clique incidence H: inputs are vertices, outputs are the cliques."""
    nbrs: list[list[int]] = [[] for _ in range(num_vertices)]
    for c, members in enumerate(cliques):
        for v in members:
            nbrs[v].append(c)
    return Channel.from_neighborhoods(nbrs, len(cliques))

