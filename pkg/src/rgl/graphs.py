"""Immutable simple graphs on bitset adjacency rows, plus the graph families
used by the witness constructions: complete multipartite graphs, joins,
circulants, and bipartite circulants.

Vertices are 0-based integers.  Row ``i`` is an int whose bit ``j`` says
``i ~ j``.  Graphs are values: every operation returns a new graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

#: Hard cap on graph order.  Everything the constructions produce stays far
#: below this; the cap exists so a typo cannot allocate gigabytes of rows.
MAX_ORDER = 512


class GraphOrderError(ValueError):
    """Raised when a requested graph exceeds the configured order cap."""


class ResourceLimitExceeded(RuntimeError):
    """A configured search/size budget was exhausted (distinct from 'no')."""


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Finite simple undirected graph with bitset adjacency rows."""

    __slots__ = ("order", "rows", "_hash")

    def __init__(self, order: int, rows: Sequence[int]):
        if order < 0:
            raise ValueError("order must be non-negative")
        if order > MAX_ORDER:
            raise GraphOrderError(f"order {order} exceeds cap {MAX_ORDER}")
        if len(rows) != order:
            raise ValueError("need one adjacency row per vertex")
        full = (1 << order) - 1
        for v, row in enumerate(rows):
            if row & (1 << v):
                raise ValueError(f"self-loop at vertex {v}")
            if row & ~full:
                raise ValueError(f"row {v} mentions vertices >= order")
        for v, row in enumerate(rows):
            for u in _bits(row):
                if not rows[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at ({v},{u})")
        self.order = order
        self.rows = tuple(rows)
        self._hash = hash((order, self.rows))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and self.order == other.order
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, edges={self.edge_count()})"

    # -- basic queries -------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors_mask(self, v: int) -> int:
        return self.rows[v]

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(r.bit_count() for r in self.rows))

    def max_degree(self) -> int:
        return max((r.bit_count() for r in self.rows), default=0)

    def min_degree(self) -> int:
        return min((r.bit_count() for r in self.rows), default=0)

    def is_regular(self, d: int | None = None) -> bool:
        degs = {r.bit_count() for r in self.rows}
        if not degs:
            return True
        if len(degs) > 1:
            return False
        return d is None or degs == {d}

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.order):
            for v in _bits(self.rows[u] >> (u + 1) << (u + 1)):
                yield (u, v)

    def vertex_mask(self) -> int:
        return (1 << self.order) - 1

    # -- derived graphs ------------------------------------------------

    def complement(self) -> "Graph":
        full = (1 << self.order) - 1
        return Graph(
            self.order,
            [~r & full & ~(1 << v) for v, r in enumerate(self.rows)],
        )

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph on the given vertices (sorted), with the list
        mapping new labels back to old ones."""
        keep = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(keep)}
        rows = [0] * len(keep)
        for i, v in enumerate(keep):
            for u in _bits(self.rows[v]):
                j = pos.get(u)
                if j is not None:
                    rows[i] |= 1 << j
        return Graph(len(keep), rows), keep

    def induced_mask(self, mask: int) -> tuple["Graph", list[int]]:
        return self.induced(_bits(mask))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Image under ``perm`` (vertex v of self becomes perm[v])."""
        rows = [0] * self.order
        for v in range(self.order):
            for u in _bits(self.rows[v]):
                rows[perm[v]] |= 1 << perm[u]
        return Graph(self.order, rows)

    def components(self) -> list[int]:
        """Connected components as vertex masks, ordered by least vertex."""
        seen = 0
        out = []
        for v in range(self.order):
            if seen >> v & 1:
                continue
            comp = 1 << v
            frontier = 1 << v
            while frontier:
                nxt = 0
                for u in _bits(frontier):
                    nxt |= self.rows[u]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            out.append(comp)
        return out


# -- constructors -------------------------------------------------------


def empty_graph(n: int) -> Graph:
    return Graph(n, [0] * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, [full & ~(1 << v) for v in range(n)])


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise ValueError("self-loop")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows)


def path_graph(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(m: int) -> Graph:
    """K_{1,m}: center 0 joined to m leaves."""
    return from_edges(m + 1, [(0, i) for i in range(1, m + 1)])


def complete_multipartite(parts: Sequence[int]) -> Graph:
    """Independent parts of the given sizes, all cross pairs adjacent."""
    if any(a <= 0 for a in parts):
        raise ValueError("part sizes must be positive")
    n = sum(parts)
    masks = []
    start = 0
    for a in parts:
        masks.append(((1 << a) - 1) << start)
        start += a
    full = (1 << n) - 1
    rows = []
    start = 0
    for a, m in zip(parts, masks):
        for _ in range(a):
            rows.append(full & ~m)
        start += a
    return Graph(n, rows)


def disjoint_union(graphs: Sequence[Graph]) -> Graph:
    n = sum(g.order for g in graphs)
    rows: list[int] = []
    shift = 0
    for g in graphs:
        rows.extend(r << shift for r in g.rows)
        shift += g.order
    return Graph(n, rows)


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus all cross edges."""
    n1, n2 = g1.order, g2.order
    m1 = (1 << n1) - 1
    m2 = ((1 << n2) - 1) << n1
    rows = [r | m2 for r in g1.rows]
    rows += [(r << n1) | m1 for r in g2.rows]
    return Graph(n1 + n2, rows)


def circulant(mu: int, connection_set: Iterable[int]) -> Graph:
    """Vertices Z_mu; i ~ j iff (i - j) mod mu lies in the connection set.

    The set must be closed under negation mod mu and must not contain 0.
    """
    conn = {d % mu for d in connection_set}
    if 0 in conn:
        raise ValueError("connection set must not contain 0")
    if any((-d) % mu not in conn for d in conn):
        raise ValueError("connection set must be closed under negation")
    rows = [0] * mu
    for i in range(mu):
        for d in conn:
            rows[i] |= 1 << ((i + d) % mu)
    return Graph(mu, rows)


def bipartite_circulant(lam: int, degree: int) -> Graph:
    """d-regular bipartite graph on sides X = {0..lam-1}, Y = {lam..2lam-1}:
    x_k ~ y_l iff l = k + i (mod lam) for i = 0..degree-1.
    """
    if not 0 <= degree <= lam:
        raise ValueError("need 0 <= degree <= side size")
    rows = [0] * (2 * lam)
    for k in range(lam):
        for i in range(degree):
            ell = (k + i) % lam
            rows[k] |= 1 << (lam + ell)
            rows[lam + ell] |= 1 << k
    return Graph(2 * lam, rows)


# -- chromatic analysis --------------------------------------------------


@dataclass(frozen=True)
class ChromaticData:
    """Exact chromatic number and chromatic surplus (minimum color-class
    size over all proper colorings with exactly `chi` colors)."""

    chi: int
    surplus: int


#: chromatic_data is exhaustive; refuse anything that could run for hours.
CHROMATIC_ORDER_CAP = 20


def _colorable(g: Graph, k: int, order: list[int]) -> bool:
    n = g.order
    assign = [-1] * n

    def rec(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        used = {assign[u] for u in _bits(g.rows[v]) if assign[u] >= 0}
        limit = min(k, max([assign[order[j]] for j in range(i)], default=-1) + 2)
        for c in range(limit):
            if c not in used:
                assign[v] = c
                if rec(i + 1):
                    return True
                assign[v] = -1
        return False

    return rec(0)


def chromatic_number(g: Graph, order_cap: int = CHROMATIC_ORDER_CAP) -> int:
    if g.order < 1:
        raise ValueError("chromatic data needs at least one vertex")
    if g.order > order_cap:
        raise ResourceLimitExceeded(
            f"exact coloring capped at order {order_cap}"
        )
    order = sorted(range(g.order), key=g.degree, reverse=True)
    for k in range(1, g.order + 1):
        if _colorable(g, k, order):
            return k
    raise AssertionError("unreachable: K_n is n-colorable")


def chromatic_data(g: Graph, order_cap: int = CHROMATIC_ORDER_CAP) -> ChromaticData:
    """Exact chi plus surplus by enumerating all chi-colorings.

    Color classes are enumerated once per set partition (colors appear in
    first-use order), so the minimum class size is over all colorings.
    """
    chi = chromatic_number(g, order_cap)
    n = g.order
    assign = [-1] * n
    best = n + 1

    def rec(v: int, used: int) -> None:
        nonlocal best
        if v == n:
            sizes = [0] * chi
            for c in assign:
                sizes[c] += 1
            best = min(best, min(sizes))
            return
        nb = g.rows[v]
        blocked = {assign[u] for u in _bits(nb) if u < v}
        for c in range(min(used + 1, chi)):
            if c not in blocked:
                assign[v] = c
                rec(v + 1, max(used, c + 1))
                assign[v] = -1

    rec(0, 0)
    return ChromaticData(chi=chi, surplus=best)
