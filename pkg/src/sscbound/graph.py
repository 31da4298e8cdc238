"""Undirected simple graphs: construction, generators, traversal, edge-list I/O.

Nodes are integers 0..n-1. Graphs are immutable after construction. All
randomness flows through numpy's PCG64 generator so that every artifact is
reproducible from a recorded integer seed, bit-for-bit across platforms.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

import numpy as np

from .errors import (
    BadParams,
    Disconnected,
    DisconnectedAfterRetries,
    InvalidEdge,
    TooSmall,
)

__all__ = [
    "Graph",
    "LeaderSet",
    "make_rng",
    "derive_seed",
    "new_graph",
    "gen_path",
    "gen_cycle",
    "gen_erdos_renyi",
    "gen_barabasi_albert",
    "bfs_distances",
    "connected_components",
    "is_connected",
    "diameter",
    "write_edge_list",
    "parse_edge_list",
    "read_edge_list",
]

SeedLike = Union[int, None, np.random.SeedSequence, np.random.Generator]


def make_rng(seed: SeedLike = None) -> np.random.Generator:
    """Return a PCG64 generator; an existing Generator passes through unchanged."""
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def derive_seed(*parts: int) -> int:
    """Mix integer parts (e.g. master seed, grid index, trial index) into one
    reproducible 64-bit seed."""
    ss = np.random.SeedSequence([int(p) for p in parts])
    return int(ss.generate_state(1, np.uint64)[0])


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with sorted adjacency tuples.

    Attributes:
        n: number of nodes (nodes are 0..n-1).
        adj: adj[v] is the sorted tuple of neighbors of v.
    """

    n: int
    adj: tuple[tuple[int, ...], ...]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def edges(self) -> Iterable[tuple[int, int]]:
        """Yield edges (u, v) with u < v, in sorted order."""
        for u in range(self.n):
            for v in self.adj[u]:
                if u < v:
                    yield (u, v)

    def has_edge(self, u: int, v: int) -> bool:
        a = self.adj[u]
        lo, hi = 0, len(a)
        while lo < hi:
            mid = (lo + hi) // 2
            if a[mid] < v:
                lo = mid + 1
            else:
                hi = mid
        return lo < len(a) and a[lo] == v


def new_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a Graph from an edge list, deduplicating parallel edges.

    Raises InvalidEdge for self-loops or endpoints outside 0..n-1.
    """
    if n < 0:
        raise BadParams(f"node count must be nonnegative, got {n}")
    seen: set[tuple[int, int]] = set()
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        u, v = int(u), int(v)
        if u == v:
            raise InvalidEdge(f"self-loop at node {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidEdge(f"edge ({u}, {v}) outside node range 0..{n - 1}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            continue
        seen.add(key)
        adj[u].append(v)
        adj[v].append(u)
    return Graph(n, tuple(tuple(sorted(a)) for a in adj))


@dataclass(frozen=True)
class LeaderSet:
    """Nonempty ordered tuple of distinct leader node ids.

    The order is significant: coordinate j of every distance-to-leader vector
    refers to leaders[j].
    """

    leaders: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.leaders) == 0:
            raise BadParams("leader set must be nonempty")
        if len(set(self.leaders)) != len(self.leaders):
            raise BadParams(f"leader ids must be distinct, got {self.leaders}")

    @classmethod
    def of(cls, leaders: "LeaderSet | Sequence[int]") -> "LeaderSet":
        if isinstance(leaders, LeaderSet):
            return leaders
        return cls(tuple(int(v) for v in leaders))

    def validate_for(self, n: int) -> None:
        for v in self.leaders:
            if not 0 <= v < n:
                raise BadParams(f"leader {v} outside node range 0..{n - 1}")

    def __len__(self) -> int:
        return len(self.leaders)

    def __iter__(self):
        return iter(self.leaders)

    def __getitem__(self, i: int) -> int:
        return self.leaders[i]


def gen_path(n: int) -> Graph:
    """Path graph 0-1-...-(n-1). Requires n >= 2."""
    if n < 2:
        raise TooSmall(f"path needs n >= 2, got {n}")
    return new_graph(n, [(i, i + 1) for i in range(n - 1)])


def gen_cycle(n: int) -> Graph:
    """Cycle graph 0-1-...-(n-1)-0. Requires n >= 3."""
    if n < 3:
        raise TooSmall(f"cycle needs n >= 3, got {n}")
    return new_graph(n, [(i, (i + 1) % n) for i in range(n)])


def gen_erdos_renyi(
    n: int, p: float, seed: SeedLike = None, connected: bool = False
) -> Graph:
    """G(n, p) random graph: each pair independently an edge with probability p.

    Pairs are sampled in row-major order (u, then all v > u), so the output is
    a pure function of (n, p, seed). With connected=True, resamples up to 100
    times and returns the first connected draw, raising
    DisconnectedAfterRetries if none is.
    """
    if n < 1:
        raise BadParams(f"n must be >= 1, got {n}")
    if not 0.0 <= p <= 1.0:
        raise BadParams(f"edge probability must be in [0, 1], got {p}")
    rng = make_rng(seed)
    for _ in range(100):
        edges: list[tuple[int, int]] = []
        for u in range(n - 1):
            hits = np.nonzero(rng.random(n - 1 - u) < p)[0]
            edges.extend((u, u + 1 + int(j)) for j in hits)
        g = new_graph(n, edges)
        if not connected or is_connected(g):
            return g
    raise DisconnectedAfterRetries(
        f"no connected G({n}, {p}) instance in 100 draws"
    )


def gen_barabasi_albert(n: int, m_attach: int, seed: SeedLike = None) -> Graph:
    """Preferential-attachment graph: star seed, then degree-proportional growth.

    The seed graph is a star on nodes 0..m_attach with hub 0. Each later node
    attaches to m_attach distinct existing nodes, drawn sequentially with
    probability proportional to current degree (degrees are not updated until
    the node's draws finish). Output is connected and simple, with exactly
    m_attach * (n - m_attach - 1) + m_attach edges.
    """
    if m_attach < 1:
        raise BadParams(f"m_attach must be >= 1, got {m_attach}")
    if n < m_attach + 1:
        raise TooSmall(f"need n >= m_attach + 1 = {m_attach + 1}, got {n}")
    rng = make_rng(seed)
    edges = [(0, v) for v in range(1, m_attach + 1)]
    deg = np.zeros(n, dtype=np.float64)
    deg[0] = m_attach
    deg[1 : m_attach + 1] = 1.0
    for new in range(m_attach + 1, n):
        w = deg[:new].copy()
        for _ in range(m_attach):
            t = int(rng.choice(new, p=w / w.sum()))
            edges.append((t, new))
            w[t] = 0.0  # without replacement
        for t, v in edges[-m_attach:]:
            deg[t] += 1.0
        deg[new] = m_attach
    return new_graph(n, edges)


def bfs_distances(g: Graph, source: int) -> list[int | None]:
    """Hop distances from source; unreachable nodes get None."""
    if not 0 <= source < g.n:
        raise BadParams(f"source {source} outside node range 0..{g.n - 1}")
    dist: list[int | None] = [None] * g.n
    dist[source] = 0
    q = deque([source])
    while q:
        u = q.popleft()
        du = dist[u]
        for v in g.adj[u]:
            if dist[v] is None:
                dist[v] = du + 1
                q.append(v)
    return dist


def connected_components(
    g: Graph, removed: Iterable[int] = ()
) -> list[list[int]]:
    """Components of g with `removed` nodes deleted, ordered by smallest member.

    Each component is a sorted list of node ids.
    """
    gone = set(removed)
    seen = [False] * g.n
    comps: list[list[int]] = []
    for s in range(g.n):
        if seen[s] or s in gone:
            continue
        comp = []
        q = deque([s])
        seen[s] = True
        while q:
            u = q.popleft()
            comp.append(u)
            for v in g.adj[u]:
                if not seen[v] and v not in gone:
                    seen[v] = True
                    q.append(v)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return sum(d is not None for d in bfs_distances(g, 0)) == g.n


def diameter(g: Graph) -> int:
    """Largest hop distance over all node pairs. Raises Disconnected."""
    if g.n == 0:
        raise Disconnected("diameter of the empty graph is undefined")
    best = 0
    for s in range(g.n):
        dist = bfs_distances(g, s)
        for d in dist:
            if d is None:
                raise Disconnected("graph is not connected")
            if d > best:
                best = d
    return best


def write_edge_list(g: Graph, path: str) -> None:
    """Write the plain-text edge-list format: 'n e' header then one edge per line."""
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_edge_list(g))


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format. Lines starting with '#' and blanks are ignored.

    Raises ValueError on malformed input and InvalidEdge on bad endpoints.
    """
    rows: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((lineno, line))
    if not rows:
        raise ValueError("edge list is empty: missing 'n e' header")
    header_no, header = rows[0]
    parts = header.split()
    if len(parts) != 2:
        raise ValueError(f"line {header_no}: header must be 'n e', got {header!r}")
    try:
        n, e = int(parts[0]), int(parts[1])
    except ValueError:
        raise ValueError(f"line {header_no}: header must be two integers") from None
    edges = []
    for lineno, line in rows[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ValueError(f"line {lineno}: endpoints must be integers") from None
    if len(edges) != e:
        raise ValueError(f"header declares {e} edges but {len(edges)} found")
    return new_graph(n, edges)


def read_edge_list(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh.read())
