"""Bit-packed simple graphs and the graph families used throughout the package.

A graph on n vertices is stored as n integer bitmasks, one adjacency row per
vertex.  That keeps edge tests O(1) and lets the clique and connectivity code
work on whole neighborhoods with single AND/OR operations.  Everything here is
immutable: operations return new Graph values.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "Graph",
    "TailedCliqueSpec",
    "empty",
    "complete",
    "path",
    "cycle",
    "star",
    "turan",
    "turan_edge_count",
    "complete_multipartite",
    "kite",
    "tailed_clique",
    "theta_kite",
    "join",
    "disjoint_union",
    "complement",
    "attach_path",
    "add_edge",
    "remove_edge",
    "induced_subgraph",
    "relabel",
    "pair_index",
    "encode",
    "decode",
    "connected_components",
    "is_connected",
    "min_degree",
    "max_degree",
    "vertex_connectivity",
    "is_isomorphic",
]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: vertex count plus one adjacency bitmask per vertex."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"graph order must be positive, got {self.n}")
        if len(self.rows) != self.n:
            raise ValueError("row count does not match vertex count")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.rows):
            if row & ~full:
                raise ValueError(f"row {i} has bits outside 0..{self.n - 1}")
            if row >> i & 1:
                raise ValueError(f"self-loop at vertex {i}")
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if (self.rows[i] >> j & 1) != (self.rows[j] >> i & 1):
                    raise ValueError(f"adjacency not symmetric at ({i}, {j})")

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.rows[i] >> j & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.rows]

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.rows[v])

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    def edges(self):
        """Yield edges (i, j) with i < j in lexicographic order."""
        for i in range(self.n):
            rest = self.rows[i] >> (i + 1) << (i + 1)
            for j in _bits(rest):
                yield (i, j)

    @property
    def is_complete(self) -> bool:
        return self.edge_count == self.n * (self.n - 1) // 2

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for order {n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------

def empty(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    return Graph(n, (0,) * n)


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def path(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs order >= 3, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> Graph:
    """Star on n vertices: vertex 0 adjacent to all others."""
    return Graph.from_edges(n, ((0, v) for v in range(1, n)))


def turan(n: int, r: int) -> Graph:
    """Complete r-partite graph on n vertices with near-equal parts.

    With n = k*r + t, the first t parts have size k+1 and the remaining r-t
    have size k; vertices are numbered consecutively part by part, so the
    layout (and hence the graph6 string) is deterministic.
    """
    if not 1 <= r <= n:
        raise ValueError(f"need 1 <= r <= n, got r={r}, n={n}")
    k, t = divmod(n, r)
    sizes = [k + 1] * t + [k] * (r - t)
    return complete_multipartite(*sizes)


def turan_edge_count(n: int, r: int) -> int:
    """Edge count of the Turan graph, by complement counting (exact integer)."""
    if not 1 <= r <= n:
        raise ValueError(f"need 1 <= r <= n, got r={r}, n={n}")
    k, t = divmod(n, r)
    within = t * (k + 1) * k // 2 + (r - t) * k * (k - 1) // 2
    return n * (n - 1) // 2 - within


def complete_multipartite(*sizes: int) -> Graph:
    """Join of empty graphs with the given part sizes (parts numbered in order)."""
    if not sizes:
        raise ValueError("need at least one part")
    if any(s < 1 for s in sizes):
        raise ValueError(f"part sizes must be positive, got {sizes}")
    n = sum(sizes)
    edges = []
    start = 0
    bounds = []
    for s in sizes:
        bounds.append((start, start + s))
        start += s
    for a in range(len(sizes)):
        for b in range(a + 1, len(sizes)):
            for u in range(*bounds[a]):
                for v in range(*bounds[b]):
                    edges.append((u, v))
    return Graph.from_edges(n, edges)


def kite(n: int, r: int) -> Graph:
    """K_r with a pendant path of length n-r attached at clique vertex 0."""
    if not 2 <= r <= n:
        raise ValueError(f"need 2 <= r <= n, got r={r}, n={n}")
    return attach_path(complete(r), 0, n - r)


@dataclass(frozen=True)
class TailedCliqueSpec:
    """K_r carrying pendant paths of lengths k and l at two distinct clique vertices."""

    r: int
    k: int
    l: int

    def __post_init__(self):
        if self.r < 3:
            raise ValueError(f"clique order must be >= 3, got {self.r}")
        if self.k < 0 or self.l < 0:
            raise ValueError(f"tail lengths must be >= 0, got {self.k}, {self.l}")

    @property
    def n(self) -> int:
        return self.r + self.k + self.l


def tailed_clique(r: int, k: int, l: int) -> Graph:
    """Realize a tailed clique: tails of length k at vertex 0 and l at vertex 1.

    Vertex layout: 0..r-1 clique (0 and 1 carry the tails, 2..r-1 are the
    hubs), r..r+k-1 first tail in path order, r+k..n-1 second tail.
    """
    spec = TailedCliqueSpec(r, k, l)
    g = attach_path(complete(spec.r), 0, spec.k)
    return attach_path(g, 1, spec.l)


def theta_kite(r: int, k: int) -> Graph:
    """K_r plus a path of k vertices whose first vertex joins clique vertices 0 and 1."""
    if r < 3:
        raise ValueError(f"clique order must be >= 3, got {r}")
    if k < 1:
        raise ValueError(f"path length must be >= 1, got {k}")
    g = attach_path(complete(r), 0, k)
    return add_edge(g, 1, r)


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus every edge between the two vertex sets."""
    g = disjoint_union(g1, g2)
    rows = list(g.rows)
    left = (1 << g1.n) - 1
    right = ((1 << g.n) - 1) ^ left
    for v in range(g1.n):
        rows[v] |= right
    for v in range(g1.n, g.n):
        rows[v] |= left
    return Graph(g.n, tuple(rows))


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    rows = list(g1.rows) + [row << g1.n for row in g2.rows]
    return Graph(g1.n + g2.n, tuple(rows))


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full ^ row ^ (1 << v) for v, row in enumerate(g.rows)))


def attach_path(g: Graph, v: int, k: int) -> Graph:
    """Append a pendant path of k new vertices rooted at vertex v."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range for order {g.n}")
    if k < 0:
        raise ValueError(f"path length must be >= 0, got {k}")
    n = g.n + k
    rows = [row for row in g.rows] + [0] * k
    prev = v
    for w in range(g.n, n):
        rows[prev] |= 1 << w
        rows[w] |= 1 << prev
        prev = w
    return Graph(n, tuple(rows))


def add_edge(g: Graph, u: int, v: int) -> Graph:
    if u == v or not (0 <= u < g.n and 0 <= v < g.n):
        raise ValueError(f"invalid edge ({u}, {v})")
    rows = list(g.rows)
    rows[u] |= 1 << v
    rows[v] |= 1 << u
    return Graph(g.n, tuple(rows))


def remove_edge(g: Graph, u: int, v: int) -> Graph:
    if not g.has_edge(u, v):
        raise ValueError(f"edge ({u}, {v}) not present")
    rows = list(g.rows)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return Graph(g.n, tuple(rows))


def induced_subgraph(g: Graph, vertices) -> Graph:
    """Subgraph induced on the given vertices, renumbered in the order given."""
    vs = list(vertices)
    pos = {v: i for i, v in enumerate(vs)}
    if len(pos) != len(vs):
        raise ValueError("duplicate vertices")
    rows = [0] * len(vs)
    for i, v in enumerate(vs):
        for u in _bits(g.rows[v]):
            if u in pos:
                rows[i] |= 1 << pos[u]
    return Graph(len(vs), tuple(rows))


def relabel(g: Graph, perm) -> Graph:
    """Image of g under the permutation v -> perm[v]."""
    perm = list(perm)
    if sorted(perm) != list(range(g.n)):
        raise ValueError("not a permutation of the vertex set")
    rows = [0] * g.n
    for v in range(g.n):
        for u in _bits(g.rows[v]):
            rows[perm[v]] |= 1 << perm[u]
    return Graph(g.n, tuple(rows))


# ---------------------------------------------------------------------------
# Integer codes (upper-triangle bit packing)
# ---------------------------------------------------------------------------

def pair_index(i: int, j: int) -> int:
    """Bit position of pair {i, j} in column-major upper-triangle order.

    The order is (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ... -- the same
    order graph6 uses, so code bit b corresponds to graph6 bit b.
    """
    if i == j:
        raise ValueError("no diagonal pairs")
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


def encode(g: Graph) -> int:
    code = 0
    for i, j in g.edges():
        code |= 1 << pair_index(i, j)
    return code


def decode(n: int, code: int) -> Graph:
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    if not 0 <= code < 1 << (n * (n - 1) // 2):
        raise ValueError(f"code {code} out of range for order {n}")
    rows = [0] * n
    for j in range(1, n):
        for i in range(j):
            if code >> pair_index(i, j) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(n, tuple(rows))


# ---------------------------------------------------------------------------
# Structural queries
# ---------------------------------------------------------------------------

def _component_mask(g: Graph, start: int) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        reach = 0
        for v in _bits(frontier):
            reach |= g.rows[v]
        frontier = reach & ~seen
        seen |= frontier
    return seen


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex lists of the connected components, ordered by smallest vertex."""
    remaining = (1 << g.n) - 1
    comps = []
    while remaining:
        start = (remaining & -remaining).bit_length() - 1
        mask = _component_mask(g, start)
        comps.append(_bits(mask))
        remaining &= ~mask
    return comps


def is_connected(g: Graph) -> bool:
    return _component_mask(g, 0) == (1 << g.n) - 1


def min_degree(g: Graph) -> int:
    return min(g.degrees())


def max_degree(g: Graph) -> int:
    return max(g.degrees())


def vertex_connectivity(g: Graph) -> int:
    """Minimum vertex cut size; n-1 for complete graphs, 0 when disconnected.

    Menger: for each non-adjacent pair (s, t), the maximum number of
    internally vertex-disjoint s-t paths equals the minimum s-t vertex cut.
    Computed as unit-capacity max flow on the vertex-split digraph.
    """
    if not is_connected(g):
        return 0
    if g.is_complete:
        return g.n - 1
    best = g.n - 2
    for s in range(g.n):
        for t in range(s + 1, g.n):
            if not g.has_edge(s, t):
                best = min(best, _split_flow(g, s, t, best))
                if best == 1:
                    return 1
    return best


def _split_flow(g: Graph, s: int, t: int, limit: int) -> int:
    # Nodes 2v (in) and 2v+1 (out); internal arcs carry capacity 1, edge
    # arcs are uncapacitated. Flow from out(s) to in(t); augmentation stops
    # at `limit` since the caller only needs min(limit, flow).
    n2 = 2 * g.n
    big = g.n
    cap = [[0] * n2 for _ in range(n2)]
    for v in range(g.n):
        cap[2 * v][2 * v + 1] = 1
    for u, v in g.edges():
        cap[2 * u + 1][2 * v] = big
        cap[2 * v + 1][2 * u] = big
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while flow < limit:
        parent = [-1] * n2
        parent[source] = source
        queue = [source]
        while queue and parent[sink] == -1:
            nxt = []
            for u in queue:
                row = cap[u]
                for v in range(n2):
                    if row[v] > 0 and parent[v] == -1:
                        parent[v] = u
                        nxt.append(v)
            queue = nxt
        if parent[sink] == -1:
            break
        v = sink
        while v != source:
            u = parent[v]
            cap[u][v] -= 1
            cap[v][u] += 1
            v = u
        flow += 1
    return flow


# ---------------------------------------------------------------------------
# Isomorphism
# ---------------------------------------------------------------------------

def _stable_colors(g: Graph) -> tuple[int, ...]:
    colors = tuple(g.degree(v) for v in range(g.n))
    while True:
        keys = [
            (colors[v], tuple(sorted(colors[u] for u in g.neighbors(v))))
            for v in range(g.n)
        ]
        palette = {key: i for i, key in enumerate(sorted(set(keys)))}
        refined = tuple(palette[key] for key in keys)
        if refined == colors:
            return colors
        colors = refined


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    """Exact isomorphism test by color refinement plus backtracking.

    Intended for small orders (n <= 10 or so); larger inputs still give the
    exact answer, just slowly.
    """
    if g1.n != g2.n or g1.edge_count != g2.edge_count:
        return False
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return False
    c1 = _stable_colors(g1)
    c2 = _stable_colors(g2)
    if sorted(c1) != sorted(c2):
        return False

    n = g1.n
    # Most-constrained first: rare colors early, ties by vertex index.
    freq = {c: c1.count(c) for c in set(c1)}
    order = sorted(range(n), key=lambda v: (freq[c1[v]], c1[v], v))
    mapping = [-1] * n
    used = 0

    def extend(k: int) -> bool:
        nonlocal used
        if k == n:
            return True
        v = order[k]
        row = g1.rows[v]
        for w in range(n):
            if used >> w & 1 or c2[w] != c1[v]:
                continue
            ok = True
            for idx in range(k):
                u = order[idx]
                if (row >> u & 1) != (g2.rows[w] >> mapping[u] & 1):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used |= 1 << w
                if extend(k + 1):
                    return True
                used &= ~(1 << w)
                mapping[v] = -1
        return False

    return extend(0)
