"""Simple undirected graphs, unicyclic family generators, and core reduction.

Vertices are the integers 0..n-1. A graph is stored as a tuple of sorted
neighbor tuples, so values are immutable and safe to share across threads.

Family labeling conventions (fixed so that constructions elsewhere in the
package can address vertices by index):

* path: 0-1-2-...-(n-1).
* cycle: 0-1-...-(n-1)-0; the closing edge is (0, n-1).
* lollipop(n, r): vertices 0..r-1 form the cycle (closing edge (0, r-1));
  the tail is r-1 - r - r+1 - ... - n-1, so the unique degree-3 vertex is
  r-1 and the pendant end is n-1.
* compass(n, r, r', t): indices 0..t-1 are the first tail (pendant end 0),
  t..t+r-1 the cycle (closing edge (t, t+r-1)), and t+r..n-1 the second
  tail hanging from t+r-1. The first tail attaches by the edge
  (t-1, t+r'-1), which puts its attachment point at cycle distance r' from
  the degree-3 vertex t+r-1. Deleting (t-1, t+r'-1) therefore leaves the
  disjoint union of a t-path and a lollipop on n-t vertices.
"""

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, TextIO

from .errors import (
    EdgeNotPresentError,
    InvalidParameterError,
    NotConnectedError,
    NotUnicyclicError,
)


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on vertices 0..n-1."""

    n: int
    adj: tuple[tuple[int, ...], ...]

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 1:
            raise InvalidParameterError(f"graph needs at least one vertex, got n={n}")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidParameterError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise InvalidParameterError(f"self-loop at vertex {u}")
            if v in nbrs[u]:
                raise InvalidParameterError(f"duplicate edge ({u},{v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return Graph(n, tuple(tuple(sorted(s)) for s in nbrs))

    @property
    def m(self) -> int:
        """Edge count."""
        return sum(len(a) for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> list[tuple[int, int]]:
        """All edges as sorted (u, v) pairs with u < v, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def is_connected(self) -> bool:
        seen = [False] * self.n
        seen[0] = True
        queue = deque([0])
        count = 1
        while queue:
            u = queue.popleft()
            for w in self.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    count += 1
                    queue.append(w)
        return count == self.n

    def with_edge_removed(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise EdgeNotPresentError(f"edge ({u},{v}) not in graph")
        return Graph.from_edges(self.n, [e for e in self.edges() if e != (min(u, v), max(u, v))])

    def with_edge_added(self, u: int, v: int) -> "Graph":
        if u == v or self.has_edge(u, v):
            raise InvalidParameterError(f"cannot add edge ({u},{v})")
        return Graph.from_edges(self.n, self.edges() + [(u, v)])

    def without_vertex(self, v: int) -> "Graph":
        """Delete vertex v; remaining vertices are reindexed preserving order."""
        if self.n <= 1:
            raise InvalidParameterError("cannot delete the last vertex")
        if not 0 <= v < self.n:
            raise InvalidParameterError(f"vertex {v} out of range")
        relabel = {u: (u if u < v else u - 1) for u in range(self.n) if u != v}
        edges = [(relabel[a], relabel[b]) for a, b in self.edges() if v not in (a, b)]
        return Graph.from_edges(self.n - 1, edges)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """g1 followed by g2 with g2's labels shifted by g1.n."""
    edges = g1.edges() + [(u + g1.n, v + g1.n) for u, v in g2.edges()]
    return Graph.from_edges(g1.n + g2.n, edges)


def join_with_edge(g1: Graph, u: int, g2: Graph, v: int) -> Graph:
    """Disjoint union of g1 and g2 plus the bridge (u, g1.n + v)."""
    return disjoint_union(g1, g2).with_edge_added(u, g1.n + v)


def pendant_vertices(g: Graph) -> list[int]:
    return [v for v in range(g.n) if g.degree(v) == 1]


# ---------------------------------------------------------------------------
# family generators


def make_path(n: int) -> Graph:
    if n < 1:
        raise InvalidParameterError(f"path needs n >= 1, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def make_cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidParameterError(f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])


def make_lollipop(n: int, r: int) -> Graph:
    """Cycle of length r with a path of n - r extra vertices hanging from r-1.

    r = n is allowed and degenerates to the plain cycle.
    """
    if not 3 <= r <= n:
        raise InvalidParameterError(f"lollipop needs 3 <= r <= n, got n={n} r={r}")
    if r == n:
        return make_cycle(n)
    edges = [(i, i + 1) for i in range(r - 1)] + [(0, r - 1)]
    edges += [(r - 1 + j, r + j) for j in range(n - r)]
    return Graph.from_edges(n, edges)


@dataclass(frozen=True)
class CompassParams:
    """Parameters of a cycle with two tails at cycle distance r_prime.

    s = n - r - t is the second tail length and d = r_prime + t + s the
    diameter. Validity requires r_prime + min(t, s) >= floor(r/2): otherwise
    the walk from tail end to tail end is not a diametral path (a cycle
    vertex opposite the attachment points would be farther out) and the
    stated diameter formula fails.
    """

    n: int
    r: int
    r_prime: int
    t: int

    @property
    def s(self) -> int:
        return self.n - self.r - self.t

    @property
    def d(self) -> int:
        return self.r_prime + self.t + self.s

    def validate(self) -> None:
        if not 3 <= self.r <= self.n - 2:
            raise InvalidParameterError(f"compass needs 3 <= r <= n-2, got {self}")
        if not 1 <= self.r_prime <= self.r // 2:
            raise InvalidParameterError(f"compass needs 1 <= r' <= r/2, got {self}")
        if self.t < 1 or self.s < 1:
            raise InvalidParameterError(f"compass needs both tails nonempty, got {self}")
        if self.r_prime + min(self.t, self.s) < self.r // 2:
            raise InvalidParameterError(
                f"compass tails too short to be diametral: {self}"
            )


def make_compass(p: CompassParams) -> Graph:
    p.validate()
    t, r = p.t, p.r
    edges = [(i, i + 1) for i in range(t - 1)]                       # first tail
    edges += [(t + i, t + i + 1) for i in range(r - 1)] + [(t, t + r - 1)]  # cycle
    edges += [(t - 1, t + p.r_prime - 1)]                            # attachment
    edges += [(t + r - 1 + j, t + r + j) for j in range(p.s)]        # second tail
    return Graph.from_edges(p.n, edges)


# ---------------------------------------------------------------------------
# structure


@dataclass
class UnicyclicDecomposition:
    """The unique cycle plus the pendant tree hanging off each cycle vertex.

    trees maps every cycle vertex to the sorted non-cycle vertices of its
    tree (empty tuple when nothing hangs there); the tree vertex sets
    partition V minus the cycle.
    """

    cycle: tuple[int, ...]
    trees: dict[int, tuple[int, ...]] = field(default_factory=dict)

    @property
    def girth(self) -> int:
        return len(self.cycle)


def unicyclic_decompose(g: Graph) -> UnicyclicDecomposition:
    """Locate the unique cycle by repeatedly stripping degree-1 vertices."""
    if not g.is_connected():
        raise NotConnectedError("graph is not connected")
    if g.m != g.n:
        raise NotUnicyclicError(f"unicyclic graph needs |E| = n, got {g.m} != {g.n}")
    deg = [g.degree(v) for v in range(g.n)]
    removed = [False] * g.n
    queue = deque(v for v in range(g.n) if deg[v] == 1)
    while queue:
        v = queue.popleft()
        removed[v] = True
        for w in g.adj[v]:
            if not removed[w]:
                deg[w] -= 1
                if deg[w] == 1:
                    queue.append(w)
    cycle_set = {v for v in range(g.n) if not removed[v]}

    start = min(cycle_set)
    ordered = [start]
    prev = -1
    while True:
        nxt = min(w for w in g.adj[ordered[-1]] if w in cycle_set and w != prev)
        if nxt == start:
            break
        prev = ordered[-1]
        ordered.append(nxt)

    trees: dict[int, tuple[int, ...]] = {}
    seen = set(cycle_set)
    for root in ordered:
        bucket = []
        queue = deque(w for w in g.adj[root] if w not in seen)
        seen.update(queue)
        while queue:
            v = queue.popleft()
            bucket.append(v)
            for w in g.adj[v]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        trees[root] = tuple(sorted(bucket))
    return UnicyclicDecomposition(tuple(ordered), trees)


def girth(g: Graph) -> int:
    return unicyclic_decompose(g).girth


def bfs_distances(g: Graph, src: int) -> list[int]:
    dist = [-1] * g.n
    dist[src] = 0
    queue = deque([src])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def diameter_and_path(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Exact diameter and one diametral path, deterministically chosen.

    Ties break to the lexicographically smallest endpoint pair (u, v) with
    u < v, then to the lexicographically smallest vertex sequence from u.
    """
    if not g.is_connected():
        raise NotConnectedError("diameter of a disconnected graph is undefined")
    if g.n == 1:
        return 0, (0,)
    dist = [bfs_distances(g, u) for u in range(g.n)]
    d = max(max(row) for row in dist)
    u, v = min(
        (a, b) for a in range(g.n) for b in range(a + 1, g.n) if dist[a][b] == d
    )
    path = [u]
    cur = u
    while cur != v:
        cur = min(w for w in g.adj[cur] if dist[v][w] == dist[v][cur] - 1)
        path.append(cur)
    return d, tuple(path)


# ---------------------------------------------------------------------------
# reduction to the minimal core


@dataclass
class CoreClassification:
    """Minimal unicyclic subgraph containing a diametral path, classified.

    kind is one of "cycle", "lollipop", "compass", "other". params holds the
    reconstructed family parameters: (n,) for a cycle, (n, r) for a lollipop
    and (n, r, r_prime, t) for a compass with t <= s canonically (swapping
    the two tails is a graph isomorphism). core is reindexed over the sorted
    original labels listed in core_vertices; diametral_path keeps the labels
    of the input graph.
    """

    kind: str
    params: tuple[int, ...]
    core: Graph
    core_vertices: tuple[int, ...]
    diametral_path: tuple[int, ...]


def _tail_is_path(g: Graph, root: int, tree: set[int]) -> int | None:
    """Length of the tree at root if it is a path hanging off root, else None."""
    if not tree:
        return 0
    first = [w for w in g.adj[root] if w in tree]
    if len(first) != 1:
        return None
    count = 1
    prev, cur = root, first[0]
    while True:
        nxt = [w for w in g.adj[cur] if w in tree and w != prev]
        if not nxt:
            break
        if len(nxt) > 1:
            return None
        prev, cur = cur, nxt[0]
        count += 1
    return count if count == len(tree) else None


def _classify(core: Graph) -> tuple[str, tuple[int, ...]]:
    dec = unicyclic_decompose(core)
    r = dec.girth
    slots = [(pos, set(dec.trees[v])) for pos, v in enumerate(dec.cycle) if dec.trees[v]]
    if not slots:
        return "cycle", (core.n,)
    lengths = []
    for pos, tree in slots:
        ln = _tail_is_path(core, dec.cycle[pos], tree)
        if ln is None:
            return "other", ()
        lengths.append(ln)
    if len(slots) == 1:
        return "lollipop", (core.n, r)
    if len(slots) == 2:
        arc = abs(slots[0][0] - slots[1][0])
        r_prime = min(arc, r - arc)
        t = min(lengths)
        return "compass", (core.n, r, r_prime, t)
    return "other", ()


def reduce_to_core(g: Graph) -> CoreClassification:
    """Cycle plus diametral path plus (if needed) a shortest connector.

    Lower bounds certified on the core transfer to g because g is recovered
    from the core by repeatedly attaching pendant vertices.
    """
    dec = unicyclic_decompose(g)
    d, path = diameter_and_path(g)
    cycle_set = set(dec.cycle)
    keep = set(path) | cycle_set
    edge_set = set()
    for i in range(len(dec.cycle)):
        a, b = dec.cycle[i], dec.cycle[(i + 1) % len(dec.cycle)]
        edge_set.add((min(a, b), max(a, b)))
    for a, b in zip(path, path[1:]):
        edge_set.add((min(a, b), max(a, b)))

    if cycle_set.isdisjoint(path):
        # connect the path to the cycle by the unique shortest tree walk
        dist = [-1] * g.n
        parent = [-1] * g.n
        queue = deque()
        for v in sorted(cycle_set):
            dist[v] = 0
            queue.append(v)
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
        x = min(set(path), key=lambda v: (dist[v], v))
        while x not in cycle_set:
            keep.add(x)
            edge_set.add((min(x, parent[x]), max(x, parent[x])))
            x = parent[x]

    verts = sorted(keep)
    relabel = {v: i for i, v in enumerate(verts)}
    core = Graph.from_edges(len(verts), [(relabel[a], relabel[b]) for a, b in edge_set])
    kind, params = _classify(core)
    return CoreClassification(kind, params, core, tuple(verts), path)


# ---------------------------------------------------------------------------
# edge-list text format: "n m" header, then one "u v" line per edge with
# u < v, ASCII decimal; lines starting with '#' are comments.


def write_edge_list(g: Graph, dest: TextIO) -> None:
    dest.write(f"{g.n} {g.m}\n")
    for u, v in g.edges():
        dest.write(f"{u} {v}\n")


def read_edge_list(src: TextIO) -> Graph:
    lines: Iterator[str] = (
        line.strip() for line in src if line.strip() and not line.lstrip().startswith("#")
    )
    try:
        header = next(lines)
    except StopIteration:
        raise InvalidParameterError("empty edge-list input") from None
    try:
        n, m = (int(tok) for tok in header.split())
    except ValueError:
        raise InvalidParameterError(f"malformed header line: {header!r}") from None
    edges = []
    for line in lines:
        try:
            u, v = (int(tok) for tok in line.split())
        except ValueError:
            raise InvalidParameterError(f"malformed edge line: {line!r}") from None
        if not u < v:
            raise InvalidParameterError(f"edge lines need u < v, got {line!r}")
        edges.append((u, v))
    if len(edges) != m:
        raise InvalidParameterError(f"header promised {m} edges, found {len(edges)}")
    return Graph.from_edges(n, edges)
