"""Simple undirected graphs and the structural queries the engine needs.

Vertices are arbitrary non-negative integers. Derived graphs (after vertex
removal) keep the original ids, so a log of removals written against the
input graph stays meaningful at every intermediate stage.

Everything here is deterministic: queries that report a witness report the
lexicographically smallest one, and iteration orders are pinned by sorting.
"""

from collections import deque
from dataclasses import dataclass
from types import MappingProxyType

from .errors import (
    DuplicateEdgeError,
    IdOutOfRangeError,
    SelfLoopError,
    UnknownVertexError,
)


class Graph:
    """Immutable simple graph backed by adjacency sets.

    Build instances with :func:`build_graph`, or derive them from an existing
    graph with :meth:`remove_vertices` / :meth:`subgraph`.
    """

    __slots__ = ("_adj", "_m")

    def __init__(self, adjacency):
        adj = {}
        for v, nbrs in adjacency.items():
            adj[v] = frozenset(nbrs)
        half_edges = 0
        for v, nbrs in adj.items():
            for u in nbrs:
                if u == v:
                    raise SelfLoopError(f"vertex {v} listed as its own neighbor")
                if u not in adj:
                    raise UnknownVertexError(f"neighbor {u} of {v} is not a vertex")
                if v not in adj[u]:
                    raise UnknownVertexError(f"edge {v}-{u} is not symmetric")
            half_edges += len(nbrs)
        self._adj = adj
        self._m = half_edges // 2

    @classmethod
    def _trusted(cls, adj, m):
        # Internal fast path: adj must already be a dict of frozensets forming
        # a valid simple graph with exactly m edges.
        g = object.__new__(cls)
        g._adj = adj
        g._m = m
        return g

    @property
    def n(self):
        return len(self._adj)

    @property
    def m(self):
        return self._m

    @property
    def adjacency(self):
        """Read-only view of the underlying id -> neighbor-set mapping."""
        return MappingProxyType(self._adj)

    def __contains__(self, v):
        return v in self._adj

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    def vertices(self):
        return tuple(sorted(self._adj))

    def degree(self, v):
        try:
            return len(self._adj[v])
        except KeyError:
            raise UnknownVertexError(f"no vertex {v}") from None

    def neighbors(self, v):
        try:
            return self._adj[v]
        except KeyError:
            raise UnknownVertexError(f"no vertex {v}") from None

    def has_edge(self, u, v):
        if u not in self._adj:
            raise UnknownVertexError(f"no vertex {u}")
        if v not in self._adj:
            raise UnknownVertexError(f"no vertex {v}")
        return v in self._adj[u]

    def min_degree(self):
        return min((len(s) for s in self._adj.values()), default=0)

    def max_degree(self):
        return max((len(s) for s in self._adj.values()), default=0)

    def edges(self):
        """All edges as (min, max) pairs, sorted."""
        out = []
        for v, nbrs in self._adj.items():
            for u in nbrs:
                if v < u:
                    out.append((v, u))
        out.sort()
        return out

    def components(self):
        """Connected components as sorted vertex tuples, ordered by minimum id."""
        seen = set()
        comps = []
        for start in sorted(self._adj):
            if start in seen:
                continue
            seen.add(start)
            comp = [start]
            queue = deque((start,))
            while queue:
                x = queue.popleft()
                for y in self._adj[x]:
                    if y not in seen:
                        seen.add(y)
                        comp.append(y)
                        queue.append(y)
            comps.append(tuple(sorted(comp)))
        return comps

    def is_connected(self):
        if self.n <= 1:
            return True
        start = next(iter(self._adj))
        seen = {start}
        queue = deque((start,))
        while queue:
            x = queue.popleft()
            for y in self._adj[x]:
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return len(seen) == self.n

    def remove_vertices(self, xs):
        """Induced subgraph on V minus xs; every x must be a vertex."""
        dead = set(xs)
        for x in dead:
            if x not in self._adj:
                raise UnknownVertexError(f"no vertex {x}")
        adj = {}
        m = 0
        for v, nbrs in self._adj.items():
            if v in dead:
                continue
            kept = nbrs - dead
            adj[v] = kept if len(kept) == len(nbrs) else frozenset(kept)
            m += len(adj[v])
        return Graph._trusted(adj, m // 2)

    def subgraph(self, keep):
        """Induced subgraph on the given vertices; every id must exist."""
        kept = set(keep)
        for x in kept:
            if x not in self._adj:
                raise UnknownVertexError(f"no vertex {x}")
        adj = {}
        m = 0
        for v in kept:
            adj[v] = frozenset(self._adj[v] & kept)
            m += len(adj[v])
        return Graph._trusted(adj, m // 2)


def build_graph(n, edges):
    """Graph on vertex ids 0..n-1 from an iterable of (u, v) pairs.

    Rejects self-loops, duplicate edges (in either orientation), and
    endpoints outside the id range.
    """
    if n < 0:
        raise IdOutOfRangeError(f"vertex count {n} is negative")
    adj = {v: set() for v in range(n)}
    for u, v in edges:
        if not (0 <= u < n) or not (0 <= v < n):
            raise IdOutOfRangeError(f"edge {u}-{v} outside 0..{n - 1}")
        if u == v:
            raise SelfLoopError(f"self-loop at {u}")
        if v in adj[u]:
            raise DuplicateEdgeError(f"edge {u}-{v} given twice")
        adj[u].add(v)
        adj[v].add(u)
    frozen = {v: frozenset(s) for v, s in adj.items()}
    m = sum(len(s) for s in frozen.values()) // 2
    return Graph._trusted(frozen, m)


def d_out(g, xs):
    """Number of edges with exactly one endpoint in xs."""
    inside = set(xs)
    for x in inside:
        if x not in g:
            raise UnknownVertexError(f"no vertex {x}")
    count = 0
    for x in inside:
        for y in g.neighbors(x):
            if y not in inside:
                count += 1
    return count


@dataclass(frozen=True)
class IsolatedProfile:
    """Vertices that removing a set would isolate, grouped by prior degree.

    `members` lists, in increasing order, the vertices outside the removed set
    whose neighbors all lie inside it; i1..i4 count them by their degree in
    the host graph. Vertices that were already isolated are not profiled, so
    total == i1 + i2 + i3 + i4 always holds.
    """

    members: tuple
    i1: int
    i2: int
    i3: int
    i4: int

    @property
    def total(self):
        return len(self.members)


def isolated_profile(g, xs):
    """Profile of the vertices isolated by deleting xs from g."""
    inside = set(xs)
    for x in inside:
        if x not in g:
            raise UnknownVertexError(f"no vertex {x}")
    adj = g.adjacency
    hit = set()
    for x in inside:
        for y in adj[x]:
            if y not in inside:
                hit.add(y)
    members = []
    counts = [0, 0, 0, 0, 0]
    for y in sorted(hit):
        nbrs = adj[y]
        if nbrs <= inside:
            members.append(y)
            d = len(nbrs)
            if d > 4:
                raise UnknownVertexError(
                    f"vertex {y} has degree {d}; profile only covers degree <= 4"
                )
            counts[d] += 1
    return IsolatedProfile(tuple(members), counts[1], counts[2], counts[3], counts[4])


@dataclass(frozen=True)
class ShortCycleReport:
    """Shortest cycle of length at most four, if one exists.

    kind is 'triangle', 'four_cycle', or 'none'. The witness is the
    lexicographically smallest vertex tuple of that length: (u, v, w) with
    u < v < w for triangles; for 4-cycles (a, b, c, d) walks the cycle with
    a the smallest vertex, b its smaller cycle-neighbor, and c opposite a.
    """

    kind: str
    witness: tuple | None


def short_cycle(g):
    """Find a triangle, else a 4-cycle, else report none."""
    adj = g.adjacency
    order = sorted(adj)
    best3 = None
    for u in order:
        nbrs = sorted(adj[u])
        for i, v in enumerate(nbrs):
            if v < u:
                continue
            for w in nbrs[i + 1 :]:
                if w in adj[v]:
                    cand = (u, v, w)
                    if best3 is None or cand < best3:
                        best3 = cand
                    break
            if best3 is not None and best3[0] == u:
                break
        if best3 is not None:
            # Triangles are canonical by sorted vertices, so the first vertex
            # in scan order that closes one gives the lexicographic minimum.
            return ShortCycleReport("triangle", best3)
    best4 = None
    seen_pairs = {}
    for b in order:
        nbrs = sorted(adj[b])
        for i, p in enumerate(nbrs):
            for q in nbrs[i + 1 :]:
                others = seen_pairs.get((p, q))
                if others is not None:
                    for a in others:
                        cycle = _canonical_four_cycle(a, b, p, q)
                        if best4 is None or cycle < best4:
                            best4 = cycle
                seen_pairs.setdefault((p, q), []).append(b)
    if best4 is not None:
        return ShortCycleReport("four_cycle", best4)
    return ShortCycleReport("none", None)


def _canonical_four_cycle(x, y, p, q):
    # Cycle x-p-y-q with diagonals {x,y} and {p,q}. Canonical walk starts at
    # the smallest vertex, steps to its smaller neighbor on the cycle, and
    # places the opposite vertex third.
    a = min(x, y, p, q)
    if a in (x, y):
        c = y if a == x else x
        b, d = min(p, q), max(p, q)
    else:
        c = q if a == p else p
        b, d = min(x, y), max(x, y)
    return (a, b, c, d)


def bfs_distance(g, s, t):
    """Length of a shortest s-t path, or None if t is unreachable."""
    if s not in g:
        raise UnknownVertexError(f"no vertex {s}")
    if t not in g:
        raise UnknownVertexError(f"no vertex {t}")
    if s == t:
        return 0
    adj = g.adjacency
    dist = {s: 0}
    queue = deque((s,))
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y not in dist:
                dist[y] = dist[x] + 1
                if y == t:
                    return dist[y]
                queue.append(y)
    return None


def is_induced_matching(g, pairs):
    """Whether the pairs are edges of g forming an induced matching.

    Induced means no two matched edges share an endpoint or are joined by an
    edge of g. Unknown vertex ids raise; structural failures return False.
    """
    adj = g.adjacency
    matched = {}
    edges = []
    for a, b in pairs:
        if a not in adj:
            raise UnknownVertexError(f"no vertex {a}")
        if b not in adj:
            raise UnknownVertexError(f"no vertex {b}")
        if a == b or b not in adj[a]:
            return False
        if a in matched or b in matched:
            return False
        matched[a] = b
        matched[b] = a
        edges.append((a, b))
    for a, b in edges:
        for x in (a, b):
            for y in adj[x]:
                if y in matched and matched[x] != y:
                    return False
    return True


def _c25_adjacency():
    # The excluded graph: two 5-cycles blown up so that consecutive positions
    # are joined by all four cross edges. Vertices i and i+5 share a position
    # and are not adjacent; every vertex has degree 4 and the girth is 4.
    adj = {v: set() for v in range(10)}
    for i in range(5):
        j = (i + 1) % 5
        for a in (i, i + 5):
            for b in (j, j + 5):
                adj[a].add(b)
                adj[b].add(a)
    return adj


def is_isomorphic_c25(g):
    """Whether g is (isomorphic to) the excluded 10-vertex graph."""
    if g.n != 10 or g.m != 20:
        return False
    if any(g.degree(v) != 4 for v in g.vertices()):
        return False
    model = Graph({v: frozenset(s) for v, s in _c25_adjacency().items()})
    return _isomorphic(g, model)


def _isomorphic(g, h):
    """Backtracking isomorphism test for small graphs."""
    if g.n != h.n or g.m != h.m:
        return False
    gsig = {v: _vertex_signature(g, v) for v in g.vertices()}
    hsig = {v: _vertex_signature(h, v) for v in h.vertices()}
    if sorted(gsig.values()) != sorted(hsig.values()):
        return False
    order = _mapping_order(g, gsig)
    hverts = h.vertices()
    gadj = g.adjacency
    hadj = h.adjacency
    image = {}
    used = set()

    def extend(i):
        if i == len(order):
            return True
        v = order[i]
        want = gsig[v]
        nbrs_mapped = [(p, image[p]) for p in gadj[v] if p in image]
        for w in hverts:
            if w in used or hsig[w] != want:
                continue
            ok = True
            for p, wp in nbrs_mapped:
                if wp not in hadj[w]:
                    ok = False
                    break
            if ok:
                # Mapped non-neighbors must stay non-neighbors too.
                for p in image:
                    if p not in gadj[v] and image[p] in hadj[w]:
                        ok = False
                        break
            if ok:
                image[v] = w
                used.add(w)
                if extend(i + 1):
                    return True
                del image[v]
                used.discard(w)
        return False

    return extend(0)


def _vertex_signature(g, v):
    return (g.degree(v), tuple(sorted(g.degree(u) for u in g.neighbors(v))))


def _mapping_order(g, sigs):
    # Explore from the rarest-signature vertex outward so each new vertex is
    # constrained by already-mapped neighbors as early as possible.
    verts = g.vertices()
    if not verts:
        return []
    sig_count = {}
    for v in verts:
        sig_count[sigs[v]] = sig_count.get(sigs[v], 0) + 1
    start = min(verts, key=lambda v: (sig_count[sigs[v]], -g.degree(v), v))
    order = [start]
    placed = {start}
    while len(order) < len(verts):
        nxt = None
        best = None
        for v in verts:
            if v in placed:
                continue
            attached = sum(1 for u in g.neighbors(v) if u in placed)
            key = (-attached, v)
            if best is None or key < best:
                best = key
                nxt = v
        order.append(nxt)
        placed.add(nxt)
    return order
