"""Reduction engine: certified induced matchings in max-degree-4 graphs.

solve() repeatedly deletes a small vertex set while matching one or two of
its edges, keeping every step inside a fixed exchange rate: nine deleted-or-
isolated vertices per matched edge. Components that shrink to at most
EXACT_THRESHOLD vertices are finished by the exact solver instead. The step
log is returned as a certificate that a replay can check independently.

Twelve reduction rules are tried in a fixed priority order, and within a
rule the lexicographically smallest witness fires, so a given graph always
produces the identical certificate. One 10-vertex graph (see gen_c25) admits
no such accounting and is rejected up front; everything else with max degree
4 yields at least one matched edge per nine non-isolated vertices.

The later, denser rules (R7 onward) sometimes need a second matched edge to
pay for their removals. The searches for that second edge re-validate the
candidate pair explicitly instead of trusting structure; if no candidate
survives, the engine raises InvariantViolationError rather than emit an
unpaid step, and the fuzz harness exists to prove that never happens.
"""

from dataclasses import dataclass, field
from heapq import heapify, heappop, heappush

from .errors import (
    C25ComponentError,
    InvariantViolationError,
    MaxDegreeExceededError,
)
from .exact import max_induced_matching
from .graph import Graph, is_induced_matching, is_isomorphic_c25

EXACT_THRESHOLD = 18

RULE_NAMES = (
    "R1", "R2", "R3", "R4", "R5", "R6",
    "R7", "R8", "R9", "R10", "R11", "R12",
)

STEP_KINDS = RULE_NAMES + ("EXACT",)


@dataclass(frozen=True)
class ReductionStep:
    """One engine move: match these edges, then delete these vertices.

    rule is one of R1..R12 or EXACT. matched holds (min, max) pairs, removed
    the sorted tuple of deleted vertices. metrics carries the counters the
    step's safety checks used (sizes, newly isolated, boundary edges); it is
    advisory and not part of the serialized certificate.
    """

    rule: str
    matched: tuple
    removed: tuple
    metrics: dict = field(compare=False, default_factory=dict)


@dataclass(frozen=True)
class Certificate:
    """Replayable log of every step, in the order they were applied."""

    steps: tuple


@dataclass(frozen=True)
class SolveResult:
    """Matching plus the certificate that justifies it.

    isolated counts the input's degree-0 vertices, which no accounting can
    charge to an edge; the delivered guarantee is
    9 * len(matching) >= n - isolated.
    """

    matching: tuple
    certificate: Certificate
    n: int
    isolated: int


def solve(g, exact_threshold=EXACT_THRESHOLD):
    """Certified induced matching of at least (n - isolated) / 9 edges.

    Raises MaxDegreeExceededError on a vertex of degree five or more,
    C25ComponentError if some component is the one excluded 10-vertex graph,
    and InvariantViolationError if any internal consistency check fails
    (which would be a bug, not an input problem).
    """
    if exact_threshold < 10:
        raise ValueError(
            f"exact_threshold must be at least 10, got {exact_threshold}"
        )
    for v in g.vertices():
        if g.degree(v) > 4:
            raise MaxDegreeExceededError(v, g.degree(v))
    comps = g.components()
    for comp in comps:
        if len(comp) == 10 and is_isomorphic_c25(g.subgraph(comp)):
            raise C25ComponentError(comp)
    isolated = sum(1 for comp in comps if len(comp) == 1)
    steps = []
    pool_adj = {}
    for comp in comps:
        if len(comp) == 1:
            continue
        if len(comp) <= exact_threshold:
            steps.append(_exact_step(g.adjacency, comp))
        else:
            for v in comp:
                pool_adj[v] = set(g.neighbors(v))
    if pool_adj:
        pool = _Pool(pool_adj)
        while pool.adj:
            step = pool.find_step()
            if step is None:
                raise pool.violation(
                    "R12", None, "no rule applies to a non-empty graph"
                )
            problems = _step_violations(pool.adj, step.matched, step.removed)
            if problems:
                raise pool.violation(
                    step.rule, step.matched, "; ".join(m for _, m in problems)
                )
            _, survivors = pool.apply(set(step.removed))
            steps.append(step)
            for comp in pool.split_small(survivors, exact_threshold):
                if len(comp) == 10:
                    ten = Graph({v: frozenset(pool.adj[v]) for v in comp})
                    if is_isomorphic_c25(ten):
                        raise pool.violation(
                            "EXACT", tuple(comp),
                            "excluded 10-vertex component arose mid-reduction",
                        )
                estep = _exact_step(pool.adj, comp)
                problems = _step_violations(pool.adj, estep.matched, estep.removed)
                if problems:
                    raise pool.violation(
                        "EXACT", tuple(comp), "; ".join(m for _, m in problems)
                    )
                pool.apply(set(comp))
                steps.append(estep)
    matching = []
    for st in steps:
        matching.extend(st.matched)
    matching.sort()
    result = SolveResult(tuple(matching), Certificate(tuple(steps)), g.n, isolated)
    if not is_induced_matching(g, result.matching):
        raise InvariantViolationError(
            "assembled matching is not induced", rule="final"
        )
    if 9 * len(result.matching) < g.n - isolated:
        raise InvariantViolationError(
            f"only {len(result.matching)} edges for {g.n} vertices"
            f" ({isolated} isolated)",
            rule="final",
        )
    return result


def next_reduction(g, exact_threshold=EXACT_THRESHOLD):
    """The one step the engine would take on g, without applying it.

    g must be connected, have more than exact_threshold vertices, and max
    degree at most 4; smaller graphs go straight to the exact solver and
    have no rule step defined.
    """
    if exact_threshold < 10:
        raise ValueError(
            f"exact_threshold must be at least 10, got {exact_threshold}"
        )
    for v in g.vertices():
        if g.degree(v) > 4:
            raise MaxDegreeExceededError(v, g.degree(v))
    if g.n <= exact_threshold:
        raise ValueError(
            f"graph has {g.n} <= {exact_threshold} vertices;"
            " it belongs to the exact solver"
        )
    if not g.is_connected():
        raise ValueError("graph is not connected")
    pool = _Pool({v: set(g.neighbors(v)) for v in g.vertices()})
    step = pool.find_step()
    if step is None:
        raise pool.violation("R12", None, "no rule applies to a non-empty graph")
    problems = _step_violations(pool.adj, step.matched, step.removed)
    if problems:
        raise pool.violation(
            step.rule, step.matched, "; ".join(m for _, m in problems)
        )
    return step


def validate_step(g, step):
    """Problems with applying the step to g; an empty list means valid.

    Valid means: the matched pairs form an induced matching of g, every
    neighbor of a matched endpoint is removed, and the removal is paid for,
    i.e. nine slots per matched edge cover the removed vertices plus every
    vertex the removal isolates.
    """
    return [m for _, m in _step_violations(g.adjacency, step.matched, step.removed)]


def find_induced_2matching_within(g, vertices):
    """Lexicographically first pair of g-edges inside the given vertex set
    that forms an induced matching of g, or None."""
    scope = set(vertices)
    for v in scope:
        if v not in g:
            raise KeyError(f"no vertex {v}")
    return _lex_first_2matching(g.adjacency, scope)


def _exact_step(adj, comp):
    sub_adj = {v: frozenset(adj[v]) for v in comp}
    m = sum(len(s) for s in sub_adj.values()) // 2
    sub = Graph._trusted(sub_adj, m)
    matched = max_induced_matching(sub)
    metrics = {
        "removed_size": len(comp),
        "isolated_after": 0,
        "edges_out": 0,
        "component_size": len(comp),
    }
    return ReductionStep("EXACT", matched, tuple(comp), metrics)


def _norm_pairs(pairs):
    return tuple(sorted((a, b) if a < b else (b, a) for a, b in pairs))


def _lex_first_2matching(adj, scope):
    verts = sorted(v for v in scope if v in adj)
    inside = set(verts)
    edges = []
    for a in verts:
        for b in adj[a]:
            if a < b and b in inside:
                edges.append((a, b))
    edges.sort()
    for i, (a, b) in enumerate(edges):
        na = adj[a]
        nb = adj[b]
        for c, d in edges[i + 1 :]:
            if c == a or c == b or d == a or d == b:
                continue
            if c in na or c in nb or d in na or d in nb:
                continue
            return ((a, b), (c, d))
    return None


def _step_violations(adj, matched, removed):
    """Check one step against the adjacency it claims to act on.

    Returns (kind, message) pairs, kind being 'structure' for matching-shape
    problems and 'accounting' for the size bound.
    """
    problems = []
    rset = set(removed)
    if len(rset) != len(tuple(removed)):
        problems.append(("structure", "removed list repeats a vertex"))
    for x in sorted(rset):
        if x not in adj:
            problems.append(("structure", f"removed vertex {x} is not present"))
            rset.discard(x)
    endpoints = [p for e in matched for p in e]
    if len(set(endpoints)) != len(endpoints):
        problems.append(("structure", "matched edges share endpoints"))
    usable = []
    for a, b in matched:
        if a not in adj or b not in adj:
            problems.append(
                ("structure", f"matched edge {a}-{b} uses a missing vertex")
            )
            continue
        if b not in adj[a]:
            problems.append(("structure", f"matched pair {a}-{b} is not an edge"))
            continue
        usable.append((a, b))
    for i in range(len(usable)):
        for j in range(i + 1, len(usable)):
            for x in usable[i]:
                for y in usable[j]:
                    if y in adj[x]:
                        problems.append((
                            "structure",
                            f"matched edges {usable[i]} and {usable[j]}"
                            f" touch via {x}-{y}",
                        ))
    for a, b in usable:
        for x in (a, b):
            if x not in rset:
                problems.append(
                    ("structure", f"matched endpoint {x} is not removed")
                )
            for y in adj[x]:
                if y not in rset:
                    problems.append((
                        "structure",
                        f"neighbor {y} of matched endpoint {x} survives",
                    ))
    newly_isolated = 0
    seen = set()
    for x in rset:
        for y in adj[x]:
            if y in rset or y in seen:
                continue
            seen.add(y)
            if adj[y] <= rset:
                newly_isolated += 1
    if 9 * len(matched) < len(rset) + newly_isolated:
        problems.append((
            "accounting",
            f"9*{len(matched)} matched < {len(rset)} removed"
            f" + {newly_isolated} isolated",
        ))
    return problems


class _Pool:
    """Mutable working graph plus lazily validated rule-candidate queues.

    Degrees only fall and edges only disappear while the pool shrinks, so a
    vertex enters each degree level at most once and triangles / 4-cycles
    only die after the one up-front enumeration. Each queue entry is pushed
    at the event that could first make it fire and re-checked against the
    live adjacency when popped; stale entries are discarded then.
    """

    def __init__(self, adj):
        self.adj = adj
        self.r1 = []
        self.r2 = []
        self.r3 = []
        self.r4 = []
        self.r5 = []
        self.r6 = []
        self.r7 = []
        self.r8 = []
        self.r9 = []
        self.r10 = []
        self.r11 = []
        self.r12 = []
        # anchors[w] lists ends u (with their neighbor v) having w in
        # N(v) - {u}; two ends meeting at an anchor sit at distance 4
        # unless their neighbors coincide or touch.
        self.anchors = {}
        # Triangles, 4-cycles, and plain edges only ever disappear, so their
        # queues are enumerated once, and lazily: a run dominated by the
        # earlier rules never pays for them.
        self._static_built = False
        for v in sorted(adj):
            d = len(adj[v])
            if d == 1:
                self._push_end_events(v)
            elif d == 2:
                self._push_deg2_events(v)
            elif d == 3:
                self._push_deg3_events(v)

    def _build_static(self):
        self._static_built = True
        adj = self.adj
        for u in sorted(adj):
            over = sorted(x for x in adj[u] if x > u)
            for i, v in enumerate(over):
                av = adj[v]
                for w in over[i + 1 :]:
                    if w in av:
                        self.r9.append((u, v, w))
            for v in adj[u]:
                if u < v:
                    self.r12.append((u, v))
        pair_map = {}
        for b in sorted(adj):
            nbrs = sorted(adj[b])
            for i, p in enumerate(nbrs):
                for q in nbrs[i + 1 :]:
                    pair_map.setdefault((p, q), []).append(b)
        for (p, q), common in pair_map.items():
            # Cycle x-p-y-q is recorded once, from the diagonal holding its
            # smallest vertex; (x, p, y, q) is then already the canonical
            # walk (x smallest, p its smaller cycle-neighbor, y opposite).
            for i in range(len(common) - 1):
                x = common[i]
                if x > p:
                    continue
                for y in common[i + 1 :]:
                    self.r11.append((x, p, y, q))
        heapify(self.r9)
        heapify(self.r11)
        heapify(self.r12)

    # ----- candidate events -------------------------------------------------

    def _push_end_events(self, y):
        adj = self.adj
        (v,) = adj[y]
        heappush(self.r4, y)
        if len(adj[v]) <= 3:
            heappush(self.r1, (y, v))
        for u in adj[v]:
            if u != y and len(adj[u]) == 1:
                pair = (y, u) if y < u else (u, y)
                heappush(self.r2, (pair[0], pair[1], v))
        # Anchor sets N(v) - {u} only shrink while an end lives, so any two
        # ends that ever share an anchor already share it when the younger
        # one is born; scanning buckets here therefore finds every pair.
        for w in adj[v]:
            if w == y:
                continue
            bucket = self.anchors.get(w)
            if bucket is None:
                self.anchors[w] = [(y, v)]
                continue
            live = []
            for u2, v2 in bucket:
                if u2 in adj and len(adj[u2]) == 1:
                    live.append((u2, v2))
                    # Neighbors that coincide or touch stay that way until
                    # one of the ends dies, so those pairs are never viable.
                    if v2 != v and v2 not in adj[v]:
                        pair = (y, u2) if y < u2 else (u2, y)
                        heappush(self.r3, pair)
            live.append((y, v))
            self.anchors[w] = live

    def _push_deg2_events(self, y):
        a, b = sorted(self.adj[y])
        for t in (a, b):
            if len(self.adj[t]) == 2:
                heappush(self.r5, (y, t))
                heappush(self.r5, (t, y))
            if len(self.adj[t]) == 1:
                heappush(self.r1, (t, y))
        if b in self.adj[a]:
            heappush(self.r6, y)
        if self._common_excluding(a, b, y):
            heappush(self.r7, y)
        heappush(self.r8, y)

    def _push_deg3_events(self, y):
        if self._has_cycle4_through(y):
            heappush(self.r10, y)
        for u in self.adj[y]:
            if len(self.adj[u]) == 1:
                heappush(self.r1, (u, y))

    def _common_excluding(self, a, b, y):
        nb = self.adj[b]
        for w in self.adj[a]:
            if w != y and w in nb:
                return True
        return False

    def _has_cycle4_through(self, u):
        nbrs = sorted(self.adj[u])
        for i, p in enumerate(nbrs):
            ap = self.adj[p]
            for q in nbrs[i + 1 :]:
                for w in self.adj[q]:
                    if w != u and w in ap:
                        return True
        return False

    # ----- mutation ---------------------------------------------------------

    def apply(self, removed):
        """Delete the removed set plus anyone it isolates.

        Returns (newly_isolated, survivors), both sorted; survivors are the
        boundary vertices that stay, i.e. the only places where a component
        can have shrunk.
        """
        boundary = set()
        for x in removed:
            nbrs = self.adj.pop(x)
            for y in nbrs:
                if y not in removed:
                    boundary.add(y)
        ordered = sorted(boundary)
        for y in ordered:
            self.adj[y] -= removed
        newly_isolated = []
        survivors = []
        for y in ordered:
            if self.adj[y]:
                survivors.append(y)
            else:
                newly_isolated.append(y)
                del self.adj[y]
        # Events fire only after every boundary degree is final, so the
        # degree tests inside the pushes never see half-applied state.
        for y in survivors:
            d = len(self.adj[y])
            if d == 1:
                self._push_end_events(y)
            elif d == 2:
                self._push_deg2_events(y)
            elif d == 3:
                self._push_deg3_events(y)
        return newly_isolated, survivors

    def split_small(self, seeds, threshold):
        """Components of at most threshold vertices touching the seeds.

        Every component that lost a vertex contains a seed, so probing the
        seeds with a size-capped search finds each newly small component;
        returned sorted, smallest first vertex first.
        """
        adj = self.adj
        found = []
        seen = set()
        for s in seeds:
            if s in seen or s not in adj:
                continue
            comp_seen = {s}
            stack = [s]
            big = False
            while stack and not big:
                x = stack.pop()
                for y in adj[x]:
                    if y not in comp_seen:
                        comp_seen.add(y)
                        if len(comp_seen) > threshold:
                            big = True
                            break
                        stack.append(y)
            seen |= comp_seen
            if not big:
                found.append(sorted(comp_seen))
        found.sort()
        return found

    # ----- step construction ------------------------------------------------

    def find_step(self):
        for finder in (
            self._find_r1, self._find_r2, self._find_r3, self._find_r4,
            self._find_r5, self._find_r6, self._find_r7, self._find_r8,
            self._find_r9, self._find_r10, self._find_r11, self._find_r12,
        ):
            step = finder()
            if step is not None:
                return step
        return None

    def violation(self, rule, witness, detail):
        from .formats import format_graph

        snapshot = Graph({v: frozenset(s) for v, s in self.adj.items()})
        return InvariantViolationError(
            detail, rule=rule, witness=witness, graph_text=format_graph(snapshot)
        )

    @staticmethod
    def _peek(heap, valid):
        while heap:
            entry = heap[0]
            if valid(entry):
                return entry
            heappop(heap)
        return None

    def _isolated_by(self, removed):
        adj = self.adj
        out = []
        seen = set()
        for x in removed:
            for y in adj[x]:
                if y in removed or y in seen:
                    continue
                seen.add(y)
                if adj[y] <= removed:
                    out.append(y)
        out.sort()
        return out

    def _edges_out(self, removed):
        return sum(
            1 for x in removed for y in self.adj[x] if y not in removed
        )

    def _one_edge_step(self, rule, u, v, removed, witness, iso=None):
        if iso is None:
            iso = self._isolated_by(removed)
        if len(removed) + len(iso) > 9:
            raise self.violation(
                rule, witness,
                f"one-edge step removes {len(removed)} and isolates {len(iso)}",
            )
        pair = (u, v) if u < v else (v, u)
        metrics = {
            "removed_size": len(removed),
            "isolated_after": len(iso),
            "edges_out": self._edges_out(removed),
        }
        return ReductionStep(rule, (pair,), tuple(sorted(removed)), metrics)

    def _two_edge_step(self, rule, matched, removed, witness):
        iso = self._isolated_by(removed)
        if len(removed) + len(iso) > 18:
            raise self.violation(
                rule, witness,
                f"two-edge step removes {len(removed)} and isolates {len(iso)}",
            )
        metrics = {
            "removed_size": len(removed),
            "isolated_after": len(iso),
            "edges_out": self._edges_out(removed),
        }
        return ReductionStep(rule, matched, tuple(sorted(removed)), metrics)

    def _induced_ok(self, matched):
        endpoints = [p for e in matched for p in e]
        if len(set(endpoints)) != len(endpoints):
            return False
        adj = self.adj
        for a, b in matched:
            if a not in adj or b not in adj or b not in adj[a]:
                return False
        for i in range(len(matched)):
            for j in range(i + 1, len(matched)):
                for x in matched[i]:
                    for y in matched[j]:
                        if y in adj[x]:
                            return False
        return True

    # ----- the rules, in priority order --------------------------------------

    def _valid_r1(self, entry):
        u, v = entry
        adj = self.adj
        return (
            u in adj and v in adj and len(adj[u]) == 1
            and v in adj[u] and len(adj[v]) <= 3
        )

    def _find_r1(self):
        # Pendant edge at a low-degree neighbor: delete the neighbor's
        # closed neighborhood, match the pendant edge.
        entry = self._peek(self.r1, self._valid_r1)
        if entry is None:
            return None
        u, v = entry
        removed = set(self.adj[v])
        removed.add(v)
        return self._one_edge_step("R1", u, v, removed, entry)

    def _valid_r2(self, entry):
        u1, u2, v = entry
        adj = self.adj
        return (
            u1 in adj and u2 in adj and v in adj
            and len(adj[u1]) == 1 and len(adj[u2]) == 1
            and v in adj[u1] and v in adj[u2]
        )

    def _find_r2(self):
        # Two pendant vertices on one degree-4 center. Either deleting the
        # center's closed neighborhood isolates little, or the center's two
        # spare neighbors carry pendant edges of their own that pay for a
        # bigger removal.
        entry = self._peek(self.r2, self._valid_r2)
        if entry is None:
            return None
        u1, u2, v = entry
        x = set(self.adj[v])
        x.add(v)
        iso = self._isolated_by(x)
        if len(iso) <= 4:
            return self._one_edge_step("R2", u1, v, x, entry, iso=iso)
        spare = sorted(self.adj[v] - {u1, u2})
        if len(spare) != 2:
            raise self.violation("R2", entry, "center is not degree 4")
        w1, w2 = spare
        if w2 in self.adj[w1]:
            raise self.violation("R2", entry, "spare neighbors are adjacent")
        for t1 in sorted(self.adj[w1]):
            if len(self.adj[t1]) != 1:
                continue
            for t2 in sorted(self.adj[w2]):
                if len(self.adj[t2]) != 1 or t2 == t1:
                    continue
                matched = _norm_pairs(((w1, t1), (w2, t2)))
                if self._induced_ok(matched):
                    removed = x | self.adj[w1] | self.adj[w2]
                    return self._two_edge_step("R2", matched, removed, entry)
        raise self.violation("R2", entry, "no pendant pair on the spare neighbors")

    def _valid_r3(self, entry):
        u1, u2 = entry
        adj = self.adj
        if u1 not in adj or u2 not in adj:
            return False
        if len(adj[u1]) != 1 or len(adj[u2]) != 1:
            return False
        (v1,) = adj[u1]
        (v2,) = adj[u2]
        if v1 == v2 or v1 in adj[v2]:
            return False
        nv2 = adj[v2]
        return any(w in nv2 for w in adj[v1])

    def _find_r3(self):
        # Two pendant vertices exactly distance 4 apart: match both pendant
        # edges, delete both neighbors' closed neighborhoods.
        entry = self._peek(self.r3, self._valid_r3)
        if entry is None:
            return None
        u1, u2 = entry
        (v1,) = self.adj[u1]
        (v2,) = self.adj[u2]
        matched = _norm_pairs(((u1, v1), (u2, v2)))
        if not self._induced_ok(matched):
            raise self.violation("R3", entry, "pendant pair is not induced")
        removed = {v1, v2} | self.adj[v1] | self.adj[v2]
        return self._two_edge_step("R3", matched, removed, entry)

    def _valid_r4(self, u):
        return u in self.adj and len(self.adj[u]) == 1

    def _find_r4(self):
        # Any remaining pendant vertex: its neighbor has degree 4 (R1 would
        # have fired otherwise) and isolates at most 4 vertices here.
        u = self._peek(self.r4, self._valid_r4)
        if u is None:
            return None
        (v,) = self.adj[u]
        x = set(self.adj[v])
        x.add(v)
        iso = self._isolated_by(x)
        if len(iso) > 4:
            raise self.violation("R4", u, f"isolates {len(iso)}, expected <= 4")
        return self._one_edge_step("R4", u, v, x, u, iso=iso)

    def _valid_r5(self, entry):
        u, v = entry
        adj = self.adj
        return (
            u in adj and v in adj and v in adj[u]
            and len(adj[u]) == 2 and len(adj[v]) == 2
        )

    def _find_r5(self):
        # Adjacent degree-2 pair: match their edge, delete both
        # neighborhoods (at most 4 vertices).
        entry = self._peek(self.r5, self._valid_r5)
        if entry is None:
            return None
        u, v = entry
        removed = self.adj[u] | self.adj[v]
        return self._one_edge_step("R5", u, v, removed, entry)

    def _valid_r6(self, u):
        adj = self.adj
        if u not in adj or len(adj[u]) != 2:
            return False
        a, b = adj[u]
        return b in adj[a]

    def _find_r6(self):
        # Degree-2 vertex in a triangle: match it to its smaller neighbor.
        u = self._peek(self.r6, self._valid_r6)
        if u is None:
            return None
        v = min(self.adj[u])
        removed = self.adj[u] | self.adj[v]
        return self._one_edge_step("R6", u, v, removed, u)

    def _valid_r7(self, u):
        adj = self.adj
        if u not in adj or len(adj[u]) != 2:
            return False
        a, b = sorted(adj[u])
        return self._common_excluding(a, b, u)

    def _find_r7(self):
        # Degree-2 vertex on a 4-cycle u-v-w-t. Either few vertices drop
        # out, or one dropped vertex s reaches back into N(v) at some r
        # clear of t, giving the induced pair {ut, rs}.
        u = self._peek(self.r7, self._valid_r7)
        if u is None:
            return None
        v, t = sorted(self.adj[u])
        shared = sorted(
            w for w in self.adj[v] if w != u and w in self.adj[t]
        )
        witness = (u, v, shared[0], t)
        x = self.adj[u] | self.adj[v]
        iso = self._isolated_by(x)
        if len(iso) <= 3:
            return self._one_edge_step("R7", u, v, x, witness, iso=iso)
        nt = self.adj[t]
        for s in iso:
            if s in nt:
                continue
            ns = self.adj[s]
            for r in sorted(self.adj[v]):
                if r == u or r in nt or r not in ns:
                    continue
                matched = _norm_pairs(((u, t), (r, s)))
                if self._induced_ok(matched):
                    removed = x | set(iso) | nt | self.adj[r]
                    return self._two_edge_step("R7", matched, removed, witness)
        raise self.violation("R7", witness, "no pair clears the cycle")

    def _valid_r8(self, u):
        return u in self.adj and len(self.adj[u]) == 2

    def _find_r8(self):
        # Any remaining degree-2 vertex; try both neighbor orientations.
        # Either the removal isolates little, or some dropped vertex s
        # reaches N(v) at t while missing w, giving {st, uw}.
        u = self._peek(self.r8, self._valid_r8)
        if u is None:
            return None
        a, b = sorted(self.adj[u])
        for v, w in ((a, b), (b, a)):
            x = self.adj[u] | self.adj[v]
            iso = self._isolated_by(x)
            if len(iso) <= 3:
                return self._one_edge_step("R8", u, v, x, (u, v), iso=iso)
            nw = self.adj[w]
            for s in iso:
                if s in nw:
                    continue
                for t in sorted(self.adj[v] & self.adj[s]):
                    matched = _norm_pairs(((s, t), (u, w)))
                    if self._induced_ok(matched):
                        removed = x | set(iso) | self.adj[t] | nw
                        return self._two_edge_step(
                            "R8", matched, removed, (u, v)
                        )
        raise self.violation("R8", u, "both orientations failed")

    def _valid_r9(self, entry):
        adj = self.adj
        return entry[0] in adj and entry[1] in adj and entry[2] in adj

    def _find_r9(self):
        # Triangle u < v < w: match uv unless too much drops out, in which
        # case a dropped vertex s pairs with a neighbor r on the side of the
        # triangle it avoids.
        if not self._static_built:
            self._build_static()
        entry = self._peek(self.r9, self._valid_r9)
        if entry is None:
            return None
        u, v, w = entry
        x = self.adj[u] | self.adj[v]
        iso = self._isolated_by(x)
        if len(iso) <= 2:
            return self._one_edge_step("R9", u, v, x, entry, iso=iso)
        nu = self.adj[u]
        nv = self.adj[v]
        nw = self.adj[w]
        for s in iso:
            if s in nw:
                continue
            ns = self.adj[s]
            for r in sorted(x - {u, v, w}):
                if r not in ns:
                    continue
                r_u = r in nu
                r_v = r in nv
                if r_u == r_v:
                    continue
                first = (v, w) if r_u else (u, w)
                matched = _norm_pairs((first, (r, s)))
                if self._induced_ok(matched):
                    removed = x | set(iso) | nw | self.adj[r]
                    return self._two_edge_step("R9", matched, removed, entry)
        raise self.violation("R9", entry, "no pair leaves the triangle")

    def _valid_r10(self, u):
        return (
            u in self.adj and len(self.adj[u]) == 3
            and self._has_cycle4_through(u)
        )

    def _find_r10(self):
        # 4-cycle through a degree-3 vertex u, whose off-cycle neighbor v
        # pairs with it; if v has degree 4 and the removal isolates a lot,
        # fall back to the first induced pair inside the closed scope.
        u = self._peek(self.r10, self._valid_r10)
        if u is None:
            return None
        nbrs = sorted(self.adj[u])
        best = None
        for i, p in enumerate(nbrs):
            np_ = self.adj[p]
            for q in nbrs[i + 1 :]:
                for z in self.adj[q]:
                    if z != u and z in np_:
                        cand = (p, z, q)
                        if best is None or cand < best:
                            best = cand
        p, w, q = best
        (v,) = set(nbrs) - {p, q}
        witness = (u, p, w, q)
        x = self.adj[u] | self.adj[v]
        iso = self._isolated_by(x)
        dv = len(self.adj[v])
        if len(iso) <= 2:
            return self._one_edge_step("R10", u, v, x, witness, iso=iso)
        if dv == 3:
            if len(iso) > 3:
                raise self.violation(
                    "R10", witness, f"isolates {len(iso)} beside a degree-3 partner"
                )
            return self._one_edge_step("R10", u, v, x, witness, iso=iso)
        if dv != 4:
            raise self.violation("R10", witness, f"partner has degree {dv}")
        return self._scope_pair_step("R10", x, iso, witness)

    def _valid_r11(self, entry):
        adj = self.adj
        return all(x in adj for x in entry)

    def _find_r11(self):
        # Any remaining 4-cycle (a, b, c, d): match the edge ab, or fall
        # back to the first induced pair inside the closed scope.
        if not self._static_built:
            self._build_static()
        entry = self._peek(self.r11, self._valid_r11)
        if entry is None:
            return None
        a, b, _, _ = entry
        x = self.adj[a] | self.adj[b]
        iso = self._isolated_by(x)
        if len(iso) <= 1:
            return self._one_edge_step("R11", a, b, x, entry, iso=iso)
        for s in iso:
            if len(self.adj[s]) != 4:
                raise self.violation(
                    "R11", entry, f"isolated vertex {s} has degree {len(self.adj[s])}"
                )
        return self._scope_pair_step("R11", x, iso, entry)

    def _scope_pair_step(self, rule, x, iso, witness):
        # Shared R10/R11 fallback: the dropped vertices keep enough edges
        # inside X u I(G') that an induced pair exists there; removing the
        # pair's neighborhoods costs at most 4 more vertices.
        scope = x | set(iso)
        pair = _lex_first_2matching(self.adj, scope)
        if pair is None:
            raise self.violation(rule, witness, "no induced pair inside the scope")
        removed = set(scope)
        for a, b in pair:
            removed |= self.adj[a]
            removed |= self.adj[b]
        second_ring = removed - scope
        if len(second_ring) > 4:
            raise self.violation(
                rule, witness, f"{len(second_ring)} vertices beyond the scope"
            )
        return self._two_edge_step(rule, _norm_pairs(pair), removed, witness)

    def _valid_r12(self, entry):
        return entry[0] in self.adj and entry[1] in self.adj

    def _find_r12(self):
        # Base step: minimum degree 3 and girth 5 or more by now, so
        # deleting any edge's two neighborhoods isolates nothing.
        if not self._static_built:
            self._build_static()
        entry = self._peek(self.r12, self._valid_r12)
        if entry is None:
            return None
        u, v = entry
        x = self.adj[u] | self.adj[v]
        iso = self._isolated_by(x)
        if iso:
            raise self.violation(
                "R12", entry, f"base step isolates {len(iso)} vertices"
            )
        return self._one_edge_step("R12", u, v, x, entry, iso=iso)
