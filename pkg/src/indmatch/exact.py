"""Exact maximum induced matching via branch and bound on the conflict graph.

Two edges conflict when they share an endpoint or some edge of the graph
joins them; an induced matching is exactly an independent set in the
conflict graph. The search is deterministic: nodes are the edges in sorted
order, branching always picks the most-conflicted remaining node (ties to
the smallest index) and tries inclusion first, so equal-size optima resolve
the same way on every run.

Intended for small graphs (components up to a few dozen edges); the node
budget guards against larger accidental inputs.
"""

from dataclasses import dataclass

from .errors import BudgetExceededError


@dataclass(frozen=True)
class ConflictGraph:
    """Edges of a graph as nodes, with their mutual-exclusion lists.

    nodes[i] is the i-th edge as a (min, max) pair in sorted order;
    conflicts[i] are the indices that cannot join node i in an induced
    matching.
    """

    nodes: tuple
    conflicts: tuple


def build_conflict_graph(g):
    nodes = tuple(g.edges())
    at = {v: [] for v in g.vertices()}
    for i, (a, b) in enumerate(nodes):
        at[a].append(i)
        at[b].append(i)
    adj = g.adjacency
    conflicts = []
    for i, (a, b) in enumerate(nodes):
        reach = set(at[a])
        reach.update(at[b])
        for x in (a, b):
            for y in adj[x]:
                reach.update(at[y])
        reach.discard(i)
        conflicts.append(tuple(sorted(reach)))
    return ConflictGraph(nodes, tuple(conflicts))


def max_induced_matching(g, max_nodes=0):
    """A maximum induced matching of g as a sorted tuple of (min, max) pairs.

    max_nodes caps the number of search-tree nodes visited (0 = unlimited);
    exceeding it raises BudgetExceededError rather than returning a
    sub-optimal answer.
    """
    cg = build_conflict_graph(g)
    k = len(cg.nodes)
    if k == 0:
        return ()
    conf = [0] * k
    for i, cs in enumerate(cg.conflicts):
        mask = 0
        for j in cs:
            mask |= 1 << j
        conf[i] = mask
    full = (1 << k) - 1

    # Greedy first-fit seed: a decent incumbent makes the cover bound bite
    # from the start.
    best_set = 0
    avail = full
    while avail:
        low = avail & -avail
        best_set |= low
        avail &= ~(low | conf[low.bit_length() - 1])
    best_size = best_set.bit_count()

    visited = 0

    def cover_bound(mask):
        # Greedy clique cover of the remaining conflict nodes; an induced
        # matching takes at most one node per conflict clique.
        count = 0
        while mask:
            low = mask & -mask
            clique = low
            cand = conf[low.bit_length() - 1] & mask & ~low
            while cand:
                u = cand & -cand
                clique |= u
                cand &= conf[u.bit_length() - 1]
            mask &= ~clique
            count += 1
        return count

    # Explicit stack, include-branch explored first; an explicit stack keeps
    # deep exclude-chains on big inputs from tripping the interpreter's
    # recursion limit before the budget can fire.
    stack = [(full, 0, 0)]
    while stack:
        mask, chosen, size = stack.pop()
        visited += 1
        if max_nodes and visited > max_nodes:
            raise BudgetExceededError(visited, max_nodes)
        if not mask:
            if size > best_size:
                best_size = size
                best_set = chosen
            continue
        if size + cover_bound(mask) <= best_size:
            continue
        pick = -1
        pick_deg = -1
        rest = mask
        while rest:
            low = rest & -rest
            i = low.bit_length() - 1
            deg = (conf[i] & mask).bit_count()
            if deg > pick_deg:
                pick_deg = deg
                pick = i
            rest &= ~low
        bit = 1 << pick
        stack.append((mask & ~bit, chosen, size))
        stack.append((mask & ~(bit | conf[pick]), chosen | bit, size + 1))
    out = []
    rest = best_set
    while rest:
        low = rest & -rest
        out.append(cg.nodes[low.bit_length() - 1])
        rest &= ~low
    out.sort()
    return tuple(out)
