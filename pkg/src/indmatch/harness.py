"""Independent checking of matchings and certificates, plus a fuzz loop.

verify_certificate replays a solve log against a fresh copy of the graph
using only the public step semantics, so it would catch an engine that
cheated: every step must be a valid paid-for removal at the moment it runs,
exact steps must remove a whole component and match optimally, and the steps
must tile the graph exactly and assemble into the reported matching.

The fuzz loop is fully deterministic: trial t of a run with master seed s
derives its own seed by one splitmix64 step from s + t, so any failure can
be replayed in isolation.
"""

from dataclasses import dataclass
from time import perf_counter

from .engine import RULE_NAMES, _step_violations
from .exact import max_induced_matching
from .errors import BudgetExceededError
from .formats import format_graph
from .generators import (
    RandomGraphConfig,
    SplitMix64,
    gen_random_maxdeg4,
    splitmix64_next,
)
from .graph import Graph, is_isomorphic_c25

_MASK64 = (1 << 64) - 1

# Exact steps are re-solved during replay. Anything a sane threshold can
# produce is tiny; the cap and budget only guard the checker against
# maliciously large "components" in hand-written certificates.
_RECHECK_MAX_VERTICES = 64
_RECHECK_BUDGET = 2_000_000


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of a check: structural flag, accounting flag, and messages.

    induced_ok covers matching shape (edges exist, pairwise induced, steps
    well-formed); bound_ok covers the size guarantee and per-step
    accounting. details is empty exactly when both flags hold.
    """

    induced_ok: bool
    bound_ok: bool
    details: tuple

    @property
    def ok(self):
        return self.induced_ok and self.bound_ok


def verify_solution(g, matching):
    """Check a bare matching against g: induced, and at least (n - i)/9 edges."""
    adj = g.adjacency
    structure = []
    usable = []
    for a, b in matching:
        if a not in adj or b not in adj:
            structure.append(f"pair {a}-{b} uses a vertex the graph lacks")
            continue
        if a == b:
            structure.append(f"pair {a}-{b} is degenerate")
            continue
        if b not in adj[a]:
            structure.append(f"pair {a}-{b} is not an edge")
            continue
        usable.append((a, b))
    owner = {}
    for i, (a, b) in enumerate(usable):
        for x in (a, b):
            if x in owner:
                structure.append(f"vertex {x} appears in two matched pairs")
            else:
                owner[x] = i
    conflicts = set()
    for a, b in usable:
        for x in (a, b):
            for y in adj[x]:
                j = owner.get(y)
                if j is not None and j != owner.get(x):
                    conflicts.add((min(x, y), max(x, y)))
    for x, y in sorted(conflicts):
        structure.append(f"edge {x}-{y} joins two matched pairs")
    isolated = sum(1 for v in adj if not adj[v])
    accounting = []
    if 9 * len(tuple(matching)) < g.n - isolated:
        accounting.append(
            f"9*{len(tuple(matching))} matched < {g.n} vertices"
            f" - {isolated} isolated"
        )
    return VerifyReport(
        not structure, not accounting, tuple(structure + accounting)
    )


def verify_certificate(g, result):
    """Replay a solve log step by step and re-check every claim it makes."""
    structure = []
    accounting = []
    cur = {v: set(g.neighbors(v)) for v in g.vertices()}
    pre_isolated = sorted(v for v in cur if not cur[v])
    for v in pre_isolated:
        del cur[v]
    if result.n != g.n:
        structure.append(f"result says n={result.n}, the graph has {g.n}")
    if result.isolated != len(pre_isolated):
        structure.append(
            f"result says {result.isolated} isolated vertices,"
            f" the graph has {len(pre_isolated)}"
        )
    replayed = True
    for k, step in enumerate(result.certificate.steps, 1):
        rset = set(step.removed)
        missing = sorted(x for x in rset if x not in cur)
        if missing or len(rset) != len(step.removed):
            structure.append(
                f"step {k} removes unavailable or repeated vertices"
            )
            replayed = False
            break
        if step.rule == "EXACT":
            for msg in _exact_step_problems(cur, step):
                structure.append(f"step {k} {msg}")
        elif step.rule not in RULE_NAMES:
            structure.append(f"step {k} names unknown rule {step.rule}")
        for kind, msg in _step_violations(cur, step.matched, step.removed):
            if kind == "structure":
                structure.append(f"step {k} {msg}")
            else:
                accounting.append(f"step {k} {msg}")
        boundary = set()
        for x in rset:
            for y in cur.pop(x):
                if y not in rset:
                    boundary.add(y)
        for y in boundary:
            cur[y] -= rset
            if not cur[y]:
                del cur[y]
    if replayed and cur:
        structure.append(f"{len(cur)} vertices are never processed")
    if replayed:
        claimed = sorted(p for st in result.certificate.steps for p in st.matched)
        if claimed != sorted(result.matching):
            structure.append(
                "step matchings do not assemble into the reported matching"
            )
    solution = verify_solution(g, result.matching)
    structure_ok = solution.induced_ok and not structure
    bound_ok = solution.bound_ok and not accounting
    details = tuple(solution.details) + tuple(structure) + tuple(accounting)
    return VerifyReport(structure_ok, bound_ok, details)


def _exact_step_problems(cur, step):
    rset = set(step.removed)
    problems = []
    leaks = sorted(
        y for x in rset for y in cur[x] if y not in rset
    )
    if leaks:
        problems.append(
            f"exact removal is not a whole component (edges to {leaks[:4]})"
        )
        return problems
    start = step.removed[0]
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in cur[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    if len(seen) != len(rset):
        problems.append("exact removal is not connected")
        return problems
    if len(rset) > _RECHECK_MAX_VERTICES:
        problems.append(
            f"exact component of {len(rset)} vertices is too large to re-check"
        )
        return problems
    sub = Graph({v: frozenset(cur[v]) for v in rset})
    try:
        best = max_induced_matching(sub, max_nodes=_RECHECK_BUDGET)
    except BudgetExceededError:
        problems.append("exact component re-check ran out of search budget")
        return problems
    if len(best) != len(step.matched):
        problems.append(
            f"exact step matched {len(step.matched)} edges,"
            f" the optimum is {len(best)}"
        )
    return problems


@dataclass(frozen=True)
class FuzzConfig:
    """Shape of a fuzz run. cross_check_max_n caps the sizes that are also
    compared against the exact solver (at most 24 to keep trials fast)."""

    trials: int = 1000
    n_min: int = 2
    n_max: int = 300
    seed: int = 0
    cross_check_max_n: int = 20


@dataclass(frozen=True)
class FuzzFailure:
    """One failed trial: its derived seed, what failed, and the instance."""

    trial: int
    seed: int
    kind: str
    graph_text: str
    details: tuple = ()


@dataclass(frozen=True)
class FuzzReport:
    """Deterministic summary of a fuzz run plus observed peak trial time.

    summary_lines() excludes the timing so that two runs with the same
    config produce byte-identical summaries.
    """

    trials: int
    skipped_c25: int
    failures: tuple
    max_seconds: float

    @property
    def ok(self):
        return not self.failures

    def summary_lines(self):
        lines = [
            f"trials {self.trials}",
            f"skipped {self.skipped_c25}",
            f"failures {len(self.failures)}",
        ]
        lines.extend(
            f"trial {f.trial} seed {f.seed} {f.kind}" for f in self.failures
        )
        return lines


def fuzz(config):
    """Solve and verify random instances; returns the report, raises nothing.

    Every library exception inside a trial is recorded as a failure of that
    trial, so a run surveys the whole configured space even if one instance
    misbehaves.
    """
    from .engine import solve

    if config.trials < 1:
        raise ValueError("trials must be >= 1")
    if not 1 <= config.n_min <= config.n_max:
        raise ValueError("need 1 <= n_min <= n_max")
    if not 0 <= config.cross_check_max_n <= 24:
        raise ValueError("cross_check_max_n must be between 0 and 24")
    failures = []
    skipped = 0
    max_seconds = 0.0
    span = config.n_max - config.n_min + 1
    for trial in range(config.trials):
        derived, _ = splitmix64_next((config.seed + trial) & _MASK64)
        prng = SplitMix64(derived)
        n = config.n_min + prng.below(span)
        g = gen_random_maxdeg4(
            RandomGraphConfig(n=n, extra_edge_attempts=2 * n, seed=prng.next_u64())
        )
        if is_isomorphic_c25(g):
            skipped += 1
            continue

        def fail(kind, details=()):
            failures.append(
                FuzzFailure(trial, derived, kind, format_graph(g), tuple(details))
            )

        started = perf_counter()
        try:
            result = solve(g)
        except Exception as exc:  # any library error here is a finding
            fail(f"solve raised {type(exc).__name__}", (str(exc),))
            max_seconds = max(max_seconds, perf_counter() - started)
            continue
        solution = verify_solution(g, result.matching)
        if not solution.ok:
            fail("solution check failed", solution.details)
        certificate = verify_certificate(g, result)
        if not certificate.ok:
            fail("certificate check failed", certificate.details)
        if n <= config.cross_check_max_n:
            best = max_induced_matching(g)
            if len(result.matching) > len(best):
                fail(
                    "matching exceeds the optimum",
                    (f"{len(result.matching)} > {len(best)}",),
                )
            isolated = sum(1 for v in g.vertices() if g.degree(v) == 0)
            if 9 * len(best) < g.n - isolated:
                fail(
                    "optimum below the guarantee",
                    (f"9*{len(best)} < {g.n} - {isolated}",),
                )
        max_seconds = max(max_seconds, perf_counter() - started)
    return FuzzReport(config.trials, skipped, tuple(failures), max_seconds)
