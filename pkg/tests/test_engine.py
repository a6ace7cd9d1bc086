import pytest

from indmatch import (
    C25ComponentError,
    MaxDegreeExceededError,
    RandomGraphConfig,
    ReductionStep,
    SplitMix64,
    build_graph,
    find_induced_2matching_within,
    gen_c25,
    gen_cycle,
    gen_path,
    gen_random_maxdeg4,
    gen_tight9,
    is_induced_matching,
    max_induced_matching,
    next_reduction,
    solve,
    validate_step,
)

import _oracles


def circulant(n, chords):
    edges = set()
    for i in range(n):
        for c in chords:
            edges.add(tuple(sorted((i, (i + c) % n))))
    return sorted(edges)


def minus(n, edges, cut):
    cutset = {tuple(sorted(e)) for e in cut}
    return build_graph(n, [e for e in edges if tuple(sorted(e)) not in cutset])


def dodecahedron():
    lcf = [10, 7, 4, -4, -7, 10, -4, 7, -7, 4] * 2
    edges = {tuple(sorted((i, (i + 1) % 20))) for i in range(20)}
    edges |= {tuple(sorted((i, (i + lcf[i]) % 20))) for i in range(20)}
    return build_graph(20, sorted(edges))


def test_first_step_path():
    step = next_reduction(gen_path(20))
    assert step.rule == "R1"
    assert step.matched == ((0, 1),)
    assert step.removed == (0, 1, 2)
    assert step.metrics["removed_size"] == 3
    assert step.metrics["isolated_after"] == 0
    assert step.metrics["edges_out"] == 1


def test_first_step_cycle():
    step = next_reduction(gen_cycle(20))
    assert step.rule == "R5"
    assert step.matched == ((0, 1),)
    assert step.removed == (0, 1, 2, 19)


def test_first_step_dodecahedron():
    # 3-regular with girth 5: nothing before the base rule applies
    step = next_reduction(dodecahedron())
    assert step.rule == "R12"
    assert step.matched == ((0, 1),)
    assert step.removed == (0, 1, 2, 8, 10, 19)


# One deterministic instance per remaining rule. Each is built so that all
# higher-priority rules are inapplicable: pendant neighbors have degree 4,
# degree-2 vertices appear exactly where the targeted rule wants them, and
# the rest is cycle or circulant filler.

def test_first_step_r2():
    # two pendants on one degree-4 hub
    edges = [(0, 1), (0, 2), (0, 3), (0, 4), (3, 5), (3, 6), (4, 12), (4, 13)]
    edges += [(i, i + 1) for i in range(5, 19)] + [(5, 19)]
    step = next_reduction(build_graph(20, edges))
    assert step.rule == "R2"
    assert step.matched == ((0, 1),)
    assert step.removed == (0, 1, 2, 3, 4)


def test_first_step_r3():
    # pendants 0 and 4 at distance exactly 4 via 1-2-3
    edges = [(0, 1), (1, 2), (1, 5), (1, 6), (4, 3), (3, 2), (3, 7), (3, 8)]
    edges += [(i, i + 1) for i in range(5, 18)] + [(5, 18)]
    step = next_reduction(build_graph(19, edges))
    assert step.rule == "R3"
    assert step.matched == ((0, 1), (3, 4))
    assert step.removed == (0, 1, 2, 3, 4, 5, 6, 7, 8)


def test_first_step_r4():
    # a lone pendant whose neighbor has degree 4
    edges = [(0, 1), (1, 2), (1, 3), (1, 4)]
    edges += [(i, i + 1) for i in range(2, 19)] + [(2, 19)]
    step = next_reduction(build_graph(20, edges))
    assert step.rule == "R4"
    assert step.matched == ((0, 1),)
    assert step.removed == (0, 1, 2, 3, 4)


def test_first_step_r6():
    # degree-2 vertex 0 inside triangle (0, 1, 20)
    g = minus(21, circulant(21, (1, 2)), [(0, 2), (0, 19)])
    assert g.degree(0) == 2
    step = next_reduction(g)
    assert step.rule == "R6"
    assert step.matched == ((0, 1),)
    assert step.removed == (0, 1, 2, 3, 20)


def test_first_step_r7():
    # degree-2 vertex 0 on the 4-cycle 0-3-2-19
    g = minus(20, circulant(20, (1, 3)), [(0, 1), (0, 17)])
    step = next_reduction(g)
    assert step.rule == "R7"
    assert step.matched == ((0, 3),)
    assert step.removed == (0, 2, 3, 4, 6, 19)


def test_first_step_r8():
    # degree-2 vertex 0 on no triangle and no 4-cycle
    g = minus(20, circulant(20, (1, 3)), [(0, 1), (0, 19)])
    step = next_reduction(g)
    assert step.rule == "R8"
    assert step.matched == ((0, 3),)
    assert step.removed == (0, 2, 3, 4, 6, 17)


def test_first_step_r9():
    # 4-regular circulant with triangles and no smaller structure
    step = next_reduction(build_graph(21, circulant(21, (1, 2))))
    assert step.rule == "R9"
    assert step.matched == ((0, 1),)
    assert step.removed == (0, 1, 2, 3, 19, 20)


def test_first_step_r10():
    # cutting one edge of C20(1,3) leaves degree-3 vertices on 4-cycles
    g = minus(20, circulant(20, (1, 3)), [(0, 1)])
    step = next_reduction(g)
    assert step.rule == "R10"
    assert step.matched == ((0, 17),)
    assert step.removed == (0, 3, 14, 16, 17, 18, 19)


def test_first_step_r11():
    # C20(1,3) is 4-regular with girth 4
    step = next_reduction(build_graph(20, circulant(20, (1, 3))))
    assert step.rule == "R11"
    assert step.matched == ((0, 1),)
    assert step.removed == (0, 1, 2, 3, 4, 17, 18, 19)


def test_next_reduction_rejects_small_or_disconnected():
    with pytest.raises(ValueError):
        next_reduction(gen_path(10))  # at most the exact threshold
    big_but_split = build_graph(40, [(i, i + 1) for i in range(19)]
                                + [(i, i + 1) for i in range(20, 39)])
    with pytest.raises(ValueError):
        next_reduction(big_but_split)


def test_solve_named_graphs():
    for g, want in (
        (gen_tight9(), 1),
        (build_graph(2, [(0, 1)]), 1),
        (gen_path(20), 7),
        (gen_cycle(20), 6),
        (dodecahedron(), 6),
    ):
        result = solve(g)
        assert len(result.matching) == want
        assert is_induced_matching(g, result.matching)
        assert 9 * len(result.matching) >= result.n - result.isolated

    k2 = solve(build_graph(2, [(0, 1)]))
    assert [s.rule for s in k2.certificate.steps] == ["EXACT"]
    assert k2.matching == ((0, 1),)


def test_solve_rejects_c25():
    with pytest.raises(C25ComponentError) as info:
        solve(gen_c25())
    assert info.value.component == tuple(range(10))
    # also when it is just one component among others
    edges = list(gen_c25().edges()) + [(10, 11)]
    with pytest.raises(C25ComponentError):
        solve(build_graph(12, edges))
    # a relabeled copy is still caught
    perm = {v: (7 * v + 3) % 10 for v in range(10)}
    edges = [(perm[u], perm[v]) for u, v in gen_c25().edges()]
    with pytest.raises(C25ComponentError):
        solve(build_graph(10, edges))


def test_solve_rejects_degree_five():
    star5 = build_graph(6, [(0, i) for i in range(1, 6)])
    with pytest.raises(MaxDegreeExceededError) as info:
        solve(star5)
    assert info.value.vertex == 0
    assert info.value.degree == 5


def test_solve_threshold_validation():
    with pytest.raises(ValueError):
        solve(gen_path(20), exact_threshold=9)
    # a larger threshold shifts work to the exact solver but stays optimal
    result = solve(gen_path(60), exact_threshold=50)
    assert len(result.matching) == 20
    assert [s.rule for s in result.certificate.steps] == [
        "R1", "R1", "R1", "R1", "EXACT",
    ]


def test_solve_handles_isolated_and_components():
    edges = [(i, i + 1) for i in range(8)]  # P9 on 0..8; 9..11 isolated
    g = build_graph(12, edges)
    result = solve(g)
    assert result.isolated == 3
    assert result.n == 12
    assert len(result.matching) == 3
    used = {v for e in result.matching for v in e}
    assert used <= set(range(9))

    two = build_graph(7, [(0, 1), (2, 3), (3, 4), (4, 5), (5, 6)])
    result = solve(two)
    assert len(result.matching) == len(max_induced_matching(two))


def test_solve_certificate_structure():
    prng = SplitMix64(1234)
    for _ in range(20):
        n = 2 + prng.below(60)
        g = gen_random_maxdeg4(
            RandomGraphConfig(n=n, extra_edge_attempts=2 * n, seed=prng.next_u64())
        )
        result = solve(g)
        removed_all = []
        matched_all = []
        for step in result.certificate.steps:
            removed_all.extend(step.removed)
            matched_all.extend(step.matched)
            assert set(v for e in step.matched for v in e) <= set(step.removed)
            # each step pays for what it deletes plus what it strands
            assert 9 * len(step.matched) >= len(step.removed)
        # vertices isolated mid-reduction are dropped without appearing in
        # any removed tuple, so coverage is subset, not equality
        assert len(removed_all) == len(set(removed_all))
        assert set(removed_all) <= set(g.vertices())
        assert sorted(matched_all) == list(result.matching)


def test_solve_exact_on_small_components():
    prng = SplitMix64(31337)
    for _ in range(40):
        n = 2 + prng.below(17)
        g = gen_random_maxdeg4(
            RandomGraphConfig(n=n, extra_edge_attempts=2 * n, seed=prng.next_u64())
        )
        result = solve(g)
        assert len(result.matching) == len(max_induced_matching(g))


def test_solve_deterministic():
    g = gen_random_maxdeg4(RandomGraphConfig(n=120, extra_edge_attempts=240, seed=5))
    assert solve(g) == solve(g)


def test_solve_matches_oracle_bound_on_random_graphs():
    prng = SplitMix64(271828)
    for _ in range(60):
        n = 2 + prng.below(40)
        g = gen_random_maxdeg4(
            RandomGraphConfig(n=n, extra_edge_attempts=2 * n, seed=prng.next_u64())
        )
        result = solve(g)
        assert is_induced_matching(g, result.matching)
        assert 9 * len(result.matching) >= g.n
        if g.m <= 14:
            assert len(result.matching) <= _oracles.nu_s(g)


def test_validate_step():
    c20 = gen_cycle(20)
    assert validate_step(c20, next_reduction(c20)) == []

    p30 = gen_path(30)
    assert validate_step(p30, ReductionStep("R1", ((0, 1),), tuple(range(12)))) == [
        "9*1 matched < 12 removed + 0 isolated"
    ]
    assert validate_step(p30, ReductionStep("R5", ((0, 1), (1, 2)), (0, 1, 2, 3)))
    assert validate_step(p30, ReductionStep("R5", ((0, 1), (2, 3)), tuple(range(5))))
    assert validate_step(p30, ReductionStep("R1", ((0, 2),), (0, 1, 2, 3)))
    # neighbor of a matched endpoint must not survive
    assert validate_step(p30, ReductionStep("R1", ((0, 1),), (0, 1)))


def test_find_induced_2matching_within():
    p6 = gen_path(6)
    assert find_induced_2matching_within(p6, set(range(6))) == ((0, 1), (3, 4))
    assert find_induced_2matching_within(p6, {0, 1, 2}) is None
    tri = build_graph(3, [(0, 1), (1, 2), (2, 0)])
    assert find_induced_2matching_within(tri, {0, 1, 2}) is None
    star = build_graph(5, [(0, i) for i in range(1, 5)])
    assert find_induced_2matching_within(star, set(range(5))) is None
