import dataclasses

import pytest

from indmatch import (
    Certificate,
    FuzzConfig,
    RandomGraphConfig,
    ReductionStep,
    SolveResult,
    SplitMix64,
    build_graph,
    fuzz,
    gen_path,
    gen_random_maxdeg4,
    solve,
    verify_certificate,
    verify_solution,
)


def test_verify_solution_accepts_good_matching():
    report = verify_solution(gen_path(5), [(0, 1), (3, 4)])
    assert report.ok
    assert report.induced_ok and report.bound_ok
    assert report.details == ()


def test_verify_solution_rejects_joined_pairs():
    report = verify_solution(gen_path(4), [(0, 1), (2, 3)])
    assert not report.induced_ok
    assert report.bound_ok
    assert report.details == ("edge 1-2 joins two matched pairs",)


def test_verify_solution_rejects_undersized_matching():
    report = verify_solution(build_graph(2, [(0, 1)]), [])
    assert report.induced_ok
    assert not report.bound_ok
    assert report.details == ("9*0 matched < 2 vertices - 0 isolated",)


def test_verify_solution_structural_details():
    g = gen_path(6)
    report = verify_solution(g, [(0, 9), (0, 2), (1, 1), (2, 3), (3, 4)])
    assert not report.induced_ok
    assert "pair 0-9 uses a vertex the graph lacks" in report.details
    assert "pair 0-2 is not an edge" in report.details
    assert "pair 1-1 is degenerate" in report.details
    assert "vertex 3 appears in two matched pairs" in report.details


def test_verify_solution_counts_isolated():
    g = build_graph(11, [(0, 1)])  # one edge, nine isolated vertices
    assert verify_solution(g, [(0, 1)]).ok
    assert not verify_solution(g, []).ok


def test_verify_certificate_accepts_solver_output():
    prng = SplitMix64(60221023)
    for _ in range(25):
        n = 2 + prng.below(120)
        g = gen_random_maxdeg4(
            RandomGraphConfig(n=n, extra_edge_attempts=2 * n, seed=prng.next_u64())
        )
        result = solve(g)
        report = verify_certificate(g, result)
        assert report.ok, report.details


def _tampered(result, **changes):
    return dataclasses.replace(result, **changes)


def test_verify_certificate_catches_dropped_step():
    g = gen_path(20)
    result = solve(g)
    bad = _tampered(
        result, certificate=Certificate(result.certificate.steps[1:])
    )
    report = verify_certificate(g, bad)
    assert not report.induced_ok
    assert any("never processed" in d for d in report.details)


def test_verify_certificate_catches_shrunk_removed():
    g = gen_path(20)
    result = solve(g)
    first = result.certificate.steps[0]
    shrunk = ReductionStep(first.rule, first.matched, first.removed[:-1])
    bad = _tampered(
        result,
        certificate=Certificate((shrunk,) + result.certificate.steps[1:]),
    )
    report = verify_certificate(g, bad)
    assert not report.induced_ok
    assert any("survives" in d or "never processed" in d for d in report.details)


def test_verify_certificate_catches_overlapping_removed():
    g = gen_path(20)
    result = solve(g)
    first, second = result.certificate.steps
    widened = ReductionStep(second.rule, second.matched, (0,) + second.removed)
    bad = _tampered(result, certificate=Certificate((first, widened)))
    report = verify_certificate(g, bad)
    assert not report.induced_ok
    assert any("unavailable or repeated" in d for d in report.details)


def test_verify_certificate_catches_suboptimal_exact():
    g = gen_path(20)
    result = solve(g)
    first, second = result.certificate.steps
    assert second.rule == "EXACT"
    weakened = ReductionStep("EXACT", second.matched[:-1], second.removed)
    bad = _tampered(
        result,
        certificate=Certificate((first, weakened)),
        matching=first.matched + weakened.matched,
    )
    report = verify_certificate(g, bad)
    assert not report.ok
    assert any("the optimum is" in d for d in report.details)


def test_verify_certificate_catches_corrupted_matching():
    g = gen_path(20)
    result = solve(g)
    bad = _tampered(result, matching=result.matching[:-1])
    report = verify_certificate(g, bad)
    assert not report.induced_ok
    assert any("do not assemble" in d for d in report.details)


def test_verify_certificate_catches_wrong_counts():
    g = gen_path(20)
    result = solve(g)
    report = verify_certificate(g, _tampered(result, n=21))
    assert any("says n=21" in d for d in report.details)
    report = verify_certificate(g, _tampered(result, isolated=2))
    assert any("says 2 isolated" in d for d in report.details)


def test_verify_certificate_catches_partial_component_exact():
    g = gen_path(6)
    fake = SolveResult(
        ((0, 1),),
        Certificate((
            ReductionStep("EXACT", ((0, 1),), (0, 1, 2)),
            ReductionStep("EXACT", ((3, 4),), (3, 4, 5)),
        )),
        6,
        0,
    )
    report = verify_certificate(g, fake)
    assert not report.induced_ok
    assert any("not a whole component" in d for d in report.details)
    assert any("do not assemble" in d for d in report.details)


def test_verify_certificate_catches_disconnected_exact():
    g = build_graph(4, [(0, 1), (2, 3)])
    fake = SolveResult(
        ((0, 1), (2, 3)),
        Certificate((ReductionStep("EXACT", ((0, 1), (2, 3)), (0, 1, 2, 3)),)),
        4,
        0,
    )
    report = verify_certificate(g, fake)
    assert not report.induced_ok
    assert any("not connected" in d for d in report.details)


def test_verify_certificate_catches_unknown_rule():
    g = gen_path(20)
    result = solve(g)
    first, second = result.certificate.steps
    renamed = ReductionStep("R0", first.matched, first.removed)
    bad = _tampered(result, certificate=Certificate((renamed, second)))
    report = verify_certificate(g, bad)
    assert any("unknown rule R0" in d for d in report.details)


def test_fuzz_config_validation():
    with pytest.raises(ValueError):
        fuzz(FuzzConfig(trials=0))
    with pytest.raises(ValueError):
        fuzz(FuzzConfig(n_min=0))
    with pytest.raises(ValueError):
        fuzz(FuzzConfig(n_min=10, n_max=5))
    with pytest.raises(ValueError):
        fuzz(FuzzConfig(cross_check_max_n=25))
    with pytest.raises(ValueError):
        fuzz(FuzzConfig(cross_check_max_n=-1))


def test_fuzz_defaults():
    config = FuzzConfig()
    assert config.trials == 1000
    assert config.n_min == 2
    assert config.n_max == 300
    assert config.seed == 0
    assert config.cross_check_max_n == 20


def test_fuzz_small_run_passes_and_repeats():
    config = FuzzConfig(trials=40, n_min=2, n_max=40, seed=7)
    first = fuzz(config)
    second = fuzz(config)
    assert first.ok
    assert first.trials == 40
    assert first.failures == ()
    assert first.summary_lines() == second.summary_lines()
    assert first.summary_lines()[:3] == ["trials 40", "skipped 0", "failures 0"]
    # timing is observed, not part of the deterministic summary
    assert first.max_seconds > 0.0
    assert all("seconds" not in line for line in first.summary_lines())


def test_fuzz_trial_seeds_are_isolated():
    # the same trial index yields the same instance regardless of trials count
    a = fuzz(FuzzConfig(trials=3, n_min=2, n_max=30, seed=11))
    b = fuzz(FuzzConfig(trials=5, n_min=2, n_max=30, seed=11))
    assert a.ok and b.ok
    assert a.skipped_c25 == 0 and b.skipped_c25 == 0
