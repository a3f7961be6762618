"""Acceptance gate: every release criterion at its stated scale and tolerance.

Each test prints one PASS/FAIL line (run pytest with ``-s`` to watch them).
The heavy suites are computed once per session and shared.
"""

import pytest

from paritygame import verify


def _report(result: verify.SuiteResult, name: str):
    status = "PASS" if result.passed else "FAIL"
    print(f"ACCEPT {name}: {status} ({result.elapsed:.1f}s)")
    for check in result.checks:
        mark = "pass" if check.passed else "FAIL"
        detail = f" [{check.detail}]" if check.detail else ""
        print(f"       {mark}  {check.label}{detail}")
    for ce in result.counterexamples:
        print(f"       counterexample: {ce}")


@pytest.fixture(scope="session")
def finite_sweep_result():
    return verify.finite_sweep(max_d=11)


@pytest.fixture(scope="session")
def delta_sweep_result():
    return verify.delta_sweep(max_total=13)


@pytest.fixture(scope="session")
def bisim_result():
    return verify.bisim(max_d=9, max_pennies=11, max_pieces=10)


@pytest.fixture(scope="session")
def selfplay_result(tmp_path_factory):
    report = tmp_path_factory.mktemp("selfplay") / "playouts.jsonl"
    return verify.selfplay(finite_max_d=10, symbolic_count=10000, report_path=str(report))


def test_finite_sweep_oracle_agreement(finite_sweep_result):
    _report(finite_sweep_result, "finite sweep d<=11 classify == solve_finite")
    check = finite_sweep_result.checks[0]
    assert check.passed, finite_sweep_result.counterexamples


def test_finite_case_fixtures(finite_sweep_result):
    labels = [c for c in finite_sweep_result.checks if "exercised" in c.label or "counting" in c.label]
    ok = all(c.passed for c in labels)
    print(f"ACCEPT counting-case fixtures by label: {'PASS' if ok else 'FAIL'}")
    assert ok, [c.label for c in labels if not c.passed]


def test_second_last_turn_rule(finite_sweep_result):
    check = [c for c in finite_sweep_result.checks if "three turns" in c.label][0]
    print(f"ACCEPT second-last-turn rule: {'PASS' if check.passed else 'FAIL'} [{check.detail}]")
    assert check.passed


def test_delta_game_criteria(delta_sweep_result):
    _report(delta_sweep_result, "delta game sweep (sums <= 13)")
    assert delta_sweep_result.passed, delta_sweep_result.counterexamples


def test_encoding_bisimulation(bisim_result):
    _report(bisim_result, "gap-encoding and children bisimulations")
    check = bisim_result.checks[0]
    assert check.passed, bisim_result.counterexamples


def test_children_games(bisim_result):
    rest = bisim_result.checks[1:]
    ok = all(c.passed for c in rest)
    print(f"ACCEPT children's games bisimulate and agree: {'PASS' if ok else 'FAIL'}")
    assert ok, bisim_result.counterexamples


def test_golden_examples():
    result = verify.examples()
    _report(result, "eight showcase domains, n in 3..6")
    assert result.passed, [c.label for c in result.checks if not c.passed]


def test_single_move_rules():
    result = verify.move_rules(max_d=10)
    _report(result, "single-move parity bookkeeping d<=10")
    assert result.passed, result.counterexamples


def test_selfplay_never_loses(selfplay_result):
    _report(selfplay_result, "self-play soundness (finite d<=10 + 10^4 symbolic)")
    assert selfplay_result.passed, selfplay_result.counterexamples


def test_bound_insensitivity():
    result = verify.bound_insensitivity(bounds=(2, 3, 4))
    _report(result, "canonical-window insensitivity B in {2,3,4}")
    assert result.passed, result.counterexamples
