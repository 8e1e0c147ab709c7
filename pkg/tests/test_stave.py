import numpy as np
import pytest

from intervalham.generators import gen_exhaustive, gen_random
from intervalham.model import build_model
from intervalham.oracle import oracle_max_stave
from intervalham.stave import (
    MergeInfeasible,
    Stave,
    dominates,
    merge,
    run_sweep,
    stave_to_json,
    sweep,
    trace_to_json,
    verify_stave,
)


def test_example_sweep(diamond):
    m = build_model(diamond)
    stave, trace = sweep(m)
    assert (stave.u1, stave.un) == (0, 3)
    assert stave.p == 2
    assert sorted(stave.paths) == [(0, 1, 3), (0, 2, 3)]
    assert verify_stave(diamond, stave) == []
    assert trace.events == []


def test_p3_sweep(p3):
    stave, _ = sweep(build_model(p3))
    assert stave.paths == ((0, 1, 2),)


def test_claw_has_no_spanning_stave(claw):
    m = build_model(claw)
    assert (m.u1, m.un) == (1, 3)
    stave, trace = sweep(m)
    assert stave is None
    assert trace.fail_time is not None
    assert trace.events[-1].p_after == 0


def test_sweep_with_smaller_p(diamond):
    stave, _ = sweep(build_model(diamond), p=1)
    assert stave.p == 1
    assert verify_stave(diamond, stave) == []


def test_merge_example(diamond):
    m = build_model(diamond)
    path = merge(m, [0, 1, 3], [[0, 2]])
    assert path[0] == 0 and path[-1] == 3
    assert sorted(path) == [0, 1, 2, 3]
    assert all(diamond.has_edge(a, b) for a, b in zip(path, path[1:]))


def test_merge_identity(diamond):
    assert merge(build_model(diamond), [0, 1, 3]) == [0, 1, 3]


def test_merge_infeasible(claw, diamond):
    m = build_model(claw)
    with pytest.raises(MergeInfeasible):
        merge(m, [1, 0, 3], [[1, 0, 2]])
    with pytest.raises(MergeInfeasible):
        merge(build_model(diamond), [1, 0, 3], [[0, 2]])


def test_verify_stave_catches_problems(diamond):
    assert verify_stave(diamond, Stave(0, 3, ((0, 1, 3),))) == ["stave covers 3 of 4 vertices"]
    assert verify_stave(diamond, Stave(0, 3, ((0, 1, 3),)), spanning=False) == []
    bad = verify_stave(diamond, Stave(0, 3, ((0, 1, 3), (0, 1, 2, 3))))
    assert any("repeated" in p for p in bad)
    bad = verify_stave(diamond, Stave(0, 3, ((0, 3), (0, 1, 2, 3))))
    assert any("a-d is not an edge" in p for p in bad)


def test_dominates(claw, p3):
    assert dominates(claw, [0])
    assert not dominates(claw, [1])
    assert dominates(p3, [1])


@pytest.mark.parametrize("n", range(2, 8))
def test_sweep_matches_oracle(n):
    for g, _ in gen_exhaustive(n):
        m = build_model(g)
        if m.s == 1:
            continue
        stave, _ = sweep(m)
        best = oracle_max_stave(g, m.u1, m.un)
        assert (0 if stave is None else stave.p) == best
        if stave is not None:
            assert verify_stave(g, stave) == []


def test_audit_picks_the_smallest_terminal():
    for seed in range(30):
        g, _ = gen_random(80, 5.0, seed=seed, connected=True)
        _, trace = sweep(build_model(g), audit=True)
        for t, pid, r, lowest in trace.chosen:
            assert r == lowest


def test_trace_times_are_consistent():
    g, _ = gen_random(200, 6.0, seed=1, connected=True)
    m = build_model(g)
    stave, trace = sweep(m)
    act, deact = trace.activated, trace.deactivated
    on = act >= 0
    assert np.all(act[on] >= np.asarray(m.start)[on] - 1)
    both = on & (deact >= 0)
    assert np.all(deact[both] >= act[both])
    for v in range(g.n):
        assert trace.state_at(v, m.start[v] - 1) == "outside" or m.start[v] == 1


def test_run_sweep_keeps_dead_paths(claw):
    system, trace = run_sweep(build_model(claw))
    assert system.p == 0
    assert len(system.finalized) == len(trace.events)


def test_json(diamond):
    m = build_model(diamond)
    stave, trace = sweep(m)
    data = stave_to_json(stave, diamond)
    assert data["p"] == 2 and ["a", "b", "d"] in data["paths"]
    tr = trace_to_json(trace, diamond)
    assert tr["vertices"]["a"]["pred"] is None
