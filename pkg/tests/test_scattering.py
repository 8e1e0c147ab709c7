import random

import pytest

from intervalham.common import NEG_INF
from intervalham.generators import gen_exhaustive, gen_family, gen_random
from intervalham.graph import Graph, components
from intervalham.model import build_model, separator
from intervalham.oracle import oracle_min_path_cover, oracle_scattering_number
from intervalham.scattering import (
    NoDecrementEvent,
    depletion_times,
    extract_witness,
    min_path_cover,
    scattering_number,
    witness_to_json,
    witness_value,
)
from intervalham.stave import sweep


def check_cover(g, cover):
    seen = [v for path in cover.paths for v in path]
    assert sorted(seen) == list(range(g.n))
    for path in cover.paths:
        assert all(g.has_edge(a, b) for a, b in zip(path, path[1:]))


def test_complete_graph(k4):
    r = scattering_number(k4)
    assert r.value is NEG_INF
    assert r.witness is None
    assert r.p_star is None


def test_example(diamond):
    r = scattering_number(diamond)
    assert r.value == 0 and r.p_star == 2
    assert r.witness.S == {1, 2}
    assert witness_value(diamond, r.witness.S) == (0, 2)


def test_claw(claw):
    r = scattering_number(claw)
    assert r.value == 2
    assert r.witness.S == {0}
    assert r.witness.components == 3


def test_p4_and_k5e(k5e):
    assert scattering_number(Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])).value == 1
    assert scattering_number(k5e).value == -1


def test_one_decrement_gives_a_separator():
    # P_4 with a pendant on its third vertex
    g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (2, 4)])
    m = build_model(g)
    stave, trace = sweep(m)
    assert stave is None and len(trace.events) == 1
    t1 = trace.events[0].t
    times = depletion_times(m, trace, t1)
    assert times[0] == t1 and times == sorted(times, reverse=True)
    S = extract_witness(m, trace)
    assert S == separator(m, t1)
    assert witness_value(g, S)[0] == oracle_scattering_number(g) == 2


def test_no_decrement(diamond):
    m = build_model(diamond)
    _, trace = sweep(m)
    with pytest.raises(NoDecrementEvent):
        extract_witness(m, trace)


def test_disconnected():
    # K_3 + P_3 + K_1: 1 + 1 + 1 with S empty, or P_3 split by its middle
    g = Graph.from_edges(7, [(0, 1), (0, 2), (1, 2), (3, 4), (4, 5)])
    r = scattering_number(g)
    assert r.value == oracle_scattering_number(g) == 3
    assert witness_value(g, r.witness.S)[0] == 3
    two_edges = Graph.from_edges(4, [(0, 1), (2, 3)])
    assert scattering_number(two_edges).value == 2


def test_single_vertex_and_edge():
    assert scattering_number(Graph.from_edges(1, [])).value is NEG_INF
    assert scattering_number(Graph.from_edges(2, [(0, 1)])).value is NEG_INF
    with pytest.raises(ValueError):
        scattering_number(Graph.from_edges(0, []))


@pytest.mark.parametrize("n", range(1, 8))
def test_matches_oracle_exhaustive(n):
    for g, _ in gen_exhaustive(n):
        r = scattering_number(g)
        assert r.value == oracle_scattering_number(g)
        if r.witness is not None:
            assert witness_value(g, r.witness.S)[0] == r.value


def test_matches_oracle_random():
    rng = random.Random(3)
    for seed in range(300):
        g, _ = gen_random(rng.randint(2, 12), rng.choice([0.5, 1.5, 3.0, 6.0]), seed=seed)
        r = scattering_number(g)
        assert r.value == oracle_scattering_number(g)
        if r.witness is not None:
            assert witness_value(g, r.witness.S)[0] == r.value


def test_large_witness_is_recomputed():
    g, _ = gen_random(20000, 4.0, seed=9, connected=True)
    r = scattering_number(g)
    c, _ = components(g, r.witness.S)
    assert c - len(r.witness.S) == r.value
    assert r.value >= 2


def test_path_cover_named(claw):
    p5 = Graph.from_edges(5, [(i, i + 1) for i in range(4)])
    assert min_path_cover(p5).size == 1
    cover = min_path_cover(claw)
    assert cover.size == 2
    check_cover(claw, cover)
    assert min_path_cover(Graph.from_edges(4, [(0, 1), (2, 3)])).size == 2


@pytest.mark.parametrize("n", range(1, 8))
def test_path_cover_exhaustive(n):
    for g, _ in gen_exhaustive(n):
        cover = min_path_cover(g)
        check_cover(g, cover)
        assert cover.size == oracle_min_path_cover(g)


def test_path_cover_disconnected_random():
    for seed in range(100):
        g, _ = gen_random(11, 1.0, seed=seed)
        cover = min_path_cover(g)
        check_cover(g, cover)
        assert cover.size == oracle_min_path_cover(g)


def test_path_cover_star():
    g, _ = gen_family("star", 2000)
    cover = min_path_cover(g)
    check_cover(g, cover)
    assert cover.size == 1998


def test_witness_json(diamond, k4):
    data = witness_to_json(scattering_number(diamond), diamond)
    assert data == {"scattering_number": 0, "set": ["b", "c"], "components_after_removal": 2}
    assert witness_to_json(scattering_number(k4), k4)["scattering_number"] == "-inf"
