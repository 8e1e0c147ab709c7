import itertools
import random

import pytest

from intervalham.generators import gen_exhaustive, gen_family, gen_random, largest_component
from intervalham.graph import Graph
from intervalham.hamiltonicity import (
    CertificateFormatError,
    HamiltonCertificate,
    Infeasible,
    InvalidPair,
    Unknown,
    certificate_from_json,
    certificate_to_json,
    classify,
    hamilton_cycle,
    hamilton_path,
    hamilton_path_avoiding,
    hamilton_path_between,
    path_cover_certificate,
    verify_certificate,
)
from intervalham.oracle import oracle_hamilton, oracle_k_hamilton_connected
from intervalham.scattering import scattering_number


def test_classify_named(diamond, k5e, p3, k4):
    c = classify(diamond)
    assert (c.scattering_number, c.hamiltonian, c.hamilton_connected) == (0, True, False)
    c = classify(k5e)
    assert (c.scattering_number, c.hamilton_connected, c.k_max) == (-1, True, 0)
    c = classify(p3)
    assert (c.scattering_number, c.traceable, c.hamiltonian) == (1, True, False)
    c = classify(k4)
    assert c.complete and c.k_max == 2 and c.hamiltonian


def test_classify_small_complete():
    k1 = classify(Graph.from_edges(1, []))
    assert k1.k_max is None and not k1.hamiltonian
    k2 = classify(Graph.from_edges(2, [(0, 1)]))
    assert k2.k_max == 0 and k2.traceable and not k2.hamiltonian


def test_hamilton_path(p3, diamond, claw):
    assert hamilton_path(p3).vertices == (0, 1, 2)
    cert = hamilton_path(diamond)
    # a b c d and a c b d both qualify
    assert (cert.vertices[0], cert.vertices[-1]) == (0, 3)
    assert verify_certificate(diamond, cert) == []
    assert hamilton_path(claw) is None


def test_hamilton_cycle(diamond, p3):
    cert = hamilton_cycle(diamond)
    assert cert.kind == "cycle"
    assert verify_certificate(diamond, cert) == []
    k3 = Graph.from_edges(3, [(0, 1), (0, 2), (1, 2)])
    assert sorted(hamilton_cycle(k3).vertices) == [0, 1, 2]
    assert hamilton_cycle(p3) is None


def test_between_named(k5e, claw, diamond):
    cert = hamilton_path_between(k5e, 0, 1)
    assert len(cert.vertices) == 5
    assert verify_certificate(k5e, cert) == []
    assert hamilton_path_between(claw, 1, 2) is None
    unknown = hamilton_path_between(diamond, 1, 2)
    assert isinstance(unknown, Unknown)
    assert str(unknown) == "unknown (scattering number 0)"


def test_between_invalid(diamond):
    with pytest.raises(InvalidPair):
        hamilton_path_between(diamond, 1, 1)
    with pytest.raises(InvalidPair):
        hamilton_path_between(diamond, 0, 9)


def test_avoiding(k5e):
    k5 = Graph.from_edges(5, list(itertools.combinations(range(5), 2)))
    cert = hamilton_path_avoiding(k5, {2}, 0, 4)
    assert len(cert.vertices) == 4 and cert.removed == {2}
    assert verify_certificate(k5, cert) == []
    # K_5 - e minus a common vertex is K_4 - e, whose scattering number is 0
    with pytest.raises(Infeasible):
        hamilton_path_avoiding(k5e, {2}, 0, 1)
    with pytest.raises(InvalidPair):
        hamilton_path_avoiding(k5e, {2}, 2, 1)


def test_avoiding_on_one_connected_instances():
    rng = random.Random(4)
    done = 0
    for seed in range(400):
        g, _ = gen_random(rng.randint(6, 10), 10.0, seed=seed)
        g, _ = largest_component(g)
        if g.n < 4 or g.is_complete() or classify(g).k_max is None or classify(g).k_max < 1:
            continue
        assert oracle_k_hamilton_connected(g, 1)
        S = {rng.randrange(g.n)}
        v, w = rng.sample([x for x in range(g.n) if x not in S], 2)
        cert = hamilton_path_avoiding(g, S, v, w)
        assert verify_certificate(g, cert) == []
        done += 1
    assert done > 10


@pytest.mark.parametrize("n", range(3, 8))
def test_classify_matches_oracle(n):
    for g, _ in gen_exhaustive(n):
        c = classify(g)
        assert c.traceable == oracle_hamilton(g, "path")
        assert c.hamiltonian == oracle_hamilton(g, "cycle")
        assert c.hamilton_connected == oracle_k_hamilton_connected(g, 0)


@pytest.mark.parametrize("n", range(3, 8))
def test_between_all_pairs(n):
    for g, _ in gen_exhaustive(n):
        r = scattering_number(g)
        for v, w in itertools.permutations(range(n), 2):
            out = hamilton_path_between(g, v, w, r)
            if isinstance(out, Unknown):
                assert r.value in (0, 1)
            elif out is None:
                assert not oracle_hamilton(g, "between", v, w)
            else:
                assert verify_certificate(g, out) == []


def test_between_large():
    g, _ = gen_family("nested", 300)
    cert = hamilton_path_between(g, 5, 17)
    assert verify_certificate(g, cert) == []
    g, _ = gen_random(3000, 40.0, seed=2, connected=True)
    r = scattering_number(g)
    if r.value <= -1:
        cert = hamilton_path_between(g, 0, g.n - 1, r)
        assert verify_certificate(g, cert) == []


def test_path_cover_certificate(claw):
    cert = path_cover_certificate(claw)
    assert cert.kind == "path-cover" and len(cert.vertices) == 2
    assert verify_certificate(claw, cert) == []


def test_verify_catches_tampering(p3, diamond):
    assert verify_certificate(p3, HamiltonCertificate("path", (0, 1, 2))) == []
    assert verify_certificate(p3, HamiltonCertificate("path", (0, 2, 1))) == ["path: a-c is not an edge"]
    assert verify_certificate(diamond, HamiltonCertificate("cycle", (0, 1, 3, 2))) == []
    bad = verify_certificate(diamond, HamiltonCertificate("path-between", (0, 1, 3), (0, 3)))
    assert bad == ["missing vertices: c"]
    bad = verify_certificate(diamond, HamiltonCertificate("path-between", (0, 1, 2, 3), (1, 3)))
    assert "endpoints do not match" in bad[0]
    assert verify_certificate(diamond, HamiltonCertificate("path", (0, 1, 0, 2, 3)))
    assert verify_certificate(p3, HamiltonCertificate("tour", (0, 1, 2))) == ["unknown kind 'tour'"]


def test_json_round_trip(diamond, k5e):
    for g, cert in [
        (diamond, hamilton_cycle(diamond)),
        (k5e, hamilton_path_between(k5e, 0, 1)),
        (diamond, path_cover_certificate(diamond)),
    ]:
        data = certificate_to_json(cert, g)
        assert certificate_from_json(data, g) == cert
    data = certificate_to_json(hamilton_cycle(diamond), diamond)
    assert data == {"kind": "cycle", "vertices": ["a", "b", "d", "c"]}


def test_json_errors(diamond):
    with pytest.raises(CertificateFormatError, match="unknown vertex label"):
        certificate_from_json({"kind": "path", "vertices": ["a", "q"]}, diamond)
    with pytest.raises(CertificateFormatError):
        certificate_from_json({"vertices": ["a"]}, diamond)
    with pytest.raises(CertificateFormatError):
        certificate_from_json({"kind": "walk", "vertices": []}, diamond)
