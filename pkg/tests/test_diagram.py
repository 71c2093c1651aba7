import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from crossmin import fixtures
from crossmin.diagram import (VERTEX, Diagram, Node, canonical_form,
                              components, crossing_count, delete_edge, diagram_from_pd, digest,
                              disjoint_union, edges, faces, isomorphic, mirror, splice, strands,
                              validate)
from crossmin.generate import random_spatial

import oracles

ALL = fixtures.names()
SINGLE = [n for n in ALL if "diagram" in fixtures.load_raw(n)]


def relabel(d: Diagram, rng: random.Random) -> Diagram:
    darts = sorted(d.darts)
    new = rng.sample(range(10 * len(darts) + 5), len(darts))
    dm = dict(zip(darts, new))
    ids = rng.sample(range(100), len(d.nodes))
    nm = dict(zip(sorted(d.nodes), ids))
    nodes = []
    for n in d.nodes.values():
        k = rng.randrange(len(n.rotation)) if n.kind == VERTEX else 2 * rng.randrange(2)
        rot = n.rotation[k:] + n.rotation[:k]
        nodes.append(Node(nm[n.id], n.kind, tuple(dm[x] for x in rot), n.over, n.rigid))
    return Diagram(nodes, {dm[a]: dm[b] for a, b in d.pairing.items()}, d.free_loops)


@pytest.mark.parametrize("name", SINGLE)
def test_fixtures_validate_and_satisfy_euler(name):
    d = fixtures.load(name)
    assert validate(d).ok
    assert oracles.euler_ok(d)
    assert len(faces(d)) == oracles.face_count(d)


def test_unknot_is_valid_and_empty():
    d = fixtures.load("unknot0")
    assert validate(d).ok and crossing_count(d) == 0 and d.free_loops == 1


def test_face_counts():
    assert len(faces(fixtures.load("hopf2"))) == 4
    assert len(faces(fixtures.load("trefoil3"))) == 5
    assert len(faces(fixtures.load("theta"))) == 3


def test_faces_partition_the_sides_of_arcs():
    d = fixtures.load("fig8-4")
    corners = [x for f in faces(d) for x in f.corners]
    assert sorted(corners) == sorted(d.darts)
    assert sum(f.degree for f in faces(d)) == 2 * (len(d.pairing) // 2)


def test_broken_pairing_is_reported():
    d = fixtures.load("trefoil3")
    p = dict(d.pairing)
    a, b = sorted(p)[:2]
    p[a] = b  # no longer an involution
    rep = validate(Diagram(d.nodes.values(), p, 0))
    assert not rep.ok
    assert any("involution" in v for v in rep.violations)


def test_nonplanar_rotation_is_reported():
    # a single crossing whose arcs join opposite slots cannot be drawn on the sphere
    d = Diagram.from_json({"nodes": [{"id": 0, "kind": "crossing", "rotation": [0, 1, 2, 3],
                                      "over": [0, 2]}],
                           "pairing": [[0, 2], [1, 3]], "freeLoops": 0})
    rep = validate(d)
    assert not rep.ok


def test_crossing_with_wrong_arity_is_reported():
    d = Diagram.from_json({"nodes": [{"id": 0, "kind": "crossing", "rotation": [0, 1],
                                      "over": [0, 2]}],
                           "pairing": [[0, 1]], "freeLoops": 0})
    assert not validate(d).ok


def test_crossing_counts():
    assert crossing_count(fixtures.load("unknot0")) == 0
    assert crossing_count(fixtures.load("trefoil3")) == 3
    assert crossing_count(fixtures.load("kinoshita5")) == 5


def test_mirror_is_an_involution_and_keeps_crossings():
    for name in ("trefoil3", "kink1", "fig7", "fig10"):
        d = fixtures.load(name)
        m = mirror(d)
        assert validate(m).ok
        assert m.crossing_count() == d.crossing_count()
        assert isomorphic(mirror(m), d)
    assert isomorphic(mirror(fixtures.load("unknot0")), fixtures.load("unknot0"))


def test_mirror_of_trefoil_is_a_different_diagram():
    t = fixtures.load("trefoil3")
    assert not isomorphic(mirror(t), t)


def test_mirror_of_positive_kink_is_the_negative_kink():
    from crossmin.resolution import is_a_adequate, is_ainv_adequate
    m = mirror(fixtures.load("kink1"))
    assert is_ainv_adequate(m) and not is_a_adequate(m)


def test_components():
    u, t = fixtures.load("unknot0"), fixtures.load("trefoil3")
    assert len(components(disjoint_union(u, t))) == 2
    assert len(components(t)) == 1
    assert len(components(fixtures.load("hopf2"))) == 1


def test_json_round_trip_is_isomorphic():
    for name in SINGLE:
        d = fixtures.load(name)
        again = Diagram.from_json(json.loads(json.dumps(d.to_json())))
        assert isomorphic(d, again)
        assert digest(d) == digest(again)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_canonical_form_ignores_labels(seed):
    rng = random.Random(seed)
    d = random_spatial(rng)
    e = relabel(d, rng)
    assert validate(e).ok
    assert canonical_form(d) == canonical_form(e)
    assert digest(d) == digest(e)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_random_diagrams_satisfy_euler(seed):
    d = random_spatial(random.Random(seed))
    assert oracles.euler_ok(d)
    assert len(faces(d)) == oracles.face_count(d)


def test_canonical_form_separates_mirror_crossings():
    k = fixtures.load("kink1")
    assert canonical_form(k) != canonical_form(mirror(k))


def test_pd_codes_build_the_expected_diagrams():
    d = diagram_from_pd([(1, 5, 2, 4), (3, 1, 4, 6), (5, 3, 6, 2)])
    assert isomorphic(d, fixtures.load("trefoil3"))
    assert len(strands(d)) == 1 and strands(d)[0].closed


def test_splice_by_a_smoothing_removes_a_crossing():
    from crossmin.resolution import A, smoothing_pairs
    t = fixtures.load("trefoil3")
    c = t.nodes[min(t.nodes)]
    through = {}
    for a, b in smoothing_pairs(c, A):
        through[a], through[b] = b, a
    out = splice(t, [c.id], through)
    assert validate(out).ok and out.crossing_count() == 2
    assert oracles.euler_ok(out)


def test_delete_uncrossed_and_crossed_edges():
    th = fixtures.load("theta")
    e0 = min(edges(th))
    out = delete_edge(th, e0)
    assert validate(out).ok and len(edges(out)) == 2
    g = fixtures.load("kinoshita5")
    for eid in edges(g):
        h = delete_edge(g, eid)
        assert validate(h).ok
        assert h.crossing_count() <= g.crossing_count()


def test_strand_edges_of_theta():
    es = edges(fixtures.load("theta"))
    assert len(es) == 3
    assert all(len(e.darts) == 2 for e in es.values())
