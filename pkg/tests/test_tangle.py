import random

import pytest
from hypothesis import given, settings, strategies as st

from crossmin import fixtures
from crossmin.certificate import Certificate, Refusal
from crossmin.diagram import delete_edge, isomorphic, validate
from crossmin.generate import adequate_variant, insert_uncrossed_loop, petal, random_one_vertex
from crossmin.resolution import is_adequate_link
from crossmin.spatial import (NotSingleVertex, is_adequate_spatial,
                              uncrossed_edge_shortcut)
from crossmin.tangle import (associated_tangle, certify_one_vertex, double_tangle,
                             enumerate_closures, is_adequate_tangle, mirror_tangle)

import oracles


def tangle_sample(seed, max_crossings=5, adequate_bias=True):
    rng = random.Random(seed)
    d = random_one_vertex(rng, max_crossings=max_crossings, max_valence=6, min_valence=2)
    if adequate_bias and rng.random() < 0.5:
        d = adequate_variant(d, lambda g: bool(is_adequate_spatial(g))) or d
    return associated_tangle(d)


@pytest.mark.parametrize("n,expected", [(1, 1), (2, 2), (3, 5)])
def test_closure_counts(n, expected):
    t = associated_tangle(petal([(2 * i, 2 * i + 1) for i in range(n)]))
    assert t.n_strings == n
    assert len(list(enumerate_closures(t))) == expected


def test_endpoints_run_clockwise():
    d = fixtures.load("fig4L")
    t = associated_tangle(d)
    rot = d.vertices[0].rotation
    assert sorted(t.endpoints) == sorted(rot)
    assert t.endpoint_number(min(rot)) == 1
    k = rot.index(t.endpoints[0])
    assert t.endpoints[1] == rot[k - 1]


def test_mirror_tangle_keeps_endpoints():
    t = associated_tangle(fixtures.load("fig7"))
    m = mirror_tangle(t)
    assert m.endpoints == t.endpoints
    assert isomorphic(mirror_tangle(m).diagram, t.diagram)


@pytest.mark.parametrize("name", ["fig5G", "fig5G-prime", "fig7", "fig4L"])
def test_double_of_fixture(name):
    t = associated_tangle(fixtures.load(name))
    link = double_tangle(t)
    assert validate(link).ok
    assert link.crossing_count() == 2 * t.crossing_count()
    assert oracles.euler_ok(link)


def test_fig5G_double_has_eight_crossings():
    t = associated_tangle(fixtures.load("fig5G"))
    assert double_tangle(t).crossing_count() == 8


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_adequate_tangle_has_adequate_double(seed):
    t = tangle_sample(seed)
    link = double_tangle(t)
    assert link.crossing_count() == 2 * t.crossing_count()
    if is_adequate_tangle(t):
        assert is_adequate_link(link)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_uncrossed_edge_deletion_implication(seed):
    rng = random.Random(seed)
    d = random_one_vertex(rng, max_crossings=6, max_valence=6, min_valence=2)
    if rng.random() < 0.5:
        d = adequate_variant(d, lambda g: bool(is_adequate_spatial(g))) or d
    g, eid = insert_uncrossed_loop(d, rng)
    assert validate(g).ok and len(g.vertices[0].rotation) <= 8
    if uncrossed_edge_shortcut(g, eid):
        assert is_adequate_spatial(g)
    assert bool(uncrossed_edge_shortcut(g, eid)) == bool(is_adequate_spatial(delete_edge(g, eid)))


def test_certify_fig7_via_shortcut():
    res = certify_one_vertex(fixtures.load("fig7"))
    assert isinstance(res, Certificate)
    assert res.method.startswith("uncrossed-edge:")
    assert res.claim == fixtures.load("fig7").crossing_count()
    full = certify_one_vertex(fixtures.load("fig7"), shortcut=False)
    assert full.claim == res.claim and full.method == "all-smoothings"


def test_certify_refuses_fig4L_with_witness():
    res = certify_one_vertex(fixtures.load("fig4L"))
    assert isinstance(res, Refusal)


def test_certify_needs_a_single_vertex():
    with pytest.raises(NotSingleVertex):
        certify_one_vertex(fixtures.load("theta"))
