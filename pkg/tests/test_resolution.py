import random

import pytest
from hypothesis import given, settings, strategies as st

from crossmin import fixtures
from crossmin.diagram import disjoint_union, mirror
from crossmin.generate import random_alternating_link, set_over, unknot
from crossmin.resolution import (A, A_INV, NotALink, is_a_adequate, is_adequate_link,
                                 is_ainv_adequate, is_alternating_link, is_reduced_link,
                                 nugatory_crossings, resolve_all, smoothing_pairs)

import oracles

LINKS = ["unknot0", "kink1", "hopf2", "trefoil3", "fig8-4"]


@pytest.mark.parametrize("name", LINKS)
@pytest.mark.parametrize("kind", [A, A_INV])
def test_circle_counts_match_tracer(name, kind):
    d = fixtures.load(name)
    sc = resolve_all(d, kind)
    assert sc.n_circles == oracles.count_circles(d, kind)
    bad = sorted(g[0] for g in sc.bad_segments())
    assert bad == oracles.grey_on_one_circle(d, kind)


def test_smoothing_pairs_agree_with_sweep_rule():
    for name in ("trefoil3", "fig8-4", "kink1"):
        for n in fixtures.load(name).crossings:
            for kind in (A, A_INV):
                got = {}
                for a, b in smoothing_pairs(n, kind):
                    got[a], got[b] = b, a
                assert got == oracles.a_pairs(n.rotation, n.over, kind)


def test_known_circle_counts():
    assert resolve_all(fixtures.load("trefoil3"), A).n_circles in (2, 3)
    t = fixtures.load("trefoil3")
    assert {resolve_all(t, A).n_circles, resolve_all(t, A_INV).n_circles} == {2, 3}
    h = fixtures.load("hopf2")
    assert resolve_all(h, A).n_circles + resolve_all(h, A_INV).n_circles == 4
    assert resolve_all(fixtures.load("unknot0"), A).n_circles == 1


def test_kink_is_one_sided():
    k = fixtures.load("kink1")
    assert is_a_adequate(k) and not is_ainv_adequate(k)
    assert not is_adequate_link(k)
    assert not is_reduced_link(k)
    assert nugatory_crossings(k) == [k.crossings[0].id]


@pytest.mark.parametrize("name", ["trefoil3", "fig8-4", "hopf2"])
def test_tait_fixtures(name):
    d = fixtures.load(name)
    assert is_reduced_link(d) and is_alternating_link(d) and is_adequate_link(d)


def test_graph_vertices_are_rejected():
    with pytest.raises(NotALink):
        resolve_all(fixtures.load("theta"))
    with pytest.raises(ValueError):
        resolve_all(fixtures.load("trefoil3"), "B")


def test_mirror_swaps_resolutions():
    for name in LINKS:
        d = fixtures.load(name)
        assert resolve_all(d, A).n_circles == resolve_all(mirror(d), A_INV).n_circles


def test_free_loops_count_as_circles():
    d = disjoint_union(fixtures.load("trefoil3"), unknot())
    assert resolve_all(d, A).n_circles == resolve_all(fixtures.load("trefoil3"), A).n_circles + 1


def test_non_alternating_pd():
    # trefoil with one crossing switched: still reduced but not alternating
    t = fixtures.load("trefoil3")
    c = t.crossings[0]
    d = set_over(t, {c.id: c.over != (0, 2)})
    assert not is_alternating_link(d)
    assert is_reduced_link(d) and not is_adequate_link(d)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_state_sum_identity_on_random_alternating(seed):
    d = random_alternating_link(random.Random(seed), max_crossings=8)
    assert is_alternating_link(d)
    c = d.crossing_count()
    if is_reduced_link(d):
        total = oracles.count_circles(d, A) + oracles.count_circles(d, A_INV)
        assert total == c + 2 * (oracles.graph_components(d))
        assert resolve_all(d, A).n_circles + resolve_all(d, A_INV).n_circles == total
        assert is_adequate_link(d)
