import random

import pytest
from hypothesis import given, settings, strategies as st

from crossmin import fixtures
from crossmin.diagram import isomorphic, validate
from crossmin.generate import random_spatial, unknot
from crossmin.moves import (KINDS, InapplicableMove, Move, apply_move, apply_with_inverse,
                            enumerate_moves, expected_delta, random_move, search_reduce)

import oracles


def check_move(d, m):
    out, inv = apply_with_inverse(d, m)
    assert validate(out).ok, m
    assert oracles.euler_ok(out)
    assert out.crossing_count() - d.crossing_count() == expected_delta(d, m), m
    if inv is not None:
        back = apply_move(out, inv)
        assert isomorphic(back, d), m
    return out, inv


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_every_enumerated_move_is_sound(seed):
    rng = random.Random(seed)
    d = random_spatial(rng, max_crossings=5)
    ms = enumerate_moves(d, increasing=True)
    for m in rng.sample(ms, min(6, len(ms))):
        check_move(d, m)


@pytest.mark.parametrize("kind", KINDS)
def test_each_kind_occurs_and_is_sound(kind):
    rng = random.Random(7)
    seen = 0
    for _ in range(300):
        d = random_spatial(rng, max_crossings=6)
        ms = enumerate_moves(d, increasing=True, kinds=(kind,))
        for m in ms[:3]:
            assert m.kind == kind
            check_move(d, m)
            seen += 1
        if seen >= 10:
            break
    assert seen > 0


def test_inverse_exists_for_increasing_moves():
    rng = random.Random(3)
    for _ in range(50):
        d = random_spatial(rng)
        for m in enumerate_moves(d, kinds=("R1+", "R2+", "R5+", "R3")):
            _, inv = apply_with_inverse(d, m)
            assert inv is not None


def test_kink_unwinds():
    k = fixtures.load("kink1")
    ms = enumerate_moves(k, increasing=False, kinds=("R1-",))
    assert ms
    assert apply_move(k, ms[0]).crossing_count() == 0
    assert search_reduce(k, budget=1000, seed=0).best_count == 0


def test_fig4L_has_a_twist_removal():
    d = fixtures.load("fig4L")
    ms = [m for m in enumerate_moves(d, increasing=False, kinds=("R5-",))
          if expected_delta(d, m) < 0]
    assert ms
    assert apply_move(d, ms[0]).crossing_count() == d.crossing_count() - 1


def test_rigid_vertices_are_never_twisted():
    d = fixtures.load("onecrossing")
    assert all(v.rigid for v in d.vertices)
    assert not [m for m in enumerate_moves(d, rigid_aware=True) if m.kind.startswith("R5")]
    assert [m for m in enumerate_moves(d, rigid_aware=False) if m.kind.startswith("R5")]
    tr = search_reduce(d, budget=300, seed=1, rigid_aware=True)
    assert not any(m.kind.startswith("R5") for m, _ in tr.steps)


def test_search_is_deterministic():
    d = fixtures.load("fig4L")
    a = search_reduce(d, budget=200, seed=5).to_json()
    b = search_reduce(d, budget=200, seed=5).to_json()
    assert a == b


def test_search_never_leaves_valid_diagrams():
    tr = search_reduce(fixtures.load("fig7"), budget=150, seed=2)
    d = fixtures.load("fig7")
    for m, n in tr.steps:
        d = apply_move(d, m)
        assert validate(d).ok and d.crossing_count() == n


def test_bad_moves_are_rejected():
    t = fixtures.load("trefoil3")
    with pytest.raises(InapplicableMove):
        apply_move(t, Move("R7", (0,)))
    with pytest.raises(InapplicableMove):
        apply_move(t, Move("R1-", (10 ** 6,)))


def test_random_move_on_free_loop():
    rng = random.Random(0)
    m = random_move(unknot(), rng, kinds=("R1+",))
    assert m is not None
    check_move(unknot(), m)


def test_move_json():
    m = Move("R2+", (1, 2), (0,))
    assert m.to_json() == {"kind": "R2+", "site": [1, 2], "params": [0]}
