"""Random diagram generators for property tests and fixture searches.

Every generator takes an explicit ``random.Random`` so results are
reproducible from a seed.
"""

from __future__ import annotations

import itertools
import random
from collections import deque

from .diagram import CROSSING, VERTEX, Diagram, Node, components, validate
from .moves import InapplicableMove, apply_move, random_move
from .resolution import is_adequate_link
from .spatial import noncrossing_matchings

SHADOW_MOVES = ("R1+", "R2+", "R3")


def set_over(d: Diagram, choice: dict) -> Diagram:
    """Reassign crossing senses; ``choice[c]`` true means over pair (0, 2)."""
    nodes = []
    for n in d.nodes.values():
        if n.kind == CROSSING and n.id in choice:
            n = Node(n.id, n.kind, n.rotation, (0, 2) if choice[n.id] else (1, 3), n.rigid)
        nodes.append(n)
    return d.replace(nodes=nodes)


def flip_random(d: Diagram, rng: random.Random) -> Diagram:
    return set_over(d, {n.id: rng.random() < 0.5 for n in d.crossings})


def over_assignments(d: Diagram):
    """All crossing-sense assignments of ``d``, in a fixed order."""
    ids = sorted(n.id for n in d.crossings)
    for bits in itertools.product((True, False), repeat=len(ids)):
        yield set_over(d, dict(zip(ids, bits)))


def checkerboard(d: Diagram) -> dict:
    """Two-colour the faces of a connected 4-valent diagram, or raise."""
    index = d.face_index()
    n_faces = len(d.faces())
    adj = {i: set() for i in range(n_faces)}
    for x in d.darts:
        y = d.alpha(x)
        a, b = index[d.sigma_inv(x)], index[d.sigma_inv(y)]
        adj[a].add(b)
        adj[b].add(a)
    colour = {}
    for s in range(n_faces):
        if s in colour:
            continue
        colour[s] = 0
        q = deque([s])
        while q:
            f = q.popleft()
            for g in adj[f]:
                if g not in colour:
                    colour[g] = 1 - colour[f]
                    q.append(g)
                elif colour[g] == colour[f]:
                    raise ValueError("faces are not two-colourable")
    return {x: colour[index[x]] for x in d.darts}


def make_alternating(d: Diagram) -> Diagram:
    shade = checkerboard(d)
    return set_over(d, {n.id: shade[n.rotation[0]] == 1 for n in d.crossings})


def _walk(d: Diagram, rng, steps, kinds, max_crossings, rigid_aware=False):
    for _ in range(steps):
        m = random_move(d, rng, kinds, rigid_aware=rigid_aware)
        if m is None:
            break
        try:
            nxt = apply_move(d, m)
        except InapplicableMove:
            continue
        if nxt.crossing_count() <= max_crossings:
            d = nxt
    return d


def is_connected(d: Diagram) -> bool:
    return len(components(d)) == 1


def unknot() -> Diagram:
    return Diagram([], {}, 1)


def random_link_shadow(rng: random.Random, max_crossings: int = 8, steps: int = 30) -> Diagram:
    """A connected link diagram reached from the unknot by increasing moves."""
    while True:
        d = _walk(unknot(), rng, steps, SHADOW_MOVES, max_crossings)
        if d.crossing_count() and is_connected(d):
            return d


def random_alternating_link(rng: random.Random, max_crossings: int = 8) -> Diagram:
    return make_alternating(random_link_shadow(rng, max_crossings))


def petal(matching, rigid=False) -> Diagram:
    """One vertex whose darts are joined in pairs by uncrossed loops."""
    darts = sorted(x for pair in matching for x in pair)
    pairing = {}
    for a, b in matching:
        pairing[a], pairing[b] = b, a
    return Diagram([Node(0, VERTEX, tuple(darts), None, rigid)], pairing)


def random_one_vertex(rng: random.Random, max_crossings: int = 5, max_valence: int = 8,
                      min_valence: int = 2, steps: int = 25, rigid=False) -> Diagram:
    """A single-vertex diagram with random crossings and crossing senses."""
    val = 2 * rng.randint(max(1, min_valence // 2), max_valence // 2)
    ms = list(noncrossing_matchings(range(val)))
    d = petal(rng.choice(ms), rigid)
    kinds = ("R1+", "R2+", "R3", "R5+")
    cap = rng.randint(0, max_crossings)
    while True:
        out = _walk(d, rng, steps, kinds, cap)
        if len(out.vertices) == 1 and len(out.vertices[0].rotation) <= max_valence:
            return flip_random(out, rng)


def adequate_variant(d: Diagram, predicate=is_adequate_link):
    """First crossing-sense assignment passing ``predicate``, or None."""
    for cand in over_assignments(d):
        if predicate(cand):
            return cand
    return None


def insert_uncrossed_loop(d: Diagram, rng: random.Random, v=None) -> tuple:
    """Add an uncrossed loop at a vertex, inside one of its faces.

    Returns the new diagram and the id of the new edge.
    """
    verts = d.vertices if v is None else [d.nodes[v]]
    node = rng.choice(verts)
    index = d.face_index()
    rot = node.rotation
    by_face = {}
    for i, x in enumerate(rot):
        by_face.setdefault(index[x], []).append(i)
    f = rng.choice(sorted(by_face))
    i = rng.choice(by_face[f])
    j = rng.choice(by_face[f])
    p = max(d.darts, default=-1) + 1
    q = p + 1
    # sector x runs from x to sigma(x); a new dart placed right after x sits in it
    new = []
    for k, x in enumerate(rot):
        new.append(x)
        if k == i:
            new.append(p)
        if k == j:
            new.append(q)
    nodes = [n for n in d.nodes.values() if n.id != node.id]
    nodes.append(Node(node.id, node.kind, tuple(new), node.over, node.rigid))
    pairing = dict(d.pairing)
    pairing[p], pairing[q] = q, p
    out = Diagram(nodes, pairing, d.free_loops)
    return out, min(p, q)


def theta(rigid=False) -> Diagram:
    """Two vertices joined by three uncrossed edges."""
    return Diagram([Node(0, VERTEX, (0, 1, 2), None, rigid), Node(1, VERTEX, (5, 4, 3), None, rigid)],
                   {0: 3, 3: 0, 1: 4, 4: 1, 2: 5, 5: 2})


def random_spatial(rng: random.Random, max_crossings: int = 6, steps: int = 30) -> Diagram:
    """A random diagram drawn from links, petals and theta-like graphs."""
    seeds = [unknot, theta,
             lambda: petal(rng.choice(list(noncrossing_matchings(range(2 * rng.randint(1, 3)))))),
             lambda: Diagram([Node(0, VERTEX, (0, 1)), Node(1, VERTEX, (3, 2))],
                             {0: 2, 2: 0, 1: 3, 3: 1})]
    d = rng.choice(seeds)()
    kinds = ("R1+", "R2+", "R3", "R5+", "R4")
    d = _walk(d, rng, rng.randint(0, steps), kinds, max_crossings)
    d = flip_random(d, rng)
    assert validate(d).ok
    return d
