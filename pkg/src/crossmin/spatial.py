"""Vertex smoothings and spatial-graph predicates.

Two unrelated notions of "reduced" live here and are kept apart:
``is_reduced_spatial`` asks that every smoothing be a reduced link, while
``adams_reduced`` asks only that no crossing be nugatory in the graph
diagram itself.
"""

from __future__ import annotations

import itertools
from math import comb
from dataclasses import dataclass, field

from .diagram import (CROSSING, Diagram, DiagramError, delete_edge, edges, splice,
                      strands)
from .resolution import (UnionFind, is_adequate_link, is_alternating_link,
                         is_reduced_link, nugatory_crossings, strand_alternates)


class OddValence(DiagramError):
    def __init__(self, vertex, valence):
        self.vertex = vertex
        super().__init__(f"vertex {vertex} has odd valence {valence}")


class NotSingleVertex(DiagramError):
    pass


class EdgeHasCrossings(DiagramError):
    pass


@dataclass(frozen=True)
class Smoothing:
    matchings: tuple  # ((vertex id, ((dart, dart), ...)), ...)
    link: Diagram

    def to_json(self):
        return {"matchings": {str(v): [list(p) for p in m] for v, m in self.matchings},
                "link": self.link.to_json()}


@dataclass
class Check:
    """Boolean verdict with the smoothing that refuted it, if any."""
    ok: bool
    witness: Smoothing | None = None
    checked: int = 0

    def __bool__(self):
        return self.ok


def noncrossing_matchings(items):
    """All non-crossing perfect matchings of a cyclically ordered sequence.

    The first item is matched to each admissible partner in turn; the
    enumeration order is deterministic.
    """
    items = tuple(items)
    if not items:
        yield ()
        return
    if len(items) % 2:
        return
    first = items[0]
    for j in range(1, len(items), 2):
        for inner in noncrossing_matchings(items[1:j]):
            for outer in noncrossing_matchings(items[j + 1:]):
                yield ((first, items[j]),) + inner + outer


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def require_even(d: Diagram):
    for v in sorted(d.vertices, key=lambda n: n.id):
        if len(v.rotation) % 2:
            raise OddValence(v.id, len(v.rotation))


def smooth(d: Diagram, matchings) -> Diagram:
    through = {}
    for _, pairs in matchings:
        for a, b in pairs:
            through[a], through[b] = b, a
    return splice(d, [v for v, _ in matchings], through)


def enumerate_smoothings(d: Diagram):
    require_even(d)
    verts = sorted(d.vertices, key=lambda n: n.id)
    per_vertex = [list(noncrossing_matchings(v.rotation)) for v in verts]
    for combo in itertools.product(*per_vertex):
        matchings = tuple((v.id, m) for v, m in zip(verts, combo))
        yield Smoothing(matchings, smooth(d, matchings))


def count_smoothings(d: Diagram) -> int:
    out = 1
    for v in d.vertices:
        out *= catalan(len(v.rotation) // 2)
    return out


def _every_smoothing(d: Diagram, predicate) -> Check:
    n = 0
    for s in enumerate_smoothings(d):
        n += 1
        if not predicate(s.link):
            return Check(False, s, n)
    return Check(True, None, n)


def is_reduced_spatial(d: Diagram) -> Check:
    return _every_smoothing(d, is_reduced_link)


def is_alternating_spatial(d: Diagram) -> Check:
    return _every_smoothing(d, is_alternating_link)


def is_adequate_spatial(d: Diagram) -> Check:
    return _every_smoothing(d, is_adequate_link)


def single_vertex(d: Diagram):
    verts = d.vertices
    if len(verts) != 1:
        raise NotSingleVertex(f"expected exactly one vertex, found {len(verts)}")
    return verts[0]


def uncrossed_edge_shortcut(d: Diagram, edge_id) -> Check:
    """Adequacy of ``d`` minus an uncrossed edge.

    A true result certifies that ``d`` itself is adequate, without
    enumerating the larger smoothing set of ``d``.
    """
    single_vertex(d)
    e = edges(d).get(edge_id)
    if e is None:
        raise DiagramError(f"no edge {edge_id}")
    if len(e.darts) != 2:
        raise EdgeHasCrossings(f"edge {edge_id} passes through crossings")
    return is_adequate_spatial(delete_edge(d, edge_id))


def uncrossed_edges(d: Diagram) -> list:
    return [eid for eid, e in sorted(edges(d).items()) if len(e.darts) == 2]


# -- rigid-vertex static checks ----------------------------------------------

def adams_reduced(d: Diagram) -> bool:
    return not nugatory_crossings(d)


@dataclass(frozen=True)
class NeighborhoodComponent:
    vertices: tuple
    uncrossed_edges: tuple
    boundaries: tuple  # each a cyclic tuple of exiting vertex darts


def neighborhood_components(d: Diagram) -> list:
    """Components of a neighbourhood of the vertices and uncrossed edges."""
    uncrossed = {}
    for e in edges(d).values():
        if len(e.darts) == 2:
            a, b = e.darts
            uncrossed[a], uncrossed[b] = b, a
    verts = sorted(n.id for n in d.vertices)
    uf = UnionFind(verts)
    for a, b in uncrossed.items():
        uf.union(d.node_of(a).id, d.node_of(b).id)
    groups = {}
    for v in verts:
        groups.setdefault(uf.find(v), []).append(v)

    def step(x):
        y = d.sigma(x)
        while y in uncrossed:
            y = d.sigma(uncrossed[y])
        return y

    out = []
    for vs in groups.values():
        exiting = [x for v in vs for x in d.nodes[v].rotation if x not in uncrossed]
        seen = set()
        cycles = []
        for x in sorted(exiting):
            if x in seen:
                continue
            cyc = []
            y = x
            while y not in seen:
                seen.add(y)
                cyc.append(y)
                y = step(y)
            cycles.append(tuple(cyc))
        ue = sorted({min(a, b) for a, b in uncrossed.items() if d.node_of(a).id in vs})
        out.append(NeighborhoodComponent(tuple(vs), tuple(ue), tuple(cycles)))
    return out


def adams_alternating(d: Diagram) -> bool:
    for s in strands(d):
        if not strand_alternates(d, s.passages, s.closed):
            return False
    for comp in neighborhood_components(d):
        for cyc in comp.boundaries:
            if len(cyc) < 2:
                continue
            senses = [d.is_over(d.alpha(x)) for x in cyc]
            if any(senses[i] == senses[(i + 1) % len(senses)] for i in range(len(senses))):
                return False
    return True


def has_uncrossed_cycle(d: Diagram) -> bool:
    uf = UnionFind(n.id for n in d.vertices)
    for e in edges(d).values():
        if len(e.darts) == 2:
            a, b = (d.node_of(x).id for x in e.darts)
            if uf.find(a) == uf.find(b):
                return True
            uf.union(a, b)
    return False


def circle_through_crossing_and_edge(d: Diagram) -> list:
    """Pairs (crossing, edge) admitting a circle through just those two.

    Such a circle crosses the diagram at the crossing (between two opposite
    corners) and once along the edge, so the two opposite corner faces must
    be distinct and share an arc of that edge.
    """
    index = d.face_index()
    sides = {}
    for eid, e in edges(d).items():
        ds = e.darts
        for i in range(0, len(ds), 2):
            x, y = ds[i], ds[i + 1]
            pair = frozenset((index[d.sigma_inv(x)], index[d.sigma_inv(y)]))
            sides.setdefault(pair, set()).add(eid)
    out = []
    for n in sorted(d.crossings, key=lambda n: n.id):
        r = n.rotation
        for a, b in ((r[0], r[2]), (r[1], r[3])):
            fa, fb = index[a], index[b]
            if fa == fb:
                continue
            for eid in sorted(sides.get(frozenset((fa, fb)), ())):
                if (n.id, eid) not in out:
                    out.append((n.id, eid))
    return out


@dataclass
class AdamsReport:
    even_valent: bool
    all_rigid: bool
    reduced: bool
    alternating: bool
    no_uncrossed_cycle: bool
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self):
        return {"evenValent": self.even_valent, "allRigid": self.all_rigid,
                "reduced": self.reduced, "alternating": self.alternating,
                "noUncrossedCycle": self.no_uncrossed_cycle, "failures": self.failures}


def adams_hypotheses(d: Diagram) -> AdamsReport:
    r = AdamsReport(
        even_valent=all(len(v.rotation) % 2 == 0 for v in d.vertices),
        all_rigid=all(v.rigid for v in d.vertices),
        reduced=adams_reduced(d),
        alternating=adams_alternating(d),
        no_uncrossed_cycle=not has_uncrossed_cycle(d),
    )
    for name in ("even_valent", "all_rigid", "reduced", "alternating", "no_uncrossed_cycle"):
        if not getattr(r, name):
            r.failures.append(name)
    return r


def is_link(d: Diagram) -> bool:
    return all(n.kind == CROSSING for n in d.nodes.values())
