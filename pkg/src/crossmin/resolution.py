"""Kauffman-state resolutions and link-level predicates.

A-smoothing convention: rotate the overstrand counterclockwise; the two
regions it sweeps are the A-regions, and the A-smoothing opens a channel
between them.  With the overstrand in slots ``{0, 2}`` the A-regions are the
sectors 0 and 2 and the smoothing joins slots ``1-2`` and ``3-0``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import CROSSING, Diagram, DiagramError, strands

A = "A"
A_INV = "AInverse"


class NotALink(DiagramError):
    pass


class UnionFind:
    def __init__(self, items=()):
        self.parent = {x: x for x in items}

    def add(self, x):
        self.parent.setdefault(x, x)

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra
        return ra


@dataclass(frozen=True)
class StateCircles:
    kind: str
    circles: tuple  # tuples of darts; free loops appear as empty tuples
    grey: tuple  # (crossing id, circle index, circle index)

    @property
    def n_circles(self) -> int:
        return len(self.circles)

    def bad_segments(self):
        return [g for g in self.grey if g[1] == g[2]]

    def to_json(self):
        return {"kind": self.kind, "circles": [list(c) for c in self.circles],
                "grey": [list(g) for g in self.grey]}


def smoothing_pairs(node, kind: str):
    """The two dart pairs joined by smoothing a crossing."""
    r = node.rotation
    a_first = node.over == (0, 2)
    if kind == A_INV:
        a_first = not a_first
    if a_first:
        return (r[1], r[2]), (r[3], r[0])
    return (r[0], r[1]), (r[2], r[3])


def require_link(d: Diagram):
    if any(n.kind != CROSSING for n in d.nodes.values()):
        raise NotALink("diagram has graph vertices")


def resolve_all(d: Diagram, kind: str = A) -> StateCircles:
    if kind not in (A, A_INV):
        raise ValueError(f"unknown resolution kind {kind!r}")
    require_link(d)
    uf = UnionFind(d.darts)
    for x, y in d.pairing.items():
        uf.union(x, y)
    pairs = {}
    for n in d.nodes.values():
        pairs[n.id] = smoothing_pairs(n, kind)
        for a, b in pairs[n.id]:
            uf.union(a, b)
    groups = {}
    for x in sorted(d.darts):
        groups.setdefault(uf.find(x), []).append(x)
    circles = sorted(tuple(g) for g in groups.values())
    index = {x: i for i, c in enumerate(circles) for x in c}
    circles = circles + [()] * d.free_loops
    grey = tuple(
        (nid, index[pairs[nid][0][0]], index[pairs[nid][1][0]])
        for nid in sorted(pairs)
    )
    return StateCircles(kind, tuple(circles), grey)


def is_a_adequate(d: Diagram) -> bool:
    return not resolve_all(d, A).bad_segments()


def is_ainv_adequate(d: Diagram) -> bool:
    return not resolve_all(d, A_INV).bad_segments()


def is_adequate_link(d: Diagram) -> bool:
    return is_a_adequate(d) and is_ainv_adequate(d)


def nugatory_crossings(d: Diagram) -> list:
    """Crossings with two opposite corners in one face."""
    index = d.face_index()
    bad = []
    for n in sorted(d.crossings, key=lambda n: n.id):
        r = n.rotation
        if index[r[0]] == index[r[2]] or index[r[1]] == index[r[3]]:
            bad.append(n.id)
    return bad


def is_reduced_link(d: Diagram) -> bool:
    require_link(d)
    return not nugatory_crossings(d)


def strand_alternates(d: Diagram, passages, closed: bool) -> bool:
    seq = [d.is_over(x) for x in passages]
    if closed:
        return all(seq[i] != seq[(i + 1) % len(seq)] for i in range(len(seq))) if len(seq) > 1 else not seq
    return all(seq[i] != seq[i + 1] for i in range(len(seq) - 1))


def is_alternating_link(d: Diagram) -> bool:
    require_link(d)
    return all(strand_alternates(d, s.passages, s.closed) for s in strands(d))
