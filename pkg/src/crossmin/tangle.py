"""Associated tangles of one-vertex diagrams, doubling, and certification.

A tangle is stored as a diagram whose single vertex stands for the removed
disk around the original vertex: its rotation lists the boundary endpoints,
and joining endpoints by planar arcs inside that disk is exactly a smoothing
of the vertex.
"""

from __future__ import annotations

from dataclasses import dataclass

from .certificate import ONE_VERTEX, Certificate, Refusal
from .diagram import Diagram, DiagramError, digest, disjoint_union, mirror, splice
from .resolution import is_adequate_link
from .spatial import (Check, enumerate_smoothings, is_adequate_spatial, require_even,
                      single_vertex, uncrossed_edge_shortcut, uncrossed_edges)


class InternalInconsistency(RuntimeError):
    pass


@dataclass(frozen=True)
class Tangle:
    diagram: Diagram
    vertex: int
    endpoints: tuple  # darts numbered 1..2n clockwise on the disk boundary

    @property
    def n_strings(self) -> int:
        return len(self.endpoints) // 2

    def crossing_count(self) -> int:
        return self.diagram.crossing_count()

    def endpoint_number(self, dart) -> int:
        return self.endpoints.index(dart) + 1


def associated_tangle(d: Diagram, v=None) -> Tangle:
    vert = single_vertex(d)
    if v is not None and v != vert.id:
        raise DiagramError(f"{v} is not the vertex of this diagram")
    rot = vert.rotation
    k = rot.index(min(rot))
    # against the vertex rotation: clockwise around the disk
    ends = tuple(rot[(k - i) % len(rot)] for i in range(len(rot)))
    return Tangle(d, vert.id, ends)


def mirror_tangle(t: Tangle) -> Tangle:
    """Mirror image; endpoint labels now run counterclockwise."""
    return Tangle(mirror(t.diagram), t.vertex, t.endpoints)


def double_tangle(t: Tangle) -> Diagram:
    """Glue a tangle to its mirror image, endpoint j to endpoint j."""
    star = mirror_tangle(t)
    both = disjoint_union(t.diagram, star.diagram)
    # disjoint_union relabels in sorted order; recover the two boundary vertices
    n1 = len(t.diagram.nodes)
    order1 = sorted(t.diagram.nodes)
    w1 = order1.index(t.vertex)
    w2 = n1 + sorted(star.diagram.nodes).index(star.vertex)
    dm1 = {x: i for i, x in enumerate(sorted(t.diagram.darts))}
    off = len(dm1)
    dm2 = {x: off + i for i, x in enumerate(sorted(star.diagram.darts))}
    through = {}
    for a, b in zip(t.endpoints, star.endpoints):
        through[dm1[a]], through[dm2[b]] = dm2[b], dm1[a]
    return splice(both, [w1, w2], through)


def enumerate_closures(t: Tangle):
    for s in enumerate_smoothings(t.diagram):
        yield s.link


def is_adequate_tangle(t: Tangle) -> Check:
    return is_adequate_spatial(t.diagram)


def certify_one_vertex(d: Diagram, shortcut: bool = True):
    """Certify a one-vertex diagram all of whose smoothings are adequate.

    With ``shortcut`` on, an uncrossed edge whose deletion leaves an
    adequate diagram settles adequacy before the full enumeration.
    """
    single_vertex(d)
    require_even(d)
    subject = digest(d)
    method = None
    if shortcut:
        for eid in uncrossed_edges(d):
            if uncrossed_edge_shortcut(d, eid):
                method = f"uncrossed-edge:{eid}"
                break
    if method is None:
        check = is_adequate_spatial(d)
        if not check:
            return Refusal(subject, "a smoothing of the vertex is not adequate", check.witness)
        method = "all-smoothings"
    doubled = double_tangle(associated_tangle(d))
    if not is_adequate_link(doubled):
        raise InternalInconsistency("adequate tangle produced an inadequate double")
    return Certificate(subject, d.crossing_count(), ONE_VERTEX, method=method)
