"""Composing diagrams on a crossingless planar graph, and certifying them.

A replacement either swaps one edge of the planar graph ``P`` or swaps a
vertex together with its incident edges for a fragment diagram.  The
fragment carries attachment vertices standing for the surviving endpoints;
each one is merged into the matching vertex of ``P`` at the position of the
consumed edge-end.

Attachments are keyed by the consumed dart of ``P`` at the surviving end.
The value ``(fragment vertex, outer dart)`` names the fragment sector that
faces the rest of ``P``; the fragment vertex's darts are spliced into the
``P`` rotation starting just after that sector.
"""

from __future__ import annotations

from dataclasses import dataclass

from .certificate import FRAMEWORK, Certificate, Refusal, certify_link
from .diagram import (VERTEX, Diagram, DiagramError, Node, components, digest,
                      disjoint_union, edges, validate)

EDGE_TARGET = "edge"
VERTEX_TARGET = "vertex"


class ArityMismatch(DiagramError):
    pass


class OverlappingTargets(DiagramError):
    pass


class InvalidFragment(DiagramError):
    pass


class PlanarFramework:
    """A crossingless diagram used as the skeleton of a composition."""

    def __init__(self, diagram: Diagram):
        report = validate(diagram)
        if not report:
            raise DiagramError(f"framework is not a valid diagram: {report.violations}")
        if diagram.crossing_count():
            raise DiagramError("framework must have no crossings")
        self.diagram = diagram

    def edge_darts(self, edge_id):
        e = edges(self.diagram).get(edge_id)
        if e is None:
            raise DiagramError(f"framework has no edge {edge_id}")
        return tuple(e.darts)


@dataclass
class Replacement:
    target: tuple  # ("edge", edge id) or ("vertex", vertex id)
    fragment: Diagram
    attach: dict  # framework dart -> (fragment vertex id, outer dart)
    evidence: object = None
    name: str = ""

    def to_json(self):
        return {"target": list(self.target), "fragment": self.fragment.to_json(),
                "attach": [[p, v, x] for p, (v, x) in sorted(self.attach.items())],
                "name": self.name}

    @classmethod
    def from_json(cls, obj, evidence=None):
        attach = {int(p): (int(v), int(x)) for p, v, x in obj["attach"]}
        return cls(tuple(obj["target"]), Diagram.from_json(obj["fragment"]), attach,
                   evidence, obj.get("name", ""))


def consumed_darts(p: PlanarFramework, rep: Replacement):
    """Framework darts removed by ``rep`` and the far-end darts it must attach."""
    d = p.diagram
    kind, tid = rep.target
    if kind == EDGE_TARGET:
        a, b = p.edge_darts(tid)
        return {a, b}, {a, b}
    if kind == VERTEX_TARGET:
        if tid not in d.nodes or d.nodes[tid].kind != VERTEX:
            raise DiagramError(f"framework has no vertex {tid}")
        own = set(d.nodes[tid].rotation)
        far = {d.alpha(x) for x in own}
        if far & own:
            raise ArityMismatch(f"vertex {tid} carries a loop and cannot be replaced")
        return own | far, far
    raise DiagramError(f"unknown target kind {kind!r}")


def _shift(d: Diagram, dart_off: int, node_off: int) -> Diagram:
    nodes = [Node(n.id + node_off, n.kind, tuple(x + dart_off for x in n.rotation),
                  n.over, n.rigid) for n in d.nodes.values()]
    pairing = {a + dart_off: b + dart_off for a, b in d.pairing.items()}
    return Diagram(nodes, pairing, d.free_loops)


def _check_fragment(rep: Replacement, far: set):
    f = rep.fragment
    report = validate(f)
    if not report:
        raise InvalidFragment(f"fragment {rep.name or rep.target} is invalid: {report.violations}")
    if set(rep.attach) != far:
        raise ArityMismatch(
            f"target {rep.target} needs attachments at {sorted(far)}, got {sorted(rep.attach)}")
    used = [v for v, _ in rep.attach.values()]
    if len(set(used)) != len(used):
        raise InvalidFragment("a fragment vertex is attached twice")
    index = f.face_index()
    outer = set()
    for v, x in rep.attach.values():
        n = f.nodes.get(v)
        if n is None or n.kind != VERTEX:
            raise InvalidFragment(f"attachment {v} is not a fragment vertex")
        if x not in n.rotation:
            raise InvalidFragment(f"dart {x} is not at fragment vertex {v}")
        outer.add(index[x])
    if len(outer) > 1:
        raise InvalidFragment("attachment sectors do not share one fragment face")


def compose(p: PlanarFramework, reps) -> Diagram:
    d = p.diagram
    gone, taken_vertices = set(), set()
    for rep in reps:
        used, far = consumed_darts(p, rep)
        if used & gone:
            raise OverlappingTargets(f"target {rep.target} overlaps an earlier replacement")
        gone |= used
        if rep.target[0] == VERTEX_TARGET:
            taken_vertices.add(rep.target[1])
        _check_fragment(rep, far)

    dart_off = max(d.darts, default=-1) + 1
    node_off = max(d.nodes, default=-1) + 1
    nodes, pairing = {}, {}
    splice_in = {}
    free = d.free_loops
    for rep in reps:
        f = _shift(rep.fragment, dart_off, node_off)
        for (pd, (v, x)) in rep.attach.items():
            fv = f.nodes[v + node_off]
            rot = fv.rotation
            k = rot.index(x + dart_off)
            splice_in[pd] = rot[k + 1:] + rot[:k + 1]
        merged = {v + node_off for v, _ in rep.attach.values()}
        for n in f.nodes.values():
            if n.id not in merged:
                nodes[n.id] = n
        pairing.update(f.pairing)
        free += f.free_loops
        dart_off = max(f.darts, default=dart_off) + 1
        node_off = max(f.nodes, default=node_off) + 1

    for n in d.nodes.values():
        if n.id in taken_vertices:
            continue
        rot = []
        for x in n.rotation:
            rot.extend(splice_in.get(x, (x,)))
        nodes[n.id] = Node(n.id, n.kind, tuple(rot), n.over, n.rigid)
    for a, b in d.pairing.items():
        if a not in gone:
            pairing[a] = b

    out = Diagram(nodes.values(), pairing, free)
    report = validate(out)
    if not report:
        raise InvalidFragment(f"composition is not a planar diagram: {report.violations}")
    return out


def link_part(f: Diagram):
    """Components of ``f`` without graph vertices, or None if there are none."""
    parts = [c for c in components(f) if not c.vertices]
    return disjoint_union(*parts) if parts else None


def _fragment_evidence(rep: Replacement):
    """A certificate for the fragment, or None if none is available."""
    f = rep.fragment
    ev = rep.evidence
    n = f.crossing_count()
    if isinstance(ev, Certificate):
        subjects = {digest(f)}
        lp = link_part(f)
        if lp is not None:
            subjects.add(digest(lp))
        if ev.claim == n and ev.subject in subjects:
            return ev
        return None
    if isinstance(ev, Refusal):
        return None
    # adequate-link path: the crossings must all sit in vertex-free components
    lp = link_part(f)
    if lp is None:
        return Certificate(digest(f), 0, FRAMEWORK) if n == 0 else None
    if lp.crossing_count() != n:
        return None
    cert = certify_link(lp)
    return cert if cert.ok else None


def certify_framework(p: PlanarFramework, reps):
    g = compose(p, reps)
    children, missing = [], []
    for i, rep in enumerate(reps):
        cert = _fragment_evidence(rep)
        if cert is None:
            missing.append(rep.name or i)
        else:
            children.append(cert)
    subject = digest(g)
    if missing:
        return Refusal(subject, "fragments lack minimality evidence", {"missing": missing})
    claim = sum(c.claim for c in children)
    if claim != g.crossing_count():
        raise InvalidFragment("evidence claims do not add up to the composed crossing count")
    return Certificate(subject, claim, FRAMEWORK, children)
