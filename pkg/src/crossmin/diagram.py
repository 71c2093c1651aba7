"""Combinatorial diagrams of links and spatial graphs on the 2-sphere.

A diagram is a rotation system: every node (a crossing or a graph vertex)
lists its darts counterclockwise, and an involution ``pairing`` glues darts
into arcs.  At a crossing the slots ``0<->2`` and ``1<->3`` are the two
strands passing through; ``over`` names the slot pair of the overstrand.

Sector convention: the dart ``x`` labels the corner swept counterclockwise
from ``x`` to ``sigma(x)``.  Faces are the orbits of ``x -> alpha(sigma(x))``.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from typing import Iterable

CROSSING = "crossing"
VERTEX = "vertex"


class DiagramError(ValueError):
    """Base class for all diagram errors."""


class InvalidDiagram(DiagramError):
    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations) or "invalid diagram")


@dataclass(frozen=True)
class Node:
    id: int
    kind: str
    rotation: tuple
    over: tuple | None = None
    rigid: bool = False

    @property
    def is_crossing(self) -> bool:
        return self.kind == CROSSING


@dataclass(frozen=True)
class Face:
    id: int
    corners: tuple  # sector labels, in walk order

    @property
    def degree(self) -> int:
        return len(self.corners)


@dataclass
class ValidationReport:
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok


class Diagram:
    """Immutable rotation-system diagram.

    Construction does not validate; call :func:`validate` (or
    :meth:`check`) before relying on planarity.
    """

    __slots__ = ("nodes", "pairing", "free_loops", "_where", "_faces", "_key")

    def __init__(self, nodes: Iterable[Node], pairing: dict, free_loops: int = 0):
        self.nodes = {n.id: n for n in nodes}
        self.pairing = dict(pairing)
        self.free_loops = free_loops
        where = {}
        for n in self.nodes.values():
            for i, x in enumerate(n.rotation):
                where.setdefault(x, (n.id, i))
        self._where = where
        self._faces = None
        self._key = None

    # -- basic maps ---------------------------------------------------------
    @property
    def darts(self):
        return self._where.keys()

    def node_of(self, x) -> Node:
        return self.nodes[self._where[x][0]]

    def slot(self, x) -> int:
        return self._where[x][1]

    def alpha(self, x):
        return self.pairing[x]

    def sigma(self, x, k: int = 1):
        nid, i = self._where[x]
        rot = self.nodes[nid].rotation
        return rot[(i + k) % len(rot)]

    def sigma_inv(self, x):
        return self.sigma(x, -1)

    def through(self, x):
        """Opposite dart at a crossing (the strand continuation)."""
        return self.sigma(x, 2)

    def at_crossing(self, x) -> bool:
        return self.node_of(x).kind == CROSSING

    def is_over(self, x) -> bool:
        n = self.node_of(x)
        return n.kind == CROSSING and self._where[x][1] in n.over

    @property
    def crossings(self):
        return [n for n in self.nodes.values() if n.kind == CROSSING]

    @property
    def vertices(self):
        return [n for n in self.nodes.values() if n.kind == VERTEX]

    def crossing_count(self) -> int:
        return sum(1 for n in self.nodes.values() if n.kind == CROSSING)

    # -- faces --------------------------------------------------------------
    def faces(self) -> list:
        if self._faces is None:
            seen = set()
            out = []
            for start in sorted(self._where):
                if start in seen:
                    continue
                corners = []
                x = start
                while x not in seen:
                    seen.add(x)
                    corners.append(x)
                    x = self.pairing[self.sigma(x)]
                out.append(Face(len(out), tuple(corners)))
            self._faces = out
        return self._faces

    def face_index(self) -> dict:
        """Map sector label -> face id."""
        return {x: f.id for f in self.faces() for x in f.corners}

    # -- misc ---------------------------------------------------------------
    def check(self) -> "Diagram":
        report = validate(self)
        if not report.ok:
            raise InvalidDiagram(report.violations)
        return self

    def replace(self, nodes=None, pairing=None, free_loops=None) -> "Diagram":
        return Diagram(
            self.nodes.values() if nodes is None else nodes,
            self.pairing if pairing is None else pairing,
            self.free_loops if free_loops is None else free_loops,
        )

    def next_ids(self):
        """Fresh (node id, dart id) counters."""
        nid = max(self.nodes, default=-1) + 1
        did = max(self._where, default=-1) + 1
        return nid, did

    def __eq__(self, other):
        return isinstance(other, Diagram) and canonical_form(self) == canonical_form(other)

    def __hash__(self):
        return hash(canonical_form(self))

    def __repr__(self):
        return (f"Diagram({len(self.crossings)} crossings, {len(self.vertices)} vertices, "
                f"free_loops={self.free_loops})")

    # -- JSON ---------------------------------------------------------------
    def to_json(self) -> dict:
        nodes = []
        for n in sorted(self.nodes.values(), key=lambda n: n.id):
            item = {"id": n.id, "kind": n.kind, "rotation": list(n.rotation)}
            if n.kind == CROSSING:
                item["over"] = list(n.over)
            elif n.rigid:
                item["rigid"] = True
            nodes.append(item)
        pairs = sorted((a, b) for a, b in self.pairing.items() if a < b)
        return {"nodes": nodes, "pairing": [list(p) for p in pairs], "freeLoops": self.free_loops}

    @classmethod
    def from_json(cls, obj: dict) -> "Diagram":
        try:
            nodes = []
            for item in obj.get("nodes", []):
                kind = item["kind"]
                if kind not in (CROSSING, VERTEX):
                    raise DiagramError(f"node {item.get('id')}: unknown kind {kind!r}")
                over = tuple(sorted(item["over"])) if kind == CROSSING else None
                nodes.append(Node(int(item["id"]), kind, tuple(int(x) for x in item["rotation"]),
                                  over, bool(item.get("rigid", False))))
            pairing = {}
            for a, b in obj.get("pairing", []):
                if a in pairing or b in pairing:
                    raise DiagramError(f"dart paired twice in [{a}, {b}]")
                pairing[int(a)] = int(b)
                pairing[int(b)] = int(a)
            free = int(obj.get("freeLoops", 0))
        except (KeyError, TypeError) as exc:
            raise DiagramError(f"malformed diagram JSON: {exc}") from exc
        return cls(nodes, pairing, free)


# ---------------------------------------------------------------------------
# validation and structure
# ---------------------------------------------------------------------------

def _components_of_darts(d: Diagram):
    """Connected components of the underlying map, as lists of node ids."""
    parent = {nid: nid for nid in d.nodes}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for x, y in d.pairing.items():
        if x in d._where and y in d._where:
            a, b = find(d._where[x][0]), find(d._where[y][0])
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups = {}
    for nid in sorted(d.nodes):
        groups.setdefault(find(nid), []).append(nid)
    return list(groups.values())


def validate(d: Diagram) -> ValidationReport:
    v = []
    seen = {}
    for n in d.nodes.values():
        if n.kind == CROSSING:
            if len(n.rotation) != 4:
                v.append(f"crossing {n.id} has rotation length {len(n.rotation)}, expected 4")
            if n.over not in ((0, 2), (1, 3)):
                v.append(f"crossing {n.id} has over pair {n.over}, expected [0,2] or [1,3]")
        elif n.kind == VERTEX:
            if len(n.rotation) < 1:
                v.append(f"vertex {n.id} has empty rotation")
        else:
            v.append(f"node {n.id} has unknown kind {n.kind!r}")
        for x in n.rotation:
            if not isinstance(x, int) or x < 0:
                v.append(f"node {n.id}: dart id {x!r} is not a non-negative integer")
            if x in seen:
                v.append(f"dart {x} appears in node {seen[x]} and node {n.id}")
            seen[x] = n.id
    for x in seen:
        if x not in d.pairing:
            v.append(f"dart {x} is unpaired")
    involutive = True
    for x, y in d.pairing.items():
        if x not in seen:
            v.append(f"pairing mentions unknown dart {x}")
            involutive = False
        if x == y:
            v.append(f"pairing not fixed-point-free at dart {x}")
            involutive = False
        elif d.pairing.get(y) != x:
            v.append(f"pairing not involution at dart {x}")
            involutive = False
    if not isinstance(d.free_loops, int) or d.free_loops < 0:
        v.append(f"freeLoops must be a non-negative integer, got {d.free_loops!r}")
    if not v and involutive:
        index = d.face_index()
        for comp in _components_of_darts(d):
            darts = [x for nid in comp for x in d.nodes[nid].rotation]
            faces = {index[x] for x in darts}
            chi = len(comp) - len(darts) // 2 + len(faces)
            if chi != 2:
                v.append(f"component containing node {comp[0]} is not planar "
                         f"(V-E+F = {chi})")
    return ValidationReport(v)


def faces(d: Diagram) -> list:
    d.check()
    return d.faces()


def crossing_count(d: Diagram) -> int:
    return d.crossing_count()


def mirror(d: Diagram) -> Diagram:
    """Reflect the picture: rotations reverse, the same darts stay over.

    Reversal sends slot ``k`` to ``3 - k``, so the over pair swaps parity.
    """
    nodes = []
    for n in d.nodes.values():
        rot = tuple(reversed(n.rotation))
        over = None
        if n.kind == CROSSING:
            over = (1, 3) if n.over == (0, 2) else (0, 2)
        nodes.append(Node(n.id, n.kind, rot, over, n.rigid))
    return Diagram(nodes, d.pairing, d.free_loops)


def components(d: Diagram) -> list:
    out = []
    for comp in _components_of_darts(d):
        nodes = [d.nodes[nid] for nid in comp]
        darts = {x for n in nodes for x in n.rotation}
        out.append(Diagram(nodes, {x: d.pairing[x] for x in darts}, 0))
    out.extend(Diagram([], {}, 1) for _ in range(d.free_loops))
    return out


def disjoint_union(*ds: Diagram) -> Diagram:
    """Relabel and combine diagrams side by side."""
    nodes, pairing, free = [], {}, 0
    nid = did = 0
    for d in ds:
        dmap = {x: did + i for i, x in enumerate(sorted(d.darts))}
        did += len(dmap)
        for n in sorted(d.nodes.values(), key=lambda n: n.id):
            nodes.append(Node(nid, n.kind, tuple(dmap[x] for x in n.rotation), n.over, n.rigid))
            nid += 1
        pairing.update({dmap[a]: dmap[b] for a, b in d.pairing.items()})
        free += d.free_loops
    return Diagram(nodes, pairing, free)


# ---------------------------------------------------------------------------
# strands and edges
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Strand:
    """Maximal path through crossings.

    ``darts`` lists the darts in travel order: the starting vertex dart (for
    open strands), then each crossing passage as (entry, exit), then the end
    vertex dart.  ``passages`` are the crossing entry darts.
    """
    darts: tuple
    closed: bool

    @property
    def passages(self):
        start = 0 if self.closed else 1
        stop = len(self.darts) - (0 if self.closed else 1)
        return self.darts[start:stop:2]

    @property
    def ends(self):
        return None if self.closed else (self.darts[0], self.darts[-1])

    @property
    def id(self):
        """Edge id: the smaller end dart (open) or smallest dart (closed)."""
        return min(self.darts) if self.closed else min(self.darts[0], self.darts[-1])


def strands(d: Diagram) -> list:
    seen = set()
    out = []
    vertex_darts = sorted(x for n in d.vertices for x in n.rotation)
    for start in vertex_darts:
        if start in seen:
            continue
        path = [start]
        y = d.alpha(start)
        while d.at_crossing(y):
            z = d.through(y)
            path += [y, z]
            y = d.alpha(z)
        path.append(y)
        seen.update(path)
        out.append(Strand(tuple(path), False))
    for start in sorted(x for n in d.crossings for x in n.rotation):
        if start in seen:
            continue
        path = []
        y = start
        while y not in seen:
            z = d.through(y)
            seen.update((y, z))
            path += [y, z]
            y = d.alpha(z)
        out.append(Strand(tuple(path), True))
    return out


def edges(d: Diagram) -> dict:
    """Graph edges (strands with vertex ends) keyed by edge id."""
    return {s.id: s for s in strands(d) if not s.closed}


# ---------------------------------------------------------------------------
# splicing: remove nodes, route their darts through a matching
# ---------------------------------------------------------------------------

def splice(d: Diagram, remove, through: dict) -> Diagram:
    """Delete the nodes in ``remove``, joining arcs through them.

    ``through`` is an involution on the darts of the removed nodes; a path
    entering a removed dart leaves by its ``through`` partner.  Closed paths
    made only of removed darts become free loops.
    """
    remove = set(remove)
    gone = {x for nid in remove for x in d.nodes[nid].rotation}
    pairing = {}
    for x in d.darts:
        if x in gone:
            continue
        y = d.alpha(x)
        while y in gone:
            y = d.alpha(through[y])
        pairing[x] = y
    visited = set()
    for x in d.darts:
        if x in gone and d.alpha(x) not in gone:
            # entry points are consumed by the chains above
            y = x
            while True:
                visited.add(y)
                t = through[y]
                visited.add(t)
                y = d.alpha(t)
                if y not in gone:
                    break
    loops = 0
    for x in sorted(gone):
        if x in visited:
            continue
        loops += 1
        y = x
        while y not in visited:
            visited.add(y)
            t = through[y]
            visited.add(t)
            y = d.alpha(t)
    nodes = [n for nid, n in d.nodes.items() if nid not in remove]
    return Diagram(nodes, pairing, d.free_loops + loops)


def crossing_through(n: Node) -> dict:
    r = n.rotation
    return {r[0]: r[2], r[2]: r[0], r[1]: r[3], r[3]: r[1]}


def delete_edge(d: Diagram, edge_id) -> Diagram:
    """Remove an edge; other strands pass straight through its crossings.

    Vertices left with no darts are dropped.
    """
    e = edges(d).get(edge_id)
    if e is None:
        raise DiagramError(f"no edge {edge_id}")
    a, b = e.darts[0], e.darts[-1]
    crossed = sorted({d.node_of(x).id for x in e.darts[1:-1]})
    if crossed:
        through = {}
        for c in crossed:
            through.update(crossing_through(d.nodes[c]))
        d = splice(d, crossed, through)
    nodes = []
    for n in d.nodes.values():
        if a in n.rotation or b in n.rotation:
            rot = tuple(x for x in n.rotation if x not in (a, b))
            if not rot:
                continue
            n = Node(n.id, n.kind, rot, n.over, n.rigid)
        nodes.append(n)
    pairing = {x: y for x, y in d.pairing.items() if x not in (a, b)}
    return Diagram(nodes, pairing, d.free_loops)


# ---------------------------------------------------------------------------
# canonical form
# ---------------------------------------------------------------------------

def _dart_tag(d: Diagram, x) -> str:
    n = d.node_of(x)
    if n.kind == CROSSING:
        return "O" if d.slot(x) in n.over else "U"
    return "R" if n.rigid else "V"


def _code_from(d: Diagram, start):
    label = {start: 0}
    order = [start]
    i = 0
    while i < len(order):
        x = order[i]
        for y in (d.sigma(x), d.alpha(x)):
            if y not in label:
                label[y] = len(order)
                order.append(y)
        i += 1
    code = tuple((label[d.sigma(x)], label[d.alpha(x)], _dart_tag(d, x)) for x in order)
    return code, order


def _component_codes(d: Diagram):
    out = []
    for comp in _components_of_darts(d):
        darts = [x for nid in comp for x in d.nodes[nid].rotation]
        if not darts:
            # isolated dartless node cannot occur in valid diagrams
            continue
        best = min((_code_from(d, x) for x in darts), key=lambda t: t[0])
        out.append(best)
    out.sort(key=lambda t: t[0])
    return out


def canonical_form(d: Diagram):
    if d._key is None:
        d._key = (tuple(c for c, _ in _component_codes(d)), d.free_loops)
    return d._key


def isomorphic(a: Diagram, b: Diagram) -> bool:
    return canonical_form(a) == canonical_form(b)


def canonical_relabel(d: Diagram) -> Diagram:
    """Relabel darts and nodes in canonical order (deterministic output)."""
    dmap, nmap = {}, {}
    for _, order in _component_codes(d):
        for x in order:
            dmap[x] = len(dmap)
            nid = d.node_of(x).id
            if nid not in nmap:
                nmap[nid] = len(nmap)
    nodes = []
    for nid, new in sorted(nmap.items(), key=lambda t: t[1]):
        n = d.nodes[nid]
        rot = [dmap[x] for x in n.rotation]
        # start each rotation at its least dart; keep over on the same darts
        k = rot.index(min(rot))
        rot = tuple(rot[k:] + rot[:k])
        over = None
        if n.kind == CROSSING:
            over = n.over if k % 2 == 0 else ((1, 3) if n.over == (0, 2) else (0, 2))
        nodes.append(Node(new, n.kind, rot, over, n.rigid))
    return Diagram(nodes, {dmap[a]: dmap[b] for a, b in d.pairing.items()}, d.free_loops)


def digest(d: Diagram) -> str:
    blob = json.dumps(canonical_relabel(d).to_json(), sort_keys=True)
    return "sha256:" + hashlib.sha256(blob.encode()).hexdigest()


def diagram_from_pd(pd, free_loops: int = 0) -> Diagram:
    """Build a link diagram from a PD code.

    Each crossing ``(i, j, k, l)`` lists edge labels counterclockwise starting
    from the incoming understrand, so the overstrand sits in slots 1 and 3.
    """
    nodes, ends = [], {}
    for c, quad in enumerate(pd):
        rot = tuple(4 * c + s for s in range(4))
        nodes.append(Node(c, CROSSING, rot, (1, 3)))
        for s, lab in enumerate(quad):
            ends.setdefault(lab, []).append(4 * c + s)
    pairing = {}
    for lab, pair in ends.items():
        if len(pair) != 2:
            raise DiagramError(f"PD label {lab} used {len(pair)} times")
        a, b = pair
        pairing[a], pairing[b] = b, a
    return Diagram(nodes, pairing, free_loops)
