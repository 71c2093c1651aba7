"""Reidemeister moves R1-R5 for spatial graph diagrams and a reduction search.

Sites are given by darts and sector labels (see :mod:`crossmin.diagram`).

* ``R1+``  site ``("arc", d)`` or ``("loop",)``; params ``(side, over)``
* ``R1-``  site ``(crossing, k)``: slots ``k`` and ``k+1`` are joined by a loop
* ``R2+``  site ``(y1, y2)``: two corners of one face; the arcs leaving them
  are pushed across each other.  params ``(over,)``: 0 puts the first arc over
* ``R2-``  site ``(x,)``: a corner of a bigon face
* ``R3``   site ``(x,)``: triangle corner whose outgoing arc is over at both ends
* ``R4``   site ``(x, k)`` slides a strand crossing the ``k`` legs after corner
  ``x`` (all over or all under) to cross the complementary legs instead;
  ``(x, 0, y)`` with params ``(over,)`` pulls the arc after corner ``y`` (same
  face as ``x``) across the whole vertex
* ``R5+``  site ``(x,)``: twist the two legs bounding corner ``x``; params ``(over,)``
* ``R5-``  site ``(x,)``: undo such a twist
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

from .diagram import (CROSSING, Diagram, DiagramError, Node, components, crossing_through,
                      digest, isomorphic, splice)

INCREASING = ("R1+", "R2+", "R5+")
KINDS = ("R1+", "R1-", "R2+", "R2-", "R3", "R4", "R5+", "R5-")


class InapplicableMove(DiagramError):
    pass


@dataclass(frozen=True)
class Move:
    kind: str
    site: tuple
    params: tuple = ()

    def to_json(self):
        return {"kind": self.kind, "site": list(self.site), "params": list(self.params)}


def _over(flag) -> tuple:
    return (0, 2) if flag == 0 else (1, 3)


def _fresh(d: Diagram, n_darts: int):
    nid, did = d.next_ids()
    return nid, list(range(did, did + n_darts))


def _pair(p: dict, a, b):
    p[a], p[b] = b, a


# ---------------------------------------------------------------------------
# R1
# ---------------------------------------------------------------------------

def _r1_plus(d: Diagram, m: Move):
    side, over = m.params
    nid, (k0, k1, k2, k3) = _fresh(d, 4)
    node = Node(nid, CROSSING, (k0, k1, k2, k3), _over(over))
    p = dict(d.pairing)
    _pair(p, k1, k2)
    free = d.free_loops
    if m.site[0] == "loop":
        if free < 1:
            raise InapplicableMove("no free loop")
        free -= 1
        _pair(p, k3, k0)
    else:
        a = m.site[1]
        if a not in d.pairing:
            raise InapplicableMove(f"no dart {a}")
        b = d.alpha(a)
        if side == 1:
            a, b = b, a
        _pair(p, a, k0)
        _pair(p, b, k3)
    out = Diagram(list(d.nodes.values()) + [node], p, free)
    return out, Move("R1-", (nid, 1))


def _r1_minus_ok(d: Diagram, c, k) -> bool:
    n = d.nodes.get(c)
    if n is None or n.kind != CROSSING:
        return False
    r = n.rotation
    return d.alpha(r[k % 4]) == r[(k + 1) % 4]


def _r1_minus(d: Diagram, m: Move):
    c, k = m.site
    if not _r1_minus_ok(d, c, k):
        raise InapplicableMove("no kink at this site")
    n = d.nodes[c]
    r = n.rotation
    over = ((n.over[0] - k + 1) % 2)
    out = splice(d, [c], crossing_through(n))
    p, q = r[(k + 2) % 4], r[(k + 3) % 4]
    if d.alpha(p) == q:
        inv = Move("R1+", ("loop",), (0, over))
    else:
        inv = Move("R1+", ("arc", d.alpha(q)), (0, over))
    return out, inv


# ---------------------------------------------------------------------------
# R2
# ---------------------------------------------------------------------------

def _r2_plus(d: Diagram, m: Move):
    y1, y2 = m.site
    (over,) = m.params
    index = d.face_index()
    if y1 not in index or y2 not in index or index[y1] != index[y2]:
        raise InapplicableMove("corners are not on one face")
    p1 = d.sigma(y1)
    p2 = d.alpha(p1)
    q1 = d.sigma(y2)
    q2 = d.alpha(q1)
    if {p1, p2} == {q1, q2}:
        raise InapplicableMove("cannot push an arc across itself")
    nid, (xqy, xpp1, xqq2, xpy, yqq1, ypp2, yqx, ypx) = _fresh(d, 8)
    o = (1, 3) if over == 0 else (0, 2)
    X = Node(nid, CROSSING, (xqy, xpp1, xqq2, xpy), o)
    Y = Node(nid + 1, CROSSING, (yqq1, ypp2, yqx, ypx), o)
    p = dict(d.pairing)
    _pair(p, p1, xpp1)
    _pair(p, xpy, ypx)
    _pair(p, ypp2, p2)
    _pair(p, q1, yqq1)
    _pair(p, yqx, xqy)
    _pair(p, xqq2, q2)
    out = Diagram(list(d.nodes.values()) + [X, Y], p, d.free_loops)
    return out, Move("R2-", (xpy,))


def _bigon(d: Diagram, x):
    """(X, Y) node ids if corner ``x`` lies on a coherent bigon, else None."""
    if x not in d.pairing or not d.at_crossing(x):
        return None
    a = d.sigma(x)
    x1 = d.alpha(a)
    if not d.at_crossing(x1) or d.alpha(d.sigma(x1)) != x:
        return None
    X, Y = d.node_of(x).id, d.node_of(x1).id
    if X == Y:
        return None
    if d.is_over(a) != d.is_over(x1):
        return None
    return X, Y


def _r2_minus(d: Diagram, m: Move):
    (x,) = m.site
    xy = _bigon(d, x)
    if xy is None:
        raise InapplicableMove("no coherent bigon at this corner")
    X, Y = xy
    through = {**crossing_through(d.nodes[X]), **crossing_through(d.nodes[Y])}
    out = splice(d, [X, Y], through)
    return out, None


def _r2_minus_inverse(d: Diagram, out: Diagram, x):
    """Find the R2+ move on ``out`` that restores ``d`` (None if impossible)."""
    if out.free_loops != d.free_loops or len(components(out)) != len(components(d)):
        return None
    a = d.sigma(x)
    x1 = d.alpha(a)
    ends = set()
    for y in (d.through(a), d.through(x1), d.through(d.sigma(x1)), d.through(x)):
        ends.add(d.alpha(y))
    labels = [y for y in out.darts if out.sigma(y) in ends]
    index = out.face_index()
    for y1 in labels:
        for y2 in labels:
            if y1 >= y2 or index[y1] != index[y2]:
                continue
            for over in (0, 1):
                mv = Move("R2+", (y1, y2), (over,))
                try:
                    back, _ = _r2_plus(out, mv)
                except InapplicableMove:
                    continue
                if isomorphic(back, d):
                    return mv
    return None


# ---------------------------------------------------------------------------
# R3
# ---------------------------------------------------------------------------

def _triangle(d: Diagram, s):
    """Darts of an R3 triangle whose top arc leaves corner ``s``."""
    if s not in d.pairing or not d.at_crossing(s):
        return None
    a_x = d.sigma(s)
    a_y = d.alpha(a_x)
    if not d.at_crossing(a_y):
        return None
    b_y = d.sigma(a_y)
    b_z = d.alpha(b_y)
    if not d.at_crossing(b_z):
        return None
    c_z = d.sigma(b_z)
    c_x = d.alpha(c_z)
    if c_x != s:
        return None
    ids = {d.node_of(t).id for t in (s, a_y, b_z)}
    if len(ids) != 3:
        return None
    if not (d.is_over(a_x) and d.is_over(a_y)):
        return None
    return a_x, a_y, b_y, b_z, c_z, c_x


def _r3(d: Diagram, m: Move):
    (s,) = m.site
    tri = _triangle(d, s)
    if tri is None:
        raise InapplicableMove("no R3 triangle at this corner")
    a_x, a_y, b_y, b_z, c_z, c_x = tri
    X, Y, Z = d.node_of(a_x), d.node_of(a_y), d.node_of(b_z)
    AX, CX = d.through(a_x), d.through(c_x)
    AY, BY = d.through(a_y), d.through(b_y)
    BZ, CZ = d.through(b_z), d.through(c_z)
    b_over = d.is_over(b_z)
    P = Node(Y.id, CROSSING, (a_x, b_y, AX, BZ), (0, 2))
    Q = Node(X.id, CROSSING, (AY, c_x, a_y, CZ), (0, 2))
    R = Node(Z.id, CROSSING, (BY, CX, b_z, c_z), (0, 2) if b_over else (1, 3))
    nodes = [n for nid, n in d.nodes.items() if nid not in (X.id, Y.id, Z.id)] + [P, Q, R]
    return Diagram(nodes, d.pairing, d.free_loops), Move("R3", (c_x,))


# ---------------------------------------------------------------------------
# R4
# ---------------------------------------------------------------------------

def _legs_after(d: Diagram, x, k):
    return [d.sigma(x, j) for j in range(1, k + 1)]


def _r4_block(d: Diagram, x, k):
    """Detect a strand crossing the k legs after corner x; None if absent."""
    v = d.node_of(x)
    if v.kind == CROSSING or k < 1 or k > len(v.rotation):
        return None
    legs = _legs_after(d, x, k)
    block = []
    for leg in legs:
        f = d.alpha(leg)
        if not d.at_crossing(f):
            return None
        n = d.node_of(f)
        s = d.slot(f)
        r = n.rotation
        block.append((n.id, f, r[(s + 1) % 4], r[(s + 2) % 4], r[(s + 3) % 4]))
    ids = [b[0] for b in block]
    if len(set(ids)) != k:
        return None
    for j in range(k - 1):
        if d.alpha(block[j][4]) != block[j + 1][2]:
            return None
    senses = {d.is_over(b[2]) for b in block}
    if len(senses) != 1:
        return None
    block_darts = {t for nid in ids for t in d.nodes[nid].rotation}
    s_darts = {b[2] for b in block} | {b[4] for b in block}
    u = d.alpha(block[0][2])
    w = d.alpha(block[-1][4])
    for t in (u, w):
        if t in block_darts or d.node_of(t).id == v.id:
            return None
    for b in block:
        if d.alpha(b[3]) in s_darts:
            return None
    return {"v": v.id, "legs": legs, "ids": ids, "u": u, "w": w, "over": senses.pop()}


def _wrap(d: Diagram, legs, entry, exit_, s_over: bool) -> Diagram:
    """Route the arc entry--exit counterclockwise across ``legs`` near their vertex."""
    if d.alpha(entry) != exit_:
        raise InapplicableMove("wrap needs a single arc")
    p = dict(d.pairing)
    nodes = list(d.nodes.values())
    nid, did = d.next_ids()
    prev = entry
    for leg in legs:
        out, fwd, inn, back = did, did + 1, did + 2, did + 3
        did += 4
        nodes.append(Node(nid, CROSSING, (out, fwd, inn, back), (1, 3) if s_over else (0, 2)))
        nid += 1
        f = p[leg]
        _pair(p, leg, inn)
        _pair(p, out, f)
        _pair(p, prev, back)
        prev = fwd
    _pair(p, prev, exit_)
    return Diagram(nodes, p, d.free_loops)


def _r4(d: Diagram, m: Move):
    x, k = m.site[0], m.site[1]
    if x not in d.pairing:
        raise InapplicableMove(f"no corner {x}")
    v = d.node_of(x)
    if v.kind == CROSSING:
        raise InapplicableMove("R4 needs a vertex corner")
    mval = len(v.rotation)
    if k == 0:
        y = m.site[2]
        (over,) = m.params
        if y not in d.pairing:
            raise InapplicableMove(f"no corner {y}")
        index = d.face_index()
        if index[x] != index[y]:
            raise InapplicableMove("arc and vertex corner are not on one face")
        w = d.sigma(y)
        u = d.alpha(w)
        if d.node_of(u).id == v.id or d.node_of(w).id == v.id:
            raise InapplicableMove("arc touches the vertex")
        legs = _legs_after(d, x, mval)
        out = _wrap(d, legs, w, u, over == 0)
        return out, Move("R4", (x, mval))
    info = _r4_block(d, x, k)
    if info is None:
        raise InapplicableMove("no slidable block at this corner")
    through = {}
    for nid in info["ids"]:
        through.update(crossing_through(d.nodes[nid]))
    mid = splice(d, info["ids"], through)
    last = info["legs"][-1]
    rest = _legs_after(d, last, mval - k)
    u, w = info["u"], info["w"]
    if rest:
        out = _wrap(mid, rest, w, u, info["over"])
        inv = Move("R4", (last, mval - k))
    else:
        out = mid
        y = mid.sigma_inv(u)
        inv = Move("R4", (x, 0, y), (0 if info["over"] else 1,))
        if len(components(out)) != len(components(d)):
            inv = None
    return out, inv


# ---------------------------------------------------------------------------
# R5
# ---------------------------------------------------------------------------

def _r5_plus(d: Diagram, m: Move):
    (la,) = m.site
    (over,) = m.params
    if la not in d.pairing or d.at_crossing(la):
        raise InapplicableMove("R5 needs a vertex corner")
    lb = d.sigma(la)
    if lb == la:
        raise InapplicableMove("vertex has a single leg")
    nid, (cfa, cfb, cvb, cva) = _fresh(d, 4)
    node = Node(nid, CROSSING, (cfa, cfb, cvb, cva), (1, 3) if over == 0 else (0, 2))
    p = dict(d.pairing)
    fa, fb = d.alpha(la), d.alpha(lb)
    _pair(p, la, cva)
    _pair(p, lb, cvb)
    if fa == lb:
        _pair(p, cfa, cfb)
    else:
        _pair(p, cfa, fa)
        _pair(p, cfb, fb)
    return Diagram(list(d.nodes.values()) + [node], p, d.free_loops), Move("R5-", (la,))


def _twist(d: Diagram, la):
    if la not in d.pairing or d.at_crossing(la):
        return None
    lb = d.sigma(la)
    if lb == la:
        return None
    ca, cb = d.alpha(la), d.alpha(lb)
    if not d.at_crossing(ca) or d.node_of(ca).id != d.node_of(cb).id:
        return None
    if d.sigma(cb) != ca:
        return None
    return d.node_of(ca), d.slot(cb)


def _r5_minus(d: Diagram, m: Move):
    (la,) = m.site
    tw = _twist(d, la)
    if tw is None:
        raise InapplicableMove("no twist at this corner")
    n, s = tw
    r = n.rotation
    cvb, cva, cfa, cfb = r[s], r[(s + 1) % 4], r[(s + 2) % 4], r[(s + 3) % 4]
    through = {cva: cfa, cfa: cva, cvb: cfb, cfb: cvb}
    out = splice(d, [n.id], through)
    return out, Move("R5+", (la,), (0 if d.is_over(cva) else 1,))


_APPLY = {"R1+": _r1_plus, "R1-": _r1_minus, "R2+": _r2_plus, "R2-": _r2_minus,
          "R3": _r3, "R4": _r4, "R5+": _r5_plus, "R5-": _r5_minus}


def apply_with_inverse(d: Diagram, m: Move):
    """Apply ``m``; also return a move undoing it (None when not representable)."""
    try:
        fn = _APPLY[m.kind]
    except KeyError:
        raise InapplicableMove(f"unknown move kind {m.kind!r}") from None
    try:
        out, inv = fn(d, m)
    except (KeyError, IndexError, TypeError, ValueError) as exc:
        if isinstance(exc, InapplicableMove):
            raise
        raise InapplicableMove(f"{m.kind} not applicable at {m.site}: {exc}") from exc
    if m.kind == "R2-":
        inv = _r2_minus_inverse(d, out, m.site[0])
    return out, inv


def apply_move(d: Diagram, m: Move) -> Diagram:
    return apply_with_inverse(d, m)[0]


def expected_delta(d: Diagram, m: Move) -> int:
    if m.kind == "R4":
        mval = len(d.node_of(m.site[0]).rotation)
        return mval - 2 * m.site[1]
    return {"R1+": 1, "R1-": -1, "R2+": 2, "R2-": -2, "R3": 0, "R5+": 1, "R5-": -1}[m.kind]


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------

def _vertex_corners(d: Diagram, rigid_aware: bool = False):
    for v in sorted(d.vertices, key=lambda n: n.id):
        if rigid_aware and v.rigid:
            continue
        yield from v.rotation


def enumerate_moves(d: Diagram, increasing: bool = True, rigid_aware: bool = False,
                    kinds=KINDS) -> list:
    """All applicable moves.

    ``rigid_aware`` drops twists (R5) at rigid vertices, which are not
    rigid-vertex isotopies.
    """
    kinds = set(kinds)
    if not increasing:
        kinds -= set(INCREASING)
    out = []
    darts = sorted(d.darts)
    if "R1-" in kinds:
        for n in sorted(d.crossings, key=lambda n: n.id):
            for k in range(4):
                if _r1_minus_ok(d, n.id, k):
                    out.append(Move("R1-", (n.id, k)))
                    break
    if "R2-" in kinds:
        seen = set()
        for x in darts:
            if x in seen:
                continue
            xy = _bigon(d, x)
            if xy is not None:
                x1 = d.alpha(d.sigma(x))
                seen.update((x, x1))
                out.append(Move("R2-", (x,)))
    if "R3" in kinds:
        for x in darts:
            if _triangle(d, x) is not None:
                out.append(Move("R3", (x,)))
    if "R4" in kinds:
        out.extend(_r4_moves(d, increasing))
    if "R5-" in kinds:
        for x in _vertex_corners(d, rigid_aware):
            if _twist(d, x) is not None:
                out.append(Move("R5-", (x,)))
    if "R1+" in kinds:
        for x in darts:
            if x < d.alpha(x):
                out.extend(Move("R1+", ("arc", x), (s, o)) for s in (0, 1) for o in (0, 1))
        if d.free_loops:
            out.extend(Move("R1+", ("loop",), (0, o)) for o in (0, 1))
    if "R2+" in kinds:
        for f in d.faces():
            cs = f.corners
            for i in range(len(cs)):
                for j in range(i + 1, len(cs)):
                    a, b = d.sigma(cs[i]), d.sigma(cs[j])
                    if d.alpha(a) == b:
                        continue
                    out.extend(Move("R2+", (cs[i], cs[j]), (o,)) for o in (0, 1))
    if "R5+" in kinds:
        for x in _vertex_corners(d, rigid_aware):
            if d.sigma(x) != x:
                out.extend(Move("R5+", (x,), (o,)) for o in (0, 1))
    return out


def _r4_moves(d: Diagram, increasing: bool):
    out = []
    for v in sorted(d.vertices, key=lambda n: n.id):
        mval = len(v.rotation)
        for x in v.rotation:
            for k in range(1, mval + 1):
                if _r4_block(d, x, k) is None:
                    break
                if increasing or mval - 2 * k <= 0:
                    out.append(Move("R4", (x, k)))
    if increasing:
        index = d.face_index()
        by_face = {}
        for y in d.darts:
            by_face.setdefault(index[y], []).append(y)
        for v in sorted(d.vertices, key=lambda n: n.id):
            for x in v.rotation:
                for y in sorted(by_face[index[x]]):
                    w = d.sigma(y)
                    if d.node_of(w).id == v.id or d.node_of(d.alpha(w)).id == v.id:
                        continue
                    out.extend(Move("R4", (x, 0, y), (o,)) for o in (0, 1))
    return out


def random_move(d: Diagram, rng: random.Random, kinds=INCREASING, rigid_aware=False):
    """Sample one applicable move of the given kinds without full enumeration."""
    kinds = list(kinds)
    rng.shuffle(kinds)
    darts = sorted(d.darts)
    for kind in kinds:
        if kind == "R1+":
            if darts:
                return Move("R1+", ("arc", rng.choice(darts)), (rng.randrange(2), rng.randrange(2)))
            if d.free_loops:
                return Move("R1+", ("loop",), (0, rng.randrange(2)))
        elif kind == "R2+":
            fs = [f for f in d.faces() if f.degree >= 2]
            rng.shuffle(fs)
            for f in fs[:4]:
                i, j = rng.sample(range(f.degree), 2)
                y1, y2 = f.corners[i], f.corners[j]
                if d.alpha(d.sigma(y1)) != d.sigma(y2):
                    return Move("R2+", (y1, y2), (rng.randrange(2),))
        elif kind == "R5+":
            cs = [x for x in _vertex_corners(d, rigid_aware) if d.sigma(x) != x]
            if cs:
                return Move("R5+", (rng.choice(cs),), (rng.randrange(2),))
        elif kind == "R4":
            ms = _r4_moves(d, True)
            if ms:
                return rng.choice(ms)
        elif kind == "R3":
            ms = enumerate_moves(d, kinds=("R3",))
            if ms:
                return rng.choice(ms)
    return None


# ---------------------------------------------------------------------------
# search
# ---------------------------------------------------------------------------

@dataclass
class MoveTrace:
    initial: str
    steps: list = field(default_factory=list)  # (Move, crossing count after)
    best: Diagram | None = None
    best_count: int = 0
    seed: int = 0

    def to_json(self):
        from .diagram import canonical_relabel
        return {"initial": self.initial, "seed": self.seed, "bestCount": self.best_count,
                "steps": [{"move": m.to_json(), "crossings": c} for m, c in self.steps],
                "best": canonical_relabel(self.best).to_json() if self.best is not None else None}


def search_reduce(d: Diagram, budget: int = 1000, seed: int = 0, max_extra: int = 3,
                  rigid_aware: bool = True, stop_below=None) -> MoveTrace:
    """Annealing walk over Reidemeister moves looking for fewer crossings.

    Decreasing moves are taken greedily most of the time.  Otherwise a
    neutral or increasing move is proposed and accepted with probability
    ``exp(-delta / T)``, where ``T`` decays geometrically with the budget
    spent.  A failure to reduce proves nothing.  With ``stop_below`` set,
    the walk ends as soon as it reaches fewer crossings than that.
    """
    rng = random.Random(seed)
    start = d.crossing_count()
    trace = MoveTrace(digest(d), [], d, start, seed)
    cur = d
    t_hi, t_lo = 2.0, 0.05
    for step in range(budget):
        temp = t_hi * (t_lo / t_hi) ** (step / max(budget - 1, 1))
        dec = enumerate_moves(cur, increasing=False, rigid_aware=rigid_aware,
                              kinds=("R1-", "R2-", "R4", "R5-"))
        dec = [m for m in dec if expected_delta(cur, m) < 0]
        if dec and rng.random() < 0.9:
            m = rng.choice(dec)
        else:
            kinds = ("R3", "R4") + INCREASING
            m = random_move(cur, rng, kinds, rigid_aware=rigid_aware)
            if m is None:
                continue
            delta = expected_delta(cur, m)
            if cur.crossing_count() + delta > start + max_extra:
                continue
            if delta > 0 and rng.random() >= math.exp(-delta / temp):
                continue
        try:
            cur = apply_move(cur, m)
        except InapplicableMove:
            continue
        n = cur.crossing_count()
        trace.steps.append((m, n))
        if n < trace.best_count:
            trace.best, trace.best_count = cur, n
            if stop_below is not None and n < stop_below:
                break
    return trace
