"""Construct, check and freeze the built-in fixtures.

Run from the repository root:  python3 tools/build_fixtures.py [name ...]

Searches are seeded, so rerunning reproduces the same files.  Every
fixture is checked against the properties it is meant to exhibit before it
is written; a failed check aborts the build.
"""

from __future__ import annotations

import itertools
import random
import sys

from crossmin import fixtures
from crossmin.diagram import (CROSSING, VERTEX, Diagram, Node, components, diagram_from_pd,
                              disjoint_union, edges, splice, strands,
                              validate)
from crossmin.generate import (over_assignments,
                               random_link_shadow, random_one_vertex, set_over, theta)
from crossmin.moves import apply_move, enumerate_moves, expected_delta, search_reduce
from crossmin.resolution import (is_a_adequate, is_adequate_link, is_ainv_adequate,
                                 is_alternating_link, is_reduced_link)
from crossmin.spatial import (adams_alternating, adams_reduced, circle_through_crossing_and_edge,
                              enumerate_smoothings, has_uncrossed_cycle, is_adequate_spatial,
                              is_alternating_spatial, is_reduced_spatial, uncrossed_edge_shortcut,
                              uncrossed_edges)

BUILDERS = {}


def builder(name):
    def wrap(fn):
        BUILDERS[name] = fn
        return fn
    return wrap


def check(cond, what):
    if not cond:
        raise SystemExit(f"fixture check failed: {what}")


def save(name, d: Diagram, note: str, **extra):
    check(validate(d).ok, f"{name} is valid")
    payload = {"name": name, "note": note, "diagram": d.to_json()}
    payload.update(extra)
    fixtures.write(name, payload)
    print(f"{name}: {d.crossing_count()} crossings, {len(d.vertices)} vertices")
    return d


def first_valid(candidates):
    for d in candidates:
        try:
            if validate(d).ok:
                yield d
        except Exception:
            continue


def pairing_of(pairs):
    out = {}
    for a, b in pairs:
        out[a], out[b] = b, a
    return out


# -- links -------------------------------------------------------------------

@builder("unknot0")
def unknot0():
    return save("unknot0", Diagram([], {}, 1), "crossingless unknot")


@builder("kink1")
def kink1():
    d = Diagram([Node(0, CROSSING, (0, 1, 2, 3), (0, 2))], pairing_of([(1, 2), (3, 0)]))
    check(is_a_adequate(d) and not is_ainv_adequate(d), "kink1 adequacy pattern")
    return save("kink1", d, "one-crossing unknot with a positive kink")


@builder("hopf2")
def hopf2():
    d = diagram_from_pd([(4, 1, 3, 2), (2, 3, 1, 4)])
    check(len(components(d)) == 1 and is_adequate_link(d), "hopf2 adequate")
    return save("hopf2", d, "Hopf link")


@builder("trefoil3")
def trefoil3():
    d = diagram_from_pd([(1, 5, 2, 4), (3, 1, 4, 6), (5, 3, 6, 2)])
    check(is_alternating_link(d) and is_reduced_link(d), "trefoil reduced alternating")
    return save("trefoil3", d, "trefoil knot, standard alternating diagram")


@builder("fig8-4")
def fig8_4():
    d = diagram_from_pd([(4, 2, 5, 1), (8, 6, 1, 5), (6, 3, 7, 4), (2, 7, 3, 8)])
    check(is_alternating_link(d) and is_reduced_link(d), "figure-eight reduced alternating")
    return save("fig8-4", d, "figure-eight knot, standard alternating diagram")


@builder("theta")
def theta0():
    return save("theta", theta(), "planar theta graph")


# -- rigid-vertex examples ---------------------------------------------------

@builder("onecrossing")
def onecrossing():
    """A rigid 4-valent vertex whose two opposite loops cross once."""
    # vertex darts 0..3, crossing darts 4..7; loop 0-2 passes 4->6, loop 1-3 passes 5->7
    def cands():
        for a, b in itertools.permutations((4, 5, 6, 7), 2):
            if {a, b} not in ({4, 6}, {5, 7}):
                continue
            rest = [x for x in (4, 5, 6, 7) if x not in (a, b)]
            for c, e in itertools.permutations(rest):
                pairs = [(0, a), (2, {4: 6, 6: 4, 5: 7, 7: 5}[a]),
                         (1, c), (3, {4: 6, 6: 4, 5: 7, 7: 5}[c])]
                yield Diagram([Node(0, VERTEX, (0, 1, 2, 3), None, True),
                               Node(1, CROSSING, (4, 5, 6, 7), (0, 2))], pairing_of(pairs))
    d = next(first_valid(cands()))
    check(adams_reduced(d), "onecrossing has no nugatory crossing")
    return save("onecrossing", d, "rigid vertex with two loops crossing once; rigid crossing number 1")


@builder("fig9adams")
def fig9adams():
    """Two trivalent vertices joined by an uncrossed edge; their other edges cross once."""
    def cands():
        for ru in itertools.permutations((1, 2)):
            for rv in itertools.permutations((4, 5)):
                for slots in itertools.permutations((6, 7, 8, 9)):
                    a, b, c, e = slots
                    thr = {6: 8, 8: 6, 7: 9, 9: 7}
                    if thr[a] != b or thr[c] != e:
                        continue
                    pairs = [(0, 3), (ru[0], a), (b, rv[0]), (ru[1], c), (e, rv[1])]
                    yield Diagram([Node(0, VERTEX, (0,) + ru, None, True),
                                   Node(1, VERTEX, (3,) + rv, None, True),
                                   Node(2, CROSSING, (6, 7, 8, 9), (0, 2))], pairing_of(pairs))
    for d in first_valid(cands()):
        ue = uncrossed_edges(d)
        hits = circle_through_crossing_and_edge(d)
        if ue == [0] and any(eid == 0 for _, eid in hits):
            return save("fig9adams", d, "uncrossed edge e with a circle through it and the crossing",
                        pictured=[2, 0])
    check(False, "fig9adams shape found")


# -- one-vertex examples -----------------------------------------------------

def four_valent(rng, max_crossings, lo=1):
    while True:
        d = random_one_vertex(rng, max_crossings=max_crossings, max_valence=4, min_valence=4)
        if d.crossing_count() >= lo:
            return d


@builder("fig4L")
def fig4L():
    """One smoothing is reduced alternating; the other has a nugatory crossing."""
    rng = random.Random(4)
    for _ in range(5000):
        base = four_valent(rng, 3, lo=2)
        for m in enumerate_moves(base, kinds=("R5+",)):
            g = apply_move(base, m)
            smooths = [s.link for s in enumerate_smoothings(g)]
            good = [is_reduced_link(s) and is_alternating_link(s) for s in smooths]
            if sorted(good) != [False, True]:
                continue
            bad = smooths[good.index(False)]
            if not (is_alternating_link(bad) and bad.crossing_count() == g.crossing_count()):
                continue
            dec = [x for x in enumerate_moves(g, increasing=False, kinds=("R5-",))
                   if expected_delta(g, x) < 0]
            if not dec:
                continue
            if search_reduce(g, budget=50, seed=0).best_count >= g.crossing_count():
                continue
            return save("fig4L", g, "vertex twist added to a one-vertex diagram; "
                        "one smoothing is reduced alternating, the other is not reduced",
                        twist=m.to_json())
    check(False, "fig4L found")


def knot_like(d):
    return len(strands(d)) + d.free_loops == 1


def is_unknot_by_search(d, seeds=4, budget=400):
    return any(search_reduce(d, budget=budget, seed=s, stop_below=1).best_count == 0 for s in range(seeds))


def bracket(d):
    """Kauffman bracket as {exponent of A: coefficient}, by full state sum."""
    from crossmin.resolution import A, A_INV, UnionFind, smoothing_pairs
    cs = sorted(d.crossings, key=lambda n: n.id)
    total = {}
    for bits in itertools.product((A, A_INV), repeat=len(cs)):
        uf = UnionFind(d.darts)
        for x, y in d.pairing.items():
            uf.union(x, y)
        for n, k in zip(cs, bits):
            for a, b in smoothing_pairs(n, k):
                uf.union(a, b)
        loops = len({uf.find(x) for x in d.darts}) + d.free_loops
        poly = {bits.count(A) - bits.count(A_INV): 1}
        for _ in range(loops - 1):
            nxt = {}
            for e, c in poly.items():
                nxt[e + 2] = nxt.get(e + 2, 0) - c
                nxt[e - 2] = nxt.get(e - 2, 0) - c
            poly = nxt
        for e, c in poly.items():
            total[e] = total.get(e, 0) + c
    return {e: c for e, c in total.items() if c}


def nontrivial_knot(d):
    """A knot whose bracket is not a monomial is certainly knotted."""
    return knot_like(d) and len(bracket(d)) > 1


@builder("fig5G")
def fig5G():
    """Both smoothings are knotted."""
    rng = random.Random(5)
    for _ in range(20000):
        d = four_valent(rng, 5, lo=3)
        for g in over_assignments(d):
            if all(nontrivial_knot(s.link) for s in enumerate_smoothings(g)):
                save("fig5G", g, "four-valent vertex; both smoothings are knotted "
                     "(bracket is not a monomial)")
                return g
    check(False, "fig5G found")


@builder("fig5G-prime")
def fig5G_prime():
    """Isotopic to fig5G, but no smoothing is a non-trivial knot."""
    g = fixtures.load("fig5G")
    rng = random.Random(55)
    frontier = [(g, [])]
    for depth in range(3):
        nxt = []
        for d, path in frontier:
            for m in enumerate_moves(d, kinds=("R4", "R5+", "R5-", "R2+", "R3")):
                try:
                    h = apply_move(d, m)
                except Exception:
                    continue
                if h.crossing_count() > 5:
                    continue
                nxt.append((h, path + [m]))
        rng.shuffle(nxt)
        nxt = nxt[:300]
        for h, path in nxt:
            if not any(m.kind in ("R4", "R5+", "R5-") for m in path):
                continue
            ok = True
            for s in enumerate_smoothings(h):
                if knot_like(s.link) and not is_unknot_by_search(s.link):
                    ok = False
                    break
            if ok:
                return save("fig5G-prime", h, "reached from fig5G by vertex moves; "
                            "every smoothing is a split link or an unknot",
                            moves=[m.to_json() for m in path])
        frontier = nxt
    check(False, "fig5G-prime found")


def pinches(link: Diagram):
    """Planar ways of squeezing two arcs of a link together into a 4-valent vertex."""
    arcs = sorted({(min(a, b), max(a, b)) for a, b in link.pairing.items()})
    base = max(link.darts, default=-1) + 1
    nid = max(link.nodes, default=-1) + 1
    n = [base + i for i in range(4)]
    for (x1, y1), (x2, y2) in itertools.combinations(arcs, 2):
        pairing = {k: v for k, v in link.pairing.items() if k not in (x1, y1, x2, y2)}
        for a, b, c, e in ((x1, y1, x2, y2), (x1, y1, y2, x2)):
            p = dict(pairing)
            p.update(pairing_of([(a, n[0]), (b, n[1]), (c, n[2]), (e, n[3])]))
            for rot in ((n[0], n[1], n[2], n[3]), (n[0], n[1], n[3], n[2])):
                d = Diagram(list(link.nodes.values()) + [Node(nid, VERTEX, rot)], p, link.free_loops)
                if validate(d).ok:
                    yield d


def loop_insertions(d: Diagram):
    """Every way to add an uncrossed loop at the vertex of ``d`` inside one face."""
    (v,) = d.vertices
    index = d.face_index()
    rot = v.rotation
    p = max(d.darts) + 1
    for i, j in itertools.combinations_with_replacement(range(len(rot)), 2):
        if index[rot[i]] != index[rot[j]]:
            continue
        new = []
        for k, x in enumerate(rot):
            new.append(x)
            if k == i:
                new.append(p)
            if k == j:
                new.append(p + 1)
        pairing = dict(d.pairing)
        pairing.update(pairing_of([(p, p + 1)]))
        nodes = [m for m in d.nodes.values() if m.id != v.id] + [Node(v.id, VERTEX, tuple(new))]
        yield Diagram(nodes, pairing, d.free_loops), p


@builder("fig7")
def fig7():
    """Deleting the uncrossed edge leaves a reduced alternating diagram; the whole is not alternating."""
    from crossmin.generate import random_alternating_link
    rng = random.Random(7)
    seen = 0
    for _ in range(400):
        link = disjoint_union(random_alternating_link(rng, max_crossings=3),
                              random_alternating_link(rng, max_crossings=3))
        for h in pinches(link):
            if not (is_reduced_spatial(h) and is_alternating_spatial(h)):
                continue
            seen += 1
            for g, eid in loop_insertions(h):
                if is_alternating_spatial(g) or not uncrossed_edge_shortcut(g, eid):
                    continue
                check(is_adequate_spatial(g), "fig7 adequate by full enumeration")
                return save("fig7", g, "one-vertex diagram with an uncrossed loop E; "
                            "deleting E gives a reduced alternating diagram, yet G is not alternating",
                            uncrossedEdge=eid)
    check(False, f"fig7 found ({seen} bases tried)")

# -- rigid example with odd valence ------------------------------------------

def random_planar_graph(rng, n, extra):
    """A cycle on ``n`` vertices with ``extra`` chords drawn inside faces."""
    nodes = {i: [2 * i, 2 * i + 1] for i in range(n)}
    pairing = {}
    for i in range(n):
        a, b = 2 * i + 1, 2 * ((i + 1) % n)
        pairing[a], pairing[b] = b, a
    nxt = 2 * n
    for _ in range(extra):
        d = Diagram([Node(i, VERTEX, tuple(r)) for i, r in nodes.items()], pairing)
        index = d.face_index()
        x = rng.choice(sorted(d.darts))
        same = [y for y in sorted(d.darts) if index[y] == index[x]]
        y = rng.choice(same)
        p, q = nxt, nxt + 1
        nxt += 2
        for dart, new in ((x, p), (p if x == y else y, q)):
            r = nodes[d.node_of(x if dart == p else dart).id]
            r.insert(r.index(dart) + 1, new)
        pairing[p], pairing[q] = q, p
    d = Diagram([Node(i, VERTEX, tuple(r), None, True) for i, r in nodes.items()], pairing)
    check(validate(d).ok, "random planar graph is planar")
    return d


def adams_shadow_ok(d):
    vals = [len(v.rotation) for v in d.vertices]
    return (min(vals) >= 4 and any(v % 2 for v in vals) and d.crossing_count() > 0
            and adams_reduced(d) and not has_uncrossed_cycle(d)
            and not circle_through_crossing_and_edge(d))


@builder("fig10")
def fig10():
    """Rigid, odd valence but none of valence 3, reduced and alternating in the rigid sense,
    no uncrossed cycle, and no circle through a single crossing and a single edge."""
    from crossmin.generate import _walk
    rng = random.Random(10)
    for attempt in range(20000):
        g = random_planar_graph(rng, rng.randint(4, 5), rng.randint(4, 8))
        vals = [len(v.rotation) for v in g.vertices]
        if min(vals) < 4 or not any(v % 2 for v in vals):
            continue
        cap = rng.randint(3, 9)
        d = _walk(g, rng, rng.randint(3, 25), ("R2+", "R3", "R5+", "R4"), cap)
        if not adams_shadow_ok(d) or d.crossing_count() > 10:
            continue
        for h in over_assignments(d):
            if adams_alternating(h):
                h = h.replace(nodes=[Node(n.id, n.kind, n.rotation, n.over, n.kind == VERTEX)
                                     for n in h.nodes.values()])
                return save("fig10", h, "rigid diagram with odd-valent vertices and none of valence 3; "
                            "reduced, alternating, no uncrossed cycle, "
                            "no circle through one crossing and one edge")
    check(False, "fig10 found")


def boundary_overs(d):
    """Vertex-neighbourhood boundaries with two consecutive exits starting over."""
    from crossmin.spatial import neighborhood_components
    hits = []
    for comp in neighborhood_components(d):
        for cyc in comp.boundaries:
            s = [d.is_over(d.alpha(x)) for x in cyc]
            for i in range(len(s)):
                if len(s) > 1 and s[i] and s[(i + 1) % len(s)]:
                    hits.append((comp.vertices, cyc[i], cyc[(i + 1) % len(s)]))
    return hits


@builder("fig11s2")
def fig11s2():
    """fig10 after pulling an arc across a vertex disk: no longer alternating."""
    g = fixtures.load("fig10")
    found = []
    for m in enumerate_moves(g, kinds=("R4",)):
        h = apply_move(g, m)
        if not adams_alternating(h) and boundary_overs(h):
            found.append((h.crossing_count(), len(found), h, m))
    if found:
        _, _, h, m = min(found, key=lambda t: t[:2])
        return save("fig11s2", h, "rigid-vertex move applied to fig10; two consecutive edges "
                        "leaving a vertex neighbourhood start with overcrossings", move=m.to_json())
    check(False, "fig11s2 found")


# -- framework pieces --------------------------------------------------------

def constituents(d: Diagram):
    """Knots formed by pairs of edges of a theta-curve."""
    from crossmin.diagram import delete_edge
    out = []
    for eid in sorted(edges(d)):
        h = delete_edge(d, eid)
        through = {}
        for v in h.vertices:
            a, b = v.rotation
            through[a], through[b] = b, a
        out.append(splice(h, [v.id for v in h.vertices], through))
    return out


def shared_face(d: Diagram):
    """A face meeting every vertex, as {vertex id: outer dart}, or None."""
    index = d.face_index()
    for f in sorted(set(index.values())):
        pick = {}
        for v in d.vertices:
            ds = [x for x in v.rotation if index[x] == f]
            if not ds:
                break
            pick[v.id] = min(ds)
        else:
            return pick
    return None


def _potts(vertices, edge_list, q, v):
    """Sum over edge subsets S of q^components(S) * v^|S|, by deletion-contraction."""
    from functools import lru_cache

    def canon(vs, es):
        return tuple(sorted(vs)), tuple(sorted(tuple(sorted(e)) for e in es))

    @lru_cache(maxsize=None)
    def z(vs, es):
        if not es:
            return q ** len(vs)
        (a, b), rest = es[0], es[1:]
        if a == b:
            return (1 + v) * z(vs, rest)
        merged = tuple((a if x == b else x, a if y == b else y) for x, y in rest)
        return z(vs, rest) + v * z(*canon([x for x in vs if x != b], merged))

    return z(*canon(vertices, edge_list))


def yamada(d: Diagram, a):
    """Yamada polynomial evaluated at the number ``a``, by the crossing skein."""
    from fractions import Fraction
    from crossmin.resolution import A, A_INV, smoothing_pairs
    a = Fraction(a)
    y = -a - 2 - 1 / a
    cs = sorted(d.crossings, key=lambda n: n.id)
    total = Fraction(0)
    for state in itertools.product((A, A_INV, "X"), repeat=len(cs)):
        weight = Fraction(1)
        through = {}
        keep = []
        for n, k in zip(cs, state):
            if k == "X":
                keep.append(n.id)
                continue
            weight *= a if k == A else 1 / a
            for p1, p2 in smoothing_pairs(n, k):
                through[p1], through[p2] = p2, p1
        g = splice(d, [n.id for n, k in zip(cs, state) if k != "X"], through)
        g = g.replace(nodes=[Node(n.id, VERTEX, n.rotation) if n.id in keep else n
                             for n in g.nodes.values()])
        verts = [n.id for n in g.vertices]
        es = []
        loops = g.free_loops
        for s_ in strands(g):
            if s_.closed:
                loops += 1
            else:
                es.append((g.node_of(s_.darts[0]).id, g.node_of(s_.darts[-1]).id))
        # h(G) = y^-|V| * Z(G; q=-y, v=y) at x = -1; a free circle is a vertex with a loop
        z = _potts(verts, es, -y, y) * ((-y) * (1 + y)) ** loops
        total += weight * z / y ** (len(verts) + loops)
    return total


def knotted_theta(d: Diagram) -> bool:
    """True when the Yamada value rules out the trivial theta-curve up to units."""
    from fractions import Fraction
    for a in (Fraction(3, 7), Fraction(5, 11)):
        r = yamada(d, a)
        triv = -(a + 1 + 1 / a) * (a + 1 / a)
        ratio = r / triv
        if not any(ratio == s * (-a) ** n for s in (1, -1) for n in range(-40, 41)):
            return True
    return False


def shadow_key(d: Diagram):
    from crossmin.diagram import canonical_form
    return canonical_form(d.replace(nodes=[Node(n.id, VERTEX, n.rotation)
                                           for n in d.nodes.values()]))


def knot_shadows(kmax, tries=3000):
    """One-component link shadows with at most ``kmax`` crossings, up to isomorphism."""
    rng = random.Random(0)
    out = {}
    for _ in range(tries):
        d = random_link_shadow(rng, max_crossings=kmax, steps=rng.randint(1, 12))
        if len(strands(d)) == 1 and d.free_loops == 0:
            out.setdefault(shadow_key(d), d)
    return list(out.values())


def _fresh(d: Diagram, k):
    m = max(d.darts) + 1
    return list(range(m, m + k))


def _rewire(d: Diagram, drop, pairs, nodes):
    pairing = dict(d.pairing)
    for z in drop:
        del pairing[z]
    for x, y in pairs:
        pairing[x], pairing[y] = y, x
    g = Diagram(nodes, pairing)
    return g if validate(g).ok else None


def _start_edge(d: Diagram, a):
    """Trivalent vertex on the arc at ``a``; its third dart runs to a new tip."""
    b = d.pairing[a]
    p, q, r, t = _fresh(d, 4)
    nid = max(d.nodes) + 1
    for rot in ((p, q, r), (p, r, q)):
        g = _rewire(d, (a, b), ((a, p), (q, b), (r, t)),
                    list(d.nodes.values()) + [Node(nid, VERTEX, rot), Node(nid + 1, VERTEX, (t,))])
        if g is not None:
            yield g, nid + 1


def _tip_ends(d: Diagram, tip, c):
    (t,) = d.nodes[tip].rotation
    w, e = d.pairing[t], d.pairing[c]
    if {c, e} & {t, w}:
        return None
    return t, w, e


def _cross_arc(d: Diagram, tip, c):
    """Extend the tip through the arc at ``c`` with a new crossing."""
    ends = _tip_ends(d, tip, c)
    if ends is None:
        return
    t, w, e = ends
    x0, x1, x2, x3, t2 = _fresh(d, 5)
    nid = max(d.nodes) + 1
    rest = [n for n in d.nodes.values() if n.id != tip]
    for s1, s3 in ((c, e), (e, c)):
        g = _rewire(d, (t, w, c, e), ((w, x0), (x1, s1), (x3, s3), (x2, t2)),
                    rest + [Node(nid, CROSSING, (x0, x1, x2, x3), (0, 2)), Node(tip, VERTEX, (t2,))])
        if g is not None:
            yield g


def _end_on_arc(d: Diagram, tip, c):
    """Finish the tip as a trivalent vertex on the arc at ``c``."""
    ends = _tip_ends(d, tip, c)
    if ends is None:
        return
    t, w, e = ends
    p, q, r = _fresh(d, 3)
    rest = [n for n in d.nodes.values() if n.id != tip]
    for rot in ((p, q, r), (p, r, q)):
        g = _rewire(d, (t, w, c, e), ((c, p), (q, e), (r, w)), rest + [Node(tip, VERTEX, rot)])
        if g is not None:
            yield g


def _drop_bivalent(d: Diagram):
    vs = [v for v in d.vertices if len(v.rotation) == 2]
    through = {}
    for v in vs:
        a, b = v.rotation
        through[a], through[b] = b, a
    return splice(d, [v.id for v in vs], through) if vs else d


def is_theta(d: Diagram):
    es = edges(d).values()
    return len(d.vertices) == 2 and len(es) == 3 and all(
        d.node_of(e.darts[0]).id != d.node_of(e.darts[-1]).id for e in es)


def theta_shadows(total=5):
    """Theta-curve shadows with ``total`` crossings in which one edge never crosses itself.

    Two edges form a closed curve drawn from a knot shadow; the third edge
    is grown from a vertex on it, crossing one arc at a time, and ends on
    another arc.
    """
    circle = Diagram([Node(0, VERTEX, (0, 1))], {0: 1, 1: 0})
    seen = set()
    for base in [circle] + knot_shadows(total):
        k = base.crossing_count()
        frontier = [s for a in sorted(base.darts) for s in _start_edge(base, a)]
        for _ in range(total - k):
            grown = {}
            for g, tip in frontier:
                for c in sorted(g.darts):
                    for h in _cross_arc(g, tip, c):
                        grown.setdefault(shadow_key(h), (h, tip))
            frontier = list(grown.values())
        for g, tip in frontier:
            for c in sorted(g.darts):
                for h in _end_on_arc(g, tip, c):
                    h = _drop_bivalent(h)
                    key = shadow_key(h)
                    if key in seen or h.crossing_count() != total or not is_theta(h):
                        continue
                    seen.add(key)
                    yield h


@builder("kinoshita5")
def kinoshita5():
    """A five-crossing theta-curve, knotted, whose three constituent knots are all trivial."""
    for i, d in enumerate(s for s in theta_shadows() if adams_reduced(s)):
        ids = sorted(n.id for n in d.crossings)
        # the first crossing is fixed: the mirror image is found anyway
        for bits in itertools.product((True, False), repeat=len(ids) - 1):
            h = set_over(d, dict(zip(ids, (True,) + bits)))
            ks = constituents(h)
            if any(len(bracket(k)) > 1 for k in ks):
                continue
            if not knotted_theta(h):
                continue
            check(all(is_unknot_by_search(k) for k in ks), "kinoshita5 constituents unknot")
            check(shared_face(h) is not None, "kinoshita5 vertices share a face")
            return save("kinoshita5", h, "theta-curve with five crossings; each constituent "
                        "reduces to the crossingless unknot, while the Yamada polynomial "
                        "differs from that of the planar theta-curve", shadowIndex=i)
    check(False, "kinoshita5 found")


def straight_line_diagram(points, segments, over_first=True):
    """Diagram of a straight-line drawing; at each crossing the lower-indexed segment is over."""
    import math
    from fractions import Fraction as F

    def inter(p, q, r, s):
        d = (q[0] - p[0]) * (s[1] - r[1]) - (q[1] - p[1]) * (s[0] - r[0])
        if d == 0:
            return None
        t = F((r[0] - p[0]) * (s[1] - r[1]) - (r[1] - p[1]) * (s[0] - r[0]), d)
        u = F((r[0] - p[0]) * (q[1] - p[1]) - (r[1] - p[1]) * (q[0] - p[0]), d)
        if 0 < t < 1 and 0 < u < 1:
            return t, (p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1]))
        return None

    stops = {k: [(F(0), ("v", a)), (F(1), ("v", b))] for k, (a, b) in enumerate(segments)}
    crossings = []
    for k, l in itertools.combinations(range(len(segments)), 2):
        (a, b), (c, e) = segments[k], segments[l]
        if len({a, b, c, e}) < 4:
            continue
        hit = inter(points[a], points[b], points[c], points[e])
        if hit is None:
            continue
        t, xy = hit
        u = inter(points[c], points[e], points[a], points[b])[0]
        cid = len(crossings)
        crossings.append((xy, k, l))
        stops[k].append((t, ("c", cid)))
        stops[l].append((u, ("c", cid)))
    pos = {("v", i): p for i, p in enumerate(points)}
    pos.update({("c", i): xy for i, (xy, _, _) in enumerate(crossings)})
    darts = {}  # node -> list of (angle, dart, segment)
    pairing = {}
    nxt = 0
    for k, seq in stops.items():
        seq.sort()
        for (_, m1), (_, m2) in zip(seq, seq[1:]):
            x, y = nxt, nxt + 1
            nxt += 2
            pairing[x], pairing[y] = y, x
            for node, other, dart in ((m1, m2, x), (m2, m1, y)):
                (x0, y0), (x1, y1) = pos[node], pos[other]
                ang = math.atan2(float(y1 - y0), float(x1 - x0))
                darts.setdefault(node, []).append((ang, dart, k))
    nodes = []
    ids = {}
    for i in range(len(points)):
        ids[("v", i)] = len(ids)
    for i in range(len(crossings)):
        ids[("c", i)] = len(ids)
    for node, lst in darts.items():
        lst.sort()
        rot = tuple(dart for _, dart, _ in lst)
        if node[0] == "v":
            nodes.append(Node(ids[node], VERTEX, rot))
        else:
            _, k, l = crossings[node[1]]
            top = k if over_first else l
            slot = [seg for _, _, seg in lst].index(top)
            nodes.append(Node(ids[node], CROSSING, rot, (0, 2) if slot % 2 == 0 else (1, 3)))
    return Diagram(nodes, pairing)


@builder("K6")
def k6():
    """Complete graph on six vertices, straight-line drawing with three crossings."""
    rng = random.Random(6)
    outer = [(0, 0), (120, 0), (60, 100)]
    segs = list(itertools.combinations(range(6), 2))
    for _ in range(20000):
        inner = [(rng.randint(1, 119), rng.randint(1, 99)) for _ in range(3)]
        pts = outer + inner
        if any(y <= 0 or y >= 100 - abs(60 - x) * 100 // 60 for x, y in inner):
            continue
        try:
            d = straight_line_diagram(pts, segs)
        except TypeError:
            continue  # a point landed on a segment
        if d.crossing_count() == 3 and validate(d).ok and adams_reduced(d):
            return save("K6", d, "complete graph on six vertices, straight-line drawing with "
                        "three crossings", points=[list(p) for p in pts])
    check(False, "K6 found")


@builder("fig8-framework")
def fig8_framework():
    """Planar graph with two edges and two vertices replaced by minimal pieces."""
    from crossmin.framework import EDGE_TARGET, VERTEX_TARGET, PlanarFramework, Replacement, compose
    names = ["A", "B", "C", "v1", "v2"]
    pts = [(0, 0), (100, 0), (50, 90), (50, -40), (110, 70)]
    segs = [(0, 3), (3, 1), (1, 4), (4, 2), (2, 0), (0, 1)]
    pd = straight_line_diagram(pts, segs)
    p = PlanarFramework(pd)
    vid = {n: i for i, n in enumerate(names)}

    def edge_between(a, b):
        for eid, e in edges(pd).items():
            ends = {pd.node_of(e.darts[0]).id, pd.node_of(e.darts[-1]).id}
            if ends == {vid[a], vid[b]}:
                return eid, e.darts[0], e.darts[-1]

    bar = Diagram([Node(0, VERTEX, (0,)), Node(1, VERTEX, (1,))], pairing_of([(0, 1)]))

    def edge_rep(name, a, b, link):
        eid, x, y = edge_between(a, b)
        frag = disjoint_union(bar, link)
        return Replacement((EDGE_TARGET, eid), frag, {x: (0, 0), y: (1, 1)}, None, name)

    def vertex_rep(name, v, frag, attach_vertices, evidence):
        far = [pd.alpha(x) for x in pd.nodes[vid[v]].rotation]
        index = frag.face_index()
        for order in itertools.permutations(attach_vertices):
            for f in sorted(set(index.values())):
                outer = {}
                for fv in order:
                    ds = [x for x in frag.nodes[fv].rotation if index[x] == f]
                    if ds:
                        outer[fv] = min(ds)
                if len(outer) < len(order):
                    continue
                rep = Replacement((VERTEX_TARGET, vid[v]), frag,
                                  {pdart: (fv, outer[fv]) for pdart, fv in zip(far, order)},
                                  None, name)
                try:
                    compose(p, [rep])
                except Exception:
                    continue
                return rep, evidence
        check(False, f"{name} attaches to the framework")

    reps = [edge_rep("orange", "C", "A", fixtures.load("trefoil3")),
            edge_rep("red", "A", "B", fixtures.load("hopf2"))]
    theta_frag = fixtures.load("kinoshita5")
    k6_frag = fixtures.load("K6")
    evid = {}
    for name, v, frag, att, ev in (
            ("blue", "v1", theta_frag, sorted(n.id for n in theta_frag.vertices),
             {"route": "Asserted", "claim": 5,
              "citation": "Kinoshita theta-curve; crossing number 5 in the tables of theta-curves"}),
            ("purple", "v2", k6_frag, [0, 1],
             {"route": "Asserted", "claim": 3,
              "citation": "every diagram of K6 has at least 3 crossings, the crossing number "
                          "of the abstract graph K6"})):
        rep, e = vertex_rep(name, v, frag, att, ev)
        reps.append(rep)
        evid[name] = e
    g = compose(p, reps)
    total = sum(r.fragment.crossing_count() for r in reps)
    check(g.crossing_count() == total == 13, "fig8 crossing count is the sum of its pieces")
    check(any(len(v.rotation) % 2 for v in g.vertices), "fig8 composition has an odd vertex")
    payload = {"name": "fig8-framework",
               "note": "planar graph A, B, C, v1, v2; edges CA and AB become link pieces, "
                       "v1 a theta-curve and v2 a K6 diagram",
               "vertexNames": names,
               "framework": pd.to_json(),
               "replacements": [dict(r.to_json(), evidence=evid.get(r.name)) for r in reps]}
    fixtures.write("fig8-framework", payload)
    print(f"fig8-framework: {g.crossing_count()} crossings after composition")


def main(argv):
    todo = argv or list(BUILDERS)
    for name in todo:
        BUILDERS[name]()


if __name__ == "__main__":
    main(sys.argv[1:])
