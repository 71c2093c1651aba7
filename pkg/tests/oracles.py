"""Independent brute-force oracles, written without the library's helpers."""


def a_pairs(rotation, over, kind):
    """Smoothing pairs derived from the overstrand sweep.

    Turning the overstrand counterclockwise sweeps the sectors that start
    at each overstrand dart; the A-smoothing merges those two sectors, so
    each dart is joined to the dart just before it in rotation order,
    starting from the dart after an overstrand dart.
    """
    i = over[0]
    if kind != "A":
        i = (i + 1) % 4
    r = rotation
    return {r[(i + 1) % 4]: r[(i + 2) % 4], r[(i + 2) % 4]: r[(i + 1) % 4],
            r[(i + 3) % 4]: r[i], r[i]: r[(i + 3) % 4]}


def count_circles(d, kind):
    """Circles of the all-A or all-A-inverse state, by walking darts."""
    join = {}
    for n in d.nodes.values():
        join.update(a_pairs(n.rotation, n.over, kind))
    seen = set()
    circles = 0
    for start in d.pairing:
        if start in seen:
            continue
        circles += 1
        x = start
        while x not in seen:
            seen.add(x)
            y = d.pairing[x]
            seen.add(y)
            x = join[y]
    return circles + d.free_loops


def grey_on_one_circle(d, kind):
    """Crossings whose two state arcs lie on the same circle."""
    join = {}
    for n in d.nodes.values():
        join.update(a_pairs(n.rotation, n.over, kind))
    label = {}
    for start in sorted(d.pairing):
        if start in label:
            continue
        x = start
        while x not in label:
            label[x] = start
            y = d.pairing[x]
            label[y] = start
            x = join[y]
    bad = []
    for n in d.nodes.values():
        pairs = a_pairs(n.rotation, n.over, kind)
        a = n.rotation[0]
        b = next(x for x in n.rotation if x != a and x != pairs[a])
        if label[a] == label[b]:
            bad.append(n.id)
    return sorted(bad)


def face_count(d):
    """Faces traced with the face on the left: x -> rot^-1(pairing(x))."""
    prev = {}
    for n in d.nodes.values():
        r = n.rotation
        for i, x in enumerate(r):
            prev[x] = r[i - 1]
    seen = set()
    faces = 0
    for start in d.pairing:
        if start in seen:
            continue
        faces += 1
        x = start
        while x not in seen:
            seen.add(x)
            x = prev[d.pairing[x]]
    return faces


def graph_components(d):
    parent = {}

    def find(a):
        while parent.setdefault(a, a) != a:
            a = parent[a]
        return a

    owner = {x: n.id for n in d.nodes.values() for x in n.rotation}
    for n in d.nodes.values():
        find(n.id)
    for a, b in d.pairing.items():
        parent[find(owner[a])] = find(owner[b])
    return len({find(n) for n in d.nodes}) + d.free_loops


def euler_ok(d):
    """V - E + F = 2 per connected component (free loops excluded)."""
    v = len(d.nodes)
    e = len(d.pairing) // 2
    f = face_count(d)
    k = graph_components(d) - d.free_loops
    return v - e + f == 2 * k
