"""Complete simplicial fan over a planar framework.

The framework is lifted to height 1 in a rank-3 lattice, its convex hull is
triangulated with all framework edges kept (constrained, deterministic), and
the fan is closed up with a completion ray along minus the sum of the lifted
generators plus one cone per hull-cycle edge. Walls carry provenance:
framework edge, added triangulation edge, or completion wall over a hull
vertex.
"""

import random
from dataclasses import dataclass

from stressfan import exactlinalg as xl
from stressfan.errors import DegenerateHull, FanInvalid
from stressfan.framework import edge_key

COMPLETION = "completion"


@dataclass(frozen=True)
class Ray:
    generator: tuple  # primitive vector in Z^3
    label: tuple  # ("vertex", id) or ("completion",)

    @property
    def is_completion(self):
        return self.label[0] == COMPLETION


@dataclass(frozen=True)
class Wall:
    rays: tuple  # pair of ray indices, sorted
    cones: tuple  # the two maximal-cone indices containing it, sorted
    kind: str  # "framework" | "added" | "completion"
    edge: tuple | None  # vertex-id pair for framework/added walls
    vertex: str | None  # hull vertex id for completion walls

    @property
    def key(self):
        if self.kind == COMPLETION:
            return (COMPLETION, self.vertex)
        return ("edge", *self.edge)


@dataclass(frozen=True)
class Triangulation:
    triangles: tuple  # sorted triples of vertex ids
    added_edges: tuple  # sorted pairs present in the triangulation but not the framework
    hull_cycle: tuple  # hull vertex ids, counterclockwise from the lex-smallest


@dataclass(frozen=True)
class Fan:
    rays: tuple  # Ray; index 0 is the completion ray, then vertex rays by id
    max_cones: tuple  # sorted triples of ray indices
    walls: tuple  # Wall
    hull_cycle: tuple
    triangulation: Triangulation

    def ray_index(self, label):
        for i, r in enumerate(self.rays):
            if r.label == label:
                return i
        raise KeyError(label)

    def vertex_ray(self, vid):
        return self.ray_index(("vertex", vid))

    def generators(self, cone):
        return [self.rays[i].generator for i in cone]

    def walls_by_kind(self, kind):
        return [w for w in self.walls if w.kind == kind]

    def to_json(self):
        rays = []
        for r in self.rays:
            label = {"kind": r.label[0]}
            if r.label[0] == "vertex":
                label["vertex"] = r.label[1]
            rays.append({"generator": list(r.generator), "label": label})
        walls = []
        for w in self.walls:
            walls.append(
                {
                    "rays": list(w.rays),
                    "cones": list(w.cones),
                    "kind": w.kind,
                    "edge": list(w.edge) if w.edge else None,
                    "vertex": w.vertex,
                }
            )
        return {
            "rays": rays,
            "max_cones": [list(c) for c in self.max_cones],
            "walls": walls,
            "hull_cycle": list(self.hull_cycle),
        }


@dataclass(frozen=True)
class FanReport:
    issues: tuple  # Issue-like (kind, message, witness) tuples

    @property
    def ok(self):
        return not self.issues


def lift(fw):
    """One ray (p, 1) per vertex, ordered by vertex id; already primitive."""
    return [Ray((p[0], p[1], 1), ("vertex", vid)) for vid, p in sorted(fw.vertices)]


def completion_ray(vertex_rays):
    """Primitive generator along minus the sum of the vertex rays.

    The third coordinate is -n/gcd < 0, so the ray always points below the
    height-1 plane.
    """
    total = (0, 0, 0)
    for r in vertex_rays:
        total = xl.vec_add(total, r.generator)
    return Ray(xl.primitive(xl.vec_scale(-1, total)), (COMPLETION,))


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def hull_cycle(fw):
    """Convex hull cycle, counterclockwise from the lex-smallest vertex.

    Collinear boundary vertices are kept (hull edges subdivided), so every
    framework vertex on the boundary appears in the cycle.
    """
    points = fw.points()
    order = sorted(fw.vertices, key=lambda item: (item[1][0], item[1][1], item[0]))
    pts = [(p, vid) for vid, p in order]
    if len(pts) < 3:
        raise DegenerateHull("need at least 3 vertices")
    if all(_cross(pts[0][0], pts[1][0], p) == 0 for p, _ in pts[2:]):
        raise DegenerateHull("all vertices are collinear")

    def chain(seq):
        out = []
        for p, vid in seq:
            while len(out) >= 2 and _cross(out[-2][0], out[-1][0], p) < 0:
                out.pop()
            out.append((p, vid))
        return out

    lower = chain(pts)
    upper = chain(pts[::-1])
    cycle = [vid for _, vid in lower[:-1]] + [vid for _, vid in upper[:-1]]
    # counterclockwise check: signed area of the cycle polygon must be positive
    area2 = 0
    for i in range(len(cycle)):
        a = points[cycle[i]]
        b = points[cycle[(i + 1) % len(cycle)]]
        area2 += a[0] * b[1] - b[0] * a[1]
    if area2 < 0:
        cycle = [cycle[0]] + cycle[1:][::-1]
    return tuple(cycle)


def triangulate(fw, order="lex"):
    """Deterministic constrained triangulation of the convex hull.

    Candidate diagonals (pairs that are not framework edges, do not pass
    through a vertex, and do not conflict with anything already present) are
    inserted greedily in a fixed order until the graph is a maximal planar
    subdivision, which on a point set is a triangulation containing every
    framework edge. ``order`` picks the vertex ranking: "lex" ascending by
    (x, y), "revlex" descending; the two generally give different, equally
    valid triangulations.
    """
    if order not in ("lex", "revlex"):
        raise ValueError(f"unknown triangulation order {order!r}")
    points = fw.points()
    cyc = hull_cycle(fw)  # raises DegenerateHull when there is no 2-dim hull

    ranked = sorted(points, key=lambda vid: (points[vid][0], points[vid][1], vid), reverse=(order == "revlex"))
    rank = {vid: i for i, vid in enumerate(ranked)}
    present = set(fw.edge_keys())

    def clean(u, v):
        a, b = points[u], points[v]
        for wid, c in points.items():
            if wid in (u, v):
                continue
            from stressfan.framework import _on_segment, _orient

            if _orient(a, b, c) == 0 and _on_segment(a, b, c):
                return False
        return True

    candidates = []
    ids = sorted(points)
    for i in range(len(ids)):
        for j in range(i + 1, len(ids)):
            key = edge_key(ids[i], ids[j])
            if key in present or not clean(*key):
                continue
            ru, rv = sorted((rank[key[0]], rank[key[1]]))
            candidates.append(((ru, rv), key))
    candidates.sort()

    from stressfan.framework import segments_conflict

    edges = sorted(present)
    added = []
    for _, (u, v) in candidates:
        ok = True
        for a, b in edges:
            if segments_conflict(points[u], points[v], points[a], points[b]):
                ok = False
                break
        if ok:
            edges.append((u, v))
            added.append((u, v))

    edge_set = set(edges)
    triangles = []
    for i in range(len(ids)):
        for j in range(i + 1, len(ids)):
            if edge_key(ids[i], ids[j]) not in edge_set:
                continue
            for k in range(j + 1, len(ids)):
                if edge_key(ids[i], ids[k]) not in edge_set or edge_key(ids[j], ids[k]) not in edge_set:
                    continue
                a, b, c = points[ids[i]], points[ids[j]], points[ids[k]]
                if _cross(a, b, c) == 0:
                    continue
                empty = True
                for wid, p in points.items():
                    if wid in (ids[i], ids[j], ids[k]):
                        continue
                    s1, s2, s3 = _cross(a, b, p), _cross(b, c, p), _cross(c, a, p)
                    if (s1 > 0 and s2 > 0 and s3 > 0) or (s1 < 0 and s2 < 0 and s3 < 0):
                        empty = False
                        break
                if empty:
                    triangles.append((ids[i], ids[j], ids[k]))

    # sanity: triangle areas tile the hull exactly
    hull_area2 = 0
    for i in range(len(cyc)):
        a = points[cyc[i]]
        b = points[cyc[(i + 1) % len(cyc)]]
        hull_area2 += a[0] * b[1] - b[0] * a[1]
    tri_area2 = sum(abs(_cross(points[t[0]], points[t[1]], points[t[2]])) for t in triangles)
    if tri_area2 != abs(hull_area2):
        raise FanInvalid(f"triangulation does not tile the hull ({tri_area2} vs {abs(hull_area2)})")
    n_interior = len(points) - len(cyc)
    if len(triangles) != 2 * n_interior + len(cyc) - 2:
        raise FanInvalid("triangle count violates the Euler relation")
    return Triangulation(tuple(sorted(triangles)), tuple(sorted(added)), cyc)


def build_fan(fw, tri):
    """Maximal cones over the triangles plus one cone per hull-cycle edge.

    Raises FanInvalid if a maximal cone is degenerate or some wall is not in
    exactly two maximal cones.
    """
    vertex_rays = lift(fw)
    v0 = completion_ray(vertex_rays)
    rays = (v0, *vertex_rays)
    index = {r.label: i for i, r in enumerate(rays)}

    cones = []
    for t in tri.triangles:
        cones.append(tuple(sorted(index[("vertex", vid)] for vid in t)))
    cyc = tri.hull_cycle
    for i in range(len(cyc)):
        u, v = cyc[i], cyc[(i + 1) % len(cyc)]
        cones.append(tuple(sorted((0, index[("vertex", u)], index[("vertex", v)]))))
    max_cones = tuple(cones)

    for cone in max_cones:
        if xl.det([rays[i].generator for i in cone]) == 0:
            raise FanInvalid(f"degenerate maximal cone {cone}")

    facet_map = {}
    for ci, cone in enumerate(max_cones):
        for drop in range(3):
            facet = tuple(x for k, x in enumerate(cone) if k != drop)
            facet_map.setdefault(facet, []).append(ci)

    framework_edges = set(fw.edge_keys())
    walls = []
    for facet in sorted(facet_map):
        owners = facet_map[facet]
        if len(owners) != 2:
            raise FanInvalid(f"wall {facet} lies in {len(owners)} maximal cones")
        a, b = facet
        if a == 0:
            vid = rays[b].label[1]
            walls.append(Wall(facet, tuple(sorted(owners)), COMPLETION, None, vid))
        else:
            eid = edge_key(rays[a].label[1], rays[b].label[1])
            kind = "framework" if eid in framework_edges else "added"
            walls.append(Wall(facet, tuple(sorted(owners)), kind, eid, None))
    return Fan(rays, max_cones, tuple(walls), cyc, tri)


def build(fw, order="lex"):
    """Convenience: triangulate then build the fan."""
    return build_fan(fw, triangulate(fw, order))


def _adjugate3(m):
    (a, b, c), (d, e, f), (g, h, i) = m
    return (
        (e * i - f * h, c * h - b * i, b * f - c * e),
        (f * g - d * i, a * i - c * g, c * d - a * f),
        (d * h - e * g, b * g - a * h, a * e - b * d),
    )


def validate_fan(fan, samples=1000, seed=20260811):
    """Simpliciality, the wall condition, and completeness sampling.

    Sampling draws pseudorandom integer directions with a fixed seed; each
    must lie in at least one maximal cone and in the interior of at most one.
    Returns a report with structured issues; never raises.
    """
    issues = []
    for cone in fan.max_cones:
        if len(cone) != 3 or xl.det(fan.generators(cone)) == 0:
            issues.append(("not_simplicial", f"maximal cone {cone} is degenerate", cone))

    facet_count = {}
    for cone in fan.max_cones:
        for drop in range(3):
            facet = tuple(x for k, x in enumerate(cone) if k != drop)
            facet_count[facet] = facet_count.get(facet, 0) + 1
    for facet, count in sorted(facet_count.items()):
        if count != 2:
            issues.append(("wall_condition", f"wall {facet} lies in {count} maximal cones", facet))
    wall_keys = {w.rays for w in fan.walls}
    if wall_keys != set(facet_count):
        issues.append(("wall_condition", "stored walls disagree with maximal-cone facets", ()))

    if not issues:
        # columns of each cone's generator matrix are the ray generators
        data = []
        for cone in fan.max_cones:
            g = fan.generators(cone)
            m = tuple(tuple(g[r][c] for r in range(3)) for c in range(3))
            data.append((_adjugate3(m), xl.det(m)))
        rng = random.Random(seed)
        for _ in range(samples):
            d = (0, 0, 0)
            while not any(d):
                d = (rng.randint(-9, 9), rng.randint(-9, 9), rng.randint(-9, 9))
            inside = 0
            interior = 0
            for adj, det in data:
                coords = [sum(adj[r][c] * d[c] for c in range(3)) for r in range(3)]
                if det < 0:
                    coords = [-x for x in coords]
                if all(x >= 0 for x in coords):
                    inside += 1
                    if all(x > 0 for x in coords):
                        interior += 1
            if inside < 1:
                issues.append(("not_complete", f"direction {d} lies in no maximal cone", d))
                break
            if interior > 1:
                issues.append(("overlap", f"direction {d} is interior to {interior} maximal cones", d))
                break
    return FanReport(tuple(issues))
