"""Per-edge local fans and the glued balancing system.

For an edge whose quotient lattice has rank 2, the incident faces project to
pairwise non-parallel rays in the plane; when all of them fit in a closed
half-plane a completion ray along minus their sum closes the fan. Gluing is
purely combinatorial: faces are identified across local fans by id, and the
glued system is the per-edge rank-2 balancing with every completion unknown
pinned to zero. Its kernel must coincide exactly with the direct route —
that identity is asserted on every call and is the operational content of
the construction.
"""

import functools
from dataclasses import dataclass

from stressfan import exactlinalg as xl
from stressfan.errors import GenericityViolation, UnsupportedCodim
from stressfan.framework import StressBasis, balancing_matrix, incidence_normal, quotient_map, self_stress_basis

COMPLETION = "completion"


@dataclass(frozen=True)
class LocalFan:
    edge: str
    rays: tuple  # primitive rank-2 vectors, circularly sorted
    labels: tuple  # ("face", face id) or ("completion",) per ray

    @property
    def completion_index(self):
        for i, lab in enumerate(self.labels):
            if lab[0] == COMPLETION:
                return i
        return None

    def cones(self):
        """The 2-dimensional cones, as circularly adjacent ray index pairs."""
        n = len(self.rays)
        return [(i, (i + 1) % n) for i in range(n)]

    def to_json(self):
        rays = []
        for v, lab in zip(self.rays, self.labels):
            entry = {"generator": list(v), "label": {"kind": lab[0]}}
            if lab[0] == "face":
                entry["label"]["face"] = lab[1]
            rays.append(entry)
        return {"edge": self.edge, "rays": rays}


def _cross2(u, v):
    return u[0] * v[1] - u[1] * v[0]


def _angle_class(v):
    # 0 for the closed upper half (positive x-axis included), 1 below
    return 0 if (v[1] > 0 or (v[1] == 0 and v[0] > 0)) else 1


def _circular_sort(rays):
    def cmp(u, v):
        hu, hv = _angle_class(u), _angle_class(v)
        if hu != hv:
            return -1 if hu < hv else 1
        c = _cross2(u, v)
        if c == 0:
            return 0
        return -1 if c > 0 else 1

    return sorted(rays, key=functools.cmp_to_key(cmp))


def _in_closed_half_plane(sorted_rays):
    """True iff some circular gap between consecutive rays is at least pi."""
    n = len(sorted_rays)
    if n == 1:
        return True
    for i in range(n):
        u = sorted_rays[i]
        w = sorted_rays[(i + 1) % n]
        c = _cross2(u, w)
        if c < 0 or (c == 0 and u[0] * w[0] + u[1] * w[1] < 0):
            return True
    return False


def local_fan(fw, edge_id):
    """Complete rank-2 fan of an edge's incident face rays.

    Raises UnsupportedCodim when the quotient rank is not 2 (the direct
    balancing route still covers those edges) and GenericityViolation when
    two faces project to parallel rays.
    """
    edge = fw.edge_by_id()[edge_id]
    _, qrank = quotient_map(edge, fw.dim)
    if qrank != 2:
        raise UnsupportedCodim(f"edge {edge_id!r} has quotient rank {qrank}, local fans need 2")
    incs = fw.incident_faces(edge_id)
    by_ray = []
    for inc in incs:
        n = incidence_normal(edge, inc.face, inc.sample, fw.dim)
        by_ray.append((n.vector, ("face", inc.face)))
    for i in range(len(by_ray)):
        for j in range(i + 1, len(by_ray)):
            if _cross2(by_ray[i][0], by_ray[j][0]) == 0:
                raise GenericityViolation(
                    f"faces {by_ray[i][1][1]!r} and {by_ray[j][1][1]!r} are parallel at edge {edge_id!r}"
                )
    order = {v: lab for v, lab in by_ray}
    rays = _circular_sort([v for v, _ in by_ray])
    labels = [order[v] for v in rays]
    if _in_closed_half_plane(rays):
        total = (0, 0)
        for v in rays:
            total = (total[0] + v[0], total[1] + v[1])
        extra = xl.primitive((-total[0], -total[1]))
        if extra in set(rays):
            raise GenericityViolation(f"completion ray coincides with a face ray at edge {edge_id!r}")
        rays = _circular_sort(rays + [extra])
        labels = [order.get(v, (COMPLETION,)) for v in rays]
        if _in_closed_half_plane(rays):
            raise GenericityViolation(f"completion ray failed to complete the fan at edge {edge_id!r}")
    return LocalFan(edge_id, tuple(rays), tuple(labels))


def local_fans(fw):
    """Local fans for every edge with incidences, keyed by edge id."""
    out = {}
    for e in sorted(fw.edges, key=lambda e: e.id):
        if fw.incident_faces(e.id):
            out[e.id] = local_fan(fw, e.id)
    return out


def glued_system(fw):
    """The glued balancing system with explicit completion unknowns.

    Unknowns are the faces (sorted by id) followed by one completion unknown
    per local fan that has a completion ray; equations are the two balancing
    coordinates per edge plus one pinning row per completion unknown. With
    the pins applied this is exactly the direct balancing system.
    """
    lfans = local_fans(fw)
    face_keys = tuple(sorted(f.id for f in fw.faces))
    aux_keys = tuple(
        (eid, COMPLETION) for eid in sorted(lfans) if lfans[eid].completion_index is not None
    )
    keys = face_keys + aux_keys
    index = {k: i for i, k in enumerate(keys)}
    rows = []
    row_keys = []
    for eid in sorted(lfans):
        lf = lfans[eid]
        for coord in range(2):
            row = [0] * len(keys)
            for v, lab in zip(lf.rays, lf.labels):
                col = index[lab[1]] if lab[0] == "face" else index[(eid, COMPLETION)]
                row[col] = v[coord]
            rows.append(tuple(row))
            row_keys.append((eid, coord))
    for k in aux_keys:
        row = [0] * len(keys)
        row[index[k]] = 1
        rows.append(tuple(row))
        row_keys.append(("pin", *k))
    return keys, tuple(row_keys), tuple(rows), lfans


def glued_stress_space(fw, _check=True):
    """Kernel of the glued system, reported per face.

    Must equal the direct route exactly; asserted unless _check is False
    (compare_routes disables the assert to report disagreement instead).
    """
    keys, _, rows, _ = glued_system(fw)
    nfaces = len([k for k in keys if isinstance(k, str)])
    kernel = xl.kernel_basis(list(rows), len(keys))
    face_keys = keys[:nfaces]
    vectors = []
    for vec in kernel:
        assert all(x == 0 for x in vec[nfaces:])
        vectors.append(tuple(vec[:nfaces]))
    basis = StressBasis(tuple(face_keys), tuple(vectors))
    if _check:
        direct = self_stress_basis(fw)
        if basis.keys != direct.keys or basis.vectors != direct.vectors:
            raise AssertionError(
                f"glued system disagrees with the direct balancing route: {basis} vs {direct}"
            )
    return basis


@dataclass(frozen=True)
class GluedBalanceReport:
    rows: tuple  # (edge id, residue vector) per local fan and stress vector

    @property
    def ok(self):
        return all(all(r == 0 for r in res) for _, res in self.rows)


def check_glued_balancing(fw, stress):
    """Rank-2 balancing of a face-weight assignment at every local fan.

    ``stress`` maps face ids to rationals; completion rays carry weight 0.
    Both coordinates of the weighted ray sum must vanish at every edge.
    """
    reports = []
    for eid, lf in sorted(local_fans(fw).items()):
        total = [0, 0]
        for v, lab in zip(lf.rays, lf.labels):
            w = stress.get(lab[1], 0) if lab[0] == "face" else 0
            total[0] += w * v[0]
            total[1] += w * v[1]
        reports.append((eid, tuple(total)))
    return GluedBalanceReport(tuple(reports))
