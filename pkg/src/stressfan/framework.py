"""Framework data model, validation, and the direct balancing route.

Two input shapes: ``PlanarFramework`` (an embedded graph with integer vertex
coordinates, the classical planar tensegrity model) and ``KFramework``
(edges = (k-1)-dimensional rational affine subspaces, faces = k-dimensional,
plus incidences carrying a sample point that fixes the side of the edge the
face's normal points to).

The balancing condition at an edge e lives in the quotient lattice N/(N∩e):
sum over incident faces of w(face) times the primitive image of the incidence
normal is zero. ``self_stress_basis`` solves it exactly; this is the
triangulation-free route that serves as the oracle for the toric one.
"""

from dataclasses import dataclass
from fractions import Fraction

from stressfan import exactlinalg as xl
from stressfan.errors import DegenerateEdge, SampleOnEdge


@dataclass(frozen=True)
class PlanarFramework:
    vertices: tuple  # of (id, (x, y)), integer coordinates
    edges: tuple  # of (u, v) vertex-id pairs

    def points(self):
        return {vid: tuple(p) for vid, p in self.vertices}

    def edge_keys(self):
        """Canonical sorted list of sorted vertex-id pairs."""
        return sorted(set(edge_key(u, v) for u, v in self.edges))


def edge_key(u, v):
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True)
class KEdge:
    id: str
    point: tuple  # Fractions, length dim
    dirs: tuple  # (k-1) integer direction vectors


@dataclass(frozen=True)
class KFace:
    id: str
    point: tuple
    dirs: tuple  # k integer direction vectors


@dataclass(frozen=True)
class KIncidence:
    edge: str
    face: str
    sample: tuple  # Fractions; on the face, off the edge


@dataclass(frozen=True)
class KFramework:
    dim: int
    k: int
    edges: tuple
    faces: tuple
    incidences: tuple

    def edge_by_id(self):
        return {e.id: e for e in self.edges}

    def face_by_id(self):
        return {f.id: f for f in self.faces}

    def incident_faces(self, edge_id):
        return [inc for inc in self.incidences if inc.edge == edge_id]


@dataclass(frozen=True)
class IncidenceNormal:
    edge: str
    face: str
    vector: tuple  # primitive, in quotient-lattice coordinates


@dataclass(frozen=True)
class Issue:
    kind: str
    message: str
    where: tuple = ()


@dataclass(frozen=True)
class ValidationReport:
    failures: tuple
    warnings: tuple

    @property
    def ok(self):
        return not self.failures


@dataclass(frozen=True)
class BalancingSystem:
    row_keys: tuple  # (edge-or-vertex id, quotient coordinate)
    col_keys: tuple  # faces, or sorted planar edge pairs
    rows: tuple  # integer rows, one per row key

    @property
    def shape(self):
        return (len(self.row_keys), len(self.col_keys))


@dataclass(frozen=True)
class StressBasis:
    keys: tuple  # column keys the entries refer to
    vectors: tuple  # canonical integer vectors

    @property
    def dim(self):
        return len(self.vectors)

    def to_maps(self):
        return [{k: Fraction(x) for k, x in zip(self.keys, vec)} for vec in self.vectors]


def _orient(a, b, c):
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def _on_segment(a, b, c):
    # c collinear with a, b assumed; is c within the bounding box?
    return (
        min(a[0], b[0]) <= c[0] <= max(a[0], b[0])
        and min(a[1], b[1]) <= c[1] <= max(a[1], b[1])
    )


def segments_conflict(p1, p2, p3, p4):
    """True iff the closed segments meet at a point that is not a shared endpoint.

    Covers proper crossings, T-junctions and collinear overlaps exactly
    (integer orientation tests only).
    """
    o1 = _orient(p1, p2, p3)
    o2 = _orient(p1, p2, p4)
    o3 = _orient(p3, p4, p1)
    o4 = _orient(p3, p4, p2)
    if (o1 > 0) != (o2 > 0) and o1 != 0 and o2 != 0 and (o3 > 0) != (o4 > 0) and o3 != 0 and o4 != 0:
        return True
    for a, b, c, oc in ((p1, p2, p3, o1), (p1, p2, p4, o2), (p3, p4, p1, o3), (p3, p4, p2, o4)):
        if oc == 0 and c != a and c != b and _on_segment(a, b, c):
            return True
    return False


def validate_planar(fw):
    """Check the planar straight-line-graph invariants.

    Failures: duplicate ids or points, unknown endpoints, loops, repeated
    edges, a vertex interior to an edge, and pairwise segment conflicts.
    Low vertex degree is a warning, not a failure — the balancing system
    stays well-defined.
    """
    failures = []
    warnings = []
    seen_ids = set()
    for vid, p in fw.vertices:
        if vid in seen_ids:
            failures.append(Issue("duplicate_id", f"vertex id {vid!r} repeated", (vid,)))
        seen_ids.add(vid)
        if len(p) != 2 or not all(isinstance(c, int) for c in p):
            failures.append(Issue("bad_coordinates", f"vertex {vid!r} has non-integer coordinates", (vid,)))
    points = fw.points()
    by_point = {}
    for vid, p in fw.vertices:
        p = tuple(p)
        if p in by_point:
            failures.append(Issue("duplicate_point", f"vertices {by_point[p]!r} and {vid!r} share point {p}", (by_point[p], vid)))
        else:
            by_point[p] = vid

    seen_edges = set()
    good_edges = []
    for u, v in fw.edges:
        if u not in points or v not in points:
            failures.append(Issue("unknown_vertex", f"edge ({u!r}, {v!r}) references a missing vertex", (u, v)))
            continue
        if u == v:
            failures.append(Issue("loop", f"edge ({u!r}, {v!r}) is a loop", (u, v)))
            continue
        key = edge_key(u, v)
        if key in seen_edges:
            failures.append(Issue("repeated_edge", f"edge {key} repeated", key))
            continue
        seen_edges.add(key)
        good_edges.append(key)

    if failures:
        return ValidationReport(tuple(failures), tuple(warnings))

    for u, v in good_edges:
        a, b = points[u], points[v]
        for wid, c in points.items():
            if wid in (u, v):
                continue
            if _orient(a, b, c) == 0 and _on_segment(a, b, c):
                failures.append(Issue("vertex_on_edge", f"vertex {wid!r} lies on edge ({u!r}, {v!r})", (wid, u, v)))
    for i in range(len(good_edges)):
        for j in range(i + 1, len(good_edges)):
            (u1, v1), (u2, v2) = good_edges[i], good_edges[j]
            if segments_conflict(points[u1], points[v1], points[u2], points[v2]):
                failures.append(Issue("segments_cross", f"edges {good_edges[i]} and {good_edges[j]} intersect away from a shared endpoint", (good_edges[i], good_edges[j])))

    degree = {vid: 0 for vid in points}
    for u, v in good_edges:
        degree[u] += 1
        degree[v] += 1
    for vid in sorted(degree):
        if degree[vid] < 3:
            warnings.append(Issue("low_degree", f"vertex {vid!r} has degree {degree[vid]}", (vid,)))
    return ValidationReport(tuple(failures), tuple(warnings))


def _to_fractions(seq):
    return tuple(Fraction(x) for x in seq)


def _in_span(vec, dirs, dim):
    """Exact rational membership of vec in the span of the direction vectors."""
    if not dirs:
        return all(x == 0 for x in vec)
    return xl.in_rowspan(vec, list(dirs), dim)


def quotient_map(edge, dim):
    """Integer projection presenting the quotient lattice N/(N ∩ e).

    Returns ``(rows, quotient_rank)``: a (dim-r)×dim integer matrix whose rows
    are a basis of the quotient presentation, computed from the Smith normal
    form of the direction matrix, so the choice of complement is canonical.
    Composing with any edge direction gives zero; the map is surjective onto
    Z^(dim-r).
    """
    dirs = edge.dirs
    if not dirs:
        ident = tuple(tuple(1 if i == j else 0 for j in range(dim)) for i in range(dim))
        return ident, dim
    q = len(dirs)
    cols = [[dirs[j][i] for j in range(q)] for i in range(dim)]
    diag, _, sinv, _, _ = xl.smith_transforms(cols, dim, q)
    r = sum(1 for d in diag if d != 0)
    if r < q:
        raise DegenerateEdge(f"edge {edge.id!r} has dependent direction vectors")
    rows = tuple(tuple(sinv[i]) for i in range(r, dim))
    return rows, dim - r


def incidence_normal(edge, face, sample, dim):
    """Primitive quotient image of (sample - edge base point).

    Only the side of the edge matters: replacing the sample by any rational
    point of the face strictly on the same side leaves the result unchanged.
    """
    diff = tuple(Fraction(s) - Fraction(p) for s, p in zip(sample, edge.point, strict=True))
    if _in_span(diff, edge.dirs, dim):
        raise SampleOnEdge(f"sample for ({edge.id!r}, {face!r}) lies on the edge")
    ints = xl.clear_denominators(diff)
    proj, _ = quotient_map(edge, dim)
    image = tuple(xl.dot(row, ints) for row in proj)
    return IncidenceNormal(edge.id, face, xl.primitive(image))


def validate_general(fw):
    """Check the KFramework invariants exactly.

    Containment (each incidence's face contains its edge), sample placement,
    rationality (by construction), and genericity: incident faces pairwise
    distinct as affine subspaces and per-edge incidence count 0 or >= 3.
    """
    failures = []
    warnings = []
    dim, k = fw.dim, fw.k
    if not (1 <= k <= dim):
        failures.append(Issue("bad_rank", f"k={k} outside 1..dim={dim}"))
        return ValidationReport(tuple(failures), ())

    for coll, want_dirs, what in ((fw.edges, k - 1, "edge"), (fw.faces, k, "face")):
        seen = set()
        for item in coll:
            if item.id in seen:
                failures.append(Issue("duplicate_id", f"{what} id {item.id!r} repeated", (item.id,)))
            seen.add(item.id)
            if len(item.point) != dim:
                failures.append(Issue("bad_coordinates", f"{what} {item.id!r} point has wrong length", (item.id,)))
            if len(item.dirs) != want_dirs or any(len(d) != dim for d in item.dirs):
                failures.append(Issue("bad_directions", f"{what} {item.id!r} needs {want_dirs} direction vectors of length {dim}", (item.id,)))
            elif item.dirs and xl.rank(list(item.dirs), dim) < len(item.dirs):
                failures.append(Issue("degenerate_subspace", f"{what} {item.id!r} has dependent directions", (item.id,)))
    if failures:
        return ValidationReport(tuple(failures), tuple(warnings))

    edges = fw.edge_by_id()
    faces = fw.face_by_id()
    seen_pairs = set()
    for inc in fw.incidences:
        if inc.edge not in edges or inc.face not in faces:
            failures.append(Issue("unknown_id", f"incidence ({inc.edge!r}, {inc.face!r}) references a missing id", (inc.edge, inc.face)))
            continue
        if (inc.edge, inc.face) in seen_pairs:
            failures.append(Issue("repeated_incidence", f"incidence ({inc.edge!r}, {inc.face!r}) repeated", (inc.edge, inc.face)))
            continue
        seen_pairs.add((inc.edge, inc.face))
        e, f = edges[inc.edge], faces[inc.face]
        base_shift = tuple(Fraction(a) - Fraction(b) for a, b in zip(e.point, f.point, strict=True))
        contained = _in_span(base_shift, f.dirs, dim) and all(_in_span(d, f.dirs, dim) for d in e.dirs)
        if not contained:
            failures.append(Issue("edge_not_in_face", f"face {f.id!r} does not contain edge {e.id!r}", (e.id, f.id)))
            continue
        sample_shift = tuple(Fraction(a) - Fraction(b) for a, b in zip(inc.sample, f.point, strict=True))
        if not _in_span(sample_shift, f.dirs, dim):
            failures.append(Issue("sample_off_face", f"sample of ({e.id!r}, {f.id!r}) is not on the face", (e.id, f.id)))
            continue
        edge_shift = tuple(Fraction(a) - Fraction(b) for a, b in zip(inc.sample, e.point, strict=True))
        if _in_span(edge_shift, e.dirs, dim):
            failures.append(Issue("sample_on_edge", f"sample of ({e.id!r}, {f.id!r}) lies on the edge", (e.id, f.id)))

    if failures:
        return ValidationReport(tuple(failures), tuple(warnings))

    for e in fw.edges:
        incs = fw.incident_faces(e.id)
        if not incs:
            continue
        if len(incs) < 3:
            failures.append(Issue("too_few_faces", f"edge {e.id!r} has {len(incs)} incident faces (needs 0 or >= 3)", (e.id,)))
        for i in range(len(incs)):
            for j in range(i + 1, len(incs)):
                fa, fb = faces[incs[i].face], faces[incs[j].face]
                shift = tuple(Fraction(a) - Fraction(b) for a, b in zip(fa.point, fb.point, strict=True))
                same = (
                    _in_span(shift, fb.dirs, dim)
                    and all(_in_span(d, fb.dirs, dim) for d in fa.dirs)
                    and all(_in_span(d, fa.dirs, dim) for d in fb.dirs)
                )
                if same:
                    failures.append(Issue("genericity", f"faces {fa.id!r} and {fb.id!r} at edge {e.id!r} are the same subspace", (e.id, fa.id, fb.id)))
    return ValidationReport(tuple(failures), tuple(warnings))


def planar_to_general(fw):
    """Planar frameworks as the d=2, k=1 case.

    Graph vertices become the point-edges, graph edges become the line-faces,
    and each endpoint pair contributes two incidences sampled at the opposite
    endpoint.
    """
    points = fw.points()
    kedges = tuple(
        KEdge(vid, _to_fractions(points[vid]), ()) for vid, _ in sorted(fw.vertices)
    )
    kfaces = []
    incidences = []
    for u, v in sorted(set(edge_key(a, b) for a, b in fw.edges)):
        fid = f"{u}--{v}"
        pu, pv = points[u], points[v]
        direction = xl.primitive(xl.vec_sub(pv, pu))
        kfaces.append(KFace(fid, _to_fractions(pu), (direction,)))
        incidences.append(KIncidence(u, fid, _to_fractions(pv)))
        incidences.append(KIncidence(v, fid, _to_fractions(pu)))
    return KFramework(2, 1, kedges, tuple(kfaces), tuple(incidences))


def balancing_matrix(fw):
    """The exact linear system whose kernel is the self-stress space.

    Rows are (edge id, quotient coordinate) pairs — for planar input, (vertex
    id, coordinate) — columns are faces (planar: edges as sorted id pairs).
    Edges with no incidences contribute no rows.
    """
    if isinstance(fw, PlanarFramework):
        points = fw.points()
        col_keys = tuple(fw.edge_keys())
        col_index = {k: i for i, k in enumerate(col_keys)}
        row_keys = []
        rows = []
        for vid, _ in sorted(fw.vertices):
            p = points[vid]
            vrows = [[0] * len(col_keys) for _ in range(2)]
            touched = False
            for u, v in fw.edges:
                if vid not in (u, v):
                    continue
                other = v if vid == u else u
                direction = xl.primitive(xl.vec_sub(points[other], p))
                c = col_index[edge_key(u, v)]
                vrows[0][c] = direction[0]
                vrows[1][c] = direction[1]
                touched = True
            if touched:
                for coord in range(2):
                    row_keys.append((vid, coord))
                    rows.append(tuple(vrows[coord]))
        return BalancingSystem(tuple(row_keys), col_keys, tuple(rows))

    col_keys = tuple(sorted(f.id for f in fw.faces))
    col_index = {k: i for i, k in enumerate(col_keys)}
    row_keys = []
    rows = []
    for e in sorted(fw.edges, key=lambda e: e.id):
        incs = fw.incident_faces(e.id)
        if not incs:
            continue
        _, qrank = quotient_map(e, fw.dim)
        erows = [[0] * len(col_keys) for _ in range(qrank)]
        for inc in incs:
            n = incidence_normal(e, inc.face, inc.sample, fw.dim)
            c = col_index[inc.face]
            for coord in range(qrank):
                erows[coord][c] = n.vector[coord]
        for coord in range(qrank):
            row_keys.append((e.id, coord))
            rows.append(tuple(erows[coord]))
    return BalancingSystem(tuple(row_keys), col_keys, tuple(rows))


def self_stress_basis(fw):
    """Canonical basis of the self-stress space (the direct route).

    Empty basis iff the framework is not a tensegrity.
    """
    system = balancing_matrix(fw)
    vectors = xl.kernel_basis(list(system.rows), len(system.col_keys))
    return StressBasis(system.col_keys, tuple(vectors))
