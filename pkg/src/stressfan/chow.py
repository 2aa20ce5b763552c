"""Toric route: intersection numbers on the fan and the constrained solve.

Divisor classes modulo the three linear relations pair with wall curve
classes through exact rational intersection numbers; imposing zero on every
added and completion wall carves out the subspace isomorphic to the
framework's self-stress space. Everything here is exact; the direct
balancing route is the independent cross-check.
"""

from dataclasses import dataclass
from fractions import Fraction

from stressfan import exactlinalg as xl
from stressfan import fans as fans_mod
from stressfan.errors import DegenerateFan, NotAWall
from stressfan.framework import PlanarFramework, StressBasis, self_stress_basis


@dataclass(frozen=True)
class WallRelation:
    """The integral relation alpha*u_a + sum(lam_r * v_r) + beta*u_b = 0.

    u_a and u_b are the rays of the two adjacent maximal cones opposite the
    wall; coefficients are coprime integers with alpha, beta > 0.
    """

    wall: object
    cone_a: int
    cone_b: int
    u_a: int
    u_b: int
    alpha: int
    beta: int
    lam: tuple  # (ray index, coefficient) for the two wall rays


def multiplicity(fan, cone):
    """Index of the sublattice spanned by the cone's ray generators.

    Equals |det| for full-dimensional cones and 1 for any primitive ray.
    """
    return xl.lattice_index(fan.generators(cone))


def wall_relation(fan, wall):
    if len(wall.cones) != 2:
        raise NotAWall(f"wall {wall.rays} lies in {len(wall.cones)} cones")
    ca, cb = wall.cones
    u_a = next(i for i in fan.max_cones[ca] if i not in wall.rays)
    u_b = next(i for i in fan.max_cones[cb] if i not in wall.rays)
    order = (u_a, *wall.rays, u_b)
    rows = [[fan.rays[i].generator[coord] for i in order] for coord in range(3)]
    kernel = xl.kernel_basis(rows, 4)
    if len(kernel) != 1:
        raise NotAWall(f"rays around wall {wall.rays} admit {len(kernel)} relations")
    vec = kernel[0]
    if vec[0] < 0:
        vec = tuple(-x for x in vec)
    alpha, l1, l2, beta = vec
    if alpha <= 0 or beta <= 0:
        raise NotAWall(f"wall {wall.rays}: opposite rays are not on opposite sides")
    return WallRelation(wall, ca, cb, u_a, u_b, alpha, beta, ((wall.rays[0], l1), (wall.rays[1], l2)))


def _wall_entries(fan, wall, mult_cache):
    """Nonzero intersection numbers D_ray . V(wall), as a dict ray -> Fraction."""
    rel = wall_relation(fan, wall)
    mt = mult_cache(wall.rays)
    ma = mult_cache(fan.max_cones[rel.cone_a])
    mb = mult_cache(fan.max_cones[rel.cone_b])
    entries = {
        rel.u_a: Fraction(mt, ma),
        rel.u_b: Fraction(mt, mb),
    }
    for ray, lam in rel.lam:
        entries[ray] = Fraction(lam * mt, rel.alpha * ma)
    return entries


def _mult_cache(fan):
    cache = {}

    def get(cone):
        cone = tuple(cone)
        if cone not in cache:
            cache[cone] = multiplicity(fan, cone)
        return cache[cone]

    return get


def intersection_number(fan, ray_index, wall):
    """D_ray . V(wall) by the general two-sided wall formula.

    Zero unless the ray is a wall ray or one of the two opposite rays.
    """
    entries = _wall_entries(fan, wall, _mult_cache(fan))
    return entries.get(ray_index, Fraction(0))


def hull_wall_intersection(fan, ray_index, wall):
    """The four-case formula special to completion walls over hull vertices.

    Uses the hull-cycle neighbors v_(i-1), v_(i+1) of the wall's vertex and
    the relation alpha*v_(i-1) + lam0*v0 + lam_i*v_i + beta*v_(i+1) = 0; kept
    as an independent cross-check of the general formula.
    """
    if wall.kind != fans_mod.COMPLETION:
        raise NotAWall(f"wall {wall.rays} is not a completion wall")
    cyc = fan.hull_cycle
    pos = cyc.index(wall.vertex)
    i_prev = fan.vertex_ray(cyc[(pos - 1) % len(cyc)])
    i_here = fan.vertex_ray(wall.vertex)
    i_next = fan.vertex_ray(cyc[(pos + 1) % len(cyc)])
    order = (i_prev, 0, i_here, i_next)
    rows = [[fan.rays[i].generator[coord] for i in order] for coord in range(3)]
    kernel = xl.kernel_basis(rows, 4)
    assert len(kernel) == 1
    vec = kernel[0]
    if vec[0] < 0:
        vec = tuple(-x for x in vec)
    alpha, lam0, lam_i, beta = vec

    mult = _mult_cache(fan)
    mt = mult(wall.rays)
    cone_prev = tuple(sorted((0, i_prev, i_here)))
    cone_next = tuple(sorted((0, i_here, i_next)))
    if ray_index == i_prev:
        return Fraction(mt, mult(cone_prev))
    if ray_index == i_next:
        return Fraction(mt, mult(cone_next))
    if ray_index == 0:
        return Fraction(lam0 * mt, alpha * mult(cone_prev))
    if ray_index == i_here:
        return Fraction(lam_i * mt, alpha * mult(cone_prev))
    return Fraction(0)


def canonical_wall_order(fan):
    """Completion walls by hull vertex, then framework walls, then added."""
    kind_rank = {fans_mod.COMPLETION: 0, "framework": 1, "added": 2}

    def sort_key(w):
        return (kind_rank[w.kind], w.key)

    return sorted(fan.walls, key=sort_key)


@dataclass(frozen=True)
class IntersectionTable:
    walls: tuple  # Wall, in canonical order
    entries: tuple  # entries[ray_index][wall position], Fraction

    def column(self, wall_key):
        for j, w in enumerate(self.walls):
            if w.key == wall_key:
                return [row[j] for row in self.entries]
        raise KeyError(wall_key)


def intersection_table(fan):
    """Full rays-by-walls table of intersection numbers."""
    mult = _mult_cache(fan)
    walls = canonical_wall_order(fan)
    cols = [_wall_entries(fan, w, mult) for w in walls]
    entries = tuple(
        tuple(cols[j].get(i, Fraction(0)) for j in range(len(walls)))
        for i in range(len(fan.rays))
    )
    return IntersectionTable(tuple(walls), entries)


def linear_relations(fan):
    """One relation per ambient coordinate m: sum of <m, v_ray> z_ray = 0."""
    return [tuple(r.generator[m] for r in fan.rays) for m in range(3)]


def divisor_basis(fan):
    """Ray indices whose divisors represent a basis of the degree-1 classes.

    Gaussian pivoting on the linear relations eliminates the three rays of
    highest index, so the fixture keeps the lowest-index divisors.
    """
    n = len(fan.rays)
    rows = [list(r) for r in linear_relations(fan)]
    pivots = []
    used = set()
    for col in reversed(range(n)):
        pr = -1
        for i in range(3):
            if i not in used and rows[i][col] != 0:
                pr = i
                break
        if pr < 0:
            continue
        for i in range(3):
            if i == pr or rows[i][col] == 0:
                continue
            a, b = rows[pr][col], rows[i][col]
            rows[i] = [x * a - y * b for x, y in zip(rows[i], rows[pr])]
        used.add(pr)
        pivots.append(col)
        if len(used) == 3:
            break
    if len(used) < 3:
        raise DegenerateFan("fan rays do not span the ambient space")
    pivot_set = set(pivots)
    return [i for i in range(n) if i not in pivot_set]


def weight_of(fan, coeffs, table=None):
    """Wall weight induced by the divisor sum of coeffs[ray] * D_ray."""
    if table is None:
        table = intersection_table(fan)
    weight = {}
    for j, w in enumerate(table.walls):
        weight[w.key] = sum(
            (Fraction(c) * table.entries[i][j] for i, c in coeffs.items()),
            Fraction(0),
        )
    return weight


@dataclass(frozen=True)
class MinkowskiReport:
    rows: tuple  # (ray index, ray label, residues per dual basis vector)

    @property
    def ok(self):
        return all(all(r == 0 for r in residues) for _, _, residues in self.rows)

    def failing_rays(self):
        return [i for i, _, residues in self.rows if any(r != 0 for r in residues)]


def check_minkowski(fan, weight):
    """Exact balancing of a wall weight at every ray of the fan.

    At a ray r with dual lattice basis m1, m2 of r-perp, each wall containing
    r contributes weight * <m, v_other> / mult(wall), where v_other is the
    wall's second ray; the division reduces v_other to the true primitive
    generator of the quotient lattice, keeping the test exact.
    """
    mult = _mult_cache(fan)
    rows = []
    for i, ray in enumerate(fan.rays):
        mbasis = xl.integer_kernel([list(ray.generator)], 3)
        residues = []
        for m in mbasis:
            total = Fraction(0)
            for w in fan.walls:
                if i not in w.rays:
                    continue
                other = w.rays[0] if w.rays[1] == i else w.rays[1]
                total += Fraction(weight[w.key]) * Fraction(xl.dot(m, fan.rays[other].generator), mult(w.rays))
            residues.append(total)
        rows.append((i, ray.label, tuple(residues)))
    return MinkowskiReport(tuple(rows))


def minimal_nonfaces(fan):
    """Minimal ray subsets spanning no cone of the fan (sizes 2 and 3)."""
    n = len(fan.rays)
    wall_pairs = {w.rays for w in fan.walls}
    cones = set(fan.max_cones)
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            if (i, j) not in wall_pairs:
                out.append((i, j))
    for i in range(n):
        for j in range(i + 1, n):
            if (i, j) not in wall_pairs:
                continue
            for k in range(j + 1, n):
                if (i, k) in wall_pairs and (j, k) in wall_pairs and (i, j, k) not in cones:
                    out.append((i, j, k))
    return sorted(out, key=lambda s: (len(s), s))


@dataclass(frozen=True)
class StressSpaceResult:
    basis_rays: tuple  # ray indices carrying the divisor coordinates
    divisor_vectors: tuple  # canonical solution vectors in those coordinates
    completion_only_vectors: tuple  # same solve with only completion walls pinned
    weights: tuple  # one wall-key -> Fraction map per divisor vector
    stress_keys: tuple  # framework edge keys
    stress_vectors: tuple  # canonical integer stress basis

    @property
    def dim(self):
        return len(self.divisor_vectors)

    def stress_basis(self):
        return StressBasis(self.stress_keys, self.stress_vectors)


def constrained_stress_space(fw, fan=None, order="lex"):
    """Solve for divisor classes vanishing on added and completion walls.

    Returns the solution basis in divisor-basis coordinates, the induced
    wall weights, and the induced framework-edge stresses canonicalized the
    same way as the direct route's output. The completion-only intermediate
    solve is kept for diagnostics.
    """
    if fan is None:
        fan = fans_mod.build(fw, order)
    basis = divisor_basis(fan)
    table = intersection_table(fan)
    pinned_rows = []
    completion_rows = []
    for j, w in enumerate(table.walls):
        if w.kind == "framework":
            continue
        row = [table.entries[i][j] for i in basis]
        pinned_rows.append(row)
        if w.kind == fans_mod.COMPLETION:
            completion_rows.append(row)
    solutions = xl.solve_constrained(len(basis), pinned_rows)
    completion_only = xl.solve_constrained(len(basis), completion_rows)

    weights = []
    stresses = []
    framework_walls = [(j, w) for j, w in enumerate(table.walls) if w.kind == "framework"]
    framework_walls.sort(key=lambda jw: jw[1].edge)
    stress_keys = tuple(w.edge for _, w in framework_walls)
    for vec in solutions:
        coeffs = {ray: c for ray, c in zip(basis, vec)}
        weights.append(weight_of(fan, coeffs, table))
        stresses.append([weights[-1][w.key] for _, w in framework_walls])
    canonical = tuple(xl.canonical_rowspace(stresses, len(stress_keys))) if stresses else ()
    if len(canonical) != len(solutions):
        raise AssertionError("intersection pairing degenerated on the solution space")
    return StressSpaceResult(
        tuple(basis),
        tuple(solutions),
        tuple(completion_only),
        tuple(weights),
        stress_keys,
        canonical,
    )


@dataclass(frozen=True)
class RouteComparison:
    dim_direct: int
    dim_toric: int
    agree: bool
    details: tuple  # human-readable mismatch witnesses, empty when agreeing


def compare_routes(fw, order="lex"):
    """Exact agreement check between the two stress-space computations.

    For planar input the toric route runs on the fan; for general input the
    glued local-fan route is used. Disagreement is reported, never raised.
    """
    direct = self_stress_basis(fw)
    if isinstance(fw, PlanarFramework):
        toric = constrained_stress_space(fw, order=order).stress_basis()
    else:
        from stressfan import glued

        toric = glued.glued_stress_space(fw, _check=False)
    details = []
    n = len(direct.keys)
    if toric.keys != direct.keys:
        details.append(f"column keys differ: {direct.keys} vs {toric.keys}")
    if direct.dim != toric.dim:
        details.append(f"dimensions differ: direct {direct.dim}, toric {toric.dim}")
    if not details:
        for vec in toric.vectors:
            if not xl.in_rowspan(vec, list(direct.vectors), n):
                details.append(f"toric stress {vec} escapes the direct space")
        for vec in direct.vectors:
            if not xl.in_rowspan(vec, list(toric.vectors), n):
                details.append(f"direct stress {vec} escapes the toric space")
    return RouteComparison(direct.dim, toric.dim, not details, tuple(details))
