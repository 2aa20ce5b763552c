"""Exact integer and rational linear algebra.

Everything downstream (balancing kernels, lattice indices, intersection
numbers) runs through here; all arithmetic is Python int / Fraction, no
floating point anywhere. Matrices are sequences of equal-length rows;
column counts are passed explicitly so empty matrices stay well-defined.
"""

from fractions import Fraction
from itertools import combinations
from math import gcd, lcm

from stressfan import _kernels
from stressfan.errors import DependentRays, ZeroVector


def dot(u, v):
    return sum(a * b for a, b in zip(u, v, strict=True))


def vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v, strict=True))


def vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v, strict=True))


def vec_scale(k, v):
    return tuple(k * a for a in v)


def primitive(v):
    """v divided by the gcd of its entries; direction is preserved.

    Raises ZeroVector on the zero vector.
    """
    g = 0
    for x in v:
        g = gcd(g, x)
    if g == 0:
        raise ZeroVector(f"no primitive part for the zero vector {tuple(v)}")
    return tuple(x // g for x in v)


def clear_denominators(row):
    """Scale a row of Fractions/ints to coprime integers (kernel unchanged)."""
    fr = [Fraction(x) for x in row]
    m = lcm(*(f.denominator for f in fr)) if fr else 1
    ints = [int(f * m) for f in fr]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g > 1:
        ints = [x // g for x in ints]
    return ints


def to_int_rows(rows):
    return [clear_denominators(r) for r in rows]


def rank(rows, ncols):
    _, pivots = _kernels.echelon_int(to_int_rows(rows), ncols)
    return len(pivots)


def det(rows):
    """Exact determinant of a square integer matrix."""
    return _kernels.det_int(rows)


def elementary_divisors(rows):
    """Nonzero Smith normal form diagonal d1 | d2 | ..., all positive."""
    rows = [list(r) for r in rows]
    if not rows:
        return []
    diag, *_ = _kernels.snf(rows, len(rows), len(rows[0]))
    return [d for d in diag if d != 0]


def smith_transforms(rows, nrows, ncols):
    """Full SNF data (diag, S, Sinv, T, Tinv) with A == S @ D @ T."""
    return _kernels.snf(rows, nrows, ncols)


def lattice_index(rows):
    """Index of the row lattice inside the saturation of its rational span.

    Product of the elementary divisors; requires the rows to be linearly
    independent over Q.
    """
    rows = [list(r) for r in rows]
    divisors = elementary_divisors(rows)
    if len(divisors) != len(rows):
        raise DependentRays(f"rows are linearly dependent (rank {len(divisors)} of {len(rows)})")
    index = 1
    for d in divisors:
        index *= d
    return index


def _canonical_int_vector(fracs):
    """Scale a rational vector to coprime integers, first nonzero positive."""
    m = lcm(*(f.denominator for f in fracs))
    ints = [int(f * m) for f in fracs]
    g = 0
    for x in ints:
        g = gcd(g, x)
    lead = next((x for x in ints if x != 0), 0)
    if lead < 0:
        g = -g
    if g not in (0, 1):
        ints = [x // g for x in ints]
    return tuple(ints)


def kernel_basis(rows, ncols):
    """Canonical basis of the exact right null space {x : A x = 0}.

    Basis vectors come from the reduced echelon form, one per free column in
    ascending order, each scaled to integer entries with gcd 1 and a positive
    first nonzero entry. Rational rows are allowed. Deterministic.
    """
    reduced, pivots = _kernels.echelon_int(to_int_rows(rows), ncols)
    pivot_set = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for i, pc in enumerate(pivots):
            if reduced[i][f]:
                vec[pc] = Fraction(-reduced[i][f], reduced[i][pc])
        basis.append(_canonical_int_vector(vec))
    return basis


def solve_constrained(nvars, constraints):
    """Canonical basis of {x in Q^nvars : constraints @ x = 0}.

    Same normalization as kernel_basis; constraint rows must have nvars
    entries (checked).
    """
    for i, row in enumerate(constraints):
        if len(row) != nvars:
            raise ValueError(f"constraint {i} has {len(row)} entries, expected {nvars}")
    return kernel_basis(constraints, nvars)


def canonical_rowspace(rows, ncols):
    """The unique primitive-integer reduced echelon basis of the row space.

    Two spanning sets generate the same subspace of Q^ncols iff their
    canonical row spaces are equal as lists.
    """
    reduced, _ = _kernels.echelon_int(to_int_rows(rows), ncols)
    return [tuple(r) for r in reduced]


def in_rowspan(vec, rows, ncols):
    """Exact membership of vec in the rational row span of rows."""
    base = to_int_rows(rows)
    r0 = rank(base, ncols)
    return rank(base + [clear_denominators(vec)], ncols) == r0


def subspaces_equal(rows_a, rows_b, ncols):
    return canonical_rowspace(rows_a, ncols) == canonical_rowspace(rows_b, ncols)


def integer_kernel(rows, ncols):
    """Basis of the saturated integer kernel {x in Z^ncols : A x = 0}.

    Computed from the Smith normal form transforms, so the basis generates
    the full lattice of integer solutions, not just a finite-index sublattice.
    """
    rows = [list(r) for r in rows]
    if not rows:
        return [tuple(1 if i == j else 0 for i in range(ncols)) for j in range(ncols)]
    diag, _, _, _, tinv = _kernels.snf(rows, len(rows), ncols)
    r = sum(1 for d in diag if d != 0)
    return [tuple(tinv[row][col] for row in range(ncols)) for col in range(r, ncols)]


def minor_gcds(rows, ncols):
    """gcd of all k-by-k minors for k = 1..rank bound; brute-force oracle.

    Intended for small matrices only (tests assert the SNF divisor products
    against it).
    """
    rows = [list(r) for r in rows]
    out = []
    for k in range(1, min(len(rows), ncols) + 1):
        g = 0
        for rsel in combinations(range(len(rows)), k):
            for csel in combinations(range(ncols), k):
                sub = [[rows[i][j] for j in csel] for i in rsel]
                g = gcd(g, _kernels.det_int(sub))
        out.append(g)
    return out
