"""Independent brute-force oracles for the tests.

Deliberately naive, Fraction-only, and separate from the package's solvers:
textbook Gauss-Jordan, Laplace-expansion determinants, minor enumeration.
Slow is fine; these only run on desk-scale inputs.
"""

from fractions import Fraction
from itertools import combinations


def rref(rows, ncols):
    m = [[Fraction(x) for x in row] for row in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        piv = m[r][c]
        m[r] = [x / piv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def kernel(rows, ncols):
    """Unnormalized rational kernel basis (one vector per free column)."""
    m, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, c in enumerate(pivots):
            v[c] = -m[r][f]
        basis.append(tuple(v))
    return basis


def rank(rows, ncols):
    return len(rref(rows, ncols)[1])


def in_span(vectors, target, ncols):
    base = [list(v) for v in vectors]
    return rank(base, ncols) == rank(base + [list(target)], ncols)


def same_span(a, b, ncols):
    return all(in_span(a, v, ncols) for v in b) and all(in_span(b, v, ncols) for v in a) and rank(
        [list(v) for v in a], ncols
    ) == rank([list(v) for v in b], ncols)


def det(matrix):
    n = len(matrix)
    if n == 0:
        return 1
    if n == 1:
        return matrix[0][0]
    total = 0
    for j in range(n):
        if matrix[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1 :] for row in matrix[1:]]
        total += (-1) ** j * matrix[0][j] * det(minor)
    return total


def minor_gcds(rows, ncols):
    """gcd of all k-by-k minors, k = 1.., by full enumeration."""
    from math import gcd

    out = []
    for k in range(1, min(len(rows), ncols) + 1):
        g = 0
        for rsel in combinations(range(len(rows)), k):
            for csel in combinations(range(ncols), k):
                g = gcd(g, det([[rows[i][j] for j in csel] for i in rsel]))
        out.append(g)
    return out
