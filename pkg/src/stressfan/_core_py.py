"""Pure-Python backend for the exact integer elimination kernels.

Hot inner loops of the whole pipeline: every rational kernel basis, rank,
Smith normal form and lattice index is driven through the two elimination
routines here. ``stressfan._core_cy`` is the compiled twin with the same
contract; outputs of the two backends must be bit-identical.

All arithmetic is arbitrary-precision integer. No floating point.
"""

from math import gcd

BACKEND_NAME = "python"


def _row_gcd(row):
    g = 0
    for x in row:
        g = gcd(g, x)
        if g == 1:
            break
    return g


def echelon_int(rows, ncols):
    """Reduce integer rows to a canonical echelon form.

    Gauss-Jordan over Z: each surviving row is primitive (entry gcd 1) with a
    positive pivot, and pivot columns are zero everywhere else.  The output is
    the unique canonical spanning set of the row space over Q, so row spaces
    compare by equality.

    Returns ``(reduced_rows, pivot_cols)`` with zero rows dropped.
    """
    m = [list(r) for r in rows]
    nrows = len(m)
    pivots = []
    pr = 0
    for pc in range(ncols):
        pivot_row = -1
        for r in range(pr, nrows):
            if m[r][pc] != 0:
                pivot_row = r
                break
        if pivot_row < 0:
            continue
        if pivot_row != pr:
            m[pr], m[pivot_row] = m[pivot_row], m[pr]
        prow = m[pr]
        p = prow[pc]
        for r in range(nrows):
            if r == pr:
                continue
            row = m[r]
            t = row[pc]
            if t == 0:
                continue
            for c in range(ncols):
                row[c] = row[c] * p - prow[c] * t
            g = _row_gcd(row)
            if g > 1:
                for c in range(ncols):
                    row[c] //= g
        pivots.append(pc)
        pr += 1
        if pr == nrows:
            break
    out = []
    for i, pc in enumerate(pivots):
        row = m[i]
        g = _row_gcd(row)
        if row[pc] < 0:
            g = -g
        if g != 1:
            row = [x // g for x in row]
        out.append(row)
    return out, pivots


def _identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def snf(rows, nrows, ncols):
    """Smith normal form with unimodular transforms.

    Returns ``(diag, S, Sinv, T, Tinv)`` with ``A == S @ D @ T``, ``S`` and
    ``T`` unimodular and ``D`` diagonal with nonnegative entries satisfying
    the divisibility chain d1 | d2 | ...  ``diag`` has length min(m, n).

    Pivot choice is the smallest nonzero absolute value, ties broken in
    row-major position, which fixes the elimination order and keeps
    coefficient growth moderate at desk scale.
    """
    A = [list(r) for r in rows]
    m, n = nrows, ncols
    S = _identity(m)
    Sinv = _identity(m)
    T = _identity(n)
    Tinv = _identity(n)

    def row_add(i, j, k):
        # A[i] += k*A[j]; keep S @ A @ T invariant
        Ai, Aj = A[i], A[j]
        for c in range(n):
            Ai[c] += k * Aj[c]
        for r in range(m):
            S[r][j] -= k * S[r][i]
        Si, Sj = Sinv[i], Sinv[j]
        for c in range(m):
            Si[c] += k * Sj[c]

    def col_add(j, i, k):
        # A[:,j] += k*A[:,i]
        for r in range(m):
            A[r][j] += k * A[r][i]
        Ti, Tj = T[i], T[j]
        for c in range(n):
            Ti[c] -= k * Tj[c]
        for r in range(n):
            Tinv[r][j] += k * Tinv[r][i]

    def row_swap(i, j):
        A[i], A[j] = A[j], A[i]
        for r in range(m):
            S[r][i], S[r][j] = S[r][j], S[r][i]
        Sinv[i], Sinv[j] = Sinv[j], Sinv[i]

    def col_swap(i, j):
        for r in range(m):
            A[r][i], A[r][j] = A[r][j], A[r][i]
        T[i], T[j] = T[j], T[i]
        for r in range(n):
            Tinv[r][i], Tinv[r][j] = Tinv[r][j], Tinv[r][i]

    def row_negate(i):
        A[i] = [-x for x in A[i]]
        for r in range(m):
            S[r][i] = -S[r][i]
        Sinv[i] = [-x for x in Sinv[i]]

    t = 0
    size = min(m, n)
    while t < size:
        # pivot: smallest nonzero |entry| in the trailing submatrix
        best = None
        for r in range(t, m):
            Ar = A[r]
            for c in range(t, n):
                v = Ar[c]
                if v != 0 and (best is None or abs(v) < best[0]):
                    best = (abs(v), r, c)
        if best is None:
            break
        _, br, bc = best
        if br != t:
            row_swap(t, br)
        if bc != t:
            col_swap(t, bc)

        clean = True
        for r in range(t + 1, m):
            if A[r][t] != 0:
                q = A[r][t] // A[t][t]
                if q:
                    row_add(r, t, -q)
                if A[r][t] != 0:
                    clean = False
        for c in range(t + 1, n):
            if A[t][c] != 0:
                q = A[t][c] // A[t][t]
                if q:
                    col_add(c, t, -q)
                if A[t][c] != 0:
                    clean = False
        if not clean:
            continue

        # divisibility chain: pivot must divide the rest of the submatrix
        d = A[t][t]
        fixed = False
        for r in range(t + 1, m):
            Ar = A[r]
            for c in range(t + 1, n):
                if Ar[c] % d != 0:
                    row_add(t, r, 1)
                    fixed = True
                    break
            if fixed:
                break
        if fixed:
            continue
        t += 1

    for i in range(size):
        if A[i][i] < 0:
            row_negate(i)
    diag = [A[i][i] for i in range(size)]
    return diag, S, Sinv, T, Tinv


def det_int(rows):
    """Determinant of a square integer matrix by fraction-free elimination."""
    n = len(rows)
    if n == 0:
        return 1
    A = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = -1
            for r in range(k + 1, n):
                if A[r][k] != 0:
                    swap = r
                    break
            if swap < 0:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        pk = A[k][k]
        for i in range(k + 1, n):
            Ai = A[i]
            aik = Ai[k]
            for j in range(k + 1, n):
                Ai[j] = (Ai[j] * pk - aik * A[k][j]) // prev
            Ai[k] = 0
        prev = pk
    return sign * A[n - 1][n - 1]
