# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled backend for the exact integer elimination kernels.

Same contract as ``stressfan._core_py``; entries stay arbitrary-precision
Python ints (exactness first), the win is loop and dispatch overhead.
Outputs must be bit-identical to the pure backend.
"""

from math import gcd

BACKEND_NAME = "cython"


cdef object _row_gcd(list row):
    cdef object g = 0
    cdef Py_ssize_t c, n = len(row)
    for c in range(n):
        g = gcd(g, row[c])
        if g == 1:
            break
    return g


def echelon_int(rows, ncols):
    """Canonical integer Gauss-Jordan echelon; see the pure backend."""
    cdef list m = [list(row_) for row_ in rows]
    cdef Py_ssize_t n = ncols
    cdef Py_ssize_t nrows = len(m)
    cdef list pivots = []
    cdef Py_ssize_t pr = 0, pc, r, c, pivot_row
    cdef list row, prow, out
    cdef object p, t, g
    for pc in range(n):
        pivot_row = -1
        for r in range(pr, nrows):
            if (<list>m[r])[pc] != 0:
                pivot_row = r
                break
        if pivot_row < 0:
            continue
        if pivot_row != pr:
            m[pr], m[pivot_row] = m[pivot_row], m[pr]
        prow = <list>m[pr]
        p = prow[pc]
        for r in range(nrows):
            if r == pr:
                continue
            row = <list>m[r]
            t = row[pc]
            if t == 0:
                continue
            for c in range(n):
                row[c] = row[c] * p - prow[c] * t
            g = _row_gcd(row)
            if g > 1:
                for c in range(n):
                    row[c] = row[c] // g
        pivots.append(pc)
        pr += 1
        if pr == nrows:
            break
    out = []
    for r in range(len(pivots)):
        row = <list>m[r]
        pc = <Py_ssize_t>pivots[r]
        g = _row_gcd(row)
        if row[pc] < 0:
            g = -g
        if g != 1:
            row = [x // g for x in row]
        out.append(row)
    return out, pivots


cdef list _identity(Py_ssize_t n):
    cdef list rows = []
    cdef Py_ssize_t i, j
    cdef list row
    for i in range(n):
        row = [0] * n
        row[i] = 1
        rows.append(row)
    return rows


def snf(rows, nrows, ncols):
    """Smith normal form with transforms; see the pure backend."""
    cdef list A = [list(row_) for row_ in rows]
    cdef Py_ssize_t m = nrows, n = ncols
    cdef list S = _identity(m)
    cdef list Sinv = _identity(m)
    cdef list T = _identity(n)
    cdef list Tinv = _identity(n)
    cdef Py_ssize_t t = 0, size = min(m, n)
    cdef Py_ssize_t r, c, br, bc
    cdef object v, best_abs, q, d
    cdef list Ar, Ai, Aj, Si, Sj, Ti, Tj
    cdef bint clean, fixed

    def row_add(Py_ssize_t i, Py_ssize_t j, object k):
        cdef Py_ssize_t cc, rr
        cdef list Ai_ = <list>A[i], Aj_ = <list>A[j]
        for cc in range(n):
            Ai_[cc] = Ai_[cc] + k * Aj_[cc]
        for rr in range(m):
            (<list>S[rr])[j] = (<list>S[rr])[j] - k * (<list>S[rr])[i]
        cdef list Si_ = <list>Sinv[i], Sj_ = <list>Sinv[j]
        for cc in range(m):
            Si_[cc] = Si_[cc] + k * Sj_[cc]

    def col_add(Py_ssize_t j, Py_ssize_t i, object k):
        cdef Py_ssize_t cc, rr
        for rr in range(m):
            (<list>A[rr])[j] = (<list>A[rr])[j] + k * (<list>A[rr])[i]
        cdef list Ti_ = <list>T[i], Tj_ = <list>T[j]
        for cc in range(n):
            Ti_[cc] = Ti_[cc] - k * Tj_[cc]
        for rr in range(n):
            (<list>Tinv[rr])[j] = (<list>Tinv[rr])[j] + k * (<list>Tinv[rr])[i]

    def row_swap(Py_ssize_t i, Py_ssize_t j):
        cdef Py_ssize_t rr
        A[i], A[j] = A[j], A[i]
        for rr in range(m):
            (<list>S[rr])[i], (<list>S[rr])[j] = (<list>S[rr])[j], (<list>S[rr])[i]
        Sinv[i], Sinv[j] = Sinv[j], Sinv[i]

    def col_swap(Py_ssize_t i, Py_ssize_t j):
        cdef Py_ssize_t rr
        for rr in range(m):
            (<list>A[rr])[i], (<list>A[rr])[j] = (<list>A[rr])[j], (<list>A[rr])[i]
        T[i], T[j] = T[j], T[i]
        for rr in range(n):
            (<list>Tinv[rr])[i], (<list>Tinv[rr])[j] = (<list>Tinv[rr])[j], (<list>Tinv[rr])[i]

    def row_negate(Py_ssize_t i):
        cdef Py_ssize_t rr
        A[i] = [-x for x in <list>A[i]]
        for rr in range(m):
            (<list>S[rr])[i] = -(<list>S[rr])[i]
        Sinv[i] = [-x for x in <list>Sinv[i]]

    while t < size:
        best_abs = None
        br = -1
        bc = -1
        for r in range(t, m):
            Ar = <list>A[r]
            for c in range(t, n):
                v = Ar[c]
                if v != 0:
                    if v < 0:
                        v = -v
                    if best_abs is None or v < best_abs:
                        best_abs = v
                        br = r
                        bc = c
        if br < 0:
            break
        if br != t:
            row_swap(t, br)
        if bc != t:
            col_swap(t, bc)

        clean = True
        for r in range(t + 1, m):
            if (<list>A[r])[t] != 0:
                q = (<list>A[r])[t] // (<list>A[t])[t]
                if q:
                    row_add(r, t, -q)
                if (<list>A[r])[t] != 0:
                    clean = False
        for c in range(t + 1, n):
            if (<list>A[t])[c] != 0:
                q = (<list>A[t])[c] // (<list>A[t])[t]
                if q:
                    col_add(c, t, -q)
                if (<list>A[t])[c] != 0:
                    clean = False
        if not clean:
            continue

        d = (<list>A[t])[t]
        fixed = False
        for r in range(t + 1, m):
            Ar = <list>A[r]
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

    for r in range(size):
        if (<list>A[r])[r] < 0:
            row_negate(r)
    diag = [(<list>A[r])[r] for r in range(size)]
    return diag, S, Sinv, T, Tinv


def det_int(rows):
    """Bareiss fraction-free determinant; see the pure backend."""
    cdef Py_ssize_t n = len(rows)
    if n == 0:
        return 1
    cdef list A = [list(r) for r in rows]
    cdef int sign = 1
    cdef object prev = 1, pk, aik
    cdef Py_ssize_t k, i, j, swap
    cdef list Ai, Ak
    for k in range(n - 1):
        if (<list>A[k])[k] == 0:
            swap = -1
            for i in range(k + 1, n):
                if (<list>A[i])[k] != 0:
                    swap = i
                    break
            if swap < 0:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        Ak = <list>A[k]
        pk = Ak[k]
        for i in range(k + 1, n):
            Ai = <list>A[i]
            aik = Ai[k]
            for j in range(k + 1, n):
                Ai[j] = (Ai[j] * pk - aik * Ak[j]) // prev
            Ai[k] = 0
        prev = pk
    return sign * (<list>A[n - 1])[n - 1]
