# cython: language_level=3
"""Compiled simplex pivot kernel.

Twin of pure.pivot_loop; compiled with -ffp-contract=off so the float
sequence matches the interpreter exactly.
"""

__all__ = ["pivot_loop"]

OPTIMAL = 0
UNBOUNDED = 1
ITER_LIMIT = 2


def pivot_loop(double[:, ::1] T, long long[::1] basis, double tol, long long max_iter):
    """Run Bland-rule simplex pivots on a maximization tableau in place.

    Same contract as the pure kernel: row m is the reduced-cost row,
    column n the RHS.  Returns (status, iterations).
    """
    cdef Py_ssize_t nrows = T.shape[0]
    cdef Py_ssize_t ncols = T.shape[1]
    cdef Py_ssize_t m = nrows - 1
    cdef Py_ssize_t n = ncols - 1
    cdef Py_ssize_t ec, lr, i, j
    cdef long long iters = 0
    cdef int status = ITER_LIMIT
    cdef double a, r, best, piv, f

    while iters < max_iter:
        ec = -1
        for j in range(n):
            if T[m, j] < -tol:
                ec = j
                break
        if ec < 0:
            status = OPTIMAL
            break

        lr = -1
        best = 0.0
        for i in range(m):
            a = T[i, ec]
            if a > tol:
                r = T[i, n] / a
                if lr < 0 or r < best or (r == best and basis[i] < basis[lr]):
                    lr = i
                    best = r
        if lr < 0:
            status = UNBOUNDED
            break

        piv = T[lr, ec]
        for j in range(ncols):
            T[lr, j] /= piv
        T[lr, ec] = 1.0
        for i in range(nrows):
            if i == lr:
                continue
            f = T[i, ec]
            if f != 0.0:
                for j in range(ncols):
                    T[i, j] -= f * T[lr, j]
                T[i, ec] = 0.0
        basis[lr] = ec
        iters += 1

    return status, iters
