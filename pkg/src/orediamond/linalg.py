"""Exact linear algebra over Q used by the solvers."""

from .rational import QONE, QZERO, q


def rref(rows, ncols):
    """Reduced row echelon form; returns (rows, pivot column list)."""
    m = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, len(m)):
            if m[i][c]:
                pr = i
                break
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = QONE / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r] + m[r:], pivots


def solve(a_rows, rhs):
    """Solve A x = rhs over Q.

    Returns (particular, kernel_basis) or (None, kernel_basis) when the
    system is inconsistent.  Vectors are lists of rationals.
    """
    if not a_rows:
        return [], []
    ncols = len(a_rows[0])
    aug = [list(r) + [q(v)] for r, v in zip(a_rows, rhs)]
    m, pivots = rref(aug, ncols)
    # consistency: no pivot row of the form 0 ... 0 | nonzero
    nrows = len([r for r in m if any(r)])
    consistent = True
    for row in m:
        if any(row[:ncols]):
            continue
        if row[ncols]:
            consistent = False
            break
    free = [c for c in range(ncols) if c not in pivots]
    kernel = []
    for f in free:
        vec = [QZERO] * ncols
        vec[f] = QONE
        for i, p in enumerate(pivots):
            vec[p] = -m[i][f]
        kernel.append(vec)
    if not consistent:
        return None, kernel
    particular = [QZERO] * ncols
    for i, p in enumerate(pivots):
        particular[p] = m[i][ncols]
    return particular, kernel


def nullspace(a_rows, ncols):
    """Kernel basis of A over Q."""
    if not a_rows:
        return [
            [QONE if i == j else QZERO for j in range(ncols)]
            for i in range(ncols)
        ]
    m, pivots = rref([list(r) for r in a_rows], ncols)
    free = [c for c in range(ncols) if c not in pivots]
    kernel = []
    for f in free:
        vec = [QZERO] * ncols
        vec[f] = QONE
        for i, p in enumerate(pivots):
            vec[p] = -m[i][f]
        kernel.append(vec)
    return kernel
