"""Small exact linear algebra over Q(q, t).

Matrices are lists of rows; rows are lists of QT.  Elimination works on
sparse rows (dicts column -> QT) and picks the pivot with the smallest
representation to keep intermediate fractions small.
"""

from __future__ import annotations

from .qtfield import ONE, ZERO, QT


def _size(c):
    return len(c.num) + len(c.den)


def _sparse(row):
    return {j: c for j, c in enumerate(row) if c}


def _reduce(rows, ncols):
    """Row-reduce sparse rows in place; returns (pivot rows, pivot columns)."""
    rows = [dict(r) for r in rows if r]
    piv_rows, piv_cols = [], []
    for col in range(ncols):
        best = None
        for k, r in enumerate(rows):
            c = r.get(col)
            if c is not None and (best is None or _size(c) < _size(rows[best][col])):
                best = k
        if best is None:
            continue
        pr = rows.pop(best)
        inv = ONE / pr[col]
        pr = {j: c * inv for j, c in pr.items()}
        pr[col] = ONE
        nxt = []
        for r in rows:
            f = r.get(col)
            if f is not None:
                for j, c in pr.items():
                    v = r.get(j, ZERO) - f * c
                    if v:
                        r[j] = v
                    else:
                        r.pop(j, None)
            if r:
                nxt.append(r)
        rows = nxt
        # back-substitute into earlier pivots to keep reduced form
        for k, q in enumerate(piv_rows):
            f = q.get(col)
            if f is not None:
                for j, c in pr.items():
                    v = q.get(j, ZERO) - f * c
                    if v:
                        q[j] = v
                    else:
                        q.pop(j, None)
        piv_rows.append(pr)
        piv_cols.append(col)
    return piv_rows, piv_cols


def rank(rows, ncols):
    return len(_reduce([_sparse(r) for r in rows], ncols)[1])


def nullspace(rows, ncols):
    """Basis of {v : rows . v = 0}; one vector per free column, with a 1 there."""
    pr, pc = _reduce([_sparse(r) for r in rows], ncols)
    free = [j for j in range(ncols) if j not in set(pc)]
    out = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for r, c in zip(pr, pc):
            x = r.get(f)
            if x is not None:
                v[c] = -x
        out.append(v)
    return out


def solve(rows, rhs):
    """One solution of rows . x = rhs; raises ValueError when inconsistent."""
    ncols = len(rows[0]) if rows else 0
    aug = [_sparse(list(r) + [b]) for r, b in zip(rows, rhs)]
    pr, pc = _reduce(aug, ncols + 1)
    if ncols in pc:
        raise ValueError("inconsistent linear system")
    x = [ZERO] * ncols
    for r, c in zip(pr, pc):
        x[c] = r.get(ncols, ZERO)
    return x


def inverse(M):
    n = len(M)
    aug = [_sparse(list(row) + [ONE if i == j else ZERO for j in range(n)]) for i, row in enumerate(M)]
    pr, pc = _reduce(aug, 2 * n)
    if pc[:n] != list(range(n)):
        raise ValueError("singular matrix")
    return [[r.get(n + j, ZERO) for j in range(n)] for r in pr[:n]]


def matmul(A, B):
    m = len(B[0]) if B else 0
    out = []
    for row in A:
        acc = [ZERO] * m
        for k, a in enumerate(row):
            if a:
                for j, b in enumerate(B[k]):
                    if b:
                        acc[j] = acc[j] + a * b
        out.append(acc)
    return out


def matvec(A, v):
    out = []
    for row in A:
        acc = ZERO
        for a, x in zip(row, v):
            if a and x:
                acc = acc + a * x
        out.append(acc)
    return out


def identity(n):
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def scalar_shift(M, c):
    """M - c I."""
    return [[(x - c) if i == j else x for j, x in enumerate(row)] for i, row in enumerate(M)]


def is_zero_matrix(M):
    return all(not x for row in M for x in row)


def to_qt(x):
    return x if isinstance(x, QT) else QT(x)
