"""Small exact linear algebra over rationals.

Vectors are tuples of Rat, matrices are tuples of row tuples.  Everything
is dense and small (ambient dimensions are tens at most); Gaussian
elimination with first-nonzero pivoting is exact and deterministic.
"""

from __future__ import annotations

from .rat import ZERO, rat

Vec = tuple
Matrix = tuple


def vec(values) -> Vec:
    return tuple(rat(v) for v in values)


def vzero(dim: int) -> Vec:
    return (ZERO,) * dim


def vneg(v: Vec) -> Vec:
    return tuple(-a for a in v)


def vadd(u: Vec, v: Vec) -> Vec:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Vec, v: Vec) -> Vec:
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, v: Vec) -> Vec:
    c = rat(c)
    return tuple(c * a for a in v)


def dot(u: Vec, v: Vec):
    acc = ZERO
    for a, b in zip(u, v):
        acc += a * b
    return acc


def unit(dim: int, index: int) -> Vec:
    return tuple(rat(1) if i == index else ZERO for i in range(dim))


def matrix(rows) -> Matrix:
    return tuple(vec(row) for row in rows)


def identity(dim: int) -> Matrix:
    return tuple(unit(dim, i) for i in range(dim))


def mat_vec(m: Matrix, v: Vec) -> Vec:
    return tuple(dot(row, v) for row in m)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    cols = tuple(zip(*b))
    return tuple(tuple(dot(row, col) for col in cols) for row in a)


def rank(rows) -> int:
    """Rank of a list of rational vectors."""
    work = [list(r) for r in rows]
    if not work:
        return 0
    ncols = len(work[0])
    r = 0
    for col in range(ncols):
        pivot_row = next((i for i in range(r, len(work)) if work[i][col] != 0), None)
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        inv = 1 / work[r][col]
        work[r] = [x * inv for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][col] != 0:
                f = work[i][col]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        r += 1
        if r == len(work):
            break
    return r


def solve_unique(m: Matrix, b: Vec) -> Vec | None:
    """Solve the square system m x = b; None when singular.

    Exact Gauss-Jordan; the first nonzero entry in each column is the
    pivot, so results are deterministic.
    """
    n = len(m)
    aug = [list(row) + [rhs] for row, rhs in zip(m, b)]
    for col in range(n):
        pivot_row = next((i for i in range(col, n) if aug[i][col] != 0), None)
        if pivot_row is None:
            return None
        aug[col], aug[pivot_row] = aug[pivot_row], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[col])]
    return tuple(row[n] for row in aug)
