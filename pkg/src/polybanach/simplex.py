"""Exact two-phase simplex over rationals.

Solves   min c.x   subject to   A x = b,  x >= 0
with every coefficient an exact rational.  Bland's rule (lowest eligible
index enters, lowest-index tie-break on the ratio test) makes the solver
immune to cycling and fully deterministic, which the golden-file tests
rely on.

The tableau is dense: rows are Python lists of Rat and the pivot is a
zip/list-comprehension sweep, which is the fastest pure-Python form.
Problem sizes here are tens of rows by low hundreds of columns.
"""

from __future__ import annotations

from dataclasses import dataclass

from .rat import ONE, ZERO, Rat, rat

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass
class LPResult:
    status: str
    value: Rat | None = None
    x: tuple | None = None

    @property
    def optimal(self) -> bool:
        return self.status == OPTIMAL


def _pivot(rows, r: int, c: int) -> None:
    inv = ONE / rows[r][c]
    if inv != ONE:
        rows[r] = [a * inv for a in rows[r]]
    prow = rows[r]
    for i, row in enumerate(rows):
        if i != r:
            f = row[c]
            if f:
                rows[i] = [a - f * p for a, p in zip(row, prow)]


def _bland_iterate(rows, obj, basis, ncols: int):
    """Run simplex iterations in place; returns None or UNBOUNDED.

    rows hold the constraints with the rhs in the last column, obj is the
    reduced-cost row (same layout).  Entering column: lowest index with a
    negative reduced cost; leaving row: minimum ratio, ties to the lowest
    basis index.
    """
    m = len(rows)
    while True:
        enter = -1
        for j in range(ncols):
            if obj[j] < 0:
                enter = j
                break
        if enter < 0:
            return None
        leave = -1
        best = None
        for i in range(m):
            a = rows[i][enter]
            if a > 0:
                ratio = rows[i][-1] / a
                if best is None or ratio < best or (
                    ratio == best and basis[i] < basis[leave]
                ):
                    best = ratio
                    leave = i
        if leave < 0:
            return UNBOUNDED
        _pivot(rows, leave, enter)
        f = obj[enter]
        if f:
            prow = rows[leave]
            obj[:] = [a - f * p for a, p in zip(obj, prow)]
        basis[leave] = enter


def solve_min(c, a_rows, b) -> LPResult:
    """Minimize c.x over {x >= 0 : A x = b}; exact.

    Accepts ints or rationals; rows of A may be any iterables.  Redundant
    equality rows are dropped during phase one.
    """
    a_rows = [list(map(rat, row)) for row in a_rows]
    b = [rat(v) for v in b]
    c = [rat(v) for v in c]
    n = len(c)
    for row in a_rows:
        if len(row) != n:
            raise ValueError("constraint row length mismatch")

    # normalize rhs >= 0 so the artificial basis is feasible
    for i in range(len(a_rows)):
        if b[i] < 0:
            a_rows[i] = [-v for v in a_rows[i]]
            b[i] = -b[i]

    m = len(a_rows)
    # phase 1: artificial variable per row, minimize their sum
    rows = []
    for i in range(m):
        art = [ZERO] * m
        art[i] = ONE
        rows.append(a_rows[i] + art + [b[i]])
    basis = [n + i for i in range(m)]
    obj = [ZERO] * (n + m + 1)
    for i in range(m):
        obj = [o - v for o, v in zip(obj, rows[i])]
    for j in range(n, n + m):
        obj[j] = ZERO

    status = _bland_iterate(rows, obj, basis, n + m)
    if status == UNBOUNDED:  # cannot happen: phase-1 objective bounded below
        raise AssertionError("phase 1 unbounded")
    if -obj[-1] != 0:
        return LPResult(INFEASIBLE)

    # drive remaining artificials out of the basis; drop redundant rows
    keep = []
    for i in range(m):
        if basis[i] < n:
            keep.append(i)
            continue
        piv = next((j for j in range(n) if rows[i][j] != 0), None)
        if piv is None:
            continue  # redundant constraint
        _pivot(rows, i, piv)
        basis[i] = piv
        keep.append(i)
    rows = [rows[i][:n] + [rows[i][-1]] for i in keep]
    basis = [basis[i] for i in keep]

    # phase 2: reduced costs for the real objective
    obj = c + [ZERO]
    for i, bi in enumerate(basis):
        f = obj[bi]
        if f:
            obj = [a - f * p for a, p in zip(obj, rows[i])]

    status = _bland_iterate(rows, obj, basis, n)
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED)

    x = [ZERO] * n
    for i, bi in enumerate(basis):
        x[bi] = rows[i][-1]
    return LPResult(OPTIMAL, -obj[-1], tuple(x))


def feasible_point(a_rows, b) -> tuple | None:
    """A point of {x >= 0 : A x = b}, or None when empty."""
    n = len(a_rows[0]) if a_rows else 0
    res = solve_min([ZERO] * n, a_rows, b)
    return res.x if res.optimal else None
