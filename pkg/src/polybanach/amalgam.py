"""Amalgamation of based spaces over a shared based subspace.

Given isometric embeddings i: Z -> X and j: Z -> Y, the amalgam W is the
quotient of the sum of X and Y (with the additive norm) by the span of
{(i(z), -j(z))}.  Its unit ball is the image of conv(B_X x 0, 0 x B_Y)
under the quotient map, computed here as an exact hull of vertex images;
the quotient norm itself (an infimum over decompositions) is available
as an independent LP oracle and the two must agree everywhere.

Both structure maps into W are isometries and the merged basis keeps the
worse of the two unconditional constants; rational inputs give a rational
amalgam.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import Budget, NotIsometric, default_budget
from .morphism import BasedMorphism, certify_isometry, operator_norm
from .polytope import Ball, gauge_vrep, hull_reduce, make_vector, project
from .rat import ONE, ZERO, Rat
from .simplex import solve_min
from .space import BasedSpace


@dataclass(frozen=True)
class Pushout:
    w: BasedSpace
    i_prime: BasedMorphism  # X -> W, label identity
    j_prime: BasedMorphism  # Y -> W

    def commuting_on(self, i: BasedMorphism, j: BasedMorphism) -> bool:
        """i' after i equals j' after j on every label of the shared space."""
        return all(
            self.i_prime.basis_map[i.basis_map[b]]
            == self.j_prime.basis_map[j.basis_map[b]]
            for b in i.domain.labels
        )


@dataclass(frozen=True)
class _Layout:
    """Coordinate plan of the amalgam: X labels first, then new Y labels."""

    labels: tuple[str, ...]
    y_to_w: dict  # y label -> w label (shared ones land on X labels)
    new_labels: tuple[str, ...]


def _layout(x: BasedSpace, y: BasedSpace, i: BasedMorphism, j: BasedMorphism) -> _Layout:
    shared_y = {j.basis_map[b]: i.basis_map[b] for b in j.domain.labels}
    taken = set(x.labels)
    y_to_w = {}
    new_labels = []
    for b in y.labels:
        if b in shared_y:
            y_to_w[b] = shared_y[b]
            continue
        candidate = b
        while candidate in taken:
            candidate = candidate + "'"
        taken.add(candidate)
        y_to_w[b] = candidate
        new_labels.append(candidate)
    return _Layout(
        labels=x.labels + tuple(new_labels),
        y_to_w=y_to_w,
        new_labels=tuple(new_labels),
    )


def _check_arrows(z, x, y, i, j) -> None:
    if i.domain != z or j.domain != z:
        raise ValueError("i and j must share the amalgamation base as domain")
    if i.codomain != x or j.codomain != y:
        raise ValueError("codomain mismatch with the given spaces")


def _certify_inputs(i: BasedMorphism, j: BasedMorphism, budget: Budget) -> None:
    for name, f in (("i", i), ("j", j)):
        if not certify_isometry(f, budget):
            worst = max(
                f.domain.ball.vertices,
                key=lambda v: gauge_vrep(f.codomain.ball, f.apply(v)),
            )
            raise NotIsometric(
                f"morphism {name} is not isometric; vertex {worst} distorts"
            )


def amalgamate(
    z: BasedSpace,
    x: BasedSpace,
    y: BasedSpace,
    i: BasedMorphism,
    j: BasedMorphism,
    budget: Budget | None = None,
) -> Pushout:
    """Pushout of x <- z -> y along isometric basis embeddings.

    The ball of the result is the hull of the quotient images of both
    vertex sets; the embeddings of x and y into the result are isometric
    and commute over z.  Raises NotIsometric when an input embedding
    fails certification.
    """
    budget = budget or default_budget()
    _check_arrows(z, x, y, i, j)
    _certify_inputs(i, j, budget)
    lay = _layout(x, y, i, j)

    # quotient matrix from the sum of X and Y onto the merged coordinates
    x_set = set(x.labels)
    rows = []
    for b in lay.labels:
        row = [ZERO] * (x.dim + y.dim)
        if b in x_set:
            row[x.index(b)] = ONE
        for yb, wb in lay.y_to_w.items():
            if wb == b:
                row[x.dim + y.index(yb)] = ONE
        rows.append(tuple(row))

    sum_vertices = [v + (ZERO,) * y.dim for v in x.ball.vertices]
    sum_vertices += [(ZERO,) * x.dim + v for v in y.ball.vertices]
    sum_ball = Ball(vertices=tuple(sorted(sum_vertices)), dim=x.dim + y.dim)
    ball_w = project(sum_ball, rows, budget)

    w = BasedSpace(labels=lay.labels, ball=ball_w)
    i_prime = BasedMorphism(x, w, {b: b for b in x.labels})
    j_prime = BasedMorphism(y, w, dict(lay.y_to_w))

    # cheap exact sanity: both structure maps preserve vertex norms
    if operator_norm(i_prime) != 1 or operator_norm(j_prime) != 1:
        raise AssertionError("amalgam ball does not preserve input vertex norms")
    return Pushout(w=w, i_prime=i_prime, j_prime=j_prime)


def amalgam_norm_oracle(
    z: BasedSpace,
    x: BasedSpace,
    y: BasedSpace,
    i: BasedMorphism,
    j: BasedMorphism,
    w_point,
) -> Rat:
    """Quotient norm of a point by direct minimization over decompositions.

    Solves min ||a||_X + ||b||_Y over all splittings of the point into an
    X part and a Y part that agree on the shared coordinates, as one
    exact LP over hull weights.  Independent of the hull construction in
    amalgamate, which it cross-checks.
    """
    _check_arrows(z, x, y, i, j)
    lay = _layout(x, y, i, j)
    w_point = make_vector(w_point)
    if len(w_point) != len(lay.labels):
        raise ValueError("point dimension != amalgam dimension")
    if all(c == 0 for c in w_point):
        return ZERO

    nx = len(x.ball.vertices)
    ny = len(y.ball.vertices)
    # variables: hull weights for X vertices then Y vertices
    rows = []
    rhs = []
    for k, b in enumerate(lay.labels):
        xcol = x.index(b) if b in set(x.labels) else None
        ycols = [y.index(yb) for yb, wb in lay.y_to_w.items() if wb == b]
        row = []
        for v in x.ball.vertices:
            row.append(v[xcol] if xcol is not None else ZERO)
        for v in y.ball.vertices:
            row.append(sum((v[c] for c in ycols), ZERO))
        rows.append(row)
        rhs.append(w_point[k])
    res = solve_min([ONE] * (nx + ny), rows, rhs)
    if not res.optimal:
        raise AssertionError("decomposition LP must be feasible for amalgam points")
    return res.value
