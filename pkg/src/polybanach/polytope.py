"""Exact symmetric-polytope algebra.

A Ball is an origin-symmetric full-dimensional polytope given by its
irredundant vertex set (V-rep), with an optional cached facet description
(H-rep, functionals f meaning f.x <= 1).  Balls are the unit balls of the
polyhedral norms this library works with; the Minkowski gauge recovers
the norm.

Two independent evaluation routes exist for the gauge and the tests cross
check them: a primal LP over the V-rep (always available, used for large
ambient dimensions where facet counts explode) and the facet maximum over
the H-rep (used when the conversion is affordable).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .errors import Budget, NotFullDimensional, default_budget
from .linalg import Vec, dot, mat_vec, rank, solve_unique, unit, vneg
from .rat import ONE, ZERO, Rat, rat
from .simplex import solve_min


@dataclass(frozen=True)
class Ball:
    """Origin-symmetric full-dimensional polytope in V-rep.

    vertices are canonically sorted (lexicographic) and irredundant when
    built through hull_reduce; facets, once computed, are cached on the
    instance (the cache does not take part in equality).
    """

    vertices: tuple[Vec, ...]
    dim: int
    _facets: tuple[Vec, ...] | None = field(default=None, compare=False, repr=False)

    def facets(self, budget: Budget | None = None) -> tuple[Vec, ...]:
        """Complete irredundant facet functionals, computed on first use."""
        if self._facets is None:
            fac = _enumerate_facets(self.vertices, self.dim, budget or default_budget())
            object.__setattr__(self, "_facets", fac)
        return self._facets

    @property
    def has_facets(self) -> bool:
        return self._facets is not None


def make_vector(values) -> Vec:
    return tuple(rat(v) for v in values)


def hull_reduce(points, budget: Budget | None = None) -> Ball:
    """Ball spanned by points and their negatives, reduced to extreme points.

    Duplicates and interior points are dropped by exact LP tests; the
    result's vertex order is lexicographic, so equal hulls always produce
    equal Balls.
    """
    budget = budget or default_budget()
    pts = set()
    for p in points:
        p = make_vector(p)
        pts.add(p)
        pts.add(vneg(p))
    candidates = sorted(pts)
    if not candidates:
        raise NotFullDimensional("no points given")
    dim = len(candidates[0])
    budget.check_vertices(len(candidates), "hull_reduce")
    if any(len(p) != dim for p in candidates):
        raise ValueError("points of mixed dimension")
    if rank(candidates) < dim:
        raise NotFullDimensional(
            f"points span rank {rank(candidates)} < dimension {dim}"
        )
    nonzero = [p for p in candidates if any(x != 0 for x in p)]
    keep = list(nonzero)
    i = 0
    while i < len(keep):
        others = keep[:i] + keep[i + 1 :]
        if _in_hull(keep[i], others):
            keep.pop(i)  # non-extreme points never support the hull
        else:
            i += 1
    return Ball(vertices=tuple(keep), dim=dim)


def _in_hull(point: Vec, generators: list[Vec]) -> bool:
    """Exact membership of point in conv(generators)."""
    if not generators:
        return all(x == 0 for x in point)
    n = len(generators)
    rows = [[g[k] for g in generators] for k in range(len(point))]
    rows.append([ONE] * n)
    rhs = list(point) + [ONE]
    res = solve_min([ZERO] * n, rows, rhs)
    return res.optimal


def _enumerate_facets(vertices, dim: int, budget: Budget) -> tuple[Vec, ...]:
    """All facet functionals of conv(vertices) by d-subset enumeration.

    Every facet of a full-dimensional polytope with 0 in its interior is
    {x : f.x = 1} for a unique f and contains dim linearly independent
    vertices, so scanning dim-subsets is complete.  Exponential in dim;
    guarded by the subset budget and meant for low-dimensional balls.
    """
    n = len(vertices)
    budget.check_subsets(comb(n, dim), f"facet enumeration over {n} vertices")
    facets = set()
    for subset in combinations(range(n), dim):
        m = tuple(vertices[i] for i in subset)
        f = solve_unique(m, (ONE,) * dim)
        if f is None or f in facets:
            continue
        if all(dot(f, v) <= 1 for v in vertices):
            facets.add(f)
    if not facets:
        raise NotFullDimensional("no facets found; polytope not full-dimensional")
    return tuple(sorted(facets))


def vrep_to_hrep(ball: Ball, budget: Budget | None = None) -> Ball:
    """Return the ball with its facet cache populated."""
    ball.facets(budget)
    return ball


def vertices_from_hrep(functionals, dim: int, budget: Budget | None = None) -> tuple[Vec, ...]:
    """Vertex set of {x : f.x <= 1 for all f}, which must be bounded.

    A point is a vertex exactly when it satisfies every inequality and
    makes dim linearly independent ones tight; dim-subset enumeration is
    therefore complete.  Redundant input inequalities are harmless.
    """
    budget = budget or default_budget()
    funcs = sorted(set(make_vector(f) for f in functionals))
    fset = set(funcs)
    if any(vneg(f) not in fset for f in funcs):
        raise ValueError("functionals must come in +/- pairs (symmetric body)")
    if rank(funcs) < dim:
        raise NotFullDimensional("inequality system is unbounded")
    budget.check_subsets(comb(len(funcs), dim), "vertex enumeration")
    verts = set()
    for subset in combinations(funcs, dim):
        x = solve_unique(subset, (ONE,) * dim)
        if x is None or x in verts:
            continue
        if all(dot(f, x) <= 1 for f in funcs):
            verts.add(x)
    budget.check_vertices(len(verts), "vertex enumeration")
    if not verts:
        raise NotFullDimensional("empty vertex set")
    return tuple(sorted(verts))


def gauge(ball: Ball, x) -> Rat:
    """Minkowski functional min{t >= 0 : x in t*ball}, exact.

    Uses the cached H-rep (max of facet values) when present, otherwise a
    primal LP over the V-rep.  The two routes agree; the test suite
    cross-checks them.
    """
    x = make_vector(x)
    if all(v == 0 for v in x):
        return ZERO
    if ball.has_facets:
        return max(dot(f, x) for f in ball.facets())
    return gauge_vrep(ball, x)


def gauge_vrep(ball: Ball, x) -> Rat:
    """Gauge by LP over the vertex representation (no facets needed)."""
    x = make_vector(x)
    if all(v == 0 for v in x):
        return ZERO
    verts = ball.vertices
    n = len(verts)
    rows = [[v[k] for v in verts] for k in range(ball.dim)]
    res = solve_min([ONE] * n, rows, list(x))
    if not res.optimal:
        raise NotFullDimensional("gauge LP infeasible; ball not full-dimensional")
    return res.value


def gauge_hrep(ball: Ball, x, budget: Budget | None = None) -> Rat:
    """Gauge as the maximum facet value (forces H-rep computation)."""
    x = make_vector(x)
    if all(v == 0 for v in x):
        return ZERO
    return max(dot(f, x) for f in ball.facets(budget))


def project(ball: Ball, rows, budget: Budget | None = None) -> Ball:
    """Image of the ball under a surjective linear map (rows: target x source).

    The image of a polytope is the hull of the vertex images; this is the
    unit ball of the quotient/pushforward norm.
    """
    m = tuple(make_vector(r) for r in rows)
    target_dim = len(m)
    if any(len(r) != ball.dim for r in m):
        raise ValueError("projection matrix width != ball dimension")
    if rank(m) < target_dim:
        raise NotFullDimensional("projection map is not surjective")
    return hull_reduce([mat_vec(m, v) for v in ball.vertices], budget)


def intersect(a: Ball, b: Ball, budget: Budget | None = None) -> Ball:
    """Intersection of two balls via merged H-reps and vertex enumeration."""
    if a.dim != b.dim:
        raise ValueError("dimension mismatch")
    budget = budget or default_budget()
    funcs = set(a.facets(budget)) | set(b.facets(budget))
    verts = vertices_from_hrep(funcs, a.dim, budget)
    return Ball(vertices=verts, dim=a.dim)


def contains(outer: Ball, inner: Ball) -> bool:
    """Exact containment: every inner vertex has outer gauge <= 1."""
    if outer.dim != inner.dim:
        raise ValueError("dimension mismatch")
    return all(gauge(outer, v) <= 1 for v in inner.vertices)


def strictly_contains(outer: Ball, inner: Ball) -> bool:
    """Containment with inner strictly inside on at least one vertex."""
    if not contains(outer, inner):
        return False
    return any(gauge(outer, v) < 1 for v in inner.vertices)


def scale(ball: Ball, factor) -> Ball:
    """The ball scaled by a positive rational factor."""
    factor = rat(factor)
    if factor <= 0:
        raise ValueError("scale factor must be positive")
    return Ball(
        vertices=tuple(sorted(tuple(factor * c for c in v) for v in ball.vertices)),
        dim=ball.dim,
    )


def slice_coordinates(ball: Ball, keep: tuple[int, ...], budget: Budget | None = None) -> Ball:
    """Ball cut by the coordinate subspace {x_i = 0 for i not in keep}.

    Facet functionals restricted to the kept coordinates give an H-rep of
    the slice (points of the subspace have zeros elsewhere), from which
    vertices are enumerated in the lower dimension.
    """
    budget = budget or default_budget()
    restricted = [tuple(f[i] for i in keep) for f in ball.facets(budget)]
    verts = vertices_from_hrep(restricted, len(keep), budget)
    return Ball(vertices=verts, dim=len(keep))


def cross_polytope(dim: int) -> Ball:
    verts = []
    for i in range(dim):
        e = unit(dim, i)
        verts.append(e)
        verts.append(vneg(e))
    return Ball(vertices=tuple(sorted(verts)), dim=dim)


def cube(dim: int) -> Ball:
    verts = []
    for bits in range(1 << dim):
        verts.append(tuple(ONE if bits >> i & 1 else -ONE for i in range(dim)))
    return Ball(vertices=tuple(sorted(verts)), dim=dim)
