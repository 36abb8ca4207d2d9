"""Finite-dimensional based Banach spaces with polyhedral norms.

A BasedSpace is an ordered tuple of basis labels together with the unit
ball of its norm; the basis order fixes coordinate order everywhere.
Valid spaces have every basis vector exactly on the unit sphere and a
symmetric full-dimensional ball, which makes the basis a normalized
unconditional basis with finite constants.

Spaces are immutable: renormings (one_basing) and subspaces are new
objects, so chain constructions keep their earlier stages intact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .errors import Budget, BudgetExceeded, default_budget
from .linalg import rank, unit, vneg
from .polytope import (
    Ball,
    gauge,
    gauge_vrep,
    hull_reduce,
    slice_coordinates,
    vertices_from_hrep,
)
from .rat import ONE, Rat, rat

#: sign/suppression patterns are plain mappings label -> coefficient
SignPattern = dict


@dataclass(frozen=True)
class BasedSpace:
    labels: tuple[str, ...]
    ball: Ball
    name: str | None = field(default=None, compare=False)
    _ku: Rat | None = field(default=None, compare=False, repr=False)
    _ks: Rat | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("basis labels must be distinct")
        if len(self.labels) != self.ball.dim:
            raise ValueError("label count != ball dimension")

    @property
    def dim(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def basis_vector(self, label: str):
        return unit(self.dim, self.index(label))

    def norm(self, x) -> Rat:
        return gauge(self.ball, x)


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple[Check, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def as_dict(self) -> dict:
        return {c.name: {"passed": c.passed, "detail": c.detail} for c in self.checks}


def validate(space: BasedSpace) -> ValidationReport:
    """Check the based-space axioms; failures are reported, not raised."""
    checks = []
    verts = set(space.ball.vertices)
    symmetric = all(vneg(v) in verts for v in verts)
    checks.append(Check("symmetry", symmetric))

    full = rank(space.ball.vertices) == space.dim
    checks.append(Check("full_dimension", full, f"dim {space.dim}"))

    irredundant = True
    detail = ""
    if symmetric and full:
        reduced = hull_reduce(space.ball.vertices)
        irredundant = reduced.vertices == tuple(sorted(verts))
        if not irredundant:
            dropped = sorted(verts - set(reduced.vertices))
            detail = f"non-extreme vertices: {dropped[:3]}"
    checks.append(Check("irredundancy", irredundant, detail))

    unit_norms = True
    detail = ""
    if full:
        for b in space.labels:
            g = gauge_vrep(space.ball, space.basis_vector(b))
            if g != 1:
                unit_norms = False
                detail = f"gauge(e_{b}) = {g}"
                break
    checks.append(Check("unit_basis_norms", unit_norms, detail))

    # coordinates are rational by construction; recorded for provenance
    checks.append(Check("rationality", True, "all coordinates exact rationals"))
    return ValidationReport(tuple(checks))


def sign_operator(space: BasedSpace, signs: SignPattern):
    """Diagonal matrix of the coefficient pattern (values in {-1,0,1})."""
    missing = [b for b in space.labels if b not in signs]
    if missing:
        raise ValueError(f"pattern missing labels {missing}")
    return tuple(
        tuple(rat(signs[b]) if i == j else rat(0) for j in range(space.dim))
        for i, b in enumerate(space.labels)
    )


def apply_signs(vector, signs_row) -> tuple:
    return tuple(s * x for s, x in zip(signs_row, vector))


def _sign_rows(dim: int, half: bool):
    """Sign tuples in {-1,1}^dim; half=True fixes the first sign to +1."""
    first = (ONE,) if half else (ONE, -ONE)
    for head in first:
        for rest in product((ONE, -ONE), repeat=dim - 1):
            yield (head,) + rest


def _pattern_budget(space: BasedSpace, budget: Budget, what: str) -> None:
    count = (1 << (space.dim - 1)) * len(space.ball.vertices)
    budget.check_subsets(count, what)


def unconditional_constant(space: BasedSpace, budget: Budget | None = None) -> Rat:
    """Largest norm growth under sign flips of the coordinates.

    Maximum of gauge(T_s v) over sign patterns s and vertices v; central
    symmetry halves the patterns (T_{-s} = -T_s and the gauge is even).
    The value is cached on the space.
    """
    if space._ku is not None:
        return space._ku
    budget = budget or default_budget()
    _pattern_budget(space, budget, "unconditional constant enumeration")
    use_hrep = _hrep_affordable(space)
    best = ONE
    for signs in _sign_rows(space.dim, half=True):
        for v in space.ball.vertices:
            flipped = tuple(s * x for s, x in zip(signs, v))
            g = gauge(space.ball, flipped) if use_hrep else gauge_vrep(space.ball, flipped)
            if g > best:
                best = g
    object.__setattr__(space, "_ku", best)
    return best


def suppression_constant(space: BasedSpace, budget: Budget | None = None) -> Rat:
    """Largest norm growth under coordinate suppressions (0/1 patterns)."""
    if space._ks is not None:
        return space._ks
    budget = budget or default_budget()
    _pattern_budget(space, budget, "suppression constant enumeration")
    use_hrep = _hrep_affordable(space)
    best = ONE
    zero = rat(0)
    for mask in range(1, 1 << space.dim):
        keep = [(mask >> i) & 1 for i in range(space.dim)]
        if all(keep):
            continue  # identity, gauge 1
        for v in space.ball.vertices:
            suppressed = tuple(x if k else zero for x, k in zip(v, keep))
            if all(x == 0 for x in suppressed):
                continue
            g = gauge(space.ball, suppressed) if use_hrep else gauge_vrep(space.ball, suppressed)
            if g > best:
                best = g
    object.__setattr__(space, "_ks", best)
    return best


def _hrep_affordable(space: BasedSpace) -> bool:
    """Heuristic: use facet-max gauge when the conversion is cheap.

    Facet enumeration scans C(n, d) subsets; beyond a few thousand the
    V-rep LP route wins.  Either route is exact.
    """
    if space.ball.has_facets:
        return True
    from math import comb

    return comb(len(space.ball.vertices), space.dim) <= 20_000


def one_basing(space: BasedSpace, budget: Budget | None = None) -> BasedSpace:
    """Renorm so every sign flip is an isometry (unconditional constant 1).

    The new unit ball is the intersection of all sign reflections of the
    old one; its H-rep is the sign closure of the old facet set, and the
    new gauge is max over flips of the old gauge.  The old norm is a
    lower bound and K_u times it an upper bound.
    """
    budget = budget or default_budget()
    base = space.ball.facets(budget)
    closed = set()
    for f in base:
        for signs in _sign_rows(space.dim, half=False):
            closed.add(tuple(s * c for s, c in zip(signs, f)))
    budget.check_vertices(len(closed), "one_basing sign closure")
    verts = vertices_from_hrep(closed, space.dim, budget)
    return BasedSpace(labels=space.labels, ball=Ball(vertices=verts, dim=space.dim),
                      name=space.name)


def subspace(space: BasedSpace, sub_labels, budget: Budget | None = None) -> BasedSpace:
    """Based subspace on a label subset; the ball is the coordinate slice."""
    sub = tuple(sub_labels)
    if not sub:
        raise ValueError("subspace needs at least one label")
    missing = [b for b in sub if b not in space.labels]
    if missing:
        raise ValueError(f"labels not in space: {missing}")
    if len(set(sub)) != len(sub):
        raise ValueError("duplicate subspace labels")
    ordered = tuple(b for b in space.labels if b in set(sub))
    if ordered == space.labels:
        return space
    keep = tuple(space.index(b) for b in ordered)
    ball = slice_coordinates(space.ball, keep, budget)
    return BasedSpace(labels=ordered, ball=ball)


def is_sign_invariant(space: BasedSpace) -> bool:
    """True when every sign reflection maps the ball onto itself."""
    verts = set(space.ball.vertices)
    for signs in _sign_rows(space.dim, half=True):
        for v in space.ball.vertices:
            if tuple(s * x for s, x in zip(signs, v)) not in verts:
                return False
    return True
