"""Basis-preserving linear maps and their exact norm bounds.

Morphisms are injective maps of basis labels; the induced operator sends
each domain basis vector to the matching codomain basis vector.  General
linear maps (sign flips, quotients) appear only inside other modules.

operator_norm is a maximum over domain vertices.  min_gain minimizes the
codomain gauge over the boundary of the domain ball, one exact LP per
domain facet, so it needs the domain H-rep (callers keep those domains
low-dimensional) but only the V-rep of the codomain, which may be large.
Both bounds are cached on the morphism instance.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import Budget, NotInjective
from .linalg import dot, rank
from .polytope import gauge, make_vector
from .rat import ONE, ZERO, Rat
from .simplex import solve_min
from .space import BasedSpace


@dataclass(frozen=True)
class BasedMorphism:
    domain: BasedSpace
    codomain: BasedSpace
    basis_map: dict
    _norm_cache: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        mapped = [self.basis_map.get(b) for b in self.domain.labels]
        if any(m is None for m in mapped):
            raise ValueError("basis_map must cover every domain label")
        if len(set(mapped)) != len(mapped):
            raise NotInjective("basis_map is not injective on labels")
        unknown = [m for m in mapped if m not in self.codomain.labels]
        if unknown:
            raise ValueError(f"image labels not in codomain: {unknown}")

    def apply_label(self, label: str) -> str:
        return self.basis_map[label]

    def apply(self, x) -> tuple:
        """Image of a domain coordinate vector in codomain coordinates."""
        x = make_vector(x)
        out = [ZERO] * self.codomain.dim
        for i, b in enumerate(self.domain.labels):
            out[self.codomain.index(self.basis_map[b])] = x[i]
        return tuple(out)


@dataclass(frozen=True)
class IsometryMargin:
    """Exact two-sided distortion bounds of an injective morphism."""

    upper: Rat  # operator norm
    lower: Rat  # minimum of the image norm over the unit sphere


def identity_morphism(space: BasedSpace) -> BasedMorphism:
    return BasedMorphism(space, space, {b: b for b in space.labels})


def compose(g: BasedMorphism, f: BasedMorphism) -> BasedMorphism:
    if f.codomain is not g.domain and f.codomain != g.domain:
        raise ValueError("composition mismatch")
    return BasedMorphism(
        f.domain, g.codomain, {b: g.basis_map[f.basis_map[b]] for b in f.domain.labels}
    )


def operator_norm(f: BasedMorphism) -> Rat:
    """max of codomain gauge over domain-ball vertices; exact."""
    cached = f._norm_cache.get("upper")
    if cached is not None:
        return cached
    value = max(gauge(f.codomain.ball, f.apply(v)) for v in f.domain.ball.vertices)
    f._norm_cache["upper"] = value
    return value


def min_gain(f: BasedMorphism, budget: Budget | None = None) -> Rat:
    return _min_gain_witness(f, budget)[0]


def min_gain_witness(f: BasedMorphism, budget: Budget | None = None):
    """(value, domain boundary point attaining it)."""
    return _min_gain_witness(f, budget)


def _min_gain_witness(f: BasedMorphism, budget: Budget | None = None):
    cached = f._norm_cache.get("lower")
    if cached is not None:
        return cached
    if rank([f.apply(v) for v in f.domain.ball.vertices]) < f.domain.dim:
        raise NotInjective("induced map has a nontrivial kernel")
    dom = f.domain.ball
    cod = f.codomain.ball
    images = [f.apply(v) for v in dom.vertices]
    best = None
    witness = None
    for facet in dom.facets(budget):
        tight = [i for i, v in enumerate(dom.vertices) if dot(facet, v) == 1]
        value, point = _facet_min(dom, cod, images, tight)
        if best is None or value < best:
            best, witness = value, point
    f._norm_cache["lower"] = (best, witness)
    return best, witness


def _facet_min(dom, cod, images, tight):
    """min of codomain gauge over one domain facet, by a single LP.

    Variables: convex weights l over the facet's vertices and a hull
    decomposition m of the image over codomain vertices; minimizing sum(m)
    subject to sum_j m_j w_j = f(sum_i l_i v_i), sum_i l_i = 1 yields the
    smallest codomain gauge attained on the facet.
    """
    nl = len(tight)
    nm = len(cod.vertices)
    d = cod.dim
    rows = []
    for k in range(d):
        row = [-images[i][k] for i in tight] + [w[k] for w in cod.vertices]
        rows.append(row)
    rows.append([ONE] * nl + [ZERO] * nm)
    rhs = [ZERO] * d + [ONE]
    cost = [ZERO] * nl + [ONE] * nm
    res = solve_min(cost, rows, rhs)
    if not res.optimal:
        raise AssertionError("facet minimization LP must be feasible")
    weights = res.x[:nl]
    verts = dom.vertices
    point = tuple(
        sum((weights[j] * verts[i][k] for j, i in enumerate(tight)), ZERO)
        for k in range(dom.dim)
    )
    return res.value, point


def isometry_margin(f: BasedMorphism, budget: Budget | None = None) -> IsometryMargin:
    return IsometryMargin(upper=operator_norm(f), lower=min_gain(f, budget))


def certify_isometry(f: BasedMorphism, budget: Budget | None = None) -> bool:
    """True exactly when the morphism preserves the norm everywhere."""
    if operator_norm(f) != 1:
        return False
    return min_gain(f, budget) == 1


def eps_margin(f: BasedMorphism, budget: Budget | None = None) -> Rat:
    """Smallest strict distortion bound: f is an e-isometry iff e > margin.

    Returning the exact margin instead of a boolean at a given tolerance
    keeps the strictness of the defining inequalities unambiguous.
    """
    m = isometry_margin(f, budget)
    return max(m.upper, ONE / m.lower) - ONE
