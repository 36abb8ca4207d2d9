"""Exception hierarchy and computation budgets.

Polytope operations can blow up combinatorially (vertex counts under
intersection, subset enumeration during facet conversion).  Nothing here
ever degrades to an approximation: when a budget is exceeded the operation
fails loudly with the partial work discarded.
"""

from __future__ import annotations

import os
from dataclasses import dataclass


class PolyBanachError(Exception):
    """Base class for all library errors."""


class NotFullDimensional(PolyBanachError):
    """Input points or map image do not span the required space."""


class NotInjective(PolyBanachError):
    """Induced linear map has a nontrivial kernel."""


class NotIsometric(PolyBanachError):
    """A morphism required to be an isometry failed certification."""


class InfeasibleSandwich(PolyBanachError):
    """No rational body fits strictly between the requested bounds."""


class PreconditionFailed(PolyBanachError):
    """Operation input violates a stated precondition."""


class ParseError(PolyBanachError):
    """A space or morphism file could not be parsed."""


class BudgetExceeded(PolyBanachError):
    """An enumeration exceeded its configured budget."""


class VertexBudgetExceeded(BudgetExceeded):
    """A polytope operation would produce or scan too many vertices."""


_DEFAULT_VERTEX_BUDGET = 20_000
_DEFAULT_SUBSET_BUDGET = 2_000_000


@dataclass(frozen=True)
class Budget:
    """Caps for combinatorial polytope work.

    max_vertices bounds candidate/output vertex and facet counts;
    max_subsets bounds how many index subsets a brute-force enumeration
    may visit.  The BUDGET environment variable, when set to an integer,
    overrides max_vertices globally (documented CLI knob).
    """

    max_vertices: int = _DEFAULT_VERTEX_BUDGET
    max_subsets: int = _DEFAULT_SUBSET_BUDGET

    def check_vertices(self, count: int, what: str) -> None:
        if count > self.max_vertices:
            raise VertexBudgetExceeded(
                f"{what}: {count} vertices exceeds budget {self.max_vertices}"
            )

    def check_subsets(self, count: int, what: str) -> None:
        if count > self.max_subsets:
            raise BudgetExceeded(
                f"{what}: {count} subsets exceeds budget {self.max_subsets}"
            )


def default_budget() -> Budget:
    """Budget honoring the optional BUDGET environment override."""
    raw = os.environ.get("BUDGET")
    if raw:
        try:
            return Budget(max_vertices=int(raw))
        except ValueError:
            pass
    return Budget()
