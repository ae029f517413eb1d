"""
Generators of the presentation ideals: the f_{i,j} recursion, I_h and its
t = 0 version, flag relations and Peterson quadratics.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from ..algebra.polyring import SparsePolynomial, VariableContext, elementary_symmetric
from ..core.models import Provenance
from ..localization.hessenberg import HessenbergFunction

logger = logging.getLogger(__name__)


class IndexRangeError(ValueError):
    """f_{i,j} requested outside 1 <= j <= i <= n."""


class NonHomogeneousError(ValueError):
    """An ideal generator is not homogeneous of positive degree."""


@dataclass(frozen=True)
class IdealPresentation:
    context: VariableContext
    generators: Tuple[SparsePolynomial, ...]
    provenance: Provenance
    label: str = ""

    def __post_init__(self) -> None:
        object.__setattr__(self, "generators", tuple(self.generators))
        for g in self.generators:
            if g.context != self.context:
                raise ValueError(f"generator {g} is not over {self.context.names}")
            if g.is_zero() or not g.is_homogeneous() or g.degree() < 1:
                raise NonHomogeneousError(f"generator {g} is not homogeneous of positive degree")

    @property
    def equivariant(self) -> bool:
        return "t" in self.context.names

    def degrees(self) -> List[int]:
        """Polynomial degrees of the generators."""
        return [g.degree() for g in self.generators]

    def at_t_zero(self) -> "IdealPresentation":
        """Drop t (set it to 0); vanishing generators are discarded."""
        if not self.equivariant:
            return self
        target = self.context.without(["t"])
        images = {"t": SparsePolynomial.zero(target)}
        gens = [g.substitute(images, target) for g in self.generators]
        return IdealPresentation(target, tuple(g for g in gens if g), self.provenance, self.label)

    def formatted(self) -> List[str]:
        return [g.format() for g in self.generators]


def _flag_context(n: int, with_t: bool) -> VariableContext:
    return VariableContext.flag(n, with_t=with_t)


def g_j(j: int, n: int, with_t: bool = True) -> SparsePolynomial:
    """g_j = sum_{k<=j} (x_k - k t)."""
    if not 1 <= j <= n:
        raise IndexRangeError(f"g_{j} requires 1 <= j <= {n}")
    context = _flag_context(n, with_t)
    total = SparsePolynomial.zero(context)
    for k in range(1, j + 1):
        total = total + SparsePolynomial.variable(context, f"x{k}")
        if with_t:
            total = total - SparsePolynomial.variable(context, "t") * k
    return total


@lru_cache(maxsize=None)
def _f_table(n: int, with_t: bool) -> Dict[Tuple[int, int], SparsePolynomial]:
    context = _flag_context(n, with_t)
    x = {k: SparsePolynomial.variable(context, f"x{k}") for k in range(1, n + 1)}
    t = SparsePolynomial.variable(context, "t") if with_t else SparsePolynomial.zero(context)
    zero = SparsePolynomial.zero(context)
    table: Dict[Tuple[int, int], SparsePolynomial] = {}
    for j in range(1, n + 1):
        table[(j, j)] = g_j(j, n, with_t)
    for i in range(2, n + 1):
        for j in range(1, i):
            previous_diagonal = table[(i - 1, j - 1)] if j > 1 else zero
            table[(i, j)] = previous_diagonal + (x[j] - x[i] - t) * table[(i - 1, j)]
    return table


def f_ij(i: int, j: int, n: int, with_t: bool = True) -> SparsePolynomial:
    """f_{i,j} = f_{i-1,j-1} + (x_j - x_i - t) f_{i-1,j}; f_{j,j} = g_j, f_{*,0} = 0."""
    if not 1 <= j <= i <= n:
        raise IndexRangeError(f"f_({i},{j}) requires 1 <= j <= i <= n = {n}")
    return _f_table(n, with_t)[(i, j)]


def fij_table(n: int, with_t: bool = True) -> List[Tuple[int, int, SparsePolynomial]]:
    """All f_{i,j}, ordered by j then i."""
    table = _f_table(n, with_t)
    return [(i, j, table[(i, j)]) for j in range(1, n + 1) for i in range(j, n + 1)]


def ideal_for(h: HessenbergFunction, with_t: bool = True) -> IdealPresentation:
    """I_h = (f_{h(j),j} | j in [n]), or its t = 0 version."""
    n = h.n
    gens = tuple(f_ij(h(j), j, n, with_t) for j in range(1, n + 1))
    return IdealPresentation(_flag_context(n, with_t), gens, Provenance.HESSENBERG, f"h=({h})")


def flag_relations(n: int, with_t: bool = True) -> IdealPresentation:
    """e_i(x) - e_i(1, ..., n) t^i, the restriction of e_i(x) - e_i(t_1..t_n)."""
    context = _flag_context(n, with_t)
    x = [SparsePolynomial.variable(context, f"x{k}") for k in range(1, n + 1)]
    integers = [SparsePolynomial.constant(context, k) for k in range(1, n + 1)]
    gens = []
    for i in range(1, n + 1):
        relation = elementary_symmetric(i, x)
        if with_t:
            t = SparsePolynomial.variable(context, "t")
            relation = relation - elementary_symmetric(i, integers) * t**i
        gens.append(relation)
    return IdealPresentation(context, tuple(gens), Provenance.FLAG_RELATIONS, f"flag n={n}")


def peterson_quadratics(n: int, with_t: bool = True, in_x: bool = False) -> IdealPresentation:
    """
    z_k (z_k - z_{k-1}/2 - z_{k+1}/2 - t) for k in [n-1], z_0 = z_n = 0.

    With ``in_x`` the z_k are rewritten as g_k and g_n is appended, giving an
    ideal of the same ring as I_h.
    """
    if n < 2:
        raise ValueError("Peterson quadratics need n >= 2")
    context = VariableContext.peterson_z(n, with_t=with_t)
    z = {k: SparsePolynomial.variable(context, f"z{k}") for k in range(1, n)}
    zero = SparsePolynomial.zero(context)
    t = SparsePolynomial.variable(context, "t") if with_t else zero
    half = Fraction(1, 2)
    gens = []
    for k in range(1, n):
        below = z.get(k - 1, zero)
        above = z.get(k + 1, zero)
        gens.append(z[k] * (z[k] - below * half - above * half - t))
    if not in_x:
        return IdealPresentation(context, tuple(gens), Provenance.PETERSON_QUADRATICS, f"Peterson z n={n}")
    target = _flag_context(n, with_t)
    images = {f"z{k}": g_j(k, n, with_t) for k in range(1, n)}
    rewritten = [g.substitute(images, target) for g in gens]
    rewritten.append(g_j(n, n, with_t))
    return IdealPresentation(target, tuple(rewritten), Provenance.PETERSON_QUADRATICS, f"Peterson n={n}")


def user_ideal(context: VariableContext, generators: Sequence[SparsePolynomial], label: str = "") -> IdealPresentation:
    return IdealPresentation(context, tuple(generators), Provenance.USER, label)
