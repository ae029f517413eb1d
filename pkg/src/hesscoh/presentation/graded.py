"""
Graded linear algebra for homogeneous ideals.

The degree-d piece of an ideal is the row space of its Macaulay matrix
(generator times complementary monomial, against all degree-d monomials);
quotient dimensions and ideal membership are rank computations over QQ.
"""

from __future__ import annotations

import logging
import threading
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from ..algebra.polyring import (
    Exponent,
    HilbertSeriesPoly,
    SparsePolynomial,
    monomials_of_degree,
)
from ..config.settings import SETTINGS
from ..core.models import Counterexample, IdealEqualityReport, RegularityReport
from .relations import IdealPresentation, NonHomogeneousError

logger = logging.getLogger(__name__)


class DegreeBoundError(ValueError):
    """The requested degree bound cannot certify the claim."""


def _rank(rows: List[Dict[int, Fraction]], width: int) -> int:
    keyed = {}
    for row in rows:
        if row:
            keyed[len(keyed)] = {col: QQ(c.numerator, c.denominator) for col, c in row.items()}
    if not keyed or width == 0:
        return 0
    return int(DomainMatrix(keyed, (len(keyed), width), QQ).rank())


class GradedQuotient:
    """
    k[vars] / I with per-degree ranks cached.

    Linear generators are eliminated first by solving for their last variable;
    the remaining ring and generators are stored in ``context`` and
    ``generators``, and ``reduce`` carries any polynomial across.
    """

    def __init__(self, ideal: IdealPresentation):
        self.ideal = ideal
        self.ambient = ideal.context
        context = ideal.context
        gens = [g for g in ideal.generators]
        steps: List[Tuple[str, SparsePolynomial]] = []
        while True:
            linear = next((g for g in gens if g.degree() == 1), None)
            if linear is None:
                break
            name = self._pivot(linear)
            index = context.index(name)
            coefficient = linear.coefficient(tuple(1 if k == index else 0 for k in range(context.size)))
            # name = name - linear/coefficient, which no longer involves name
            solution = SparsePolynomial.variable(context, name) - linear.scale(1 / coefficient)
            target = context.without([name])
            image = solution.substitute({name: SparsePolynomial.zero(target)}, target)
            steps.append((name, image))
            reduced = []
            for g in gens:
                if g is linear:
                    continue
                h = g.substitute({name: image}, target)
                if h:
                    reduced.append(h)
            gens = reduced
            context = target
        self._steps = steps
        self.context = context
        self.generators: Tuple[SparsePolynomial, ...] = tuple(gens)
        for g in self.generators:
            if not g.is_homogeneous():
                raise NonHomogeneousError(f"generator {g} is not homogeneous")
        self._ranks: Dict[int, int] = {}
        self._rows: Dict[int, List[Dict[int, Fraction]]] = {}
        self._lock = threading.Lock()
        logger.debug(
            "Quotient %s: eliminated %d linear generators, %d variables remain",
            ideal.label,
            len(steps),
            context.size,
        )

    @staticmethod
    def _pivot(linear: SparsePolynomial) -> str:
        names = linear.context.names
        for index in range(len(names) - 1, -1, -1):
            exp = tuple(1 if k == index else 0 for k in range(len(names)))
            if linear.coefficient(exp):
                return names[index]
        raise NonHomogeneousError(f"{linear} has no linear term")

    @property
    def variable_count(self) -> int:
        return self.context.size

    def reduce(self, poly: SparsePolynomial) -> SparsePolynomial:
        """Image of an ambient polynomial in the reduced ring."""
        if poly.context != self.ambient:
            raise ValueError(f"{poly} is not over {self.ambient.names}")
        current = poly
        for name, image in self._steps:
            current = current.substitute({name: image}, image.context)
        return current

    # -- Macaulay matrices --------------------------------------------------

    def _columns(self, degree: int) -> Dict[Exponent, int]:
        return {exp: k for k, exp in enumerate(monomials_of_degree(self.variable_count, degree))}

    def _macaulay_rows(self, degree: int) -> List[Dict[int, Fraction]]:
        cached = self._rows.get(degree)
        if cached is not None:
            return cached
        columns = self._columns(degree)
        rows: List[Dict[int, Fraction]] = []
        for g in self.generators:
            shift = degree - g.degree()
            if shift < 0:
                continue
            for mono in monomials_of_degree(self.variable_count, shift):
                row = {
                    columns[tuple(a + b for a, b in zip(exp, mono))]: coeff
                    for exp, coeff in g.terms.items()
                }
                rows.append(row)
        with self._lock:
            self._rows[degree] = rows
        return rows

    def _vector(self, poly: SparsePolynomial, degree: int) -> Dict[int, Fraction]:
        columns = self._columns(degree)
        return {columns[exp]: coeff for exp, coeff in poly.terms.items()}

    def ideal_rank(self, degree: int) -> int:
        cached = self._ranks.get(degree)
        if cached is not None:
            return cached
        width = len(monomials_of_degree(self.variable_count, degree))
        rank = _rank(self._macaulay_rows(degree), width)
        with self._lock:
            self._ranks[degree] = rank
        logger.debug("%s: degree %d rank %d of %d", self.ideal.label, degree, rank, width)
        return rank

    def dimension(self, degree: int) -> int:
        """dim of the quotient in polynomial degree ``degree``."""
        if degree < 0:
            return 0
        return len(monomials_of_degree(self.variable_count, degree)) - self.ideal_rank(degree)

    def hilbert_function(self, up_to: int) -> Dict[int, int]:
        """{cohomological degree: dimension} for cohomological degrees <= up_to."""
        return {2 * d: self.dimension(d) for d in range(up_to // 2 + 1)}

    def rank_modulo(self, polys: Sequence[SparsePolynomial], degree: int) -> int:
        """Rank of the given degree-d reduced polynomials modulo the ideal."""
        width = len(monomials_of_degree(self.variable_count, degree))
        extra = [self._vector(p, degree) for p in polys if p]
        if not extra:
            return 0
        return _rank(self._macaulay_rows(degree) + extra, width) - self.ideal_rank(degree)

    def contains(self, poly: SparsePolynomial) -> bool:
        reduced = self.reduce(poly)
        for degree, component in reduced.homogeneous_components().items():
            if degree == 0 or self.rank_modulo([component], degree) != 0:
                return False
        return True


def hilbert_function(ideal: IdealPresentation, up_to: int) -> Dict[int, int]:
    """Hilbert function of k[vars]/ideal up to cohomological degree ``up_to``."""
    return GradedQuotient(ideal).hilbert_function(up_to)


def is_regular_sequence(
    ideal: IdealPresentation,
    up_to: Optional[int] = None,
    quotient: Optional[GradedQuotient] = None,
) -> RegularityReport:
    """
    Regularity through the Hilbert-series product formula. With as many
    generators as variables, the quotient must also vanish in some degree.

    Args:
        ideal: Homogeneous ideal to test.
        up_to: Last cohomological degree compared; defaults to the expected
            top degree plus ``regularity_extra_degrees`` for square systems.
        quotient: GradedQuotient of ``ideal`` to reuse, if already built.

    Returns:
        RegularityReport with ``up_to`` recorded. Degrees are cohomological.

    Raises:
        DegreeBoundError: up_to is below the degree needed to see the
            quotient vanish.
    """
    m = ideal.context.size
    degrees = ideal.degrees()
    report = RegularityReport(
        generator_degrees=[2 * d for d in degrees], variable_count=m, up_to=up_to or 0
    )
    if len(degrees) > m:
        report.regular = False
        report.hilbert_matches = False
        report.failures.append(Counterexample(label="length", value=f"{len(degrees)} generators in {m} variables"))
        return report
    expected = HilbertSeriesPoly.from_generator_degrees(degrees, m)
    square = len(degrees) == m
    minimum = expected.top_degree() + 2 if square else 0
    if up_to is None:
        base = expected.top_degree()
        up_to = base + SETTINGS.regularity_extra_degrees if square else base + 2 * SETTINGS.degree_margin
        up_to = max(up_to, minimum)
    if up_to < minimum:
        raise DegreeBoundError(
            f"finite-dimensionality needs degree >= {minimum}, got {up_to}"
        )
    report.up_to = up_to
    quotient = quotient or GradedQuotient(ideal)
    actual = quotient.hilbert_function(up_to)
    target = expected.expand(up_to)
    for degree in sorted(target):
        if actual[degree] != target[degree]:
            report.hilbert_matches = False
            report.failures.append(
                Counterexample(label="hilbert", point=f"degree {degree}", value=f"{actual[degree]} != {target[degree]}")
            )
    if square:
        report.finite_dimensional = actual[expected.top_degree() + 2] == 0
    report.regular = report.hilbert_matches and report.finite_dimensional is not False
    logger.info("Regular sequence check up to degree %d: %s", up_to, report.regular)
    return report


def ideals_equal(
    left: IdealPresentation,
    right: IdealPresentation,
    margin: Optional[int] = None,
) -> IdealEqualityReport:
    """Mutual generator membership plus equal graded dimensions."""
    if left.context != right.context:
        raise ValueError(f"ideals over {left.context.names} and {right.context.names}")
    margin = SETTINGS.degree_margin if margin is None else margin
    top = max(left.degrees() + right.degrees()) + margin
    left_q = GradedQuotient(left)
    right_q = GradedQuotient(right)
    report = IdealEqualityReport(left=left.label, right=right.label, up_to=2 * top)
    report.left_in_right = all(right_q.contains(g) for g in left.generators)
    report.right_in_left = all(left_q.contains(g) for g in right.generators)
    report.dimensions_agree = all(left_q.dimension(d) == right_q.dimension(d) for d in range(top + 1))
    report.equal = report.left_in_right and report.right_in_left and report.dimensions_agree
    logger.info("Ideal equality %s vs %s: %s", left.label, right.label, report.equal)
    return report

