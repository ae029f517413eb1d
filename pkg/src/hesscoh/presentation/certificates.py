"""
Checkable consequences of the presentation theorems: localization vanishing,
Hilbert series, regularity, monomial bases, Peterson presentations and the
continued-fraction regularity condition.
"""

from __future__ import annotations

import itertools
import logging
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from ..algebra.permgroup import Permutation
from ..algebra.polyring import (
    Exponent,
    HilbertSeriesPoly,
    SparsePolynomial,
    VariableContext,
    format_rational,
)
from ..algebra.rootsys import CartanDatum
from ..config.settings import SETTINGS
from ..core.models import (
    ContinuedFractionReport,
    Counterexample,
    HessenbergCertificate,
    HilbertReport,
    MonomialBasisReport,
    PetersonPresentationReport,
    Provenance,
    VanishingReport,
    VanishingRow,
)
from ..localization.hessenberg import HessenbergFunction, all_subsets, fixed_points, subset_to_wA
from ..localization.peterson import cartan_calculus, simple_class_fast
from .graded import GradedQuotient, ideals_equal, is_regular_sequence
from .relations import IdealPresentation, ideal_for, peterson_quadratics

logger = logging.getLogger(__name__)


class ContinuedFractionError(ZeroDivisionError):
    """x_{m-1} = 0 in the continued-fraction recursion."""

    def __init__(self, m: int):
        super().__init__(f"x_{m - 1} = 0, so x_{m} is undefined")
        self.m = m


# -- localization -----------------------------------------------------------


def localize(poly: SparsePolynomial, w: Permutation) -> SparsePolynomial:
    """x_i -> w(i) t, t -> t."""
    target = VariableContext.equivariant()
    t = SparsePolynomial.variable(target, "t")
    images: Dict[str, SparsePolynomial] = {f"x{i}": t * w(i) for i in range(1, w.n + 1)}
    if "t" not in poly.context.names:
        images = {name: image for name, image in images.items() if name in poly.context.names}
    return poly.substitute(images, target)


def vanishing_rows(ideal: IdealPresentation, w: Permutation) -> List[VanishingRow]:
    return [
        VanishingRow(generator=g.format(), point=w.format(), value=localize(g, w).format())
        for g in ideal.generators
    ]


def collect_vanishing(label: str, rows: Sequence[VanishingRow]) -> VanishingReport:
    report = VanishingReport(label=label, checks=len(rows), rows=list(rows))
    for row in rows:
        if row.value != "0":
            report.passed = False
            report.failures.append(Counterexample(label=row.generator, point=row.point, value=row.value))
    return report


def verify_vanishing(h: HessenbergFunction) -> VanishingReport:
    """Every f_{h(j),j} restricts to 0 at every fixed point of h."""
    ideal = ideal_for(h, with_t=True)
    rows = [row for w in fixed_points(h) for row in vanishing_rows(ideal, w)]
    report = collect_vanishing(f"h=({h})", rows)
    logger.info("Vanishing for h=(%s): %d checks, passed=%s", h, report.checks, report.passed)
    return report


# -- Hilbert series ---------------------------------------------------------


def expected_poincare(h: HessenbergFunction) -> HilbertSeriesPoly:
    """prod_j (1 + q^2 + ... + q^{2(h(j)-j)})."""
    series = HilbertSeriesPoly()
    for j in range(1, h.n + 1):
        series = series * HilbertSeriesPoly.q_integer(h(j) - j + 1)
    return series


def hilbert_report(
    quotient: GradedQuotient,
    expected: HilbertSeriesPoly,
    up_to: Optional[int] = None,
) -> HilbertReport:
    if up_to is None:
        up_to = expected.top_degree() + SETTINGS.regularity_extra_degrees
    actual = quotient.hilbert_function(up_to)
    target = expected.expand(up_to)
    return HilbertReport(
        label=quotient.ideal.label,
        equivariant=quotient.ideal.equivariant,
        up_to=up_to,
        dimensions=actual,
        expected=target,
        expected_series=expected.format(),
        passed=actual == target,
    )


# -- monomial basis ---------------------------------------------------------


def monomial_basis(h: HessenbergFunction) -> List[Exponent]:
    """{m : 0 <= m_i <= h(i) - i}, lexicographic."""
    ranges = [range(h(i) - i + 1) for i in range(1, h.n + 1)]
    return [tuple(m) for m in itertools.product(*ranges)]


def verify_monomial_basis(h: HessenbergFunction, quotient: Optional[GradedQuotient] = None) -> MonomialBasisReport:
    """The monomials x^m span and are independent in every degree of k[x]/(f-check)."""
    quotient = quotient or GradedQuotient(ideal_for(h, with_t=False))
    basis = monomial_basis(h)
    context = quotient.ambient
    by_degree: Dict[int, List[SparsePolynomial]] = {}
    for exp in basis:
        by_degree.setdefault(sum(exp), []).append(SparsePolynomial.monomial(context, exp))
    top = max(by_degree)
    total = sum(quotient.dimension(d) for d in range(top + 2))
    report = MonomialBasisReport(h=list(h.values), size=len(basis), total_dimension=total)
    for degree in range(top + 2):
        monomials = [quotient.reduce(m) for m in by_degree.get(degree, [])]
        rank = quotient.rank_modulo(monomials, degree) if monomials else 0
        dimension = quotient.dimension(degree)
        if rank != len(monomials):
            report.independent = False
        if rank != len(monomials) or rank != dimension:
            report.failures.append(
                Counterexample(
                    label="monomial basis",
                    point=f"degree {2 * degree}",
                    value=f"rank {rank}, monomials {len(monomials)}, dimension {dimension}",
                )
            )
    report.passed = not report.failures and report.size == report.total_dimension
    return report


# -- full certificate -------------------------------------------------------


def verify_hessenberg(h: HessenbergFunction, vanishing: Optional[VanishingReport] = None) -> HessenbergCertificate:
    """
    Full certificate for the presentation of H^*_S(Hess(N, h)).

    Args:
        h: Hessenberg function to certify.
        vanishing: Precomputed vanishing report, e.g. from the threaded
            pipeline; computed here when omitted.

    Returns:
        HessenbergCertificate holding the vanishing, Hilbert series,
        regularity and monomial-basis reports. ``passed`` is their conjunction.
    """
    vanishing = vanishing or verify_vanishing(h)
    ordinary = ideal_for(h, with_t=False)
    quotient = GradedQuotient(ordinary)
    hilbert = hilbert_report(quotient, expected_poincare(h))
    regularity = is_regular_sequence(ordinary, quotient=quotient)
    basis = verify_monomial_basis(h, quotient)
    certificate = HessenbergCertificate(
        h=list(h.values),
        indecomposable=h.is_indecomposable(),
        fixed_point_count=len(fixed_points(h)),
        vanishing=vanishing,
        hilbert=hilbert,
        regularity=regularity,
        monomial_basis=basis,
    )
    certificate.passed = vanishing.passed and hilbert.passed and regularity.regular and basis.passed
    if not certificate.passed:
        logger.warning("Certificate failed for h=(%s)", h)
    return certificate


# -- Peterson presentations -------------------------------------------------


def peterson_presentation_check(n: int) -> PetersonPresentationReport:
    """Quadratic presentation in type A against I_h for h = (2, 3, ..., n, n)."""
    quadratics = peterson_quadratics(n, with_t=True)
    report = PetersonPresentationReport(label=f"A{n - 1}", relations=quadratics.formatted())

    report.ideal_equality = ideals_equal(
        peterson_quadratics(n, with_t=True, in_x=True), ideal_for(HessenbergFunction.peterson(n))
    )

    # z_k -> p_k at every w_A
    points = [subset_to_wA(s) for s in all_subsets(n)]
    simple = {k: simple_class_fast(k, n) for k in range(1, n)}
    target = VariableContext.equivariant()
    rows = []
    for index, w in enumerate(points):
        images = {f"z{k}": simple[k].value(index) for k in range(1, n)}
        for g in quadratics.generators:
            rows.append(
                VanishingRow(generator=g.format(), point=w.format(), value=g.substitute(images, target).format())
            )
    report.vanishing = collect_vanishing(f"Peterson n={n}", rows)

    expected = HilbertSeriesPoly.q_integer(2)
    ordinary_series = HilbertSeriesPoly()
    for _ in range(n - 1):
        ordinary_series = ordinary_series * expected
    report.hilbert_ordinary = hilbert_report(GradedQuotient(peterson_quadratics(n, with_t=False)), ordinary_series)
    equivariant_series = HilbertSeriesPoly(ordinary_series.coefficients, 1)
    report.hilbert_equivariant = hilbert_report(
        GradedQuotient(quadratics), equivariant_series, ordinary_series.top_degree() + 2 * SETTINGS.degree_margin
    )
    report.passed = (
        report.ideal_equality.equal
        and report.vanishing.passed
        and report.hilbert_ordinary.passed
        and report.hilbert_equivariant.passed
    )
    return report


def general_quadratics(datum: CartanDatum, with_t: bool = True) -> IdealPresentation:
    """sum_j a_ij varpi_i varpi_j - 2 t varpi_i for every node i."""
    context = VariableContext.weights(datum.rank, with_t=with_t)
    varpi = {i: SparsePolynomial.variable(context, f"varpi{i}") for i in range(1, datum.rank + 1)}
    gens = []
    for i in range(1, datum.rank + 1):
        relation = SparsePolynomial.zero(context)
        for j in range(1, datum.rank + 1):
            relation = relation + varpi[i] * varpi[j] * datum.a(i, j)
        if with_t:
            relation = relation - varpi[i] * SparsePolynomial.variable(context, "t") * 2
        gens.append(relation)
    return IdealPresentation(context, tuple(gens), Provenance.PETERSON_QUADRATICS, f"Peterson {datum.label}")


def peterson_presentation_general(datum: CartanDatum) -> PetersonPresentationReport:
    """The weight quadratics vanish at every w_K under varpi_i -> p_{s_i}."""
    relations = general_quadratics(datum)
    report = PetersonPresentationReport(label=datum.label, relations=relations.formatted())
    calculus = cartan_calculus(datum)
    simple = {i: calculus.simple(i) for i in range(1, datum.rank + 1)}
    target = VariableContext.equivariant()
    rows = []
    for index, label in enumerate(calculus.point_labels):
        images = {f"varpi{i}": simple[i].value(index) for i in simple}
        for g in relations.generators:
            rows.append(VanishingRow(generator=g.format(), point=label, value=g.substitute(images, target).format()))
    report.vanishing = collect_vanishing(f"Peterson {datum.label}", rows)

    series = HilbertSeriesPoly()
    for _ in range(datum.rank):
        series = series * HilbertSeriesPoly.q_integer(2)
    report.hilbert_ordinary = hilbert_report(GradedQuotient(general_quadratics(datum, with_t=False)), series)
    report.passed = report.vanishing.passed and report.hilbert_ordinary.passed
    return report


# -- continued fractions ----------------------------------------------------


def _continued_fraction_values(cs: Sequence[Fraction]) -> List[Fraction]:
    values = [Fraction(1)]
    for m, c in enumerate(cs, start=1):
        if values[-1] == 0:
            raise ContinuedFractionError(m)
        values.append(1 - Fraction(c) / values[-1])
    return values


def continued_fraction_condition(cs: Sequence[Fraction]) -> ContinuedFractionReport:
    """x_0 = 1, x_m = 1 - c_m / x_{m-1}; every x_m must be defined and positive."""
    report = ContinuedFractionReport(c=[format_rational(c) for c in cs], m_max=len(cs))
    try:
        values = _continued_fraction_values(cs)
    except ContinuedFractionError as exc:
        report.defined = False
        report.failed_at = exc.m
        report.all_positive = False
        report.passed = False
        logger.warning("Continued fraction undefined: %s", exc)
        return report
    report.values = [format_rational(v) for v in values]
    first_bad = next((m for m, v in enumerate(values) if v <= 0), None)
    if first_bad is not None:
        report.all_positive = False
        report.failed_at = first_bad
    report.passed = report.all_positive
    return report


def continued_fraction_check(c: Fraction, m_max: int) -> ContinuedFractionReport:
    """Constant-c case; positive for all m when c <= 1/4."""
    if m_max < 0:
        raise ValueError("m_max must be nonnegative")
    report = continued_fraction_condition([Fraction(c)] * m_max)
    report.c = [format_rational(c)]
    return report
