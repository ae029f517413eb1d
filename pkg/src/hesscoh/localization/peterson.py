"""
Peterson Schubert calculus by localization.

A class is a vector of values c * t^d at the Peterson fixed points w_K, one
per subset K of the simple roots. The classes p_{v_K} form a module basis;
products are expanded in it by forward substitution, since p_{v_A}(w_B)
vanishes unless A is contained in B.
"""

from __future__ import annotations

import logging
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Callable, Dict, FrozenSet, Hashable, List, Sequence, Tuple

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from ..algebra.polyring import SparsePolynomial, VariableContext, format_rational, specialize_pi
from ..algebra.rootsys import (
    CartanDatum,
    WeylElement,
    all_subsets as root_subsets,
    connected_components,
    identify_component,
    weyl_group,
)
from ..core.models import (
    BasisReport,
    CartanPairCheck,
    Counterexample,
    GeneralPetersonReport,
    GiambelliReport,
    MonkReport,
    MonkTerm,
    PointValue,
)
from .billey import billey_restrict, billey_restrict_roots
from .hessenberg import SubsetA, all_subsets, subset_to_vA, subset_to_wA, wA_reduced_word

logger = logging.getLogger(__name__)

Subset = FrozenSet[int]


class BasisExpansionError(ValueError):
    """The vector is not a polynomial combination of the p_{v_K}."""


class TriangularityError(RuntimeError):
    """A diagonal value p_{v_K}(w_K) vanished."""


def _t_coefficient(poly: SparsePolynomial, degree: int) -> Fraction:
    if poly.is_zero():
        return Fraction(0)
    if poly.context.names != ("t",) or not poly.is_homogeneous() or poly.degree() != degree:
        raise RuntimeError(f"expected c*t^{degree}, got {poly}")
    return poly.coefficient((degree,))


@dataclass(frozen=True)
class LocalizationElement:
    """Values ``coefficients[k] * t^degree`` at ``points[k]``."""

    points: Tuple[Hashable, ...]
    coefficients: Tuple[Fraction, ...]
    degree: int

    def __post_init__(self) -> None:
        if len(self.points) != len(self.coefficients):
            raise ValueError("one value per fixed point is required")
        object.__setattr__(self, "coefficients", tuple(Fraction(c) for c in self.coefficients))

    @classmethod
    def constant(cls, points: Sequence[Hashable], value: Fraction = Fraction(1)) -> "LocalizationElement":
        return cls(tuple(points), tuple(Fraction(value) for _ in points), 0)

    def is_zero(self) -> bool:
        return not any(self.coefficients)

    def _check(self, other: "LocalizationElement") -> None:
        if self.points != other.points:
            raise ValueError("localization vectors over different fixed-point sets")

    def __add__(self, other: "LocalizationElement") -> "LocalizationElement":
        self._check(other)
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.degree != other.degree:
            raise ValueError(f"cannot add classes of t-degree {self.degree} and {other.degree}")
        return LocalizationElement(
            self.points, tuple(a + b for a, b in zip(self.coefficients, other.coefficients)), self.degree
        )

    def __sub__(self, other: "LocalizationElement") -> "LocalizationElement":
        return self + other.scale(-1)

    def __mul__(self, other: "LocalizationElement") -> "LocalizationElement":
        self._check(other)
        return LocalizationElement(
            self.points,
            tuple(a * b for a, b in zip(self.coefficients, other.coefficients)),
            self.degree + other.degree,
        )

    def scale(self, factor: Fraction, t_power: int = 0) -> "LocalizationElement":
        return LocalizationElement(
            self.points, tuple(c * factor for c in self.coefficients), self.degree + t_power
        )

    def value(self, k: int) -> SparsePolynomial:
        return SparsePolynomial.monomial(VariableContext.equivariant(), (self.degree,), self.coefficients[k])

    def values_as_polynomials(self) -> List[SparsePolynomial]:
        return [self.value(k) for k in range(len(self.points))]


@dataclass
class MonkExpansion:
    """p_{s_i} * p_{v_K} = diagonal * t * p_{v_K} + sum off[J] * p_{v_J} (+ extra)."""

    diagonal: Fraction
    off: Dict[Subset, Fraction] = field(default_factory=dict)
    extra: Dict[Subset, Fraction] = field(default_factory=dict)

    def matches(self, other: "MonkExpansion") -> bool:
        return (
            self.diagonal == other.diagonal
            and self.off == other.off
            and not self.extra
            and not other.extra
        )


def _subset_text(subset: Subset) -> str:
    return "{" + ",".join(str(x) for x in sorted(subset)) + "}"


class PetersonCalculus:
    """
    Localization engine over the fixed points w_K.

    ``restrict(K, k)`` returns the coefficient c in p_{v_K}(points[k]) = c t^{|K|}.
    """

    def __init__(
        self,
        label: str,
        subsets: Sequence[Subset],
        points: Sequence[Hashable],
        restrict: Callable[[Subset, int], Fraction],
        point_labels: Sequence[str],
    ):
        self.label = label
        self.subsets: Tuple[Subset, ...] = tuple(subsets)
        self.points: Tuple[Hashable, ...] = tuple(points)
        self.point_labels: Tuple[str, ...] = tuple(point_labels)
        self._restrict = restrict
        self._index = {subset: k for k, subset in enumerate(self.subsets)}
        self._classes: Dict[Subset, LocalizationElement] = {}
        self._lock = threading.Lock()

    # -- factories ----------------------------------------------------------

    @classmethod
    def type_a(cls, n: int) -> "PetersonCalculus":
        subsets = all_subsets(n)
        points = [subset_to_wA(s) for s in subsets]
        words = [wA_reduced_word(s) for s in subsets]

        def restrict(subset: Subset, k: int) -> Fraction:
            v = subset_to_vA(SubsetA(subset, n))
            value = specialize_pi(billey_restrict(v, points[k], word=words[k]))
            return _t_coefficient(value, len(subset))

        return cls(
            f"A{n - 1}",
            [s.elements for s in subsets],
            points,
            restrict,
            [w.format() for w in points],
        )

    @classmethod
    def for_cartan(cls, datum: CartanDatum, reverse: bool = False) -> "PetersonCalculus":
        group = weyl_group(datum)
        subsets = root_subsets(datum.rank)
        points = [group.longest_parabolic(s) for s in subsets]
        context = VariableContext.equivariant()
        t = SparsePolynomial.variable(context, "t")
        to_t = {f"a{i}": t for i in range(1, datum.rank + 1)}

        def restrict(subset: Subset, k: int) -> Fraction:
            v = vk_element(subset, datum, reverse=reverse)
            roots = billey_restrict_roots(v, points[k], datum)
            return _t_coefficient(roots.substitute(to_t, context), len(subset))

        return cls(
            datum.label,
            subsets,
            points,
            restrict,
            [f"w_{_subset_text(s)}" for s in subsets],
        )

    # -- classes ------------------------------------------------------------

    def index(self, subset: Subset) -> int:
        try:
            return self._index[frozenset(subset)]
        except KeyError:
            raise ValueError(f"{_subset_text(frozenset(subset))} is not a subset indexing {self.label}") from None

    def class_of(self, subset: Subset) -> LocalizationElement:
        subset = frozenset(subset)
        self.index(subset)
        cached = self._classes.get(subset)
        if cached is not None:
            return cached
        values = tuple(self._restrict(subset, k) for k in range(len(self.points)))
        element = LocalizationElement(self.points, values, len(subset))
        with self._lock:
            self._classes.setdefault(subset, element)
        return element

    def simple(self, i: int) -> LocalizationElement:
        return self.class_of(frozenset({i}))

    def unit(self) -> LocalizationElement:
        return LocalizationElement.constant(self.points)

    def value_table(self, element: LocalizationElement) -> List[PointValue]:
        return [
            PointValue(point=label, value=element.value(k).format())
            for k, label in enumerate(self.point_labels)
        ]

    # -- expansion ----------------------------------------------------------

    def expand(self, element: LocalizationElement) -> Dict[Subset, Fraction]:
        """
        Coefficients c_K with element = sum c_K t^{deg - |K|} p_{v_K}; only
        nonzero entries are returned.
        """
        if element.points != self.points:
            raise ValueError("element is not over this calculus' fixed points")
        solved: List[Tuple[Subset, Fraction]] = []
        for b, subset in enumerate(self.subsets):
            residual = element.coefficients[b]
            for earlier, coeff in solved:
                residual -= coeff * self.class_of(earlier).coefficients[b]
            diagonal = self.class_of(subset).coefficients[b]
            if not diagonal:
                raise TriangularityError(f"p_v{_subset_text(subset)} vanishes at its own point")
            coeff = residual / diagonal
            if coeff:
                if element.degree - len(subset) < 0:
                    raise BasisExpansionError(
                        f"coefficient of p_v{_subset_text(subset)} would need t^{element.degree - len(subset)}"
                    )
                solved.append((subset, coeff))
        rebuilt = LocalizationElement(self.points, (Fraction(0),) * len(self.points), element.degree)
        for subset, coeff in solved:
            rebuilt = rebuilt + self.class_of(subset).scale(coeff, element.degree - len(subset))
        if not (rebuilt - element).is_zero():
            raise BasisExpansionError("nonzero residual after triangular solve")
        return dict(solved)

    def monk(self, i: int, subset: Subset) -> MonkExpansion:
        """Expand p_{s_i} * p_{v_K} by solving in the basis."""
        subset = frozenset(subset)
        product = self.simple(i) * self.class_of(subset)
        coefficients = self.expand(product)
        expansion = MonkExpansion(diagonal=coefficients.pop(subset, Fraction(0)))
        for other, coeff in coefficients.items():
            if len(other) == len(subset) + 1 and subset < other:
                expansion.off[other] = coeff
            else:
                expansion.extra[other] = coeff
        return expansion

    def basis_report(self) -> BasisReport:
        size = len(self.subsets)
        report = BasisReport(label=self.label, size=size)
        rows = {}
        for a, subset_a in enumerate(self.subsets):
            element = self.class_of(subset_a)
            row = {}
            for b, subset_b in enumerate(self.subsets):
                value = element.coefficients[b]
                if value:
                    row[b] = QQ(value.numerator, value.denominator)
                if bool(value) != (subset_a <= subset_b):
                    report.triangular = False
                    report.failures.append(
                        Counterexample(
                            label=f"p_v{_subset_text(subset_a)}",
                            point=self.point_labels[b],
                            value=element.value(b).format(),
                        )
                    )
            if not element.coefficients[a]:
                report.diagonal_nonzero = False
            if row:
                rows[a] = row
        report.rank = int(DomainMatrix(rows, (size, size), QQ).rank()) if rows else 0
        counts: Dict[int, int] = {}
        for subset in self.subsets:
            counts[2 * len(subset)] = counts.get(2 * len(subset), 0) + 1
        report.degree_counts = counts
        report.passed = report.triangular and report.diagonal_nonzero and report.rank == size
        logger.info("Basis report %s: rank %d of %d, passed=%s", self.label, report.rank, size, report.passed)
        return report


@lru_cache(maxsize=16)
def type_a_calculus(n: int) -> PetersonCalculus:
    if n < 1:
        raise ValueError("n must be positive")
    return PetersonCalculus.type_a(n)


@lru_cache(maxsize=32)
def cartan_calculus(datum: CartanDatum, reverse: bool = False) -> PetersonCalculus:
    return PetersonCalculus.for_cartan(datum, reverse=reverse)


# -- type A -----------------------------------------------------------------


def peterson_class(subset: SubsetA) -> LocalizationElement:
    """p_{v_A} at the fixed points w_B (subsets by cardinality, then lex)."""
    return type_a_calculus(subset.n).class_of(subset.elements)


def simple_class_fast(k: int, n: int) -> LocalizationElement:
    """p_{s_k}(w) = sum_{i<=k} (w(i) - i) t."""
    if not 1 <= k <= n - 1:
        raise ValueError(f"s_{k} does not exist in S_{n}")
    points = [subset_to_wA(s) for s in all_subsets(n)]
    values = [Fraction(sum(w(i) - i for i in range(1, k + 1))) for w in points]
    return LocalizationElement(tuple(points), tuple(values), 1)


def monk_constants_closed(i: int, subset: SubsetA) -> MonkExpansion:
    """Closed-form Monk constants in type A."""
    n = subset.n
    if not 1 <= i <= n - 1:
        raise ValueError(f"i = {i} not in [n-1]")
    if i in subset:
        diagonal = Fraction((subset.head(i) - i + 1) * (i - subset.tail(i) + 1))
    else:
        diagonal = Fraction(0)
    expansion = MonkExpansion(diagonal=diagonal)
    for j in range(1, n):
        if j in subset:
            continue
        bigger = subset.add(j)
        if i not in bigger:
            continue
        head, tail = bigger.head(j), bigger.tail(j)
        if not tail <= i <= head:
            continue
        if j <= i:
            value = (head - i + 1) * comb(head - tail + 1, j - tail)
        else:
            value = (i - tail + 1) * comb(head - tail + 1, j - tail + 1)
        if value:
            expansion.off[bigger.elements] = Fraction(value)
    return expansion


def monk_oracle(i: int, subset: SubsetA) -> MonkExpansion:
    return type_a_calculus(subset.n).monk(i, subset.elements)


def monk_report(i: int, subset: SubsetA) -> MonkReport:
    closed = monk_constants_closed(i, subset)
    oracle = monk_oracle(i, subset)
    return _monk_report(f"A{subset.n - 1}", i, subset.elements, closed, oracle)


def _monk_report(label: str, i: int, subset: Subset, closed: MonkExpansion, oracle: MonkExpansion) -> MonkReport:
    keys = sorted(set(closed.off) | set(oracle.off) | set(oracle.extra), key=lambda s: (len(s), sorted(s)))
    terms = [
        MonkTerm(
            subset=sorted(key),
            closed=format_rational(closed.off.get(key, Fraction(0))),
            oracle=format_rational(oracle.off.get(key, oracle.extra.get(key, Fraction(0)))),
        )
        for key in keys
    ]
    constants = [closed.diagonal, *closed.off.values()]
    nonnegative = all(c >= 0 and c.denominator == 1 for c in constants)
    return MonkReport(
        label=label,
        i=i,
        subset=sorted(subset),
        diagonal_closed=format_rational(closed.diagonal),
        diagonal_oracle=format_rational(oracle.diagonal),
        terms=terms,
        nonnegative_integers=nonnegative,
        passed=closed.matches(oracle),
    )


def giambelli_factor(subset: SubsetA) -> Fraction:
    """1 / prod |A_j|! over the maximal strings."""
    denominator = 1
    for a, b in subset.strings:
        denominator *= factorial(b - a + 1)
    return Fraction(1, denominator)


def _product_of_simples(calculus: PetersonCalculus, subset: Subset) -> LocalizationElement:
    product = calculus.unit()
    for i in sorted(subset):
        product = product * calculus.simple(i)
    return product


def _giambelli(calculus: PetersonCalculus, subset: Subset, factor: Fraction) -> GiambelliReport:
    lhs = calculus.class_of(subset)
    rhs = _product_of_simples(calculus, subset).scale(factor)
    report = GiambelliReport(label=calculus.label, subset=sorted(subset), factor=format_rational(factor))
    for k, label in enumerate(calculus.point_labels):
        if lhs.coefficients[k] != rhs.coefficients[k]:
            report.passed = False
            report.failures.append(
                Counterexample(
                    label=f"p_v{_subset_text(subset)}",
                    point=label,
                    value=f"{lhs.value(k).format()} != {rhs.value(k).format()}",
                )
            )
    return report


def giambelli_check(subset: SubsetA) -> GiambelliReport:
    """p_{v_A} = (prod |A_j|!)^{-1} prod_{i in A} p_{s_i} at every fixed point."""
    return _giambelli(type_a_calculus(subset.n), subset.elements, giambelli_factor(subset))


def expand_in_basis(element: LocalizationElement, n: int) -> Dict[SubsetA, SparsePolynomial]:
    """Coefficient polynomials in t of ``element`` in the basis p_{v_A}."""
    coefficients = type_a_calculus(n).expand(element)
    context = VariableContext.equivariant()
    return {
        SubsetA(subset, n): SparsePolynomial.monomial(context, (element.degree - len(subset),), coeff)
        for subset, coeff in coefficients.items()
    }


def basis_report(n: int) -> BasisReport:
    return type_a_calculus(n).basis_report()


# -- general Lie type -------------------------------------------------------


def vk_element(subset: Subset, datum: CartanDatum, reverse: bool = False) -> WeylElement:
    """
    v_K: per connected component, the product of its simple reflections in
    the order of the component's own diagram; components by least node.
    ``reverse`` uses the lex-largest embedding and the opposite component order.
    """
    pieces = []
    for component in connected_components(datum, subset):
        kind = identify_component(datum, component, largest=reverse)
        pieces.append(kind.embedding)
    if reverse:
        pieces.reverse()
    word = tuple(letter for piece in pieces for letter in piece)
    return weyl_group(datum).from_word(word)


def peterson_class_general(subset: Subset, datum: CartanDatum, reverse: bool = False) -> LocalizationElement:
    return cartan_calculus(datum, reverse).class_of(frozenset(subset))


def monk_general_closed(i: int, subset: Subset, datum: CartanDatum) -> MonkExpansion:
    """
    Diagonal p_{s_i}(w_K); for J = K + {j}:
    c = (p_{s_i}(w_J) - p_{s_i}(w_K)) p_{v_K}(w_J) / p_{v_J}(w_J).
    """
    calculus = cartan_calculus(datum)
    subset = frozenset(subset)
    simple = calculus.simple(i)
    here = calculus.index(subset)
    expansion = MonkExpansion(diagonal=simple.coefficients[here])
    base = calculus.class_of(subset)
    for j in range(1, datum.rank + 1):
        if j in subset:
            continue
        bigger = subset | {j}
        there = calculus.index(bigger)
        denominator = calculus.class_of(bigger).coefficients[there]
        if not denominator:
            raise TriangularityError(f"p_v{_subset_text(bigger)} vanishes at w_{_subset_text(bigger)}")
        value = (simple.coefficients[there] - simple.coefficients[here]) * base.coefficients[there] / denominator
        if value:
            expansion.off[bigger] = value
    return expansion


def monk_general(i: int, subset: Subset, datum: CartanDatum) -> MonkReport:
    if not 1 <= i <= datum.rank:
        raise ValueError(f"i = {i} is not a node of {datum.label}")
    closed = monk_general_closed(i, subset, datum)
    oracle = cartan_calculus(datum).monk(i, frozenset(subset))
    report = _monk_report(datum.label, i, frozenset(subset), closed, oracle)
    # general-type constants are nonnegative rationals
    report.nonnegative_integers = all(c >= 0 for c in [closed.diagonal, *closed.off.values()])
    return report


def giambelli_general(subset: Subset, datum: CartanDatum) -> Tuple[GiambelliReport, int]:
    """p_{v_K} = |Red(v_K)| / |K|! * prod p_{s_i}; returns the report and |Red(v_K)|."""
    subset = frozenset(subset)
    count = weyl_group(datum).reduced_word_count(vk_element(subset, datum))
    factor = Fraction(count, factorial(len(subset)))
    return _giambelli(cartan_calculus(datum), subset, factor), count


def cartan_pair_checks(datum: CartanDatum) -> List[CartanPairCheck]:
    """c_i^j, the coefficient of p_{v_{i,j}} in p_{s_i}^2, against -a_ij."""
    checks = []
    for i in range(1, datum.rank + 1):
        expansion = monk_general_closed(i, frozenset({i}), datum)
        for j in range(1, datum.rank + 1):
            if j == i:
                continue
            coeff = expansion.off.get(frozenset({i, j}), Fraction(0))
            checks.append(
                CartanPairCheck(
                    i=i,
                    j=j,
                    cartan_integer=datum.a(i, j),
                    coefficient=format_rational(coeff),
                    passed=coeff == -datum.a(i, j),
                )
            )
    return checks


def general_report(subset: Subset, datum: CartanDatum) -> GeneralPetersonReport:
    """Everything known about p_{v_K} in one report."""
    subset = frozenset(subset)
    calculus = cartan_calculus(datum)
    element = calculus.class_of(subset)
    reversed_element = cartan_calculus(datum, True).class_of(subset)
    giambelli, count = giambelli_general(subset, datum)
    monk = [monk_general(i, subset, datum) for i in range(1, datum.rank + 1)]
    pairs = cartan_pair_checks(datum)
    independent = element.coefficients == reversed_element.coefficients
    report = GeneralPetersonReport(
        cartan=datum.label,
        subset=sorted(subset),
        v_word=list(vk_element(subset, datum).word),
        values=calculus.value_table(element),
        monk=monk,
        giambelli=giambelli,
        reduced_word_count=count,
        ordering_independent=independent,
        cartan_pairs=pairs,
    )
    report.passed = (
        giambelli.passed and independent and all(m.passed for m in monk) and all(p.passed for p in pairs)
    )
    return report

