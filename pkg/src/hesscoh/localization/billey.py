"""
Restrictions of equivariant Schubert classes at torus-fixed points.

Both paths sum, over the reduced subwords of a fixed reduced word b of w that
spell v, the products of the roots r(i, b) = s_{b_1}...s_{b_{i-1}}(alpha_{b_i}).
The type A path works with permutations and writes roots in t_1..t_n
(alpha_k = t_{k+1} - t_k); the general path writes them in simple-root
variables a_1..a_r.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from ..algebra.permgroup import (
    InvalidWordError,
    Permutation,
    all_permutations,
    from_word,
    reduced_subword_occurrences,
    reduced_word,
)
from ..algebra.polyring import (
    SparsePolynomial,
    VariableContext,
    elementary_symmetric,
)
from ..algebra.rootsys import CartanDatum, WeylElement, weyl_group
from ..core.models import Counterexample, FlagRelationsReport

logger = logging.getLogger(__name__)

Element = Union[Permutation, WeylElement]


class MismatchedGroupsError(ValueError):
    """v and w do not live in the same group."""


def _sum_of_products(
    occurrences: Sequence[Tuple[int, ...]],
    roots: Sequence[SparsePolynomial],
    context: VariableContext,
) -> SparsePolynomial:
    total = SparsePolynomial.zero(context)
    one = SparsePolynomial.constant(context, 1)
    for occurrence in occurrences:
        product = one
        for pos in occurrence:
            product = product * roots[pos - 1]
        total = total + product
    return total


def _type_a_roots(word: Sequence[int], n: int) -> List[SparsePolynomial]:
    context = VariableContext.torus(n)
    t = SparsePolynomial.gens(context)
    roots = []
    prefix = Permutation.identity(n)
    for k in word:
        # prefix sends t_i to t_{prefix(i)}
        roots.append(t[prefix(k + 1) - 1] - t[prefix(k) - 1])
        prefix = prefix.right_multiply_simple(k)
    return roots


def _general_roots(word: Sequence[int], datum: CartanDatum) -> List[SparsePolynomial]:
    context = VariableContext.roots(datum.rank)
    return [
        SparsePolynomial(context, {_unit(datum.rank, k): Fraction(c) for k, c in enumerate(root) if c})
        for root in weyl_group(datum).word_roots(word)
    ]


def _unit(size: int, k: int) -> Tuple[int, ...]:
    exp = [0] * size
    exp[k] = 1
    return tuple(exp)


def billey_restrict_roots(
    v: WeylElement,
    w: WeylElement,
    datum: CartanDatum,
    word: Optional[Sequence[int]] = None,
) -> SparsePolynomial:
    """sigma_v restricted to w, as a polynomial in the simple roots a_1..a_r."""
    group = weyl_group(datum)
    if len(v.matrix) != datum.rank or len(w.matrix) != datum.rank:
        raise MismatchedGroupsError(f"elements do not belong to W({datum.label})")
    word = tuple(w.word if word is None else word)
    if group.from_word(word) != w or len(word) != w.length:
        raise InvalidWordError(f"{word} is not a reduced word of {w}")
    occurrences = group.subword_occurrences(v, word)
    return _sum_of_products(occurrences, _general_roots(word, datum), VariableContext.roots(datum.rank))


def billey_restrict(
    v: Element,
    w: Element,
    datum: Optional[CartanDatum] = None,
    word: Optional[Sequence[int]] = None,
) -> SparsePolynomial:
    """
    Restriction of the Schubert class sigma_v to the fixed point w.

    Args:
        v: Schubert index, a Permutation or a WeylElement.
        w: Fixed point, of the same kind as v.
        datum: Cartan datum; required for Weyl elements, ignored for permutations.
        word: Reduced word of w to sum over; defaults to the canonical one.

    Returns:
        A polynomial in t_1..t_n for permutations, or in the simple roots
        a_1..a_r for Weyl elements. Zero unless v <= w in Bruhat order.

    Raises:
        MismatchedGroupsError: v and w are of different kinds or sizes.
        InvalidWordError: word is not a reduced word of w.
    """
    if isinstance(v, Permutation) and isinstance(w, Permutation):
        if v.n != w.n:
            raise MismatchedGroupsError(f"v in S_{v.n} but w in S_{w.n}")
        n = w.n
        word = reduced_word(w) if word is None else tuple(word)
        if from_word(word, n) != w or len(word) != w.length:
            raise InvalidWordError(f"{word} is not a reduced word of {w}")
        occurrences = reduced_subword_occurrences(v, word)
        return _sum_of_products(occurrences, _type_a_roots(word, n), VariableContext.torus(n))
    if isinstance(v, WeylElement) and isinstance(w, WeylElement):
        if datum is None:
            raise MismatchedGroupsError("Weyl elements need their Cartan datum")
        return billey_restrict_roots(v, w, datum, word)
    raise MismatchedGroupsError("v and w must both be permutations or both Weyl elements")


def expand_type_a_roots(poly: SparsePolynomial, n: int) -> SparsePolynomial:
    """Rewrite a polynomial in a_1..a_{n-1} through a_k = t_{k+1} - t_k."""
    target = VariableContext.torus(n)
    t = SparsePolynomial.gens(target)
    images = {f"a{k}": t[k] - t[k - 1] for k in range(1, n)}
    return poly.substitute(images, target)


def permutation_to_weyl(w: Permutation, datum: CartanDatum) -> WeylElement:
    """The element of W(A_{n-1}) with the same reduced words as w."""
    if datum.letter != "A" or datum.rank != w.n - 1:
        raise MismatchedGroupsError(f"S_{w.n} is not W({datum.label})")
    return weyl_group(datum).from_word(reduced_word(w))


def tau_restrict(i: int, w: Permutation) -> SparsePolynomial:
    """tau^T_i at w is t_{w(i)}."""
    if not 1 <= i <= w.n:
        raise ValueError(f"tau_{i} requires 1 <= i <= {w.n}")
    return SparsePolynomial.variable(VariableContext.torus(w.n), f"t{w(i)}")


def restrict_tau_class(poly: SparsePolynomial, w: Permutation) -> SparsePolynomial:
    """Restrict a polynomial in tau_i, t_i at w: tau_i -> t_{w(i)}, t_i fixed."""
    target = VariableContext.torus(w.n)
    images = {f"tau{i}": tau_restrict(i, w) for i in range(1, w.n + 1)}
    return poly.substitute(images, target)


def sigma_simple_closed_form(k: int, n: int) -> SparsePolynomial:
    """sigma^T_{s_k} = sum_{j<=k} (tau_j - t_j), over tau_1..tau_n, t_1..t_n."""
    if not 1 <= k <= n - 1:
        raise ValueError(f"s_{k} does not exist in S_{n}")
    context = VariableContext.tau_torus(n)
    total = SparsePolynomial.zero(context)
    for j in range(1, k + 1):
        total = total + SparsePolynomial.variable(context, f"tau{j}") - SparsePolynomial.variable(
            context, f"t{j}"
        )
    return total


def restriction_table(v: Permutation, n: Optional[int] = None) -> List[Tuple[Permutation, SparsePolynomial]]:
    """sigma^T_v at every w in S_n, lexicographic in w."""
    n = v.n if n is None else n
    return [(w, billey_restrict(v, w)) for w in all_permutations(n)]


def verify_flag_relations(n: int) -> FlagRelationsReport:
    """e_i(t_{w(1)},...,t_{w(n)}) - e_i(t_1,...,t_n) vanishes for every i and w."""
    if n < 2:
        raise ValueError("flag relations need n >= 2")
    context = VariableContext.torus(n)
    t = SparsePolynomial.gens(context)
    reference: Dict[int, SparsePolynomial] = {
        i: elementary_symmetric(i, t) for i in range(1, n + 1)
    }
    report = FlagRelationsReport(n=n)
    for w in all_permutations(n):
        permuted = [t[w(k) - 1] for k in range(1, n + 1)]
        for i in range(1, n + 1):
            difference = elementary_symmetric(i, permuted) - reference[i]
            report.checks += 1
            if difference:
                report.passed = False
                report.failures.append(
                    Counterexample(label=f"e_{i}", point=w.format(), value=difference.format())
                )
    logger.info("Flag relations n=%d: %d checks, passed=%s", n, report.checks, report.passed)
    return report
