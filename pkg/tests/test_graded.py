import random

import pytest

from hesscoh.algebra.polyring import SparsePolynomial, VariableContext
from hesscoh.localization.hessenberg import HessenbergFunction, all_hessenberg_functions
from hesscoh.presentation.graded import (
    DegreeBoundError,
    GradedQuotient,
    hilbert_function,
    ideals_equal,
    is_regular_sequence,
)
from hesscoh.presentation.relations import flag_relations, ideal_for, peterson_quadratics, user_ideal


def test_flag_cohomology_dimensions():
    quotient = GradedQuotient(flag_relations(3, with_t=False))
    assert quotient.hilbert_function(8) == {0: 1, 2: 2, 4: 2, 6: 1, 8: 0}


def test_linear_generators_are_eliminated():
    quotient = GradedQuotient(flag_relations(3, with_t=False))
    assert quotient.variable_count == 2
    assert len(quotient.generators) == 2


def test_membership():
    ideal = flag_relations(3, with_t=False)
    x1, x2, x3 = SparsePolynomial.gens(ideal.context)
    quotient = GradedQuotient(ideal)
    assert quotient.contains(x1 * x1 + x2 * x2 + x3 * x3)
    assert quotient.contains(x1**3)
    assert not quotient.contains(x1 * x1)
    assert not quotient.contains(SparsePolynomial.constant(ideal.context, 1))


def test_rank_modulo():
    ideal = flag_relations(3, with_t=False)
    x1, x2, x3 = SparsePolynomial.gens(ideal.context)
    quotient = GradedQuotient(ideal)
    reduced = [quotient.reduce(m) for m in (x1, x2, x3)]
    assert quotient.rank_modulo(reduced, 1) == 2


def test_hilbert_function_helper():
    assert hilbert_function(peterson_quadratics(3, with_t=False), 6) == {0: 1, 2: 2, 4: 1, 6: 0}


def test_equivariant_dimensions_grow():
    quotient = GradedQuotient(ideal_for(HessenbergFunction.peterson(3)))
    # (1 + q^2)^2 / (1 - q^2)
    assert quotient.hilbert_function(8) == {0: 1, 2: 3, 4: 4, 6: 4, 8: 4}


def test_regular_sequence():
    report = is_regular_sequence(ideal_for(HessenbergFunction.parse("3,3,4,4"), with_t=False))
    assert report.regular
    assert report.finite_dimensional
    assert report.generator_degrees == [6, 4, 4, 2]


def test_non_regular_sequence():
    context = VariableContext(("x1", "x2"))
    x1, x2 = SparsePolynomial.gens(context)
    report = is_regular_sequence(user_ideal(context, [x1 * x1, x1 * x2]))
    assert not report.regular
    assert report.finite_dimensional is False
    assert report.failures


def test_too_many_generators_is_not_regular():
    context = VariableContext(("x1",))
    (x1,) = SparsePolynomial.gens(context)
    report = is_regular_sequence(user_ideal(context, [x1, x1 * x1]))
    assert not report.regular


def test_degree_bound_too_small():
    ideal = ideal_for(HessenbergFunction.parse("2,3,3"), with_t=False)
    with pytest.raises(DegreeBoundError):
        is_regular_sequence(ideal, up_to=2)


def test_equivariant_regular_sequence_partial():
    report = is_regular_sequence(ideal_for(HessenbergFunction.parse("2,3,3")))
    assert report.regular
    assert report.finite_dimensional is None


def test_ideals_equal_flag_presentations():
    for n in (2, 3, 4):
        report = ideals_equal(flag_relations(n), ideal_for(HessenbergFunction.flag(n)))
        assert report.equal, report


@pytest.mark.slow
def test_ideals_equal_flag_presentation_n5():
    assert ideals_equal(flag_relations(5), ideal_for(HessenbergFunction.flag(5))).equal


def test_ideals_differ():
    report = ideals_equal(ideal_for(HessenbergFunction.peterson(3)), ideal_for(HessenbergFunction.flag(3)))
    assert not report.equal
    assert report.right_in_left is False or report.left_in_right is False


def test_ideals_equal_needs_same_ring():
    with pytest.raises(ValueError):
        ideals_equal(flag_relations(3), flag_relations(3, with_t=False))


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_hilbert_function_ignores_generator_order(seed):
    rng = random.Random(seed)
    for h in all_hessenberg_functions(4):
        ideal = ideal_for(h, with_t=False)
        generators = list(ideal.generators)
        rng.shuffle(generators)
        shuffled = user_ideal(ideal.context, generators)
        assert hilbert_function(shuffled, 14) == hilbert_function(ideal, 14)
