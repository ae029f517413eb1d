from fractions import Fraction
from math import comb

import pytest

from hesscoh.algebra.rootsys import CartanDatum
from hesscoh.localization.hessenberg import SubsetA, all_subsets, subset_to_wA
from hesscoh.localization.peterson import (
    LocalizationElement,
    basis_report,
    cartan_calculus,
    cartan_pair_checks,
    expand_in_basis,
    general_report,
    giambelli_check,
    giambelli_factor,
    giambelli_general,
    monk_constants_closed,
    monk_general,
    monk_oracle,
    monk_report,
    peterson_class,
    peterson_class_general,
    simple_class_fast,
    type_a_calculus,
    vk_element,
)
from hesscoh.presentation.certificates import localize
from hesscoh.presentation.relations import g_j


def test_simple_class_values_n3():
    # points w_{}, w_{1}, w_{2}, w_{1,2} = 123, 213, 132, 321
    p1 = peterson_class(SubsetA(frozenset({1}), 3))
    assert p1.coefficients == (0, 1, 0, 2)
    assert p1.value(3).format() == "2*t"


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_simple_class_fast_matches_billey(n):
    for k in range(1, n):
        fast = simple_class_fast(k, n)
        assert fast.coefficients == peterson_class(SubsetA(frozenset({k}), n)).coefficients


def test_localization_element_arithmetic():
    points = ("a", "b")
    x = LocalizationElement(points, (Fraction(1), Fraction(2)), 1)
    y = LocalizationElement(points, (Fraction(3), Fraction(0)), 1)
    assert (x * y).coefficients == (3, 0)
    assert (x * y).degree == 2
    assert (x + y).coefficients == (4, 2)
    assert (x - x).is_zero()
    with pytest.raises(ValueError):
        _ = x + LocalizationElement(points, (Fraction(1), Fraction(1)), 2)


def test_monk_square_of_first_simple_class(t_poly):
    subset = SubsetA(frozenset({1}), 3)
    closed = monk_constants_closed(1, subset)
    assert closed.diagonal == 1
    assert closed.off == {frozenset({1, 2}): Fraction(1)}
    p1 = peterson_class(subset)
    expansion = expand_in_basis(p1 * p1, 3)
    assert expansion == {subset: t_poly(1, 1), SubsetA(frozenset({1, 2}), 3): t_poly(1, 0)}


def test_monk_closed_constants_example():
    # p_{s_2} p_{v_{1,3}} in n = 4
    closed = monk_constants_closed(2, SubsetA(frozenset({1, 3}), 4))
    assert closed.diagonal == 0
    assert closed.off == {frozenset({1, 2, 3}): Fraction(6)}


@pytest.mark.parametrize("n", [2, 3, 4])
def test_monk_closed_form_matches_oracle(n):
    for subset in all_subsets(n):
        for i in range(1, n):
            report = monk_report(i, subset)
            assert report.passed, report
            assert report.nonnegative_integers


@pytest.mark.slow
def test_monk_closed_form_matches_oracle_n5():
    for subset in all_subsets(5):
        for i in range(1, 5):
            report = monk_report(i, subset)
            assert report.passed and report.nonnegative_integers


def test_giambelli_factor():
    assert giambelli_factor(SubsetA(frozenset({1, 2}), 3)) == Fraction(1, 2)
    assert giambelli_factor(SubsetA(frozenset({1, 2, 3, 5}), 6)) == Fraction(1, 6)
    assert giambelli_factor(SubsetA(frozenset(), 3)) == 1


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_giambelli(n):
    for subset in all_subsets(n):
        assert giambelli_check(subset).passed


@pytest.mark.slow
def test_giambelli_n6():
    for subset in all_subsets(6):
        assert giambelli_check(subset).passed


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_basis(n):
    report = basis_report(n)
    assert report.passed
    assert report.rank == 2 ** (n - 1)
    assert report.degree_counts == {2 * k: comb(n - 1, k) for k in range(n)}


@pytest.mark.slow
def test_basis_n6():
    assert basis_report(6).passed


def test_upper_triangularity_n4():
    calculus = type_a_calculus(4)
    for a in calculus.subsets:
        element = calculus.class_of(a)
        for k, b in enumerate(calculus.subsets):
            assert bool(element.coefficients[k]) == (a <= b)


def test_cartan_pairs(small_cartan):
    checks = cartan_pair_checks(small_cartan)
    assert checks
    assert all(check.passed for check in checks)


def test_b2_square_of_long_simple_class():
    datum = CartanDatum.parse("B2")
    pairs = {(c.i, c.j): c for c in cartan_pair_checks(datum)}
    assert pairs[(1, 2)].coefficient == "2"
    assert pairs[(2, 1)].coefficient == "1"


def test_general_values_b2():
    datum = CartanDatum.parse("B2")
    calculus = cartan_calculus(datum)
    # w_{1,2} is the longest element; p_{s_1} = 2 varpi_1 = 4t, p_{s_2} = 2 varpi_2 = 3t there
    assert calculus.simple(1).coefficients[-1] == 4
    assert calculus.simple(2).coefficients[-1] == 3
    assert calculus.class_of(frozenset({1, 2})).coefficients[-1] == 6


def test_giambelli_general_counts_reduced_words():
    datum = CartanDatum.parse("A3")
    report, count = giambelli_general(frozenset({1, 2}), datum)
    assert count == 1
    assert report.passed
    assert report.factor == "1/2"


@pytest.mark.parametrize("label", ["A2", "B2", "G2", "A3", "B3", "C3"])
def test_general_report(label):
    datum = CartanDatum.parse(label)
    for subset in cartan_calculus(datum).subsets:
        report = general_report(subset, datum)
        assert report.passed, report
        assert report.ordering_independent


def test_monk_general_b3():
    datum = CartanDatum.parse("B3")
    for i in range(1, 4):
        assert monk_general(i, frozenset({1, 3}), datum).passed


def test_vk_element_orders():
    datum = CartanDatum.parse("A3")
    assert vk_element(frozenset({1, 2}), datum).word == (1, 2)
    assert vk_element(frozenset({1, 2}), datum, reverse=True).word == (2, 1)
    assert vk_element(frozenset(), datum).word == ()


def test_monk_general_rejects_bad_node():
    with pytest.raises(ValueError):
        monk_general(4, frozenset(), CartanDatum.parse("B3"))


def test_monk_oracle_solves_square():
    oracle = monk_oracle(1, SubsetA(frozenset({1}), 3))
    assert oracle.diagonal == 1
    assert oracle.off == {frozenset({1, 2}): Fraction(1)}


def test_general_class_ignores_ordering():
    datum = CartanDatum.parse("B2")
    forward = peterson_class_general({1, 2}, datum)
    backward = peterson_class_general({1, 2}, datum, reverse=True)
    assert forward.coefficients == backward.coefficients
    assert forward.coefficients[-1] == 6


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_g_k_restricts_to_simple_classes(n):
    subsets = all_subsets(n)
    for index, subset in enumerate(subsets):
        w = subset_to_wA(subset)
        assert localize(g_j(n, n), w).is_zero()
        for k in range(1, n):
            assert localize(g_j(k, n), w) == simple_class_fast(k, n).value(index)


@pytest.mark.slow
def test_monk_closed_form_sampled_n6():
    subsets = all_subsets(6)
    for subset in subsets[::3]:
        for i in range(1, 6):
            report = monk_report(i, subset)
            assert report.passed and report.nonnegative_integers, report
