from math import prod

import pytest

from hesscoh.algebra.permgroup import (
    Permutation,
    all_permutations,
    bruhat_leq,
    from_word,
    reduced_subword_occurrences,
)
from hesscoh.localization.hessenberg import (
    BoxEditError,
    HessenbergFunction,
    InvalidHessenbergError,
    InvalidSubsetError,
    SubsetA,
    add_box,
    all_hessenberg_functions,
    all_subsets,
    fixed_points,
    h_leq,
    is_minimal_for,
    minimal_hessenberg,
    peterson_fixed_points,
    remove_box,
    subset_to_vA,
    subset_to_wA,
    wA_reduced_word,
)


def _formats(perms):
    return {w.format() for w in perms}


@pytest.mark.parametrize("text", ["2,1,3", "4,4,4", "3,2,3", ""])
def test_invalid_functions(text):
    with pytest.raises(InvalidHessenbergError):
        HessenbergFunction.parse(text)


def test_named_functions():
    assert HessenbergFunction.peterson(4).values == (2, 3, 4, 4)
    assert HessenbergFunction.flag(3).values == (3, 3, 3)
    assert HessenbergFunction.point(3).values == (1, 2, 3)
    assert HessenbergFunction.peterson(4).is_indecomposable()
    assert not HessenbergFunction.parse("1,3,3").is_indecomposable()


def test_catalan_counts():
    assert len(all_hessenberg_functions(3)) == 5
    assert len(all_hessenberg_functions(4)) == 14
    assert len(all_hessenberg_functions(5)) == 42
    functions = all_hessenberg_functions(4)
    assert functions == sorted(functions)


def test_peterson_fixed_points_n3():
    assert _formats(fixed_points(HessenbergFunction.parse("2,3,3"))) == {"123", "132", "213", "321"}


def test_peterson_fixed_points_n4(peterson4):
    expected = {"1234", "2134", "1324", "1243", "3214", "2143", "1432", "4321"}
    assert _formats(fixed_points(peterson4)) == expected
    assert _formats(w for _, w in peterson_fixed_points(4)) == expected


def test_h3344_adds_four_points(h3344, peterson4):
    added = _formats(fixed_points(h3344)) - _formats(fixed_points(peterson4))
    assert added == {"2314", "3124", "3421", "4132"}
    assert len(fixed_points(h3344)) == 12


def test_extreme_functions():
    assert len(fixed_points(HessenbergFunction.flag(4))) == 24
    assert _formats(fixed_points(HessenbergFunction.point(4))) == {"1234"}


def test_fixed_point_count_is_product():
    for h in all_hessenberg_functions(4):
        assert len(fixed_points(h)) == prod(h(j) - j + 1 for j in range(1, 5))


def test_fixed_points_grow_with_h():
    functions = all_hessenberg_functions(4)
    for small in functions:
        for big in functions:
            if h_leq(small, big):
                assert _formats(fixed_points(small)) <= _formats(fixed_points(big))


def test_minimal_hessenberg():
    for w in all_permutations(4):
        h = minimal_hessenberg(w)
        assert w in fixed_points(h)
        assert is_minimal_for(w, h)


def test_box_editing():
    h = HessenbergFunction.parse("2,3,3")
    assert h.addable_boxes() == [(3, 1)]
    assert h.removable_boxes() == [(2, 1), (3, 2)]
    assert add_box(h, (3, 1)).values == (3, 3, 3)
    assert remove_box(h, (3, 2)).values == (2, 2, 3)
    with pytest.raises(BoxEditError):
        remove_box(h, (3, 3))
    with pytest.raises(BoxEditError):
        add_box(h, (3, 2))


def test_boxes_count():
    h = HessenbergFunction.parse("2,3,3")
    assert len(h.boxes()) == 8


def test_subset_strings():
    subset = SubsetA(frozenset({1, 2, 4}), 6)
    assert subset.strings == ((1, 2), (4, 4))
    assert subset.head(1) == 2
    assert subset.tail(2) == 1
    assert subset.head(4) == 4
    assert str(subset) == "{1,2,4}"
    with pytest.raises(InvalidSubsetError):
        subset.head(3)


def test_subset_validation():
    with pytest.raises(InvalidSubsetError):
        SubsetA.parse("1,3", 3)


def test_wA_and_vA():
    assert subset_to_wA(SubsetA.parse("1,3", 4)).format() == "2143"
    assert subset_to_wA(SubsetA.parse("1,2", 3)).format() == "321"
    assert subset_to_vA(SubsetA.parse("1,2", 3)).format() == "231"
    assert wA_reduced_word(SubsetA.parse("1,2", 3)) == (1, 2, 1)


def test_wA_reduced_word_spells_wA():
    for subset in all_subsets(5):
        word = wA_reduced_word(subset)
        w = subset_to_wA(subset)
        assert from_word(word, 5) == w
        assert len(word) == w.length


def test_all_subsets_order():
    subsets = all_subsets(4)
    assert len(subsets) == 8
    assert [s.sorted() for s in subsets[:4]] == [(), (1,), (2,), (3,)]
    assert subsets[-1].sorted() == (1, 2, 3)


def test_longest_element_is_wA_of_everything():
    assert subset_to_wA(SubsetA(frozenset({1, 2, 3}), 4)) == Permutation.parse("4321")


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_vA_below_wB_iff_contained(n):
    subsets = all_subsets(n)
    for a in subsets:
        v = subset_to_vA(a)
        for b in subsets:
            assert bruhat_leq(v, subset_to_wA(b)) == (a.elements <= b.elements)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_vA_occurs_once_in_wA_word(n):
    for subset in all_subsets(n):
        occurrences = reduced_subword_occurrences(subset_to_vA(subset), wA_reduced_word(subset))
        assert len(occurrences) == 1, subset


@pytest.mark.parametrize("n", [3, 4])
def test_minimal_function_is_below_every_owner(n):
    for h in all_hessenberg_functions(n):
        for w in fixed_points(h):
            assert h_leq(minimal_hessenberg(w), h)
