import pytest

from hesscoh.algebra.rootsys import (
    CartanDatum,
    CartanTypeError,
    EnumerationBudgetError,
    all_subsets,
    build_cartan,
    connected_components,
    identify_component,
    longest_parabolic,
    weyl_enumerate,
    weyl_group,
    weyl_order,
)


def test_cartan_matrices():
    assert build_cartan("A", 2).matrix == ((2, -1), (-1, 2))
    assert build_cartan("B", 2).matrix == ((2, -2), (-1, 2))
    assert build_cartan("C", 2).matrix == ((2, -1), (-2, 2))
    assert build_cartan("G", 2).matrix == ((2, -1), (-3, 2))
    f4 = build_cartan("F", 4)
    assert f4.a(2, 3) == -2 and f4.a(3, 2) == -1


def test_e6_branches_at_node_four():
    e6 = build_cartan("E", 6)
    assert sorted(e6.neighbors(4)) == [2, 3, 5]


@pytest.mark.parametrize("text", ["X3", "B1", "G3", "F5", "A", "D3"])
def test_parse_rejects_bad_types(text):
    with pytest.raises(CartanTypeError):
        CartanDatum.parse(text)


def test_parse_is_case_insensitive():
    assert CartanDatum.parse("b3") == build_cartan("B", 3)
    assert CartanDatum.parse("B3").label == "B3"


@pytest.mark.parametrize(
    "label, order",
    [("A3", 24), ("B3", 48), ("C3", 48), ("D4", 192), ("G2", 12), ("F4", 1152), ("E6", 51840)],
)
def test_weyl_order(label, order):
    datum = CartanDatum.parse(label)
    assert weyl_order(datum.letter, datum.rank) == order


@pytest.mark.parametrize("label", ["A3", "B2", "G2", "B3"])
def test_enumeration_matches_order(label):
    datum = CartanDatum.parse(label)
    elements = weyl_enumerate(datum)
    assert len(elements) == datum.order
    assert len({e.matrix for e, _ in elements}) == datum.order
    assert elements[0][1] == 0


def test_enumeration_budget():
    with pytest.raises(EnumerationBudgetError):
        weyl_enumerate(CartanDatum.parse("E6"))


def test_longest_parabolic_lengths(small_cartan):
    full = longest_parabolic(small_cartan, range(1, small_cartan.rank + 1))
    positive_roots = {"A2": 3, "B2": 4, "G2": 6, "A3": 6, "B3": 9, "C3": 9}[small_cartan.label]
    assert full.length == positive_roots
    assert longest_parabolic(small_cartan, []).length == 0


def test_longest_element_words():
    group = weyl_group(CartanDatum.parse("A3"))
    w0 = group.longest_parabolic({1, 2, 3})
    assert group.reduced_word_count(w0) == 16
    assert len(group.reduced_words(w0)) == 16
    b2 = weyl_group(CartanDatum.parse("B2"))
    assert b2.reduced_words(b2.longest_parabolic({1, 2})) == [(1, 2, 1, 2), (2, 1, 2, 1)]


def test_canonical_word_is_lex_smallest():
    group = weyl_group(CartanDatum.parse("A2"))
    w0 = group.from_word((2, 1, 2))
    assert w0.word == (1, 2, 1)
    assert w0 == group.from_word((1, 2, 1))
    assert w0.format() == "s1.s2.s1"
    assert group.identity.format() == "e"


def test_left_descents_of_simple_reflections(small_cartan):
    group = weyl_group(small_cartan)
    for i in range(1, small_cartan.rank + 1):
        assert group.left_descents(group.simple(i)) == [i]


def test_word_roots_are_positive_and_distinct():
    datum = CartanDatum.parse("B2")
    group = weyl_group(datum)
    roots = group.word_roots((1, 2, 1, 2))
    assert roots == [(1, 0), (1, 1), (1, 2), (0, 1)]


def test_is_reduced():
    group = weyl_group(CartanDatum.parse("G2"))
    assert group.is_reduced((1, 2, 1, 2, 1, 2))
    assert not group.is_reduced((1, 2, 1, 2, 1, 2, 1))


def test_connected_components():
    datum = CartanDatum.parse("A4")
    assert connected_components(datum, {1, 2, 4}) == [(1, 2), (4,)]
    with pytest.raises(CartanTypeError):
        connected_components(datum, {5})


def test_identify_component():
    b3 = CartanDatum.parse("B3")
    short_end = identify_component(b3, (2, 3))
    assert short_end.label == "B2"
    assert short_end.embedding == (2, 3)
    assert identify_component(b3, (1, 2)).label == "A2"
    a3 = CartanDatum.parse("A3")
    assert identify_component(a3, (1, 2, 3)).embedding == (1, 2, 3)
    assert identify_component(a3, (1, 2, 3), largest=True).embedding == (3, 2, 1)


def test_all_subsets_order():
    subsets = all_subsets(3)
    assert len(subsets) == 8
    assert subsets[0] == frozenset()
    assert subsets[1:4] == [frozenset({1}), frozenset({2}), frozenset({3})]
    assert subsets[-1] == frozenset({1, 2, 3})


@pytest.mark.parametrize("label", ["A3", "B3", "C3", "D4", "G2", "F4"])
def test_longest_element_negates_simple_roots(label):
    datum = CartanDatum.parse(label)
    group = weyl_group(datum)
    w0 = longest_parabolic(datum, range(1, datum.rank + 1))
    for i in range(datum.rank):
        root = [0] * datum.rank
        root[i] = 1
        image = group.apply_to_root(w0, root)
        assert all(c <= 0 for c in image)
        # w0 permutes the simple roots up to sign
        assert sorted(image) == [-1] + [0] * (datum.rank - 1)
