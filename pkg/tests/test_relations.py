import pytest

from hesscoh.algebra.polyring import SparsePolynomial, VariableContext
from hesscoh.core.models import Provenance
from hesscoh.localization.hessenberg import all_hessenberg_functions
from hesscoh.presentation.relations import (
    IdealPresentation,
    IndexRangeError,
    NonHomogeneousError,
    f_ij,
    fij_table,
    flag_relations,
    g_j,
    ideal_for,
    peterson_quadratics,
    user_ideal,
)


def test_g_j(flag_x_t):
    _, (x1, x2, x3, x4, t) = flag_x_t
    assert g_j(1, 4) == x1 - t
    assert g_j(2, 4) == x1 + x2 - t * 3
    assert g_j(4, 4) == x1 + x2 + x3 + x4 - t * 10


def test_fij_table_n4(flag_x_t):
    _, (x1, x2, x3, x4, t) = flag_x_t
    g1 = x1 - t
    g2 = x1 + x2 - t * 3
    g3 = x1 + x2 + x3 - t * 6
    f21 = (x1 - x2 - t) * g1
    f32 = f21 + (x2 - x3 - t) * g2
    f31 = (x1 - x3 - t) * f21
    f43 = f32 + (x3 - x4 - t) * g3
    f42 = f31 + (x2 - x4 - t) * f32
    f41 = (x1 - x4 - t) * f31
    assert f_ij(2, 1, 4) == f21
    assert f_ij(3, 2, 4) == f32
    assert f_ij(3, 1, 4) == f31
    assert f_ij(4, 3, 4) == f43
    assert f_ij(4, 2, 4) == f42
    assert f_ij(4, 1, 4) == f41
    assert f_ij(2, 1, 4) == x1 * x1 - x1 * x2 - x1 * t * 2 + x2 * t + t * t


def test_fij_degrees_and_order():
    table = fij_table(4)
    assert [(i, j) for i, j, _ in table[:4]] == [(1, 1), (2, 1), (3, 1), (4, 1)]
    assert len(table) == 10
    for i, j, poly in table:
        assert poly.is_homogeneous()
        assert poly.degree() == i - j + 1


def test_fij_at_t_zero():
    context = VariableContext.flag(3, with_t=False)
    x1, x2, _ = SparsePolynomial.gens(context)
    assert f_ij(2, 1, 3, with_t=False) == (x1 - x2) * x1


@pytest.mark.parametrize("i, j", [(1, 2), (5, 1), (0, 0)])
def test_fij_index_range(i, j):
    with pytest.raises(IndexRangeError):
        f_ij(i, j, 4)


def test_ideal_for(h3344):
    ideal = ideal_for(h3344)
    assert ideal.provenance is Provenance.HESSENBERG
    assert ideal.label == "h=(3,3,4,4)"
    assert ideal.generators == (f_ij(3, 1, 4), f_ij(3, 2, 4), f_ij(4, 3, 4), f_ij(4, 4, 4))
    assert ideal.degrees() == [3, 2, 2, 1]
    assert ideal.equivariant
    assert not ideal.at_t_zero().equivariant


def test_flag_ideal_degrees():
    for h in all_hessenberg_functions(4):
        assert ideal_for(h).degrees() == [h(j) - j + 1 for j in range(1, 5)]


def test_flag_relations():
    ideal = flag_relations(3)
    context = ideal.context
    x1, x2, x3, t = SparsePolynomial.gens(context)
    assert ideal.generators[0] == x1 + x2 + x3 - t * 6
    assert ideal.generators[2] == x1 * x2 * x3 - t**3 * 6
    ordinary = flag_relations(3, with_t=False)
    y1, y2, y3 = SparsePolynomial.gens(ordinary.context)
    assert ordinary.generators[1] == y1 * y2 + y1 * y3 + y2 * y3


def test_peterson_quadratics_z():
    ideal = peterson_quadratics(3)
    z1, z2, t = SparsePolynomial.gens(ideal.context)
    assert ideal.generators == (z1 * (z1 - z2 / 2 - t), z2 * (z2 - z1 / 2 - t))


def test_peterson_quadratics_in_x():
    ideal = peterson_quadratics(4, in_x=True)
    assert ideal.context == VariableContext.flag(4)
    assert ideal.degrees() == [2, 2, 2, 1]
    # 2 z_1 (z_1 - z_2/2 - t) is f_{2,1}
    assert ideal.generators[0] * 2 == f_ij(2, 1, 4)


def test_peterson_quadratics_need_n2():
    with pytest.raises(ValueError):
        peterson_quadratics(1)


def test_non_homogeneous_generator():
    context = VariableContext.flag(1)
    x1, t = SparsePolynomial.gens(context)
    with pytest.raises(NonHomogeneousError):
        user_ideal(context, [x1 * x1 - t])
    with pytest.raises(NonHomogeneousError):
        IdealPresentation(context, (SparsePolynomial.constant(context, 1),), Provenance.USER)
