from fractions import Fraction

import pytest

from hesscoh.algebra.polyring import SparsePolynomial, VariableContext
from hesscoh.algebra.rootsys import CartanDatum
from hesscoh.localization.hessenberg import HessenbergFunction


@pytest.fixture
def h3344():
    return HessenbergFunction((3, 3, 4, 4))


@pytest.fixture
def peterson4():
    return HessenbergFunction.peterson(4)


@pytest.fixture
def flag_x_t():
    """x1, x2, x3, x4, t over the equivariant flag context for n = 4."""
    context = VariableContext.flag(4, with_t=True)
    return context, SparsePolynomial.gens(context)


@pytest.fixture
def t_poly():
    """Build c * t^d over the one-variable context."""
    context = VariableContext.equivariant()

    def make(coeff, degree):
        return SparsePolynomial.monomial(context, (degree,), Fraction(coeff))

    return make


@pytest.fixture(params=["A2", "B2", "G2", "A3", "B3", "C3"])
def small_cartan(request):
    return CartanDatum.parse(request.param)
