import pytest

from loopcalc.algebra import Element, Q0S0, QSphere, QStunted, enumerate_basis, mono_pow
from loopcalc.hopf import TensorElement, coproduct, counit, coproduct_mono, is_primitive, primitive_basis, reduced_coproduct
from loopcalc.parse import parse_expr
from checks import coassociativity_failures, milnor_moore_failures, sq_coproduct_failures


def test_coproduct_examples():
    assert str(coproduct(parse_expr("x5"))) == "1 (x) x5 + x5 (x) 1"
    assert str(coproduct(parse_expr("x5^2"))) == "1 (x) x5^2 + x5^2 (x) 1"
    assert str(coproduct(parse_expr("z2"))) == "1 (x) z2 + z1 (x) z1 + z2 (x) 1"


def test_primitivity_examples():
    assert is_primitive(parse_expr("Q[19,10]x8"))
    assert not is_primitive(parse_expr("x8^3"))
    assert not is_primitive(parse_expr("z2"))
    assert [str(e) for e in primitive_basis(QSphere(4), 4)] == ["x4"]
    assert [str(e) for e in primitive_basis(QSphere(8), 16)] == ["x8^2"]
    assert [str(e) for e in primitive_basis(QSphere(1), 2)] == ["x1^2"]


def test_powers_primitive_iff_power_of_two():
    for n in (1, 2, 5):
        for i in range(1, 17):
            assert is_primitive(parse_expr(f"x{n}") ** i) == (i & (i - 1) == 0)


SPACES = [QSphere(1), QSphere(2), Q0S0]


@pytest.mark.parametrize("space", SPACES, ids=str)
def test_coassociative_and_counital(space):
    assert coassociativity_failures(space, 16) == []
    assert all(counit(Element(frozenset([m]))) == 0 for m in enumerate_basis(space, 5))
    assert counit(Element.one()) == 1


@pytest.mark.parametrize("space", SPACES + [QStunted(1)], ids=str)
def test_sq_commutes_with_coproduct(space):
    assert sq_coproduct_failures(space, 12) == []


@pytest.mark.parametrize("space", [QSphere(1), QSphere(2), Q0S0, QStunted(1)], ids=str)
def test_milnor_moore_squares(space):
    assert milnor_moore_failures(space, 20) == []


def _m(text):
    return next(iter(parse_expr(text).terms))


def test_tensor_algebra():
    a = TensorElement(coproduct_mono(_m("x1")))
    assert a * a == TensorElement(frozenset((mono_pow(x, 2), mono_pow(y, 2)) for x, y in a.terms))
    assert not (a + a)
    assert reduced_coproduct(parse_expr("x1 x2")).terms == frozenset([(_m("x1"), _m("x2")), (_m("x2"), _m("x1"))])
