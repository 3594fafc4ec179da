import pytest

from loopcalc.algebra import Element, GenMonomial, LoopSphere, Q0S0, QSphere, QStunted, enumerate_basis, generators, sphere, stunted
from loopcalc.dlops import apply_ops
from loopcalc.maps import LeadingTermOnly, j2_project, stabilize, suspend
from loopcalc.parse import parse_expr


def test_suspension_examples():
    out, target = suspend(parse_expr("x5^2", QSphere(5)), QSphere(5))
    assert not out and target == QSphere(6)
    out, target = suspend(parse_expr("Q[9]x8", LoopSphere(2, 10)), LoopSphere(2, 10))
    assert target == LoopSphere(1, 10)
    assert str(out) == "x9^2"
    out, target = suspend(parse_expr("Q[2]z1 + z3", Q0S0), Q0S0)
    assert target == QSphere(1)
    assert out == apply_ops((2, 1), parse_expr("x1")) + parse_expr("Q[3]x1")


@pytest.mark.parametrize("space", [QSphere(1), QSphere(3), Q0S0, LoopSphere(2, 7), LoopSphere(3, 9)], ids=str)
def test_suspension_kills_decomposables_and_shifts(space):
    for d in range(1, 25):
        for m in enumerate_basis(space, d):
            out, target = suspend(Element(frozenset([m]), space), space)
            if m.is_decomposable():
                assert not out, str(m)
            elif out:
                assert out.dim == d + 1
                assert all(mm.dim == d + 1 for mm in out.terms)


def test_zeta_suspension_rule():
    x1 = parse_expr("x1")
    for g in generators(Q0S0, 20):
        out, _ = suspend(Element.of(g), Q0S0)
        assert out == apply_ops(g.ops + (g.gen.n,), x1), str(g)


def test_suspension_out_of_single_loop_refused():
    with pytest.raises(ValueError):
        suspend(parse_expr("x5"), LoopSphere(1, 6))
    with pytest.raises(ValueError):
        suspend(parse_expr("s1a1"), QStunted(1))


def test_stabilize():
    e = parse_expr("Q[9]x8", LoopSphere(2, 10))
    out = stabilize(e, LoopSphere(2, 10))
    assert out == parse_expr("Q[9]x8", QSphere(8)) and out.space == QSphere(8)
    chain = parse_expr("Q[16,8]x8", LoopSphere(3, 11))
    assert stabilize(chain, LoopSphere(3, 11)) == parse_expr("x8^4")
    with pytest.raises(ValueError):
        stabilize(e, QSphere(8))


def test_stabilize_injective_on_loop_bases():
    for a in (1, 2, 3):
        for b in range(a + 1, 10):
            space = LoopSphere(a, b)
            for d in range(1, 21):
                basis = enumerate_basis(space, d)
                target = set(enumerate_basis(QSphere(b - a), d))
                images = [stabilize(Element(frozenset([m]), space), space) for m in basis]
                assert len(set(images)) == len(images)
                assert all(len(i) == 1 and next(iter(i.terms)) in target for i in images)


def test_j2_values():
    for n in range(6, 14):
        img = j2_project(parse_expr(f"Q[{n + 1}]x{n + 1}"), QSphere(n + 1), mode="exact")
        assert img.exact and img.element == Element.of(GenMonomial((), stunted(n + 1, n + 1)))
        xi = parse_expr(f"Q[{n + 1}]x{n}")
        img = j2_project(xi * xi, QSphere(n), mode="exact")
        a = Element.of(GenMonomial((), stunted(n, n + 1)))
        assert img.exact and img.element == a * a
    assert not j2_project(parse_expr("x4"), QSphere(4)).element


def test_j2_leading_term():
    n = 7
    e = parse_expr(f"Q[{4 * n + 5},{2 * n + 3},{n + 2}]x1")
    img = j2_project(e, QSphere(1))
    assert not img.exact
    assert str(img.element) == f"Q[{4 * n + 5},{2 * n + 3}]s1a{n + 2}"
    assert img.element.space == QStunted(1)
    with pytest.raises(LeadingTermOnly):
        j2_project(e, QSphere(1), mode="exact")


def test_j2_multiplicative():
    u, v = parse_expr("Q[5]x3"), parse_expr("Q[4]x3")
    ju = j2_project(u, QSphere(3)).element
    jv = j2_project(v, QSphere(3)).element
    assert j2_project(u * v, QSphere(3)).element == ju * jv
