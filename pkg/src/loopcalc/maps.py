"""Homology-level shadows of suspension, stabilization and the stable
second James-Hopf map j_2 : QS^m -> Q Sigma^m P_m."""
from __future__ import annotations

from typing import NamedTuple

from .algebra import (
    UNIT,
    Element,
    GenMonomial,
    LoopSphere,
    Monomial,
    QSphere,
    QStunted,
    Space,
    mono_pow,
    mul_terms,
    sphere,
    stunted,
    xor_terms,
)
from .dlops import normal_form


def suspend(e: Element, space: Space) -> tuple[Element, Space]:
    """Homology suspension sigma_*: kills decomposables, shifts generators up one."""
    if space.kind == "L":
        if space.a < 2:
            raise ValueError(f"cannot suspend out of {space}: target would not be a loop space")
        target = LoopSphere(space.a - 1, space.b)
        new_base = sphere(space.b - space.a + 1)
    elif space.kind == "QS":
        target = QSphere(space.a + 1)
        new_base = sphere(space.a + 1)
    elif space.kind == "Q0S0":
        target = QSphere(1)
        new_base = sphere(1)
    else:
        raise ValueError(f"suspension is not supported on {space}")
    acc: list = []
    for m in e.terms:
        if len(m.factors) != 1 or m.factors[0][1] != 1:
            continue  # decomposable or the unit
        seq, _ = m.factors[0][0].full()
        acc.extend(normal_form(seq, new_base))
    return Element(xor_terms(acc), target), target


def stabilize(e: Element, space: Space) -> Element:
    """Omega^a S^b -> QS^(b-a): the identity on monomials."""
    if space.kind != "L":
        raise ValueError(f"stabilize expects a loop space context, got {space}")
    return Element(e.terms, QSphere(space.b - space.a))


class J2Image(NamedTuple):
    element: Element
    exact: bool


class LeadingTermOnly(ValueError):
    pass


def _j2_factor(g, e: int, m: int) -> tuple[frozenset, bool]:
    if not g.ops:
        # x_m^e: x_m has weight 1, x_m^2 = Q^m x_m has weight 2
        if e % 2:
            return frozenset(), True
        bottom = Monomial(((GenMonomial((), stunted(m, m)), 1),))
        return frozenset([mono_pow(bottom, e // 2)]), True
    a = g.ops[-1]
    image = normal_form(g.ops[:-1], stunted(m, a))
    return frozenset(mono_pow(t, e) for t in image), len(g.ops) == 1


def j2_project(e: Element, space: Space, mode: str = "leading-term") -> J2Image:
    """Image under j_2 of a homogeneous element of H_*QS^m.

    Exact on classes built from x_m^2 and Q^a x_m.  Longer operation strings
    Q^I Q^a x_m go to Q^I Sigma^m a_a, which is the image only modulo terms of
    lower excess; those results carry exact=False, and mode='exact' refuses
    them.
    """
    if space.kind != "QS":
        raise ValueError(f"j2 is defined on QS^m, got {space}")
    if mode not in ("exact", "leading-term"):
        raise ValueError(f"unknown mode {mode!r}")
    if not e.is_homogeneous():
        raise ValueError("j2_project needs a homogeneous element")
    m = space.a
    exact = True
    acc: list = []
    for mono_ in e.terms:
        terms = frozenset([UNIT])
        for g, k in mono_.factors:
            img, ok = _j2_factor(g, k, m)
            if not ok:
                if mode == "exact":
                    raise LeadingTermOnly(f"{g} needs the leading-term rule")
                exact = False
            terms = mul_terms(terms, img)
            if not terms:
                break
        if mono_.is_unit():
            continue
        acc.extend(terms)
    return J2Image(Element(xor_terms(acc), QStunted(m)), exact)
