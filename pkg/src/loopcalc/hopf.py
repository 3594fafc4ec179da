"""Coproduct, primitivity and primitive subspaces.

Sphere and stunted generators Q^I g are primitive.  A zeta generator
Q^I z_i is Q^K[1] translated to the base component, K = (I, i), so

    psi Q^K[1] = sum over K' + K'' = K (entrywise, >= 0) of Q^K'[1] (x) Q^K''[1]

and each side is translated back and put in normal form.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Iterable

from .algebra import (
    UNIT,
    Element,
    GenMonomial,
    Monomial,
    Space,
    enumerate_basis,
    mono,
    mono_key,
    mono_mul,
    mono_pow,
    xor_terms,
)
from .dlops import normal_form
from .linalg import solve_f2


class TensorElement:
    """F_2 combination of pairs (left monomial, right monomial)."""

    __slots__ = ("terms",)

    def __init__(self, terms: Iterable = ()):
        self.terms = terms if isinstance(terms, frozenset) else xor_terms(terms)

    def __add__(self, other: TensorElement) -> TensorElement:
        return TensorElement(self.terms ^ other.terms)

    def __mul__(self, other: TensorElement) -> TensorElement:
        return TensorElement(_tensor_mul(self.terms, other.terms))

    def __eq__(self, other) -> bool:
        return isinstance(other, TensorElement) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pairs = sorted(self.terms, key=lambda p: (mono_key(p[0]), mono_key(p[1])))
        return " + ".join(f"{a} (x) {b}" for a, b in pairs)

    __repr__ = __str__


def _tensor_mul(a: frozenset, b: frozenset) -> frozenset:
    return xor_terms((mono_mul(x1, x2), mono_mul(y1, y2)) for x1, y1 in a for x2, y2 in b)


def primitive_tensor(m: Monomial) -> frozenset:
    return frozenset([(m, UNIT), (UNIT, m)])


@lru_cache(maxsize=None)
def coproduct_gen(g: GenMonomial) -> frozenset:
    if g.gen.kind != "z":
        return primitive_tensor(mono(g))
    seq, base = g.full()
    acc: list = []
    for left in product(*(range(k + 1) for k in seq)):
        right = tuple(k - a for k, a in zip(seq, left))
        lt = normal_form(left, base)
        if not lt:
            continue
        rt = normal_form(right, base)
        acc.extend((x, y) for x in lt for y in rt)
    return xor_terms(acc)


def _frobenius(t: frozenset) -> frozenset:
    return frozenset((mono_pow(x, 2), mono_pow(y, 2)) for x, y in t)


@lru_cache(maxsize=None)
def _gen_power(g: GenMonomial, e: int) -> frozenset:
    if e == 1:
        return coproduct_gen(g)
    if e % 2 == 0:
        return _frobenius(_gen_power(g, e // 2))
    return _tensor_mul(coproduct_gen(g), _gen_power(g, e - 1))


@lru_cache(maxsize=None)
def coproduct_mono(m: Monomial) -> frozenset:
    out = frozenset([(UNIT, UNIT)])
    for g, e in m.factors:
        out = _tensor_mul(out, _gen_power(g, e))
    return out


def coproduct(e: Element) -> TensorElement:
    acc: list = []
    for m in e.terms:
        acc.extend(coproduct_mono(m))
    return TensorElement(xor_terms(acc))


def reduced_coproduct(e: Element) -> TensorElement:
    t = coproduct(e)
    prim = xor_terms([p for m in e.terms for p in primitive_tensor(m)])
    return TensorElement(t.terms ^ prim)


def is_primitive(e: Element) -> bool:
    if not e.is_homogeneous():
        raise ValueError("is_primitive needs a homogeneous element")
    return not reduced_coproduct(e)


def counit(e: Element) -> int:
    return 1 if UNIT in e.terms else 0


@lru_cache(maxsize=None)
def _primitive_basis(space: Space, d: int) -> tuple:
    basis = enumerate_basis(space, d)
    images = [reduced_coproduct(Element(frozenset([m]))) for m in basis]
    return tuple(solve_f2([images], basis))


def primitive_basis(space: Space, d: int) -> list[Element]:
    """Reduced basis of the primitives of dimension d."""
    if d < 1:
        raise ValueError("primitives live in positive dimensions")
    return [e.with_space(space) for e in _primitive_basis(space, d)]
