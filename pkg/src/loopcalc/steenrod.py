"""Dual Steenrod operations Sq^r_* on the homology algebras.

On Dyer-Lashof operations the Nishida relations

    Sq^r_* Q^a = sum_t C(a - r, r - 2t) Q^(a - r + t) Sq^t_*

push Sq_* down to the bottom class, where the base rules are: sphere and
point classes are annihilated; Sq^t_* Sigma^m a_j = C(j - t, t) Sigma^m a_(j-t),
zero once j - t < m.  Products use the Cartan formula.
"""
from __future__ import annotations

from functools import lru_cache

from .algebra import Element, GenMonomial, Generator, Monomial, mono_pow, mono_sqrt, mul_terms, xor_terms
from .arith import binom_mod2
from .dlops import normal_form


def _base_sq(t: int, base: Generator) -> Generator | None:
    if t == 0:
        return base
    if base.kind == "s":
        j = base.j - t
        if j >= base.n and binom_mod2(j, t):
            return Generator("s", base.n, j)
    return None


@lru_cache(maxsize=None)
def nishida(r: int, seq: tuple, base: Generator) -> frozenset:
    """Sq^r_* Q^seq base as a formal set of (sequence, base) pairs."""
    if r == 0:
        return frozenset([(seq, base)])
    if not seq:
        b = _base_sq(r, base)
        return frozenset() if b is None else frozenset([(seq, b)])
    a, inner = seq[0], seq[1:]
    inner_dim = base.dim + sum(inner)
    acc: list = []
    for t in range(0, min(r // 2, inner_dim) + 1):
        if not binom_mod2(a - r, r - 2 * t):
            continue
        k = a - r + t
        if k < 0:
            continue
        for s2, b2 in nishida(t, inner, base):
            acc.append(((k,) + s2, b2))
    return xor_terms(acc)


@lru_cache(maxsize=None)
def sq_gen(r: int, g: GenMonomial) -> frozenset:
    if r == 0:
        return frozenset([Monomial(((g, 1),))])
    if r > g.dim:
        return frozenset()
    seq, base = g.full()
    acc: list = []
    for s2, b2 in nishida(r, seq, base):
        acc.extend(normal_form(s2, b2))
    return xor_terms(acc)


@lru_cache(maxsize=None)
def sq_mono(r: int, m: Monomial) -> frozenset:
    if r == 0:
        return frozenset([m])
    if r > m.dim or not m.factors:
        return frozenset()
    if m.is_square():
        if r % 2:
            return frozenset()
        return frozenset(mono_pow(t, 2) for t in sq_mono(r // 2, mono_sqrt(m)))
    k = next(k for k, (_, e) in enumerate(m.factors) if e % 2)
    g, e = m.factors[k]
    rest = list(m.factors)
    if e == 1:
        del rest[k]
    else:
        rest[k] = (g, e - 1)
    rest_m = Monomial(tuple(rest))
    acc: list = []
    for i in range(0, min(r, g.dim) + 1):
        left = sq_gen(i, g)
        if not left:
            continue
        right = sq_mono(r - i, rest_m)
        if right:
            acc.extend(mul_terms(left, right))
    return xor_terms(acc)


def sq_terms(r: int, terms) -> frozenset:
    acc: list = []
    for m in terms:
        acc.extend(sq_mono(r, m))
    return xor_terms(acc)


def sq_down(r: int, e: Element) -> Element:
    """Sq^r_* e; lowers dimension by r."""
    if r <= 0:
        raise ValueError(f"Sq^r_* needs r >= 1, got {r}")
    if not e.is_homogeneous():
        raise ValueError("sq_down needs a homogeneous element")
    return Element(sq_terms(r, e.terms), e.space)


def annihilated_by_all_sq(e: Element) -> bool:
    """True iff Sq^t_* e = 0 for every t > 0."""
    if not e.is_homogeneous():
        raise ValueError("annihilated_by_all_sq needs a homogeneous element")
    d = e.dim or 0
    return all(not sq_terms(t, e.terms) for t in range(1, d + 1))


def first_nonzero_sq(e: Element) -> int | None:
    d = e.dim or 0
    for t in range(1, d + 1):
        if sq_terms(t, e.terms):
            return t
    return None
