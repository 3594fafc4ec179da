"""Dyer-Lashof operations: Adem normal form, excess rules, index conventions.

A sequence ``seq`` over a bottom class ``base`` stands for Q^seq base.  The
Adem relation used for r > 2s is

    Q^r Q^s = sum_i C(i - s - 1, 2i - r) Q^(r + s - i) Q^i

Negative indices act as zero.  Once a sequence is admissible its value is
read off from its excess: above dim(base) it is a generator, equal to
dim(base) it is the square of the shorter sequence, below it vanishes.
"""
from __future__ import annotations

import os
from functools import lru_cache

from .algebra import (
    POINT,
    UNIT,
    Element,
    GenMonomial,
    Generator,
    Monomial,
    admissible,
    assemble,
    lower_indices,
    mono,
    mono_pow,
    mono_sqrt,
    mul_terms,
    xor_terms,
)
from .arith import binom_mod2

DEFAULT_FUEL = 2_000_000


class FuelExhausted(RuntimeError):
    pass


class OutOfModel(ValueError):
    pass


def fuel_limit() -> int:
    return int(os.environ.get("LOOPCALC_FUEL", DEFAULT_FUEL))


class _Fuel:
    left = DEFAULT_FUEL


def adem_terms(r: int, s: int) -> list[tuple[int, int]]:
    """Admissible-side pairs (r+s-i, i) in the expansion of Q^r Q^s, r > 2s."""
    return [
        (r + s - i, i)
        for i in range((r + 1) // 2, r - s)
        if binom_mod2(i - s - 1, 2 * i - r)
    ]


_memo: dict[str, dict] = {"innermost": {}, "outermost": {}}


def _rewrite(seq: tuple, order: str) -> frozenset:
    memo = _memo[order]
    hit = memo.get(seq)
    if hit is not None:
        return hit
    if any(k < 0 for k in seq):
        out = frozenset()
    else:
        spots = [k for k in range(len(seq) - 1) if seq[k] > 2 * seq[k + 1]]
        if not spots:
            out = frozenset([seq])
        else:
            _Fuel.left -= 1
            if _Fuel.left < 0:
                raise FuelExhausted("Adem rewriting ran out of fuel (raise LOOPCALC_FUEL)")
            k = spots[-1] if order == "innermost" else spots[0]
            r, s = seq[k], seq[k + 1]
            acc: list = []
            for a, b in adem_terms(r, s):
                acc.extend(_rewrite(seq[:k] + (a, b) + seq[k + 2 :], order))
            out = xor_terms(acc)
    memo[seq] = out
    return out


def adem_reduce(seq: tuple, order: str = "innermost") -> frozenset:
    """Formal Adem normal form: the set of admissible sequences equal to seq."""
    if order not in _memo:
        raise ValueError(f"unknown rewriting order {order!r}")
    _Fuel.left = fuel_limit()
    return _rewrite(tuple(seq), order)


def evaluate_admissible(seq: tuple, base: Generator) -> Monomial | None:
    """Value of an admissible Q^seq on base via the excess rules; None for 0."""
    if not seq:
        return UNIT if base.kind == "p" else mono(base_gen(base))
    ex = seq[0] - sum(seq[1:])
    if ex > base.dim:
        return mono(assemble(seq, base))
    if ex == base.dim:
        inner = evaluate_admissible(seq[1:], base)
        return None if inner is None else mono_pow(inner, 2)
    return None


def base_gen(base: Generator) -> GenMonomial:
    return GenMonomial((), base)


@lru_cache(maxsize=None)
def normal_form(seq: tuple, base: Generator, order: str = "innermost") -> frozenset:
    """Q^seq base written in the monomial basis, as a set of monomials."""
    vals = (evaluate_admissible(s, base) for s in adem_reduce(seq, order))
    return xor_terms(v for v in vals if v is not None)


def full_sequence(ops, g: Generator) -> tuple[tuple, Generator]:
    ops = tuple(ops)
    if g.kind == "z":
        return ops + (g.n,), POINT
    return ops, g


def adem_normalize(ops, g: Generator, order: str = "innermost") -> Element:
    """Q^ops g for an arbitrary sequence, in the admissible basis."""
    seq, base = full_sequence(ops, g)
    return Element(normal_form(seq, base, order))


# -- Q^a on elements ---------------------------------------------------------


@lru_cache(maxsize=None)
def q_gen(a: int, g: GenMonomial) -> frozenset:
    seq, base = g.full()
    if a < g.dim:
        return frozenset()
    return normal_form((a,) + seq, base)


@lru_cache(maxsize=None)
def q_mono(a: int, m: Monomial) -> frozenset:
    d = m.dim
    if a < d:
        return frozenset()
    if not m.factors:
        return frozenset([UNIT]) if a == 0 else frozenset()
    if m.is_square():
        if a % 2:
            return frozenset()
        return frozenset(mono_pow(t, 2) for t in q_mono(a // 2, mono_sqrt(m)))
    # peel one copy of a generator with odd exponent: Q^a(g m') = sum Q^i g Q^(a-i) m'
    k = next(k for k, (_, e) in enumerate(m.factors) if e % 2)
    g, e = m.factors[k]
    rest = list(m.factors)
    if e == 1:
        del rest[k]
    else:
        rest[k] = (g, e - 1)
    rest_m = Monomial(tuple(rest))
    rd = rest_m.dim
    acc: list = []
    for i in range(g.dim, a - rd + 1):
        left = q_gen(i, g)
        if not left:
            continue
        right = q_mono(a - i, rest_m)
        if right:
            acc.extend(mul_terms(left, right))
    return xor_terms(acc)


def apply_Q(a: int, e: Element) -> Element:
    """Q^a e for a homogeneous element, with the Cartan formula on products.

    On Q_0S^0 the zeta generators are treated as Q^(I,i)[1] translated to the
    base component, so Q^a Q^I z_i is the generator Q^(a,I) z_i.
    """
    if not e.is_homogeneous():
        raise ValueError("apply_Q needs a homogeneous element")
    if a < 0:
        return Element((), e.space)
    acc: list = []
    for m in e.terms:
        acc.extend(q_mono(a, m))
    return Element(xor_terms(acc), e.space)


def apply_ops(ops, e: Element) -> Element:
    """Q^ops e, applying the innermost operation first."""
    for a in reversed(tuple(ops)):
        e = apply_Q(a, e)
    return e


# -- index conventions ---------------------------------------------------------


def convert_lower_to_upper(J, g: Generator) -> Element:
    """Q_{j_1} ... Q_{j_r} g (j_1 outermost) in upper-indexed normal form.

    Q_j z = Q^(j + dim z) z; Q_0 is squaring.
    """
    J = tuple(J)
    if any(j < 0 for j in J):
        raise OutOfModel(f"negative lower index in {J}")
    if g.kind == "z":
        e = Element.of(GenMonomial((), g))
    else:
        e = Element.of(base_gen(g))
    for j in reversed(J):
        e = apply_Q(j + e.dim, e)
    return e


def upper_sequence(J, base_dim: int) -> tuple:
    """Upper indices for Q_J on a class of dimension base_dim (no normalizing)."""
    out = []
    d = base_dim
    for j in reversed(tuple(J)):
        u = d + j
        out.append(u)
        d += u
    return tuple(reversed(out))


def convert_upper_to_lower(I, g: Generator) -> tuple:
    """Lower indices (outermost first) of a basis generator Q^I g."""
    I = tuple(I)
    if not admissible(I):
        raise OutOfModel(f"{I} is not admissible")
    J = lower_indices(I, g.dim)
    if any(j <= 0 for j in J):
        raise OutOfModel(f"Q^{I} on {g} is not a generator (lower indices {J})")
    return J


def weight(m: Monomial) -> int:
    """Height in the Snaith filtration: Q^I g has weight 2^len(I)."""
    total = 0
    for g, e in m.factors:
        seq, _ = g.full()
        total += e * 2 ** len(seq)
    return total
