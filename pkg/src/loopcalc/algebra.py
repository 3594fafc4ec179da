"""Polynomial models for the mod 2 homology of QS^n, Q_0S^0, Omega^a S^b
and Q(Sigma^m P_m).

Every algebra here is polynomial on generators ``Q^I g`` where ``g`` is a
bottom class and ``I`` is an admissible sequence of upper Dyer-Lashof
indices with excess strictly above ``dim g``.  Classes whose excess equals
``dim g`` are squares and never appear as generators.

Elements are sets of monomials: over F_2 adding a monomial twice removes it.
"""
from __future__ import annotations

import re
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple

KIND_RANK = {"p": -1, "x": 0, "z": 1, "s": 2}


class Generator(NamedTuple):
    """A bottom class.

    kind 'x': sphere class x_n, 'z': zeta class z_i (the base-component class
    Q^i[1]*[-2]), 's': stunted projective class Sigma^m a_j (n=m, j=j).
    kind 'p' is the point class [1]; it only appears inside the rewriting
    machinery, where a zeta generator Q^I z_i is handled as Q^(I,i) over [1].
    """

    kind: str
    n: int
    j: int = 0

    @property
    def dim(self) -> int:
        if self.kind == "s":
            return self.n + self.j
        if self.kind == "p":
            return 0
        return self.n

    def __str__(self) -> str:
        if self.kind == "s":
            return f"s{self.n}a{self.j}"
        if self.kind == "p":
            return "[1]"
        return f"{self.kind}{self.n}"


POINT = Generator("p", 0)


def sphere(n: int) -> Generator:
    if n < 1:
        raise ValueError(f"sphere class needs n >= 1, got {n}")
    return Generator("x", n)


def zeta(i: int) -> Generator:
    if i < 1:
        raise ValueError(f"zeta class needs i >= 1, got {i}")
    return Generator("z", i)


def stunted(m: int, j: int) -> Generator:
    if m < 1 or j < m:
        raise ValueError(f"stunted class needs 1 <= m <= j, got m={m}, j={j}")
    return Generator("s", m, j)


def admissible(seq: Iterable[int]) -> bool:
    seq = tuple(seq)
    return all(seq[k] <= 2 * seq[k + 1] for k in range(len(seq) - 1))


def excess(seq: Iterable[int]) -> float:
    seq = tuple(seq)
    if not seq:
        return float("inf")
    return seq[0] - sum(seq[1:])


class GenMonomial(NamedTuple):
    """Q^ops applied to a bottom class."""

    ops: tuple
    gen: Generator

    @property
    def dim(self) -> int:
        return self.gen.dim + sum(self.ops)

    def full(self) -> tuple[tuple, Generator]:
        """(upper sequence, base class) with zeta classes unfolded over [1]."""
        if self.gen.kind == "z":
            return self.ops + (self.gen.n,), POINT
        return self.ops, self.gen

    def is_basis(self) -> bool:
        seq, base = self.full()
        if not seq:
            return base.kind != "p"
        return admissible(seq) and excess(seq) > base.dim

    def __str__(self) -> str:
        if not self.ops:
            return str(self.gen)
        return "Q[" + ",".join(map(str, self.ops)) + "]" + str(self.gen)


def assemble(seq: tuple, base: Generator) -> GenMonomial:
    """Inverse of GenMonomial.full()."""
    if base.kind == "p":
        return GenMonomial(seq[:-1], Generator("z", seq[-1]))
    return GenMonomial(seq, base)


def gen_key(g: GenMonomial) -> tuple:
    return (g.dim, KIND_RANK[g.gen.kind], g.gen.n, g.gen.j, g.ops)


class Monomial(NamedTuple):
    """Product of generators; ``factors`` is a canonically sorted tuple of
    (GenMonomial, exponent) pairs with distinct generators."""

    factors: tuple = ()

    @property
    def dim(self) -> int:
        return sum(g.dim * e for g, e in self.factors)

    def is_unit(self) -> bool:
        return not self.factors

    def is_square(self) -> bool:
        return all(e % 2 == 0 for _, e in self.factors)

    def is_decomposable(self) -> bool:
        return len(self.factors) > 1 or (len(self.factors) == 1 and self.factors[0][1] > 1)

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        parts = []
        for g, e in self.factors:
            s = str(g)
            if e > 1:
                s = (f"({s})" if g.ops else s) + f"^{e}"
            parts.append(s)
        return " ".join(parts)


UNIT = Monomial(())


def mono_key(m: Monomial) -> tuple:
    return (m.dim, tuple(gen_key(g) + (e,) for g, e in m.factors))


def mono(g: GenMonomial, e: int = 1) -> Monomial:
    return Monomial(((g, e),))


@lru_cache(maxsize=None)
def mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1.factors:
        return m2
    if not m2.factors:
        return m1
    exps = dict(m1.factors)
    for g, e in m2.factors:
        exps[g] = exps.get(g, 0) + e
    return Monomial(tuple(sorted(exps.items(), key=lambda ge: gen_key(ge[0]))))


def mono_pow(m: Monomial, k: int) -> Monomial:
    return Monomial(tuple((g, e * k) for g, e in m.factors))


def mono_sqrt(m: Monomial) -> Monomial:
    if not m.is_square():
        raise ValueError(f"{m} is not a square")
    return Monomial(tuple((g, e // 2) for g, e in m.factors))


def xor_terms(items: Iterable) -> frozenset:
    """Collect items with mod 2 multiplicity."""
    out: set = set()
    for x in items:
        if x in out:
            out.remove(x)
        else:
            out.add(x)
    return frozenset(out)


def mul_terms(a: Iterable[Monomial], b: Iterable[Monomial]) -> frozenset:
    b = tuple(b)
    return xor_terms(mono_mul(x, y) for x in a for y in b)


class Space(NamedTuple):
    """Which homology algebra is in force.

    kind 'QS' (QS^a), 'Q0S0', 'L' (Omega^a S^b), 'QP' (Q Sigma^a P_a).
    """

    kind: str
    a: int = 0
    b: int = 0

    def __str__(self) -> str:
        if self.kind == "QS":
            return f"QS{self.a}"
        if self.kind == "Q0S0":
            return "Q0S0"
        if self.kind == "L":
            return f"L{self.a}S{self.b}"
        return f"QP{self.a}"

    @property
    def sphere_dim(self) -> int | None:
        if self.kind == "QS":
            return self.a
        if self.kind == "L":
            return self.b - self.a
        return None


def QSphere(n: int) -> Space:
    if n < 1:
        raise ValueError(f"QS^n needs n >= 1, got {n}")
    return Space("QS", n)


Q0S0 = Space("Q0S0")


def LoopSphere(a: int, b: int) -> Space:
    if a < 1 or b <= a:
        raise ValueError(f"Omega^a S^b needs 1 <= a < b, got a={a}, b={b}")
    return Space("L", a, b)


def QStunted(m: int) -> Space:
    if m < 1:
        raise ValueError(f"Q Sigma^m P_m needs m >= 1, got {m}")
    return Space("QP", m)


def parse_space(text: str) -> Space:
    t = text.strip()
    if t == "Q0S0":
        return Q0S0
    if m := re.fullmatch(r"QS(\d+)", t):
        return QSphere(int(m.group(1)))
    if m := re.fullmatch(r"L(\d+)S(\d+)", t):
        return LoopSphere(int(m.group(1)), int(m.group(2)))
    if m := re.fullmatch(r"QP(\d+)", t):
        return QStunted(int(m.group(1)))
    raise ValueError(f"unknown space {text!r} (expected QS<n>, Q0S0, L<a>S<b> or QP<m>)")


def lower_indices(seq: tuple, base_dim: int) -> tuple:
    """Lower indices of Q^seq on a class of dimension base_dim, outermost
    first, so Q^seq = Q_{j_1} ... Q_{j_r}."""
    out = []
    d = base_dim
    for u in reversed(seq):
        out.append(u - d)
        d += u
    return tuple(reversed(out))


def gen_in_space(g: GenMonomial, space: Space) -> bool:
    if not g.is_basis():
        return False
    kind = g.gen.kind
    if space.kind == "QS":
        return kind == "x" and g.gen.n == space.a
    if space.kind == "Q0S0":
        return kind == "z"
    if space.kind == "QP":
        return kind == "s" and g.gen.n == space.a
    # Omega^a S^b: lower indices 1 <= j <= a-1
    if kind != "x" or g.gen.n != space.b - space.a:
        return False
    if not g.ops:
        return True
    return g.ops[-1] - g.gen.n <= space.a - 1


def mono_in_space(m: Monomial, space: Space) -> bool:
    return all(gen_in_space(g, space) for g, _ in m.factors)


class Element:
    """F_2-linear combination of monomials, optionally tagged with a space."""

    __slots__ = ("terms", "space")

    def __init__(self, terms: Iterable[Monomial] = (), space: Space | None = None):
        self.terms = terms if isinstance(terms, frozenset) else xor_terms(terms)
        self.space = space

    @classmethod
    def of(cls, g: GenMonomial, e: int = 1, space: Space | None = None) -> Element:
        return cls(frozenset([mono(g, e)]), space)

    @classmethod
    def one(cls, space: Space | None = None) -> Element:
        return cls(frozenset([UNIT]), space)

    def monomials(self) -> list[Monomial]:
        return sorted(self.terms, key=mono_key)

    @property
    def dim(self) -> int | None:
        dims = {m.dim for m in self.terms}
        return dims.pop() if len(dims) == 1 else None

    def is_homogeneous(self) -> bool:
        return len({m.dim for m in self.terms}) <= 1

    def _space_with(self, other: Element) -> Space | None:
        if self.space is not None and other.space is not None and self.space != other.space:
            raise ValueError(f"mixed spaces: {self.space} and {other.space}")
        return self.space if self.space is not None else other.space

    def __add__(self, other: Element) -> Element:
        return Element(self.terms ^ other.terms, self._space_with(other))

    __sub__ = __add__

    def __mul__(self, other: Element) -> Element:
        return multiply(self, other)

    def __pow__(self, k: int) -> Element:
        out = Element.one(self.space)
        for _ in range(k):
            out = out * self
        return out

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(self.terms)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.monomials())

    def __len__(self) -> int:
        return len(self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(str(m) for m in self.monomials())

    def __repr__(self) -> str:
        return f"Element({str(self)!r}{'' if self.space is None else ', ' + str(self.space)})"

    def with_space(self, space: Space | None) -> Element:
        return Element(self.terms, space)


def multiply(e1: Element, e2: Element) -> Element:
    space = e1._space_with(e2)
    return Element(mul_terms(e1.terms, e2.terms), space)


# -- basis enumeration ------------------------------------------------------


def _lower_chains(base_dim: int, max_dim: int, max_index: int | None) -> Iterator[tuple]:
    """Upper sequences Q_{j_1}...Q_{j_r} on a class of dimension base_dim with
    1 <= j_1 <= ... <= j_r (j_r innermost) and total dimension <= max_dim."""

    def grow(seq: tuple, d: int, cap: int):
        yield seq
        top = cap if max_index is None else min(cap, max_index)
        for j in range(1, top + 1):
            nd = 2 * d + j
            if nd > max_dim:
                break
            yield from grow((d + j,) + seq, nd, j)

    yield from grow((), base_dim, max_dim)


def bottom_classes(space: Space, max_dim: int) -> list[Generator]:
    if space.kind in ("QS", "L"):
        n = space.sphere_dim
        return [sphere(n)] if n <= max_dim else []
    if space.kind == "Q0S0":
        return [POINT]
    m = space.a
    return [stunted(m, j) for j in range(m, max_dim - m + 1)]


@lru_cache(maxsize=None)
def generators(space: Space, max_dim: int) -> tuple[GenMonomial, ...]:
    """All polynomial generators of the space in dimensions 1..max_dim."""
    max_index = space.a - 1 if space.kind == "L" else None
    out = []
    for base in bottom_classes(space, max_dim):
        for seq in _lower_chains(base.dim, max_dim, max_index):
            if base.kind == "p" and not seq:
                continue
            out.append(assemble(seq, base))
    return tuple(sorted(out, key=gen_key))


@lru_cache(maxsize=None)
def enumerate_basis(space: Space, d: int) -> tuple[Monomial, ...]:
    """All monomials of dimension d in the space, in canonical order."""
    if d < 0:
        raise ValueError("dimension must be nonnegative")
    gens = generators(space, d)
    found: list[Monomial] = []

    def rec(k: int, left: int, acc: tuple):
        if left == 0:
            found.append(Monomial(acc))
            return
        if k == len(gens):
            return
        g = gens[k]
        gd = g.dim
        if gd > left:
            return  # generators are sorted by dimension
        for e in range(left // gd, 0, -1):
            rec(k + 1, left - e * gd, acc + ((g, e),))
        rec(k + 1, left, acc)

    rec(0, d, ())
    return tuple(sorted(found, key=mono_key))
