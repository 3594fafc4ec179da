"""Spherical-class sieve.

A spherical class is primitive and killed by every Sq^t_*, t > 0.  The sieve
computes that subspace degree by degree, isolates the squares xi^2 of odd
dimensional primitives, and checks the Curtis-Wellington closed form for
Q_0S^0 against direct Nishida sweeps.  Everything here is a statement about
homology only.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .algebra import POINT, Element, Monomial, Q0S0, Space, enumerate_basis, excess, mono_sqrt
from .arith import rho
from .hopf import is_primitive, primitive_basis, reduced_coproduct
from .linalg import Coordinates, from_vector, intersect, kernel, rref, to_vector
from .dlops import normal_form
from .steenrod import annihilated_by_all_sq, sq_terms

DEFAULT_MAX_DIM = 128


class ResourceLimit(RuntimeError):
    pass


def wellington_check(I: Sequence[int], i: int) -> bool:
    """Closed-form test for Sq^t_* Q^I z_i = 0 for all t > 0.

    (1) ex(Q^I z_i) = i_1 - (i_2 + ... + i_s + i) < 2^rho(i_1)
    (2) 2 i_(j+1) - i_j < 2^rho(i_(j+1)) for j = 1..s, with i_(s+1) = i.
    """
    I = tuple(I)
    if not I:
        raise ValueError("the criterion needs a nonempty I; sweep bare zeta classes directly")
    seq = I + (i,)
    if excess(seq) >= 2 ** rho(I[0]):
        return False
    return all(2 * seq[j + 1] - seq[j] < 2 ** rho(seq[j + 1]) for j in range(len(I)))


def _constraint_images(basis: Sequence[Monomial], d: int) -> list[int]:
    coords = Coordinates()
    images = []
    for m in basis:
        e = Element(frozenset([m]))
        keys = [("psi", p) for p in reduced_coproduct(e).terms]
        for t in range(1, d + 1):
            keys.extend(("sq", t, x) for x in sq_terms(t, e.terms))
        images.append(coords.vector(keys))
    return images


@lru_cache(maxsize=None)
def _candidate_vectors(space: Space, d: int) -> tuple[int, ...]:
    basis = enumerate_basis(space, d)
    return tuple(kernel(_constraint_images(basis, d)))


def spherical_candidates(space: Space, d: int, within: Sequence[Element] | None = None) -> list[Element]:
    """Reduced basis of {primitive} intersected with ker Sq^t_*, 1 <= t <= d.

    With ``within``, the search is restricted to the span of those elements.
    """
    if d < 1:
        raise ValueError("candidates live in positive dimensions")
    basis = enumerate_basis(space, d)
    vecs = list(_candidate_vectors(space, d))
    if within is not None:
        vecs = intersect(vecs, [to_vector(e, basis) for e in within])
    return [from_vector(v, basis, space) for v in rref(vecs)]


def square_root(e: Element) -> Element | None:
    """The unique xi with xi^2 = e, or None if e is not a square."""
    if not all(m.is_square() for m in e.terms):
        return None
    return Element(frozenset(mono_sqrt(m) for m in e.terms), e.space)


def square_root_filter(cands: Sequence[Element]) -> list[Element]:
    """Keep the candidates xi^2 with xi primitive of odd dimension."""
    out = []
    for c in cands:
        if not c:
            continue
        root = square_root(c)
        if root is None or root.dim is None or root.dim % 2 == 0:
            continue
        if is_primitive(root):
            out.append(c)
    return out


def square_candidates(space: Space, d: int) -> list[Element]:
    """Candidates in dimension d that are squares of odd-dimensional primitives."""
    if d % 4 != 2:
        return []
    basis = enumerate_basis(space, d)
    squares = []
    for xi in primitive_basis(space, d // 2):
        sq = xi * xi
        squares.append(to_vector(sq, basis))
    vecs = intersect(list(_candidate_vectors(space, d)), squares)
    found = [from_vector(v, basis, space) for v in vecs]
    return square_root_filter(found)


@dataclass
class DimensionReport:
    dim: int
    basis_size: int
    candidates: list[Element]
    square_candidates: list[Element]


@dataclass
class SieveReport:
    space: Space
    min_dim: int
    max_dim: int
    dims: list[DimensionReport] = field(default_factory=list)
    criterion_agree: int = 0
    criterion_disagree: list[tuple] = field(default_factory=list)

    def all_candidates(self) -> list[Element]:
        return [c for r in self.dims for c in r.candidates]

    def all_square_candidates(self) -> list[Element]:
        return [c for r in self.dims for c in r.square_candidates]


def criterion_crosscheck(max_dim: int, max_length: int = 3) -> tuple[int, list[tuple]]:
    """Compare wellington_check with direct sweeps on the Q_0S^0 classes
    Q^I z_i, 1 <= len(I) <= max_length, dim <= max_dim, excess >= 0.

    Returns (number of agreements, list of (I, i, criterion, direct) witnesses).
    """
    agree, witnesses = 0, []
    for I, i in criterion_cases(max_dim, max_length):
        e = Element(normal_form(I + (i,), POINT))
        direct = annihilated_by_all_sq(e)
        closed = wellington_check(I, i)
        if closed == direct:
            agree += 1
        else:
            witnesses.append((I, i, closed, direct))
    return agree, witnesses


def criterion_cases(max_dim: int, max_length: int = 3) -> list[tuple[tuple, int]]:
    """Admissible (I, i) with 1 <= len(I) <= max_length, sum <= max_dim and
    ex(Q^I z_i) >= 0, i.e. the nonzero classes Q^I z_i."""
    out = []

    def grow(seq: tuple, total: int):
        # seq is (i_k, ..., i_s, i); prepend i_(k-1) <= 2 i_k
        if len(seq) >= 2 and seq[0] - sum(seq[1:]) >= 0:
            out.append((seq[:-1], seq[-1]))
        if len(seq) == max_length + 1:
            return
        inner = sum(seq)
        for a in range(inner, min(2 * seq[0], max_dim - total) + 1):
            grow((a,) + seq, total + a)

    for i in range(1, max_dim + 1):
        grow((i,), i)
    return sorted(out, key=lambda c: (sum(c[0]) + c[1], c))


def sieve_report(space: Space, max_dim: int, min_dim: int = 1, limit: int = DEFAULT_MAX_DIM) -> SieveReport:
    if max_dim > limit:
        raise ResourceLimit(f"max_dim {max_dim} exceeds the limit {limit}")
    rep = SieveReport(space, min_dim, max_dim)
    for d in range(min_dim, max_dim + 1):
        cands = spherical_candidates(space, d)
        rep.dims.append(
            DimensionReport(d, len(enumerate_basis(space, d)), cands, square_candidates(space, d))
        )
    if space == Q0S0:
        rep.criterion_agree, rep.criterion_disagree = criterion_crosscheck(max_dim)
    return rep
