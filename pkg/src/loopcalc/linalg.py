"""Linear algebra over F_2 with Python ints as bit vectors.

Bit k of a vector is the coefficient of basis item k.  Reduced forms use the
lowest set bit as pivot, so a subspace has exactly one reduced basis and
results do not depend on elimination order.
"""
from __future__ import annotations

from typing import Hashable, Iterable, Sequence

from .algebra import Element, Monomial


def _low(v: int) -> int:
    return (v & -v).bit_length() - 1


def rref(vectors: Iterable[int]) -> list[int]:
    """Reduced echelon basis of the span, sorted by pivot (lowest bit)."""
    pivots: dict[int, int] = {}
    for v in vectors:
        while v:
            row = pivots.get(_low(v))
            if row is None:
                break
            v ^= row
        if v:
            pivots[_low(v)] = v
    mask = 0
    for p in pivots:
        mask |= 1 << p
    # back-substitute from the highest pivot down; each finished row carries
    # no pivot bit but its own, so one pass per row suffices
    for p in sorted(pivots, reverse=True):
        row = pivots[p]
        others = row & mask & ~(1 << p)
        while others:
            q = _low(others)
            row ^= pivots[q]
            others &= others - 1
        pivots[p] = row
    return [pivots[p] for p in sorted(pivots)]


def kernel(images: Sequence[int]) -> list[int]:
    """Kernel of the map sending basis vector k to images[k]."""
    rows: dict[int, tuple[int, int]] = {}  # pivot of image -> (image, source)
    null = []
    for k, img in enumerate(images):
        src = 1 << k
        while img:
            hit = rows.get(_low(img))
            if hit is None:
                break
            img ^= hit[0]
            src ^= hit[1]
        if img:
            rows[_low(img)] = (img, src)
        else:
            null.append(src)
    return rref(null)


def intersect(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Intersection of two subspaces given by spanning sets."""
    a, b = rref(a), rref(b)
    # x in span(a) with x in span(b): kernel of [a | b] restricted to a-part
    combined = list(a) + list(b)
    width = len(a)
    out = []
    for coeffs in kernel(combined):
        v = 0
        for k in range(width):
            if coeffs >> k & 1:
                v ^= a[k]
        out.append(v)
    return rref(out)


def in_span(v: int, basis: Sequence[int]) -> bool:
    red = rref(basis)
    for row in red:
        if v >> _low(row) & 1:
            v ^= row
    return v == 0


class Coordinates:
    """Assigns bit positions to hashable keys on first sight."""

    def __init__(self, keys: Iterable[Hashable] = ()):
        self.index: dict = {}
        for k in keys:
            self.index.setdefault(k, len(self.index))

    def vector(self, keys: Iterable[Hashable]) -> int:
        on: set[int] = set()
        for k in keys:
            on ^= {self.index.setdefault(k, len(self.index))}
        return from_indices(on)


def from_indices(indices: Iterable[int]) -> int:
    """Bit vector with exactly the given bits set (no repeats expected)."""
    indices = list(indices)
    if not indices:
        return 0
    buf = bytearray(max(indices) // 8 + 1)
    for k in indices:
        buf[k >> 3] |= 1 << (k & 7)
    return int.from_bytes(buf, "little")


def set_bits(v: int) -> list[int]:
    return [k for k, c in enumerate(reversed(bin(v)[2:])) if c == "1"]


def to_vector(e: Element, basis: Sequence[Monomial]) -> int:
    pos = {m: k for k, m in enumerate(basis)}
    missing = [m for m in e.terms if m not in pos]
    if missing:
        raise ValueError(f"{missing[0]} is not in the given basis")
    return from_indices(pos[m] for m in e.terms)


def from_vector(v: int, basis: Sequence[Monomial], space=None) -> Element:
    return Element(frozenset(basis[k] for k in set_bits(v)), space)


def solve_f2(maps: Sequence[Sequence], basis: Sequence[Monomial], space=None) -> list[Element]:
    """Basis of the intersection of the kernels of several linear maps.

    ``maps[i][k]`` is the image of ``basis[k]`` under map i (an Element, a
    TensorElement, or anything exposing ``.terms``).
    """
    coords = Coordinates()
    images = [0] * len(basis)
    for i, images_i in enumerate(maps):
        if len(images_i) != len(basis):
            raise ValueError(f"map {i} has {len(images_i)} images for a basis of size {len(basis)}")
        for k, img in enumerate(images_i):
            images[k] ^= coords.vector([(i, t) for t in img.terms])
    return [from_vector(v, basis, space) for v in kernel(images)]
