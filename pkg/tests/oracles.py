"""Independent reference computations used by the tests.

Nothing here calls into the enumeration or rewriting code under test; the
basis counts come from brute force over upper sequences and a partition
count, the binomials from math.comb and power series.
"""
from __future__ import annotations

import math
from functools import lru_cache


def binom_parity(a: int, b: int) -> int:
    """C(a, b) mod 2 with C(a, b) the coefficient of x^b in (1 + x)^a."""
    if b < 0:
        return 0
    if a >= 0:
        return math.comb(a, b) % 2
    return _negative_series(-a, b)[b]


@lru_cache(maxsize=None)
def _negative_series(k: int, upto: int) -> tuple:
    # (1 + x)^(-1) = 1 + x + x^2 + ... over F_2; raise it to the k-th power
    inv = [1] * (upto + 1)
    out = [1] + [0] * upto
    for _ in range(k):
        new = [0] * (upto + 1)
        for i, c in enumerate(out):
            if c:
                for j in range(upto + 1 - i):
                    new[i + j] ^= inv[j]
        out = new
    return tuple(out)


def rho_naive(m: int) -> int:
    i = 0
    while (m >> i) & 1:
        i += 1
    return i


def _sequences(base_dim: int, max_total: int, min_first: int = 0):
    """Upper sequences (outermost first) with each Q^a applied to a class of
    dimension <= a; total dimension base_dim + sum <= max_total."""
    out = []

    def grow(seq, d):
        out.append(seq)
        for a in range(max(d, min_first), max_total - d + 1):
            grow((a,) + seq, d + a)

    grow((), base_dim)
    return out


def _admissible(seq) -> bool:
    return all(seq[k] <= 2 * seq[k + 1] for k in range(len(seq) - 1))


def _excess(seq) -> float:
    return seq[0] - sum(seq[1:]) if seq else math.inf


def generator_dims(kind: str, max_dim: int, a: int = 0, b: int = 0) -> list[int]:
    """Dimensions of polynomial generators, by brute force over sequences."""
    dims = []
    if kind == "QS":
        n = a
        for seq in _sequences(n, max_dim):
            if _admissible(seq) and _excess(seq) > n:
                dims.append(n + sum(seq))
    elif kind == "Q0S0":
        for seq in _sequences(0, max_dim, min_first=1):
            if seq and _admissible(seq) and _excess(seq) > 0:
                dims.append(sum(seq))
    elif kind == "L":
        n = b - a
        for seq in _sequences(n, max_dim):
            if not (_admissible(seq) and _excess(seq) > n):
                continue
            d, ok = n, True
            for u in reversed(seq):
                if u - d > a - 1:
                    ok = False
                d += u
            if ok:
                dims.append(n + sum(seq))
    elif kind == "QP":
        m = a
        for j in range(m, max_dim - m + 1):
            for seq in _sequences(m + j, max_dim):
                if _admissible(seq) and _excess(seq) > m + j:
                    dims.append(m + j + sum(seq))
    return [d for d in dims if 1 <= d <= max_dim]


def poincare_counts(gen_dims: list[int], max_dim: int) -> list[int]:
    """Coefficients of prod 1/(1 - t^d) up to t^max_dim."""
    c = [1] + [0] * max_dim
    for d in gen_dims:
        for k in range(d, max_dim + 1):
            c[k] += c[k - d]
    return c
