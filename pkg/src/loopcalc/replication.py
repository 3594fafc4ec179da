"""Catalog of published homology identities, each rerun against the engine.

A case yields (label, computed, expected) triples; it passes when every
computed value equals its expected value.  ``kind`` is "published" for an
identity displayed in the source argument and "derived" for bookkeeping
checks computed independently here.
"""
from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

from .algebra import (
    POINT,
    Element,
    GenMonomial,
    LoopSphere,
    Q0S0,
    QSphere,
    QStunted,
    enumerate_basis,
    generators,
    sphere,
    stunted,
)
from .arith import is_power_of_two, rho
from .dlops import adem_normalize, apply_ops, convert_lower_to_upper, normal_form
from .hopf import is_primitive
from .maps import j2_project, stabilize, suspend
from .sieve import square_root_filter, wellington_check
from .steenrod import annihilated_by_all_sq, sq_down

Check = tuple  # (label, computed, expected)


class UnknownCase(KeyError):
    pass


@dataclass(frozen=True)
class ReplicationCase:
    case_id: str
    identity: str
    kind: str
    checks: Callable[[], Iterable[Check]]
    note: str = ""


@dataclass
class CaseResult:
    case_id: str
    identity: str
    kind: str
    passed: bool
    n_checks: int
    failures: list = field(default_factory=list)
    seconds: float = 0.0
    note: str = ""

    def as_dict(self) -> dict:
        return {
            "case": self.case_id,
            "passed": self.passed,
            "checks": self.n_checks,
            "failures": self.failures,
            "identity": self.identity,
            "kind": self.kind,
            "note": self.note,
        }


def _x(n: int) -> Element:
    return Element.of(GenMonomial((), sphere(n)))


def _q(ops, n: int) -> Element:
    return adem_normalize(tuple(ops), sphere(n))


def _chain(n: int, t: int) -> tuple:
    # (2^(t-1) n, ..., 2n, n)
    return tuple(2 ** k * n for k in reversed(range(t)))


# -- cases ---------------------------------------------------------------------


def _rho_values() -> Iterator[Check]:
    for m, r in [(0, 0), (1, 1), (2, 0), (3, 2), (5, 1), (7, 3), (13, 1)]:
        yield f"rho({m})", rho(m), r


def _tripleloop3_rho() -> Iterator[Check]:
    for t in (3, 4, 5):
        n = 2 ** t - 3
        yield f"t={t} rho(4n+5)", rho(4 * n + 5), 1
        yield f"t={t} rho(2n+3)", rho(2 * n + 3), 1


def _singleloop_chain() -> Iterator[Check]:
    for n in range(1, 11):
        for t in range(1, 4):
            yield f"n={n} t={t}", apply_ops(_chain(n, t), _x(n)), _x(n) ** (2 ** t)


def _singleloop_sq1() -> Iterator[Check]:
    for n in range(2, 11):
        for t in (2, 3):
            top = _q(_chain(n, t), n - 1)
            inner = _q(_chain(n, t - 1), n - 1)
            yield f"n={n} t={t}", sq_down(1, top), inner * inner
            yield f"n={n} t={t} nonzero", bool(inner), True


def _sq1_special() -> Iterator[Check]:
    spaces = [QSphere(1), QSphere(2), QSphere(3), QSphere(4), Q0S0]
    for space in spaces:
        for g in generators(space, 30):
            seq, base = g.full()
            if not seq:
                continue
            a = seq[0]
            expected = Element(normal_form((a - 1,) + seq[1:], base)) if a % 2 == 0 else Element()
            yield f"{space} {g}", sq_down(1, Element.of(g)), expected


def _doubleloop1_conversion() -> Iterator[Check]:
    for n in range(7, 13):
        for t in (1, 2, 3):
            expected = _q(_chain(n + 1, t), n)
            yield f"n={n} Q_1^{t}", convert_lower_to_upper((1,) * t, sphere(n)), expected


def _doubleloop1_sq2_odd() -> Iterator[Check]:
    for n in range(7, 16, 2):
        xi = _q((n + 1,), n)
        yield f"n={n}", sq_down(2, xi * xi), _x(n) ** 4


def _doubleloop1_sq2_length() -> Iterator[Check]:
    for n in range(7, 13):
        for s in (2, 3):
            xi = convert_lower_to_upper((1,) * s, sphere(n))
            shorter = convert_lower_to_upper((1,) * (s - 1), sphere(n))
            yield f"n={n} s={s}", sq_down(2, xi * xi), shorter ** 4


def _doubleloop2_j2() -> Iterator[Check]:
    for n in range(7, 13):
        bottom = Element.of(GenMonomial((), stunted(n + 1, n + 1)))
        img = j2_project(_q((n + 1,), n + 1), QSphere(n + 1), mode="exact")
        yield f"n={n} (j2) Q^(n+1) x_(n+1)", (img.element, img.exact), (bottom, True)
        xi = _q((n + 1,), n)
        img = j2_project(xi * xi, QSphere(n), mode="exact")
        a = Element.of(GenMonomial((), stunted(n, n + 1)))
        yield f"n={n} (Omega j2)(Q^(n+1) x_n)^2", (img.element, img.exact), (a * a, True)


def _tripleloop1_conversion() -> Iterator[Check]:
    for n in range(6, 13):
        yield f"n={n} Q_1Q_2", convert_lower_to_upper((1, 2), sphere(n)), _q((2 * n + 3, n + 2), n)
        for s in range(0, 3):
            for t in range(1, 3):
                twos = _chain(n + 2, t)
                d = 2 ** t * (n + 2) - 2
                ones = tuple(2 ** k * (d + 1) for k in reversed(range(s)))
                J = (1,) * s + (2,) * t
                yield f"n={n} J={J}", convert_lower_to_upper(J, sphere(n)), _q(ones + twos, n)


def _tripleloop1_cases() -> Iterator[Check]:
    allowed = {(1,), (1, 2)}
    for n in range(6, 14):
        survivors = set()
        for length in (1, 2, 3):
            for J in itertools.combinations_with_replacement((1, 2), length):
                xi = convert_lower_to_upper(J, sphere(n))
                if xi.dim % 2 == 0:
                    continue
                s = J.count(1)
                if s >= 2:
                    yield f"n={n} J={J} Sq^1 nonzero", bool(sq_down(1, xi)), True
                if annihilated_by_all_sq(xi * xi):
                    survivors.add(J)
        yield f"n={n} surviving squares within forms (i)/(ii)", survivors <= allowed, True


def _tripleloop5_sq2() -> Iterator[Check]:
    for n in range(6, 17, 2):
        xi = _q((2 * n + 3, n + 2), n)
        yield f"n={n}", sq_down(2, xi), _q((2 * n + 2, n + 1), n)


def _tripleloop5_sq4() -> Iterator[Check]:
    for n in range(6, 17, 2):
        xi = _q((2 * n + 3, n + 2), n)
        target = _q((2 * n + 2, n + 1), n)
        yield f"n={n}", sq_down(4, xi * xi), target * target
        yield f"n={n} nonzero", bool(target * target), True


def _tripleloop3_square() -> Iterator[Check]:
    for t in (3, 4, 5):
        n = 2 ** t - 3
        inner = _q((2 ** (t + 1) - 3, 2 ** t - 1), n)
        yield f"t={t}", _q((2 ** (t + 2) - 7, 2 ** (t + 1) - 3, 2 ** t - 1), n), inner * inner


def _tripleloop3_claim2() -> Iterator[Check]:
    for t in (3, 4, 5):
        m = 2 ** t - 5
        top = _q((2 ** (t + 2) - 7, 2 ** (t + 1) - 3, 2 ** t - 1), m)
        inner = _q((2 ** (t + 1) - 3, 2 ** t - 1), m)
        yield f"t={t} Sq^2", sq_down(2, top), inner * inner


def _tripleloop3_sq1_preimages() -> Iterator[Check]:
    # P^2 shares the dimension of h, so P sits one above the inner class
    for t in (3, 4, 5):
        m = 2 ** t - 5
        inner = _q((2 ** (t + 1) - 3, 2 ** t - 1), m)
        hits = []
        for mono_ in enumerate_basis(QSphere(m), inner.dim + 1):
            if len(mono_.factors) == 1 and mono_.factors[0][1] == 1 and len(mono_.factors[0][0].ops) == 2:
                if sq_down(1, Element(frozenset([mono_]))) == inner:
                    hits.append(Element(frozenset([mono_])))
        yield f"t={t}", hits, [_q((2 ** (t + 1) - 2, 2 ** t - 1), m)]


def _tripleloop3_leading() -> Iterator[Check]:
    for n in range(6, 24):
        r = rho(n + 2)
        if n + 2 - 2 ** r < 1:
            continue  # n + 2 = 2^t - 1, handled by the second claim
        e = Element(normal_form((4 * n + 5, 2 * n + 3), stunted(1, n + 2)), QStunted(1))
        lead = Element(normal_form((4 * n + 5 - 2 ** (r + 1), 2 * n + 3 - 2 ** r), stunted(1, n + 2 - 2 ** r)))
        out = sq_down(2 ** (r + 2), e)
        yield f"n={n} rho={r}", lead.terms <= out.terms and len(lead) == 1, True
    for n in (7, 9, 11):
        img = j2_project(_q((4 * n + 5, 2 * n + 3, n + 2), 1), QSphere(1))
        lead = Element(normal_form((4 * n + 5, 2 * n + 3), stunted(1, n + 2)))
        yield f"n={n} j2 leading term", (lead.terms <= img.element.terms, img.exact), (True, False)


def _zeta_suspension() -> Iterator[Check]:
    for g in generators(Q0S0, 20):
        if g.gen.kind != "z":
            continue
        seq = g.ops + (g.gen.n,)
        got, target = suspend(Element.of(g, space=Q0S0), Q0S0)
        yield f"sigma {g}", (got, target), (apply_ops(seq, _x(1)), QSphere(1))


def _stabilize_injective() -> Iterator[Check]:
    for a in (1, 2, 3):
        for b in range(a + 1, 10):
            space = LoopSphere(a, b)
            for d in range(1, 21):
                basis = enumerate_basis(space, d)
                images = [stabilize(Element(frozenset([m]), space), space) for m in basis]
                target = set(enumerate_basis(QSphere(b - a), d))
                ok = len(set(images)) == len(images) and all(next(iter(i.terms)) in target for i in images)
                yield f"{space} dim {d}", ok, True


def _parity_filter() -> Iterator[Check]:
    xi = _q((9,), 8)
    yield "(Q^9 x8)^2 kept", square_root_filter([xi * xi]), [xi * xi]
    yield "x8^2 dropped", square_root_filter([_x(8) ** 2]), []
    yield "x7 dropped", square_root_filter([_x(7)]), []
    d = _x(3) * _q((4,), 3)
    yield "(x3 Q^4 x3)^2 dropped (root not primitive)", square_root_filter([d * d]), []


def _primitives() -> Iterator[Check]:
    for n in range(1, 5):
        for i in range(1, 17):
            yield f"x{n}^{i} primitive", is_primitive(_x(n) ** i), is_power_of_two(i)
        for a in range(n, n + 12):
            yield f"Q^{a} x{n} primitive", is_primitive(_q((a,), n)), True


def _wellington_examples() -> Iterator[Check]:
    for I, i in [((3,), 1), ((2,), 1), ((6, 3), 2), ((37, 19), 10), ((9, 5), 3)]:
        direct = annihilated_by_all_sq(Element(normal_form(I + (i,), POINT)))
        yield f"Q^{I} z{i}", wellington_check(I, i), direct


CATALOG: tuple[ReplicationCase, ...] = (
    ReplicationCase("rho-values", "rho(m) = index of the lowest zero bit of m", "derived", _rho_values),
    ReplicationCase("tripleloop3-rho", "rho(4n+5) = rho(2n+3) = 1 for n = 2^t - 3", "published", _tripleloop3_rho),
    ReplicationCase("singleloop-chain", "x_n^(2^t) = Q^(2^(t-1) n) ... Q^(2n) Q^n x_n", "published", _singleloop_chain),
    ReplicationCase(
        "singleloop-sq1",
        "Sq^1 Q^(2^(t-1) n) ... Q^n x_(n-1) = (Q^(2^(t-2) n) ... Q^n x_(n-1))^2 != 0",
        "published",
        _singleloop_sq1,
    ),
    ReplicationCase("sq1-special", "Sq^1 Q^(2d) = Q^(2d-1), Sq^1 Q^(2t+1) = 0", "published", _sq1_special),
    ReplicationCase(
        "doubleloop1-conversion", "Q_1 ... Q_1 x_n = Q^(2^(t-1)(n+1)) ... Q^(n+1) x_n", "published", _doubleloop1_conversion
    ),
    ReplicationCase("doubleloop1-sq2-odd", "Sq^2 (Q^(n+1) x_n)^2 = (Q^n x_n)^2 = x_n^4, n odd", "published", _doubleloop1_sq2_odd),
    ReplicationCase(
        "doubleloop1-sq2-length", "Sq^2 (Q_1^s x_n)^2 = (Q_1^(s-1) x_n)^4 for s >= 2", "published", _doubleloop1_sq2_length
    ),
    ReplicationCase(
        "doubleloop2-j2",
        "(j2) Q^(n+1) x_(n+1) = s(n+1)a(n+1); (Omega j2)(Q^(n+1) x_n)^2 = (s(n)a(n+1))^2",
        "published",
        _doubleloop2_j2,
    ),
    ReplicationCase(
        "tripleloop1-conversion",
        "Q_1 Q_2 x_n = Q^(2n+3) Q^(n+2) x_n; Q_J for J = (1^s, 2^t)",
        "published",
        _tripleloop1_conversion,
        note="the displayed 2-part reads Q^(2(n+1)); the computed conversion doubles n+2, i.e. Q^(2(n+2))",
    ),
    ReplicationCase(
        "tripleloop1-cases",
        "odd-dimensional Q_J x_n with xi^2 killed by all Sq are of forms (i) or (ii)",
        "published",
        _tripleloop1_cases,
        note="checked as the conclusion; Sq^(2^(s+2)) is not always the first nonzero operation (J = (1,2,2) uses Sq^2)",
    ),
    ReplicationCase("tripleloop5-sq2", "Sq^2 Q^(2n+3) Q^(n+2) x_n = Q^(2n+2) Q^(n+1) x_n, n even", "published", _tripleloop5_sq2),
    ReplicationCase(
        "tripleloop5-sq4",
        "Sq^4 (Q^(2n+3) Q^(n+2) x_n)^2 = (Q^(2n+2) Q^(n+1) x_n)^2 != 0, n even",
        "published",
        _tripleloop5_sq4,
    ),
    ReplicationCase(
        "tripleloop3-square",
        "Q^(2^(t+2)-7) Q^(2^(t+1)-3) Q^(2^t-1) x_(2^t-3) = (Q^(2^(t+1)-3) Q^(2^t-1) x_(2^t-3))^2",
        "published",
        _tripleloop3_square,
    ),
    ReplicationCase(
        "tripleloop3-claim2",
        "Sq^2 Q^(2^(t+2)-7) Q^(2^(t+1)-3) Q^(2^t-1) x_(2^t-5) = (Q^(2^(t+1)-3) Q^(2^t-1) x_(2^t-5))^2",
        "published",
        _tripleloop3_claim2,
    ),
    ReplicationCase(
        "tripleloop3-sq1-preimages",
        "length-two Q^L x_(2^t-5) one dimension above Q^(2^(t+1)-3) Q^(2^t-1) x_(2^t-5) with Sq^1 onto it",
        "derived",
        _tripleloop3_sq1_preimages,
        note="Q^(2^(t+1)-2) Q^(2^t-1) x_(2^t-5) maps onto the inner class under Sq^1",
    ),
    ReplicationCase(
        "tripleloop3-leading",
        "Sq^(2^(rho+2)) Q^(4n+5) Q^(2n+3) s1a(n+2) contains Q^(4n+5-2^(rho+1)) Q^(2n+3-2^rho) s1a(n+2-2^rho)",
        "published",
        _tripleloop3_leading,
    ),
    ReplicationCase("zeta-susp", "sigma Q^I z_i = Q^I Q^i x_1", "published", _zeta_suspension),
    ReplicationCase(
        "stabilize-injective", "Omega^a S^b -> QS^(b-a) is injective in homology", "published", _stabilize_injective
    ),
    ReplicationCase("parity-filter", "h(f) = xi^2 forces xi primitive of odd dimension", "published", _parity_filter),
    ReplicationCase(
        "primitives", "x^i is primitive iff i is a power of 2; Q^a of a primitive is primitive", "published", _primitives
    ),
    ReplicationCase("wellington-examples", "closed-form annihilation test agrees with Nishida sweeps", "derived", _wellington_examples),
)

CASES = {c.case_id: c for c in CATALOG}


def run_case(case: ReplicationCase) -> CaseResult:
    start = time.perf_counter()
    n = 0
    failures = []
    try:
        for label, got, expected in case.checks():
            n += 1
            if got != expected:
                failures.append({"check": label, "got": _show(got), "expected": _show(expected)})
    except Exception as exc:  # a crash is a failed case, not a crashed runner
        failures.append({"check": "exception", "got": f"{type(exc).__name__}: {exc}", "expected": "no error"})
    return CaseResult(
        case.case_id, case.identity, case.kind, not failures, n, failures, time.perf_counter() - start, case.note
    )


def _show(v) -> str:
    if isinstance(v, tuple):
        return "(" + ", ".join(_show(x) for x in v) + ")"
    if isinstance(v, list):
        return "[" + ", ".join(_show(x) for x in v) + "]"
    return str(v)


def run_replication(case_ids: Iterable[str] | None = None) -> list[CaseResult]:
    """Run the selected cases (all when case_ids is None), sorted by case id."""
    if case_ids is None:
        selected = list(CATALOG)
    else:
        ids = list(case_ids)
        unknown = [c for c in ids if c not in CASES]
        if unknown:
            raise UnknownCase(", ".join(unknown))
        selected = [CASES[c] for c in ids]
    return [run_case(c) for c in sorted(selected, key=lambda c: c.case_id)]
