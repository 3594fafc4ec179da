"""Expression parser and canonical printer.

Grammar (whitespace-insensitive)::

    element := term ('+' term)*
    term    := factor+
    factor  := atom ('^' nat)?
    atom    := opseq? gen | '(' element ')' | '0' | '1'
    opseq   := 'Q[' nat (',' nat)* ']'      upper indices
             | 'q[' nat (',' nat)* ']'      lower indices, converted on parse
    gen     := 'x' nat | 'z' nat | 's' nat 'a' nat
"""
from __future__ import annotations

import json

from .algebra import (
    Element,
    GenMonomial,
    Generator,
    Space,
    gen_in_space,
    mono_in_space,
    sphere,
    stunted,
    zeta,
)
from .dlops import OutOfModel, convert_lower_to_upper, full_sequence, normal_form


class ParseError(ValueError):
    def __init__(self, msg: str, pos: int):
        super().__init__(f"{msg} at position {pos}")
        self.pos = pos


class ContextError(ValueError):
    pass


class _Parser:
    def __init__(self, text: str, space: Space | None):
        self.text = text
        self.pos = 0
        self.space = space

    def peek(self) -> str:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            found = self.peek() or "end of input"
            raise ParseError(f"expected {ch!r}, found {found!r}", self.pos)
        self.pos += 1

    def nat(self) -> int:
        self.peek()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise ParseError("expected a number", start)
        return int(self.text[start : self.pos])

    def element(self) -> Element:
        e = self.term()
        while self.peek() == "+":
            self.pos += 1
            e = e + self.term()
        return e

    def term(self) -> Element:
        e = self.factor()
        while self.peek() and self.peek() in "(Qqxzs01":
            e = e * self.factor()
        return e

    def factor(self) -> Element:
        e = self.atom()
        if self.peek() == "^":
            self.pos += 1
            e = e ** self.nat()
        return e

    def atom(self) -> Element:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            e = self.element()
            self.expect(")")
            return e
        if ch in ("0", "1"):
            self.pos += 1
            return Element((), self.space) if ch == "0" else Element.one(self.space)
        upper = lower = None
        if ch in ("Q", "q"):
            self.pos += 1
            self.expect("[")
            idx = [self.nat()]
            while self.peek() == ",":
                self.pos += 1
                idx.append(self.nat())
            self.expect("]")
            if ch == "Q":
                upper = tuple(idx)
            else:
                lower = tuple(idx)
        start = self.pos
        g = self.gen()
        self._check_gen(g, start)
        if lower is not None:
            if self.space is not None and self.space.kind == "L" and max(lower) > self.space.a - 1:
                raise OutOfModel(f"lower index {max(lower)} exceeds {self.space.a - 1} in {self.space}")
            return convert_lower_to_upper(lower, g).with_space(self.space)
        seq, base = full_sequence(upper or (), g)
        return Element(normal_form(seq, base), self.space)

    def gen(self) -> Generator:
        ch = self.peek()
        pos = self.pos
        if ch == "x":
            self.pos += 1
            n = self.nat()
            return _make(sphere, pos, n)
        if ch == "z":
            self.pos += 1
            return _make(zeta, pos, self.nat())
        if ch == "s":
            self.pos += 1
            m = self.nat()
            self.expect("a")
            return _make(stunted, pos, m, self.nat())
        raise ParseError(f"expected a generator, found {ch or 'end of input'!r}", pos)

    def _check_gen(self, g: Generator, pos: int):
        if self.space is None:
            return
        if not gen_in_space(GenMonomial((), g), self.space):
            raise ContextError(f"{g} (position {pos}) does not live in {self.space}")


def _make(ctor, pos, *args) -> Generator:
    try:
        return ctor(*args)
    except ValueError as exc:
        raise ParseError(str(exc), pos) from None


def parse_expr(text: str, space: Space | None = None) -> Element:
    """Parse text into a normalized element of the given space."""
    p = _Parser(text, space)
    e = p.element()
    if p.peek():
        raise ParseError(f"unexpected {p.peek()!r}", p.pos)
    if space is not None:
        for m in e.terms:
            if not mono_in_space(m, space):
                raise ContextError(f"{m} does not live in {space}")
    return e.with_space(space)


def _gen_json(g: Generator) -> dict:
    if g.kind == "x":
        return {"kind": "sphere", "n": g.n}
    if g.kind == "z":
        return {"kind": "zeta", "i": g.n}
    return {"kind": "stunted", "m": g.n, "j": g.j}


def element_json(e: Element, space: Space | None = None) -> dict:
    space = space if space is not None else e.space
    return {
        "space": None if space is None else str(space),
        "dim": e.dim,
        "monomials": [
            {"factors": [{"ops": list(g.ops), "gen": _gen_json(g.gen), "exp": k} for g, k in m.factors]}
            for m in e.monomials()
        ],
        "string": str(e),
    }


def format_element(e: Element, mode: str = "text", space: Space | None = None) -> str:
    if mode == "text":
        return str(e)
    if mode == "json":
        return json.dumps(element_json(e, space), ensure_ascii=False)
    raise ValueError(f"unknown format {mode!r}")
