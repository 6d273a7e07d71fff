"""Reading and writing group-ring elements as text.

Two forms are accepted.  Expressions use integers, ``x``, ``y``, ``+ - * ^``
and parentheses (juxtaposition such as ``2x`` also multiplies); products are
taken in the group ring, so ``x*y`` becomes ``y*x^-1`` automatically.  The raw
form lists coefficients, ``a0,a1,...`` for a cyclic group and
``a0,a1,...;b0,b1,...`` otherwise; either side of the ``;`` may instead be a
sparse polynomial in x such as ``1 - 3*x^4``.  Exponents and coefficient lists may run
past N; everything is reduced mod x^N - 1.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .groupring import GroupSpec, GroupWord, RingElement

__all__ = ["ParseError", "parse_element", "format_element", "format_raw", "MAX_EXPONENT", "MAX_POWER"]

# largest exponent literal on x or y; it is reduced mod the group order anyway
MAX_EXPONENT = 10**18
# largest exponent on a compound base, whose coefficients grow with the power
MAX_POWER = 4096

_TOKEN = re.compile(r"\s*(?:(\d+)|([xy])|(.))")


class ParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at offset {pos}")
        self.message = message
        self.pos = pos


@dataclass
class _Tok:
    kind: str  # int, var, op, end
    text: str
    pos: int


def _tokenize(text: str) -> list[_Tok]:
    out, i = [], 0
    while i < len(text):
        if text[i].isspace():
            i += 1
            continue
        m = _TOKEN.match(text, i)
        num, var, op = m.groups()
        start = m.start(1) if num else m.start(2) if var else m.start(3)
        if num:
            out.append(_Tok("int", num, start))
        elif var:
            out.append(_Tok("var", var, start))
        elif op in "+-*^()":
            out.append(_Tok("op", op, start))
        else:
            raise ParseError(f"unexpected character {op!r}", start)
        i = m.end()
    out.append(_Tok("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, G: GroupSpec, text: str):
        self.G = G
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self) -> _Tok:
        return self.toks[self.i]

    def take(self) -> _Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def parse(self) -> RingElement:
        if self.peek().kind == "end":
            raise ParseError("empty expression", 0)
        v = self.expr()
        t = self.peek()
        if t.kind != "end":
            raise ParseError(f"unexpected {t.text!r}", t.pos)
        return v

    def expr(self) -> RingElement:
        v = self.term()
        while self.peek().text in ("+", "-") and self.peek().kind == "op":
            op = self.take().text
            rhs = self.term()
            v = v + rhs if op == "+" else v - rhs
        return v

    def _starts_factor(self, t: _Tok) -> bool:
        return t.kind in ("int", "var") or (t.kind == "op" and t.text == "(")

    def term(self) -> RingElement:
        v = self.unary()
        while True:
            t = self.peek()
            if t.kind == "op" and t.text == "*":
                self.take()
                v = v * self.unary()
            elif self._starts_factor(t):
                v = v * self.power()
            else:
                return v

    def unary(self) -> RingElement:
        t = self.peek()
        if t.kind == "op" and t.text in ("+", "-"):
            self.take()
            v = self.unary()
            return -v if t.text == "-" else v
        return self.power()

    def power(self) -> RingElement:
        start = self.peek()
        base = self.atom()
        t = self.peek()
        if not (t.kind == "op" and t.text == "^"):
            return base
        self.take()
        e = self.peek()
        neg = False
        if e.kind == "op" and e.text == "-" and start.kind == "var":
            self.take()
            neg, e = True, self.peek()
        if e.kind != "int":
            raise ParseError("exponent must be a non-negative integer", t.pos)
        self.take()
        k = int(e.text)
        if k > MAX_EXPONENT:
            raise ParseError(f"exponent overflow (limit {MAX_EXPONENT})", e.pos)
        if start.kind == "var":
            return self._word(start, -k if neg else k)
        if k > MAX_POWER:
            raise ParseError(f"exponent overflow on a compound base (limit {MAX_POWER})", e.pos)
        return base**k

    def _word(self, tok: _Tok, k: int) -> RingElement:
        G = self.G
        if tok.text == "x":
            return RingElement.word(G, GroupWord(0, k % G.x_modulus))
        if not G.has_y:
            raise ParseError(f"{G} has no y", tok.pos)
        y = RingElement.word(G, GroupWord(1, 0))
        # y has order 2 (dihedral) or 4 (dicyclic)
        return y ** (k % (2 if G.family.value == "dihedral" else 4))

    def atom(self) -> RingElement:
        t = self.take()
        if t.kind == "int":
            return RingElement.identity(self.G) * int(t.text)
        if t.kind == "var":
            return self._word(t, 1)
        if t.kind == "op" and t.text == "(":
            v = self.expr()
            close = self.take()
            if not (close.kind == "op" and close.text == ")"):
                raise ParseError("expected ')'", close.pos)
            return v
        if t.kind == "end":
            raise ParseError("unexpected end of input", t.pos)
        raise ParseError(f"unexpected {t.text!r}", t.pos)


def _parse_list(part: str, offset: int) -> list[int]:
    vec, pos = [], offset
    for item in part.split(","):
        s = item.strip()
        if not re.fullmatch(r"[+-]?\d+", s):
            raise ParseError(f"bad coefficient {s!r}", pos + len(item) - len(item.lstrip()))
        vec.append(int(s))
        pos += len(item) + 1
    return vec


def _parse_x_poly(G: GroupSpec, part: str, offset: int) -> list[int]:
    try:
        a = _Parser(G, part).parse()
    except ParseError as exc:
        raise ParseError(exc.message, exc.pos + offset) from None
    if a.g is not None and not a.g.is_zero():
        raise ParseError("y is not allowed inside a ';' part", offset)
    return list(a.f.coeffs)


def _parse_raw(G: GroupSpec, text: str) -> RingElement:
    parts = text.split(";")
    want = 2 if G.has_y else 1
    if len(parts) != want:
        raise ParseError(f"{G} takes {want} coefficient list(s), got {len(parts)}", 0)
    vecs, offset = [], 0
    for part in parts:
        # a part is either a coefficient list or a sparse polynomial in x
        if "," in part or re.fullmatch(r"\s*[+-]?\d+\s*", part):
            vecs.append(_parse_list(part, offset))
        else:
            vecs.append(_parse_x_poly(G, part, offset))
        offset += len(part) + 1
    return RingElement.from_coeffs(G, vecs[0], vecs[1] if G.has_y else ())


def parse_element(G: GroupSpec, text: str) -> RingElement:
    """Parse an expression or raw coefficient list into an element of Z[G]."""
    if "," in text or ";" in text:
        return _parse_raw(G, text)
    return _Parser(G, text).parse()


def _poly_text(coeffs: tuple[int, ...]) -> str:
    out = []
    for i, c in enumerate(coeffs):
        if not c:
            continue
        mono = "" if i == 0 else "x" if i == 1 else f"x^{i}"
        mag = abs(c)
        body = str(mag) if not mono else mono if mag == 1 else f"{mag}*{mono}"
        out.append(("-" if c < 0 else "+", body))
    if not out:
        return "0"
    first = ("-" if out[0][0] == "-" else "") + out[0][1]
    return " ".join([first] + [f"{s} {b}" for s, b in out[1:]])


def format_element(a: RingElement) -> str:
    """Canonical expression ``f(x) + y*(g(x))``; parses back to ``a``."""
    f = _poly_text(a.f.coeffs)
    if a.g is None or a.g.is_zero():
        return f
    g = f"y*({_poly_text(a.g.coeffs)})"
    return g if a.f.is_zero() else f"{f} + {g}"


def format_raw(a: RingElement) -> str:
    f = ",".join(map(str, a.f.coeffs))
    return f if a.g is None else f + ";" + ",".join(map(str, a.g.coeffs))
