"""Integer group-ring elements and their convolution product.

An element of Z[G] is a coefficient vector indexed by the group's canonical
element order; for S4 that means slots 0..11 hold a1..a12 and slots 12..23
hold b1..b12.  Elements can also be entered as noncommutative polynomial
expressions in the S4 generators x and y.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .groups import GroupTable, S4_ALPHA_INDEX, S4_BETA_INDEX

MAX_EXPONENT = 4096


@dataclass(frozen=True)
class RingElement:
    group: GroupTable
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.group.order:
            raise ValueError(
                f"coefficient vector has length {len(self.coeffs)}, "
                f"group order is {self.group.order}"
            )

    def __add__(self, other):
        self._check_group(other)
        return RingElement(self.group, tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._check_group(other)
        return RingElement(self.group, tuple(x - y for x, y in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return RingElement(self.group, tuple(-x for x in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return RingElement(self.group, tuple(other * x for x in self.coeffs))
        return convolve(self, other)

    __rmul__ = __mul__

    def _check_group(self, other):
        if self.group is not other.group and self.group != other.group:
            raise ValueError("ring elements belong to different groups")


def ring_element(group: GroupTable, coeffs) -> RingElement:
    return RingElement(group, tuple(int(c) for c in coeffs))


def identity_element(group: GroupTable) -> RingElement:
    c = [0] * group.order
    c[group.identity_index] = 1
    return RingElement(group, tuple(c))


def scalar_element(group: GroupTable, n: int) -> RingElement:
    c = [0] * group.order
    c[group.identity_index] = n
    return RingElement(group, tuple(c))


def basis_element(group: GroupTable, index: int) -> RingElement:
    c = [0] * group.order
    c[index] = 1
    return RingElement(group, tuple(c))


def convolve(a: RingElement, b: RingElement) -> RingElement:
    """Group-ring product: c_g = sum over u*v = g of a_u * b_v."""
    a._check_group(b)
    mul = a.group.mul
    out = [0] * a.group.order
    for u, au in enumerate(a.coeffs):
        if not au:
            continue
        row = mul[u]
        for v, bv in enumerate(b.coeffs):
            if bv:
                out[row[v]] += au * bv
    return RingElement(a.group, tuple(out))


def element_power(a: RingElement, e: int) -> RingElement:
    if e < 0:
        raise ValueError("negative exponents are not supported")
    if e > MAX_EXPONENT:
        raise ValueError(f"exponent overflow: {e} > {MAX_EXPONENT}")
    result = identity_element(a.group)
    base = a
    while e:
        if e & 1:
            result = convolve(result, base)
        base = convolve(base, base) if e > 1 else base
        e >>= 1
    return result


# ---------------------------------------------------------------------------
# expression parser
#
# grammar (standard precedence, ^ binds tightest, then *, then + and -;
# * and +,- associate left, ^ right; implicit multiplication is invalid):
#
#   expr   := term (('+' | '-') term)*
#   term   := factor ('*' factor)*
#   factor := atom ('^' integer)?
#   atom   := integer | 'x' | 'y' | '-' atom | '(' expr ')'


class ParseError(ValueError):
    """Syntax error in a ring expression, carrying the character offset."""

    def __init__(self, message, pos):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


_TOKEN = re.compile(r"\s*(?:(\d+)|([xy+\-*^()]))")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
                raise ParseError(f"unexpected character {text[bad]!r}", bad)
            break
        if m.group(1) is not None:
            tokens.append((int(m.group(1)), m.start(1)))
        else:
            tokens.append((m.group(2), m.start(2)))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, tokens, group, end):
        self.tokens = tokens
        self.group = group
        self.i = 0
        self.end = end

    def peek(self):
        return self.tokens[self.i][0] if self.i < len(self.tokens) else None

    def pos(self):
        return self.tokens[self.i][1] if self.i < len(self.tokens) else self.end

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expr(self):
        left = self.term()
        while self.peek() in ("+", "-"):
            op, _ = self.take()
            right = self.term()
            left = left + right if op == "+" else left - right
        return left

    def term(self):
        left = self.factor()
        while self.peek() == "*":
            self.take()
            left = convolve(left, self.factor())
        return left

    def factor(self):
        base = self.atom()
        if self.peek() == "^":
            self.take()
            tok = self.peek()
            if not isinstance(tok, int):
                raise ParseError("expected integer exponent after '^'", self.pos())
            exp, pos = self.take()
            if exp > MAX_EXPONENT:
                raise ParseError(f"exponent overflow: {exp} > {MAX_EXPONENT}", pos)
            return element_power(base, exp)
        return base

    def atom(self):
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of expression", self.pos())
        if tok == "-":
            self.take()
            return -self.atom()
        if isinstance(tok, int):
            self.take()
            return scalar_element(self.group, tok)
        if tok == "x":
            self.take()
            return basis_element(self.group, S4_ALPHA_INDEX)
        if tok == "y":
            self.take()
            return basis_element(self.group, S4_BETA_INDEX)
        if tok == "(":
            _, open_pos = self.take()
            inner = self.expr()
            if self.peek() != ")":
                raise ParseError("unbalanced parenthesis", open_pos)
            self.take()
            return inner
        raise ParseError(f"unexpected token {tok!r}", self.pos())


def parse_expr(text: str, group: GroupTable) -> RingElement:
    """Parse an integer polynomial in x, y into a reduced group-ring element."""
    if group.kind != "S4":
        raise ValueError("expressions in x, y are defined over the S4 table only")
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty expression", 0)
    parser = _Parser(tokens, group, len(text))
    result = parser.expr()
    if parser.i != len(tokens):
        raise ParseError(f"unexpected token {parser.peek()!r}", parser.pos())
    return result


# ---------------------------------------------------------------------------
# JSON / array input


def element_from_json(obj, group: GroupTable) -> RingElement:
    """Build an element from a flat coefficient list or an {"a":…, "b":…} object."""
    if isinstance(obj, list):
        return ring_element(group, obj)
    if isinstance(obj, dict):
        kind = obj.get("group", group.kind)
        if kind != group.kind:
            raise ValueError(f"element is for group {kind!r}, expected {group.kind!r}")
        if "coeffs" in obj:
            return ring_element(group, obj["coeffs"])
        if group.kind == "S4" and "a" in obj and "b" in obj:
            a, b = obj["a"], obj["b"]
            if len(a) != 12 or len(b) != 12:
                raise ValueError("S4 element needs 12 'a' and 12 'b' coefficients")
            return ring_element(group, list(a) + list(b))
        raise ValueError("element object needs 'coeffs' or S4-style 'a'/'b' arrays")
    raise ValueError(f"cannot build a ring element from {type(obj).__name__}")
