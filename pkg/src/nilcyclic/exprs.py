"""Parsing of generator expressions in the tables' notation.

The grammar covers sums of products over the atoms u, v, w (ring
nilpotents), g (shorthand for x - 1), x, integer literals, and free
constants named c0, c1, ... or c'0, c'1, ... (an underscore before the
digits is accepted too).  Multiplication can be written with '*' or by
juxtaposition, and '^' (or '**') raises the preceding atom to a power:

    uvw*g^3        vw*g^2 + (c0 + c1*x)*uvw        uwg^2+2vwg^2+uvwg

Free constants must be bound to residues before evaluation; unbound names
raise UnboundConstantError listing them.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Mapping

from .gfpoly import FpPoly
from .rpoly import RPoly


class ParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class UnboundConstantError(ValueError):
    def __init__(self, names):
        names = tuple(names)
        super().__init__(
            "unbound constants: " + ", ".join(names)
            + " (bind them with --set name=value or sweep)"
        )
        self.names = names


_TOKEN_RE = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<const>c'?_?\d+)|(?P<sym>[uvwgx])"
    r"|(?P<pow>\^|\*\*)|(?P<op>[+\-*()]))"
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip() == "":
                break
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        for kind in ("num", "const", "sym", "pow", "op"):
            val = m.group(kind)
            if val is not None:
                if kind == "const":
                    val = val.replace("_", "")
                tokens.append((kind, val, m.start()))
                break
        pos = m.end()
    return tokens


# AST nodes are tuples: ("num", v) ("sym", s) ("const", name)
# ("add"|"sub"|"mul", lhs, rhs) ("pow", base, k) ("neg", e)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.k = 0

    def peek(self):
        return self.tokens[self.k] if self.k < len(self.tokens) else (None, None, len(self.text))

    def next(self):
        tok = self.peek()
        self.k += 1
        return tok

    def parse(self):
        node = self.expr()
        kind, val, pos = self.peek()
        if kind is not None:
            raise ParseError(f"trailing input {val!r}", pos)
        return node

    def expr(self):
        kind, _, _ = self.peek()
        negate = False
        if kind == "op" and self.peek()[1] in "+-":
            _, sign, _ = self.next()
            negate = sign == "-"
        node = self.term()
        if negate:
            node = ("neg", node)
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.next()
                rhs = self.term()
                node = ("add" if val == "+" else "sub", node, rhs)
            else:
                return node

    def term(self):
        node = self.factor()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "*":
                self.next()
                node = ("mul", node, self.factor())
            elif kind in ("num", "const", "sym") or (kind == "op" and val == "("):
                node = ("mul", node, self.factor())
            else:
                return node

    def factor(self):
        node = self.primary()
        kind, _, _ = self.peek()
        if kind == "pow":
            self.next()
            kind, val, pos = self.next()
            if kind != "num":
                raise ParseError("integer exponent expected after '^'", pos)
            node = ("pow", node, int(val))
        return node

    def primary(self):
        kind, val, pos = self.next()
        if kind == "num":
            return ("num", int(val))
        if kind == "const":
            return ("const", val)
        if kind == "sym":
            return ("sym", val)
        if kind == "op" and val == "(":
            node = self.expr()
            kind, val, pos = self.next()
            if not (kind == "op" and val == ")"):
                raise ParseError("')' expected", pos)
            return node
        raise ParseError("operand expected", pos)


def _collect_constants(node, out: set[str]):
    tag = node[0]
    if tag == "const":
        out.add(node[1])
    elif tag in ("add", "sub", "mul"):
        _collect_constants(node[1], out)
        _collect_constants(node[2], out)
    elif tag in ("pow", "neg"):
        _collect_constants(node[1], out)


def _const_sort_key(name: str) -> tuple[int, int]:
    primed = 1 if "'" in name else 0
    return (primed, int(name.lstrip("c'")))


@dataclass(frozen=True)
class GeneratorExpr:
    """A parsed generator expression, evaluable once constants are bound."""

    text: str
    ast: tuple

    @classmethod
    def parse(cls, text: str) -> "GeneratorExpr":
        return cls(text=text, ast=_Parser(text).parse())

    def constants(self) -> tuple[str, ...]:
        out: set[str] = set()
        _collect_constants(self.ast, out)
        return tuple(sorted(out, key=_const_sort_key))

    def evaluate(self, p: int, n: int, bindings: Mapping[str, int] | None = None) -> RPoly:
        bindings = dict(bindings or {})
        missing = [name for name in self.constants() if name not in bindings]
        if missing:
            raise UnboundConstantError(sorted(missing, key=_const_sort_key))
        for name, value in bindings.items():
            if not 0 <= value < p:
                raise ValueError(f"constant {name} = {value} out of range [0, {p})")

        x = RPoly.x(p, n)
        one = RPoly.one(p, n)
        g = x - one
        atoms = {
            "x": x,
            "g": g,
            "u": RPoly.from_component(p, n, 1, FpPoly.one(p)),
            "v": RPoly.from_component(p, n, 2, FpPoly.one(p)),
            "w": RPoly.from_component(p, n, 4, FpPoly.one(p)),
        }

        def walk(node) -> RPoly:
            tag = node[0]
            if tag == "num":
                return one * node[1]
            if tag == "const":
                return one * bindings[node[1]]
            if tag == "sym":
                return atoms[node[1]]
            if tag == "add":
                return walk(node[1]) + walk(node[2])
            if tag == "sub":
                return walk(node[1]) - walk(node[2])
            if tag == "mul":
                return walk(node[1]) * walk(node[2])
            if tag == "neg":
                return -walk(node[1])
            if tag == "pow":
                base = walk(node[1])
                k = node[2]
                if k < 0:
                    raise ValueError("negative exponents are not supported")
                out = one
                for _ in range(k):
                    out = out * base
                return out
            raise AssertionError(f"unknown node {tag}")

        return walk(self.ast)


def parse_generator(text: str, p: int, n: int,
                    bindings: Mapping[str, int] | None = None) -> RPoly:
    """Parse and evaluate a generator expression in R_n."""
    return GeneratorExpr.parse(text).evaluate(p, n, bindings)


def parse_poly(text: str, p: int) -> FpPoly:
    """Parse a plain F_p[x] polynomial (numbers and x only)."""
    ast = _Parser(text).parse()

    def walk(node) -> FpPoly:
        tag = node[0]
        if tag == "num":
            return FpPoly(p, (node[1],))
        if tag == "sym":
            if node[1] != "x":
                raise ValueError(f"symbol {node[1]!r} not allowed in a plain polynomial")
            return FpPoly.x(p)
        if tag == "const":
            raise ValueError("free constants not allowed in a plain polynomial")
        if tag == "add":
            return walk(node[1]) + walk(node[2])
        if tag == "sub":
            return walk(node[1]) - walk(node[2])
        if tag == "mul":
            return walk(node[1]) * walk(node[2])
        if tag == "neg":
            return -walk(node[1])
        if tag == "pow":
            base = walk(node[1])
            out = FpPoly.one(p)
            for _ in range(node[2]):
                out = out * base
            return out
        raise AssertionError(f"unknown node {tag}")

    return walk(ast)
