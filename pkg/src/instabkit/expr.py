"""A small expression language for characters.

Grammar::

    expr   := "std" | "adj" | "triv"
            | "irrep" "[" int ("," int)* "]"
            | "ext" "(" int "," expr ")"
            | "sym" "(" int "," expr ")"
            | "tensor" "(" expr "," expr ")"
            | "box" "(" barg "," barg ")"
    barg   := expr ["@" TYPE]

``box`` builds the external tensor product on a product group; each operand
is evaluated on the type after ``@`` (or the enclosing type when omitted).
A string starting with ``{`` is read as a serialized character instead.
"""

from __future__ import annotations

import json
import re

from .characters import (
    Character,
    adjoint_character,
    exterior_char,
    external_tensor,
    irreducible_character,
    standard_character,
    sym_char,
    tensor_char,
    trivial_character,
)
from .roots import RootSystem, parse_type
from .serialize import character_from_json
from .validation import ValidationError

_TOKEN = re.compile(r"\s*(?:(-?\d+(?:/\d+)?)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


def _tokenize(text: str) -> list[str]:
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        tok = m.group(1) or m.group(2) or m.group(3)
        if tok is None:
            break
        tokens.append(tok)
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def error(self, msg: str) -> ValidationError:
        return ValidationError(f"{msg} in character expression {self.text!r}", "char_expression")

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self, expected: str | None = None) -> str:
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            raise self.error(f"expected {expected or 'a token'}, got {tok!r}")
        self.i += 1
        return tok

    def integer(self) -> int:
        tok = self.take()
        try:
            return int(tok)
        except ValueError:
            raise self.error(f"expected an integer, got {tok!r}") from None

    def expr(self, rs: RootSystem | None) -> Character:
        name = self.take()
        if name in ("std", "adj", "triv", "irrep") and rs is None:
            raise self.error(f"{name!r} needs a root system type")
        if name == "std":
            return standard_character(rs)
        if name == "adj":
            return adjoint_character(rs)
        if name == "triv":
            return trivial_character(rs)
        if name == "irrep":
            self.take("[")
            labels = [self.integer()]
            while self.peek() == ",":
                self.take(",")
                labels.append(self.integer())
            self.take("]")
            return irreducible_character(rs, rs.weight(labels))
        if name in ("ext", "sym"):
            self.take("(")
            k = self.integer()
            self.take(",")
            inner = self.expr(rs)
            self.take(")")
            return exterior_char(inner, k) if name == "ext" else sym_char(inner, k)
        if name == "tensor":
            self.take("(")
            a = self.expr(rs)
            self.take(",")
            b = self.expr(rs)
            self.take(")")
            return tensor_char(a, b)
        if name == "box":
            self.take("(")
            a = self.box_arg(rs)
            self.take(",")
            b = self.box_arg(rs)
            self.take(")")
            return external_tensor(a, b)
        raise self.error(f"unknown constructor {name!r}")

    def box_arg(self, rs: RootSystem | None) -> Character:
        start = self.i
        # Look ahead for "@TYPE" at this nesting level to pick the operand's type.
        depth = 0
        j = start
        target = rs
        while j < len(self.tokens):
            t = self.tokens[j]
            if t in "([":
                depth += 1
            elif t in ")]":
                if depth == 0:
                    break
                depth -= 1
            elif t == "," and depth == 0:
                break
            elif t == "@" and depth == 0:
                target = parse_type(self.tokens[j + 1]) if j + 1 < len(self.tokens) else None
                if target is None:
                    raise self.error("missing type after '@'")
                break
            j += 1
        c = self.expr(target)
        if self.peek() == "@":
            self.take("@")
            self.take()
        return c


def parse_character(text: str, rs: RootSystem | None = None) -> Character:
    """Evaluate a character expression (or a JSON character) over ``rs``."""
    text = text.strip()
    if text.startswith("{"):
        try:
            return character_from_json(json.loads(text), rs)
        except json.JSONDecodeError as exc:
            raise ValidationError(f"invalid JSON character: {exc}", "char_expression") from exc
    p = _Parser(text)
    c = p.expr(rs)
    if p.peek() is not None:
        raise p.error(f"unexpected trailing token {p.peek()!r}")
    return c

