"""Text forms of elements, sets, families and endomorphism tables.

    set      := "{}" | "[0;" INT "]" | "{" INT ("," INT)* "}"
    family   := "F" INT | "F_" INT | "{" set ("," set)* "}"
    bext     := "(" INT "," INT "," set ")"
    conv     := "conv(" INT "," INT "," INT ")"
    mu       := "mu(" INT "," INT ")"
    element  := "0" | bext | conv | mu
    table    := lines of  element "->" element, '#' starts a comment

Whitespace between tokens is ignored.
"""

from __future__ import annotations

import re

from .bicyclic_ext import BExtElt
from .conv_iso import ConvIso
from .matrix_units import MatUnit
from .omega_family import EMPTY, OmegaFamily, OmegaSet, family_F, initial_interval
from .zero import ZERO


class ParseError(ValueError):
    def __init__(self, msg, text, pos):
        self.msg, self.text, self.pos = msg, text, pos
        super().__init__(f"{msg} at position {pos}\n  {text}\n  {' ' * pos}^")


_TOKEN = re.compile(r"\s*(?:(\d+)|(conv|mu|F_?)|(.))")


class _Parser:
    def __init__(self, text):
        self.text = text
        self.toks = []
        for m in _TOKEN.finditer(text):
            if m.group(0).strip() == "":
                continue
            if m.group(1) is not None:
                self.toks.append(("int", int(m.group(1)), m.start(1)))
            elif m.group(2) is not None:
                self.toks.append(("word", m.group(2), m.start(2)))
            else:
                self.toks.append(("sym", m.group(3), m.start(3)))
        self.i = 0

    def error(self, msg):
        pos = self.toks[self.i][2] if self.i < len(self.toks) else len(self.text)
        raise ParseError(msg, self.text, pos)

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None, len(self.text))

    def sym(self, s):
        kind, val, _ = self.peek()
        if kind != "sym" or val != s:
            self.error(f"expected {s!r}")
        self.i += 1

    def int(self):
        kind, val, _ = self.peek()
        if kind != "int":
            self.error("expected a non-negative integer")
        self.i += 1
        return val

    def end(self):
        if self.i != len(self.toks):
            self.error("unexpected trailing input")

    def omega_set(self):
        kind, val, _ = self.peek()
        if (kind, val) == ("sym", "["):
            self.sym("[")
            if self.int() != 0:
                self.i -= 1
                self.error("initial intervals start at 0")
            self.sym(";")
            k = self.int()
            self.sym("]")
            return initial_interval(k)
        self.sym("{")
        if self.peek()[:2] == ("sym", "}"):
            self.sym("}")
            return EMPTY
        items = [self.int()]
        while self.peek()[:2] == ("sym", ","):
            self.sym(",")
            v = self.int()
            if v in items:
                self.i -= 1
                self.error("duplicate element in set")
            items.append(v)
        self.sym("}")
        return OmegaSet.of(items)

    def family(self):
        kind, val, _ = self.peek()
        if kind == "word" and val.startswith("F"):
            self.i += 1
            return family_F(self.int())
        self.sym("{")
        sets = [self.omega_set()]
        while self.peek()[:2] == ("sym", ","):
            self.sym(",")
            sets.append(self.omega_set())
        self.sym("}")
        return OmegaFamily.of(sets)

    def element(self):
        kind, val, _ = self.peek()
        if kind == "int" and val == 0:
            self.i += 1
            return ZERO
        if kind == "word" and val == "conv":
            self.i += 1
            self.sym("(")
            s = self.int()
            self.sym(",")
            t = self.int()
            self.sym(",")
            k = self.int()
            if k < 1:
                self.i -= 1
                self.error("rank must be at least 1")
            self.sym(")")
            return ConvIso(s, t, k)
        if kind == "word" and val == "mu":
            self.i += 1
            self.sym("(")
            a = self.int()
            self.sym(",")
            b = self.int()
            self.sym(")")
            return MatUnit(a, b)
        if (kind, val) == ("sym", "("):
            self.sym("(")
            i = self.int()
            self.sym(",")
            j = self.int()
            self.sym(",")
            F = self.omega_set()
            self.sym(")")
            return BExtElt(i, j, F) if F else ZERO
        self.error("expected an element: 0, (i,j,F), conv(s,t,k) or mu(a,b)")


def parse_element(text: str):
    p = _Parser(text)
    x = p.element()
    p.end()
    return x


def parse_set(text: str) -> OmegaSet:
    p = _Parser(text)
    x = p.omega_set()
    p.end()
    return x


def parse_family(text: str) -> OmegaFamily:
    p = _Parser(text)
    x = p.family()
    p.end()
    return x


def element_kind(x) -> str | None:
    if isinstance(x, BExtElt):
        return "bext"
    if isinstance(x, ConvIso):
        return "conv"
    if isinstance(x, MatUnit):
        return "mu"
    return None


def element_to_json(x):
    return {"zero": True} if x is ZERO else x.to_json()


def element_from_json(d, kind: str):
    if d.get("zero"):
        return ZERO
    if kind == "bext":
        return BExtElt(d["i"], d["j"], OmegaSet.of(d["F"]))
    if kind == "conv":
        return ConvIso(d["s"], d["t"], d["k"])
    if kind == "mu":
        return MatUnit(d["a"], d["b"])
    raise ValueError(kind)


def parse_table(text: str) -> dict:
    """Parse 'elem -> elem' lines into a dict; line numbers appear in errors."""
    mapping = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "->" not in line:
            raise ParseError(f"line {lineno}: expected 'elem -> elem'", line, len(line))
        lhs, rhs = line.split("->", 1)
        try:
            x, y = parse_element(lhs), parse_element(rhs)
        except ParseError as exc:
            offset = 0 if exc.text == lhs else len(lhs) + 2
            raise ParseError(f"line {lineno}: {exc.msg}", line, offset + exc.pos) from None
        if x in mapping and mapping[x] != y:
            raise ParseError(f"line {lineno}: {x} is mapped twice", line, 0)
        mapping[x] = y
    return mapping


def format_table(mapping: dict) -> str:
    keys = sorted(mapping, key=lambda x: x.sort_key())
    return "".join(f"{x} -> {mapping[x]}\n" for x in keys)
