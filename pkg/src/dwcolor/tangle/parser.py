"""Recursive-descent parser for the tangle word language.

Grammar (``*`` is left associative, ``A*B`` means A on top of B)::

    word    := factor ("*" factor)*
    factor  := INT | "rt" "(" word ")" | "(" word ")"

Montesinos specs are comma-separated fractions such as ``1/3,-2,5/2``.
"""
from __future__ import annotations

import re
from fractions import Fraction

from ..errors import ParseError, ZeroTangle
from .words import Frac, IntegralTangle, Rot, VComp

__all__ = ["parse_word", "format_word", "parse_montesinos", "format_montesinos"]

_TOKEN = re.compile(r"\s*(?:(?P<int>[+-]?\d+)|(?P<rt>rt)|(?P<op>[()*]))")


def _normalize_minus(text):
    return text.replace("−", "-")


def _tokenize(text):
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        start = m.start(m.lastgroup)
        tokens.append((m.lastgroup, m.group(m.lastgroup), start))
        pos = m.end()
    tokens.append(("eof", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind, value=None):
        tok = self.peek()
        if tok[0] != kind or (value is not None and tok[1] != value):
            want = value or kind
            got = tok[1] or "end of input"
            raise ParseError(f"expected {want!r}, got {got!r}", tok[2])
        self.i += 1
        return tok

    def word(self):
        node = self.factor()
        while self.peek()[:2] == ("op", "*"):
            self.i += 1
            node = VComp(node, self.factor())
        return node

    def factor(self):
        kind, value, pos = self.peek()
        if kind == "int":
            self.i += 1
            return IntegralTangle(int(value))
        if kind == "rt":
            self.i += 1
            self.take("op", "(")
            inner = self.word()
            self.take("op", ")")
            return Rot(inner)
        if (kind, value) == ("op", "("):
            self.i += 1
            inner = self.word()
            self.take("op", ")")
            return inner
        raise ParseError(f"expected an integer, 'rt(' or '(', got {value or 'end of input'!r}", pos)


def parse_word(text):
    parser = _Parser(_normalize_minus(text))
    word = parser.word()
    kind, value, pos = parser.peek()
    if kind != "eof":
        raise ParseError(f"unexpected trailing {value!r}", pos)
    return word


def format_word(word):
    """Inverse of :func:`parse_word`; parenthesizes right-nested composites."""
    if isinstance(word, IntegralTangle):
        return str(word.twists)
    if isinstance(word, Rot):
        return f"rt({format_word(word.inner)})"
    upper = format_word(word.upper)
    lower = format_word(word.lower)
    if isinstance(word.lower, VComp):
        lower = f"({lower})"
    return f"{upper}*{lower}"


def parse_montesinos(text):
    text = _normalize_minus(text).strip()
    if not text:
        raise ParseError("empty Montesinos spec", 0)
    out = []
    pos = 0
    for part in text.split(","):
        item = part.strip()
        m = re.fullmatch(r"([+-]?\d+)\s*(?:/\s*([+-]?\d+))?", item)
        where = pos + (len(part) - len(part.lstrip()))
        if m is None:
            raise ParseError(f"malformed fraction {item!r}", where)
        num = int(m.group(1))
        den = int(m.group(2)) if m.group(2) is not None else 1
        if den == 0:
            raise ParseError(f"zero denominator in {item!r}", where)
        f = Fraction(num, den)
        if f == 0:
            raise ZeroTangle(f"the 0 tangle is not allowed ({item!r})")
        out.append(Frac.of(f))
        pos += len(part) + 1
    return tuple(out)


def format_montesinos(spec):
    return ",".join(str(f) for f in spec)
