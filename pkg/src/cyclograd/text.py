"""
Text form of polynomials, tensors and vector fields.

Grammar (ASCII, whitespace-insensitive)::

    poly   := ['+'|'-'] term (('+'|'-') term)*
    term   := coeff ('*' word)? | word
    coeff  := rat | rat 'i' | '(' rat (('+'|'-') rat 'i')? ')'
    rat    := integer ('/' positive-integer)?
    word   := '1' | gen ('.' gen)*
    gen    := 'x' positive-integer

A tensor is a sum of ``factor (x) factor`` summands, where a factor is a single
term or a bracketed polynomial ``[...]``.  A vector field lists its components
separated by ``;``.
"""

from __future__ import annotations

import re

from gmpy2 import mpq

from .ncpoly import ONE, Polynomial, Scalar, TensorPoly, ZERO, gauss, word_key


class ParseError(ValueError):
    def __init__(self, message, text, pos):
        super().__init__(f"{message} at position {pos}: {text[:pos]}<-- HERE {text[pos:]}")
        self.pos = pos


_INT = re.compile(r"\d+")
_TENSOR = re.compile(r"\(\s*x\s*\)")


class _Parser:
    def __init__(self, text, n):
        self.text = text
        self.pos = 0
        self.n = n
        self.max_letter = 0

    def error(self, msg):
        raise ParseError(msg, self.text, self.pos)

    def skip(self):
        t = self.text
        while self.pos < len(t) and t[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def at_tensor(self):
        self.skip()
        return _TENSOR.match(self.text, self.pos) is not None

    def eat(self, ch):
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def expect(self, ch):
        if not self.eat(ch):
            self.error(f"expected {ch!r}")

    def integer(self):
        self.skip()
        m = _INT.match(self.text, self.pos)
        if not m:
            self.error("expected an integer")
        self.pos = m.end()
        return int(m.group())

    def rat(self, signed=False):
        sign = 1
        if signed and self.peek() in "+-":
            sign = -1 if self.text[self.pos] == "-" else 1
            self.pos += 1
        num = self.integer()
        if self.eat("/"):
            den = self.integer()
            if den == 0:
                self.error("zero denominator")
            return mpq(sign * num, den)
        return mpq(sign * num)

    def gen(self):
        self.expect("x")
        self.skip()
        m = _INT.match(self.text, self.pos)
        if not m:
            self.error("expected a generator index")
        j = int(m.group())
        if j < 1:
            self.error("generator indices start at 1")
        if self.n is not None and j > self.n:
            self.error(f"generator x{j} exceeds n={self.n}")
        self.pos = m.end()
        self.max_letter = max(self.max_letter, j)
        return j

    def word(self):
        if self.peek() == "1":
            self.pos += 1
            return ()
        letters = [self.gen()]
        while self.eat("."):
            letters.append(self.gen())
        return tuple(letters)

    def coefficient(self):
        if self.eat("("):
            re_ = self.rat(signed=True)
            if self.eat("i"):
                c = gauss(0, re_)
            elif self.peek() in "+-":
                sign = -1 if self.text[self.pos] == "-" else 1
                self.pos += 1
                im = self.rat()
                self.expect("i")
                c = gauss(re_, sign * im)
            else:
                c = re_
            self.expect(")")
            return c
        r = self.rat()
        if self.eat("i"):
            return gauss(0, r)
        return r

    def term(self):
        ch = self.peek()
        if ch == "x":
            return self.word(), ONE
        if ch == "(" or ch.isdigit():
            c = self.coefficient()
            if self.eat("*"):
                return self.word(), c
            return (), c
        self.error("expected a term")

    def poly(self):
        terms = {}

        def add(w, c):
            terms[w] = terms.get(w, ZERO) + c

        sign = 1
        if self.peek() in "+-":
            sign = -1 if self.text[self.pos] == "-" else 1
            self.pos += 1
        w, c = self.term()
        add(w, sign * c)
        while self.peek() in ("+", "-") and self.peek():
            sign = -1 if self.text[self.pos] == "-" else 1
            self.pos += 1
            w, c = self.term()
            add(w, sign * c)
        return terms

    def factor(self):
        if self.eat("["):
            terms = self.poly()
            self.expect("]")
            return terms
        w, c = self.term()
        return {w: c}

    def end(self):
        if self.peek():
            self.error("unexpected trailing input")


def _finish_n(parser, n):
    return n if n is not None else max(parser.max_letter, 1)


def parse_polynomial(text: str, n: int | None = None) -> Polynomial:
    """Parse ``text``; ``n`` defaults to the largest generator index used."""
    p = _Parser(text, n)
    terms = p.poly()
    p.end()
    return Polynomial(_finish_n(p, n), terms)


def parse_tensor(text: str, n: int | None = None) -> TensorPoly:
    p = _Parser(text, n)
    out = {}
    first = True
    while first or p.peek() in ("+", "-"):
        sign = 1
        if p.peek() in ("+", "-"):
            sign = -1 if p.text[p.pos] == "-" else 1
            p.pos += 1
        elif not first:
            break
        first = False
        left = p.factor()
        if not p.at_tensor():
            # a bare polynomial term means left (x) 1 is not intended
            p.error("expected '(x)'")
        p.pos = _TENSOR.match(p.text, p.pos).end()
        right = p.factor()
        for u, a in left.items():
            for v, b in right.items():
                out[(u, v)] = out.get((u, v), ZERO) + sign * a * b
    p.end()
    return TensorPoly(_finish_n(p, n), out)


def parse_vector_field(text: str, n: int | None = None):
    from .calculus import VectorField

    parts = text.split(";")
    polys = []
    probe = _Parser(text, n)
    for part in parts:
        q = _Parser(part, n)
        polys.append(q.poly())
        q.end()
        probe.max_letter = max(probe.max_letter, q.max_letter)
    m = n if n is not None else max(probe.max_letter, len(parts))
    if len(parts) != m:
        raise ValueError(f"vector field needs {m} components, got {len(parts)}")
    return VectorField(tuple(Polynomial(m, t) for t in polys))


# ---------------------------------------------------------------------------
# printing
# ---------------------------------------------------------------------------

def _rat(q):
    q = mpq(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _word(w):
    if not w:
        return "1"
    return ".".join(f"x{j}" for j in w)


def _signed_term(c, w):
    """Return ``(negative, text)`` for the term ``c * w``."""
    if isinstance(c, Scalar):
        if c.re == 0:
            neg = c.im < 0
            ctext = f"{_rat(abs(c.im))}i"
        else:
            neg = False
            im = c.im
            ctext = f"({_rat(c.re)}{'-' if im < 0 else '+'}{_rat(abs(im))}i)"
        return neg, ctext if not w else f"{ctext}*{_word(w)}"
    neg = c < 0
    mag = abs(c)
    if mag.denominator == 1:
        ctext = str(mag.numerator)
    else:
        ctext = f"({_rat(mag)})"
    if not w:
        return neg, ctext
    if mag == 1:
        return neg, _word(w)
    return neg, f"{ctext}*{_word(w)}"


def _join(pieces):
    if not pieces:
        return "0"
    out = []
    for i, (neg, body) in enumerate(pieces):
        if i == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


def print_polynomial(p: Polynomial) -> str:
    return _join([_signed_term(c, w) for w, c in p.items()])


def print_tensor(t: TensorPoly) -> str:
    pieces = []
    for (u, v), c in t.items():
        neg, left = _signed_term(c, u)
        pieces.append((neg, f"{left} (x) {_word(v)}"))
    return _join(pieces)


def print_vector_field(v) -> str:
    return "; ".join(print_polynomial(p) for p in v.components)


def format_word(w) -> str:
    return _word(w)


def sort_words(ws):
    return sorted(ws, key=word_key)
