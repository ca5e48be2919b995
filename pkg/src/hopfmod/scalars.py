"""Exact scalars: rationals and rational functions in one parameter ``q``.

Rationals are plain :class:`fractions.Fraction` values.  Rational functions
are :class:`RationalFunction` instances kept in lowest terms with a monic
denominator, so ``==`` is structural equality.  Both kinds mix freely in
arithmetic.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Sequence, Union

__all__ = [
    "Scalar",
    "Poly",
    "RationalFunction",
    "ScalarParseError",
    "as_scalar",
    "normalize",
    "parse_scalar",
    "format_scalar",
    "Q",
]

Poly = tuple  # tuple[Fraction, ...], lowest degree first, no trailing zeros


class ScalarParseError(ValueError):
    pass


# -- dense univariate polynomials over Q -------------------------------------

def _trim(p: Sequence[Fraction]) -> Poly:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def _padd(a: Poly, b: Poly) -> Poly:
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def _pneg(a: Poly) -> Poly:
    return tuple(-c for c in a)


def _pmul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def _pscale(a: Poly, c: Fraction) -> Poly:
    return _trim([x * c for x in a])


def _pdivmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    quot = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        c = a[-1] / lead
        quot[shift] = c
        for i, y in enumerate(b):
            a[shift + i] -= c * y
        a = list(_trim(a))
    return _trim(quot), tuple(a)


def _pgcd(a: Poly, b: Poly) -> Poly:
    while b:
        a, b = b, _pdivmod(a, b)[1]
    if not a:
        return ()
    return _pscale(a, 1 / a[-1])


# -- rational functions ------------------------------------------------------

class RationalFunction:
    """Element of Q(q), stored as ``numerator / denominator`` in lowest terms.

    The denominator is monic and zero is ``(0, 1)``.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Sequence = (), den: Sequence = (1,), *, _normalized: bool = False):
        if _normalized:
            self.num, self.den = num, den
            return
        n = _trim([Fraction(c) for c in num])
        d = _trim([Fraction(c) for c in den])
        if not d:
            raise ZeroDivisionError("rational function with zero denominator")
        if not n:
            self.num, self.den = (), (Fraction(1),)
            return
        g = _pgcd(n, d)
        if len(g) > 1:
            n = _pdivmod(n, g)[0]
            d = _pdivmod(d, g)[0]
        lead = d[-1]
        self.num = _pscale(n, 1 / lead)
        self.den = _pscale(d, 1 / lead)

    @classmethod
    def q(cls) -> "RationalFunction":
        return cls((0, 1))

    @classmethod
    def constant(cls, c) -> "RationalFunction":
        return cls((Fraction(c),))

    # structural data
    def is_constant(self) -> bool:
        return len(self.num) <= 1 and len(self.den) == 1

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("not a constant")
        return self.num[0] if self.num else Fraction(0)

    def __eq__(self, other):
        if isinstance(other, RationalFunction):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self):
        if self.is_constant():
            return hash(self.constant_value())
        return hash((self.num, self.den))

    def __bool__(self):
        return bool(self.num)

    # arithmetic
    @staticmethod
    def _coerce(other) -> "RationalFunction | None":
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (int, Fraction)):
            return RationalFunction((Fraction(other),))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RationalFunction(_padd(self.num, o.num), self.den)
        return RationalFunction(
            _padd(_pmul(self.num, o.den), _pmul(o.num, self.den)), _pmul(self.den, o.den)
        )

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(_pneg(self.num), self.den, _normalized=True)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.num or not o.num:
            return RationalFunction()
        return RationalFunction(_pmul(self.num, o.num), _pmul(self.den, o.den))

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if not self.num:
            raise ZeroDivisionError("inverse of zero rational function")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        out = RationalFunction((1,))
        for _ in range(abs(k)):
            out = out * base
        return out

    def __repr__(self):
        return f"RationalFunction({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


Scalar = Union[Fraction, RationalFunction]

Q = RationalFunction.q


def as_scalar(x) -> Scalar:
    """Coerce ints, strings and scalars into a canonical scalar."""
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_scalar(x)
    raise TypeError(f"cannot interpret {x!r} as an exact scalar")


def normalize(s) -> Scalar:
    """Return the canonical form of ``s``.

    For rationals this is gcd reduction with a positive denominator; for
    rational functions, polynomial gcd reduction with a monic denominator.
    A ``(numerator, denominator)`` pair of polynomial coefficient lists
    (lowest degree first) is accepted as well.
    """
    if isinstance(s, tuple) and len(s) == 2 and all(isinstance(p, (list, tuple)) for p in s):
        return RationalFunction(s[0], s[1])
    if isinstance(s, tuple) and len(s) == 2:
        num, den = s
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        return Fraction(num, den)
    if isinstance(s, RationalFunction):
        return RationalFunction(s.num, s.den)
    return as_scalar(s)


# -- text syntax -------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|(q)|(\*\*|[-+*/^()]))")


def _tokenize(text: str) -> list[str]:
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ScalarParseError(f"unexpected character {text[pos:].strip()[:1]!r} at offset {pos} in {text!r}")
        out.append(m.group(m.lastindex))
        pos = m.end()
    return out


class _Parser:
    # expr := term (('+'|'-') term)* ; term := unary (('*'|'/'|juxtaposition) unary)*
    # unary := '-' unary | power ; power := atom ('^' int)?
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, expected=None):
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            raise ScalarParseError(f"expected {expected or 'a value'} in {self.text!r}")
        self.i += 1
        return tok

    def parse(self):
        if not self.toks:
            raise ScalarParseError("empty scalar")
        v = self.expr()
        if self.peek() is not None:
            raise ScalarParseError(f"trailing input {self.peek()!r} in {self.text!r}")
        return v

    def expr(self):
        v = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            w = self.term()
            v = v + w if op == "+" else v - w
        return v

    def term(self):
        v = self.unary()
        while True:
            tok = self.peek()
            if tok in ("*", "/"):
                self.take()
                w = self.unary()
                if tok == "*":
                    v = v * w
                else:
                    if w == 0:
                        raise ScalarParseError(f"division by zero in {self.text!r}")
                    v = v / w
            elif tok is not None and (tok in ("q", "(") or tok.isdigit()):
                v = v * self.power()
            else:
                return v

    def unary(self):
        if self.peek() == "-":
            self.take()
            return -self.unary()
        if self.peek() == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() in ("^", "**"):
            self.take()
            neg = False
            if self.peek() == "-":
                self.take()
                neg = True
            exp = self.take()
            if not exp.isdigit():
                raise ScalarParseError(f"exponent must be an integer in {self.text!r}")
            k = int(exp)
            base = base ** (-k if neg else k)
        return base

    def atom(self):
        tok = self.take()
        if tok.isdigit():
            return Fraction(int(tok))
        if tok == "q":
            return RationalFunction.q()
        if tok == "(":
            v = self.expr()
            self.take(")")
            return v
        raise ScalarParseError(f"unexpected {tok!r} in {self.text!r}")


def parse_scalar(text: str) -> Scalar:
    """Parse ``"3/4"``, ``"-2"``, ``"q^2 - 1"`` or ``"(q^2-1)/(q-1)"``."""
    if not isinstance(text, str):
        return as_scalar(text)
    value = _Parser(text).parse()
    if isinstance(value, RationalFunction):
        return RationalFunction(value.num, value.den)
    return Fraction(value)


def _format_poly(p: Poly) -> str:
    if not p:
        return "0"
    terms = []
    for deg in range(len(p) - 1, -1, -1):
        c = p[deg]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if deg == 0:
            body = str(a)
        else:
            mono = "q" if deg == 1 else f"q^{deg}"
            body = mono if a == 1 else f"{a}*{mono}"
        terms.append((sign, body))
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def format_scalar(s) -> str:
    """Canonical text form, parseable by :func:`parse_scalar`."""
    if isinstance(s, RationalFunction):
        if s.den == (Fraction(1),):
            return _format_poly(s.num)
        num = _format_poly(s.num)
        if len([c for c in s.num if c != 0]) > 1:
            num = f"({num})"
        return f"{num}/({_format_poly(s.den)})"
    return str(Fraction(s))
