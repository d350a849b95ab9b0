"""Exact octonion arithmetic over the rationals.

Basis ``1, e1, ..., e7`` with ``e_i e_j = eps_ijk e_k - delta_ij``; the sign
table ``eps`` is generated once from the seven signed Fano triples below.
"""

import re as _re
from fractions import Fraction
from functools import reduce
from math import lcm

# (i, j, k, sign) with e_i e_j = sign * e_k
TRIPLES = (
    (1, 2, 3, 1),
    (1, 4, 5, 1),
    (1, 6, 7, 1),
    (2, 4, 6, 1),
    (2, 5, 7, -1),
    (3, 4, 7, -1),
    (3, 5, 6, -1),
)


def _build_epsilon():
    eps = [[[0] * 8 for _ in range(8)] for _ in range(8)]
    for i, j, k, s in TRIPLES:
        for (a, b, c), sign in (
            ((i, j, k), s), ((j, k, i), s), ((k, i, j), s),
            ((j, i, k), -s), ((i, k, j), -s), ((k, j, i), -s),
        ):
            eps[a][b][c] = sign
    return eps


EPSILON = _build_epsilon()


def epsilon(i, j, k):
    """Structure constant eps_ijk for imaginary indices 1..7."""
    if not (1 <= i <= 7 and 1 <= j <= 7 and 1 <= k <= 7):
        raise IndexError("epsilon indices run over 1..7")
    return EPSILON[i][j][k]


def _build_table():
    # TABLE[i][j] = (k, sign) with e_i e_j = sign * e_k
    table = [[None] * 8 for _ in range(8)]
    for i in range(8):
        table[0][i] = (i, 1)
        table[i][0] = (i, 1)
    for i in range(1, 8):
        table[i][i] = (0, -1)
        for j in range(1, 8):
            if i == j:
                continue
            hits = [(k, EPSILON[i][j][k]) for k in range(1, 8) if EPSILON[i][j][k]]
            assert len(hits) == 1, (i, j, hits)
            table[i][j] = hits[0]
    return tuple(tuple(row) for row in table)


TABLE = _build_table()


class Octonion:
    """An octonion ``c[0] + c[1] e1 + ... + c[7] e7`` with Fraction coefficients."""

    __slots__ = ("c",)

    def __init__(self, coeffs=None):
        if coeffs is None:
            coeffs = (0,) * 8
        coeffs = tuple(Fraction(x) for x in coeffs)
        if len(coeffs) != 8:
            raise ValueError("an octonion has exactly 8 coefficients, got %d" % len(coeffs))
        object.__setattr__(self, "c", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("Octonion is immutable")

    @classmethod
    def basis(cls, i, scale=1):
        c = [0] * 8
        c[i] = scale
        return cls(c)

    @classmethod
    def real(cls, value):
        return cls.basis(0, value)

    @classmethod
    def parse(cls, text):
        return parse_octonion(text)

    def __getitem__(self, i):
        return self.c[i]

    def __iter__(self):
        return iter(self.c)

    def __eq__(self, other):
        if isinstance(other, Octonion):
            return self.c == other.c
        if isinstance(other, (int, Fraction)):
            return self.c == Octonion.real(other).c
        return NotImplemented

    def __hash__(self):
        return hash(self.c)

    def __bool__(self):
        return any(self.c)

    def __repr__(self):
        return "Octonion(%r)" % format_octonion(self)

    def __str__(self):
        return format_octonion(self)

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return Octonion([a + b for a, b in zip(self.c, other.c)])

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return Octonion([a - b for a, b in zip(self.c, other.c)])

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return Octonion([-a for a in self.c])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Octonion([a * other for a in self.c])
        if not isinstance(other, Octonion):
            return NotImplemented
        return mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Octonion([other * a for a in self.c])
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return Octonion([a / other for a in self.c])
        return NotImplemented

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers")
        out = ONE
        for _ in range(k):
            out = out * self
        return out

    def conj(self):
        return conj(self)

    def inverse(self):
        """``conj(a) / |a|^2``; a two-sided inverse since O is a division algebra."""
        n = norm_sq(self)
        if not n:
            raise ZeroDivisionError("zero octonion has no inverse")
        return conj(self) / n

    def re(self):
        return self.c[0]

    def norm_sq(self):
        return norm_sq(self)

    def is_real(self):
        return not any(self.c[1:])


def _coerce(x):
    if isinstance(x, Octonion):
        return x
    if isinstance(x, (int, Fraction)):
        return Octonion.real(x)
    return None


def basis_mul(i, j):
    """``e_i e_j`` as an Octonion (index 0 is the unit)."""
    k, s = TABLE[i][j]
    return Octonion.basis(k, s)


def _integerize(coeffs):
    den = reduce(lcm, (x.denominator for x in coeffs), 1)
    return [x.numerator * (den // x.denominator) for x in coeffs], den


def mul(a, b):
    ai, da = _integerize(a.c)
    bi, db = _integerize(b.c)
    out = [0] * 8
    for i in range(8):
        x = ai[i]
        if not x:
            continue
        row = TABLE[i]
        for j in range(8):
            y = bi[j]
            if y:
                k, s = row[j]
                if s > 0:
                    out[k] += x * y
                else:
                    out[k] -= x * y
    den = da * db
    return Octonion([Fraction(v, den) for v in out])


def conj(a):
    c = a.c
    return Octonion((c[0],) + tuple(-x for x in c[1:]))


def re(a):
    return a.c[0]


def norm_sq(a):
    return sum(x * x for x in a.c)


def associator(p, q, r):
    """``(pq)r - p(qr)``."""
    return (p * q) * r - p * (q * r)


def commutator(p, q):
    return p * q - q * p


ZERO = Octonion()
ONE = Octonion.real(1)
E = tuple(Octonion.basis(i) for i in range(8))


# ---------------------------------------------------------------------------
# text and JSON forms

def format_rational(q):
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return "%d/%d" % (q.numerator, q.denominator)


def parse_rational(text):
    text = str(text).strip()
    if not _re.fullmatch(r"[+-]?\d+(/\d+)?", text):
        raise ValueError("not a rational literal: %r" % text)
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise ValueError("zero denominator: %r" % text)
    return Fraction(text)


def format_octonion(a):
    parts = []
    for i, x in enumerate(a.c):
        if not x:
            continue
        if i == 0:
            body = format_rational(abs(x))
        elif abs(x) == 1:
            body = "e%d" % i
        else:
            body = "%se%d" % (format_rational(abs(x)), i)
        sign = "-" if x < 0 else "+"
        parts.append((sign, body))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += sign + body
    return out


class OctonionParseError(ValueError):
    def __init__(self, text, pos, msg):
        self.text = text
        self.pos = pos
        super().__init__("%s at position %d in %r" % (msg, pos, text))


_TERM = _re.compile(r"([+-])?(\d+(?:/\d+)?)?(e([0-7]))?")


def parse_octonion(text):
    """Parse a literal like ``1+2e3-1/2e7``; whitespace is ignored.

    Positions in errors refer to the whitespace-stripped string.
    """
    s = "".join(str(text).split())
    if not s:
        raise OctonionParseError(s, 0, "empty literal")
    coeffs = [Fraction(0)] * 8
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        sign, coef, unit, idx = m.groups() if m else (None, None, None, None)
        if not m or m.end() == pos or (coef is None and unit is None):
            raise OctonionParseError(s, pos, "expected a term")
        if sign is None and not first:
            raise OctonionParseError(s, pos, "expected '+' or '-'")
        if coef is not None and "/" in coef and coef.split("/")[1].strip("0") == "":
            raise OctonionParseError(s, pos, "zero denominator")
        value = Fraction(coef) if coef is not None else Fraction(1)
        if sign == "-":
            value = -value
        coeffs[int(idx) if idx is not None else 0] += value
        pos = m.end()
        first = False
    return Octonion(coeffs)


def octonion_to_json(a):
    return [format_rational(x) for x in a.c]


def octonion_from_json(data):
    if not isinstance(data, list) or len(data) != 8:
        raise ValueError("octonion JSON must be an array of 8 rational strings")
    return Octonion([parse_rational(x) for x in data])
