"""Exact arithmetic in a number field K = Q(a) given by a monic minimal polynomial."""

from fractions import Fraction
from functools import lru_cache

from .errors import ReducibleMinimalPolynomial


def _frac(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot interpret {x!r} as a rational number")


def format_rational(q):
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class NumberField:
    """The field Q[t]/(min_poly).

    ``min_poly`` lists rational coefficients with the constant term first and
    must be monic and irreducible over Q. A degree one polynomial gives Q.
    """

    def __init__(self, min_poly, symbol="a"):
        coeffs = tuple(_frac(c) for c in min_poly)
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        if len(coeffs) < 2:
            raise ReducibleMinimalPolynomial("minimal polynomial must have degree >= 1")
        if coeffs[-1] != 1:
            raise ReducibleMinimalPolynomial("minimal polynomial must be monic")
        self.min_poly = coeffs
        self.symbol = symbol
        self.degree = len(coeffs) - 1
        if self.degree > 1 and not _is_irreducible_over_q(coeffs):
            raise ReducibleMinimalPolynomial(f"minimal polynomial {list(map(str, coeffs))} is reducible over Q")
        n = self.degree
        # powers a^n .. a^(2n-2) written in the basis 1, a, ..., a^(n-1)
        table = []
        cur = [-c for c in coeffs[:-1]]
        for _ in range(max(n - 1, 0)):
            table.append(tuple(cur))
            top = cur[-1]
            cur = [Fraction(0)] + cur[:-1]
            if top:
                for i in range(n):
                    cur[i] -= top * coeffs[i]
        self._reduction = table
        self.zero = FieldElement(self, (Fraction(0),) * n)
        self.one = self((1,))

    def __reduce__(self):
        return (_field_from_key, (tuple(map(str, self.min_poly)), self.symbol))

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.min_poly == other.min_poly

    def __hash__(self):
        return hash(self.min_poly)

    def __repr__(self):
        if self.degree == 1:
            return "NumberField(Q)"
        return f"NumberField({self.symbol}: {', '.join(map(format_rational, self.min_poly))})"

    @property
    def is_rational_field(self):
        return self.degree == 1

    @property
    def gen(self):
        if self.degree == 1:
            return self(-self.min_poly[0])
        return self((0, 1))

    def __call__(self, value):
        if isinstance(value, FieldElement):
            if value.field != self:
                raise ValueError("element belongs to a different field")
            return value
        if isinstance(value, (int, Fraction, str)):
            coords = [Fraction(0)] * self.degree
            coords[0] = _frac(value)
            return FieldElement(self, tuple(coords))
        coords = [_frac(c) for c in value]
        if len(coords) > self.degree:
            return self._reduce_poly(coords)
        coords += [Fraction(0)] * (self.degree - len(coords))
        return FieldElement(self, tuple(coords))

    def _reduce_poly(self, coords):
        n = self.degree
        out = list(coords[:n]) + [Fraction(0)] * max(0, n - len(coords))
        for k in range(n, len(coords)):
            c = coords[k]
            if c:
                if k - n < len(self._reduction):
                    row = self._reduction[k - n]
                else:
                    row = self._power_coords(k)
                for i in range(n):
                    out[i] += c * row[i]
        return FieldElement(self, tuple(out))

    def _power_coords(self, k):
        return self.gen.__pow__(k).c


def _is_irreducible_over_q(coeffs):
    from sympy import QQ as SQQ
    from sympy.polys.factortools import dup_factor_list

    f = [SQQ(c.numerator, c.denominator) for c in reversed(coeffs)]
    _, factors = dup_factor_list(f, SQQ)
    return len(factors) == 1 and factors[0][1] == 1 and len(factors[0][0]) == len(f)


class FieldElement:
    """An element sum(c[i] * a^i) of a NumberField, always in reduced form."""

    __slots__ = ("field", "c")

    def __init__(self, field, coords):
        self.field = field
        self.c = coords

    def __reduce__(self):
        return (FieldElement, (self.field, self.c))

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            return other
        if isinstance(other, (int, Fraction)):
            return self.field(other)
        return None

    def is_zero(self):
        return not any(self.c)

    def __bool__(self):
        return any(self.c)

    def is_rational(self):
        return not any(self.c[1:])

    def rational(self):
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.c[0]

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.c == o.c

    def __hash__(self):
        if self.is_rational():
            return hash(self.c[0])
        return hash(self.c)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, tuple(a + b for a, b in zip(self.c, o.c)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, tuple(a - b for a, b in zip(self.c, o.c)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return FieldElement(self.field, tuple(-a for a in self.c))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return FieldElement(self.field, tuple(a * other for a in self.c))
        if not isinstance(other, FieldElement):
            return NotImplemented
        n = self.field.degree
        if n == 1:
            return FieldElement(self.field, (self.c[0] * other.c[0],))
        prod = [Fraction(0)] * (2 * n - 1)
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(other.c):
                    if b:
                        prod[i + j] += a * b
        return self.field._reduce_poly(prod)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a number field")
        if self.field.degree == 1:
            return FieldElement(self.field, (1 / self.c[0],))
        s = _inverse_mod(list(self.c), list(self.field.min_poly))
        return self.field(s)

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

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = self.field.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def sort_key(self):
        return self.c

    def to_str(self, symbol=None):
        """Exact expression in the generator, highest power first, e.g. ``7/2*r+17/2``."""
        symbol = symbol or self.field.symbol
        if self.field.degree == 1:
            return format_rational(self.c[0])
        parts = []
        for k in range(len(self.c) - 1, -1, -1):
            q = self.c[k]
            if not q:
                continue
            mono = "" if k == 0 else (symbol if k == 1 else f"{symbol}^{k}")
            if not mono:
                body = format_rational(abs(q))
            elif abs(q) == 1:
                body = mono
            else:
                body = f"{format_rational(abs(q))}*{mono}"
            sign = "-" if q < 0 else "+"
            parts.append((sign, body))
        if not parts:
            return "0"
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += sign + body
        return out

    def is_simple(self):
        """True when to_str() needs no parentheses as a product factor."""
        return sum(1 for q in self.c if q) <= 1

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"FieldElement({self.to_str()})"


@lru_cache(maxsize=None)
def _field_from_key(min_poly, symbol):
    return NumberField(min_poly, symbol)


def rational_field():
    return _field_from_key(("0", "1"), "a")


QQ = rational_field()


def _trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a, b):
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lb = b[-1]
    while len(_trim(a)) >= len(b):
        shift = len(a) - len(b)
        coef = a[-1] / lb
        q[shift] = coef
        for i, c in enumerate(b):
            a[i + shift] -= coef * c
    return _trim(q), a


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def _poly_sub(a, b):
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def _inverse_mod(a, m):
    """Return s with s*a = 1 mod m (extended Euclid over Q)."""
    r0, r1 = list(m), _trim(list(a))
    s0, s1 = [], [Fraction(1)]
    while len(r1) > 1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
    if not r1:
        raise ZeroDivisionError("element is a zero divisor")
    c = r1[0]
    return [x / c for x in s1]
