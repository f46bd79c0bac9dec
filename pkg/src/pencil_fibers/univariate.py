"""Dense univariate polynomials over a NumberField and K-rational root extraction.

A polynomial is a tuple of FieldElement, constant term first, with no
trailing zeros; the zero polynomial is the empty tuple.
"""

from fractions import Fraction

from .field import FieldElement
from .linalg import determinant


def upoly(field, coeffs):
    return trim(tuple(field(c) for c in coeffs))


def trim(p):
    p = list(p)
    while p and p[-1].is_zero():
        p.pop()
    return tuple(p)


def degree(p):
    return len(p) - 1


def add(p, q):
    if len(p) < len(q):
        p, q = q, p
    return trim(tuple(a + q[i] if i < len(q) else a for i, a in enumerate(p)))


def sub(p, q):
    return add(p, tuple(-c for c in q))


def scale(p, c):
    return trim(tuple(a * c for a in p))


def mul(p, q):
    if not p or not q:
        return ()
    field = p[0].field
    out = [field.zero] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                if b:
                    out[i + j] = out[i + j] + a * b
    return trim(tuple(out))


def divmod_(p, q):
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    field = q[0].field
    rem = list(p)
    if len(rem) < len(q):
        return (), trim(tuple(rem))
    quo = [field.zero] * (len(rem) - len(q) + 1)
    inv = q[-1].inverse()
    for k in range(len(rem) - len(q), -1, -1):
        c = rem[k + len(q) - 1] * inv
        quo[k] = c
        if c:
            for i, b in enumerate(q):
                rem[k + i] = rem[k + i] - c * b
    return trim(tuple(quo)), trim(tuple(rem[: len(q) - 1]))


def monic(p):
    if not p:
        return p
    inv = p[-1].inverse()
    return tuple(c * inv for c in p)


def gcd(p, q):
    """Monic gcd; gcd(0, 0) = 0."""
    while q:
        p, q = q, divmod_(p, q)[1]
    return monic(p)


def evaluate(p, x):
    if not p:
        return x.field.zero if isinstance(x, FieldElement) else 0
    acc = p[-1]
    for c in reversed(p[:-1]):
        acc = acc * x + c
    return acc


def derivative(p):
    return trim(tuple(c * k for k, c in enumerate(p) if k > 0))


def linear(root):
    """The monic polynomial t - root."""
    return (-root, root.field.one)


def upoly_str(p, var="t"):
    if not p:
        return "0"
    parts = []
    for k in range(len(p) - 1, -1, -1):
        c = p[k]
        if isinstance(c, FieldElement):
            if c.is_zero():
                continue
            cs = c.to_str()
            simple = c.is_simple()
        else:
            if c == 0:
                continue
            cs = str(c)
            simple = True
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        if not mono:
            body = cs if simple or len(parts) == 0 else f"({cs})"
        elif cs == "1":
            body = mono
        elif cs == "-1":
            body = "-" + mono
        elif simple:
            body = f"{cs}*{mono}"
        else:
            body = f"({cs})*{mono}"
        parts.append(body)
    out = parts[0]
    for b in parts[1:]:
        out += b if b.startswith("-") else "+" + b
    return out


# --- factorization (sympy backend) -----------------------------------------

_sympy_domains = {}


def _sympy_domain(field):
    dom = _sympy_domains.get(field)
    if dom is None:
        from sympy import QQ as SQQ
        from sympy import CRootOf, Poly, Symbol

        if field.degree == 1:
            dom = SQQ
        else:
            t = Symbol("t")
            mp = Poly([SQQ(c.numerator, c.denominator) for c in reversed(field.min_poly)], t, domain=SQQ)
            dom = SQQ.algebraic_field(CRootOf(mp.as_expr(), 0))
            # the domain generator must be the root of our own min_poly
            assert list(dom.mod.to_list()) == [SQQ(c.numerator, c.denominator) for c in reversed(field.min_poly)]
        _sympy_domains[field] = dom
    return dom


def _to_sympy(c, dom):
    from sympy import QQ as SQQ

    if dom == SQQ:
        q = c.c[0]
        return SQQ(q.numerator, q.denominator)
    return dom([SQQ(q.numerator, q.denominator) for q in reversed(c.c)])


def _from_sympy(x, field, dom):
    from sympy import QQ as SQQ

    if dom == SQQ:
        return field(Fraction(int(x.numerator), int(x.denominator)))
    coeffs = [Fraction(int(q.numerator), int(q.denominator)) for q in reversed(x.to_list())]
    return field(coeffs)


def factor(p):
    """Squarefree-and-irreducible factorization over K: list of (monic factor, multiplicity)."""
    from sympy.polys.factortools import dup_factor_list

    if not p:
        raise ValueError("cannot factor the zero polynomial")
    field = p[0].field
    if len(p) == 1:
        return []
    dom = _sympy_domain(field)
    f = [_to_sympy(c, dom) for c in reversed(p)]
    _, factors = dup_factor_list(f, dom)
    out = []
    for g, k in factors:
        coeffs = tuple(_from_sympy(c, field, dom) for c in reversed(g))
        out.append((monic(trim(coeffs)), k))
    out.sort(key=lambda fk: (len(fk[0]), [c.sort_key() for c in fk[0]]))
    return out


def split_rational(p):
    """Return (roots, rest): K-rational roots with multiplicities, and the
    remaining irreducible factors of degree >= 2 with multiplicities."""
    roots, rest = [], []
    for g, k in factor(p):
        if len(g) == 2:
            roots.append((-g[0], k))
        else:
            rest.append((g, k))
    roots.sort(key=lambda rk: rk[0].sort_key())
    return roots, rest


def k_rational_roots(p):
    """Roots of p lying in K, with multiplicities, in a fixed order."""
    if not p:
        raise ValueError("k_rational_roots of the zero polynomial")
    return split_rational(p)[0]


# --- resultants ---------------------------------------------------------------

def sylvester_resultant(p, q, deg_p=None, deg_q=None):
    """Resultant via the Sylvester determinant with the given formal degrees."""
    deg_p = degree(p) if deg_p is None else deg_p
    deg_q = degree(q) if deg_q is None else deg_q
    field = (p or q)[0].field
    if deg_p <= 0 and deg_q <= 0:
        return field.one
    if deg_p == 0:
        return (p[0] if p else field.zero) ** deg_q
    if deg_q == 0:
        return (q[0] if q else field.zero) ** deg_p
    size = deg_p + deg_q
    rows = []
    pc = [p[k] if k < len(p) else field.zero for k in range(deg_p, -1, -1)]
    qc = [q[k] if k < len(q) else field.zero for k in range(deg_q, -1, -1)]
    for i in range(deg_q):
        rows.append([field.zero] * i + pc + [field.zero] * (size - i - len(pc)))
    for i in range(deg_p):
        rows.append([field.zero] * i + qc + [field.zero] * (size - i - len(qc)))
    return determinant(rows, field)


def interpolate(xs, ys):
    """Lagrange interpolation through the points (xs[i], ys[i])."""
    field = ys[0].field
    result = ()
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        if not yi:
            continue
        num = (field.one,)
        den = field.one
        for j, xj in enumerate(xs):
            if j != i:
                num = mul(num, (-xj, field.one))
                den = den * (xi - xj)
        result = add(result, scale(num, yi / den))
    return result
