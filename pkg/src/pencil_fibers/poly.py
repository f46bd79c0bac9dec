"""Sparse multivariate polynomials over a NumberField.

Monomial order everywhere is graded lexicographic with the variables in the
order given (X > Y > Z for plane forms, x > y for local charts).

Two coefficient flavours share the substitution machinery:

* :class:`MultiPoly` -- coefficients are FieldElements;
* :class:`LinCoeffPoly` -- coefficients are linear forms in N unknowns, the
  coefficients of a generic form. Substitutions keep them linear, so the
  conditions "this coefficient vanishes" are rows of a linear system.
"""

from math import comb

from .errors import InexactDivision, ZeroPolynomial

PLANE_VARS = ("X", "Y", "Z")
LOCAL_VARS = ("x", "y")

# affine chart of P^2 -> indices of the variables kept after setting one to 1
CHART_KEEP = {"Z": (0, 1), "Y": (0, 2), "X": (1, 2)}
CHART_INDEX = {"X": 0, "Y": 1, "Z": 2}


def grlex_key(exp):
    return (sum(exp), exp)


def monomials(nvars, degree):
    """All exponent vectors of the given total degree, grlex descending."""
    if nvars == 1:
        return [(degree,)]
    out = []
    for first in range(degree, -1, -1):
        for rest in monomials(nvars - 1, degree - first):
            out.append((first,) + rest)
    return out


class LinForm:
    """A linear form sum(v[k] * u_k) in unknowns u_0..u_{N-1}."""

    __slots__ = ("v",)

    def __init__(self, v):
        self.v = v

    @classmethod
    def unit(cls, field, n, k):
        v = [field.zero] * n
        v[k] = field.one
        return cls(tuple(v))

    def is_zero(self):
        return all(x.is_zero() for x in self.v)

    def __add__(self, other):
        return LinForm(tuple(a + b for a, b in zip(self.v, other.v)))

    def __sub__(self, other):
        return LinForm(tuple(a - b for a, b in zip(self.v, other.v)))

    def __neg__(self):
        return LinForm(tuple(-a for a in self.v))

    def __mul__(self, scalar):
        return LinForm(tuple(a * scalar for a in self.v))

    def __eq__(self, other):
        return isinstance(other, LinForm) and self.v == other.v

    def __hash__(self):
        return hash(self.v)

    def __repr__(self):
        return f"LinForm({', '.join(x.to_str() for x in self.v)})"

    def evaluate(self, values):
        acc = None
        for a, b in zip(self.v, values):
            t = a * b
            acc = t if acc is None else acc + t
        return acc


# --- shared term-dictionary machinery -----------------------------------------

def _accumulate(acc, exp, coef):
    cur = acc.get(exp)
    acc[exp] = coef if cur is None else cur + coef


def _drop_zeros(terms):
    return {e: c for e, c in terms.items() if not c.is_zero()}


def _powers(x, n):
    out = [x.field.one]
    for _ in range(n):
        out.append(out[-1] * x)
    return out


def _shift_terms(terms, var, s):
    """Substitute variable ``var`` -> var + s."""
    if s.is_zero():
        return dict(terms)
    top = max((e[var] for e in terms), default=0)
    pw = _powers(s, top)
    acc = {}
    for e, c in terms.items():
        i = e[var]
        for k in range(i + 1):
            f = pw[i - k] * comb(i, k)
            ne = e[:var] + (k,) + e[var + 1:]
            _accumulate(acc, ne, c * f)
    return _drop_zeros(acc)


def _translate_terms(terms, shifts):
    for var, s in enumerate(shifts):
        terms = _shift_terms(terms, var, s)
    return terms


def _blowup_terms(terms, chart, center):
    """(x, y) -> (x, x*(y + center)); chart 'y' swaps x and y first."""
    if chart == "y":
        terms = {(e[1], e[0]): c for e, c in terms.items()}
    elif chart != "x":
        raise ValueError(f"unknown blow-up chart {chart!r}")
    acc = {}
    if center.is_zero():
        for (i, j), c in terms.items():
            _accumulate(acc, (i + j, j), c)
        return _drop_zeros(acc)
    top = max((e[1] for e in terms), default=0)
    pw = _powers(center, top)
    for (i, j), c in terms.items():
        for k in range(j + 1):
            _accumulate(acc, (i + j, k), c * (pw[j - k] * comb(j, k)))
    return _drop_zeros(acc)


def _split_x_power(terms, drop):
    """Divide by x^drop: returns (quotient terms, coefficients of the dropped terms)."""
    kept, dropped = {}, []
    for (i, j), c in terms.items():
        if i >= drop:
            kept[(i - drop, j)] = c
        else:
            dropped.append(((i, j), c))
    dropped.sort(key=lambda ec: grlex_key(ec[0]))
    return kept, [c for _, c in dropped]


def _dehomogenize_terms(terms, chart):
    keep = CHART_KEEP[chart]
    acc = {}
    for e, c in terms.items():
        _accumulate(acc, tuple(e[k] for k in keep), c)
    return _drop_zeros(acc)


# --- MultiPoly -----------------------------------------------------------------

class MultiPoly:
    """Sparse polynomial with FieldElement coefficients; immutable."""

    __slots__ = ("field", "variables", "terms")

    def __init__(self, field, variables, terms=None):
        self.field = field
        self.variables = tuple(variables)
        self.terms = _drop_zeros(terms or {})

    @classmethod
    def constant(cls, field, variables, value):
        n = len(variables)
        return cls(field, variables, {(0,) * n: field(value)})

    @classmethod
    def variable(cls, field, variables, index):
        e = [0] * len(variables)
        e[index] = 1
        return cls(field, variables, {tuple(e): field.one})

    @classmethod
    def plane(cls, field, terms):
        return cls(field, PLANE_VARS, terms)

    @property
    def nvars(self):
        return len(self.variables)

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def min_degree(self):
        return min(sum(e) for e in self.terms)

    def is_homogeneous(self):
        return len({sum(e) for e in self.terms}) <= 1

    def homogeneous_part(self, k):
        return self._new({e: c for e, c in self.terms.items() if sum(e) == k})

    def leading_monomial(self):
        if not self.terms:
            raise ZeroPolynomial("zero polynomial has no leading monomial")
        return max(self.terms, key=grlex_key)

    def leading_coefficient(self):
        return self.terms[self.leading_monomial()]

    def coefficient(self, exp):
        return self.terms.get(tuple(exp), self.field.zero)

    def degree_in(self, var):
        return max((e[var] for e in self.terms), default=-1)

    def _new(self, terms):
        return MultiPoly(self.field, self.variables, terms)

    def _check(self, other):
        if other.variables != self.variables:
            raise ValueError(f"variable mismatch: {self.variables} vs {other.variables}")

    def _lift(self, other):
        if isinstance(other, MultiPoly):
            self._check(other)
            return other
        return MultiPoly.constant(self.field, self.variables, other)

    def __add__(self, other):
        other = self._lift(other)
        acc = dict(self.terms)
        for e, c in other.terms.items():
            _accumulate(acc, e, c)
        return self._new(acc)

    __radd__ = __add__

    def __neg__(self):
        return self._new({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            s = self.field(other)
            return self._new({e: c * s for e, c in self.terms.items()})
        self._check(other)
        acc = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                _accumulate(acc, tuple(a + b for a, b in zip(e1, e2)), c1 * c2)
        return self._new(acc)

    __rmul__ = __mul__

    def __pow__(self, k):
        result = MultiPoly.constant(self.field, self.variables, 1)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.variables == other.variables and self.terms == other.terms
        if isinstance(other, int) and other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.variables, frozenset((e, c.c) for e, c in self.terms.items())))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda ec: grlex_key(ec[0]), reverse=True)

    def sort_key(self):
        return tuple((grlex_key(e), c.sort_key()) for e, c in self.sorted_terms())

    def evaluate(self, point):
        acc = self.field.zero
        for e, c in self.terms.items():
            t = c
            for x, k in zip(point, e):
                if k:
                    t = t * x ** k
            acc = acc + t
        return acc

    def translate(self, shifts):
        """f(v_0 + s_0, v_1 + s_1, ...)."""
        return self._new(_translate_terms(self.terms, [self.field(s) for s in shifts]))

    def dehomogenize(self, chart, variables=LOCAL_VARS):
        return MultiPoly(self.field, variables, _dehomogenize_terms(self.terms, chart))

    def swap_xy(self):
        return self._new({(e[1], e[0]): c for e, c in self.terms.items()})

    def binary_form_coefficients(self, k):
        """Coefficients of the degree-k part, as a polynomial in t = y/x (constant first)."""
        return tuple(self.terms.get((k - j, j), self.field.zero) for j in range(k + 1))

    def to_str(self, symbol=None):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                v if k == 1 else f"{v}^{k}" for v, k in zip(self.variables, e) if k
            )
            cs = c.to_str(symbol)
            neg = cs.startswith("-") and c.is_simple()
            mag = cs[1:] if neg else cs
            if not mono:
                body = mag if c.is_simple() else f"({mag})"
            elif mag == "1":
                body = mono
            elif c.is_simple():
                body = f"{mag}*{mono}"
            else:
                body = f"({mag})*{mono}"
            parts.append(("-" if neg else "+", body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += sign + body
        return out

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"MultiPoly({self.to_str()})"


def multiplicity_at_origin(f):
    """Order of vanishing at the origin: the least total degree of a term."""
    if f.is_zero():
        raise ZeroPolynomial("multiplicity of the zero polynomial")
    return f.min_degree()


def blowup_transform(f, chart, center, drop):
    """Virtual transform of a local equation through one blow-up.

    Substitutes (x, y) -> (x, x*(y + center)) (after swapping x and y when
    ``chart == 'y'``) and divides by x**drop. With ``drop`` equal to the
    multiplicity at the origin this is the strict transform, with the new
    exceptional line as {x = 0}.
    """
    if f.nvars != 2:
        raise ValueError("blow-up needs a bivariate local equation")
    center = f.field(center)
    terms = _blowup_terms(f.terms, chart, center)
    kept, dropped = _split_x_power(terms, drop)
    if dropped:
        raise InexactDivision(f"x^{drop} does not divide the substituted polynomial")
    return f._new(kept)


def divide_exact(num, den):
    """Return q with q*den == num, or None when den does not divide num."""
    q, r = divide_with_remainder(num, den, stop_on_remainder=True)
    return q if r is not None and r.is_zero() else None


def divide_with_remainder(f, g, stop_on_remainder=False):
    """Division by a single polynomial: f = q*g + r, no term of r divisible by lt(g).

    With ``stop_on_remainder`` the call returns (None, None) as soon as a
    nonzero remainder term appears.
    """
    if g.is_zero():
        raise ZeroPolynomial("division by the zero polynomial")
    f._check(g)
    lm = g.leading_monomial()
    inv = g.terms[lm].inverse()
    rest = [(e, c) for e, c in g.terms.items() if e != lm]
    work = dict(f.terms)
    quot, rem = {}, {}
    while work:
        e = max(work, key=grlex_key)
        c = work.pop(e)
        if all(a >= b for a, b in zip(e, lm)):
            shift = tuple(a - b for a, b in zip(e, lm))
            qc = c * inv
            quot[shift] = qc
            for ge, gc in rest:
                ne = tuple(a + b for a, b in zip(ge, shift))
                v = work.get(ne)
                nv = -(qc * gc) if v is None else v - qc * gc
                if nv.is_zero():
                    work.pop(ne, None)
                else:
                    work[ne] = nv
        else:
            if stop_on_remainder:
                return None, None
            rem[e] = c
    return f._new(quot), f._new(rem)


def canonical_form(f):
    """Scale f so its grlex-leading coefficient is 1."""
    if f.is_zero():
        raise ZeroPolynomial("canonical form of the zero polynomial")
    inv = f.leading_coefficient().inverse()
    return f._new({e: c * inv for e, c in f.terms.items()})


def exact_power_division(member, factor):
    """Largest k with factor^k | member, and the cofactor."""
    k = 0
    while True:
        q = divide_exact(member, factor)
        if q is None:
            return k, member
        member, k = q, k + 1


# --- LinCoeffPoly --------------------------------------------------------------

class LinCoeffPoly:
    """Polynomial whose coefficients are LinForms in ``n_unknowns`` unknowns."""

    __slots__ = ("field", "variables", "terms", "n_unknowns")

    def __init__(self, field, variables, terms, n_unknowns):
        self.field = field
        self.variables = tuple(variables)
        self.terms = _drop_zeros(terms)
        self.n_unknowns = n_unknowns

    @classmethod
    def generic_form(cls, field, degree, variables=PLANE_VARS):
        """sum u_k * m_k over the degree-``degree`` monomials m_k, grlex descending."""
        mons = monomials(len(variables), degree)
        n = len(mons)
        terms = {m: LinForm.unit(field, n, k) for k, m in enumerate(mons)}
        return cls(field, variables, terms, n), mons

    def _new(self, terms, variables=None):
        return LinCoeffPoly(self.field, variables or self.variables, terms, self.n_unknowns)

    def dehomogenize(self, chart, variables=LOCAL_VARS):
        return self._new(_dehomogenize_terms(self.terms, chart), variables)

    def translate(self, shifts):
        return self._new(_translate_terms(self.terms, [self.field(s) for s in shifts]))

    def blowup(self, chart, center, drop):
        """Virtual transform with prescribed drop.

        Returns (transform, conditions): the coefficients of the terms below
        x**drop, which must vanish for the division to be exact.
        """
        terms = _blowup_terms(self.terms, chart, self.field(center))
        kept, dropped = _split_x_power(terms, drop)
        return self._new(kept), dropped

    def conditions_below(self, order):
        """Linear forms attached to terms of total degree < order."""
        low = [(e, c) for e, c in self.terms.items() if sum(e) < order]
        low.sort(key=lambda ec: grlex_key(ec[0]))
        return [c for _, c in low]

    def specialize(self, values):
        """Substitute numbers for the unknowns."""
        vals = [self.field(v) for v in values]
        return MultiPoly(self.field, self.variables, {e: c.evaluate(vals) for e, c in self.terms.items()})
