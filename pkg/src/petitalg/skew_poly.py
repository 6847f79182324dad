"""Twisted polynomials K[t; sigma] with t*a = sigma(a)*t."""
import itertools
from functools import total_ordering

from . import literals
from .errors import PreconditionError, UnsupportedBackend
from .field_tower import FieldElement, GaussRat, _FieldDomain


@total_ordering
class _NegInf:
    """Degree of the zero polynomial. Compares below every int; no arithmetic."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return other is not self

    def __hash__(self):
        return hash("-inf")

    def __repr__(self):
        return "-inf"


NEG_INF = _NegInf()


class SkewPoly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs=()):
        self.field = field
        cs = [field(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def t(cls, field, power=1):
        return cls(field, [0] * power + [1])

    @classmethod
    def const(cls, field, c):
        return cls(field, [c])

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def coeff(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.field.zero

    def is_zero(self):
        return not self.coeffs

    def is_monic(self):
        return bool(self.coeffs) and self.lead == self.field.one

    def monic(self):
        """lead^-1 * self; S_f depends only on this normalisation."""
        if not self.coeffs:
            raise PreconditionError("the zero polynomial has no monic associate")
        inv = self.lead.inverse()
        return SkewPoly(self.field, [inv * c for c in self.coeffs])

    def _other(self, o):
        if isinstance(o, SkewPoly):
            if o.field != self.field:
                raise PreconditionError("polynomials over different extensions")
            return o
        if isinstance(o, (FieldElement, int, GaussRat)):
            return SkewPoly(self.field, [o])
        return NotImplemented

    def __add__(self, o):
        o = self._other(o)
        if o is NotImplemented:
            return o
        n = max(len(self.coeffs), len(o.coeffs))
        return SkewPoly(self.field, [self.coeff(i) + o.coeff(i) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return SkewPoly(self.field, [-c for c in self.coeffs])

    def __sub__(self, o):
        o = self._other(o)
        return o if o is NotImplemented else self + (-o)

    def __rsub__(self, o):
        return (-self).__add__(o)

    def __mul__(self, o):
        o = self._other(o)
        if o is NotImplemented:
            return o
        if not self.coeffs or not o.coeffs:
            return SkewPoly(self.field)
        E = self.field
        out = [E.zero] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(o.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * E.sigma_pow(i, b)
        return SkewPoly(E, out)

    def __rmul__(self, o):
        o = self._other(o)
        return o if o is NotImplemented else o * self

    def __truediv__(self, o):
        o = self._other(o)
        if o is NotImplemented:
            return o
        if o.degree != 0:
            raise ValueError("can only divide by a nonzero constant")
        return o.coeffs[0].inverse() * self

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise ValueError("polynomial powers must be non-negative integers")
        out = SkewPoly(self.field, [1])
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, o):
        if isinstance(o, SkewPoly):
            return self.field == o.field and self.coeffs == o.coeffs
        if isinstance(o, (FieldElement, int)):
            return self == SkewPoly(self.field, [o])
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def right_divmod(self, f):
        """(q, r) with self = q*f + r and deg r < deg f."""
        f = self._other(f)
        if f.is_zero():
            raise ZeroDivisionError("right division by the zero polynomial")
        E = self.field
        df = f.degree
        r = list(self.coeffs)
        q = [E.zero] * max(len(r) - df, 0)
        for d in range(len(r) - 1, df - 1, -1):
            c = r[d]
            if not c:
                continue
            s = d - df
            x = c / E.sigma_pow(s, f.lead)
            q[s] = x
            for i, fc in enumerate(f.coeffs):
                if fc:
                    r[s + i] = r[s + i] - x * E.sigma_pow(s, fc)
        return SkewPoly(E, q), SkewPoly(E, r[:df])

    def left_divmod(self, f):
        """(q, r) with self = f*q + r and deg r < deg f."""
        f = self._other(f)
        if f.is_zero():
            raise ZeroDivisionError("left division by the zero polynomial")
        E = self.field
        df = f.degree
        r = SkewPoly(E, self.coeffs)
        q = [E.zero] * max(len(r.coeffs) - df, 0)
        while not r.is_zero() and r.degree >= df:
            s = r.degree - df
            x = E.sigma_pow(-df, r.lead / f.lead)
            q[s] = x
            r = r - f * SkewPoly(E, [0] * s + [x])
        return SkewPoly(E, q), r

    def __mod__(self, f):
        return self.right_divmod(f)[1]

    def sort_key(self):
        return tuple(c.sort_key() for c in self.coeffs)

    def __repr__(self):
        return f"SkewPoly({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        one = self.field.one
        terms = []
        for i in reversed(range(len(self.coeffs))):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "t" if i == 1 else f"t^{i}"
            cs = str(c)
            if literals.is_compound(cs):
                cs = f"({cs})"
            if i == 0:
                terms.append(cs)
            elif c == one:
                terms.append(mono)
            elif c == -one:
                terms.append("-" + mono)
            else:
                terms.append(f"{cs}*{mono}")
        return literals.join_terms(terms)


class _PolyDomain(_FieldDomain):
    def number(self, n):
        return SkewPoly(self.field, [n])

    def symbol(self, name):
        if name == "t":
            return SkewPoly.t(self.field)
        return SkewPoly(self.field, [super().symbol(name)])

    def call(self, name, value):
        if value.degree not in (0, NEG_INF):
            raise ValueError(f"{name}() of a non-constant polynomial")
        return SkewPoly(self.field, [super().call(name, value.coeff(0))])


def parse_poly(field, text):
    """Read a literal such as ``t^2 + (g)*t + (g+1)``."""
    return literals.evaluate(text, _PolyDomain(field))


# ---------------------------------------------------------------------------
# operations

def mul(f, g):
    return f * g


def right_divmod(g, f):
    return g.right_divmod(f)


def left_divmod(g, f):
    return g.left_divmod(f)


def monic_polys(field, degree, lower=None):
    """All monic polynomials of the given degree over a finite field, in canonical order."""
    lower = field.elements() if lower is None else lower
    for cs in itertools.product(lower, repeat=degree):
        yield SkewPoly(field, list(cs) + [1])


def is_irreducible(f):
    """No factorisation f = g*h with 0 < deg h < deg f (exhaustive right-factor search)."""
    E = f.field
    m = f.degree
    if m == NEG_INF or m < 1:
        raise PreconditionError("irreducibility needs deg f >= 1")
    if m == 1:
        return True
    if E.backend != "finite":
        return _quadratic_deg2_irreducible(f)
    for d in range(1, m):
        for h in monic_polys(E, d):
            if f.right_divmod(h)[1].is_zero():
                return False
    return True


def _quadratic_deg2_irreducible(f):
    # f = t^2 + c t + e (monic) has a right factor t - b iff sigma(b) b + c b + e = 0.
    # With c = 0 that reads N(b) = -e, which has no solution when -e is not in F.
    if f.degree != 2:
        raise UnsupportedBackend("irreducibility over a number field is only decided in degree 2")
    f = f.monic()
    E = f.field
    c, e = f.coeff(1), f.coeff(0)
    if not c and not E.in_fixed_field(-e):
        return True
    raise UnsupportedBackend(
        "degree-2 irreducibility over a number field is only decided for t^2 - a with a outside F")


def is_invariant(f):
    """Rf is two-sided iff every nonzero a_i lies in F and sigma^m = sigma^i, i.e. n | m - i."""
    m = f.degree
    if m == NEG_INF or m < 2 or not f.is_monic():
        raise PreconditionError("is_invariant expects a monic polynomial of degree >= 2")
    E = f.field
    for i in range(m):
        a = f.coeff(i)
        if a and (not E.in_fixed_field(a) or (m - i) % E.n):
            return False
    return True


def is_invariant_oracle(f):
    """Check f*u in Rf for u in a prime-field basis of K and for u = t."""
    E = f.field
    if E.backend != "finite":
        raise UnsupportedBackend("is_invariant_oracle runs on finite fields")
    probes = [SkewPoly(E, [z]) for z in E.prime_basis] + [SkewPoly.t(E)]
    return all((f * u).right_divmod(f)[1].is_zero() for u in probes)
