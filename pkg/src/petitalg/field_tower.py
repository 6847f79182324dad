"""Cyclic Galois extensions K/F with a distinguished generator sigma.

Two backends:

* ``FiniteExtension(p, r, n)``: K = GF(p^(r n)) over F = GF(p^r), sigma(x) = x^(p^r).
  K is modelled as GF(p)[g]/(m(g)) with m the lexicographically smallest monic
  irreducible of degree r n; multiplication goes through log/antilog tables.
* ``QuadraticExtension(base, b)``: K = F(sqrt(b)) with F the rationals or the
  Gaussian rationals Q(i), sigma(sqrt(b)) = -sqrt(b).
"""
from fractions import Fraction
from functools import cached_property
from math import isqrt
from typing import NamedTuple

from . import literals
from .errors import ParseError, PreconditionError, ScaleError, UnsupportedBackend
from .linalg import PrimeField

DESK_SCALE = 2 ** 20


def is_prime(n):
    if n < 2:
        return False
    for d in range(2, isqrt(n) + 1):
        if n % d == 0:
            return False
    return True


def prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# polynomials over GF(p), coefficient lists with the constant term first

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a, m, p):
    a = list(a)
    inv = pow(m[-1], -1, p)
    dm = len(m) - 1
    while len(_trim(a)) - 1 >= dm:
        c = a[-1] * inv % p
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
    return a


def _pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _psub(a, b, p):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim([(x - y) % p for x, y in zip(a, b)])


def _pgcd(a, b, p):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _ppowmod(base, e, m, p):
    result = [1]
    base = _pmod(base, m, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), m, p)
        base = _pmod(_pmul(base, base, p), m, p)
        e >>= 1
    return result


def is_irreducible_mod_p(poly, p):
    """Ben-Or test: no irreducible factor of degree k <= deg/2."""
    d = len(poly) - 1
    if d <= 0:
        return False
    if d == 1:
        return True
    x = [0, 1]
    xp = x
    for _ in range(1, d // 2 + 1):
        xp = _ppowmod(xp, p, poly, p)
        if len(_pgcd(poly, _psub(xp, x, p), p)) > 1:
            return False
    return True


def smallest_irreducible(p, d):
    """Monic irreducible of degree d, smallest in lexicographic order of (c_{d-1}, ..., c_0)."""
    for v in range(p ** d):
        digits = [(v // p ** (d - 1 - i)) % p for i in range(d)]  # c_{d-1} first
        poly = list(reversed(digits)) + [1]
        if is_irreducible_mod_p(poly, p):
            return poly
    raise AssertionError("no irreducible polynomial found")  # unreachable


# ---------------------------------------------------------------------------
# Gaussian rationals (also used, with zero imaginary part, for plain Q)

class GaussRat:
    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @classmethod
    def coerce(cls, x):
        if isinstance(x, GaussRat):
            return x
        if isinstance(x, (int, Fraction)):
            return cls(x)
        return NotImplemented

    def __add__(self, o):
        o = GaussRat.coerce(o)
        if o is NotImplemented:
            return o
        return GaussRat(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussRat(-self.re, -self.im)

    def __sub__(self, o):
        o = GaussRat.coerce(o)
        if o is NotImplemented:
            return o
        return GaussRat(self.re - o.re, self.im - o.im)

    def __rsub__(self, o):
        return -self + o

    def __mul__(self, o):
        o = GaussRat.coerce(o)
        if o is NotImplemented:
            return o
        return GaussRat(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def conj(self):
        return GaussRat(self.re, -self.im)

    def abs2(self):
        return self.re * self.re + self.im * self.im

    def inverse(self):
        n = self.abs2()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        return GaussRat(self.re / n, -self.im / n)

    def __truediv__(self, o):
        o = GaussRat.coerce(o)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, o):
        return GaussRat.coerce(o) * self.inverse()

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        out, base = GaussRat(1), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, o):
        o = GaussRat.coerce(o)
        if o is NotImplemented:
            return False
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im)) if self.im else hash(self.re)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __repr__(self):
        return f"GaussRat({self})"

    def __str__(self):
        terms = []
        if self.re:
            terms.append(str(self.re))
        if self.im:
            if self.im == 1:
                terms.append("i")
            elif self.im == -1:
                terms.append("-i")
            else:
                terms.append(f"{self.im}*i")
        return literals.join_terms(terms)


def _rational_sqrt(q):
    """Exact square root of a non-negative rational, or None."""
    q = Fraction(q)
    if q < 0:
        return None
    a, b = isqrt(q.numerator), isqrt(q.denominator)
    if a * a == q.numerator and b * b == q.denominator:
        return Fraction(a, b)
    return None


def gauss_sqrt(z, gaussian):
    """A square root of z in Q (or Q(i) when ``gaussian``), or None if z is not a square."""
    z = GaussRat.coerce(z)
    if not gaussian:
        if z.im:
            raise PreconditionError("non-real element in Q")
        r = _rational_sqrt(z.re)
        return None if r is None else GaussRat(r)
    if z.im == 0:
        r = _rational_sqrt(z.re)
        if r is not None:
            return GaussRat(r)
        r = _rational_sqrt(-z.re)
        return None if r is None else GaussRat(0, r)
    norm = _rational_sqrt(z.abs2())
    if norm is None:
        return None
    x = _rational_sqrt((norm + z.re) / 2)
    if x is None or x == 0:
        return None
    root = GaussRat(x, z.im / (2 * x))
    return root if root * root == z else None


# ---------------------------------------------------------------------------
# elements

class FieldElement:
    """Shared operator plumbing; subclasses implement _add/_mul/_neg/inverse."""

    __slots__ = ("field",)

    def _other(self, o):
        if isinstance(o, FieldElement):
            if o.field != self.field:
                raise PreconditionError("elements of different fields")
            return o
        if isinstance(o, (int, Fraction, GaussRat)):
            return self.field(o)
        return NotImplemented

    def __add__(self, o):
        o = self._other(o)
        return o if o is NotImplemented else self._add(o)

    def __radd__(self, o):
        return self.__add__(o)

    def __sub__(self, o):
        o = self._other(o)
        return o if o is NotImplemented else self._add(-o)

    def __rsub__(self, o):
        return (-self).__add__(o)

    def __mul__(self, o):
        o = self._other(o)
        return o if o is NotImplemented else self._mul(o)

    def __rmul__(self, o):
        return self.__mul__(o)

    def __truediv__(self, o):
        o = self._other(o)
        return o if o is NotImplemented else self._mul(o.inverse())

    def __rtruediv__(self, o):
        return self._other(o)._mul(self.inverse())

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        out, base = self.field.one, self
        while e:
            if e & 1:
                out = out._mul(base)
            base = base._mul(base)
            e >>= 1
        return out

    def sigma(self, j=1):
        return self.field.sigma_pow(j, self)

    def __repr__(self):
        return f"{type(self).__name__}({self})"


class GFElement(FieldElement):
    __slots__ = ("code",)

    def __init__(self, field, code):
        self.field = field
        self.code = code

    def _add(self, o):
        return GFElement(self.field, self.field._add_codes(self.code, o.code))

    def __neg__(self):
        return GFElement(self.field, self.field._neg_code(self.code))

    def _mul(self, o):
        f = self.field
        if self.code == 0 or o.code == 0:
            return f.zero
        return GFElement(f, f._exp[(f._log[self.code] + f._log[o.code]) % (f.q - 1)])

    def inverse(self):
        f = self.field
        if self.code == 0:
            raise ZeroDivisionError("inverse of zero")
        return GFElement(f, f._exp[(-f._log[self.code]) % (f.q - 1)])

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        f = self.field
        if self.code == 0:
            if e < 0:
                raise ZeroDivisionError("inverse of zero")
            return f.one if e == 0 else f.zero
        return GFElement(f, f._exp[(f._log[self.code] * e) % (f.q - 1)])

    def __eq__(self, o):
        if isinstance(o, GFElement):
            return self.code == o.code and self.field == o.field
        if isinstance(o, int):
            return self == self.field(o)
        return NotImplemented

    def __hash__(self):
        return hash(self.code)

    def __bool__(self):
        return self.code != 0

    def sort_key(self):
        return self.code

    def coords(self):
        return self.field.digits(self.code)

    def __str__(self):
        f = self.field
        digits = f.digits(self.code)
        terms = []
        for i in reversed(range(len(digits))):
            c = digits[i]
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
                continue
            mono = "g" if i == 1 else f"g^{i}"
            terms.append(mono if c == 1 else f"{c}*{mono}")
        return literals.join_terms(terms)


class QuadElement(FieldElement):
    """x + y*sqrt(b) with x, y in the base field."""

    __slots__ = ("x", "y")

    def __init__(self, field, x, y):
        self.field = field
        self.x = GaussRat.coerce(x)
        self.y = GaussRat.coerce(y)

    def _add(self, o):
        return QuadElement(self.field, self.x + o.x, self.y + o.y)

    def __neg__(self):
        return QuadElement(self.field, -self.x, -self.y)

    def _mul(self, o):
        b = self.field.b
        return QuadElement(self.field, self.x * o.x + self.y * o.y * b, self.x * o.y + self.y * o.x)

    def conj(self):
        return QuadElement(self.field, self.x, -self.y)

    def inverse(self):
        n = self.x * self.x - self.field.b * self.y * self.y
        if not n:
            raise ZeroDivisionError("inverse of zero")
        inv = n.inverse()
        return QuadElement(self.field, self.x * inv, -self.y * inv)

    def __eq__(self, o):
        if isinstance(o, QuadElement):
            return self.x == o.x and self.y == o.y and self.field == o.field
        if isinstance(o, (int, Fraction, GaussRat)):
            return self == self.field(o)
        return NotImplemented

    def __hash__(self):
        return hash((self.x, self.y))

    def __bool__(self):
        return bool(self.x) or bool(self.y)

    def coords(self):
        if self.field.gaussian:
            return (self.x.re, self.x.im, self.y.re, self.y.im)
        return (self.x.re, self.y.re)

    def sort_key(self):
        return self.coords()

    def __str__(self):
        terms = []
        if self.x:
            terms.append(str(self.x))
        if self.y:
            root = f"sqrt({self.field.b})"
            ys = str(self.y)
            if self.y == 1:
                terms.append(root)
            elif self.y == -1:
                terms.append("-" + root)
            elif literals.is_compound(ys):
                terms.append(f"({ys})*{root}")
            else:
                terms.append(f"{ys}*{root}")
        return literals.join_terms(terms)


class RootOfUnity(NamedTuple):
    value: FieldElement
    primitive: bool


# ---------------------------------------------------------------------------
# extensions

class GaloisExtension:
    """K/F cyclic of order n, Gal(K/F) generated by sigma."""

    backend = None
    n = None

    # -- subclass interface --------------------------------------------------
    def __call__(self, value):
        raise NotImplementedError

    def sigma_pow(self, j, x):
        raise NotImplementedError

    # -- shared ----------------------------------------------------------------
    @cached_property
    def zero(self):
        return self(0)

    @cached_property
    def one(self):
        return self(1)

    def norm(self, x):
        out = x
        for j in range(1, self.n):
            out = out * self.sigma_pow(j, x)
        return out

    def in_fixed_field(self, x, j=1):
        return self.sigma_pow(j, x) == x

    def roots_of_unity_in_F(self, s):
        if s < 1:
            raise PreconditionError("s must be positive")
        roots = [x for x in self._fixed_units() if x ** s == self.one]
        return [RootOfUnity(x, multiplicative_order(x) == s) for x in roots]

    def check_hilbert90(self, k, c):
        return bool(c) and c.inverse() * self.sigma_pow(1, c) == k

    def parse(self, text):
        if isinstance(text, FieldElement):
            return text
        if isinstance(text, int):
            return self(text)
        return literals.evaluate(str(text), _FieldDomain(self))

    @property
    def prime_field(self):
        return PrimeField(self.p if self.backend == "finite" else None)

    def from_coords(self, coords):
        raise NotImplementedError

    def __repr__(self):
        return f"{type(self).__name__}({self.descriptor()})"


class FiniteExtension(GaloisExtension):
    backend = "finite"

    def __init__(self, p, r, n):
        if not (isinstance(p, int) and is_prime(p)):
            raise PreconditionError(f"p={p} is not prime")
        if r < 1 or n < 1:
            raise PreconditionError("r and n must be positive")
        if p ** (r * n) > DESK_SCALE:
            raise ScaleError(f"|K| = {p}^{r * n} exceeds the desk-scale bound 2^20")
        self.p, self.r, self.n = p, r, n
        self.N = r * n
        self.q = p ** self.N
        self.qF = p ** r
        self.modulus = smallest_irreducible(p, self.N)
        self._build_tables()
        self._frob = [pow(self.qF, j, self.q - 1) for j in range(n)]

    def _build_tables(self):
        p, q, m = self.p, self.q, self.modulus
        target = q - 1
        factors = prime_factors(target) if target > 1 else []
        gamma = None
        for code in range(1, q):
            poly = self._poly(code)
            if all(_ppowmod(poly, target // l, m, p) != [1] for l in factors):
                gamma = poly
                break
        exp = [0] * max(target, 1)
        log = [-1] * q
        cur = [1]
        for e in range(target):
            c = self._code(cur)
            exp[e] = c
            log[c] = e
            cur = _pmod(_pmul(cur, gamma, p), m, p)
        self._exp, self._log = exp, log

    def _poly(self, code):
        return _trim(list(self.digits(code)))

    def _code(self, poly):
        return sum(c * self.p ** i for i, c in enumerate(poly))

    def digits(self, code):
        p = self.p
        out = []
        for _ in range(self.N):
            code, d = divmod(code, p)
            out.append(d)
        return tuple(out)

    def _add_codes(self, a, b):
        if self.p == 2:
            return a ^ b
        p, res, mult = self.p, 0, 1
        for _ in range(self.N):
            res += ((a % p + b % p) % p) * mult
            a //= p
            b //= p
            mult *= p
        return res

    def _neg_code(self, a):
        if self.p == 2:
            return a
        p, res, mult = self.p, 0, 1
        for _ in range(self.N):
            res += ((-a) % p) * mult
            a //= p
            mult *= p
        return res

    def __call__(self, value):
        if isinstance(value, GFElement):
            if value.field != self:
                raise PreconditionError("element of a different field")
            return value
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ZeroDivisionError("denominator divisible by p")
            return GFElement(self, value.numerator % self.p) / GFElement(self, value.denominator % self.p)
        if isinstance(value, int):
            return GFElement(self, value % self.p)
        if isinstance(value, str):
            return self.parse(value)
        raise TypeError(f"cannot convert {value!r} into {self}")

    def element(self, code):
        if not 0 <= code < self.q:
            raise ValueError("code out of range")
        return GFElement(self, code)

    def from_coords(self, coords):
        return GFElement(self, self._code([int(c) % self.p for c in coords]))

    @property
    def generator(self):
        """The class of the indeterminate g (a root of the modulus)."""
        return self.from_coords([0, 1] + [0] * (self.N - 2)) if self.N > 1 else self(-self.modulus[0])

    @cached_property
    def primitive_element(self):
        return GFElement(self, self._exp[1 % (self.q - 1)]) if self.q > 2 else self.one

    def __eq__(self, other):
        return isinstance(other, FiniteExtension) and (self.p, self.r, self.n) == (other.p, other.r, other.n)

    def __hash__(self):
        return hash(("finite", self.p, self.r, self.n))

    def sigma_pow(self, j, x):
        x = self(x)
        if x.code == 0:
            return x
        e = self._frob[j % self.n]
        return GFElement(self, self._exp[(self._log[x.code] * e) % (self.q - 1)])

    def elements(self):
        return [GFElement(self, c) for c in range(self.q)]

    def units(self):
        return [GFElement(self, c) for c in range(1, self.q)]

    def _fixed_units(self):
        step = (self.q - 1) // (self.qF - 1)
        return sorted((GFElement(self, self._exp[e]) for e in range(0, self.q - 1, step)),
                      key=lambda x: x.code)

    def fixed_field_elements(self):
        return [self.zero] + self._fixed_units()

    def kernel_of_norm(self):
        ker = [x for x in self.units() if self.norm(x) == self.one]
        expected = (self.q - 1) // (self.qF - 1)
        if len(ker) != expected:
            raise AssertionError(f"norm kernel has {len(ker)} elements, expected {expected}")
        return ker

    def solve_hilbert90(self, k):
        k = self(k)
        if self.norm(k) != self.one:
            raise PreconditionError(f"N({k}) != 1; no solution of k = c^-1 sigma(c)")
        for c in self.units():
            if self.check_hilbert90(k, c):
                return c
        raise AssertionError("Hilbert 90 search failed")  # unreachable by Hilbert 90

    # prime-field structure
    @property
    def prime_dim(self):
        return self.N

    @property
    def fixed_prime_dim(self):
        return self.r

    @cached_property
    def prime_basis(self):
        return [self.from_coords([1 if i == s else 0 for i in range(self.N)]) for s in range(self.N)]

    @cached_property
    def fixed_prime_basis(self):
        """A GF(p)-basis of F: powers of a generator of F over GF(p)."""
        if self.r == 1:
            return [self.one]
        theta = self.primitive_element ** ((self.q - 1) // (self.qF - 1))
        return [theta ** s for s in range(self.r)]

    def descriptor(self):
        return {"backend": "finite", "p": self.p, "r": self.r, "n": self.n}

    def __str__(self):
        if self.r == 1:
            return f"GF({self.q})/GF({self.p})"
        return f"GF({self.q})/GF({self.qF})"


QUADRATIC_BASES = {
    "rationals": "rationals", "Q": "rationals", "QQ": "rationals",
    "gaussian-rationals": "gaussian-rationals", "Q(i)": "gaussian-rationals",
    "QQi": "gaussian-rationals", "gaussian": "gaussian-rationals",
}


class QuadraticExtension(GaloisExtension):
    backend = "quadratic"
    n = 2

    def __init__(self, base, b):
        if base not in QUADRATIC_BASES:
            raise PreconditionError(f"unknown base field {base!r}")
        self.base = QUADRATIC_BASES[base]
        self.gaussian = self.base == "gaussian-rationals"
        if isinstance(b, str):
            b = parse_base_element(b, self.gaussian)
        b = GaussRat.coerce(b)
        if b is NotImplemented:
            raise PreconditionError("b must be a base-field element")
        if b.im and not self.gaussian:
            raise PreconditionError("b must be rational")
        if gauss_sqrt(b, self.gaussian) is not None:
            raise PreconditionError(f"b = {b} is a square in the base field; extension is degenerate")
        self.b = b

    def __eq__(self, other):
        return isinstance(other, QuadraticExtension) and (self.base, self.b) == (other.base, other.b)

    def __hash__(self):
        return hash(("quadratic", self.base, self.b))

    def __call__(self, value):
        if isinstance(value, QuadElement):
            if value.field != self:
                raise PreconditionError("element of a different field")
            return value
        if isinstance(value, (int, Fraction)):
            return QuadElement(self, value, 0)
        if isinstance(value, GaussRat):
            if value.im and not self.gaussian:
                raise PreconditionError("i is not in the base field Q")
            return QuadElement(self, value, 0)
        if isinstance(value, str):
            return self.parse(value)
        raise TypeError(f"cannot convert {value!r} into {self}")

    def element(self, x, y=0):
        return QuadElement(self, x, y)

    @property
    def sqrt_b(self):
        return QuadElement(self, 0, 1)

    @property
    def i(self):
        if not self.gaussian:
            raise PreconditionError("i is not in Q")
        return QuadElement(self, GaussRat(0, 1), 0)

    def sigma_pow(self, j, x):
        x = self(x)
        return x.conj() if j % 2 else x

    def _fixed_units(self):
        cands = [self(1), self(-1)]
        if self.gaussian:
            cands += [self.i, -self.i]
        return cands

    def kernel_of_norm(self):
        raise UnsupportedBackend("ker(N) is infinite over a number field")

    def solve_hilbert90(self, k):
        k = self(k)
        if self.norm(k) != self.one:
            raise PreconditionError(f"N({k}) != 1; no solution of k = c^-1 sigma(c)")
        if k == self.one:
            return self.one
        c = self.one + self.sigma_pow(1, k)
        if not c:
            c = self.sqrt_b
        if not self.check_hilbert90(k, c):
            raise AssertionError("constructive Hilbert 90 failed verification")
        return c

    @property
    def prime_dim(self):
        return 4 if self.gaussian else 2

    @property
    def fixed_prime_dim(self):
        return 2 if self.gaussian else 1

    @cached_property
    def prime_basis(self):
        if self.gaussian:
            i = GaussRat(0, 1)
            return [self.element(1), self.element(i), self.element(0, 1), self.element(0, i)]
        return [self.element(1), self.element(0, 1)]

    @cached_property
    def fixed_prime_basis(self):
        return [self.one, self.i] if self.gaussian else [self.one]

    def from_coords(self, coords):
        if self.gaussian:
            a, b, c, d = coords
            return QuadElement(self, GaussRat(a, b), GaussRat(c, d))
        a, c = coords
        return QuadElement(self, a, c)

    def descriptor(self):
        return {"backend": "quadratic", "base": self.base, "b": str(self.b)}

    def __str__(self):
        base = "Q(i)" if self.gaussian else "Q"
        return f"{base}(sqrt({self.b}))/{base}"


def multiplicative_order(x):
    if not x:
        raise PreconditionError("zero has no multiplicative order")
    one = x.field.one
    y, k = x, 1
    while y != one:
        y = y * x
        k += 1
        if k > 10 ** 7:
            raise PreconditionError(f"{x} has infinite order")
    return k


# ---------------------------------------------------------------------------
# literal domains

class _FieldDomain:
    def __init__(self, field):
        self.field = field

    def number(self, n):
        return self.field(n)

    def symbol(self, name):
        f = self.field
        if f.backend == "finite" and name == "g":
            return f.generator
        if f.backend == "quadratic" and name == "i" and f.gaussian:
            return f.i
        raise KeyError(name)

    def call(self, name, value):
        f = self.field
        if name == "sqrt" and f.backend == "quadratic":
            if value.y or value.x != f.b:
                raise ValueError(f"only sqrt({f.b}) is available in {f}")
            return f.sqrt_b
        raise KeyError(name)


class _BaseDomain:
    def __init__(self, gaussian):
        self.gaussian = gaussian

    def number(self, n):
        return GaussRat(n)

    def symbol(self, name):
        if name == "i" and self.gaussian:
            return GaussRat(0, 1)
        raise KeyError(name)

    def call(self, name, value):
        raise KeyError(name)


def parse_base_element(text, gaussian=True):
    return literals.evaluate(text, _BaseDomain(gaussian))


# ---------------------------------------------------------------------------
# public operations

def make_finite_extension(p, r, n):
    return FiniteExtension(p, r, n)


def make_quadratic_extension(base, b):
    return QuadraticExtension(base, b)


def sigma_pow(E, j, x):
    return E.sigma_pow(j, x)


def norm(E, x):
    return E.norm(E(x))


def kernel_of_norm(E):
    return E.kernel_of_norm()


def roots_of_unity_in_F(E, s):
    return E.roots_of_unity_in_F(s)


def solve_hilbert90(E, k):
    return E.solve_hilbert90(k)


def in_fixed_field(E, x, j=1):
    return E.in_fixed_field(E(x), j)


def field_from_descriptor(desc):
    """Inverse of ``E.descriptor()``."""
    backend = desc.get("backend")
    if backend == "finite":
        return FiniteExtension(int(desc["p"]), int(desc["r"]), int(desc["n"]))
    if backend == "quadratic":
        return QuadraticExtension(desc["base"], str(desc["b"]))
    raise PreconditionError(f"unknown backend {backend!r}")


def parse_field_spec(text):
    """CLI form: ``finite:p,r,n`` or ``quadratic:base,b``."""
    kind, _, rest = text.partition(":")
    parts = [s.strip() for s in rest.split(",")]
    try:
        if kind == "finite" and len(parts) == 3:
            return FiniteExtension(*(int(s) for s in parts))
        if kind == "quadratic" and len(parts) == 2:
            return QuadraticExtension(parts[0], parts[1])
    except ValueError as exc:
        if isinstance(exc, (PreconditionError, ParseError)):
            raise
        raise ParseError(f"bad field parameters in {text!r}: {exc}") from None
    raise ParseError(f"field must look like finite:p,r,n or quadratic:base,b, got {text!r}", text, 0)

