"""Petit algebras S_f = K[t;sigma]/K[t;sigma]f on polynomials of degree < m.

Multiplication is ``g o h = g*h mod_r f``. Structural questions (nuclei,
center, associativity, zero divisors) are answered by exact linear algebra
over the prime field, using the structure constants of S_f in the basis
``beta_s t^i`` where ``beta_s`` runs over a prime-field basis of K.
"""
from functools import cached_property

import numpy as np

from .errors import ConsistencyError, PreconditionError, ScaleError, UnsupportedBackend
from .field_tower import FieldElement, GaussRat
from .linalg import all_vectors, batched_rank_mod_p, nullspace, rank, row_space
from .skew_poly import NEG_INF, SkewPoly, is_invariant, is_irreducible, parse_poly

DIVISION_SCAN_BOUND = 2 ** 16


class AlgebraElement:
    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra, coeffs):
        E = algebra.field
        cs = [E(c) for c in coeffs]
        if len(cs) > algebra.m:
            raise PreconditionError(f"element needs at most {algebra.m} coefficients")
        cs += [E.zero] * (algebra.m - len(cs))
        self.algebra = algebra
        self.coeffs = tuple(cs)

    def _other(self, o):
        if isinstance(o, AlgebraElement):
            if o.algebra != self.algebra:
                raise PreconditionError("elements of different algebras")
            return o
        if isinstance(o, (FieldElement, int, GaussRat)):
            return AlgebraElement(self.algebra, [o])
        return NotImplemented

    def __add__(self, o):
        o = self._other(o)
        if o is NotImplemented:
            return o
        return AlgebraElement(self.algebra, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement(self.algebra, [-a for a in self.coeffs])

    def __sub__(self, o):
        o = self._other(o)
        return o if o is NotImplemented else self + (-o)

    def __rsub__(self, o):
        return (-self).__add__(o)

    def __mul__(self, o):
        o = self._other(o)
        return o if o is NotImplemented else self.algebra.multiply(self, o)

    def __rmul__(self, o):
        o = self._other(o)
        return o if o is NotImplemented else self.algebra.multiply(o, self)

    def __eq__(self, o):
        if isinstance(o, AlgebraElement):
            return self.algebra == o.algebra and self.coeffs == o.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def is_zero(self):
        return not any(self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def poly(self):
        return SkewPoly(self.algebra.field, self.coeffs)

    def coords(self):
        return self.algebra.to_coords(self)

    def __str__(self):
        return str(self.poly())

    def __repr__(self):
        return f"AlgebraElement({self})"


class Subspace:
    """An F-subspace of S_f, stored as an rref prime-field basis."""

    def __init__(self, algebra, prime_rows):
        self.algebra = algebra
        pf = algebra.prime_field
        rows = np.asarray(prime_rows)
        if rows.size == 0:
            rows = pf.zeros((0, algebra.prime_dim))
        self.rows = row_space(rows, pf)

    @property
    def prime_dim(self):
        return self.rows.shape[0]

    @property
    def dim(self):
        """Dimension over F."""
        r = self.algebra.field.fixed_prime_dim
        if self.prime_dim % r:
            raise ConsistencyError("subspace is not closed under F")
        return self.prime_dim // r

    def contains(self, x):
        A = self.algebra
        v = A.to_coords(x)
        if self.prime_dim == 0:
            return not np.any(v != 0)
        return rank(np.vstack([self.rows, v[None, :]]), A.prime_field) == self.prime_dim

    def __contains__(self, x):
        return self.contains(x)

    def __le__(self, other):
        return all(other.contains(self.algebra.from_coords(r)) for r in self.rows)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.rows.shape == other.rows.shape and bool(np.all(self.rows == other.rows))

    def __hash__(self):
        return hash(tuple(self.rows.flatten()))

    @cached_property
    def basis(self):
        """A basis over F, picked greedily from the prime-field basis."""
        A = self.algebra
        pf = A.prime_field
        thetas = A.field.fixed_prime_basis
        chosen = []
        span = pf.zeros((0, A.prime_dim))
        for row in self.rows:
            if span.shape[0] and rank(np.vstack([span, row[None, :]]), pf) == span.shape[0]:
                continue
            x = A.from_coords(row)
            chosen.append(x)
            extra = np.array([A.to_coords(A.scale(th, x)) for th in thetas])
            span = row_space(np.vstack([span, extra]), pf)
        return chosen

    def __repr__(self):
        return f"Subspace(dim={self.dim}, basis={[str(b) for b in self.basis]})"


class PetitAlgebra:
    def __init__(self, f, field=None):
        if isinstance(f, str):
            if field is None:
                raise PreconditionError("a polynomial literal needs a field")
            f = parse_poly(field, f)
        if not isinstance(f, SkewPoly):
            raise PreconditionError("f must be a SkewPoly")
        if f.degree == NEG_INF or f.degree < 2:
            raise PreconditionError("S_f needs deg f >= 2")
        if f.field.n < 2:
            raise PreconditionError("sigma must not be the identity")
        self.field = f.field
        self.f = f.monic()
        self.m = self.f.degree
        self.n = self.field.n

    def __eq__(self, other):
        return isinstance(other, PetitAlgebra) and self.f == other.f

    def __hash__(self):
        return hash(("S_f", self.f))

    def __repr__(self):
        return f"PetitAlgebra({self.f} over {self.field})"

    @property
    def a(self):
        """Coefficients a_i of f = t^m - sum a_i t^i."""
        return [-self.f.coeff(i) for i in range(self.m)]

    @property
    def dim(self):
        return self.n * self.m

    @property
    def prime_field(self):
        return self.field.prime_field

    @property
    def prime_dim(self):
        return self.field.prime_dim * self.m

    # -- elements ---------------------------------------------------------------
    def element(self, coeffs):
        return AlgebraElement(self, coeffs)

    def parse(self, text):
        p = parse_poly(self.field, text)
        if p.degree != NEG_INF and p.degree >= self.m:
            raise PreconditionError(f"{text!r} has degree >= m = {self.m}")
        return AlgebraElement(self, p.coeffs)

    def from_poly(self, p):
        if p.degree != NEG_INF and p.degree >= self.m:
            p = p.right_divmod(self.f)[1]
        return AlgebraElement(self, p.coeffs)

    @cached_property
    def one(self):
        return AlgebraElement(self, [1])

    @cached_property
    def zero(self):
        return AlgebraElement(self, [])

    @cached_property
    def t(self):
        return AlgebraElement(self, [0, 1])

    def t_power(self, i):
        return AlgebraElement(self, [0] * i + [1])

    def constant(self, c):
        return AlgebraElement(self, [c])

    def scale(self, c, x):
        """Left multiplication by a constant c of K (coefficientwise)."""
        return AlgebraElement(self, [c * xi for xi in x.coeffs])

    @cached_property
    def prime_basis(self):
        E = self.field
        return [AlgebraElement(self, [0] * i + [b]) for i in range(self.m) for b in E.prime_basis]

    def to_coords(self, x):
        out = []
        for c in x.coeffs:
            out.extend(c.coords())
        return self.prime_field.array(out)

    def from_coords(self, vec):
        d = self.field.prime_dim
        return AlgebraElement(self, [self.field.from_coords(vec[i * d:(i + 1) * d]) for i in range(self.m)])

    def elements(self):
        """Every element of a finite S_f, in coordinate counting order."""
        if self.field.backend != "finite":
            raise UnsupportedBackend("S_f is infinite over a number field")
        return [self.from_coords(v) for v in all_vectors(self.field.p, self.prime_dim)]

    # -- multiplication -----------------------------------------------------------
    def multiply(self, x, y):
        if x.algebra != self or y.algebra != self:
            raise PreconditionError("elements of a different algebra")
        return AlgebraElement(self, (x.poly() * y.poly()).right_divmod(self.f)[1].coeffs)

    def associator(self, x, y, z):
        return self.multiply(self.multiply(x, y), z) - self.multiply(x, self.multiply(y, z))

    @cached_property
    def structure_constants(self):
        """C[i, j, :] = coordinates of e_i o e_j."""
        B = self.prime_basis
        D = len(B)
        C = self.prime_field.zeros((D, D, D))
        for i, x in enumerate(B):
            for j, y in enumerate(B):
                C[i, j] = self.to_coords(self.multiply(x, y))
        return C

    def product_coords(self, X, Y):
        """Batched products of coordinate rows X[n] o Y[n]."""
        pf = self.prime_field
        return pf.reduce(np.einsum("nj,njk->nk", Y, pf.einsum("ni,ijk->njk", X, self.structure_constants)))

    @cached_property
    def associator_tensor(self):
        """T[i, j, k, :] = coordinates of [e_i, e_j, e_k]."""
        C = self.structure_constants
        pf = self.prime_field
        left = pf.einsum("ijl,lkm->ijkm", C, C)
        right = pf.einsum("jkl,ilm->ijkm", C, C)
        return pf.reduce(left - right)

    # -- structure ----------------------------------------------------------------
    def _kernel_subspace(self, M):
        return Subspace(self, nullspace(M, self.prime_field))

    def _slot_conditions(self, slot):
        T = self.associator_tensor
        D = self.prime_dim
        order = {"left": (1, 2, 3, 0), "middle": (0, 2, 3, 1), "right": (0, 1, 3, 2)}[slot]
        return T.transpose(order).reshape(-1, D)

    def nucleus_left(self):
        return self._kernel_subspace(self._slot_conditions("left"))

    def nucleus_middle(self):
        return self._kernel_subspace(self._slot_conditions("middle"))

    def nucleus_right(self):
        return self._kernel_subspace(self._slot_conditions("right"))

    def nucleus(self):
        return self._kernel_subspace(np.vstack([self._slot_conditions(s) for s in ("left", "middle", "right")]))

    def nucleus_right_eigen(self):
        """{g : deg g < m, f*g in Rf}, from right division alone."""
        f = self.f
        cols = [self.to_coords(AlgebraElement(self, (f * e.poly()).right_divmod(f)[1].coeffs))
                for e in self.prime_basis]
        return self._kernel_subspace(np.array(cols).T)

    def _commutator_conditions(self, unknowns):
        C = self.structure_constants
        D = self.prime_dim
        comm = self.prime_field.reduce(C[:unknowns, :, :] - C[:, :unknowns, :].transpose(1, 0, 2))
        return comm.transpose(1, 2, 0).reshape(-1, unknowns), D

    def center(self):
        comm, _ = self._commutator_conditions(self.prime_dim)
        rows = [self._slot_conditions(s) for s in ("left", "middle", "right")] + [comm]
        return self._kernel_subspace(np.vstack(rows))

    def F0(self):
        """{a in K : a h = h a for all h}, as a subspace of the constants."""
        d = self.field.prime_dim
        comm, D = self._commutator_conditions(d)
        ker = nullspace(comm, self.prime_field)
        pf = self.prime_field
        rows = pf.zeros((ker.shape[0], D))
        rows[:, :d] = ker
        sub = Subspace(self, rows)
        if self.a[0]:
            if sub != self.image_of_F():
                raise ConsistencyError("a_0 != 0 but F_0 differs from F")
        return sub

    def image_of_K(self):
        return Subspace(self, np.array([self.to_coords(e) for e in self.prime_basis[:self.field.prime_dim]]))

    def image_of_F(self):
        return Subspace(self, np.array([self.to_coords(self.constant(c)) for c in self.field.fixed_prime_basis]))

    def is_associative(self):
        return not np.any(self.associator_tensor != 0)

    def is_invariant(self):
        return is_invariant(self.f)

    def is_irreducible(self):
        return is_irreducible(self.f)

    def powers_of_t_associative(self):
        """Compare t^m t with t t^m, where t^m = t o t^(m-1)."""
        t = self.t
        tm = self.multiply(t, self.t_power(self.m - 1))
        return self.multiply(tm, t) == self.multiply(t, tm)

    def _left_mult_matrices(self, X):
        # column j of L_a is a o e_j
        return self.prime_field.einsum("ni,ijk->nkj", X, self.structure_constants)

    def _nonzero_vectors(self, bound):
        E = self.field
        if E.backend != "finite":
            raise UnsupportedBackend("exhaustive zero-divisor scans need a finite field")
        size = E.p ** self.prime_dim
        if size > bound:
            raise ScaleError(f"|S_f| = {size} exceeds the scan bound {bound}")
        return all_vectors(E.p, self.prime_dim)[1:]

    def is_division(self, bound=DIVISION_SCAN_BOUND):
        """True iff every nonzero a has a full-rank left multiplication map."""
        return self.zero_divisor(bound) is None

    def zero_divisor(self, bound=DIVISION_SCAN_BOUND, chunk=4096):
        """A pair (a, x) of nonzero elements with a o x = 0, or None."""
        V = self._nonzero_vectors(bound)
        p, D = self.field.p, self.prime_dim
        for start in range(0, len(V), chunk):
            block = V[start:start + chunk]
            ranks = batched_rank_mod_p(self._left_mult_matrices(block), p)
            bad = np.nonzero(ranks < D)[0]
            if len(bad):
                a = block[bad[0]]
                L = self._left_mult_matrices(a[None, :])[0]
                x = nullspace(L, self.prime_field)[0]
                return self.from_coords(a), self.from_coords(x)
        return None

    def descriptor(self):
        return {"field": self.field.descriptor(), "f": [str(c) for c in self.f.coeffs]}


def algebra_from_descriptor(desc):
    from .field_tower import field_from_descriptor

    E = field_from_descriptor(desc["field"])
    return PetitAlgebra(SkewPoly(E, [E.parse(c) for c in desc["f"]]))


# ---------------------------------------------------------------------------
# operation names

def multiply(A, x, y):
    return A.multiply(x, y)


def associator(A, x, y, z):
    return A.associator(x, y, z)


def nucleus_left(A):
    return A.nucleus_left()


def nucleus_middle(A):
    return A.nucleus_middle()


def nucleus_right(A):
    return A.nucleus_right()


def nucleus_right_eigen(A):
    return A.nucleus_right_eigen()


def center(A):
    return A.center()


def F0(A):
    return A.F0()


def is_associative(A):
    return A.is_associative()


def powers_of_t_associative(A):
    return A.powers_of_t_associative()


def is_division(A):
    return A.is_division()
