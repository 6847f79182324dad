"""Automorphisms of Petit algebras.

The maps H_{tau,k} act by

    H(x_0 + x_1 t + ... ) = tau(x_0) + sum tau(x_i) k sigma(k) ... sigma^{i-1}(k) t^i

with tau = sigma^j, and are automorphisms exactly when
``tau(a_i) = sigma^i(k) ... sigma^{m-1}(k) a_i`` for every i. Alongside the
closed form there is a brute-force search over candidate images of t, used as
an independent check and as the full answer when n < m - 1.
"""
from functools import cached_property
from math import gcd

import numpy as np

from .errors import ConsistencyError, PreconditionError, ScaleError, UnsupportedBackend
from .field_tower import DESK_SCALE, multiplicative_order
from .linalg import all_vectors, inverse, rank
from .petit_algebra import AlgebraElement

CLOSURE_CAP = 256
JBOUND = 24
STRUCTURE_SEARCH_LIMIT = 64


def _prod_sigma(E, k, lo, hi):
    """sigma^lo(k) sigma^(lo+1)(k) ... sigma^(hi-1)(k)."""
    out = E.one
    for l in range(lo, hi):
        out = out * E.sigma_pow(l, k)
    return out


def htk_condition(A, j, k):
    """tau(a_i) = (prod_{l=i}^{m-1} sigma^l(k)) a_i for all i, where tau = sigma^j."""
    E = A.field
    k = E(k)
    if not k:
        raise PreconditionError("k must be nonzero")
    for i, ai in enumerate(A.a):
        if E.sigma_pow(j, ai) != _prod_sigma(E, k, i, A.m) * ai:
            return False
    return True


class AutMap:
    """An F-linear self-map of S_f, either H_{sigma^j,k} or a raw coordinate matrix.

    ``matrix[r]`` holds the coordinates of the image of the r-th prime basis
    element, so a coordinate row vector x maps to ``x @ matrix``.
    """

    def __init__(self, algebra, j=None, k=None, matrix=None, check=True):
        self.algebra = algebra
        if matrix is None:
            E = algebra.field
            self.j = j % E.n
            self.k = E(k)
            if not self.k:
                raise PreconditionError("k must be nonzero")
            if check and not htk_condition(algebra, self.j, self.k):
                raise PreconditionError(f"H_(sigma^{self.j}, {self.k}) is not an automorphism of S_f")
        else:
            self.__dict__["matrix"] = matrix
            self.j, self.k = self._recover_structured(matrix)

    @classmethod
    def structured(cls, A, j, k, check=True):
        return cls(A, j=j, k=k, check=check)

    @classmethod
    def general(cls, A, matrix):
        return cls(A, matrix=np.asarray(matrix))

    @property
    def is_structured(self):
        return self.j is not None

    def _recover_structured(self, M):
        A = self.algebra
        E = A.field
        d = E.prime_dim
        image_t = A.from_coords(M[d])
        k = image_t.coeffs[1]
        if not k or any(c for i, c in enumerate(image_t.coeffs) if i != 1):
            return None, None
        consts = [A.from_coords(M[s]) for s in range(d)]
        for j in range(E.n):
            if all(c.coeffs[0] == E.sigma_pow(j, b) and not any(c.coeffs[1:])
                   for c, b in zip(consts, E.prime_basis)):
                cand = AutMap(A, j=j, k=k, check=False)
                if np.array_equal(cand.matrix, M):
                    return cand.j, cand.k
                return None, None
        return None, None

    @cached_property
    def matrix(self):
        A = self.algebra
        return np.array([A.to_coords(self.apply(e)) for e in A.prime_basis])

    def apply(self, x):
        A = self.algebra
        if self.is_structured:
            E = A.field
            out = []
            scale = E.one
            for i, xi in enumerate(x.coeffs):
                out.append(E.sigma_pow(self.j, xi) * scale)
                scale = scale * E.sigma_pow(i, self.k)
            return AlgebraElement(A, out)
        return A.from_coords(A.prime_field.matmul(A.to_coords(x), self.matrix))

    __call__ = apply

    def compose(self, other):
        """self o other: apply ``other`` first."""
        if other.algebra != self.algebra:
            raise PreconditionError("maps on different algebras")
        if self.is_structured and other.is_structured:
            E = self.algebra.field
            return AutMap(self.algebra, j=self.j + other.j, k=E.sigma_pow(self.j, other.k) * self.k, check=False)
        pf = self.algebra.prime_field
        return AutMap.general(self.algebra, pf.matmul(other.matrix, self.matrix))

    def __matmul__(self, other):
        return self.compose(other)

    def inverse(self):
        if self.is_structured:
            E = self.algebra.field
            return AutMap(self.algebra, j=-self.j, k=E.sigma_pow(-self.j, self.k.inverse()), check=False)
        return AutMap.general(self.algebra, inverse(self.matrix, self.algebra.prime_field))

    def is_identity(self):
        if self.is_structured:
            return self.j == 0 and self.k == self.algebra.field.one
        return bool(np.all(self.matrix == self.algebra.prime_field.identity(self.algebra.prime_dim)))

    def is_automorphism(self):
        """Multiplicative on all basis pairs and bijective."""
        A = self.algebra
        pf = A.prime_field
        M = self.matrix
        C = A.structure_constants
        if rank(M, pf) != A.prime_dim:
            return False
        lhs = pf.einsum("abk,kl->abl", C, M)
        rhs = pf.einsum("ai,bj,ijl->abl", M, M, C)
        return bool(np.all(lhs == rhs))

    def __eq__(self, other):
        if not isinstance(other, AutMap):
            return NotImplemented
        if self.algebra != other.algebra:
            return False
        if self.is_structured or other.is_structured:
            return (self.j, self.k) == (other.j, other.k)
        return bool(np.array_equal(self.matrix, other.matrix))

    def __hash__(self):
        if self.is_structured:
            return hash((self.j, self.k))
        return hash(tuple(self.matrix.flat))

    def sort_key(self):
        if self.is_structured:
            return (0, self.j, self.k.sort_key())
        return (1, tuple(int(v) if self.algebra.field.backend == "finite" else v for v in self.matrix.flat))

    def to_json(self):
        if self.is_structured:
            return {"tau": self.j, "k": str(self.k)}
        return {"matrix": [[str(v) for v in row] for row in self.matrix]}

    def __str__(self):
        if self.is_structured:
            tau = "id" if self.j == 0 else ("sigma" if self.j == 1 else f"sigma^{self.j}")
            return f"H[{tau}, {self.k}]"
        return "H[matrix]"

    def __repr__(self):
        return str(self)


def apply_structured(A, H, x):
    if not H.is_structured:
        raise PreconditionError("not a structured map")
    return H.apply(x)


def compose(H1, H2):
    return H1.compose(H2)


def invert(H):
    return H.inverse()


# ---------------------------------------------------------------------------
# group reports

def closure(generators, cap=CLOSURE_CAP):
    """The finite group generated by ``generators``, or ScaleError past ``cap`` elements."""
    gens = list(generators)
    if not gens:
        raise PreconditionError("need at least one generator")
    A = gens[0].algebra
    identity = AutMap(A, j=0, k=1, check=False)
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = g.compose(x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
                    if len(seen) > cap:
                        raise ScaleError(f"subgroup has more than {cap} elements")
        frontier = nxt
    return sorted(seen, key=AutMap.sort_key)


class GroupReport:
    def __init__(self, elements, complete=False, generated=False, cap=CLOSURE_CAP, notes=()):
        elements = list(elements)
        if not elements:
            raise PreconditionError("empty element list")
        if generated:
            elements = closure(elements, cap)
        else:
            elements = sorted(set(elements), key=AutMap.sort_key)
        self.elements = elements
        self.complete = complete
        self.notes = list(notes)
        self.index = {e: i for i, e in enumerate(elements)}
        self.table = self._table()
        self.tag, self.params, self.witnesses = None, [], []

    @property
    def order(self):
        return len(self.elements)

    def _table(self):
        n = len(self.elements)
        table = [[0] * n for _ in range(n)]
        for a, x in enumerate(self.elements):
            for b, y in enumerate(self.elements):
                z = x.compose(y)
                if z not in self.index:
                    raise ConsistencyError("element set is not closed under composition")
                table[a][b] = self.index[z]
        return table

    @cached_property
    def identity(self):
        for i, e in enumerate(self.elements):
            if e.is_identity():
                return i
        raise ConsistencyError("no identity element")

    def mul(self, a, b):
        return self.table[a][b]

    def power(self, a, e):
        out = self.identity
        for _ in range(e):
            out = self.table[a][out]
        return out

    def inv(self, a):
        row = self.table[a]
        return row.index(self.identity)

    def element_order(self, a):
        x, r = a, 1
        while x != self.identity:
            x = self.table[a][x]
            r += 1
        return r

    def generated_by(self, idx):
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for x in frontier:
                for g in idx:
                    y = self.table[g][x]
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return seen

    def is_dicyclic(self, x, y, l):
        """y^(2l) = 1, x^2 = y^l, x^-1 y x = y^-1, and <x, y> has order 4l."""
        if self.order != 4 * l:
            return False
        if self.element_order(y) != 2 * l:
            return False
        if self.power(x, 2) != self.power(y, l):
            return False
        if self.mul(self.mul(self.inv(x), y), x) != self.inv(y):
            return False
        return len(self.generated_by([x, y])) == self.order

    def is_semidirect(self, x, y, s, n, l):
        """x^s = 1, y^n = 1, y x y^-1 = x^l, l^n = 1 mod s, and <x, y> has order s n."""
        if self.order != s * n or pow(l, n, s) != 1 % s:
            return False
        if self.power(x, s) != self.identity or self.power(y, n) != self.identity:
            return False
        if self.mul(self.mul(y, x), self.inv(y)) != self.power(x, l % s):
            return False
        return len(self.generated_by([x, y])) == self.order

    def set_structure(self, tag, params, witnesses):
        self.tag, self.params, self.witnesses = tag, list(params), list(witnesses)

    def detect(self, limit=STRUCTURE_SEARCH_LIMIT):
        N = self.order
        if N == 1:
            self.set_structure("trivial", [], [])
            return self
        orders = [self.element_order(a) for a in range(N)]
        for a in range(N):
            if orders[a] == N:
                self.set_structure("cyclic", [N], [a])
                return self
        if N > limit:
            self.set_structure("unknown", [], [])
            return self
        if N % 4 == 0:
            l = N // 4
            for y in range(N):
                if orders[y] != 2 * l:
                    continue
                for x in range(N):
                    if self.is_dicyclic(x, y, l):
                        self.set_structure("dicyclic", [l], [x, y])
                        return self
        for n in range(2, N):
            if N % n:
                continue
            s = N // n
            for x in range(N):
                if orders[x] != s:
                    continue
                for y in range(N):
                    if orders[y] != n:
                        continue
                    # y x y^-1 is a power of x when <x> is normal
                    conj = self.mul(self.mul(y, x), self.inv(y))
                    for l in range(1, s):
                        if self.power(x, l) == conj and self.is_semidirect(x, y, s, n, l):
                            self.set_structure("semidirect", [s, n, l], [x, y])
                            return self
        self.set_structure("unknown", [], [])
        return self

    def describe(self):
        if self.tag == "trivial":
            return "trivial"
        if self.tag == "cyclic":
            return f"cyclic Z/{self.params[0]}"
        if self.tag == "dicyclic":
            return f"dicyclic Dic_{self.params[0]} (order {4 * self.params[0]})"
        if self.tag == "semidirect":
            s, n, l = self.params
            return f"semidirect Z/{s} x|_{l} Z/{n}"
        return "unknown"

    def to_json(self):
        return {
            "order": self.order,
            "complete": self.complete,
            "elements": [e.to_json() for e in self.elements],
            "structure": {
                "tag": self.tag,
                "params": self.params,
                "witnesses": [self.elements[w].to_json() for w in self.witnesses],
            },
        }

    def __contains__(self, H):
        return H in self.index

    def __repr__(self):
        return f"GroupReport(order={self.order}, {self.describe()})"


def structure_report(elements, generated=False, complete=False, cap=CLOSURE_CAP):
    return GroupReport(elements, complete=complete, generated=generated, cap=cap).detect()


# ---------------------------------------------------------------------------
# enumeration

def _require_nonassociative(A):
    if A.is_invariant():
        raise PreconditionError(
            "f is invariant: S_f is the associative quotient algebra; use the classical theory")


def _require_finite(A):
    if A.field.backend != "finite":
        raise UnsupportedBackend("exhaustive enumeration needs a finite field")


def structured_automorphisms(A):
    """All valid H_{tau,k}, sorted by (j, k)."""
    _require_finite(A)
    E = A.field
    out = []
    for j in range(E.n):
        for k in E.units():
            if htk_condition(A, j, k):
                out.append(AutMap(A, j=j, k=k, check=False))
    return out


def enumerate_aut_formula(A):
    """Aut_F(S_f) from the closed form; complete when n >= m - 1."""
    _require_finite(A)
    _require_nonassociative(A)
    E = A.field
    maps = structured_automorphisms(A)
    if A.a[0]:
        for H in maps:
            if E.norm(H.k) ** A.m != E.one:
                raise ConsistencyError(f"N({H.k}) is not an m-th root of unity")
    complete = A.n >= A.m - 1
    note = "full group" if complete else "H_(tau,k) subgroup"
    return GroupReport(maps, complete=complete, notes=[note]).detect()


def _const_coords(A, c):
    return A.to_coords(A.constant(c))


def _sparse_support_ok(A, u):
    return all(not c or i % A.n == 1 % A.n for i, c in enumerate(u.coeffs))


def _search_maps(A, B, bound=DESK_SCALE, prune=False, first_only=False, chunk=2048):
    """Multiplicative bijections S_A -> S_B that restrict to some tau on K.

    Candidates: tau = sigma^j and u = image of t; the map sends x t^i to
    tau(x) o u^(i) with right-nested powers. A cheap twist filter
    u o tau(z) = tau(sigma(z)) o u on a basis of K runs first, in batches.
    """
    E = A.field
    if E.backend != "finite":
        raise UnsupportedBackend("the brute-force search needs a finite field")
    size = E.q ** A.m
    if size > bound:
        raise ScaleError(f"|K|^m = {size} exceeds the search bound {bound}")
    pf = B.prime_field
    p, D, d = E.p, A.prime_dim, E.prime_dim
    U = all_vectors(p, D)
    if prune:
        keep = [i for i in range(A.m) if i % A.n == 1 % A.n]
        mask = np.ones(D, dtype=bool)
        for i in keep:
            mask[i * d:(i + 1) * d] = False
        U = U[~np.any(U[:, mask] != 0, axis=1)]
    CA, CB = A.structure_constants, B.structure_constants
    found = []
    for j in range(E.n):
        left = [_const_coords(B, E.sigma_pow(j, b)) for b in E.prime_basis]
        right = [_const_coords(B, E.sigma_pow(j + 1, b)) for b in E.prime_basis]
        # u o y - x o u is linear in u: stack the maps for every basis pair (y, x)
        twist = np.concatenate([pf.einsum("j,ijk->ik", y, CB) - pf.einsum("i,ijk->jk", x, CB)
                                for y, x in zip(left, right)], axis=1)
        for start in range(0, len(U), chunk):
            block = U[start:start + chunk]
            ok = ~np.any(pf.matmul(block, twist) != 0, axis=1)
            for u in block[ok]:
                M = _map_matrix(B, left, u)
                if rank(M, pf) != D:
                    continue
                lhs = pf.einsum("abk,kl->abl", CA, M)
                rhs = pf.einsum("ai,bj,ijl->abl", M, M, CB)
                if np.all(lhs == rhs):
                    found.append(M)
                    if first_only:
                        return found
    return found


def _map_matrix(B, tau_consts, u):
    rows = []
    power = B.one.coords()
    for i in range(B.m):
        P = np.broadcast_to(power, (len(tau_consts), power.shape[0]))
        rows.append(B.product_coords(np.array(tau_consts), P))
        power = B.product_coords(u[None, :], power[None, :])[0]
    return np.vstack(rows)


def enumerate_aut_oracle(A, bound=DESK_SCALE, prune=False):
    """Every automorphism of S_f by brute force over candidate images of t."""
    _require_finite(A)
    if A.is_associative():
        raise PreconditionError("the search assumes a nonassociative S_f")
    maps = [AutMap.general(A, M) for M in _search_maps(A, A, bound, prune)]
    if A.n < A.m - 1:
        for H in maps:
            if not _sparse_support_ok(A, H.apply(A.t)):
                raise ConsistencyError("automorphism with image of t outside the sparse support")
    return GroupReport(maps, complete=True, notes=["oracle"]).detect()


def inner_from_c(A, c):
    """G_c = H_{id, c^-1 sigma(c)}, i.e. x -> (c^-1 x) c."""
    E = A.field
    c = E(c)
    if not c:
        raise PreconditionError("c must be nonzero")
    return AutMap(A, j=0, k=c.inverse() * E.sigma_pow(1, c))


def inner_pointwise(A, c, x):
    E = A.field
    c = E(c)
    return A.multiply(A.multiply(A.constant(c.inverse()), x), A.constant(c))


def _cyclic_shape(A):
    """a in K \\ F and f = t^m - a with n = m."""
    E = A.field
    a = A.a
    if A.n != A.m or any(a[1:]) or not a[0] or E.in_fixed_field(a[0]):
        raise PreconditionError("expected f = t^m - a with a in K \\ F and [K:F] = m")
    return a[0]


def extend_id_subgroup(A):
    """Automorphisms extending id_K of a nonassociative cyclic algebra, each as some G_c."""
    _require_finite(A)
    _cyclic_shape(A)
    E = A.field
    maps = []
    witnesses = []
    for k in E.kernel_of_norm():
        H = AutMap(A, j=0, k=k)
        c = E.solve_hilbert90(k)
        G = inner_from_c(A, c)
        if G != H or any(G.apply(e) != inner_pointwise(A, c, e) for e in A.prime_basis):
            raise ConsistencyError(f"G_c with c = {c} does not realise H_(id,{k})")
        maps.append(H)
        witnesses.append(c)
    rep = GroupReport(maps, complete=True).detect()
    rep.inner = {str(H.k): str(c) for H, c in zip(maps, witnesses)}
    return rep


def cyclic_subgroup_from_root(A, omega, s=None):
    """<H_{id,omega}> for omega an s-th root of unity in F and f supported on multiples of s."""
    E = A.field
    omega = E(omega)
    if not omega or not E.in_fixed_field(omega):
        raise PreconditionError("omega must be a nonzero element of F")
    support = [A.m - i for i, ai in enumerate(A.a) if ai]
    if s is None:
        s = 0
        for v in support:
            s = gcd(s, v)
    if s < 1 or any(v % s for v in support) or A.m % s:
        raise PreconditionError(f"f is not of the shape t^(sl) - sum a_(is) t^(is) for s = {s}")
    if omega ** s != E.one:
        raise PreconditionError(f"omega^{s} != 1")
    rep = GroupReport([AutMap(A, j=0, k=omega)], generated=True).detect()
    if rep.order != multiplicative_order(omega):
        raise ConsistencyError("order of <H_(id,omega)> differs from the order of omega")
    return rep


def fixed_coeff_subgroup(A):
    """<H_{sigma,1}>, of order n, for f with all coefficients in F."""
    E = A.field
    if not all(E.in_fixed_field(ai) for ai in A.a):
        raise PreconditionError("f must have all coefficients in F")
    _require_nonassociative(A)
    a = A.a
    full = (A.n == A.m and _is_prime(A.m) and bool(a[0]) and any(a[1:])) or \
        (A.n >= A.m - 1 and bool(a[A.m - 1]))
    return GroupReport([AutMap(A, j=1, k=1)], generated=True, complete=full).detect()


def _is_prime(n):
    return n > 1 and all(n % q for q in range(2, int(n ** 0.5) + 1))


def minimal_power_in_F(E, c, jbound=JBOUND):
    """Least j >= 1 with c^j in F^x, searched up to ``jbound``."""
    x = E.one
    for j in range(1, jbound + 1):
        x = x * c
        if E.in_fixed_field(x):
            return j, x
    return None, None


def quaternion_subgroups(A, k, c, jbound=JBOUND):
    """<H_{sigma,k}, G_c> for a nonassociative quaternion algebra (K/F, sigma, lambda sqrt(b))."""
    E = A.field
    if A.m != 2 or E.n != 2:
        raise PreconditionError("expected a quaternion algebra: m = n = 2")
    a0 = A.a[0]
    if any(A.a[1:]) or not a0 or E.in_fixed_field(a0) or E.sigma_pow(1, a0) != -a0:
        raise PreconditionError("expected f = t^2 - lambda sqrt(b) with lambda in F^x")
    k, c = E(k), E(c)
    if k * E.sigma_pow(1, k) != -E.one:
        raise PreconditionError("k sigma(k) must be -1")
    if not c or E.in_fixed_field(c):
        raise PreconditionError("c must lie in K \\ F")
    j, cj = minimal_power_in_F(E, c, jbound)
    if j is None:
        raise PreconditionError(f"no j <= {jbound} with c^j in F")
    H = AutMap(A, j=1, k=k)
    G = inner_from_c(A, c)
    rep = GroupReport([H, G], generated=True)
    ih, ig = rep.index[H], rep.index[G]
    if j % 2 == 0:
        ok = rep.is_dicyclic(ih, ig, j // 2)
        rep.set_structure("dicyclic", [j // 2], [ih, ig])
    else:
        ok = rep.is_semidirect(ig, ih, j, 4, j - 1)
        rep.set_structure("semidirect", [j, 4, j - 1], [ig, ih])
    if not ok:
        raise ConsistencyError(f"<H_(sigma,k), G_c> fails the expected presentation (j = {j})")
    rep.j = j
    rep.c_power = cj
    return rep


def subgroup_inclusion_check(Ag, Af):
    """Every automorphism of S_g satisfies the automorphism condition of S_f."""
    if Ag.field != Af.field or Ag.m != Af.m:
        raise PreconditionError("algebras over different data")
    E = Af.field
    b, a = Ag.a, Af.a
    monomial = not any(a[1:]) and a[0] == b[0] and a[0] and not E.in_fixed_field(a[0])
    subset = all(bi == 0 or bi == ai for ai, bi in zip(a, b))
    if not (monomial or subset):
        raise PreconditionError("need f = t^m - b_0 with b_0 in K \\ F, or b_i in {0, a_i}")
    rep = enumerate_aut_formula(Ag)
    return all(htk_condition(Af, H.j, H.k) for H in rep.elements)


def kummer_generator(E, omega):
    """Some d in K^x with sigma(d) = omega d, found by exhaustive search."""
    _finite(E)
    for d in E.units():
        if E.sigma_pow(1, d) == omega * d:
            return d
    return None


def _finite(E):
    if E.backend != "finite":
        raise UnsupportedBackend("exhaustive search needs a finite field")


def order_m2_subgroup(A):
    """<H_{sigma,l}> of order m^2, when F has a primitive m-th root omega = N(l) with sigma(d) = omega d."""
    E = A.field
    _finite(E)
    a = _cyclic_shape(A)
    found = None
    for root in E.roots_of_unity_in_F(A.m):
        if not root.primitive:
            continue
        d = kummer_generator(E, root.value)
        if d is None:
            continue
        for l in E.units():
            if E.norm(l) == root.value and htk_condition(A, 1, l):
                found = (root.value, d, l)
                break
        if found:
            break
    if found is None:
        return None
    omega, d, l = found
    rep = GroupReport([AutMap(A, j=1, k=l)], generated=True).detect()
    if rep.order != A.m ** 2:
        raise ConsistencyError(f"<H_(sigma,l)> has order {rep.order}, expected {A.m ** 2}")
    rep.kummer = {"omega": str(omega), "d": str(d), "l": str(l), "a": str(a)}
    return rep
