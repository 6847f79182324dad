"""Isomorphisms between Petit algebras S_f and S_g over the same K[t;sigma].

G_{tau,k}: S_f -> S_g sends x t^i to tau(x) k sigma(k) ... sigma^{i-1}(k) t^i and
is an isomorphism exactly when

    tau(a_i) = (prod_{l=i}^{m-1} sigma^l(k)) b_i   for all i.

That test is complete when n >= m - 1; below that, negative answers are
settled by a brute-force search.
"""
import numpy as np

from .automorphism import _prod_sigma, _search_maps, enumerate_aut_formula, enumerate_aut_oracle
from .errors import ConsistencyError, PreconditionError, ScaleError, UnsupportedBackend
from .field_tower import DESK_SCALE
from .linalg import rank
from .petit_algebra import AlgebraElement, PetitAlgebra
from .skew_poly import SkewPoly, monic_polys


def _algebra(f):
    return f if isinstance(f, PetitAlgebra) else PetitAlgebra(f)


def _pair(f, g):
    Af, Ag = _algebra(f), _algebra(g)
    if Af.field != Ag.field:
        raise PreconditionError("f and g live over different extensions; cross-field comparison is not decided")
    if Af.m != Ag.m:
        raise PreconditionError("f and g have different degrees")
    return Af, Ag


def zero_pattern_matches(Af, Ag):
    return all(bool(a) == bool(b) for a, b in zip(Af.a, Ag.a))


def iso_condition(f, g, j, k):
    Af, Ag = _pair(f, g)
    E = Af.field
    k = E(k)
    if not k:
        raise PreconditionError("k must be nonzero")
    return all(E.sigma_pow(j, a) == _prod_sigma(E, k, i, Af.m) * b
               for i, (a, b) in enumerate(zip(Af.a, Ag.a)))


class IsoWitness:
    """The map G_{sigma^j, k}: S_f -> S_g."""

    def __init__(self, Af, Ag, j, k):
        self.source, self.target = Af, Ag
        self.j = j % Af.field.n
        self.k = Af.field(k)
        if not iso_condition(Af, Ag, self.j, self.k):
            raise PreconditionError("(j, k) does not satisfy the isomorphism condition")

    def apply(self, x):
        E = self.source.field
        out = []
        scale = E.one
        for i, xi in enumerate(x.coeffs):
            out.append(E.sigma_pow(self.j, xi) * scale)
            scale = scale * E.sigma_pow(i, self.k)
        return AlgebraElement(self.target, out)

    __call__ = apply

    @property
    def matrix(self):
        T = self.target
        return np.array([T.to_coords(self.apply(e)) for e in self.source.prime_basis])

    def verify(self):
        return is_isomorphism_matrix(self.source, self.target, self.matrix)

    def to_json(self):
        return {"tau": self.j, "k": str(self.k)}

    def __eq__(self, other):
        return isinstance(other, IsoWitness) and (self.source, self.target, self.j, self.k) == \
            (other.source, other.target, other.j, other.k)

    def __hash__(self):
        return hash((self.j, self.k))

    def __repr__(self):
        return f"IsoWitness(tau=sigma^{self.j}, k={self.k})"


def is_isomorphism_matrix(Af, Ag, M):
    pf = Af.prime_field
    if rank(M, pf) != Af.prime_dim:
        return False
    lhs = pf.einsum("abk,kl->abl", Af.structure_constants, M)
    rhs = pf.einsum("ai,bj,ijl->abl", M, M, Ag.structure_constants)
    return bool(np.all(lhs == rhs))


def _witnesses(Af, Ag):
    E = Af.field
    if E.backend != "finite":
        raise UnsupportedBackend("exhaustive (j, k) scans need a finite field")
    if not zero_pattern_matches(Af, Ag):
        return
    for j in range(E.n):
        for k in E.units():
            if iso_condition(Af, Ag, j, k):
                yield j, k


def find_isomorphism(f, g):
    """First G_{tau,k}: S_f -> S_g in (j, k) order, or None. Complete iff n >= m - 1."""
    Af, Ag = _pair(f, g)
    for j, k in _witnesses(Af, Ag):
        return IsoWitness(Af, Ag, j, k)
    return None


def iso_oracle(f, g, bound=DESK_SCALE):
    """Some multiplicative bijection S_f -> S_g as a coordinate matrix, or None."""
    Af, Ag = _pair(f, g)
    found = _search_maps(Af, Ag, bound, first_only=True)
    return found[0] if found else None


def decide(f, g, oracle=None, bound=DESK_SCALE):
    """Combine the closed-form scan, obstructions and (when needed) the oracle.

    Returns a dict with keys ``isomorphic`` (True/False/None), ``reason`` and
    ``witness``.
    """
    Af, Ag = _pair(f, g)
    complete = Af.n >= Af.m - 1
    w = find_isomorphism(Af, Ag)
    out = {"isomorphic": None, "reason": None, "witness": None, "complete": complete}
    if w is not None:
        if not w.verify():
            raise ConsistencyError("witness fails multiplicativity")
        out.update(isomorphic=True, reason="witness", witness=w.to_json())
    elif not zero_pattern_matches(Af, Ag) and complete:
        out.update(isomorphic=False, reason="zero pattern")
    else:
        cert = norm_obstruction(Af, Ag) if complete else None
        if cert is not None:
            out.update(isomorphic=False, reason=f"norm obstruction at i = {cert['i']}")
        elif complete:
            out.update(isomorphic=False, reason="no (tau, k) satisfies the condition")
    run_oracle = oracle if oracle is not None else (not complete)
    if run_oracle:
        M = iso_oracle(Af, Ag, bound)
        found = M is not None
        out["oracle"] = found
        if out["isomorphic"] is None:
            out["isomorphic"] = found
            out["reason"] = "oracle"
            if found:
                out["witness"] = {"matrix": [[str(v) for v in row] for row in M]}
        elif out["isomorphic"] != found:
            raise ConsistencyError("closed form and oracle disagree")
    return out


def _power_subgroup(E, e):
    return {x ** e for x in E._fixed_units()}


def norm_obstruction(f, g, check=True):
    """A certificate that no G_{tau,k} maps S_f to S_g, or None.

    For each i with a_i, b_i nonzero, N(a_i / b_i) must be an (m - i)-th power
    in N(K^x) = F^x. When m = n the i = 0 condition reads
    sigma^j(a_0) = N(k) b_0, so sigma^j(a_0) / b_0 must lie in F^x for some j.
    """
    Af, Ag = _pair(f, g)
    E = Af.field
    if E.backend != "finite":
        raise UnsupportedBackend("norm obstructions need a finite field")
    cert = None
    for i, (a, b) in enumerate(zip(Af.a, Ag.a)):
        if a and b and E.norm(a / b) not in _power_subgroup(E, Af.m - i):
            cert = {"kind": "norm", "i": i, "norm": str(E.norm(a / b)), "power": Af.m - i}
            break
    if cert is None and Af.m == E.n:
        a, b = Af.a[0], Ag.a[0]
        if a and b and not any(E.in_fixed_field(E.sigma_pow(j, a) / b) for j in range(E.n)):
            cert = {"kind": "cyclic norm", "i": 0}
    if cert is not None and check and find_isomorphism(Af, Ag) is not None:
        raise ConsistencyError("norm obstruction contradicts a found witness")
    return cert


# ---------------------------------------------------------------------------
# classification

def family(E, m, shape=None):
    """Monic non-invariant f of degree m; ``shape='monomial'`` keeps t^m - a only."""
    if E.backend != "finite":
        raise UnsupportedBackend("families are enumerated over finite fields")
    if shape == "monomial":
        polys = [SkewPoly(E, [-a] + [0] * (m - 1) + [1]) for a in E.elements()]
    elif shape in (None, "all"):
        polys = list(monic_polys(E, m))
    else:
        raise PreconditionError(f"unknown family shape {shape!r}")
    out = [PetitAlgebra(f) for f in polys]
    return sorted((A for A in out if not A.is_invariant()), key=lambda A: A.f.sort_key())


def _image(A, j, k):
    """g with G_{sigma^j,k}: S_f -> S_g."""
    E = A.field
    b = [E.sigma_pow(j, a) / _prod_sigma(E, k, i, A.m) for i, a in enumerate(A.a)]
    return SkewPoly(E, [-x for x in b] + [1])


def classify(E, m, shape=None, bound=DESK_SCALE, oracle=None):
    algebras = family(E, m, shape)
    size = E.q ** m
    if size > bound:
        raise ScaleError(f"|K|^m = {size} exceeds the bound {bound}")
    index = {A.f: i for i, A in enumerate(algebras)}
    parent = list(range(len(algebras)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)

    units = E.units()
    hits = {}
    for i, A in enumerate(algebras):
        counts = {}
        for j in range(E.n):
            for k in units:
                g = _image(A, j, k)
                if g not in index:
                    raise ConsistencyError("image of a family member left the family")
                counts[index[g]] = counts.get(index[g], 0) + 1
                union(i, index[g])
        hits[i] = counts

    complete = E.n >= m - 1
    mode = "formula-complete" if complete else "oracle-confirmed"
    run_oracle = (not complete) if oracle is None else oracle
    if not complete:
        roots = sorted({find(i) for i in range(len(algebras))})
        for x in range(len(roots)):
            for y in range(x + 1, len(roots)):
                rx, ry = find(roots[x]), find(roots[y])
                if rx != ry and iso_oracle(algebras[rx], algebras[ry], bound) is not None:
                    union(rx, ry)

    classes = {}
    for i in range(len(algebras)):
        classes.setdefault(find(i), []).append(i)
    report = []
    for root in sorted(classes):
        members = classes[root]
        rep = algebras[members[0]]
        aut = enumerate_aut_formula(rep).order
        if complete:
            for i in members:
                # orbit-stabilizer: every member is hit exactly |Aut| times from each member
                if set(hits[i]) != set(members) or any(c != aut for c in hits[i].values()):
                    raise ConsistencyError("orbit-stabilizer count mismatch")
            if len(members) * aut != E.n * len(units):
                raise ConsistencyError("class size times |Aut| differs from the groupoid size")
        elif run_oracle:
            aut = enumerate_aut_oracle(rep, bound).order
        report.append({
            "rep": [str(c) for c in rep.f.coeffs],
            "size": len(members),
            "aut_order": aut,
            "members": [[str(c) for c in algebras[i].f.coeffs] for i in members],
        })
    if run_oracle and complete:
        reps = [algebras[root] for root in sorted(classes)]
        for x in range(len(reps)):
            for y in range(x + 1, len(reps)):
                if iso_oracle(reps[x], reps[y], bound) is not None:
                    raise ConsistencyError("oracle links two formula classes")
    return {
        "family": {"field": E.descriptor(), "m": m, "shape": shape or "all", "size": len(algebras)},
        "classes": report,
        "mode": mode,
    }
