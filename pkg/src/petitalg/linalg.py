"""Exact linear algebra over a prime field: GF(p) or the rationals.

Matrices are numpy arrays. Over GF(p) they hold int64 residues; over Q they
are object arrays of ``Fraction``. The same elimination code serves both.
"""
from fractions import Fraction

import numpy as np


class PrimeField:
    """GF(p) when ``p`` is a prime, Q when ``p`` is None."""

    def __init__(self, p=None):
        self.p = p

    @property
    def is_finite(self):
        return self.p is not None

    def __eq__(self, other):
        return isinstance(other, PrimeField) and self.p == other.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"GF({self.p})" if self.p else "QQ"

    def array(self, data):
        if self.p is None:
            out = np.array(data, dtype=object)
            return np.vectorize(Fraction, otypes=[object])(out) if out.size else out
        return np.array(data, dtype=np.int64) % self.p

    def zeros(self, shape):
        if self.p is None:
            out = np.empty(shape, dtype=object)
            out.fill(Fraction(0))
            return out
        return np.zeros(shape, dtype=np.int64)

    def identity(self, n):
        out = self.zeros((n, n))
        for i in range(n):
            out[i, i] = self.one
        return out

    @property
    def zero(self):
        return 0 if self.p else Fraction(0)

    @property
    def one(self):
        return 1 if self.p else Fraction(1)

    def reduce(self, arr):
        return arr % self.p if self.p else arr

    def inv(self, x):
        if self.p:
            return pow(int(x), -1, self.p)
        return 1 / Fraction(x)

    def einsum(self, spec, *ops):
        return self.reduce(np.einsum(spec, *ops))

    def matmul(self, a, b):
        return self.reduce(a.dot(b))

    def scalar(self, x):
        return int(x) % self.p if self.p else Fraction(x)


def rref(M, pf):
    """Reduced row echelon form. Returns (R, pivot_columns)."""
    R = np.array(M, dtype=object if pf.p is None else np.int64, copy=True)
    if R.ndim != 2:
        raise ValueError("rref expects a matrix")
    R = pf.reduce(R)
    rows, cols = R.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(R[r:, c] != 0)[0]
        if len(nz) == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            R[[r, piv]] = R[[piv, r]]
        R[r] = pf.reduce(R[r] * pf.inv(R[r, c]))
        col = R[:, c].copy()
        col[r] = 0
        if np.any(col != 0):
            R = pf.reduce(R - np.outer(col, R[r]))
        pivots.append(c)
        r += 1
    return R[:r], pivots


def rank(M, pf):
    M = np.asarray(M)
    if M.size == 0:
        return 0
    return len(rref(M, pf)[1])


def nullspace(M, pf):
    """Basis of {x : M x = 0}, one vector per row of the result."""
    M = np.asarray(M)
    cols = M.shape[1]
    if M.shape[0] == 0:
        return pf.identity(cols)
    R, pivots = rref(M, pf)
    free = [c for c in range(cols) if c not in pivots]
    basis = pf.zeros((len(free), cols))
    for b, fc in enumerate(free):
        basis[b, fc] = pf.one
        for i, pc in enumerate(pivots):
            basis[b, pc] = -R[i, fc]
    return pf.reduce(basis)


def row_space(vectors, pf):
    """Canonical (rref) basis of the span of the given row vectors."""
    vectors = np.asarray(vectors)
    if vectors.size == 0:
        return pf.zeros((0, vectors.shape[-1] if vectors.ndim == 2 else 0))
    return rref(vectors, pf)[0]


def inverse(M, pf):
    n = M.shape[0]
    aug = np.concatenate([pf.reduce(np.asarray(M)), pf.identity(n)], axis=1)
    R, pivots = rref(aug, pf)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise ZeroDivisionError("matrix is singular")
    return R[:, n:]


def batched_rank_mod_p(Ms, p):
    """Ranks of a stack of matrices over GF(p), eliminating all of them at once."""
    A = np.array(Ms, dtype=np.int64) % p
    batch, rows, cols = A.shape
    inv = np.zeros(p, dtype=np.int64)
    for x in range(1, p):
        inv[x] = pow(x, -1, p)
    ranks = np.zeros(batch, dtype=np.int64)
    idx = np.arange(batch)
    for c in range(cols):
        # candidate pivot rows are those at or below the current rank
        below = np.arange(rows)[None, :] >= ranks[:, None]
        cand = (A[:, :, c] != 0) & below
        has = cand.any(axis=1)
        if not has.any():
            continue
        piv = np.argmax(cand, axis=1)
        b = idx[has]
        pr = piv[has]
        tr = ranks[has]
        # swap pivot row into position `rank`
        tmp = A[b, pr].copy()
        A[b, pr] = A[b, tr]
        A[b, tr] = tmp
        A[b, tr] = (A[b, tr] * inv[A[b, tr, c]][:, None]) % p
        factors = A[b, :, c].copy()
        factors[np.arange(len(b)), tr] = 0
        A[b] = (A[b] - factors[:, :, None] * A[b, tr][:, None, :]) % p
        ranks[has] += 1
        if (ranks >= rows).all():
            break
    return ranks


def all_vectors(p, dim):
    """Every vector of GF(p)^dim, in base-p counting order (first coordinate fastest)."""
    codes = np.arange(p ** dim, dtype=np.int64)
    return np.stack([(codes // p ** i) % p for i in range(dim)], axis=1)


def vector_code(vec, p):
    return int(sum(int(v) * p ** i for i, v in enumerate(vec)))

