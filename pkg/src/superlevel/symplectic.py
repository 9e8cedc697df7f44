"""
Matrices over F_p and the symplectic group Sp(2g, F_p).

The form is J = [[0, I], [-I, 0]] in the basis (e_1..e_g, f_1..f_g).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .exact import check_prime, inv_mod

ENUMERATION_BOUND = 10**7


class DimensionMismatch(ValueError):
    pass


class TooLarge(ValueError):
    pass


class NotSubgroup(ValueError):
    pass


class SingularMatrix(ValueError):
    pass


class FpMatrix:
    """Immutable square matrix over F_p, backed by a read-only int64 array."""

    __slots__ = ("a", "p", "_key")

    def __init__(self, entries, p: int):
        a = np.array(entries, dtype=np.int64) % p
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise DimensionMismatch("need a square matrix, got shape %s" % (a.shape,))
        a.setflags(write=False)
        self.a = a
        self.p = p
        self._key = None

    @classmethod
    def identity(cls, n: int, p: int) -> "FpMatrix":
        return cls(np.eye(n, dtype=np.int64), p)

    @property
    def n(self) -> int:
        return self.a.shape[0]

    @property
    def modulus(self) -> int:
        return self.p

    def key(self) -> bytes:
        if self._key is None:
            self._key = bytes([self.p, self.n]) + self.a.astype(np.uint8).tobytes()
        return self._key

    def __hash__(self):
        return hash(self.key())

    def __eq__(self, other):
        if not isinstance(other, FpMatrix):
            return NotImplemented
        return self.key() == other.key()

    def _check(self, other):
        if not isinstance(other, FpMatrix):
            raise TypeError("expected FpMatrix")
        if other.p != self.p or other.n != self.n:
            raise DimensionMismatch(
                "%dx%d mod %d vs %dx%d mod %d" % (self.n, self.n, self.p, other.n, other.n, other.p))

    def __matmul__(self, other: "FpMatrix") -> "FpMatrix":
        self._check(other)
        return FpMatrix(self.a @ other.a, self.p)

    def __add__(self, other: "FpMatrix") -> "FpMatrix":
        self._check(other)
        return FpMatrix(self.a + other.a, self.p)

    def __neg__(self):
        return FpMatrix(-self.a, self.p)

    @property
    def T(self) -> "FpMatrix":
        return FpMatrix(self.a.T, self.p)

    def det(self) -> int:
        return fp_det(self.a, self.p)

    def inverse(self) -> "FpMatrix":
        return FpMatrix(fp_inv(self.a, self.p), self.p)

    def is_identity(self) -> bool:
        return bool((self.a == np.eye(self.n, dtype=np.int64)).all())

    def tolist(self):
        return self.a.tolist()

    def __repr__(self):
        rows = "; ".join(" ".join(str(x) for x in row) for row in self.a)
        return "FpMatrix([%s], p=%d)" % (rows, self.p)


def fp_row_reduce(A, p):
    """Reduced row echelon form of A over F_p. Returns (R, pivot columns)."""
    R = np.array(A, dtype=np.int64) % p
    m, n = R.shape
    pivots = []
    row = 0
    for col in range(n):
        if row == m:
            break
        nz = np.nonzero(R[row:, col])[0]
        if not len(nz):
            continue
        r = row + nz[0]
        if r != row:
            R[[row, r]] = R[[r, row]]
        R[row] = (R[row] * inv_mod(int(R[row, col]), p)) % p
        for i in range(m):
            if i != row and R[i, col]:
                R[i] = (R[i] - R[i, col] * R[row]) % p
        pivots.append(col)
        row += 1
    return R, pivots


def fp_inv(A, p):
    A = np.asarray(A, dtype=np.int64)
    n = A.shape[0]
    R, pivots = fp_row_reduce(np.hstack([A, np.eye(n, dtype=np.int64)]), p)
    if pivots[:n] != list(range(n)):
        raise SingularMatrix("matrix is singular mod %d" % p)
    return R[:, n:]


def fp_det(A, p) -> int:
    R = np.array(A, dtype=np.int64) % p
    n = R.shape[0]
    det = 1
    for col in range(n):
        nz = np.nonzero(R[col:, col])[0]
        if not len(nz):
            return 0
        r = col + nz[0]
        if r != col:
            R[[col, r]] = R[[r, col]]
            det = -det
        piv = int(R[col, col])
        det = det * piv % p
        pinv = inv_mod(piv, p)
        for i in range(col + 1, n):
            if R[i, col]:
                R[i] = (R[i] - R[i, col] * pinv * R[col]) % p
    return det % p


def block_diag(A: FpMatrix, B: FpMatrix) -> FpMatrix:
    if A.p != B.p:
        raise DimensionMismatch("mixed moduli")
    n, k = A.n, B.n
    out = np.zeros((n + k, n + k), dtype=np.int64)
    out[:n, :n] = A.a
    out[n:, n:] = B.a
    return FpMatrix(out, A.p)


@dataclass(frozen=True)
class SymplecticForm:
    g: int
    p: int

    def __post_init__(self):
        check_prime(self.p)
        if self.g < 1:
            raise ValueError("g must be positive")

    @property
    def matrix(self) -> FpMatrix:
        return FpMatrix(standard_form_array(self.g, self.p), self.p)


def standard_form_array(g, p):
    J = np.zeros((2 * g, 2 * g), dtype=np.int64)
    J[:g, g:] = np.eye(g, dtype=np.int64)
    J[g:, :g] = -np.eye(g, dtype=np.int64)
    return J % p


def is_symplectic(M: FpMatrix, form: SymplecticForm) -> bool:
    if M.p != form.p or M.n != 2 * form.g:
        raise DimensionMismatch(
            "matrix %dx%d mod %d vs form of dimension %d mod %d" % (M.n, M.n, M.p, 2 * form.g, form.p))
    J = form.matrix.a
    return bool((((M.a.T @ J @ M.a) - J) % form.p == 0).all())


def symplectic_inverse(M: FpMatrix, form: SymplecticForm) -> FpMatrix:
    """J^-1 M^T J, which is M^-1 when M is symplectic."""
    J = form.matrix
    return J.inverse() @ M.T @ J


def sp_group_order(g: int, p: int) -> int:
    check_prime(p)
    if g < 1:
        raise ValueError("g must be positive")
    order = p ** (g * g)
    for i in range(1, g + 1):
        order *= p ** (2 * i) - 1
    return order


def enumerate_sp(g: int, p: int) -> frozenset:
    """All of Sp(2g, F_p) by exhaustive scan. Only for tiny (g, p)."""
    check_prime(p)
    n = 2 * g
    if p ** (n * n) > ENUMERATION_BOUND:
        raise TooLarge("search space p^(4g^2) = %d^%d exceeds %d" % (p, n * n, ENUMERATION_BOUND))
    J = standard_form_array(g, p)
    # fix the first row, scan the remaining rows vectorized
    rows = np.array(list(itertools.product(range(p), repeat=n)), dtype=np.int64)
    rest = rows[np.array(list(itertools.product(range(len(rows)), repeat=n - 1)), dtype=np.int64)]
    found = []
    for r0 in rows:
        Ms = np.empty((len(rest), n, n), dtype=np.int64)
        Ms[:, 0, :] = r0
        Ms[:, 1:, :] = rest
        G = np.einsum("kji,jl,klm->kim", Ms, J, Ms) % p
        found.extend(Ms[(G == J).all(axis=(1, 2))])
    return frozenset(FpMatrix(M, p) for M in found)


def _stack(mats):
    return np.stack([M.a for M in mats])


def check_closed(mats: Iterable[FpMatrix]) -> bool:
    """True iff the finite set is closed under multiplication (hence a group)."""
    mats = list(mats)
    if not mats:
        return False
    p = mats[0].p
    keys = {M.key()[2:] for M in mats}
    A = _stack(mats)
    for M in mats:
        prods = np.einsum("ij,kjl->kil", M.a, A) % p
        for P in prods.astype(np.uint8):
            if P.tobytes() not in keys:
                return False
    return True


def left_coset_count(subgroup, group) -> int:
    """Index [group : subgroup], by Lagrange and by explicit partition into cosets gH."""
    H = frozenset(subgroup)
    G = frozenset(group)
    if not H <= G:
        raise NotSubgroup("subgroup is not contained in group")
    if not check_closed(H):
        raise NotSubgroup("subgroup is not closed under multiplication")
    if not check_closed(G):
        raise NotSubgroup("group is not closed under multiplication")
    if len(G) % len(H):
        raise NotSubgroup("|H| = %d does not divide |G| = %d" % (len(H), len(G)))
    lagrange = len(G) // len(H)

    Hs = list(H)
    seen = set()
    cosets = 0
    for g in G:
        if g in seen:
            continue
        coset = {g @ h for h in Hs}
        if coset & seen:
            raise NotSubgroup("cosets overlap")
        seen |= coset
        cosets += 1
    if cosets != lagrange:
        raise NotSubgroup("coset partition gives %d, Lagrange gives %d" % (cosets, lagrange))
    return lagrange


def mulclose(gens, bound=None) -> frozenset:
    """Closure of a set of invertible matrices under multiplication."""
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator")
    I = FpMatrix.identity(gens[0].n, gens[0].p)
    found = {I}
    frontier = [I]
    while frontier:
        nxt = []
        for A in frontier:
            for B in gens:
                C = A @ B
                if C not in found:
                    found.add(C)
                    nxt.append(C)
                    if bound is not None and len(found) > bound:
                        raise TooLarge("closure exceeds %d elements" % bound)
        frontier = nxt
    return frozenset(found)
