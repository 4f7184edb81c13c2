"""Exact arithmetic and dense linear algebra over prime fields GF(p).

Matrices are plain ``numpy`` integer arrays whose entries are residues in
``[0, p)``; every function takes the modulus explicitly and returns fresh,
reduced arrays.  Vectors are enumerated in lexicographic order with the
first coordinate most significant, which is also the order used for every
sorted set the package reports.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import BadParameter, NotSquare, ZeroInverse

DTYPE = np.int64


@lru_cache(maxsize=None)
def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def check_prime(p: int) -> int:
    if not isinstance(p, (int, np.integer)) or not is_prime(int(p)):
        raise BadParameter(f"modulus must be prime, got {p!r}")
    return int(p)


@dataclass(frozen=True)
class FieldScalar:
    """A residue ``value`` modulo the prime ``p``."""

    value: int
    p: int

    def __post_init__(self):
        check_prime(self.p)
        object.__setattr__(self, "value", int(self.value) % self.p)

    def _coerce(self, other) -> int:
        if isinstance(other, FieldScalar):
            if other.p != self.p:
                raise BadParameter(f"moduli differ: {self.p} vs {other.p}")
            return other.value
        if isinstance(other, (int, np.integer)):
            return int(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else FieldScalar(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else FieldScalar(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else FieldScalar(o - self.value, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else FieldScalar(self.value * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return FieldScalar(-self.value, self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * scalar_inverse(FieldScalar(o, self.p))

    def __pow__(self, k: int):
        if k < 0:
            return scalar_inverse(self) ** (-k)
        return FieldScalar(pow(self.value, k, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, FieldScalar):
            return self.p == other.p and self.value == other.value
        if isinstance(other, (int, np.integer)):
            return self.value == int(other) % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value} (mod {self.p})"

    def __str__(self):
        return str(self.value)


def scalar_inverse(a, p: int | None = None):
    """Multiplicative inverse of ``a`` in GF(p).

    ``a`` is either a :class:`FieldScalar` (then ``p`` is ignored and a
    ``FieldScalar`` comes back) or an integer together with ``p``.
    """
    if isinstance(a, FieldScalar):
        if a.value == 0:
            raise ZeroInverse(f"0 has no inverse mod {a.p}")
        return FieldScalar(pow(a.value, -1, a.p), a.p)
    if p is None:
        raise BadParameter("modulus required for integer input")
    a = int(a) % p
    if a == 0:
        raise ZeroInverse(f"0 has no inverse mod {p}")
    return pow(a, -1, p)


def as_matrix(m, p: int) -> np.ndarray:
    arr = np.array(m, dtype=DTYPE)
    if arr.ndim == 1:
        arr = arr.reshape(1, -1) if arr.size else arr.reshape(0, 0)
    return np.mod(arr, p)


def row_reduce(m, p: int) -> tuple[np.ndarray, int, tuple[int, ...]]:
    """Reduced row-echelon form of ``m`` over GF(p).

    Returns ``(rref, rank, pivots)``; ``rref`` has the shape of ``m`` with
    zero rows at the bottom and every pivot equal to 1.
    """
    a = as_matrix(m, p).copy()
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            a[[r, k]] = a[[k, r]]
        a[r] = (a[r] * pow(int(a[r, c]), -1, p)) % p
        col = a[:, c].copy()
        col[r] = 0
        a = (a - np.outer(col, a[r])) % p
        pivots.append(c)
        r += 1
    return a, r, tuple(pivots)


def rref_basis(m, p: int, cols: int | None = None) -> np.ndarray:
    """Nonzero rows of the rref of ``m``: the canonical basis of its row space."""
    a = as_matrix(m, p)
    if a.size == 0:
        return np.zeros((0, cols if cols is not None else a.shape[1]), dtype=DTYPE)
    r, rank, _ = row_reduce(a, p)
    return r[:rank]


def rank(m, p: int) -> int:
    a = as_matrix(m, p)
    if a.size == 0:
        return 0
    return row_reduce(a, p)[1]


def kernel_basis(m, p: int) -> np.ndarray:
    """Basis of the right null space ``{v : m v = 0}``, one vector per row."""
    a = as_matrix(m, p)
    cols = a.shape[1]
    if a.shape[0] == 0:
        return np.eye(cols, dtype=DTYPE)
    r, rk, pivots = row_reduce(a, p)
    free = [c for c in range(cols) if c not in pivots]
    out = np.zeros((len(free), cols), dtype=DTYPE)
    for t, f in enumerate(free):
        out[t, f] = 1
        for i, pc in enumerate(pivots):
            out[t, pc] = (-r[i, f]) % p
    return out


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=DTYPE)


def det_and_inverse(m, p: int) -> tuple[int, np.ndarray | None]:
    """Determinant of a square matrix and its inverse when it exists."""
    a = as_matrix(m, p)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NotSquare(f"expected a square matrix, got shape {a.shape}")
    n = a.shape[0]
    aug = np.concatenate([a, identity(n)], axis=1)
    det = 1
    for c in range(n):
        nz = np.nonzero(aug[c:, c])[0]
        if nz.size == 0:
            return 0, None
        k = c + int(nz[0])
        if k != c:
            aug[[c, k]] = aug[[k, c]]
            det = -det
        piv = int(aug[c, c])
        det = det * piv % p
        aug[c] = aug[c] * pow(piv, -1, p) % p
        col = aug[:, c].copy()
        col[c] = 0
        aug = (aug - np.outer(col, aug[c])) % p
    return det % p, aug[:, n:]


def batched_det(ms: np.ndarray, p: int) -> np.ndarray:
    """Determinants mod p of a stack of square matrices, shape ``(B, n, n)``."""
    a = np.mod(np.array(ms, dtype=DTYPE), p)
    B, n, _ = a.shape
    det = np.ones(B, dtype=DTYPE)
    if n == 0:
        return det
    inv_table = np.zeros(p, dtype=DTYPE)
    inv_table[1:] = [pow(k, -1, p) for k in range(1, p)]
    rows = np.arange(B)
    for c in range(n):
        nz = a[:, c:, c] != 0
        has = nz.any(axis=1)
        det[~has] = 0
        k = c + nz.argmax(axis=1)
        swap = has & (k != c)
        det[swap] = (-det[swap]) % p
        top = a[rows, c].copy()
        a[rows, c] = a[rows, k]
        a[rows, k] = top
        piv = a[:, c, c]
        det = det * piv % p
        scaled = a[:, c] * inv_table[piv][:, None] % p
        a[:, c] = scaled
        factors = a[:, :, c].copy()
        factors[:, c] = 0
        a = (a - factors[:, :, None] * scaled[:, None, :]) % p
    return det


def all_vectors(p: int, n: int) -> np.ndarray:
    """Every vector of GF(p)^n, lexicographically sorted (first coordinate major)."""
    total = p ** n
    idx = np.arange(total, dtype=DTYPE)
    out = np.empty((total, n), dtype=DTYPE)
    for i in range(n - 1, -1, -1):
        out[:, i] = idx % p
        idx //= p
    return out


def encode(vecs: np.ndarray, p: int) -> np.ndarray:
    """Position of each vector in :func:`all_vectors` order."""
    vecs = np.asarray(vecs, dtype=DTYPE)
    n = vecs.shape[-1]
    weights = p ** np.arange(n - 1, -1, -1, dtype=DTYPE)
    return vecs @ weights


def lex_key(v) -> tuple[int, ...]:
    return tuple(int(x) for x in v)
