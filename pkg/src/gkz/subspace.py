"""Linear subspaces of GF(p)^n in canonical reduced row-echelon form."""
from __future__ import annotations

import numpy as np

from . import field
from .field import DTYPE


class Subspace:
    """A subspace held by its rref basis; equality is equality of bases.

    The same object doubles as an ideal once :func:`gkz.ideals.is_ideal`
    has certified it.
    """

    __slots__ = ("p", "n", "basis", "pivots", "_key")

    def __init__(self, rows, p: int, n: int):
        rows = np.asarray(rows, dtype=DTYPE).reshape(-1, n) % p if n else np.zeros((0, 0), DTYPE)
        if rows.shape[0]:
            r, rk, piv = field.row_reduce(rows, p)
            basis = r[:rk]
        else:
            basis, piv = np.zeros((0, n), dtype=DTYPE), ()
        basis.setflags(write=False)
        self.p = p
        self.n = n
        self.basis = basis
        self.pivots = tuple(piv)
        self._key = (p, n, tuple(map(tuple, basis.tolist())))

    @classmethod
    def zero(cls, p: int, n: int) -> Subspace:
        return cls(np.zeros((0, n), dtype=DTYPE), p, n)

    @classmethod
    def full(cls, p: int, n: int) -> Subspace:
        return cls(np.eye(n, dtype=DTYPE), p, n)

    @classmethod
    def kernel_of(cls, covector, p: int) -> Subspace:
        cov = np.asarray(covector, dtype=DTYPE).reshape(1, -1)
        n = cov.shape[1]
        return cls(field.kernel_basis(cov, p), p, n)

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    @property
    def codim(self) -> int:
        return self.n - self.dim

    def __eq__(self, other):
        return isinstance(other, Subspace) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"Subspace(p={self.p}, dim={self.dim}/{self.n}, basis={self.basis.tolist()})"

    def sort_key(self):
        return (self.dim, self._key[2])

    def reduce(self, v) -> np.ndarray:
        """Remainder of ``v`` (or of each row of a 2-d array) modulo the subspace.

        The remainder is zero exactly on the subspace and vanishes on the
        pivot coordinates, so it is a canonical coset representative.
        """
        v = np.array(v, dtype=DTYPE) % self.p
        shape = v.shape
        v = v.reshape(-1, self.n)
        for row, c in zip(self.basis, self.pivots):
            v = (v - np.outer(v[:, c], row)) % self.p
        return v.reshape(shape)

    def contains(self, v) -> bool:
        return not self.reduce(v).any()

    def contains_all(self, vs) -> np.ndarray:
        vs = np.asarray(vs, dtype=DTYPE)
        if vs.size == 0:
            return np.ones(vs.shape[0], dtype=bool)
        return ~self.reduce(vs).any(axis=1)

    def is_subspace_of(self, other: Subspace) -> bool:
        return bool(other.contains_all(self.basis).all()) if self.dim else True

    def __add__(self, other: Subspace) -> Subspace:
        return Subspace(np.vstack([self.basis, other.basis]), self.p, self.n)

    def intersect(self, other: Subspace) -> Subspace:
        # v in both  <=>  v annihilated by both families of defining covectors
        eqs = np.vstack([self.annihilator(), other.annihilator()])
        if eqs.shape[0] == 0:
            return Subspace.full(self.p, self.n)
        return Subspace(field.kernel_basis(eqs, self.p), self.p, self.n)

    def annihilator(self) -> np.ndarray:
        """Covectors (rows) whose common kernel is this subspace."""
        if self.dim == 0:
            return np.eye(self.n, dtype=DTYPE)
        return field.kernel_basis(self.basis, self.p)

    def complement_coords(self) -> tuple[int, ...]:
        return tuple(c for c in range(self.n) if c not in self.pivots)

    def elements(self) -> np.ndarray:
        coeffs = field.all_vectors(self.p, self.dim)
        return coeffs @ self.basis % self.p if self.dim else np.zeros((1, self.n), DTYPE)
