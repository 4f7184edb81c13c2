"""Finite-dimensional associative algebras over GF(p) given by structure constants.

An algebra of dimension ``n`` is stored as an integer array ``sc`` of shape
``(n, n, n)`` with ``e_i * e_j = sum_k sc[i, j, k] e_k``, plus an optional
unity vector.  Elements are plain coefficient vectors (``numpy`` arrays of
length ``n``).

Unit detection uses the left-multiplication matrix: ``x`` is a unit iff
``y -> x y`` is invertible.  In finite dimension a one-sided inverse is
two-sided (an injective ``L_x`` gives ``x y = 1``; then ``L_y`` is injective
too and ``y x = 1`` follows), so the determinant test decides
invertibility.  Brute-force search over all ``p**n`` elements is kept only
in the tests as an oracle.
"""
from __future__ import annotations

from functools import cached_property

import numpy as np

from . import config, field
from .errors import DimensionMismatch, NonUnitalAlgebra, NotAUnit, ValidationError
from .field import DTYPE
from .subspace import Subspace

_CHUNK = 1 << 16


class Algebra:
    """Structure-constant algebra over GF(p); immutable once built."""

    def __init__(self, p: int, sc, unity=None, basis_names=None, name: str = ""):
        self.p = field.check_prime(p)
        sc = np.asarray(sc, dtype=DTYPE)
        if sc.size == 0:
            sc = np.zeros((0, 0, 0), dtype=DTYPE)
        n = sc.shape[0]
        if sc.shape != (n, n, n):
            raise DimensionMismatch(f"structure constants must have shape (n, n, n), got {sc.shape}")
        self.sc = sc % self.p
        self.sc.setflags(write=False)
        if unity is not None:
            unity = np.asarray(unity, dtype=DTYPE).reshape(n) % self.p
            unity.setflags(write=False)
        self.unity = unity
        if basis_names is not None:
            basis_names = tuple(str(b) for b in basis_names)
            if len(basis_names) != n:
                raise DimensionMismatch("one basis name per basis vector")
        self.basis_names = basis_names
        self.name = name

    # -- basic shape -------------------------------------------------------
    @property
    def n(self) -> int:
        return self.sc.shape[0]

    @property
    def dim(self) -> int:
        return self.n

    @property
    def is_unital(self) -> bool:
        return self.unity is not None

    @property
    def size(self) -> int:
        return self.p**self.n

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"<Algebra{label} over GF({self.p}), dim {self.n}>"

    def renamed(self, name: str) -> Algebra:
        return Algebra(self.p, self.sc, self.unity, self.basis_names, name)

    def forget_unity(self) -> Algebra:
        return Algebra(self.p, self.sc, None, self.basis_names, self.name)

    def same_table(self, other: Algebra) -> bool:
        if self.p != other.p or self.n != other.n or not np.array_equal(self.sc, other.sc):
            return False
        if self.unity is None or other.unity is None:
            return self.unity is None and other.unity is None
        return bool(np.array_equal(self.unity, other.unity))

    def one(self) -> np.ndarray:
        if self.unity is None:
            raise NonUnitalAlgebra(f"{self!r} has no unity")
        return self.unity.copy()

    def zero(self) -> np.ndarray:
        return np.zeros(self.n, dtype=DTYPE)

    def basis_vector(self, i: int) -> np.ndarray:
        v = self.zero()
        v[i] = 1
        return v

    def scalar(self, c: int) -> np.ndarray:
        return self.one() * c % self.p

    def element(self, coeffs) -> np.ndarray:
        v = np.asarray(coeffs, dtype=DTYPE).reshape(-1)
        if v.shape[0] != self.n:
            raise DimensionMismatch(f"expected {self.n} coordinates, got {v.shape[0]}")
        return v % self.p

    # -- validation --------------------------------------------------------
    def validate(self) -> list[str]:
        """Every violated associativity triple and unity condition, as text.

        An empty list means the table is a legal (unital, when a unity is
        given) associative algebra.
        """
        c, p = self.sc, self.p
        problems = []
        # (e_i e_j) e_k  vs  e_i (e_j e_k)
        left = np.einsum("ijm,mkl->ijkl", c, c) % p
        right = np.einsum("jkm,iml->ijkl", c, c) % p
        bad = np.argwhere((left != right).any(axis=3))
        for i, j, k in bad:
            problems.append(f"associativity fails at (e{i} e{j}) e{k}")
        if self.unity is not None:
            u = self.unity
            lu = np.einsum("i,ijk->jk", u, c) % p
            ru = np.einsum("j,ijk->ik", u, c) % p
            eye = np.eye(self.n, dtype=DTYPE)
            for i in range(self.n):
                if not np.array_equal(lu[i], eye[i]):
                    problems.append(f"unity fails on the left at e{i}")
                if not np.array_equal(ru[i], eye[i]):
                    problems.append(f"unity fails on the right at e{i}")
        return problems

    def is_valid(self) -> bool:
        return not self.validate()

    def check(self) -> Algebra:
        problems = self.validate()
        if problems:
            raise ValidationError(problems)
        return self

    def is_associative(self) -> bool:
        return not self.forget_unity().validate()

    @cached_property
    def is_commutative(self) -> bool:
        return bool(np.array_equal(self.sc, self.sc.transpose(1, 0, 2)))

    # -- arithmetic --------------------------------------------------------
    def _vec(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=DTYPE)
        if x.shape[-1:] != (self.n,):
            raise DimensionMismatch(f"element of length {x.shape[-1:]} in a dimension-{self.n} algebra")
        return x

    def mul(self, x, y) -> np.ndarray:
        """Product ``x * y``; broadcasts over leading axes."""
        x, y = self._vec(x), self._vec(y)
        return np.einsum("...i,...j,ijk->...k", x, y, self.sc) % self.p

    def add(self, x, y) -> np.ndarray:
        return (self._vec(x) + self._vec(y)) % self.p

    def sub(self, x, y) -> np.ndarray:
        return (self._vec(x) - self._vec(y)) % self.p

    def power(self, x, k: int) -> np.ndarray:
        out = self.one()
        for _ in range(k):
            out = self.mul(out, x)
        return out

    def left_matrix(self, x) -> np.ndarray:
        """Matrix ``L`` with ``L @ y == x * y``; broadcasts over leading axes."""
        return np.einsum("...i,ijk->...kj", self._vec(x), self.sc) % self.p

    def right_matrix(self, x) -> np.ndarray:
        """Matrix ``R`` with ``R @ y == y * x``."""
        return np.einsum("...j,ijk->...ki", self._vec(x), self.sc) % self.p

    def is_unit(self, x) -> bool:
        if self.unity is None:
            raise NonUnitalAlgebra(f"{self!r} has no unity")
        if self.n == 0:
            return False
        det, _ = field.det_and_inverse(self.left_matrix(x), self.p)
        return det != 0

    def inverse(self, x) -> np.ndarray:
        """Two-sided inverse of ``x``; :class:`NotAUnit` if none exists."""
        one = self.one()
        x = self._vec(x)
        if self.n == 0:
            raise NotAUnit("the zero algebra has no units")
        det, inv = field.det_and_inverse(self.left_matrix(x), self.p)
        if inv is None:
            raise NotAUnit(f"{x.tolist()} is not a unit")
        y = inv @ one % self.p
        assert np.array_equal(self.mul(y, x), one), "one-sided inverse not two-sided"
        return y

    # -- enumeration -------------------------------------------------------
    @cached_property
    def elements(self) -> np.ndarray:
        """All ``p**n`` elements in lexicographic order."""
        config.require_elems(self.p, self.n)
        out = field.all_vectors(self.p, self.n)
        out.setflags(write=False)
        return out

    @cached_property
    def unit_mask(self) -> np.ndarray:
        """Boolean mask over :attr:`elements` marking the units."""
        if self.unity is None:
            raise NonUnitalAlgebra(f"{self!r} has no unity")
        elems = self.elements
        if self.n == 0:
            mask = np.zeros(1, dtype=bool)
        else:
            mask = np.empty(len(elems), dtype=bool)
            for s in range(0, len(elems), _CHUNK):
                mats = self.left_matrix(elems[s : s + _CHUNK])
                mask[s : s + _CHUNK] = field.batched_det(mats, self.p) != 0
        mask.setflags(write=False)
        return mask

    @cached_property
    def units(self) -> np.ndarray:
        """The unit group, lexicographically sorted."""
        u = self.elements[self.unit_mask]
        u.setflags(write=False)
        return u

    @property
    def unit_count(self) -> int:
        return int(self.unit_mask.sum())

    def index_of(self, x) -> np.ndarray:
        return field.encode(np.asarray(x, dtype=DTYPE) % self.p, self.p)

    def is_unit_many(self, xs) -> np.ndarray:
        """Vectorised unit test through the cached mask."""
        return self.unit_mask[self.index_of(xs)]

    def product_indices(self, left_idx=None) -> np.ndarray:
        """Encoded products ``x * y`` for x in ``left_idx`` rows and all y.

        Shape ``(len(left_idx), p**n)``; the full table is ``p**(2n)``
        entries, so callers pass slices.
        """
        elems = self.elements
        xs = elems if left_idx is None else elems[left_idx]
        ly = self.left_matrix(xs)  # (m, n, n)
        prods = np.einsum("mkj,yj->myk", ly, elems) % self.p
        return field.encode(prods, self.p)

    def span_of_units(self) -> tuple[Subspace, bool]:
        """Span of the unit group and whether it is the whole algebra."""
        u = self.units
        span = Subspace(u, self.p, self.n) if len(u) else Subspace.zero(self.p, self.n)
        return span, span.dim == self.n

    def sum_of_units_bound(self, kmax: int = 4) -> int | None:
        """Least ``k <= kmax`` such that every element is a sum of at most ``k`` units.

        The empty sum is zero.  ``None`` when ``kmax`` terms do not suffice.
        """
        elems = self.elements
        reach = np.zeros(len(elems), dtype=bool)
        reach[0] = True  # zero vector sits first in lex order
        if reach.all():
            return 0
        units = self.units
        for k in range(1, kmax + 1):
            cur = elems[reach]
            sums = (cur[:, None, :] + units[None, :, :]) % self.p
            new = reach.copy()
            new[self.index_of(sums.reshape(-1, self.n))] = True
            if new.all():
                return k
            if np.array_equal(new, reach):
                return None
            reach = new
        return None

    def spectrum(self, x) -> list[int]:
        """Scalars ``lam`` with ``x - lam*1`` not a unit, ascending."""
        one = self.one()
        x = self._vec(x)
        return [lam for lam in range(self.p) if not self.is_unit((x - lam * one) % self.p)]

    def resolvent(self, x) -> list[int]:
        sigma = set(self.spectrum(x))
        return [lam for lam in range(self.p) if lam not in sigma]

    def spectrum_empty_mask(self) -> np.ndarray:
        """Mask over elements with empty spectrum."""
        elems, one = self.elements, self.one()
        empty = np.ones(len(elems), dtype=bool)
        for lam in range(self.p):
            empty &= self.is_unit_many((elems - lam * one) % self.p)
        return empty

    def idempotents(self) -> np.ndarray:
        elems = self.elements
        sq = self.mul(elems, elems)
        return elems[(sq == elems).all(axis=1)]

    def structure_key(self) -> tuple:
        unity = None if self.unity is None else tuple(self.unity.tolist())
        return (self.p, self.n, tuple(self.sc.reshape(-1).tolist()), unity)
