"""Subspaces, ideals, radicals, primes and localisation of structure-constant algebras."""
from __future__ import annotations

from typing import Iterator, Literal

import numpy as np

from . import config, field
from .algebra import Algebra
from .errors import CapExceeded, InternalNonlinear, NotCommutative, NotPrime
from .field import DTYPE
from .subspace import Subspace

Side = Literal["left", "right", "two_sided"]
SIDES = ("left", "right", "two_sided")


# -- hyperplanes -----------------------------------------------------------
def normalized_covectors(p: int, n: int) -> np.ndarray:
    """Nonzero covectors whose last nonzero coordinate is 1, lexicographically.

    One per hyperplane of GF(p)^n, ``(p**n - 1) / (p - 1)`` in total.
    """
    count = (p**n - 1) // (p - 1)
    if count > config.caps().max_elems:
        raise CapExceeded(f"{count} hyperplanes exceed cap {config.caps().max_elems}")
    vecs = field.all_vectors(p, n)[1:]
    nz = vecs != 0
    last = n - 1 - np.argmax(nz[:, ::-1], axis=1)
    return vecs[vecs[np.arange(len(vecs)), last] == 1]


def hyperplanes(a: Algebra) -> Iterator[Subspace]:
    """Every codimension-1 subspace, as kernels of normalized covectors."""
    for cov in normalized_covectors(a.p, a.n):
        yield Subspace.kernel_of(cov, a.p)


def hyperplane_covector(v: Subspace) -> np.ndarray:
    """The normalized covector whose kernel is the hyperplane ``v``."""
    if v.codim != 1:
        raise ValueError(f"expected a hyperplane, got codimension {v.codim}")
    cov = v.annihilator()[0]
    last = int(np.nonzero(cov)[0][-1])
    return cov * pow(int(cov[last]), -1, v.p) % v.p


# -- ideals ----------------------------------------------------------------
def _products_with_basis(a: Algebra, rows: np.ndarray, side: str) -> np.ndarray:
    """All products e_i * b (left) or b * e_i (right) for b among ``rows``."""
    if side == "left":
        prods = np.einsum("ijk,bj->bik", a.sc, rows)
    else:
        prods = np.einsum("ijk,bi->bjk", a.sc, rows)
    return prods.reshape(-1, a.n) % a.p


def is_ideal(a: Algebra, v: Subspace, side: Side = "two_sided") -> bool:
    """Whether ``v`` is closed under multiplication by ``a`` on the given side."""
    if v.dim == 0 or a.n == 0:
        return True
    sides = ("left", "right") if side == "two_sided" else (side,)
    return all(v.contains_all(_products_with_basis(a, v.basis, s)).all() for s in sides)


def ideal_generated(a: Algebra, gens, side: Side = "two_sided") -> Subspace:
    """Smallest ideal of the given side containing ``gens`` (closure iteration)."""
    gens = np.asarray(gens, dtype=DTYPE).reshape(-1, a.n) % a.p
    cur = Subspace(gens, a.p, a.n)
    sides = ("left", "right") if side == "two_sided" else (side,)
    while True:
        extra = [_products_with_basis(a, cur.basis, s) for s in sides if cur.dim]
        nxt = Subspace(np.vstack([cur.basis, *extra]), a.p, a.n) if extra else cur
        if nxt.dim == cur.dim:
            return cur
        cur = nxt


def closure_witness(a: Algebra, v: Subspace) -> np.ndarray:
    """Finitely many vectors of ``v`` whose two-sided ideal closure is ``a``.

    Greedy: add basis vectors of ``v`` until both ``A v0 = A`` and
    ``v0 A = A`` hold.  Returns an empty array if no subset works.
    """
    chosen = []
    full = a.n
    for b in v.basis:
        chosen.append(b)
        rows = np.array(chosen)
        left = Subspace(_products_with_basis(a, rows, "left"), a.p, a.n)
        right = Subspace(_products_with_basis(a, rows, "right"), a.p, a.n)
        if left.dim == full and right.dim == full:
            return rows
    return np.zeros((0, a.n), dtype=DTYPE)


# -- lattice enumeration ---------------------------------------------------
def _rref_matrices(p: int, n: int, k: int) -> Iterator[np.ndarray]:
    from itertools import combinations, product

    for piv in combinations(range(n), k):
        free = [(r, c) for r in range(k) for c in range(piv[r] + 1, n) if c not in piv]
        for vals in product(range(p), repeat=len(free)):
            m = np.zeros((k, n), dtype=DTYPE)
            for r, c in enumerate(piv):
                m[r, c] = 1
            for (r, c), val in zip(free, vals):
                m[r, c] = val
            yield m


def all_subspaces(a: Algebra) -> list[Subspace]:
    """Every subspace exactly once, by dimension then lexicographic basis."""
    config.require_subspace_enum(a.p, a.n)
    out = []
    for k in range(a.n + 1):
        for m in _rref_matrices(a.p, a.n, k):
            out.append(Subspace(m, a.p, a.n))
    return out


def all_ideals(a: Algebra, side: Side = "two_sided") -> list[Subspace]:
    return [v for v in all_subspaces(a) if is_ideal(a, v, side)]


def maximal_one_sided_ideals(a: Algebra, side: Side = "left") -> list[Subspace]:
    """Proper ideals of the given side that are maximal among proper ones."""
    proper = [v for v in all_ideals(a, side) if v.dim < a.n]
    out = []
    for v in proper:
        if not any(w.dim > v.dim and v.is_subspace_of(w) for w in proper):
            out.append(v)
    return out


def intersect_all(spaces: list[Subspace], p: int, n: int) -> Subspace:
    cur = Subspace.full(p, n)
    for s in spaces:
        cur = cur.intersect(s)
    return cur


# -- radical ---------------------------------------------------------------
def subspace_from_set(vectors: np.ndarray, p: int, n: int) -> Subspace:
    """Subspace spanned by ``vectors``, after checking they already form one."""
    span = Subspace(vectors, p, n) if len(vectors) else Subspace.zero(p, n)
    if span.dim and len(vectors) != p**span.dim:
        raise InternalNonlinear(f"set of {len(vectors)} vectors is not a subspace (span has {p ** span.dim})")
    if len(vectors) == 0:
        raise InternalNonlinear("empty set is not a subspace")
    return span


def jacobson_radical(a: Algebra) -> Subspace:
    """``{x : 1 - z x is a unit for every z}``, computed by brute force."""
    total = a.size
    if total * total > config.caps().max_pairs:
        raise CapExceeded(f"radical sweep needs {total}^2 products")
    if a.n == 0:
        return Subspace.zero(a.p, 0)
    elems, mask, one = a.elements, a.unit_mask, a.one()
    keep = np.zeros(total, dtype=bool)
    step = max(1, (1 << 18) // total)
    for s in range(0, total, step):
        xs = elems[s : s + step]
        rx = a.right_matrix(xs)  # z -> z x
        zx = np.einsum("mkj,zj->mzk", rx, elems) % a.p
        diff = (one[None, None, :] - zx) % a.p
        ok = mask[field.encode(diff, a.p)].all(axis=1)
        keep[s : s + step] = ok
    jac = subspace_from_set(elems[keep], a.p, a.n)
    if not is_ideal(a, jac, "two_sided"):
        raise InternalNonlinear("radical is not a two-sided ideal")
    return jac


def radical_from_maximal_ideals(a: Algebra, side: Side = "left") -> Subspace:
    """Intersection of the maximal one-sided ideals (the classical definition)."""
    return intersect_all(maximal_one_sided_ideals(a, side), a.p, a.n)


# -- primes and localisation ----------------------------------------------
def has_zero_divisors(a: Algebra) -> bool:
    elems = a.elements[1:]
    if len(elems) == 0:
        return False
    prods = a.mul(elems[:, None, :], elems[None, :, :])
    return bool((~prods.any(axis=2)).any())


def prime_ideals(a: Algebra) -> list[Subspace]:
    """Ideals P with ``A/P`` nonzero and free of zero divisors (commutative ``a``)."""
    from .constructions import quotient

    if not a.is_commutative:
        raise NotCommutative(f"{a!r} is not commutative")
    out = []
    for v in all_ideals(a, "two_sided"):
        if v.dim == a.n:
            continue
        q, _ = quotient(a, v)
        if not has_zero_divisors(q):
            out.append(v)
    return out


def saturation(a: Algebra, prime: Subspace) -> Subspace:
    """``{x : s x = 0 for some s outside prime}``."""
    elems = a.elements
    outside = elems[~prime.contains_all(elems)]
    hit = np.zeros(len(elems), dtype=bool)
    for s in outside:
        prods = a.mul(s[None, :], elems)
        hit |= ~prods.any(axis=1)
    return subspace_from_set(elems[hit], a.p, a.n)


def is_local(a: Algebra) -> bool:
    return len(maximal_one_sided_ideals(a, "two_sided")) == 1


def localize_at_prime(a: Algebra, prime: Subspace):
    """Localisation of a finite commutative algebra at a prime ideal.

    For a finite ring the localisation is the quotient by the saturation
    ideal: multiplication by any ``s`` outside the prime is injective on the
    quotient, hence bijective, so every such ``s`` already becomes a unit and
    the quotient has the universal property.  Both facts are asserted.
    Returns ``(A_P, canonical map)``.
    """
    from .constructions import quotient

    if not a.is_commutative:
        raise NotCommutative(f"{a!r} is not commutative")
    if prime not in prime_ideals(a):
        raise NotPrime(f"{prime!r} is not a prime ideal")
    sat = saturation(a, prime)
    loc, proj = quotient(a, sat)
    elems = a.elements
    outside = elems[~prime.contains_all(elems)]
    images = proj(outside)
    assert loc.is_unit_many(images).all(), "element outside the prime not inverted"
    assert is_local(loc), "localisation is not local"
    return loc.renamed(f"{a.name}_P" if a.name else ""), proj
