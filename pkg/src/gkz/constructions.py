"""Named algebras and algebra-building operations.

Everything here returns a new :class:`~gkz.algebra.Algebra`; inputs are
never modified.
"""
from __future__ import annotations

from itertools import product

import numpy as np

from . import config, field
from .algebra import Algebra
from .errors import (
    AssociativityViolation,
    BadParameter,
    FieldMismatch,
    NotAGroup,
    NotAnIdeal,
)
from .field import DTYPE
from .ideals import is_ideal
from .subspace import Subspace


def zero_algebra(p: int) -> Algebra:
    return Algebra(p, np.zeros((0, 0, 0), DTYPE), np.zeros(0, DTYPE), name="0")


def function_algebra(p: int, x_size: int) -> Algebra:
    """The algebra GF(p)^X of all functions on an ``x_size``-point set.

    Basis vector ``e_i`` is the indicator of the i-th point, so indicators of
    arbitrary subsets are the 0/1 vectors.
    """
    field.check_prime(p)
    if x_size < 1:
        raise BadParameter("X must be nonempty")
    config.require_elems(p, x_size, "function algebra")
    sc = np.zeros((x_size,) * 3, DTYPE)
    for i in range(x_size):
        sc[i, i, i] = 1
    return Algebra(p, sc, np.ones(x_size, DTYPE), [f"I{i}" for i in range(x_size)], f"F{p}^{x_size}")


def is_function_algebra_table(a: Algebra) -> bool:
    """True when ``a`` is literally GF(p)^n in its indicator basis."""
    if a.unity is None or a.n == 0:
        return False
    return a.same_table(function_algebra(a.p, a.n))


def check_group_table(cayley) -> tuple[np.ndarray, int]:
    """Validate a Cayley table; return it as an array and the identity index."""
    t = np.asarray(cayley, dtype=DTYPE)
    if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
        raise NotAGroup("Cayley table must be a nonempty square array")
    g = t.shape[0]
    if t.min() < 0 or t.max() >= g:
        raise NotAGroup("table entries must be element indices")
    r = np.arange(g)
    if not np.array_equal(t[t[:, :, None], r[None, None, :]], t[r[:, None, None], t[None, :, :]]):
        raise NotAGroup("operation is not associative")
    idents = [e for e in range(g) if (t[e] == np.arange(g)).all() and (t[:, e] == np.arange(g)).all()]
    if not idents:
        raise NotAGroup("no identity element")
    e = idents[0]
    for x in range(g):
        if not ((t[x] == e).any() and (t[:, x] == e).any()):
            raise NotAGroup(f"element {x} has no inverse")
    return t, e


def cyclic_group_table(k: int) -> np.ndarray:
    r = np.arange(k)
    return (r[:, None] + r[None, :]) % k


def group_algebra(p: int, cayley, name: str = "") -> Algebra:
    """GF(p)[G] with basis the group elements."""
    t, e = check_group_table(cayley)
    g = t.shape[0]
    config.require_elems(p, g, "group algebra")
    sc = np.zeros((g, g, g), DTYPE)
    for i in range(g):
        for j in range(g):
            sc[i, j, t[i, j]] = 1
    unity = np.zeros(g, DTYPE)
    unity[e] = 1
    return Algebra(p, sc, unity, [f"g{i}" for i in range(g)], name or f"F{p}[G{g}]")


def matrix_algebra(p: int, m: int) -> Algebra:
    """M_m(GF(p)) in the matrix-unit basis ``E_ab`` at index ``a*m + b``."""
    field.check_prime(p)
    if m < 1:
        raise BadParameter("matrix size must be positive")
    n = m * m
    sc = np.zeros((n, n, n), DTYPE)
    for a, b, c in product(range(m), repeat=3):
        sc[a * m + b, b * m + c, a * m + c] = 1
    unity = np.zeros(n, DTYPE)
    for a in range(m):
        unity[a * m + a] = 1
    names = [f"E{a}{b}" for a in range(m) for b in range(m)]
    return Algebra(p, sc, unity, names, f"M{m}(F{p})")


def upper_triangular(p: int, m: int, strict: bool = False) -> Algebra:
    """(Strictly) upper-triangular m x m matrices; the strict one is non-unital."""
    pairs = [(a, b) for a in range(m) for b in range(m) if (b > a if strict else b >= a)]
    index = {ab: k for k, ab in enumerate(pairs)}
    n = len(pairs)
    sc = np.zeros((n, n, n), DTYPE)
    for (a, b), i in index.items():
        for (b2, c), j in index.items():
            if b == b2:
                sc[i, j, index[(a, c)]] = 1
    unity = None
    if not strict:
        unity = np.zeros(n, DTYPE)
        for a in range(m):
            unity[index[(a, a)]] = 1
    kind = "N" if strict else "T"
    return Algebra(p, sc, unity, [f"E{a}{b}" for a, b in pairs], f"{kind}{m}(F{p})")


def truncated_polynomials(p: int, k: int) -> Algebra:
    """GF(p)[x]/(x^k), basis 1, x, ..., x^(k-1)."""
    sc = np.zeros((k, k, k), DTYPE)
    for i in range(k):
        for j in range(k):
            if i + j < k:
                sc[i, j, i + j] = 1
    unity = np.zeros(k, DTYPE)
    unity[0] = 1
    return Algebra(p, sc, unity, [f"x^{i}" for i in range(k)], f"F{p}[x]/x^{k}")


def dual_numbers(p: int) -> Algebra:
    return truncated_polynomials(p, 2).renamed(f"F{p}[eps]")


def polynomial_quotient(p: int, modulus, name: str = "") -> Algebra:
    """GF(p)[t]/(f) for a monic ``f`` given by coefficients, constant term first."""
    f = [int(c) % p for c in modulus]
    if not f or f[-1] != 1:
        raise BadParameter("modulus polynomial must be monic")
    k = len(f) - 1
    # multiplication by t on the basis 1, t, ..., t^(k-1)
    def times_t(v):
        top = v[-1]
        out = np.roll(v, 1)
        out[0] = 0
        return (out - top * np.array(f[:-1], DTYPE)) % p

    powers = [np.eye(k, dtype=DTYPE)[0]]
    for _ in range(2 * k - 2):
        powers.append(times_t(powers[-1]))
    sc = np.zeros((k, k, k), DTYPE)
    for i in range(k):
        for j in range(k):
            sc[i, j] = powers[i + j]
    unity = np.zeros(k, DTYPE)
    unity[0] = 1
    return Algebra(p, sc, unity, [f"t^{i}" for i in range(k)], name or f"F{p}[t]/f")


def _is_irreducible(p: int, f: list[int]) -> bool:
    k = len(f) - 1
    if k == 1:
        return True
    a = polynomial_quotient(p, f)
    # a field has no zero divisors; the quotient is a field iff f is irreducible
    from .ideals import has_zero_divisors

    return not has_zero_divisors(a)


def field_extension(p: int, k: int) -> Algebra:
    """GF(p^k) as a k-dimensional GF(p)-algebra.

    Uses the lexicographically first monic irreducible of degree ``k``.
    """
    field.check_prime(p)
    config.require_elems(p, k, "field extension")
    for tail in product(range(p), repeat=k):
        f = list(reversed(tail)) + [1]
        if f[0] == 0 and k > 1:
            continue
        if _is_irreducible(p, f):
            return polynomial_quotient(p, f, f"GF({p}^{k})/F{p}")
    raise AssertionError("no irreducible polynomial found")


def null_algebra(p: int, n: int) -> Algebra:
    """n-dimensional algebra with all products zero; non-unital."""
    return Algebra(p, np.zeros((n, n, n), DTYPE), None, name=f"null{n}(F{p})")


def nilpotent_chain(p: int, n: int) -> Algebra:
    """x, x^2, ..., x^n with x^(n+1) = 0; non-unital, nilpotent."""
    sc = np.zeros((n, n, n), DTYPE)
    for i in range(n):
        for j in range(n):
            if i + j + 2 <= n:
                sc[i, j, i + j + 1] = 1
    return Algebra(p, sc, None, [f"x^{i + 1}" for i in range(n)], f"xF{p}[x]/x^{n + 1}")


def direct_product(a: Algebra, b: Algebra) -> Algebra:
    if a.p != b.p:
        raise FieldMismatch(f"GF({a.p}) vs GF({b.p})")
    n, m = a.n, b.n
    sc = np.zeros((n + m,) * 3, DTYPE)
    sc[:n, :n, :n] = a.sc
    sc[n:, n:, n:] = b.sc
    unity = None
    if a.unity is not None and b.unity is not None:
        unity = np.concatenate([a.unity, b.unity])
    names = None
    if a.basis_names and b.basis_names:
        names = [f"{x}" for x in a.basis_names] + [f"{x}'" for x in b.basis_names]
    return Algebra(a.p, sc, unity, names, f"{a.name} x {b.name}" if a.name and b.name else "")


class QuotientMap:
    """Canonical projection ``A -> A/I`` together with its linear section.

    The quotient basis is indexed by the non-pivot coordinates of the rref
    basis of ``I``: an element is reduced modulo ``I`` (which clears the
    pivot coordinates) and the remaining coordinates are read off.
    """

    def __init__(self, ideal: Subspace):
        self.ideal = ideal
        self.coords = ideal.complement_coords()

    def __call__(self, x) -> np.ndarray:
        r = self.ideal.reduce(x)
        return r[..., list(self.coords)]

    def lift(self, y) -> np.ndarray:
        y = np.asarray(y, dtype=DTYPE)
        out = np.zeros(y.shape[:-1] + (self.ideal.n,), DTYPE)
        out[..., list(self.coords)] = y
        return out


def quotient(a: Algebra, ideal: Subspace) -> tuple[Algebra, QuotientMap]:
    """``A/I`` for a two-sided ideal ``I`` and the projection onto it."""
    if not is_ideal(a, ideal, "two_sided"):
        raise NotAnIdeal(f"{ideal!r} is not a two-sided ideal")
    proj = QuotientMap(ideal)
    reps = np.eye(a.n, dtype=DTYPE)[list(proj.coords)]
    prods = a.mul(reps[:, None, :], reps[None, :, :])
    sc = proj(prods)
    unity = None if a.unity is None else proj(a.unity)
    names = None
    if a.basis_names:
        names = [a.basis_names[c] for c in proj.coords]
    q = Algebra(a.p, sc, unity, names, f"{a.name}/I" if a.name else "")
    return q, proj


def subalgebra(a: Algebra, span: Subspace) -> Algebra:
    """The subalgebra spanned by ``span``'s rref basis; must be closed."""
    basis = span.basis
    prods = a.mul(basis[:, None, :], basis[None, :, :])
    flat = prods.reshape(-1, a.n)
    if not span.contains_all(flat).all():
        raise BadParameter("subspace is not closed under multiplication")
    # rref basis: coordinates of a member are its pivot entries
    sc = prods[..., list(span.pivots)]
    unity = None
    if a.unity is not None and span.contains(a.unity):
        unity = a.unity[list(span.pivots)]
    return Algebra(a.p, sc, unity, name=f"sub({a.name})" if a.name else "")


def unitisation(a: Algebra) -> Algebra:
    """``F (+) A`` with ``(l + x)(m + y) = lm + l y + m x + x y``.

    The adjoined unity is basis vector 0; ``A`` sits at indices ``1..n``.
    """
    if not a.is_associative():
        raise AssociativityViolation(f"{a!r} is not associative")
    n = a.n
    sc = np.zeros((n + 1,) * 3, DTYPE)
    sc[0, 0, 0] = 1
    for i in range(n):
        sc[0, i + 1, i + 1] = 1
        sc[i + 1, 0, i + 1] = 1
    sc[1:, 1:, 1:] = a.sc
    unity = np.zeros(n + 1, DTYPE)
    unity[0] = 1
    names = ["1"] + (list(a.basis_names) if a.basis_names else [f"a{i}" for i in range(n)])
    return Algebra(a.p, sc, unity, names, f"unitisation({a.name})" if a.name else "")


def embedded_ideal(a: Algebra) -> Subspace:
    """The copy of a non-unital ``a`` inside :func:`unitisation`."""
    return Subspace(np.eye(a.n + 1, dtype=DTYPE)[1:], a.p, a.n + 1)


def unitisation_conditions(a: Algebra) -> dict[str, bool]:
    """The five equivalent conditions characterising radical algebras.

    radical: every ``x`` is quasiregular (``x + y + x y = 0`` solvable);
    jac: ``A`` is the radical of the unitisation ``B``;
    one_plus: ``1 + A`` lies in ``U(B)``;
    scaled: ``U(B)`` is exactly ``F* (1 + A)``;
    complement: ``U(B) = B minus A``.
    """
    from .ideals import jacobson_radical

    b = unitisation(a)
    inner = embedded_ideal(a)
    elems = b.elements
    in_a = inner.contains_all(elems)
    unit = b.unit_mask
    one = b.one()
    a_elems = elems[in_a]

    # quasiregularity checked inside A itself, independently of U(B)
    a_all = a.elements
    sums = (a_all[:, None, :] + a_all[None, :, :] + a.mul(a_all[:, None, :], a_all[None, :, :])) % a.p
    radical = bool((~sums.any(axis=2)).any(axis=1).all())

    one_plus = bool(b.is_unit_many((one + a_elems) % a.p).all())
    scaled_set = np.zeros(len(elems), dtype=bool)
    for lam in range(1, a.p):
        scaled_set[b.index_of(lam * (one + a_elems) % a.p)] = True
    scaled = bool(np.array_equal(scaled_set, unit))
    complement = bool(np.array_equal(unit, ~in_a))
    jac = jacobson_radical(b) == inner
    return {"radical": radical, "jac": jac, "one_plus": one_plus, "scaled": scaled, "complement": complement}


def is_radical_nonunital(a: Algebra) -> bool:
    """Whether every element of ``a`` is quasiregular in its unitisation.

    Also asserts the equivalent form ``U(B) = B minus A``.
    """
    config.require_elems(a.p, a.n + 1, "radical test")
    b = unitisation(a)
    inner = embedded_ideal(a)
    elems = b.elements
    in_a = inner.contains_all(elems)
    quasi = bool(b.is_unit_many((b.one() + elems[in_a]) % a.p).all())
    complement = bool(np.array_equal(b.unit_mask, ~in_a))
    assert quasi == complement, "1 + A in U(B) disagrees with U(B) = B minus A"
    return quasi


def change_basis(a: Algebra, g) -> Algebra:
    """Same algebra in the basis ``f_i = sum_j g[i, j] e_j`` (``g`` invertible)."""
    g = np.asarray(g, dtype=DTYPE) % a.p
    det, ginv = field.det_and_inverse(g, a.p)
    if ginv is None:
        raise BadParameter("change of basis must be invertible")
    prods = np.einsum("ia,jb,abk->ijk", g, g, a.sc) % a.p
    sc = prods @ ginv % a.p
    unity = None if a.unity is None else a.unity @ ginv % a.p
    return Algebra(a.p, sc, unity, name=a.name)
