"""The built-in algebra corpus and seeded random algebras."""
from __future__ import annotations

import numpy as np

from . import constructions as C
from . import field
from .algebra import Algebra
from .errors import BadParameter
from .field import DTYPE

RANDOM_FIELDS = (2, 3, 5)


def builtin_corpus() -> list[Algebra]:
    """Unital members first, then non-unital ones (used by the unitisation checks)."""
    out: list[Algebra] = []
    for p in (2, 3, 5):
        for n in range(1, 5):
            out.append(C.function_algebra(p, n))
    out += [
        C.field_extension(2, 2),
        C.field_extension(3, 2),
        C.field_extension(3, 3),
        C.dual_numbers(2),
        C.dual_numbers(3),
        C.truncated_polynomials(3, 3),
        C.group_algebra(2, C.cyclic_group_table(2), "F2[C2]"),
        C.group_algebra(3, C.cyclic_group_table(2), "F3[C2]"),
        C.group_algebra(3, C.cyclic_group_table(3), "F3[C3]"),
        C.matrix_algebra(2, 2),
        C.matrix_algebra(3, 2),
        C.upper_triangular(2, 2),
        C.upper_triangular(3, 2),
    ]
    nil = nilpotent_members()
    out += [C.unitisation(a).renamed(f"unitisation({a.name})") for a in nil]
    f2, f3 = C.function_algebra(2, 1), C.function_algebra(3, 1)
    u2 = C.unitisation(C.null_algebra(2, 1)).renamed("unitisation(null1(F2))")
    u3 = C.unitisation(C.null_algebra(3, 1)).renamed("unitisation(null1(F3))")
    out += [
        C.direct_product(u2, u2).renamed("U(null1) x U(null1) (F2)"),
        C.direct_product(u2, f2).renamed("U(null1) x F2"),
        C.direct_product(u3, f3).renamed("U(null1) x F3"),
        C.direct_product(C.field_extension(2, 2), f2).renamed("GF(4) x F2"),
        C.direct_product(C.field_extension(2, 2), C.field_extension(2, 2)).renamed("GF(4) x GF(4)"),
        C.direct_product(C.field_extension(3, 2), f3).renamed("GF(9) x F3"),
        C.direct_product(C.upper_triangular(2, 2), f2).renamed("T2(F2) x F2"),
    ]
    out += nil
    out += [
        C.function_algebra(2, 1).forget_unity().renamed("F2 without unity"),
        C.function_algebra(3, 2).forget_unity().renamed("F3^2 without unity"),
        C.upper_triangular(3, 2).forget_unity().renamed("T2(F3) without unity"),
    ]
    return out


def nilpotent_members() -> list[Algebra]:
    out = []
    for p in (2, 3):
        out += [
            C.null_algebra(p, 1),
            C.null_algebra(p, 2),
            C.nilpotent_chain(p, 2),
            C.nilpotent_chain(p, 3),
            C.upper_triangular(p, 3, strict=True),
        ]
    return out


def small_corpus() -> list[Algebra]:
    """The worked-example corpus: a quick smoke run of every check."""
    return [
        C.function_algebra(3, 2),
        C.field_extension(3, 2),
        C.dual_numbers(3),
        C.group_algebra(3, C.cyclic_group_table(2), "F3[C2]"),
        C.group_algebra(3, C.cyclic_group_table(3), "F3[C3]"),
        C.matrix_algebra(3, 2),
        C.upper_triangular(3, 2),
        C.function_algebra(2, 1),
        C.function_algebra(2, 2),
        C.function_algebra(2, 3),
    ]


# -- random algebras ---------------------------------------------------------
def _associative_mask(sc: np.ndarray, p: int, skip_unity: bool = False) -> np.ndarray:
    """Batched associativity test for tables of shape ``(B, n, n, n)``.

    With ``skip_unity`` the triples involving ``e_0`` are not checked (they
    hold automatically when ``e_0`` is the unity).
    """
    s = 1 if skip_unity else 0
    inner = sc[:, s:, s:, :]
    left = np.einsum("bijm,bmkl->bijkl", inner, sc[:, :, s:, :]) % p
    right = np.einsum("bjkm,biml->bijkl", inner, sc[:, s:, :, :]) % p
    return (left == right).reshape(len(sc), -1).all(axis=1)


def random_unital_tables(p: int, dim: int, rng: np.random.Generator, count: int, batch: int = 2048) -> np.ndarray:
    """``count`` associative tables with ``e_0`` as unity, by rejection sampling.

    Products ``e_i e_j`` with ``i, j >= 1`` are uniform; the rest are fixed by
    the unity.
    """
    found = []
    total = 0
    attempts = 0
    while total < count:
        attempts += 1
        if attempts > 10_000:
            raise BadParameter(f"could not sample {count} associative tables for p={p}, dim={dim}")
        sc = np.zeros((batch, dim, dim, dim), DTYPE)
        idx = np.arange(dim)
        sc[:, 0, idx, idx] = 1
        sc[:, idx, 0, idx] = 1
        sc[:, 1:, 1:, :] = rng.integers(0, p, size=(batch, dim - 1, dim - 1, dim))
        keep = sc[_associative_mask(sc, p, skip_unity=True)]
        found.append(keep)
        total += len(keep)
    return np.concatenate(found)[:count]


def random_invertible(p: int, n: int, rng: np.random.Generator) -> np.ndarray:
    while True:
        g = rng.integers(0, p, size=(n, n))
        if field.det_and_inverse(g, p)[0] != 0:
            return g


def random_algebra(p: int, dim: int, rng: np.random.Generator, name: str = "") -> Algebra:
    """A random unital associative algebra in a random basis."""
    if dim < 1:
        raise BadParameter("dimension must be positive")
    sc = random_unital_tables(p, dim, rng, 1)[0]
    unity = np.zeros(dim, DTYPE)
    unity[0] = 1
    a = Algebra(p, sc, unity, name=name)
    return C.change_basis(a, random_invertible(p, dim, rng))


def random_corpus(count: int, seed: int, fields=RANDOM_FIELDS, dims=(2, 3)) -> list[Algebra]:
    """``count`` random algebras per field; member ``k`` uses dimension ``dims[k % len(dims)]``.

    Each member draws from its own generator seeded by ``(seed, p, k)``, so
    the list does not depend on how it is later processed.
    """
    out = []
    for p in fields:
        for k in range(count):
            rng = np.random.default_rng([seed, p, k])
            dim = dims[k % len(dims)]
            out.append(random_algebra(p, dim, rng, name=f"random(p={p}, dim={dim}, seed={seed}, k={k})"))
    return out


def find_unity(p: int, sc) -> np.ndarray | None:
    """The two-sided unity of a table, if one exists (solved linearly)."""
    sc = np.asarray(sc, dtype=DTYPE) % p
    n = sc.shape[0]
    if n == 0:
        return np.zeros(0, DTYPE)
    # u e_j = e_j: sum_i u_i sc[i, j, k] = delta_jk ; e_j u = e_j: sum_i u_i sc[j, i, k] = delta_jk
    rows = np.concatenate([sc.transpose(1, 2, 0).reshape(n * n, n), sc.transpose(0, 2, 1).reshape(n * n, n)])
    rhs = np.concatenate([np.eye(n, dtype=DTYPE).reshape(-1)] * 2)
    aug = np.concatenate([rows, rhs[:, None]], axis=1)
    r, rk, piv = field.row_reduce(aug, p)
    if n in piv:
        return None
    u = np.zeros(n, DTYPE)
    for i, c in enumerate(piv):
        u[c] = r[i, n]
    return u
