"""Deciding the GKZ property of a finite algebra, with certified refutations.

An algebra is GKZ when every linear functional with ``L(1) = 1`` that never
vanishes on a unit is multiplicative.  Such functionals correspond exactly
to codimension-1 subspaces (their kernels) that contain no unit, and the
functional is multiplicative iff its kernel is a two-sided ideal.  So the
decision reduces to a sweep over the ``(p**n - 1)/(p - 1)`` hyperplanes.

Multiplicativity is checked on basis pairs only: both ``L(xy)`` and
``L(x)L(y)`` are bilinear in ``(x, y)``, so agreement on ``e_i, e_j`` for
all ``i, j`` gives agreement everywhere.  The brute-force oracle
:func:`decide_gkz_bruteforce` checks all element pairs instead.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Any, Callable, Iterable

import numpy as np

from . import config, field
from .algebra import Algebra
from .errors import CapExceeded, ContainsUnity
from .field import DTYPE
from .ideals import hyperplane_covector, jacobson_radical, normalized_covectors
from .subspace import Subspace


@dataclass(frozen=True, eq=False)
class Functional:
    """A covector on ``algebra`` normalised so that it takes the value 1 at the unity."""

    algebra: Algebra
    covector: np.ndarray

    def __post_init__(self):
        cov = np.asarray(self.covector, dtype=DTYPE) % self.algebra.p
        object.__setattr__(self, "covector", cov)

    def __call__(self, x) -> Any:
        return np.asarray(x, dtype=DTYPE) @ self.covector % self.algebra.p

    def kernel(self) -> Subspace:
        return Subspace.kernel_of(self.covector, self.algebra.p)

    def to_list(self) -> list[int]:
        return [int(v) for v in self.covector]


@dataclass(frozen=True, eq=False)
class Witness:
    """A unit-nonvanishing normalised functional and a pair where it is not multiplicative."""

    functional: Functional
    a: np.ndarray
    b: np.ndarray

    @property
    def values(self) -> tuple[int, int]:
        f, alg = self.functional, self.functional.algebra
        lhs = int(f(alg.mul(self.a, self.b)))
        rhs = int(f(self.a)) * int(f(self.b)) % alg.p
        return lhs, rhs

    def to_dict(self) -> dict:
        lhs, rhs = self.values
        return {
            "model": "finite",
            "functional": self.functional.to_list(),
            "pair": [[int(v) for v in self.a], [int(v) for v in self.b]],
            "values": [lhs, rhs],
        }


@dataclass
class GkzReport:
    name: str
    p: int
    n: int
    is_gkz: bool
    is_vacuous: bool
    unit_count: int
    unit_generated: bool
    sum_units_bound: int | None
    jac_dim: int | None
    hyperplane_count: int
    unit_avoiding_hyperplane_count: int
    witnesses: list[Witness] = dc_field(default_factory=list)

    def __post_init__(self):
        assert self.is_gkz or not self.is_vacuous, "vacuous GKZ must be GKZ"
        assert bool(self.witnesses) == (not self.is_gkz), "witnesses exist iff not GKZ"

    @property
    def complexity(self) -> str:
        return f"{self.hyperplane_count} hyperplanes x O(n^3) field ops, n={self.n}"

    def to_dict(self, witnesses: bool = True) -> dict:
        out = {
            "name": self.name,
            "p": self.p,
            "dim": self.n,
            "is_gkz": self.is_gkz,
            "is_vacuous": self.is_vacuous,
            "units": self.unit_count,
            "unit_generated": self.unit_generated,
            "sum_units_bound": self.sum_units_bound,
            "jac_dim": self.jac_dim,
            "hyperplanes": self.hyperplane_count,
            "unit_avoiding_hyperplanes": self.unit_avoiding_hyperplane_count,
        }
        if witnesses:
            out["witnesses"] = [w.to_dict() for w in self.witnesses]
        return out


# -- functionals -----------------------------------------------------------
def functional_of_hyperplane(a: Algebra, v: Subspace) -> Functional:
    """The functional with kernel ``v`` and value 1 at the unity."""
    cov = hyperplane_covector(v)
    s = int(cov @ a.one() % a.p)
    if s == 0:
        raise ContainsUnity(f"{v!r} contains the unity")
    return Functional(a, cov * pow(s, -1, a.p) % a.p)


def basis_value_table(f: Functional) -> np.ndarray:
    """``T[i, j] = L(e_i e_j)``."""
    return f.algebra.sc @ f.covector % f.algebra.p


def is_multiplicative(f: Functional) -> tuple[bool, tuple[int, int] | None]:
    """Check ``L(e_i e_j) = L(e_i) L(e_j)``; return the first failing basis pair."""
    a = f.algebra
    if a.n == 0:
        return True, None
    lam = f.covector
    bad = np.argwhere(basis_value_table(f) != np.outer(lam, lam) % a.p)
    if len(bad) == 0:
        return True, None
    i, j = bad[0]
    return False, (int(i), int(j))


def unit_in_kernel(f: Functional) -> np.ndarray | None:
    """First unit (lexicographically) on which ``f`` vanishes, or ``None``."""
    units = f.algebra.units
    if len(units) == 0:
        return None
    hits = np.nonzero(units @ f.covector % f.algebra.p == 0)[0]
    return units[hits[0]].copy() if len(hits) else None


# -- decision --------------------------------------------------------------
def _kernel_is_ideal(a: Algebra, lam: np.ndarray) -> bool:
    vals = a.sc @ lam % a.p  # vals[i, j] = L(e_i e_j)
    ker = field.kernel_basis(lam.reshape(1, -1), a.p)
    if ker.shape[0] == 0:
        return True
    left = vals @ ker.T % a.p  # L(e_i b)
    right = ker @ vals % a.p  # L(b e_j)
    return not left.any() and not right.any()


def decide_gkz(a: Algebra, radical: bool = True, kmax: int = 4) -> GkzReport:
    """Decide GKZ by sweeping hyperplanes; collect one witness per failing one.

    Witnesses come in lexicographic order of the normalized covector of the
    offending hyperplane, each with the least failing basis pair.
    """
    name = a.name or ""
    if a.n == 0:
        return GkzReport(name, a.p, 0, True, True, 0, True, 0, 0, 0, 0, [])
    a.one()
    covs = normalized_covectors(a.p, a.n)
    units = a.units
    contains_unit = (units @ covs.T % a.p == 0).any(axis=0)
    avoiding = covs[~contains_unit]
    witnesses = []
    for lam in avoiding:
        if _kernel_is_ideal(a, lam):
            continue
        s = int(lam @ a.one() % a.p)
        f = Functional(a, lam * pow(s, -1, a.p))
        ok, pair = is_multiplicative(f)
        assert not ok, "non-ideal kernel with multiplicative functional"
        i, j = pair
        witnesses.append(Witness(f, a.basis_vector(i), a.basis_vector(j)))
    span, generated = a.span_of_units()
    jac_dim = jacobson_radical(a).dim if radical else None
    return GkzReport(
        name=name,
        p=a.p,
        n=a.n,
        is_gkz=not witnesses,
        is_vacuous=len(avoiding) == 0,
        unit_count=len(units),
        unit_generated=generated,
        sum_units_bound=a.sum_of_units_bound(kmax),
        jac_dim=jac_dim,
        hyperplane_count=len(covs),
        unit_avoiding_hyperplane_count=len(avoiding),
        witnesses=witnesses,
    )


def is_gkz(a: Algebra) -> bool:
    """Fast yes/no (no radical, no unit statistics beyond what is needed)."""
    if a.n == 0:
        return True
    a.one()
    covs = normalized_covectors(a.p, a.n)
    contains_unit = (a.units @ covs.T % a.p == 0).any(axis=0)
    return all(_kernel_is_ideal(a, lam) for lam in covs[~contains_unit])


def is_vacuous(a: Algebra) -> bool:
    if a.n == 0:
        return True
    covs = normalized_covectors(a.p, a.n)
    return bool((a.units @ covs.T % a.p == 0).any(axis=0).all())


# -- brute force oracle ----------------------------------------------------
def product_table(a: Algebra) -> np.ndarray:
    """Encoded ``x * y`` for every pair of elements, shape ``(p**n, p**n)``."""
    return a.product_indices()


def brute_force_units(a: Algebra) -> np.ndarray:
    """Units found by searching for two-sided inverses among all elements."""
    if a.size**2 > config.caps().max_pairs:
        raise CapExceeded("pairwise inverse search too large")
    if a.n == 0:
        return np.zeros((0, 0), DTYPE)
    table = product_table(a)
    one = int(a.index_of(a.one()))
    mask = ((table == one) & (table.T == one)).any(axis=1)
    return a.elements[mask]


def decide_gkz_bruteforce(a: Algebra) -> bool:
    """Sweep every covector with ``L(1) = 1`` and test all element pairs."""
    if a.size > config.caps().oracle_max_elems:
        raise CapExceeded(f"oracle limited to {config.caps().oracle_max_elems} elements, algebra has {a.size}")
    if a.n == 0:
        return True
    elems = a.elements
    table = product_table(a)
    units = brute_force_units(a)
    one = a.one()
    covs = elems[elems @ one % a.p == 1]
    nonvanishing = (units @ covs.T % a.p != 0).all(axis=0)
    covs = covs[nonvanishing]
    for s in range(0, len(covs), 64):
        block = covs[s : s + 64]
        vals = elems @ block.T % a.p  # (N, m)
        lhs = vals[table]  # (N, N, m)
        rhs = vals[:, None, :] * vals[None, :, :] % a.p
        if (lhs != rhs).any():
            return False
    return True


# -- witness validation ------------------------------------------------------
@dataclass
class WitnessCheck:
    ok: bool
    reasons: list[str]
    values: tuple[Any, Any] | None = None

    def __bool__(self):
        return self.ok


def check_witness(
    functional: Callable[[Any], Any],
    mul: Callable[[Any, Any], Any],
    one: Any,
    units: Iterable[Any],
    pair: tuple[Any, Any],
) -> WitnessCheck:
    """Model-independent validation of a claimed GKZ refutation.

    ``functional`` must take the value 1 at ``one``, be nonzero on every
    element of ``units``, and ``functional(a*b) != functional(a)*functional(b)``
    must hold exactly at ``pair``.
    """
    reasons = []
    if functional(one) != 1:
        reasons.append("functional does not take the value 1 at the unity")
    for u in units:
        if functional(u) == 0:
            reasons.append(f"functional vanishes on unit {u!r}")
            break
    a, b = pair
    lhs = functional(mul(a, b))
    rhs = functional(a) * functional(b)
    if lhs == rhs:
        reasons.append("functional is multiplicative at the given pair")
    return WitnessCheck(not reasons, reasons, (lhs, rhs))


def validate_witness(a: Algebra, w: Witness) -> WitnessCheck:
    """Re-validate a finite witness against independently enumerated units."""
    p = a.p
    cov = np.asarray(w.functional.covector, dtype=DTYPE)
    if a.size**2 <= config.caps().max_pairs and a.size <= 4096:
        units = brute_force_units(a)
    else:
        units = a.units

    def lam(x):
        return field.FieldScalar(int(np.asarray(x, dtype=DTYPE) @ cov % p), p)

    res = check_witness(lam, a.mul, a.one(), units, (w.a, w.b))
    res.values = (int(res.values[0]), int(res.values[1]))
    return res
