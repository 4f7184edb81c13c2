"""Exact finite-support models of two infinite-dimensional algebras.

* Laurent polynomials ``F[x, 1/x]``: the group algebra of ``(Z, +)``.
* Dirac combinations ``sum c_i delta_{a_i}`` with ``a_i`` rational under
  convolution ``delta_a * delta_b = delta_{a+b}``: the group algebra of
  ``(Q, +)``, standing in for the span of point masses among compactly
  supported distributions.

Coefficients are :class:`fractions.Fraction` (the rationals replace the
complex numbers; nothing below needs more) or, for Laurent polynomials,
:class:`gkz.field.FieldScalar` over GF(p).

In both models the units are taken to be exactly the nonzero multiples of a
single basis element (a monomial, a point mass).  That is an imported
characterisation, not something the code derives.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable

from .engine import WitnessCheck, check_witness
from .errors import BadParameter
from .field import FieldScalar


class _GroupRingElement:
    """Finite-support map from an additive group to nonzero coefficients."""

    __slots__ = ("terms", "modulus")

    def __init__(self, terms=None, modulus: int | None = None):
        self.modulus = modulus
        clean = {}
        for k, c in (terms or {}).items():
            c = self._coeff(c)
            if c != 0:
                clean[self._key(k)] = c
        self.terms = clean

    # subclasses choose the group
    @staticmethod
    def _key(k):
        return k

    def _coeff(self, c):
        if self.modulus is None:
            return Fraction(c)
        return c if isinstance(c, FieldScalar) else FieldScalar(int(c), self.modulus)

    def _new(self, terms):
        return type(self)(terms, self.modulus)

    def _check(self, other):
        if not isinstance(other, type(self)) or other.modulus != self.modulus:
            raise TypeError(f"cannot combine {type(self).__name__} over different coefficient rings")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out[k] + c if k in out else c
        return self._new(out)

    def __neg__(self):
        return self._new({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, _GroupRingElement):
            return self._new({k: c * self._coeff(other) for k, c in self.terms.items()})
        self._check(other)
        out: dict = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                k = k1 + k2
                out[k] = out[k] + c1 * c2 if k in out else c1 * c2
        return self._new(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, type(self)) and self.modulus == other.modulus and self.terms == other.terms

    def __hash__(self):
        return hash((type(self).__name__, self.modulus, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def is_unit(self) -> bool:
        return len(self.terms) == 1

    def inverse(self):
        if not self.is_unit():
            raise BadParameter("only single-term elements are invertible in this model")
        (k, c), = self.terms.items()
        inv = (1 / c) if self.modulus is None else c ** -1
        return self._new({-k: inv})

    def augmentation(self):
        total = self._coeff(0)
        for c in self.terms.values():
            total = total + c
        return total

    def support(self) -> list:
        return sorted(self.terms)


class Laurent(_GroupRingElement):
    """Laurent polynomial ``{exponent: coefficient}``."""

    __slots__ = ()

    @staticmethod
    def _key(k):
        if int(k) != k:
            raise BadParameter(f"exponent {k!r} is not an integer")
        return int(k)

    @classmethod
    def monomial(cls, exponent: int, coeff=1, modulus: int | None = None) -> Laurent:
        return cls({exponent: coeff}, modulus)

    @classmethod
    def one(cls, modulus: int | None = None) -> Laurent:
        return cls.monomial(0, 1, modulus)

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*x^{k}" for k, c in sorted(self.terms.items()))


class Dirac(_GroupRingElement):
    """Finite combination of point masses ``{point: coefficient}``."""

    __slots__ = ()

    @staticmethod
    def _key(k):
        return Fraction(k)

    @classmethod
    def delta(cls, point=0, coeff=1) -> Dirac:
        return cls({point: coeff})

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*d[{k}]" for k, c in sorted(self.terms.items()))


def laurent_mul(x: Laurent, y: Laurent) -> Laurent:
    return x * y


def laurent_is_unit(x: Laurent) -> bool:
    return x.is_unit()


def dirac_convolve(s: Dirac, t: Dirac) -> Dirac:
    return s * t


def dirac_is_unit(t: Dirac) -> bool:
    return t.is_unit()


PHI_COEFFS = (Fraction(1), Fraction(0), Fraction(1))


def phi(a) -> Fraction:
    """Test function ``1 + a**2``."""
    c0, c1, c2 = PHI_COEFFS
    a = Fraction(a)
    return c0 + c1 * a + c2 * a * a


def quadratic_has_no_real_root(c0, c1, c2) -> bool:
    """``c0 + c1 a + c2 a^2`` never vanishes on the reals (so on the rationals)."""
    if c2 == 0:
        return c1 == 0 and c0 != 0
    return c1 * c1 - 4 * c0 * c2 < 0


def dirac_lambda_phi(t: Dirac) -> Fraction:
    """Pairing with ``phi``: ``sum c_i (1 + a_i**2)``."""
    total = Fraction(0)
    for a, c in t.terms.items():
        total += c * phi(a)
    return total


def augmentation(t: _GroupRingElement):
    """Sum of coefficients; the canonical multiplicative functional."""
    return t.augmentation()


# -- counterexample records --------------------------------------------------
@dataclass
class SymbolicWitness:
    """A refutation of GKZ in one of the infinite models.

    The functional sends a unit ``g * b`` (``g`` a nonzero scalar, ``b`` a
    group element) to ``g * w(b)``.  ``nonvanishing`` decides from the
    closed form of ``w`` that no weight is zero; the sampled units are a
    second, empirical check.
    """

    model: str
    rule: str
    functional: Callable[[Any], Any]
    mul: Callable[[Any, Any], Any]
    one: Any
    pair: tuple[Any, Any]
    nonvanishing: Callable[[], bool]
    weight_argument: str
    sample_units: list

    @property
    def values(self) -> tuple[Any, Any]:
        a, b = self.pair
        return self.functional(self.mul(a, b)), self.functional(a) * self.functional(b)

    def validate(self) -> WitnessCheck:
        res = check_witness(self.functional, self.mul, self.one, self.sample_units, self.pair)
        if not self.nonvanishing():
            res.ok = False
            res.reasons.append("a unit weight vanishes")
        return res

    def to_dict(self) -> dict:
        lhs, rhs = self.values
        return {
            "model": self.model,
            "rule": self.rule,
            "pair": [repr(self.pair[0]), repr(self.pair[1])],
            "values": [str(lhs), str(rhs)],
            "nonvanishing": self.nonvanishing(),
            "argument": self.weight_argument,
            "sampled_units": len(self.sample_units),
        }


def _scalar_sample(modulus: int | None) -> list:
    if modulus is not None:
        return [FieldScalar(k, modulus) for k in range(1, modulus)]
    base = [Fraction(n, d) for n in range(1, 7) for d in range(1, 5)]
    return sorted(set(base + [-q for q in base]))


def laurent_counterexample(c, modulus: int | None = None, seed: int = 0, min_units: int = 1000) -> SymbolicWitness:
    """Functional on ``F[x, 1/x]`` with ``L(x^n) = 1`` for ``n != 2`` and ``L(x^2) = c``.

    It is 1 at the unity and nonzero on every unit, yet
    ``L(x * x) = c != 1 = L(x)**2``.
    """
    cc = Fraction(c) if modulus is None else FieldScalar(int(c), modulus)
    if cc == 0 or cc == 1:
        raise BadParameter("c must differ from 0 and 1 (needs a field with more than two elements)")

    def lam(t: Laurent):
        total = cc * 0
        for k, coef in t.terms.items():
            total = total + coef * (cc if k == 2 else 1)
        return total

    x = Laurent.monomial(1, 1, modulus)
    rng = random.Random(seed)
    scalars = _scalar_sample(modulus)
    sample = [Laurent.monomial(k, g, modulus) for k in range(-10, 11) for g in scalars]
    while len(sample) < min_units:
        sample.append(Laurent.monomial(rng.randint(-10**6, 10**6), rng.choice(scalars), modulus))
    return SymbolicWitness(
        model="laurent",
        rule=f"L(x^n) = 1 for n != 2, L(x^2) = {cc}",
        functional=lam,
        mul=laurent_mul,
        one=Laurent.one(modulus),
        pair=(x, x),
        # w(x^n) is 1 or c; the image of the weight map is this finite set
        nonvanishing=lambda: all(w != 0 for w in (cc * 0 + 1, cc)),
        weight_argument="L(g x^n) = g if n != 2 else g*c; g != 0 and c != 0",
        sample_units=sample,
    )


def dirac_counterexample(seed: int = 0, min_units: int = 1000) -> SymbolicWitness:
    """Pairing with ``1 + a**2`` on point masses: unit-preserving, not multiplicative.

    ``L(delta_1 * delta_1) = L(delta_2) = 5`` but ``L(delta_1)**2 = 4``.
    """
    rng = random.Random(seed)
    scalars = _scalar_sample(None)
    sample = [Dirac.delta(k, g) for k in range(-10, 11) for g in scalars]
    sample += [Dirac.delta(Fraction(k, 2), g) for k in range(-21, 22, 2) for g in scalars[:8]]
    while len(sample) < min_units:
        pt = Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 10**3))
        sample.append(Dirac.delta(pt, rng.choice(scalars)))
    d1 = Dirac.delta(1)
    return SymbolicWitness(
        model="dirac",
        rule="L(t) = <t, 1 + x^2>",
        functional=dirac_lambda_phi,
        mul=dirac_convolve,
        one=Dirac.delta(0),
        pair=(d1, d1),
        nonvanishing=lambda: quadratic_has_no_real_root(*PHI_COEFFS),
        weight_argument="L(g delta_a) = g (1 + a^2) and 1 + a^2 >= 1 for rational a",
        sample_units=sample,
    )
