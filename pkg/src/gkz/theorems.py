"""Executable checks of the structural results about GKZ algebras.

Each check verifies its hypotheses by computation before it looks at the
conclusion.  Per algebra a check ends in one of

* ``pass``    the hypotheses held at least once and every conclusion held,
* ``skipped`` the hypotheses never held (or a cap prevented the check),
* ``fail``    some conclusion failed.  That is a bug in this package.

Besides the fifteen results ``T1``..``T15`` the suite runs three
cross-checks: ``ORACLE-GKZ`` (hyperplane sweep vs brute force),
``ORACLE-JAC`` (quasiregular radical vs intersections of maximal one-sided
ideals) and ``WITNESS`` (independent re-validation of every witness).
"""
from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field
from functools import cached_property
from typing import Callable, Iterable

import numpy as np

from . import config
from . import constructions as C
from .algebra import Algebra
from .engine import (
    _kernel_is_ideal,
    decide_gkz,
    decide_gkz_bruteforce,
    is_gkz,
    is_vacuous,
    validate_witness,
)
from .errors import CapExceeded
from .field import DTYPE
from .ideals import (
    all_ideals,
    jacobson_radical,
    localize_at_prime,
    maximal_one_sided_ideals,
    normalized_covectors,
    prime_ideals,
    radical_from_maximal_ideals,
)
from .subspace import Subspace

THEOREMS = tuple(f"T{k}" for k in range(1, 16))
CROSS_CHECKS = ("ORACLE-GKZ", "ORACLE-JAC", "WITNESS")
ALL_CHECKS = THEOREMS + CROSS_CHECKS


@dataclass
class Outcome:
    status: str  # pass | fail | skipped
    instances: int = 0
    detail: str | None = None
    notes: list[str] = dc_field(default_factory=list)

    def to_dict(self) -> dict:
        out = {"status": self.status, "instances": self.instances}
        if self.detail:
            out["detail"] = self.detail
        if self.notes:
            out["notes"] = self.notes
        return out


class _Fail(Exception):
    pass


class _Run:
    """Counts hypothesis instances and records the first failed conclusion."""

    def __init__(self):
        self.instances = 0
        self.notes: list[str] = []

    def expect(self, cond: bool, message: str):
        self.instances += 1
        if not cond:
            raise _Fail(message)

    def outcome(self, why_skipped: str = "hypothesis never holds") -> Outcome:
        if self.instances == 0:
            return Outcome("skipped", 0, why_skipped, self.notes)
        return Outcome("pass", self.instances, None, self.notes)


def _fmt(v) -> str:
    return "(" + ",".join(str(int(x)) for x in np.asarray(v).reshape(-1)) + ")"


def _fmt_space(s: Subspace) -> str:
    return "span{" + ", ".join(_fmt(r) for r in s.basis) + "}"


class Member:
    """An algebra under test with lazily computed, shared facts."""

    def __init__(self, a: Algebra):
        self.a = a

    @property
    def p(self) -> int:
        return self.a.p

    @cached_property
    def report(self):
        return decide_gkz(self.a, radical=False)

    @property
    def gkz(self) -> bool:
        return self.report.is_gkz

    @property
    def vacuous(self) -> bool:
        return self.report.is_vacuous

    @property
    def unit_generated(self) -> bool:
        return self.report.unit_generated

    @cached_property
    def covectors(self) -> np.ndarray:
        return normalized_covectors(self.p, self.a.n)

    @cached_property
    def unit_free_covectors(self) -> np.ndarray:
        covs = self.covectors
        hit = (self.a.units @ covs.T % self.p == 0).any(axis=0)
        return covs[~hit]

    @cached_property
    def unit_free_ideal_mask(self) -> np.ndarray:
        return np.array([_kernel_is_ideal(self.a, c) for c in self.unit_free_covectors], dtype=bool)

    @cached_property
    def ideals(self) -> list[Subspace]:
        return all_ideals(self.a, "two_sided")

    @cached_property
    def jac(self) -> Subspace:
        return jacobson_radical(self.a)

    @cached_property
    def quotients(self) -> dict:
        from .constructions import quotient

        return {v: quotient(self.a, v) for v in self.ideals}

    @cached_property
    def quotient_gkz(self) -> dict:
        return {v: is_gkz(q) for v, (q, _) in self.quotients.items()}

    def units_lift(self, ideal: Subspace) -> bool:
        q, proj = self.quotients[ideal]
        if q.n == 0:
            return True
        images = np.zeros(q.size, dtype=bool)
        if len(self.a.units):
            images[q.index_of(proj(self.a.units))] = True
        return bool((images | ~q.unit_mask).all())

    def hyperplanes_containing(self, ideal: Subspace) -> np.ndarray:
        """Mask over unit-free covectors whose kernel contains ``ideal``."""
        covs = self.unit_free_covectors
        if ideal.dim == 0:
            return np.ones(len(covs), dtype=bool)
        return ~(ideal.basis @ covs.T % self.p).any(axis=0)


# -- the fifteen results -----------------------------------------------------
def t1(m: Member, r: _Run) -> Outcome:
    if m.p < 3:
        return Outcome("skipped", 0, "p < 3")
    if not m.gkz:
        return r.outcome("not GKZ")
    has_ideal_hyperplane = any(_kernel_is_ideal(m.a, c) for c in m.covectors)
    r.expect(has_ideal_hyperplane == (not m.vacuous),
             f"GKZ with codim-1 ideal={has_ideal_hyperplane} but vacuous={m.vacuous}")
    if has_ideal_hyperplane:
        r.expect(m.unit_generated, "GKZ with a codim-1 two-sided ideal but units do not span")
    return r.outcome()


def t2(m: Member, r: _Run) -> Outcome:
    if m.p < 3:
        return Outcome("skipped", 0, "p < 3")
    if not m.unit_generated:
        r.expect(m.gkz == m.vacuous, f"not unit generated, GKZ={m.gkz}, vacuous={m.vacuous}")
    return r.outcome("unit generated")


def t3(m: Member, r: _Run) -> Outcome:
    if m.unit_generated:
        return r.outcome("unit generated")
    span, _ = m.a.span_of_units()
    sub = C.subalgebra(m.a, span)
    r.expect(sub.unit_count == m.a.unit_count, "span of units has a different unit group")
    sub_vac, sub_gkz = is_vacuous(sub), is_gkz(sub)
    r.expect(m.vacuous == sub_vac, f"vacuous(A)={m.vacuous} but vacuous(span U)={sub_vac}")
    if m.p >= 3:
        r.expect(m.gkz == m.vacuous, f"GKZ={m.gkz} but vacuous={m.vacuous}")
        r.expect((m.vacuous and sub_vac) or (not m.gkz and not sub_gkz),
                 "neither both vacuous nor both non-GKZ")
    return r.outcome()


def t4(m: Member, r: _Run) -> Outcome:
    if not m.gkz:
        return r.outcome("not GKZ")
    for v in m.ideals:
        r.expect(m.quotient_gkz[v], f"A/I not GKZ for I={_fmt_space(v)}")
    return r.outcome()


def t5(m: Member, r: _Run) -> Outcome:
    covs_ideal = m.unit_free_ideal_mask
    for v in m.ideals:
        if not m.units_lift(v):
            continue
        qg = m.quotient_gkz[v]
        inside = m.hyperplanes_containing(v)
        r.expect(qg == bool(covs_ideal[inside].all()),
                 f"GKZ(A/I)={qg} disagrees with the hyperplanes through I={_fmt_space(v)}")
        if m.gkz:
            r.expect(qg, f"GKZ(A) but not GKZ(A/I), I={_fmt_space(v)}")
        if inside.all():
            r.expect(m.gkz == qg, f"GKZ(A)={m.gkz}, GKZ(A/I)={qg}, I={_fmt_space(v)}")
        elif m.gkz != qg:
            r.notes.append(f"two-way form fails for I={_fmt_space(v)}: GKZ(A)={m.gkz}, GKZ(A/I)={qg}")
    return r.outcome()


def t6(m: Member, r: _Run) -> Outcome:
    for v in m.ideals:
        if v.is_subspace_of(m.jac):
            r.expect(m.quotient_gkz[v] == m.gkz, f"GKZ(A)={m.gkz} but GKZ(A/I)={m.quotient_gkz[v]}, I={_fmt_space(v)}")
    return r.outcome()


def t7_nonunital(n: Algebra, r: _Run) -> Outcome:
    config.require_elems(n.p, n.n + 1, "unitisation")
    conds = C.unitisation_conditions(n)
    r.expect(len(set(conds.values())) == 1, f"unitisation conditions disagree: {conds}")
    if conds["radical"]:
        b = C.unitisation(n)
        r.expect(is_gkz(b), "unitisation of a radical algebra is not GKZ")
    return r.outcome("not radical")


def t8(m: Member, r: _Run) -> Outcome:
    for side in ("left", "right"):
        if len(maximal_one_sided_ideals(m.a, side)) <= 2:
            r.expect(m.gkz, f"at most two maximal {side} ideals but not GKZ")
    return r.outcome()


def t9(m: Member, r: _Run) -> Outcome:
    if not m.a.is_commutative:
        return r.outcome("not commutative")
    for prime in prime_ideals(m.a):
        loc, _ = localize_at_prime(m.a, prime)
        r.expect(is_gkz(loc), f"localisation at {_fmt_space(prime)} not GKZ")
    return r.outcome()


def _covered_by_two(nonunits: np.ndarray, ideals: list[Subspace]) -> bool:
    masks = [v.contains_all(nonunits) for v in ideals]
    for i in range(len(masks)):
        for j in range(i, len(masks)):
            if (masks[i] | masks[j]).all():
                return True
    return False


def t10(m: Member, r: _Run) -> Outcome:
    # enlarging each ideal to a maximal one keeps the cover, so maximal ones suffice
    cands = maximal_one_sided_ideals(m.a, "left") + maximal_one_sided_ideals(m.a, "right")
    nonunits = m.a.elements[~m.a.unit_mask]
    if _covered_by_two(nonunits, cands):
        r.expect(m.gkz, "non-units covered by two proper one-sided ideals but not GKZ")
    return r.outcome()


def t11(m: Member, r: _Run) -> Outcome:
    a = m.a
    if not a.is_commutative:
        return r.outcome("not commutative")
    one, p = a.one(), a.p
    idem = a.idempotents()
    units = a.units
    if len(units) ** 2 * len(idem) > 4_000_000:
        return Outcome("skipped", 0, "unit pairs over cap")
    lams = []
    for c in m.unit_free_covectors:
        s = int(c @ one % p)
        lams.append(c * pow(s, -1, p) % p)
    for e in idem:
        comp = (one - e) % p
        ue = a.mul(units, e)
        vc = a.mul(units, comp)
        mixed = (ue[:, None, :] + vc[None, :, :]) % p
        r.expect(bool(a.is_unit_many(mixed.reshape(-1, a.n)).all()), f"ue + v(1-e) not always a unit, e={_fmt(e)}")
        for lam in lams:
            le = int(e @ lam % p)
            r.expect(le in (0, 1), f"L(e)={le} for e={_fmt(e)}, L={_fmt(lam)}")
            if m.unit_generated:
                basis_e = a.mul(np.eye(a.n, dtype=DTYPE), e)
                r.expect(bool((basis_e @ lam % p == lam * le % p).all()),
                         f"L(a e) != L(a) L(e) for e={_fmt(e)}, L={_fmt(lam)}")
    return r.outcome()


def t12(m: Member, r: _Run) -> Outcome:
    if m.p < 3:
        return Outcome("skipped", 0, "p < 3")
    if not C.is_function_algebra_table(m.a) or not m.unit_generated:
        return r.outcome("not a function algebra")
    a, p = m.a, m.p
    for c in m.unit_free_covectors:
        lam = c * pow(int(c @ a.one() % p), -1, p) % p
        for x0 in range(a.n):
            if lam[x0] != 0:
                proj = np.zeros(a.n, DTYPE)
                proj[x0] = 1
                r.expect(np.array_equal(lam, proj), f"L={_fmt(lam)} with L(I_{x0}) != 0 is not p_{x0}")
    return r.outcome()


def t13(m: Member, r: _Run) -> Outcome:
    if m.a.spectrum_empty_mask().any():
        r.expect(m.vacuous and m.gkz, "element with empty spectrum but not vacuously GKZ")
    return r.outcome()


def t14(m: Member, r: _Run) -> Outcome:
    if not m.unit_generated:
        return r.outcome("not unit generated")
    for v in m.ideals:
        q, _ = m.quotients[v]
        if q.n == 0 or not q.spectrum_empty_mask().any():
            continue
        if m.units_lift(v):
            r.expect(m.gkz, f"hypotheses hold for I={_fmt_space(v)} but A not GKZ")
    return r.outcome()


def t15(m: Member, r: _Run) -> Outcome:
    mask = m.unit_free_ideal_mask
    for v in m.ideals:
        outside = ~m.hyperplanes_containing(v)
        if mask[outside].all():
            qg = m.quotient_gkz[v]
            r.expect(m.gkz == qg, f"GKZ(A)={m.gkz}, GKZ(A/I)={qg}, I={_fmt_space(v)}")
    return r.outcome()


# -- cross-checks ------------------------------------------------------------
def oracle_gkz(m: Member, r: _Run) -> Outcome:
    if m.a.size > config.caps().oracle_max_elems:
        return Outcome("skipped", 0, "above oracle cap")
    r.expect(decide_gkz_bruteforce(m.a) == m.gkz, "hyperplane sweep and brute force disagree")
    r.expect(is_gkz(m.a) == m.gkz, "fast and full decisions disagree")
    return r.outcome()


def oracle_jac(m: Member, r: _Run) -> Outcome:
    left = radical_from_maximal_ideals(m.a, "left")
    right = radical_from_maximal_ideals(m.a, "right")
    r.expect(left == m.jac, f"quasiregular radical {_fmt_space(m.jac)} vs maximal left {_fmt_space(left)}")
    r.expect(right == m.jac, f"quasiregular radical {_fmt_space(m.jac)} vs maximal right {_fmt_space(right)}")
    return r.outcome()


def witness_check(m: Member, r: _Run) -> Outcome:
    for w in m.report.witnesses:
        res = validate_witness(m.a, w)
        r.expect(res.ok, f"witness {w.to_dict()} rejected: {res.reasons}")
    return r.outcome("no witnesses")


UNITAL_CHECKS: dict[str, Callable[[Member, _Run], Outcome]] = {
    "T1": t1, "T2": t2, "T3": t3, "T4": t4, "T5": t5, "T6": t6,
    "T8": t8, "T9": t9, "T10": t10, "T11": t11, "T12": t12, "T13": t13, "T14": t14, "T15": t15,
    "ORACLE-GKZ": oracle_gkz, "ORACLE-JAC": oracle_jac, "WITNESS": witness_check,
}


def check_member(a: Algebra, only: Iterable[str] | None = None) -> dict[str, Outcome]:
    """Run every selected check on one algebra, in canonical order."""
    selected = [t for t in ALL_CHECKS if only is None or t in set(only)]
    out: dict[str, Outcome] = {}
    m = Member(a)
    for t in selected:
        r = _Run()
        try:
            if t == "T7":
                if a.is_unital:
                    if a.size * a.p > config.caps().oracle_max_elems:
                        out[t] = Outcome("skipped", 0, "unital member too large to re-check without unity")
                        continue
                    out[t] = t7_nonunital(a.forget_unity(), r)
                else:
                    out[t] = t7_nonunital(a, r)
            elif not a.is_unital:
                out[t] = Outcome("skipped", 0, "non-unital")
            else:
                out[t] = UNITAL_CHECKS[t](m, r)
        except _Fail as exc:
            out[t] = Outcome("fail", r.instances, str(exc), r.notes)
        except CapExceeded as exc:
            out[t] = Outcome("skipped", r.instances, f"cap: {exc}", r.notes)
    return out


# -- symbolic models -----------------------------------------------------------
def symbolic_checks() -> dict[str, Outcome]:
    from .symbolic import Dirac, dirac_counterexample, laurent_counterexample
    from .engine import check_witness

    out = {}
    for label, kwargs in (("LAURENT-Q", {}), ("LAURENT-F5", {"modulus": 5})):
        r = _Run()
        try:
            w = laurent_counterexample(2, **kwargs)
            res = w.validate()
            r.expect(res.ok, f"rejected: {res.reasons}")
            r.expect(tuple(int(str(v)) for v in w.values) == (2, 1), f"values {w.values}")
            out[label] = r.outcome()
        except _Fail as exc:
            out[label] = Outcome("fail", r.instances, str(exc))
    r = _Run()
    try:
        w = dirac_counterexample()
        res = w.validate()
        r.expect(res.ok, f"rejected: {res.reasons}")
        r.expect(w.values == (5, 4), f"values {w.values}")
        r.expect(w.functional(w.one) == 1, "L(delta_0) != 1")
        near = check_witness(w.functional, w.mul, w.one, w.sample_units, (Dirac.delta(1), Dirac.delta(2)))
        r.expect(not near.ok, "near-miss pair (delta_1, delta_2) accepted")
        out["DIRAC"] = r.outcome()
    except _Fail as exc:
        out["DIRAC"] = Outcome("fail", r.instances, str(exc))
    return out


# -- the suite ---------------------------------------------------------------
@dataclass
class MemberResult:
    name: str
    p: int
    dim: int
    unital: bool
    results: dict[str, Outcome]

    def to_dict(self) -> dict:
        return {
            "member": self.name,
            "p": self.p,
            "dim": self.dim,
            "unital": self.unital,
            "results": {t: o.to_dict() for t, o in self.results.items()},
        }


@dataclass
class SuiteReport:
    members: list[MemberResult]
    symbolic: dict[str, Outcome]

    @property
    def ok(self) -> bool:
        return not self.failures()

    def failures(self) -> list[tuple[str, str, Outcome]]:
        out = [(mr.name, t, o) for mr in self.members for t, o in mr.results.items() if o.status == "fail"]
        out += [("symbolic", t, o) for t, o in self.symbolic.items() if o.status == "fail"]
        return out

    def summary(self) -> dict[str, dict]:
        checks = [t for t in ALL_CHECKS if any(t in mr.results for mr in self.members)]
        out = {}
        for t in checks:
            counts = {"pass": 0, "fail": 0, "skipped": 0}
            first = None
            for mr in self.members:
                o = mr.results.get(t)
                if o is None:
                    continue
                counts[o.status] += 1
                if o.status == "fail" and first is None:
                    first = {"member": mr.name, "detail": o.detail}
            out[t] = {**counts, "first_violation": first}
        for t, o in self.symbolic.items():
            out[t] = {"pass": int(o.status == "pass"), "fail": int(o.status == "fail"), "skipped": int(o.status == "skipped"),
                      "first_violation": {"member": "symbolic", "detail": o.detail} if o.status == "fail" else None}
        return out

    def machine_lines(self) -> list[str]:
        lines = [json.dumps({"kind": "member", **mr.to_dict()}, sort_keys=True) for mr in self.members]
        lines += [json.dumps({"kind": "symbolic", "check": t, **o.to_dict()}, sort_keys=True) for t, o in self.symbolic.items()]
        lines += [json.dumps({"kind": "summary", "check": t, **s}, sort_keys=True) for t, s in self.summary().items()]
        lines.append(json.dumps({"kind": "verdict", "ok": self.ok, "members": len(self.members)}, sort_keys=True))
        return lines


def _member_task(args) -> MemberResult:
    a, only, caps = args
    with config.override(**caps):
        res = check_member(a, only)
    return MemberResult(a.name, a.p, a.n, a.is_unital, res)


def theorem_suite(corpus: list[Algebra], only: Iterable[str] | None = None, jobs: int = 1,
                  symbolic: bool = True) -> SuiteReport:
    """Run the checks over ``corpus``; results keep corpus order for any ``jobs``."""
    only = None if only is None else tuple(only)
    caps = config.caps().__dict__.copy()
    tasks = [(a, only, caps) for a in corpus]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            members = list(pool.map(_member_task, tasks, chunksize=1))
    else:
        members = [_member_task(t) for t in tasks]
    sym = {}
    if symbolic and (only is None or any(t in ("LAURENT", "DIRAC", "SYMBOLIC") for t in only)):
        sym = symbolic_checks()
    return SuiteReport(members, sym)
