"""Census of random (or all) structure-constant tables of a given size.

Tables are drawn uniformly from all ``p**(n**3)`` arrays.  A table counts as
valid when it is associative and has a two-sided unity (found by solving the
linear unity equations).  Each valid table is classified with
:func:`~gkz.engine.decide_gkz`, cross-checked against the brute-force oracle
when small enough, and every witness is re-validated.

Work is split into fixed-size chunks; chunk ``c`` draws from a generator
seeded by ``(seed, c)``, so the result does not depend on the worker count.
"""
from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field

import numpy as np

from . import config
from .algebra import Algebra
from .corpus import _associative_mask, find_unity
from .engine import decide_gkz, decide_gkz_bruteforce, validate_witness
from .errors import BadParameter, CapExceeded
from .field import DTYPE, all_vectors, check_prime

CHUNK = 2048
MAX_DIM = 3
MAX_EXHAUSTIVE = 2**20


@dataclass
class Census:
    p: int
    dim: int
    samples: int
    seed: int
    exhaustive: bool
    records: list[dict] = dc_field(default_factory=list)

    def counts(self) -> dict:
        r = self.records
        return {
            "samples": self.samples,
            "valid": len(r),
            "gkz": sum(x["is_gkz"] for x in r),
            "vacuous": sum(x["is_vacuous"] for x in r),
            "non_gkz": sum(not x["is_gkz"] for x in r),
            "unit_generated": sum(x["unit_generated"] for x in r),
            "oracle_checked": sum(x["oracle"] is not None for x in r),
            "oracle_disagreements": sum(x["oracle"] is False for x in r),
            "invalid_witnesses": sum(not x["witness_ok"] for x in r),
        }

    def classes(self) -> list[dict]:
        """One row per class, in order of first appearance."""
        rows: dict[tuple, dict] = {}
        for x in self.records:
            key = tuple(x["class"])
            if key not in rows:
                rows[key] = {"class": list(key), "count": 0, "representative": x["index"],
                             "table": x["table"], "unity": x["unity"], "witness": x["witness"]}
            rows[key]["count"] += 1
        return list(rows.values())

    @property
    def ok(self) -> bool:
        c = self.counts()
        return c["oracle_disagreements"] == 0 and c["invalid_witnesses"] == 0

    def machine_lines(self) -> list[str]:
        head = {"kind": "census", "p": self.p, "dim": self.dim, "seed": self.seed,
                "exhaustive": self.exhaustive, **self.counts()}
        lines = [json.dumps(head, sort_keys=True)]
        for row in self.classes():
            lines.append(json.dumps({"kind": "class", "fields": list(CLASS_FIELDS), **row}, sort_keys=True))
        return lines


CLASS_FIELDS = ("dim", "units", "jac_dim", "commutative", "unit_avoiding_hyperplanes", "is_gkz", "is_vacuous")


def _tables(p: int, dim: int, seed: int, exhaustive: bool, start: int, stop: int, chunk: int) -> np.ndarray:
    if exhaustive:
        digits = all_vectors(p, dim**3) if p ** (dim**3) <= MAX_EXHAUSTIVE else None
        assert digits is not None
        return digits[start:stop].reshape(-1, dim, dim, dim)
    rng = np.random.default_rng([seed, chunk])
    return rng.integers(0, p, size=(stop - start, dim, dim, dim), dtype=DTYPE)


def _classify(args) -> list[dict]:
    p, dim, seed, exhaustive, start, stop, chunk, caps = args
    out = []
    with config.override(**caps):
        tables = _tables(p, dim, seed, exhaustive, start, stop, chunk)
        assoc = _associative_mask(tables, p)
        for off in np.nonzero(assoc)[0]:
            sc = tables[off]
            unity = find_unity(p, sc)
            if unity is None:
                continue
            a = Algebra(p, sc, unity)
            assert a.is_valid()
            rep = decide_gkz(a)
            oracle = decide_gkz_bruteforce(a) == rep.is_gkz if a.size <= config.caps().oracle_max_elems else None
            witness_ok = all(validate_witness(a, w).ok for w in rep.witnesses)
            out.append({
                "index": int(start + off),
                "class": [dim, rep.unit_count, rep.jac_dim, bool(a.is_commutative),
                          rep.unit_avoiding_hyperplane_count, rep.is_gkz, rep.is_vacuous],
                "is_gkz": rep.is_gkz,
                "is_vacuous": rep.is_vacuous,
                "unit_generated": rep.unit_generated,
                "oracle": oracle,
                "witness_ok": witness_ok,
                "witness": rep.witnesses[0].to_dict() if rep.witnesses else None,
                "table": sc.reshape(-1).tolist(),
                "unity": unity.tolist(),
            })
    return out


def census(p: int, dim: int, samples: int, seed: int, exhaustive: bool = False, jobs: int = 1) -> Census:
    """Classify ``samples`` random tables (or every table with ``exhaustive``)."""
    check_prime(p)
    if not 1 <= dim <= MAX_DIM:
        raise BadParameter(f"dimension must be between 1 and {MAX_DIM}, got {dim}")
    if samples < 0:
        raise BadParameter("samples must be nonnegative")
    if exhaustive:
        total = p ** (dim**3)
        if total > MAX_EXHAUSTIVE:
            raise CapExceeded(f"exhaustive search over {p}^{dim ** 3} tables exceeds {MAX_EXHAUSTIVE}")
        samples = total
    caps = config.caps().__dict__.copy()
    tasks = [(p, dim, seed, exhaustive, s, min(s + CHUNK, samples), c, caps)
             for c, s in enumerate(range(0, samples, CHUNK))]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_classify, tasks))
    else:
        parts = [_classify(t) for t in tasks]
    return Census(p, dim, samples, seed, exhaustive, [x for part in parts for x in part])
