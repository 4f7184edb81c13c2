"""``gkz`` command line.

Exit codes: 0 success, 1 verification failure, 2 input error, 3 cap exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import config
from . import constructions as C
from .corpus import builtin_corpus, random_algebra, random_corpus
from .engine import decide_gkz
from .errors import CapExceeded, GkzError, NonUnitalAlgebra
from .search import CLASS_FIELDS, census
from .specfile import parse_cayley, read_spec, serialize_spec
from .theorems import ALL_CHECKS, theorem_suite

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


def _bool(v) -> str:
    return "true" if v is True else "false" if v is False else "none" if v is None else str(v)


def _emit(lines, out) -> None:
    for line in lines:
        out.write(line + "\n")


# -- analyze -------------------------------------------------------------------
def cmd_analyze(args, out) -> int:
    a = read_spec(args.file)
    if not a.is_unital:
        raise NonUnitalAlgebra("analyze needs a unital algebra; build its unitisation with 'gkz construct unitisation'")
    rep = decide_gkz(a, kmax=args.kmax)
    if args.machine:
        out.write(json.dumps(rep.to_dict(witnesses=args.witness), sort_keys=True) + "\n")
        return EXIT_OK
    fields = [
        ("is_gkz", rep.is_gkz), ("is_vacuous", rep.is_vacuous), ("units", rep.unit_count),
        ("unit_generated", rep.unit_generated), ("sum_units_bound", rep.sum_units_bound),
        ("jac_dim", rep.jac_dim),
    ]
    if a.name:
        out.write(f"algebra: {a.name}\n")
    out.write(f"field: {a.p}\ndim: {a.n}\n")
    for k, v in fields:
        out.write(f"{k}: {_bool(v)}\n")
    out.write(f"hyperplanes: {rep.hyperplane_count} ({rep.unit_avoiding_hyperplane_count} avoid the units)\n")
    out.write(f"cost: {rep.complexity}\n")
    if args.witness:
        if not rep.witnesses:
            out.write("witnesses: none\n")
        for w in rep.witnesses:
            d = w.to_dict()
            out.write(f"witness: L={d['functional']} a={d['pair'][0]} b={d['pair'][1]} "
                      f"L(ab)={d['values'][0]} L(a)L(b)={d['values'][1]}\n")
    return EXIT_OK


# -- construct -------------------------------------------------------------------
def _parse_vectors(text: str, p: int, n: int) -> np.ndarray:
    rows = [r.split(",") if "," in r else r.split() for r in text.split(";") if r.strip()]
    arr = np.array([[int(x) for x in r] for r in rows], dtype=np.int64).reshape(-1, n)
    return arr % p


def build(args):
    kind = args.kind
    if kind == "function":
        return C.function_algebra(args.p, args.x)
    if kind == "group":
        if args.cayley:
            with open(args.cayley, encoding="utf-8") as fh:
                table = parse_cayley(fh.read())
            return C.group_algebra(args.p, table, args.name or "")
        return C.group_algebra(args.p, C.cyclic_group_table(args.cyclic), f"F{args.p}[C{args.cyclic}]")
    if kind == "matrix":
        return C.matrix_algebra(args.p, args.m)
    if kind == "triangular":
        return C.upper_triangular(args.p, args.m, strict=args.strict)
    if kind == "dual":
        return C.dual_numbers(args.p)
    if kind == "truncated":
        return C.truncated_polynomials(args.p, args.k)
    if kind == "field":
        return C.field_extension(args.p, args.k)
    if kind == "null":
        return C.null_algebra(args.p, args.n)
    if kind == "nilpotent":
        return C.nilpotent_chain(args.p, args.n)
    if kind == "random":
        return random_algebra(args.p, args.dim, np.random.default_rng(args.seed), f"random(p={args.p}, dim={args.dim}, seed={args.seed})")
    inputs = [read_spec(f) for f in (args.input or [])]
    if kind == "product":
        if len(inputs) != 2:
            raise GkzError("product needs exactly two --input files")
        return C.direct_product(*inputs)
    if len(inputs) != 1:
        raise GkzError(f"{kind} needs exactly one --input file")
    a = inputs[0]
    if kind == "unitisation":
        return C.unitisation(a)
    if kind == "quotient":
        from .ideals import ideal_generated

        gens = _parse_vectors(args.ideal or "", a.p, a.n)
        q, _ = C.quotient(a, ideal_generated(a, gens))
        return q
    raise GkzError(f"unknown kind {kind!r}")


def cmd_construct(args, out) -> int:
    a = build(args)
    if args.name:
        a = a.renamed(args.name)
    text = serialize_spec(a)
    if args.output in (None, "-"):
        out.write(text)
    else:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    return EXIT_OK


# -- search -------------------------------------------------------------------
def cmd_search(args, out) -> int:
    c = census(args.p, args.dim, args.samples, args.seed, exhaustive=args.exhaustive, jobs=args.jobs)
    if args.machine:
        _emit(c.machine_lines(), out)
    else:
        mode = "all" if c.exhaustive else f"{c.samples} random"
        out.write(f"census of {mode} tables, p={c.p}, dim={c.dim}, seed={c.seed}\n")
        for k, v in c.counts().items():
            out.write(f"{k}: {v}\n")
        rows = c.classes()
        if rows:
            out.write(" | ".join(CLASS_FIELDS + ("count",)) + "\n")
        for row in rows:
            out.write(" | ".join(_bool(v) for v in row["class"] + [row["count"]]) + "\n")
            if row["witness"]:
                out.write(f"  witness: {json.dumps(row['witness'], sort_keys=True)}\n")
    return EXIT_OK if c.ok else EXIT_FAIL


# -- verify -------------------------------------------------------------------
def _selected(only) -> list[str] | None:
    if not only:
        return None
    names = [t.strip().upper() for item in only for t in item.split(",") if t.strip()]
    unknown = [t for t in names if t not in ALL_CHECKS and t not in ("SYMBOLIC",)]
    if unknown:
        raise GkzError(f"unknown check(s) {unknown}; choose from {', '.join(ALL_CHECKS)}, SYMBOLIC")
    return names


def cmd_verify(args, out) -> int:
    only = _selected(args.only)
    corpus = builtin_corpus()
    if args.random_corpus:
        corpus += random_corpus(args.random_corpus, args.seed)
    rep = theorem_suite(corpus, only=only, jobs=args.jobs)
    if args.machine:
        _emit(rep.machine_lines(), out)
    else:
        out.write(f"corpus: {len(corpus)} algebras ({args.random_corpus} random per field, seed {args.seed})\n")
        for t, s in rep.summary().items():
            out.write(f"{t:<11} pass {s['pass']:>4}  skipped {s['skipped']:>4}  fail {s['fail']:>4}\n")
        notes = [(mr.name, t, n) for mr in rep.members for t, o in mr.results.items() for n in o.notes]
        if notes:
            out.write(f"notes ({len(notes)}):\n")
            for name, t, n in notes[: args.max_notes]:
                out.write(f"  {t} {name}: {n}\n")
    failures = rep.failures()
    if failures:
        name, t, o = failures[0]
        sys.stderr.write("first failure: " + json.dumps({"member": name, "check": t, **o.to_dict()}, sort_keys=True) + "\n")
        return EXIT_FAIL
    if not args.machine:
        out.write("all checks passed\n")
    return EXIT_OK


# -- entry point ---------------------------------------------------------------
def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="gkz", description="Decide and explore the GKZ property of finite algebras.")
    sub = ap.add_subparsers(dest="command", required=True)

    an = sub.add_parser("analyze", help="decide GKZ for an algebra file")
    an.add_argument("file")
    an.add_argument("--witness", action="store_true", help="print refuting functionals")
    an.add_argument("--machine", action="store_true", help="one JSON line")
    an.add_argument("--kmax", type=int, default=4, help="largest number of unit summands tried")
    an.set_defaults(func=cmd_analyze)

    co = sub.add_parser("construct", help="write a named algebra as an algebra file")
    co.add_argument("kind", choices=["function", "group", "matrix", "triangular", "dual", "truncated", "field",
                                     "null", "nilpotent", "random", "product", "quotient", "unitisation"])
    co.add_argument("--p", type=int, default=None)
    co.add_argument("--x", type=int, help="number of points (function)")
    co.add_argument("--m", type=int, help="matrix size (matrix, triangular)")
    co.add_argument("--k", type=int, help="degree (field, truncated)")
    co.add_argument("--n", type=int, help="dimension (null, nilpotent)")
    co.add_argument("--dim", type=int, help="dimension (random)")
    co.add_argument("--seed", type=int, default=0)
    co.add_argument("--strict", action="store_true", help="strictly upper triangular (non-unital)")
    co.add_argument("--cayley", help="Cayley table file (group)")
    co.add_argument("--cyclic", type=int, help="order of a cyclic group (group)")
    co.add_argument("--input", action="append", help="algebra file(s) for product, quotient, unitisation")
    co.add_argument("--ideal", help="generators 'a,b,..;c,d,..' of the ideal (quotient)")
    co.add_argument("--name", help="name recorded in the file header")
    co.add_argument("-o", "--output", help="output file (default stdout)")
    co.set_defaults(func=cmd_construct)

    se = sub.add_parser("search", help="census of random structure-constant tables")
    se.add_argument("--p", type=int, required=True)
    se.add_argument("--dim", type=int, required=True)
    se.add_argument("--samples", type=int, default=1000)
    se.add_argument("--seed", type=int, default=0)
    se.add_argument("--exhaustive", action="store_true", help="enumerate every table instead of sampling")
    se.add_argument("--jobs", type=int, default=1)
    se.add_argument("--machine", action="store_true")
    se.set_defaults(func=cmd_search)

    ve = sub.add_parser("verify", help="run the theorem checks and symbolic counterexamples")
    ve.add_argument("--only", action="append", help="restrict to checks, e.g. T7 or T4,T6")
    ve.add_argument("--random-corpus", type=int, default=0, help="random algebras added per field")
    ve.add_argument("--seed", type=int, default=0)
    ve.add_argument("--jobs", type=int, default=1)
    ve.add_argument("--machine", action="store_true")
    ve.add_argument("--max-notes", type=int, default=20)
    ve.set_defaults(func=cmd_verify)
    return ap


REQUIRED_FLAGS = {
    "function": ("p", "x"), "group": ("p",), "matrix": ("p", "m"), "triangular": ("p", "m"),
    "dual": ("p",), "truncated": ("p", "k"), "field": ("p", "k"), "null": ("p", "n"),
    "nilpotent": ("p", "n"), "random": ("p", "dim"), "product": ("input",), "quotient": ("input", "ideal"),
    "unitisation": ("input",),
}


def _check_construct_flags(args) -> None:
    missing = [f"--{f}" for f in REQUIRED_FLAGS[args.kind] if getattr(args, f) is None]
    if args.kind == "group" and args.cayley is None and args.cyclic is None:
        missing.append("--cayley or --cyclic")
    if missing:
        raise GkzError(f"construct {args.kind} needs {', '.join(missing)}")


def main(argv=None) -> int:
    ap = make_parser()
    args = ap.parse_args(argv)
    out = sys.stdout
    try:
        config.set_caps(**config.caps_from_env().__dict__)
        if args.command == "construct":
            _check_construct_flags(args)
        return args.func(args, out)
    except CapExceeded as exc:
        sys.stderr.write(f"gkz: cap exceeded: {exc}\n")
        return EXIT_CAP
    except (GkzError, OSError, ValueError) as exc:
        sys.stderr.write(f"gkz: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
