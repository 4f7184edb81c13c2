"""Reading and writing the line-oriented algebra description format.

::

    field 3
    dim 2
    unity 1 1            # or: unity none
    mul 0 0 : 1 0        # e_0 * e_0 = 1*e_0 + 0*e_1
    mul 0 1 : 0 0
    mul 1 0 : 0 0
    mul 1 1 : 0 1

``#`` starts a comment; blank lines are ignored.  The ``n**2`` ``mul``
lines may come in any order but each index pair exactly once.  A leading
comment of the form ``# algebra: <name>`` names the algebra.

Cayley tables for group algebras are plain whitespace-separated grids of
element indices, row ``g`` holding the products ``g * h``.
"""
from __future__ import annotations

import re

import numpy as np

from .algebra import Algebra
from .errors import ParseError, ValidationError
from .field import DTYPE, is_prime

_TOKEN = re.compile(r"\S+")
_NAME = re.compile(r"#\s*algebra:\s*(.*?)\s*$")


def _tokens(line: str) -> list[tuple[str, int]]:
    body = line.split("#", 1)[0]
    return [(m.group(), m.start() + 1) for m in _TOKEN.finditer(body)]


def _int(tok: tuple[str, int], lineno: int, what: str) -> int:
    text, col = tok
    try:
        return int(text)
    except ValueError:
        raise ParseError(f"expected an integer for {what}, got {text!r}", lineno, col) from None


def _residues(toks, lineno: int, p: int, n: int, what: str, end_col: int) -> np.ndarray:
    if len(toks) != n:
        col = toks[n][1] if len(toks) > n else end_col
        raise ParseError(f"{what} needs {n} residues, got {len(toks)}", lineno, col)
    out = np.zeros(n, DTYPE)
    for k, tok in enumerate(toks):
        v = _int(tok, lineno, what)
        if not 0 <= v < p:
            raise ParseError(f"residue out of range: {v} not in [0, {p})", lineno, tok[1])
        out[k] = v
    return out


def parse_spec(text: str, validate: bool = True) -> Algebra:
    """Parse a description; raise :class:`ParseError` or :class:`ValidationError`."""
    name = ""
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if not lines and not name:
            m = _NAME.match(raw.strip())
            if m:
                name = m.group(1)
        toks = _tokens(raw)
        if toks:
            lines.append((lineno, toks, len(raw.split("#", 1)[0].rstrip()) + 1))
    last_line = len(text.splitlines())

    def header(k: int, keyword: str):
        if k >= len(lines):
            raise ParseError(f"expected '{keyword}' line", last_line + 1, 1)
        lineno, toks, end = lines[k]
        if toks[0][0] != keyword:
            raise ParseError(f"expected '{keyword}', got {toks[0][0]!r}", lineno, toks[0][1])
        return lineno, toks[1:], end

    lineno, rest, end = header(0, "field")
    if len(rest) != 1:
        raise ParseError("'field' takes exactly one value", lineno, rest[1][1] if len(rest) > 1 else end)
    p = _int(rest[0], lineno, "field")
    if not is_prime(p):
        raise ParseError(f"field size {p} is not a prime", lineno, rest[0][1])

    lineno, rest, end = header(1, "dim")
    if len(rest) != 1:
        raise ParseError("'dim' takes exactly one value", lineno, rest[1][1] if len(rest) > 1 else end)
    n = _int(rest[0], lineno, "dim")
    if n < 0:
        raise ParseError(f"dimension must be nonnegative, got {n}", lineno, rest[0][1])

    lineno, rest, end = header(2, "unity")
    if len(rest) == 1 and rest[0][0] == "none":
        unity = None
    else:
        unity = _residues(rest, lineno, p, n, "unity", end)

    sc = np.zeros((n, n, n), DTYPE)
    seen: dict[tuple[int, int], int] = {}
    for lineno, toks, end in lines[3:]:
        if toks[0][0] != "mul":
            raise ParseError(f"expected 'mul', got {toks[0][0]!r}", lineno, toks[0][1])
        if len(toks) < 4 or toks[3][0] != ":":
            col = toks[3][1] if len(toks) > 3 else end
            raise ParseError("expected 'mul <i> <j> : <residues>'", lineno, col)
        ij = []
        for tok in toks[1:3]:
            v = _int(tok, lineno, "index")
            if not 0 <= v < n:
                raise ParseError(f"index {v} out of range for dim {n}", lineno, tok[1])
            ij.append(v)
        key = (ij[0], ij[1])
        if key in seen:
            raise ParseError(f"duplicate product mul {key[0]} {key[1]} (first on line {seen[key]})", lineno, toks[0][1])
        seen[key] = lineno
        sc[key[0], key[1]] = _residues(toks[4:], lineno, p, n, "product", end)

    for i in range(n):
        for j in range(n):
            if (i, j) not in seen:
                raise ParseError(f"missing product mul {i} {j}", last_line + 1, 1)

    a = Algebra(p, sc, unity, name=name)
    if validate:
        problems = a.validate()
        if problems:
            raise ValidationError(problems)
    return a


def serialize_spec(a: Algebra, with_name: bool = True) -> str:
    """Canonical text: fixed header order and ``mul`` lines in row-major order."""
    out = []
    if with_name and a.name:
        out.append(f"# algebra: {a.name}")
    out.append(f"field {a.p}")
    out.append(f"dim {a.n}")
    if a.unity is None:
        out.append("unity none")
    else:
        out.append(" ".join(["unity", *(str(int(v)) for v in a.unity)]))
    for i in range(a.n):
        for j in range(a.n):
            out.append(" ".join(["mul", str(i), str(j), ":", *(str(int(v)) for v in a.sc[i, j])]))
    return "\n".join(out) + "\n"


def read_spec(path: str) -> Algebra:
    with open(path, encoding="utf-8") as fh:
        return parse_spec(fh.read())


def write_spec(a: Algebra, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_spec(a))


def parse_cayley(text: str) -> np.ndarray:
    """Square grid of element indices; group axioms are checked elsewhere."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        toks = _tokens(raw)
        if toks:
            rows.append([_int(t, lineno, "group element") for t in toks])
            if len(rows[-1]) != len(rows[0]):
                raise ParseError(f"row has {len(rows[-1])} entries, expected {len(rows[0])}", lineno, 1)
    if not rows:
        raise ParseError("empty Cayley table", 1, 1)
    return np.array(rows, dtype=DTYPE)


def serialize_cayley(table) -> str:
    t = np.asarray(table)
    return "".join(" ".join(str(int(v)) for v in row) + "\n" for row in t)
