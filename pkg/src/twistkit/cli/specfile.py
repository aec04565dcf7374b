"""Line-oriented problem files.

A file is a sequence of sections; '#' starts a comment.

    [field]        rational | rational-function
    [generators]   names of the basis of V, separated by spaces or commas
    [relations]    one quadratic relation per line, e.g.  x*y - q*y*x
    [hopf]         action G = <matrix>, coproduct G = <expr>, counit G = <scalar>
    [qt]           R = <matrix>, R_inverse = <matrix> | invert
    [cocycle]      define NAME = <expr>, mu = <expr>, mu_inverse = <expr>
    [bounds]       N = <int>, D = <int>

Matrices are written row by row, entries separated by ',' and rows by ';',
so column j is the image of basis vector j.  Expressions use '@' for the
tensor product and '*' for the product; see twistkit.cli.expr.  With a
[qt] section the cocycle is a product of placed factors such as
R12 * R21^-1, or just R.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from ..errors import DimensionError, ParseError, TwistkitError
from ..exactla import Matrix, Subspace
from ..hopf import Cocycle, HopfElement, PlacedRProduct, QuasitriangularContext, WordHopfContext
from ..quadalg import GeneratorBasis, QuadraticAlgebra, word_index
from .expr import Tensor, parse_expression, parse_scalar

SECTIONS = ("field", "generators", "relations", "hopf", "qt", "cocycle", "bounds")
NAME = re.compile(r"[A-Za-z_][A-Za-z_0-9']*$")
STATEMENT = re.compile(r"\s*([A-Za-z_][A-Za-z_0-9]*)(?:\s+([A-Za-z_][A-Za-z_0-9']*))?\s*=\s*")
FACTOR = re.compile(r"\s*R(?:([12])([12]))?(?:\s*\^\s*(-?1))?\s*$")


@dataclass
class Problem:
    name: str
    field: str
    algebra: QuadraticAlgebra
    cocycle: Cocycle
    hopf: WordHopfContext | None = None
    qt: QuasitriangularContext | None = None
    N: int = 4
    D: int = 6

    @property
    def context(self):
        return self.qt if self.qt is not None else self.hopf


@dataclass
class _Line:
    number: int
    text: str
    offset: int  # column of text[0] within the raw line


def _sections(text: str) -> dict:
    out: dict = {}
    current = None
    for number, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].rstrip()
        stripped = body.strip()
        if not stripped:
            continue
        offset = len(body) - len(body.lstrip())
        if stripped.startswith("["):
            if not stripped.endswith("]"):
                raise ParseError("unterminated section header", number, offset + 1)
            name = stripped[1:-1].strip()
            if name not in SECTIONS:
                raise ParseError(f"unknown section [{name}]", number, offset + 1)
            if name in out:
                raise ParseError(f"section [{name}] appears twice", number, offset + 1)
            out[name] = []
            current = name
            continue
        if current is None:
            raise ParseError("content before the first section", number, offset + 1)
        out[current].append(_Line(number, stripped, offset))
    return out


def _statement(line: _Line, keys: tuple, named: bool):
    """Split 'key [name] = value' into its parts and the column of value."""
    m = STATEMENT.match(line.text)
    if m is None:
        raise ParseError("expected 'key = value'", line.number, line.offset + 1)
    key, name = m.group(1), m.group(2)
    if key not in keys:
        raise ParseError(f"unknown key {key!r}", line.number, line.offset + 1)
    if named and name is None and key != "mu" and key != "mu_inverse":
        raise ParseError(f"'{key}' needs a name", line.number, line.offset + m.end(1) + 1)
    value = line.text[m.end():]
    if not value.strip():
        raise ParseError("missing value", line.number, line.offset + m.end() + 1)
    return key, name, value, line.offset + m.end()


def parse_matrix(text: str, line: int, col0: int, allow_s: bool) -> Matrix:
    rows = []
    pos = 0
    for row_text in text.split(";"):
        entries = []
        rpos = pos
        for entry in row_text.split(","):
            if not entry.strip():
                raise ParseError("empty matrix entry", line, col0 + rpos + 1)
            entries.append(parse_scalar(entry, line, col0 + rpos, allow_s))
            rpos += len(entry) + 1
        rows.append(entries)
        pos += len(row_text) + 1
    if len({len(r) for r in rows}) != 1:
        raise ParseError("matrix rows have different lengths", line, col0 + 1)
    return Matrix.from_dense(rows)


def _relation_vector(val: Tensor, basis: GeneratorBasis, line: _Line, col: int) -> dict:
    if val.legs is None:
        raise ParseError("a relation must involve generators", line.number, col + 1)
    if val.legs != 1:
        raise ParseError("relations are products of generators, not tensors", line.number, col + 1)
    vec = {}
    for (word,), c in val.terms.items():
        if len(word) != 2:
            raise ParseError(f"relation term {'*'.join(word) or '1'} is not quadratic", line.number, col + 1)
        vec[word_index([basis.index(g) for g in word], basis.dim)] = c
    if not vec:
        raise ParseError("relation is zero", line.number, col + 1)
    return vec


def _hopf_element(val: Tensor, ctx: WordHopfContext, legs: int, line: _Line, col: int) -> HopfElement:
    if val.legs is None:
        val = val._at(legs)
    if val.legs != legs:
        raise ParseError(f"expected a {legs}-leg element, got {val.legs} legs", line.number, col + 1)
    return HopfElement(ctx, [(c, words) for words, c in val.terms.items()], legs)


def _qt_product(text: str, ctx: QuasitriangularContext, line: _Line, col: int) -> PlacedRProduct:
    factors = []
    pos = 0
    for part in text.split("*"):
        m = FACTOR.match(part)
        if m is None:
            raise ParseError("expected a factor R, R12 or R21, optionally ^-1", line.number, col + pos + 1)
        a, b = (int(m.group(1)), int(m.group(2))) if m.group(1) else (1, 2)
        if a == b:
            raise ParseError("a placed factor needs two different legs", line.number, col + pos + 1)
        factors.append((a, b, -1 if m.group(3) == "-1" else 1))
        pos += len(part) + 1
    return PlacedRProduct(ctx, 2, factors)


def parse_spec(text: str, name: str = "<spec>") -> Problem:
    secs = _sections(text)
    for required in ("generators", "relations", "cocycle"):
        if required not in secs:
            raise ParseError(f"missing section [{required}]")

    field = "rational-function"
    if "field" in secs:
        lines = secs["field"]
        if len(lines) != 1 or lines[0].text not in ("rational", "rational-function"):
            where = lines[0] if lines else None
            raise ParseError("field must be 'rational' or 'rational-function'",
                             where.number if where else None, (where.offset + 1) if where else None)
        field = lines[0].text
    allow_s = field == "rational-function"

    gens = []
    for line in secs["generators"]:
        for m in re.finditer(r"[^\s,]+", line.text):
            g = m.group()
            if not NAME.match(g) or g in ("s", "q"):
                raise ParseError(f"invalid generator name {g!r}", line.number, line.offset + m.start() + 1)
            if g in gens:
                raise ParseError(f"duplicate generator {g!r}", line.number, line.offset + m.start() + 1)
            gens.append(g)
    if not gens:
        raise ParseError("no generators")
    basis = GeneratorBasis(tuple(gens))
    names = {g: Tensor.word(g) for g in gens}
    rel_vectors = []
    for line in secs["relations"]:
        val = parse_expression(line.text, names, line.number, line.offset, allow_s)
        rel_vectors.append(_relation_vector(val, basis, line, line.offset))
    relations = Subspace.span(basis.dim ** 2, rel_vectors) if rel_vectors else Subspace.zero(basis.dim ** 2)
    algebra = QuadraticAlgebra(basis, relations, name)

    hopf = None
    if "hopf" in secs:
        action, coproduct, counit = {}, {}, {}
        pending = []
        for line in secs["hopf"]:
            key, g, value, col = _statement(line, ("action", "coproduct", "counit"), True)
            if g in ("s", "q"):
                raise ParseError(f"invalid generator name {g!r}", line.number, line.offset + 1)
            table = {"action": action, "coproduct": coproduct, "counit": counit}[key]
            if g in table:
                raise ParseError(f"{key} of {g} given twice", line.number, line.offset + 1)
            if key == "action":
                m = parse_matrix(value, line.number, col, allow_s)
                if m.shape != (basis.dim, basis.dim):
                    raise ParseError(f"action of {g} must be {basis.dim}x{basis.dim}, got "
                                     f"{m.rows}x{m.cols}", line.number, col + 1)
                action[g] = m
            elif key == "counit":
                counit[g] = parse_scalar(value, line.number, col, allow_s)
            else:
                table[g] = None
                pending.append((g, value, line, col))
        hnames = {g: Tensor.word(g) for g in action}
        for g, value, line, col in pending:
            val = parse_expression(value, hnames, line.number, col, allow_s)
            if val.legs is None:
                val = val._at(2)
            if val.legs != 2:
                raise ParseError(f"coproduct of {g} must have 2 legs", line.number, col + 1)
            coproduct[g] = [(c, l, r) for (l, r), c in val.terms.items()]
        for g in action:
            for key, table in (("coproduct", coproduct), ("counit", counit)):
                if g not in table:
                    raise ParseError(f"generator {g} has no {key}")
        for key, table in (("coproduct", coproduct), ("counit", counit)):
            for g in table:
                if g not in action:
                    raise ParseError(f"{key} given for {g}, which has no action")
        hopf = WordHopfContext(basis.dim, action, coproduct, counit, "hopf")

    qt = None
    if "qt" in secs:
        R = R_inv = None
        for line in secs["qt"]:
            key, _, value, col = _statement(line, ("R", "R_inverse"), False)
            if key == "R":
                R = parse_matrix(value, line.number, col, allow_s)
                n2 = basis.dim ** 2
                if R.shape != (n2, n2):
                    raise ParseError(f"R must be {n2}x{n2}, got {R.rows}x{R.cols}", line.number, col + 1)
            elif value.strip() != "invert":
                R_inv = (parse_matrix(value, line.number, col, allow_s), line, col)
        if R is None:
            raise ParseError("[qt] needs R")
        try:
            if R_inv is not None:
                inv, line, col = R_inv
                if inv.shape != R.shape or R @ inv != Matrix.identity(R.rows):
                    raise ParseError("R_inverse does not invert R", line.number, col + 1)
                qt = QuasitriangularContext(basis.dim, R, inv, hopf=hopf, name="R")
            else:
                qt = QuasitriangularContext(basis.dim, R, hopf=hopf, name="R")
        except DimensionError as exc:
            raise ParseError(f"R is not invertible ({exc})") from None

    mu = mu_inv = None
    defs: dict = {}
    for line in secs["cocycle"]:
        key, dname, value, col = _statement(line, ("define", "mu", "mu_inverse"), True)
        if qt is not None:
            if key == "define":
                raise ParseError("definitions are not available with an R-matrix", line.number, line.offset + 1)
            elem = _qt_product(value, qt, line, col)
        else:
            if hopf is None:
                raise ParseError("a cocycle needs a [hopf] or [qt] section", line.number, line.offset + 1)
            val = parse_expression(value, {**{g: Tensor.word(g) for g in hopf.generators}, **defs},
                                   line.number, col, allow_s)
            if key == "define":
                if dname in hopf.generators or dname in ("s", "q"):
                    raise ParseError(f"cannot redefine {dname!r}", line.number, line.offset + 1)
                defs[dname] = val
                continue
            elem = _hopf_element(val, hopf, 2, line, col)
        if key == "mu":
            mu = elem
        else:
            mu_inv = elem
    if mu is None:
        raise ParseError("[cocycle] needs mu")
    try:
        cocycle = Cocycle(mu, mu_inv, "mu")
    except TwistkitError as exc:
        raise ParseError(f"invalid cocycle: {exc}") from None

    bounds = {"N": 4, "D": 6}
    for line in secs.get("bounds", []):
        key, _, value, col = _statement(line, ("N", "D"), False)
        if not re.fullmatch(r"\s*\d+\s*", value):
            raise ParseError(f"{key} must be a nonnegative integer", line.number, col + 1)
        bounds[key] = int(value)
    return Problem(name, field, algebra, cocycle, hopf, qt, bounds["N"], bounds["D"])


def load_spec(path) -> Problem:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    return parse_spec(text, str(path))
