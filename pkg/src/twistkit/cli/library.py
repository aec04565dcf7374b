"""Builtin problems, written out as problem files and parsed like user input."""
from __future__ import annotations

from importlib import resources

from .specfile import Problem, parse_spec

BUILTINS = ("qplane-r", "sym-c2n", "ext-c2n")


def qplane_text() -> str:
    return resources.files("twistkit.cli").joinpath("data", "qplane-r.twk").read_text(encoding="utf-8")


def _c2n_text(n: int, exterior: bool) -> str:
    gens = [f"x{i}" for i in range(1, n + 1)]
    rels = []
    if exterior:
        rels += [f"{g}*{g}" for g in gens]
    for i in range(n):
        for j in range(i + 1, n):
            a, b = gens[i], gens[j]
            rels.append(f"{a}*{b} {'+' if exterior else '-'} {b}*{a}")
    lines = ["[field]", "rational", "", "[generators]", " ".join(gens), "", "[relations]", *rels, "", "[hopf]"]
    for i in range(1, n + 1):
        diag = ["-1" if j == i else "1" for j in range(1, n + 1)]
        rows = "; ".join(", ".join(diag[r] if c == r else "0" for c in range(n)) for r in range(n))
        lines += [f"action t{i} = {rows}", f"coproduct t{i} = t{i}@t{i}", f"counit t{i} = 1"]
    lines += ["", "[cocycle]"]
    pairs = [(i, j) for i in range(1, n + 1) for j in range(1, i)]
    for i, j in pairs:
        lines.append(f"define mu{i}{j} = 1/2*(1@1 + t{i}@1 + 1@t{j} - t{i}@t{j})")
    if pairs:
        lines.append("mu = " + " * ".join(f"mu{i}{j}" for i, j in pairs))
        lines.append("mu_inverse = " + " * ".join(f"mu{i}{j}" for i, j in reversed(pairs)))
    else:
        lines.append("mu = 1@1")
    lines += ["", "[bounds]", "N = 4", "D = 6", ""]
    return "\n".join(lines)


def sym_c2n_text(n: int = 2) -> str:
    """S(V) for dim V = n with the (C_2)^n cocycle Π_{j<i} μ_ij."""
    return _c2n_text(n, exterior=False)


def ext_c2n_text(n: int = 2) -> str:
    """⋀(V) for dim V = n with the same cocycle."""
    return _c2n_text(n, exterior=True)


def builtin_text(name: str, n: int = 2) -> str:
    if name == "qplane-r":
        return qplane_text()
    if name == "sym-c2n":
        return sym_c2n_text(n)
    if name == "ext-c2n":
        return ext_c2n_text(n)
    raise KeyError(f"unknown builtin {name!r}; choose from {', '.join(BUILTINS)}")


def load_builtin(name: str, n: int = 2) -> Problem:
    label = name if name == "qplane-r" else f"{name}(n={n})"
    return parse_spec(builtin_text(name, n), label)
