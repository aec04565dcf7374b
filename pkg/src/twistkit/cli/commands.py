"""The checks behind each command."""
from __future__ import annotations

import time

from ..errors import TwistkitError
from ..exactla import Matrix, format_scalar
from ..hopf import (build_f, build_f_inverse, twist_relations, verify_counital,
                    verify_module_algebra, verify_qt_axioms, verify_two_cocycle)
from ..koszul import TwistedKoszul, exactness_report, numerical_koszul_test, verify_chain_commutes
from ..quadalg import word_letters
from .report import CheckResult
from .specfile import Problem

COMMANDS = ("verify-cocycle", "twist", "fn-check", "chain-check", "koszul-check", "all")


def format_vector(vec: dict, gens, degree: int = 2) -> str:
    """A sparse vector of V^⊗degree as 'x⊗y - q^-1·y⊗x'."""
    parts = []
    for idx in sorted(vec):
        c = vec[idx]
        word = "⊗".join(gens.names[a] for a in word_letters(idx, degree, gens.dim))
        text = format_scalar(c)
        neg = text.startswith("-") and not format_scalar(-c).startswith("-")
        if neg:
            text = format_scalar(-c)
        if text == "1":
            term = word
        else:
            if " " in text:
                text = f"({text})"
            term = f"{text}·{word}"
        if not parts:
            parts.append(f"-{term}" if neg else term)
        else:
            parts.append(f"- {term}" if neg else f"+ {term}")
    return " ".join(parts) or "0"


class Session:
    """One problem plus the objects shared between its checks."""

    def __init__(self, problem: Problem, N: int | None = None, D: int | None = None, timing: bool = True):
        self.problem = problem
        self.N = problem.N if N is None else N
        self.D = problem.D if D is None else D
        self.timing = timing
        self._twisted = None
        self._tk = None

    @property
    def bounds(self) -> dict:
        return {"N": self.N, "D": self.D}

    def twisted_algebra(self):
        if self._twisted is None:
            self._twisted = twist_relations(self.problem.algebra, self.problem.cocycle)
        return self._twisted

    def twisted_koszul(self) -> TwistedKoszul:
        if self._tk is None:
            self._tk = TwistedKoszul(self.problem.algebra, self.problem.cocycle, N=self.N)
        return self._tk

    def run_check(self, name: str, fn) -> CheckResult:
        """fn returns (ok, witness, dims, lines); library errors become failures."""
        t0 = time.perf_counter()
        try:
            ok, witness, dims, lines = fn()
        except TwistkitError as exc:
            ok, witness, dims, lines = False, f"{type(exc).__name__}: {exc}", None, []
        millis = round((time.perf_counter() - t0) * 1000, 1) if self.timing else None
        return CheckResult(name, ok, witness, dims, millis, list(lines))

    # -- commands -------------------------------------------------------------

    def verify_cocycle(self) -> list:
        p = self.problem
        out = []
        if p.hopf is not None:
            def hopf_axioms():
                bad = p.hopf.verify_coassociative() + p.hopf.verify_counit_axiom()
                return not bad, bad or None, None, []
            out.append(self.run_check("hopf-axioms", hopf_axioms))
        if p.qt is not None:
            def qt():
                r = verify_qt_axioms(p.qt)
                return r.ok, r.witness, {name: ok for name, ok in r.parts}, []
            out.append(self.run_check("qt-axioms", qt))

        def cocycle():
            r = verify_two_cocycle(p.cocycle)
            return r.ok, r.witness, None, [r.detail] if r.detail else []
        out.append(self.run_check("two-cocycle", cocycle))

        def counital():
            r = verify_counital(p.cocycle)
            return r.ok, r.witness, None, [r.detail] if r.detail else []
        out.append(self.run_check("counital", counital))

        def module():
            r = verify_module_algebra(p.algebra, p.context)
            return r.ok, r.witness, None, [r.detail] if r.detail else []
        out.append(self.run_check("module-algebra", module))
        return out

    def twist(self) -> list:
        p = self.problem

        def twist():
            T = self.twisted_algebra()
            basis = [format_vector(v, p.algebra.gens) for v in T.relations.vectors()]
            ok = T.relations.dim == p.algebra.relations.dim
            return ok, None, {"relations": basis}, ["relations of the twisted algebra:"] + basis

        def hilbert():
            h = p.algebra.hilbert_series(self.D)
            ht = self.twisted_algebra().hilbert_series(self.D)
            first = next((d for d, (a, b) in enumerate(zip(h, ht)) if a != b), None)
            return h == ht, first, {"A": h, "A_mu": ht}, [f"Hilbert series of A:    {h}", f"Hilbert series of A_mu: {ht}"]

        return [self.run_check("twist", twist), self.run_check("hilbert-preserved", hilbert)]

    def fn_check(self) -> list:
        c = self.problem.cocycle
        N = max(self.N, 1)

        def higher_cocycle():
            count = 0
            for n in range(1, N + 1):
                f = build_f(c, n).matrix()
                for i in range(1, n + 1):
                    g = c.mu.pad(i - 1, n - i).then(build_f(c, n - 1).inflate(i)).matrix()
                    j = f.first_difference(g)
                    if j is not None:
                        return False, {"n": n, "i": i, "column": j}, {"cases": count}, []
                    count += 1
            return True, None, {"cases": count}, []

        def higher_counital():
            count = 0
            for n in range(1, N + 1):
                target = build_f(c, n - 1).matrix()
                for i in range(0, n + 1):
                    j = build_f(c, n).counit_at(i + 1).matrix().first_difference(target)
                    if j is not None:
                        return False, {"n": n, "i": i, "column": j}, {"cases": count}, []
                    count += 1
            return True, None, {"cases": count}, []

        def inverse():
            for n in range(0, N + 1):
                m = build_f_inverse(c, n).matrix() @ build_f(c, n).matrix()
                j = m.first_difference(Matrix.identity(m.rows))
                if j is not None:
                    return False, {"n": n, "column": j}, None, []
            return True, None, {"cases": N + 1}, []

        return [self.run_check("higher-cocycle", higher_cocycle),
                self.run_check("higher-counital", higher_counital),
                self.run_check("f-inverse", inverse)]

    def chain_check(self) -> list:
        def grid(inverse: bool):
            def run():
                rep = verify_chain_commutes(self.problem.algebra, self.problem.cocycle, self.N, self.D,
                                            self.twisted_koszul(), inverse=inverse)
                w = [{"n": n, "d": d, "column": j} for n, d, j in rep.failures] or None
                return rep.ok, w, {"slices": len(rep.entries)}, []
            return run

        def invertible():
            tk = self.twisted_koszul()
            count = 0
            for d in range(0, self.D + 1):
                for n in range(0, min(self.N, d) + 1):
                    k = tk.source.dim(n, d)
                    eye = Matrix.identity(k)
                    if tk.F_inverse(n, d) @ tk.F(n, d) != eye or tk.F(n, d) @ tk.F_inverse(n, d) != eye:
                        return False, {"n": n, "d": d}, None, []
                    count += 1
            return True, None, {"slices": count}, []

        return [self.run_check("chain-commutes", grid(False)),
                self.run_check("chain-inverse", grid(True)),
                self.run_check("F-invertible", invertible)]

    def koszul_check(self) -> list:
        def exact(which):
            def run():
                X = self.problem.algebra if which == "A" else self.twisted_koszul().target
                rep = exactness_report(X, self.N, self.D)
                table = rep.table()
                lines = [f"homology, rows n = 0..{self.N}, columns d = 1..{self.D}:"] + [
                    " ".join(f"{v:3d}" for v in row) for row in table]
                w = [{"n": n, "d": d, "dim": v} for (n, d), v in rep.nonzero()] or None
                if not rep.square_zero:
                    w = (w or []) + ["d^2 != 0"]
                return rep.exact, w, {"homology": table}, lines
            return run

        def numerical(which):
            def run():
                A = self.problem.algebra if which == "A" else self.twisted_algebra()
                r = numerical_koszul_test(A, self.D)
                return r.ok, r.witness, {"hilbert": A.hilbert_series(self.D),
                                         "dual": A.quadratic_dual().hilbert_series(self.D)}, []
            return run

        return [self.run_check("exactness K(A)", exact("A")),
                self.run_check("exactness K(A_mu)", exact("A_mu")),
                self.run_check("numerical-koszul A", numerical("A")),
                self.run_check("numerical-koszul A_mu", numerical("A_mu"))]

    def run(self, command: str) -> list:
        table = {
            "verify-cocycle": self.verify_cocycle,
            "twist": self.twist,
            "fn-check": self.fn_check,
            "chain-check": self.chain_check,
            "koszul-check": self.koszul_check,
        }
        if command == "all":
            return [r for name in COMMANDS[:-1] for r in table[name]()]
        return table[command]()

