"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see only these lines,
or as part of the full suite.
"""
import time

import pytest

from oracles import direct_f, f_oracle
from twistkit.cli import run
from twistkit.cli.library import load_builtin
from twistkit.exactla import ONE, Matrix, Scalar, Subspace
from twistkit.hopf import (build_f, build_f_inverse, c2n_context, Cocycle, twist_relations, uq_sl2_action,
                           verify_counital, verify_two_cocycle)
from twistkit.hopf.examples import expected_e_action
from twistkit.koszul import TwistedKoszul, exactness_report, verify_chain_commutes
from twistkit.quadalg import place_operator, word_index

q = Scalar.q(1)

BUILTINS = [("qplane-r", 2), ("sym-c2n", 2), ("sym-c2n", 3), ("ext-c2n", 2), ("ext-c2n", 3)]


class Gate:
    def __init__(self, number: int, title: str, limit: float | None = None):
        self.number, self.title, self.limit = number, title, limit
        self.failures: list = []
        self.t0 = time.perf_counter()

    def check(self, ok, what) -> None:
        if not ok:
            self.failures.append(what)

    def close(self, capsys, detail: str = "") -> None:
        elapsed = time.perf_counter() - self.t0
        if self.limit is not None and elapsed >= self.limit:
            self.failures.append(f"took {elapsed:.2f} s, limit {self.limit} s")
        status = "FAIL" if self.failures else "PASS"
        line = f"{status} criterion {self.number}: {self.title} ({elapsed:.2f} s)"
        if detail:
            line += f" {detail}"
        if self.failures:
            line += f" failures: {self.failures}"
        with capsys.disabled():
            print("\n" + line)
        assert not self.failures, line


def _label(name, n):
    return name if name == "qplane-r" else f"{name}(n={n})"


def test_criterion_1_qplane_twist(capsys):
    g = Gate(1, "q-plane twist is the q^-1-plane", limit=1.0)
    p = load_builtin("qplane-r")
    T = twist_relations(p.algebra, p.cocycle)
    g.check(T.relations == Subspace.span(4, [{1: ONE, 2: -q.inverse()}]), "relation span")
    code, rep = run(["twist", "--builtin", "qplane-r", "--quiet", "--no-timing"])
    g.check(code == 0 and rep.checks[0].dims == {"relations": ["x⊗y - q^-1·y⊗x"]}, "CLI output")
    g.close(capsys, "x⊗y - q^-1·y⊗x")


def _signed_symmetric(n: int) -> Subspace:
    return Subspace.span(n * n, [{word_index([i, j], n): ONE, word_index([j, i], n): ONE}
                                 for i in range(n) for j in range(i + 1, n)])


def _signed_exterior(n: int) -> Subspace:
    vecs = [{word_index([i, i], n): ONE} for i in range(n)]
    vecs += [{word_index([i, j], n): ONE, word_index([j, i], n): -ONE} for i in range(n) for j in range(i + 1, n)]
    return Subspace.span(n * n, vecs)


@pytest.mark.parametrize("n", [2, 3])
def test_criterion_2_symmetric_and_exterior_twists(n, capsys):
    g = Gate(2, f"S(V) and exterior twists to their -1 versions, n={n}")
    for name, expected in (("sym-c2n", _signed_symmetric(n)), ("ext-c2n", _signed_exterior(n))):
        t0 = time.perf_counter()
        p = load_builtin(name, n)
        g.check(twist_relations(p.algebra, p.cocycle).relations == expected, name)
        elapsed = time.perf_counter() - t0
        g.check(elapsed < 1.0, f"{name} took {elapsed:.2f} s")
    g.close(capsys)


def test_criterion_3_cocycle_axioms(capsys):
    g = Gate(3, "cocycle and counital axioms, t1⊗t1 negative", limit=1.0)
    for name, n in (("sym-c2n", 2), ("sym-c2n", 3), ("qplane-r", 2)):
        c = load_builtin(name, n).cocycle
        g.check(verify_two_cocycle(c).ok, f"{_label(name, n)} cocycle")
        g.check(verify_counital(c).ok, f"{_label(name, n)} counital")
    ctx = c2n_context(2)
    bad = verify_two_cocycle(Cocycle(ctx.element([(1, (("t1",), ("t1",)))])))
    g.check(not bad.ok and bad.witness is not None, "t1⊗t1 must fail with a witness")
    g.close(capsys, f"t1⊗t1 fails at witness {bad.witness}: {bad.detail}")


def test_criterion_4_higher_cocycle_identities(capsys):
    g = Gate(4, "higher cocycle and counital identities, direct formula", limit=10.0)
    cases = 0
    for name, n_gens in (("sym-c2n", 2), ("sym-c2n", 3), ("qplane-r", 2)):
        c = load_builtin(name, n_gens).cocycle
        oracle = f_oracle(c)
        prev = build_f(c, 0)
        for n in range(1, 5):
            f = build_f(c, n)
            fm = f.matrix()
            if n >= 2:
                g.check(fm == direct_f(c, n, oracle), (name, n, "direct"))
            for i in range(1, n + 1):
                placed = place_operator(c.matrix, (i, i + 1), n + 1, c.dim)
                g.check(fm == placed @ prev.inflate(i).matrix(), (name, n, i, "cocycle"))
                cases += 1
            target = prev.matrix()
            for i in range(0, n + 1):
                g.check(f.counit_at(i + 1).matrix() == target, (name, n, i, "counital"))
                cases += 1
            prev = f
    g.close(capsys, f"{cases} identities, backends word and qt")


def test_criterion_5_chain_maps(capsys):
    g = Gate(5, "chain maps commute with the differentials, n<=4, d<=6", limit=60.0)
    slices = 0
    for name, n in BUILTINS:
        p = load_builtin(name, n)
        tk = TwistedKoszul(p.algebra, p.cocycle, N=4)
        rep = verify_chain_commutes(p.algebra, p.cocycle, 4, 6, tk)
        g.check(rep.ok, (_label(name, n), rep.failures))
        slices += len(rep.entries)
    g.close(capsys, f"{slices} slices")


def test_criterion_6_exactness(capsys):
    g = Gate(6, "twisted Koszul complexes are exact, corrupted entry detected", limit=60.0)
    for name, n in BUILTINS:
        p = load_builtin(name, n)
        K = TwistedKoszul(p.algebra, p.cocycle, N=4).target
        rep = exactness_report(K, 4, 6)
        g.check(rep.exact and rep.square_zero, (_label(name, n), rep.nonzero()))
    p = load_builtin("qplane-r")
    K = TwistedKoszul(p.algebra, p.cocycle, N=4).target
    col = min(i for column in K.differential(2, 3).columns() for i in column)
    bad = exactness_report(K, 4, 6, corrupt=(1, 3, 0, col))
    g.check(not bad.exact and bad.nonzero(), "corruption went unnoticed")
    g.close(capsys, f"control homology {dict(bad.nonzero())}")


def test_criterion_7_hilbert_preserved(capsys):
    g = Gate(7, "Hilbert series preserved up to degree 6")
    for name, n in BUILTINS:
        p = load_builtin(name, n)
        h = p.algebra.hilbert_series(6)
        g.check(h == twist_relations(p.algebra, p.cocycle).hilbert_series(6), _label(name, n))
        if name == "qplane-r":
            g.check(h == [1, 2, 3, 4, 5, 6, 7], h)
    g.close(capsys)


def test_criterion_8_e_action(capsys):
    g = Gate(8, "E acts by [b]_q on x^a y^b and E^(b+1) kills it, a+b<=5", limit=1.0)
    for a in range(6):
        for b in range(6 - a):
            g.check(uq_sl2_action("E", a, b) == expected_e_action(a, b), (a, b))
            g.check(uq_sl2_action("E", a, b, power=b + 1) == {}, (a, b, "power"))
    g.close(capsys)


def test_criterion_9_property_suites(capsys):
    import test_exactla
    import test_hopf
    import test_koszul

    g = Gate(9, "property suites")
    suites = [
        ("rank-nullity", test_exactla.test_rank_nullity, ()),
        ("rank-nullity over Q(s)", test_exactla.test_rank_nullity_function_field, ()),
        ("Grassmann", test_exactla.test_grassmann, ()),
        ("double twist, random invariant relations", test_hopf.test_random_twists, ()),
    ]
    for name in test_koszul.problems():
        suites.append((f"d^2 = 0 and agreement {name}", test_koszul.test_square_zero_and_agreement, (name,)))
    for name in ("c2n-2", "c2n-3", "qplane"):
        suites.append((f"double twist {name}", test_hopf.test_double_twist_round_trip, (name,)))
    for name in ("c2n-2", "qplane"):
        suites.append((f"f inverse {name}", test_hopf.test_f_inverse, (name,)))
    for label, fn, args in suites:
        try:
            fn(*args)
        except AssertionError as exc:
            g.check(False, f"{label}: {exc}")
    # F_n F_n^-1 on every Koszul slice
    for name, n in BUILTINS[:2]:
        p = load_builtin(name, n)
        tk = TwistedKoszul(p.algebra, p.cocycle, N=4)
        for d in range(0, 7):
            for k in range(0, min(4, d) + 1):
                eye = Matrix.identity(tk.source.dim(k, d))
                g.check(tk.F(k, d) @ tk.F_inverse(k, d) == eye, (name, k, d))
    g.check(build_f_inverse(load_builtin("qplane-r").cocycle, 4).matrix()
            @ build_f(load_builtin("qplane-r").cocycle, 4).matrix() == Matrix.identity(32), "f_4")
    g.close(capsys, f"{len(suites)} suites")
