"""Acceptance suite: one test per criterion, each printing a single PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v`` or directly with
``python tests/test_acceptance.py``.
"""

import random
import subprocess
import sys
import time
from fractions import Fraction
from itertools import product
from pathlib import Path

from chw.automorphisms import (
    alpha_fr,
    compose,
    compose_all,
    eps,
    equal,
    induced_matrix,
    inner,
    inner_witness,
    to_endomorphism,
)
from chw.cohomology import extension_class, h1_w, h2_w, torsion_free_classes, all_classes
from chw.group import (
    GroupElement,
    commutator,
    embed_a,
    enumerate_ball,
    from_letters,
    invert,
    multiply,
    power,
)
from chw.lattice import (
    IntMatrix,
    commutant_basis,
    commutant_is_diagonal,
    fixed_sublattice,
    is_unimodular,
    rho,
    sign_diagonals,
    smith_normal_form,
)
from chw.monoid import TranslationMatrix, is_unit, star, unit_inverse
from chw.verification import SUITES, run_suite
from chw.words import ReducedWord, w_compose, w_fr_auto

from conftest import ACCEPTANCE_LINES

ROOT = Path(__file__).resolve().parent.parent


def report(num, title, ok, elapsed, limit, detail=""):
    ok = bool(ok) and (limit is None or elapsed < limit)
    bound = f" (limit {limit:g} s)" if limit is not None else ""
    line = f"criterion {num:2d}: {'PASS' if ok else 'FAIL'}  {title}  [{elapsed:.2f} s{bound}]"
    if detail:
        line += f"  {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def pairs(n):
    return [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]


def random_matrix(rng, n, lo=-4, hi=4):
    return TranslationMatrix.of([[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)])


def random_element(rng, n, max_len=6, box=3):
    letters = [(rng.randint(1, n), rng.choice((1, -1))) for _ in range(rng.randint(0, max_len))]
    g = from_letters(n, letters)
    return multiply(g, embed_a(tuple(rng.randint(-box, box) for _ in range(n))))


def test_criterion_01_defining_relators():
    t0 = time.perf_counter()
    bad = []
    for n in range(2, 7):
        for i, j in pairs(n):
            r = from_letters(n, [(i, -1), (j, 1), (j, 1), (i, 1), (j, 1), (j, 1)])
            if not r.is_identity():
                bad.append((n, i, j, str(r)))
    report(1, "defining relators trivial, n = 2..6", not bad, time.perf_counter() - t0, 1.0, str(bad[:3]) if bad else "")


def test_criterion_02_square_of_shifted_generator():
    t0 = time.perf_counter()
    rng = random.Random(2)
    bad = 0
    for n in range(2, 6):
        for _ in range(200):
            i = rng.randint(1, n)
            a = tuple(rng.randint(-6, 6) for _ in range(n))
            lhs = power(multiply(GroupElement.gen(n, i), embed_a(a)), 2)
            rhs = power(power(GroupElement.gen(n, i), 2), 2 * a[i - 1] + 1)
            bad += lhs != rhs
    report(2, "(x_i a)^2 = (x_i^2)^(2 a_i + 1), 200 per n = 2..5", bad == 0, time.perf_counter() - t0, 1.0)


def test_criterion_03_monoid_homomorphism():
    t0 = time.perf_counter()
    rng = random.Random(3)
    bad = 0
    for n in range(2, 6):
        for _ in range(200):
            a, b = random_matrix(rng, n), random_matrix(rng, n)
            lhs = to_endomorphism(star(a, b))
            rhs = compose(to_endomorphism(a), to_endomorphism(b))
            bad += lhs.images != rhs.images
    report(3, "t_(a*b) = t_a o t_b, 200 pairs per n = 2..5", bad == 0, time.perf_counter() - t0, 5.0)


def two_sided_inverse(a):
    """Solve a*b = 0 over Q entry by entry, then test integrality and b*a = 0."""
    n = a.n
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            b = Fraction(-a[i, j], 1 + 2 * a[j, j])
            if b.denominator != 1:
                return None
            row.append(int(b))
        rows.append(row)
    b = TranslationMatrix.of(rows)
    zero = TranslationMatrix.zero(n)
    return b if star(b, a) == zero else None


def test_criterion_04_unit_characterisation():
    t0 = time.perf_counter()
    bad = []
    zero = TranslationMatrix.zero(2)
    for e in product(range(-2, 2), repeat=4):
        a = TranslationMatrix.of([e[:2], e[2:]])
        exists = two_sided_inverse(a) is not None
        predicted = set(a.diagonal()) <= {0, -1}
        if exists != predicted or is_unit(a) != predicted:
            bad.append(a.tolist())
        if predicted:
            b = unit_inverse(a)
            if not (star(a, b) == zero == star(b, a)):
                bad.append(a.tolist())
    report(4, "units are exactly diag in {0,-1}, n = 2 exhaustive on [-2,1]", not bad, time.perf_counter() - t0, 5.0)


def test_criterion_05_fr_square():
    t0 = time.perf_counter()
    bad = []
    for n in range(3, 6):
        for i, j in pairs(n):
            a = alpha_fr(n, i, j)
            if not equal(compose(a, a), eps(n, i, j, -2)):
                bad.append((n, i, j))
    report(5, "(alpha_i^j)^2 = t_(-2 eps_ij), n = 3..5", not bad, time.perf_counter() - t0, 1.0, str(bad) if bad else "")


def test_criterion_06_aut_relations():
    t0 = time.perf_counter()
    failures = []
    counts = []
    for n in (3, 4):
        for suite in ("autw", "autg"):
            rep = run_suite(suite, n)
            counts.append(f"{suite}/{n}:{rep.passed}")
            failures += [(suite, n, c.name, c.instance) for c in rep.failures()]
    report(6, "relation suites exhaustive, n = 3, 4", not failures, time.perf_counter() - t0, 60.0,
           " ".join(counts) + (f" failures={failures[:3]}" if failures else ""))


def test_criterion_07_inner_products():
    t0 = time.perf_counter()
    bad = []
    for n in range(3, 6):
        for j in range(1, n + 1):
            xj = GroupElement.gen(n, j)
            eps_prod = compose_all([eps(n, i, j, 2) for i in range(1, n + 1) if i != j], n)
            target = power(xj, -2)
            if not equal(eps_prod, inner(target)) or inner_witness(eps_prod, 1, 2) != target:
                bad.append(("eps", n, j))
            fr_prod = compose_all([alpha_fr(n, k, j) for k in range(1, n + 1) if k != j], n)
            if not equal(fr_prod, inner(xj)) or inner_witness(fr_prod, 1, 2) != xj:
                bad.append(("alpha", n, j))
    report(7, "products of eps_ij^2 and alpha_k^j are inner, n = 3..5", not bad, time.perf_counter() - t0, 30.0,
           str(bad) if bad else "")


def test_criterion_08_invariants_and_w_linear_automorphisms():
    t0 = time.perf_counter()
    ok = True
    for n in range(3, 6):
        gens = [ReducedWord.gen(n, i) for i in range(1, n + 1)]
        ok &= fixed_sublattice(gens) == []
        ok &= commutant_is_diagonal(n)
        rhos = [rho(i, n) for i in range(1, n + 1)]
        # enumerate diagonal candidates with entries in [-2, 2]; keep invertible commuting ones
        found = []
        for d in product(range(-2, 3), repeat=n):
            m = IntMatrix.diag(d)
            if all(m @ r == r @ m for r in rhos) and is_unimodular(m):
                found.append(m.rows)
        signs = sign_diagonals(n)
        ok &= len(signs) == 2 ** n and sorted(found) == sorted(s.rows for s in signs)
        ok &= all(s @ r == r @ s for s in signs for r in rhos)
        ok &= len(commutant_basis(rhos)) == n
    report(8, "A^W = 0 and Aut_W(A) = 2^n sign diagonals, n = 3..5", ok, time.perf_counter() - t0, 5.0)


def test_criterion_09_second_cohomology():
    t0 = time.perf_counter()
    ok = True
    for n in range(2, 7):
        ok &= h2_w(n) == [[2]] * n
        ok &= len(all_classes(n)) == 2 ** n
        tf = torsion_free_classes(n)
        ok &= len(tf) == 1 and extension_class(n) == tf[0]
    report(9, "H^2 = (Z/2)^n with a unique torsion-free class = extension class, n = 2..6", ok,
           time.perf_counter() - t0, 1.0)


def test_criterion_10_first_cohomology():
    t0 = time.perf_counter()
    got = {n: h1_w(n) for n in range(3, 7)}
    ok = all(got[n] == (n * (n - 2), [2] * n) for n in got)
    report(10, "H^1 = Z^(n(n-2)) x (Z/2)^n, n = 3..6", ok, time.perf_counter() - t0, 5.0, "" if ok else str(got))


def test_criterion_11_induced_identity():
    t0 = time.perf_counter()
    rng = random.Random(11)
    bad = 0
    seen = {True: 0, False: 0}
    for n in range(3, 6):
        for k in range(100):
            rows = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)]
            zero_diag = k % 2 == 0
            for i in range(n):
                rows[i][i] = 0 if zero_diag else rng.choice((0, -1))
            a = TranslationMatrix.of(rows)
            assert is_unit(a)
            expect = not any(a.diagonal())
            seen[expect] += 1
            bad += (induced_matrix(to_endomorphism(a)) == IntMatrix.identity(n)) != expect
    report(11, "induced_matrix(t_a) = I iff diag(a) = 0, 100 units per n = 3..5", bad == 0 and all(seen.values()),
           time.perf_counter() - t0, 5.0)


def test_criterion_12_property_suites():
    t0 = time.perf_counter()
    rng = random.Random(12)
    bad = []
    for n in range(2, 6):
        e = GroupElement.identity(n)
        for _ in range(1000):
            g, h, k = (random_element(rng, n) for _ in range(3))
            if multiply(multiply(g, h), k) != multiply(g, multiply(h, k)):
                bad.append(("assoc", n))
            if multiply(g, invert(g)) != e or multiply(invert(g), g) != e or multiply(g, e) != g:
                bad.append(("inverse", n))
    for _ in range(200):
        r, c = rng.randint(1, 6), rng.randint(1, 6)
        m = IntMatrix.of([[rng.randint(-9, 9) for _ in range(c)] for _ in range(r)], c)
        s = smith_normal_form(m)
        d = s.D.diagonal()
        divides = all(d[i + 1] % d[i] == 0 for i in range(len(d) - 1) if d[i])
        if not (s.U @ m @ s.V == s.D and s.D.is_diagonal() and is_unimodular(s.U) and is_unimodular(s.V) and divides):
            bad.append(("snf", m.tolist()))
    n = 3
    gens = [GroupElement.gen(n, i) for i in range(1, n + 1)]
    ball = list(enumerate_ball(n, 3, 1))
    for g in ball:
        if g.is_identity():
            continue
        if any(power(g, m).is_identity() for m in range(2, 13)):
            bad.append(("torsion", str(g)))
        if all(commutator(g, x).is_identity() for x in gens):
            bad.append(("centre", str(g)))
    report(12, f"group axioms, SNF round trip, torsion/centre in ball(3,1) ({len(ball)} elements)", not bad,
           time.perf_counter() - t0, 60.0, str(bad[:3]) if bad else "")


def test_criterion_13_negative_controls():
    t0 = time.perf_counter()
    ok = True
    per_suite = []
    for suite in SUITES:
        rep = run_suite(suite, 3)
        controls = [c for c in rep.checks if c.name.startswith("negative control")]
        ok &= bool(controls) and all(c.passed for c in controls)
        per_suite.append(f"{suite}:{len(controls)}")
    # the mutated relations evaluated raw are false
    n = 3
    a = w_fr_auto(n, 1, 2)
    ok &= not w_compose(a, w_compose(a, a)).is_identity()
    ok &= not equal(compose(alpha_fr(n, 1, 2), alpha_fr(n, 1, 2)), eps(n, 1, 2, 2))
    ok &= not equal(compose_all([alpha_fr(n, k, 1) for k in (2, 3)], n), inner(power(GroupElement.gen(n, 1), -1)))
    d, e21 = TranslationMatrix.of([[1, 0, 0], [0, 0, 0], [0, 0, 0]]), TranslationMatrix.elementary(n, 2, 1)
    mutated = TranslationMatrix.of([[d[i, j] + (1 + 2 * d[i, i]) * e21[i, j] for j in range(n)] for i in range(n)])
    ok &= not equal(to_endomorphism(mutated), compose(to_endomorphism(d), to_endomorphism(e21)))
    report(13, "every suite's mutated relation is rejected", ok, time.perf_counter() - t0, None, " ".join(per_suite))


def test_criterion_14_determinism():
    t0 = time.perf_counter()
    cmd = [sys.executable, "-m", "chw", "verify", "--n", "3", "--suite", "all", "--seed", "0", "--json"]
    runs = [subprocess.run(cmd, capture_output=True, check=False, cwd=ROOT) for _ in range(2)]
    ok = all(r.returncode == 0 for r in runs) and runs[0].stdout == runs[1].stdout and len(runs[0].stdout) > 0
    report(14, "verify --json is byte-identical across runs", ok, time.perf_counter() - t0, None,
           f"{len(runs[0].stdout)} bytes")


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
