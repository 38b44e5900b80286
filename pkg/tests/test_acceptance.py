"""Acceptance suite: one test per release criterion, each printing a
pass/fail line (run with -s to see them).  All algebraic criteria are
exact-equality checks; the single statistical criterion has a fixed seed
and a pinned tolerance.
"""

import math
import random
import time
from fractions import Fraction
from itertools import permutations

from heckewalk import cli
from heckewalk.closedform import alpha, alpha_table, verify
from heckewalk.hecke import expand
from heckewalk.perm import apply_adjacent, inv_sequence, length
from heckewalk.qpoly import QPoly, q_int
from heckewalk.seq import counts, downset, enumerate_tight, foata_normal_form, staircase
from heckewalk.walk import WalkConfig, exact_distribution, simulate, total_variation

Q = QPoly((0, 1))
ONE = QPoly((1,))


def _report(num, title, elapsed, budget):
    print(f"criterion {num:2d} PASS  {title}  ({elapsed:.2f}s, budget {budget}s)")
    assert elapsed < budget, f"criterion {num} exceeded its {budget}s budget"


def test_01_tight_enumeration(capsys):
    t0 = time.perf_counter()
    expected = {(1, 1, 1, 1), (1, 2, 1, 1), (1, 2, 1, 2), (1, 2, 1, 3), (1, 2, 3, 1), (1, 2, 3, 4)}
    assert set(enumerate_tight(4)) == expected
    code = cli.main(["tight", "enumerate", "4"])
    out = capsys.readouterr().out
    assert code == 0
    assert {tuple(map(int, line.split(","))) for line in out.splitlines()} == expected
    elapsed = time.perf_counter() - t0
    _report(1, "six tight sequences of length 4", elapsed, 1)


def test_02_staircase_uniform_coefficients():
    t0 = time.perf_counter()
    for n in range(2, 7):
        value = ONE
        for i in range(1, n):
            value = value * q_int(i) ** (n - i)
        h = expand(staircase(n))
        assert len(h.terms) == math.factorial(n)
        assert all(p == value for p in h.terms.values())
    _report(2, "staircase expansion constant on all of S_n, n=2..6",
            time.perf_counter() - t0, 10)


def test_03_worked_example_table():
    t0 = time.perf_counter()
    r = (1, 2, 1, 1, 3, 1)
    low = {(1, 2, 3, 4), (1, 3, 2, 4), (2, 1, 3, 4), (2, 3, 1, 4), (3, 1, 2, 4), (3, 2, 1, 4)}
    high = {(1, 2, 4, 3), (1, 3, 4, 2), (2, 1, 4, 3), (2, 3, 4, 1), (3, 1, 4, 2), (3, 2, 4, 1)}
    table = alpha_table(r)
    assert set(table) == low | high
    assert all(table[w] == q_int(2) ** 3 for w in low)
    assert all(table[w] == q_int(2) ** 3 * q_int(3) for w in high)
    for w in permutations((1, 2, 3, 4)):
        if w not in table:
            assert alpha(r, w) == QPoly()
    assert verify(r).all_match
    _report(3, "12-entry coefficient table matches the expansion",
            time.perf_counter() - t0, 1)


def test_04_oracle_equivalence_sweep():
    t0 = time.perf_counter()
    checked = 0
    for l in range(1, 9):
        for r in enumerate_tight(l):
            report = verify(r)
            assert report.all_match, (r, report.mismatches())
            checked += 1
    elapsed = time.perf_counter() - t0
    _report(4, f"closed form equals expansion on all {checked} tight sequences of length <= 8",
            elapsed, 60)


def test_05_product_range_regression():
    t0 = time.perf_counter()
    r = (1, 2, 1, 2)
    full = q_int(2) * q_int(3)
    h = expand(r)
    assert set(h.terms) == set(map(tuple, permutations((1, 2, 3))))
    for w, p in h.terms.items():
        assert p == full
        assert alpha(r, w) == full
    # stopping the product at i = n-1 loses the q-integer [n] factor
    cs = counts(r)
    for w in h.terms:
        invs = inv_sequence(w) + (0,)
        truncated = ONE
        for i in range(2, 3):
            truncated = truncated * q_int(i) ** max(cs.get(i - 1, 0) - 1, invs[i - 1])
        assert truncated == q_int(2)
        assert truncated != full
    _report(5, "extended product range pinned against the truncated variant",
            time.perf_counter() - t0, 1)


def test_06_specialization_identities():
    t0 = time.perf_counter()
    rng = random.Random(2024)
    for _ in range(200):
        r = tuple(rng.randint(1, 4) for _ in range(rng.randint(0, 10)))
        h = expand(r)
        at_q, at_m1 = QPoly(), QPoly()
        for w, c in h.terms.items():
            at_q = at_q + c * Q ** length(w)
            at_m1 = at_m1 + c * QPoly((-1,)) ** length(w)
        prod_q, prod_m1 = ONE, ONE
        for k in r:
            prod_q = prod_q * (ONE + Q * q_int(k))
            prod_m1 = prod_m1 * (ONE - q_int(k))
        assert at_q == prod_q
        assert at_m1 == prod_m1
    _report(6, "index and sign specializations on 200 random sequences",
            time.perf_counter() - t0, 30)


def test_07_lemma_suites():
    t0 = time.perf_counter()
    rng = random.Random(7777)

    # four-case coefficient recurrence for appending one letter, 500 pairs
    for _ in range(500):
        r = tuple(rng.randint(1, 3) for _ in range(rng.randint(0, 7)))
        k = rng.randint(1, 3)
        n = 4
        h, h2 = expand(r, n), expand(r + (k,), n)
        dset = downset(r, n)
        qk = q_int(k)
        for w in downset(r + (k,), n):
            ws = apply_adjacent(w, k)
            got = h2.coefficient(w)
            if w not in dset:
                assert got == h.coefficient(ws) * qk
            elif ws not in dset:
                assert got == h.coefficient(w)
            elif length(ws) == length(w) + 1:
                assert got == h.coefficient(w) + h.coefficient(ws) * qk * Q
            else:
                assert got == h.coefficient(w) * Q ** k + h.coefficient(ws) * qk

    # inversion-statistic identities under one swap, 10^4 pairs
    for _ in range(10_000):
        n = rng.randint(2, 8)
        w = tuple(rng.sample(range(1, n + 1), n))
        k = rng.randint(1, n - 1)
        ws = apply_adjacent(w, k)
        iw = inv_sequence(w) + (0,)
        iws = inv_sequence(ws) + (0,)
        if length(ws) == length(w) - 1:
            assert iw[k - 1] > iw[k]
            assert iws[k - 1] == iw[k]
            assert iws[k] == iw[k - 1] - 1
        else:
            assert iw[k - 1] <= iw[k]
            assert iws[k - 1] == iw[k] + 1
            assert iws[k] == iw[k - 1]

    # inversion bound on every tight sequence of length <= 7
    for l in range(1, 8):
        for r in enumerate_tight(l):
            cs = counts(r)
            for w in downset(r):
                invs = inv_sequence(w)
                assert all(invs[i - 1] <= cs.get(i, 0) for i in range(1, len(w)))

    _report(7, "recurrence, swap-statistics, and inversion-bound suites",
            time.perf_counter() - t0, 60)


def test_08_walk_bridge():
    t0 = time.perf_counter()
    for l in range(1, 7):
        for r in enumerate_tight(l):
            table = alpha_table(r)
            for q in (1, Fraction(1, 2), Fraction(1, 3)):
                values = {w: p.eval(q) for w, p in table.items()}
                total = sum(values.values())
                expected = {w: v / total for w, v in values.items()}
                assert exact_distribution(r, q).probs == expected
    uniform = exact_distribution((1, 2, 1), Fraction(1, 2))
    assert all(p == Fraction(1, 6) for p in uniform.probs.values())
    assert len(uniform.probs) == 6
    _report(8, "exact walk law equals normalized coefficients (tight <= 6, three q's)",
            time.perf_counter() - t0, 10)


def test_09_monte_carlo_staircase():
    t0 = time.perf_counter()
    rho4 = staircase(4)
    emp = simulate(rho4, WalkConfig(q=Fraction(1, 2), samples=10**6, seed=20240810))
    exact = exact_distribution(rho4, Fraction(1, 2))
    assert all(p == Fraction(1, 24) for p in exact.probs.values())
    tv = total_variation(exact, emp)
    assert tv <= 0.005, f"TV {float(tv)} above tolerance"
    _report(9, f"10^6-sample simulation within TV {float(tv):.4f} of uniform",
            time.perf_counter() - t0, 30)


def test_10_commutation_invariance():
    t0 = time.perf_counter()
    rng = random.Random(1010)
    for _ in range(100):
        r = tuple(rng.randint(1, 4) for _ in range(rng.randint(0, 9)))
        n = (max(r) + 1) if r else 1
        assert expand(r, n) == expand(foata_normal_form(r), n)
    _report(10, "expansion invariant under commutation normal form, 100 sequences",
            time.perf_counter() - t0, 10)
