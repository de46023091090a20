"""Acceptance criteria.

Every criterion is exact (tolerance: equality of canonical forms); each test
prints one PASS/FAIL line.  Run with `pytest tests/test_acceptance.py -v -s`.
"""
import itertools
import time
from fractions import Fraction

from gegenlab.scalars import KappaRational, kappa, kr, lin
from gegenlab.symfun import ZPolynomial, weighted_degree
from gegenlab.integrals import (
    apply_integral,
    char_apply,
    commutator_residual,
    transcribed_operator,
)
from gegenlab.gegenbauer import (
    char_eigenvalue,
    epsilon2,
    gen_eigen,
    gen_recurrence,
    recurrence_coefficient,
    sigma_closed_form,
    step,
    tabulated_shifts,
)
from gegenlab.verify import suite_appendix, _leading_structure_checks, _weights


def _report(criterion: int, label: str, ok: bool, elapsed: float):
    status = "PASS" if ok else "FAIL"
    print(f"{status} criterion {criterion}: {label} ({elapsed:.1f}s)")
    assert ok, f"criterion {criterion} failed: {label}"


def test_criterion_1_appendix_reproduction():
    t0 = time.time()
    rep = suite_appendix(3)
    elapsed = time.time() - t0
    good, total = rep.counts
    if not rep.passed:
        print(rep.to_text())
    constant = gen_eigen((0, 4, 0), 4).coefficient((0, 0, 0))
    expected = (kr(6) * (kr(18) + kappa() + kappa() ** 2)
                / (lin(1, 1) * lin(2, 1) * lin(3, 1) * lin(3, 2)))
    ok = rep.passed and constant == expected and elapsed < 60
    _report(1, f"appendix table reproduced exactly ({good}/{total})", ok, elapsed)


def test_criterion_2_eigen_suite():
    t0 = time.time()
    failures = []
    for rank, bound in ((2, 6), (3, 4)):
        N = rank + 1
        for w in _weights(rank, bound):
            P = gen_eigen(w, N)
            eps = KappaRational(epsilon2(w, N))
            if apply_integral(2, P, N) != P.scale(eps):
                failures.append((rank, w))
    elapsed = time.time() - t0
    ok = not failures and elapsed < 120
    _report(2, "eigen equation on both weight families", ok, elapsed)


def test_criterion_3_route_agreement():
    t0 = time.time()
    failures = []
    for rank, bound in ((2, 6), (3, 4)):
        N = rank + 1
        for w in _weights(rank, bound):
            if gen_recurrence(w, N) != gen_eigen(w, N):
                failures.append((rank, w))
    elapsed = time.time() - t0
    _report(3, "recurrence route equals eigen route", not failures, elapsed)


def test_criterion_4_characteristic_products():
    t0 = time.time()
    failures = []
    sets = [(3, itertools.product(range(3), repeat=2)),
            (4, itertools.product(range(2), repeat=3))]
    for N, weights in sets:
        for m in weights:
            P = gen_eigen(m, N)
            coeffs = char_apply(P, N)
            ev = char_eigenvalue(m, N)
            if any(c != P.scale(e) for c, e in zip(coeffs, ev)):
                failures.append((N, m))
    elapsed = time.time() - t0
    _report(4, "characteristic operator factorizes on eigenpolynomials",
            not failures, elapsed)


def test_criterion_5_commutativity():
    t0 = time.time()
    reports = [commutator_residual(2, 3, 3, 4)]
    for pair in ((2, 3), (2, 4), (3, 4)):
        reports.append(commutator_residual(*pair, 4, 4))
    elapsed = time.time() - t0
    ok = all(r.is_zero for r in reports)
    _report(5, "all integral commutators vanish exactly", ok, elapsed)


def test_criterion_6_sigma_tables():
    t0 = time.time()
    failures = []
    for N, comp in ((3, 2), (4, 1)):
        rank = N - 1
        for m in itertools.product(range(comp + 1), repeat=rank):
            for s in tabulated_shifts(N):
                _, sigma = step(m, s, N)
                if sigma != sigma_closed_form(m, s, N):
                    failures.append((m, s))
    pinned = (sigma_closed_form((0, 0), (1, 0), 3) == kr(-16) * kappa() ** 2
              and sigma_closed_form((0, 0, 0), (1, 0, 0), 4) == kr(-96) * kappa() ** 3)
    elapsed = time.time() - t0
    _report(6, "extracted step factors equal the closed forms (6 + 14 shifts)",
            not failures and pinned, elapsed)


def test_criterion_7_engine_equals_transcriptions():
    t0 = time.time()
    failures = []
    for N, order in ((3, 2), (3, 3), (4, 2)):
        rank = N - 1
        op = transcribed_operator(N, order)
        for w in itertools.product(range(5), repeat=rank):
            if weighted_degree(w) > 4:
                continue
            mono = ZPolynomial.monomial(rank, w)
            if op.apply(mono) != apply_integral(order, mono, N):
                failures.append((N, order, w))
    elapsed = time.time() - t0
    _report(7, "engine action equals the closed-form z-space operators",
            not failures, elapsed)


def test_criterion_8_unit_coupling_limit():
    t0 = time.time()
    one = Fraction(1)
    failures = []

    def check(kind, args, vanishes):
        val = recurrence_coefficient(kind, args)(one)
        if val != (0 if vanishes else 1):
            failures.append((kind, args))

    for m in range(6):
        check("c", (m,), m == 0)
    for p in range(5):
        for q in range(5):
            check("a", (p, q), q == 0)
    for m, l, n in itertools.product(range(4), repeat=3):
        check("d", (m, l, n), n == 0)
        check("f", (m, l, n), m == 0 or n == 0)
        check("g", (m, l, n), l == 0)
    elapsed = time.time() - t0
    _report(8, "all recurrence coefficients collapse to 1 at coupling 1",
            not failures, elapsed)


def test_criterion_9_leading_structure():
    t0 = time.time()
    bad = []
    for N in (3, 4, 5):
        for c in _leading_structure_checks(N):
            if not c.ok:
                bad.append(c.name)
    elapsed = time.time() - t0
    _report(9, "first-order and top second-order z-space coefficients (N=3,4,5)",
            not bad, elapsed)
