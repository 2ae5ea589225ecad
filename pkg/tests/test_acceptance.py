"""Exit criteria. Each test prints one PASS/FAIL line.

The lines are written even when pytest captures output.
"""

import time

import pytest

from eulerrefine import verify
from eulerrefine.bijections import delta, delta_trace, psi, psi_inv
from eulerrefine.cli import cmd_table
from eulerrefine.partition import statistics


@pytest.fixture
def criterion(capsys, request):
    """Time the body and print one line per criterion."""
    state = {}

    def start(label, budget):
        state.update(label=label, budget=budget, t0=time.perf_counter())

    yield start
    elapsed = time.perf_counter() - state["t0"]
    failed = request.node.rep_call.failed if hasattr(request.node, "rep_call") else True
    ok = not failed and elapsed < state["budget"]
    with capsys.disabled():
        print(f"\nACCEPTANCE {state['label']}: {'PASS' if ok else 'FAIL'} "
              f"({elapsed:.2f}s, budget {state['budget']}s)")


def _within(t0, budget):
    elapsed = time.perf_counter() - t0
    assert elapsed < budget, f"took {elapsed:.1f}s, budget {budget}s"


def _all_ok(results):
    bad = [r.line() for r in results if not r.ok]
    assert not bad, "\n".join(bad)
    assert all(r.checks > 0 for r in results)


def test_1_table_one(criterion):
    criterion("1 D(7) table reproduction", 1)
    t0 = time.perf_counter()
    status, doc = cmd_table(7)
    assert status == 0
    rows = [(r["lo"], r["la"], r["no"], r["l"]) for r in doc["rows"]]
    assert rows == [(1, 7, 1, 7), (1, 5, 1, 5), (1, 3, 1, 3), (1, 1, 1, 1), (1, 3, 1, 3)]
    assert all(r["check"] for r in doc["rows"])
    _within(t0, 1)


def test_2_worked_example(criterion):
    criterion("2 worked example delta(17,16,14,10,7,4,2,1)", 1)
    t0 = time.perf_counter()
    lam = (17, 16, 14, 10, 7, 4, 2, 1)
    a, b, mu = delta_trace(lam)
    assert a == (15, 12, 10, 9, 8, 6, 6, 4, 1)
    assert b == (19, 18, 13, 10, 6, 5)
    assert mu == delta(lam) == (19, 13, 9, 9, 5, 5, 5, 3, 3)
    s, t = statistics(lam), statistics(mu)
    assert (s.odd_parts, s.alt_sum, t.odd_mult_parts, t.length) == (3, 9, 3, 9)
    _within(t0, 1)


def test_3_glaisher_style_example(criterion):
    criterion("3 psi(1,3,7^2,9,15)", 1)
    t0 = time.perf_counter()
    mu = (15, 9, 7, 7, 3, 1)
    assert psi(mu) == (15, 14, 9, 3, 1)
    assert psi_inv(psi(mu)) == mu
    _within(t0, 1)


def test_4_delta_bijection_suite(criterion):
    criterion("4 delta bijection D(n)->O(n), n<=26", 60)
    t0 = time.perf_counter()
    res = verify._run("acceptance", "delta", lambda: verify.check_delta(26))
    _all_ok([res])
    _within(t0, 60)


def test_5_phi_suite(criterion):
    criterion("5 Phi C1->C2, N=1..3, all A, n<=20; lo and r2 kept for N=2", 120)
    t0 = time.perf_counter()
    results = [
        verify._run("acceptance", "Phi sweep", lambda: verify.check_phi_sweep(20, (1, 2, 3))),
        verify._run("acceptance", "Phi A1->A2", lambda: verify.check_phi_euler(20)),
    ]
    _all_ok(results)
    _within(t0, 120)


def test_6_counting_theorems(criterion):
    criterion("6 AO1=AO2, B1=B2 (N=2..5, n<=26), C1=C2 (N=1..3)", 120)
    t0 = time.perf_counter()
    _all_ok(verify.counting_suite(26))
    _within(t0, 120)


def test_7_series_identities(criterion):
    criterion("7 series identities at default orders", 60)
    t0 = time.perf_counter()
    results = verify.series_suite()
    got = {r.name.split(" ")[0]: r.name for r in results}
    expected_orders = {
        "E4.1": "abcd-grade 20", "E4.2": "abcd-grade 20",
        "E4.2'": "q-grade 30", "E4.4": "q-grade 30", "E4.5": "q-grade 30", "E2.1": "q-grade 30",
        "E1.1": "q-grade 26", "E1.2": "q-grade 26", "E1.3": "q-grade 26",
        "E1.4": "q-grade 26", "E1.5": "q-grade 26",
    }
    for ident, order in expected_orders.items():
        assert got[ident].endswith(order)
    _all_ok(results)
    _within(t0, 60)


def test_8_refinements(criterion):
    criterion("8 joint equidistributions (Sylvester..main), n<=26", 60)
    t0 = time.perf_counter()
    results = verify.refinement_suite(26)
    assert len(results) == 6
    _all_ok(results)
    _within(t0, 60)

