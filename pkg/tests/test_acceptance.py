"""Acceptance criteria, one test each.

Every comparison is exact; the only numeric limits are the runtime budgets.
Each test prints a ``[PASS]``/``[FAIL]`` line to the terminal.
"""
import json
import subprocess
import sys
import time
from fractions import Fraction

import pytest

from halfbinom.doubleseq import DoubleSeqParams, ab_cross_sum, rep_power_sum, zero_product_check
from halfbinom.exactmath import QuadElem
from halfbinom.halfsum import f_closed, f_direct
from halfbinom.identities import congruence_check, verify_grid

LEMMA_ELEMENTS = [
    QuadElem(Fraction(2)),
    QuadElem(Fraction(1, 3)),
    QuadElem(Fraction(-5)),
    QuadElem(Fraction(1), Fraction(1), 2),
    QuadElem(Fraction(1, 2), Fraction(1, 2), 5),
    QuadElem(Fraction(-3), Fraction(-1), 3),
]
POWER_GRID = {"n": range(26), "r": range(1, 6), "p": [0, 1, 2, 3]}


@pytest.fixture
def announce(capsys):
    def emit(label: str, checks: dict[str, bool], elapsed: float, budget: float | None = None):
        if budget is not None:
            checks = dict(checks, **{f"runtime {elapsed:.2f}s < {budget:g}s": elapsed < budget})
        ok = all(checks.values())
        failed = [k for k, v in checks.items() if not v]
        with capsys.disabled():
            line = f"\n[{'PASS' if ok else 'FAIL'}] {label} ({elapsed:.2f}s)"
            if failed:
                line += " -- failing: " + "; ".join(failed)
            print(line)
        assert ok, f"{label}: failing {failed}"
    return emit


def test_criterion_01_lemma_equivalence(announce):
    start = time.perf_counter()
    cases = [(n, a) for n in range(21) for a in LEMMA_ELEMENTS]
    agree = all(f_direct(n, a) == f_closed(n, a) for n, a in cases)
    announce("C1 closed form of f equals direct sum (126 cases)",
             {"all cases equal": agree and len(cases) == 126},
             time.perf_counter() - start, budget=1.0)


def test_criterion_02_new1_new2_new3(announce):
    start = time.perf_counter()
    checks = {}
    for name in ("new1", "new2", "new3"):
        report = verify_grid(name, {"n": range(1, 21)})
        checks[f"{name} 20/20"] = report.passed == report.checked == 20
    announce("C2 F_k^2, L_k^2, P_k^2 half sums", checks,
             time.perf_counter() - start, budget=1.0)


def test_criterion_03_u_power(announce):
    start = time.perf_counter()
    report = verify_grid("u_power", POWER_GRID)
    printed = verify_grid("u_power", {"n": [1], "r": [2], "p": [1]}, form="printed")
    checks = {
        "corrected form 520/520": report.checked == report.passed == 520,
        "printed 2^(2n-2) gives 19/25 vs 1 at (1,2,1)": [
            (c.lhs, c.rhs) for c in printed.counterexamples] == [("1", "19/25")],
    }
    announce("C3 u-power theorem", checks, time.perf_counter() - start, budget=10.0)


def test_criterion_04_v_power(announce):
    start = time.perf_counter()
    report = verify_grid("v_power", POWER_GRID)
    new22 = verify_grid("new22", {"n": range(1, 11)})
    checks = {
        "corrected form 520/520": report.checked == report.passed == 520,
        "new22 printed formula 10/10": new22.checked == new22.passed == 10,
    }
    announce("C4 v-power theorem", checks, time.perf_counter() - start)


def test_criterion_05_new12_new32(announce):
    start = time.perf_counter()
    new12 = verify_grid("new12", {"n": range(1, 16)})
    new32 = verify_grid("new32", {"n": range(1, 6)})
    at_two = [c for c in new32.counterexamples if c.params["n"] == 2]
    checks = {
        "new12 15/15": new12.checked == new12.passed == 15,
        "new32 printed fails for every n in 1..5": len(new32.counterexamples) == 5,
        "n=2: oracle 20 vs printed 1276/64": (
            len(at_two) == 1 and at_two[0].lhs == "20"
            and Fraction(at_two[0].rhs) == Fraction(1276, 64)),
        "report shows corrected form passes": new32.corrected_form_passes is True,
    }
    announce("C5 fourth-power instances", checks, time.perf_counter() - start)


def test_criterion_06_diff_sum(announce):
    start = time.perf_counter()
    grid = {"n": range(11), "m": range(0, 13, 2), "t": range(0, 13, 2), "p": [1, 2]}
    corrected = verify_grid("diff_sum", grid)
    sub = {"n": range(11), "m": [2, 6, 10], "t": [2, 6, 10], "p": [1, 2]}
    printed_sub = verify_grid("diff_sum", sub, form="printed")
    witness = verify_grid("diff_sum", {"n": [1], "m": [2], "t": [0], "p": [1]}, form="printed")
    checks = {
        "corrected 1078/1078": corrected.checked == corrected.passed == 11 * 7 * 7 * 2,
        "printed exact on m = t = 2 (mod 4)": printed_sub.ok and printed_sub.checked == 198,
        "printed fails at (1,2,0,1): 1 vs 5": [
            (c.lhs, c.rhs) for c in witness.counterexamples] == [("1", "5")],
    }
    announce("C6 difference sums", checks, time.perf_counter() - start)


def test_criterion_07_v2k(announce):
    start = time.perf_counter()
    corrected = verify_grid("v2k", {"n": range(21), "p": [1, 2, 3]})
    printed = verify_grid("v2k", {"n": [1], "p": [1]}, form="printed")
    checks = {
        "(p^2+4)^n + C(2n,n) 63/63": corrected.checked == corrected.passed == 63,
        "printed (p^2+4)^n fails at (1,1): 7 vs 5": [
            (c.lhs, c.rhs) for c in printed.counterexamples] == [("7", "5")],
    }
    announce("C7 half sum of v_{2k}", checks, time.perf_counter() - start)


def test_criterion_08_classical_suite(announce):
    start = time.perf_counter()
    reports = {name: verify_grid(name, {"n": range(21)})
               for name in ("classic_1a", "classic_1b", "classic_1c",
                            "classic_2b", "classic_3a", "classic_3b")}
    reports["classic_2a"] = verify_grid("classic_2a", {"n": range(21), "m": range(21)})
    reports["hoggatt"] = verify_grid("hoggatt", {"n": range(1, 11), "m": range(1, 5)})
    reports["generalized"] = verify_grid(
        "generalized", {"n": range(9), "u": range(-4, 5), "v": range(-4, 5), "r": range(-3, 4)})
    checks = {}
    for name, report in sorted(reports.items()):
        label = f"{name} {report.passed}/{report.checked}"
        if report.counterexamples:
            c = report.counterexamples[0]
            label += f" (first: {c.params} lhs={c.lhs} rhs={c.rhs})"
        checks[label] = report.ok and report.checked > 0
    announce("C8 classical identities as printed", checks,
             time.perf_counter() - start, budget=10.0)


def test_criterion_09_double_sequences(announce):
    start = time.perf_counter()
    d3 = DoubleSeqParams(3)
    f8 = verify_grid("f8", {"n": range(1, 11)})
    cong25 = congruence_check("cong25", 1000)
    cong625 = congruence_check("cong625", 1000)
    checks = {
        "rep_power_sum equal for w 4..20, n 1..12": all(
            lhs == rhs for w in range(4, 21) for n in range(1, 13)
            for lhs, rhs in [rep_power_sum(w, n)]),
        "zero_product_check(200, d=3)": zero_product_check(200, d3),
        "sum C(2n,n+k) a_k b_k = 0 for n <= 12": all(
            ab_cross_sum(n, d3) == 0 for n in range(13)),
        "F_k^8 formula 10/10": f8.checked == f8.passed == 10,
        "mod 25 congruence 1000/1000": cong25.passed == cong25.checked == 1000,
        "mod 625 congruence 1000/1000": cong625.passed == cong625.checked == 1000,
    }
    announce("C9 power representation and congruences", checks,
             time.perf_counter() - start, budget=5.0)


def test_criterion_10_determinism(announce):
    start = time.perf_counter()
    argv = [sys.executable, "-m", "halfbinom", "verify", "--identity", "u_power",
            "--n", "0..10", "--r", "1..3", "--p", "1,2"]
    runs = [subprocess.run(argv, capture_output=True, text=True) for _ in range(2)]

    def strip(text):
        data = json.loads(text)
        data.pop("elapsed_ms")
        return json.dumps(data)

    def without_elapsed_line(text):
        return "\n".join(line for line in text.splitlines() if '"elapsed_ms"' not in line)

    checks = {
        "exit 0 both runs": all(r.returncode == 0 for r in runs),
        "identical JSON without elapsed_ms": strip(runs[0].stdout) == strip(runs[1].stdout),
        "byte-identical apart from the elapsed_ms line":
            without_elapsed_line(runs[0].stdout) == without_elapsed_line(runs[1].stdout),
    }
    announce("C10 deterministic verify output", checks, time.perf_counter() - start)
