"""Acceptance gate: one test per exit criterion, one PASS/FAIL line each.

Run ``pytest tests/test_acceptance.py`` (the lines appear in the terminal
summary) or ``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import io
import random
import subprocess
import sys
import time
from itertools import product
from math import gcd


from ramseycert.certificate import BUILTIN_NAMES, ColoringCertificate, builtin_certificate, from_assignment
from ramseycert.circulant import CirculantGraph, edge_color
from ramseycert.clique import brute_force_count_cliques, count_cliques_through_zero
from ramseycert.cli import main
from ramseycert.verifier import apply_multiplier, verify, verify_with_oracle

from strategies import random_certificate, random_distance_set

RESULTS: dict[int, tuple[bool, str]] = {}

EXPECTED_BOUNDS = {
    "r4_16": "R(4,16) >= 164",
    "r5_11": "R(5,11) >= 171",
    "r5_12": "R(5,12) >= 191",
    "r5_13": "R(5,13) >= 213",
    "r5_14": "R(5,14) >= 239",
    "r3_3_9": "R(3,3,9) >= 118",
    "r3_3_10": "R(3,3,10) >= 141",
    "r3_3_11": "R(3,3,11) >= 158",
}
TOTAL_BUDGET_S = 60.0
PER_CERT_BUDGET_S = 30.0
TAMPER_TRIALS = 20
TAMPER_MIN_INVALID = 0.75
ORACLE_CASES = 1000
ORACLE_BUDGET_S = 60.0
DOUBLE_COUNT_CASES = 200
SEARCH_BUDGET_S = 10.0


def record(num: int, ok: bool, detail: str) -> None:
    RESULTS[num] = (ok, detail)
    assert ok, detail


def cli(*argv: str) -> tuple[int, str]:
    out = io.StringIO()
    return main(list(argv), out=out), out.getvalue()


def test_1_paper_reproduction():
    failures = []
    start = time.perf_counter()
    for name in BUILTIN_NAMES:
        t0 = time.perf_counter()
        report = verify(builtin_certificate(name))
        took = time.perf_counter() - t0
        if report.proven_bound != EXPECTED_BOUNDS[name]:
            got = report.proven_bound or "INVALID " + " ".join(c.line() for c in report.colors if not c.clean)
            failures.append(f"{name}: expected {EXPECTED_BOUNDS[name]}, got {got}")
        if took > PER_CERT_BUDGET_S:
            failures.append(f"{name}: {took:.1f}s > {PER_CERT_BUDGET_S}s")
    total = time.perf_counter() - start
    if total > TOTAL_BUDGET_S:
        failures.append(f"total {total:.1f}s > {TOTAL_BUDGET_S}s")
    code, out = cli("verify-all")
    if code != 0:
        failures.append(f"verify-all exit {code}")
    record(1, not failures, "; ".join(failures) or f"8/8 VALID in {total:.1f}s")


def _tamper(cert: ColoringCertificate, rng: random.Random) -> ColoringCertificate:
    d = rng.randint(1, cert.n // 2)
    old = cert.color_of_distance(d)
    new = rng.choice([c for c in range(cert.m) if c != old])
    colors = [list(c) for c in cert.colors]
    colors[old].remove(d)
    colors[new].append(d)
    return ColoringCertificate(cert.n, tuple(map(tuple, colors)), cert.targets, cert.name)


def test_2_tamper_sensitivity():
    failures, rates = [], []
    for name in BUILTIN_NAMES:
        rng = random.Random(f"tamper-{name}")
        invalid = 0
        for _ in range(TAMPER_TRIALS):
            bent = _tamper(builtin_certificate(name), rng)
            report = verify(bent)
            if not report.valid:
                invalid += 1
                for w in report.witnesses:
                    if not all(edge_color(bent, a, b) == w.color for a in w.vertices for b in w.vertices if a < b):
                        failures.append(f"{name}: witness {w} does not self-verify")
        rates.append(f"{name}={invalid}/{TAMPER_TRIALS}")
        if invalid < TAMPER_MIN_INVALID * TAMPER_TRIALS:
            failures.append(f"{name}: only {invalid}/{TAMPER_TRIALS} INVALID")
    record(2, not failures, "; ".join(failures) or " ".join(rates))


def test_3_oracle_equivalence():
    rng = random.Random(3)
    start = time.perf_counter()
    mismatches = 0
    for _ in range(ORACLE_CASES):
        cert = random_certificate(rng, n_range=(3, 16), colors=(2, 3), t_range=(2, 6))
        fast, slow = verify(cert), verify_with_oracle(cert)
        if fast.valid != slow.valid or fast.pattern() != slow.pattern():
            mismatches += 1
    took = time.perf_counter() - start
    ok = mismatches == 0 and took < ORACLE_BUDGET_S
    record(3, ok, f"{ORACLE_CASES - mismatches}/{ORACLE_CASES} agree in {took:.1f}s (budget {ORACLE_BUDGET_S}s)")


def test_4_transitivity_double_count():
    rng = random.Random(4)
    bad = []
    for _ in range(DOUBLE_COUNT_CASES):
        n = rng.randint(3, 16)
        g = CirculantGraph(n, random_distance_set(rng, n, rng.random()))
        t = rng.randint(2, 5)
        if n * count_cliques_through_zero(g, t) != t * brute_force_count_cliques(g, t):
            bad.append((n, g.distances, t))
    record(4, not bad, f"{DOUBLE_COUNT_CASES - len(bad)}/{DOUBLE_COUNT_CASES} exact" + (f"; first bad {bad[0]}" if bad else ""))


def test_5_classical_sanity():
    failures = []
    c5 = ColoringCertificate(5, ((1,), (2,)), (3, 3))
    if verify(c5).proven_bound != "R(3,3) >= 6":
        failures.append("(a) C5 split not VALID")
    valid6 = [a for a in product(range(2), repeat=3) if verify(from_assignment(6, a, (3, 3))).valid]
    valid6_oracle = [a for a in product(range(2), repeat=3) if verify_with_oracle(from_assignment(6, a, (3, 3))).valid]
    if valid6 or valid6_oracle:
        failures.append(f"(b) n=6 has VALID assignments {valid6} / oracle {valid6_oracle}")
    paley = ColoringCertificate(17, ((1, 2, 4, 8), (3, 5, 6, 7)), (4, 4))
    if verify(paley).proven_bound != "R(4,4) >= 18" or verify_with_oracle(paley).proven_bound != "R(4,4) >= 18":
        failures.append("(c) Paley-17 not VALID under both paths")
    record(5, not failures, "; ".join(failures) or "(a) R(3,3)>=6 (b) 0/8 valid at n=6 (c) R(4,4)>=18")


def test_6_multiplier_invariance():
    failures = []
    for name in BUILTIN_NAMES:
        cert = builtin_certificate(name)
        rng = random.Random(f"unit-{name}")
        u = rng.choice([u for u in range(2, cert.n - 1) if gcd(u, cert.n) == 1])
        a, b = verify(cert), verify(apply_multiplier(cert, u))
        if a.pattern() != b.pattern():
            failures.append(f"{name}: pattern changed under u={u}")
        if not b.valid:
            failures.append(f"{name}: image under u={u} is INVALID")
    record(6, not failures, "; ".join(failures) or "8/8 VALID with unchanged verdict pattern")


def test_7_search(tmp_path):
    failures = []
    for n, targets, seed, iters in ((5, "3,3", 7, None), (13, "3,5", 1, 10_000), (17, "4,4", 1, 100_000)):
        path = tmp_path / f"n{n}.cert"
        argv = ["search", "-n", str(n), "--targets", targets, "--seed", str(seed), "-o", str(path), "-q"]
        if iters:
            argv += ["--max-iters", str(iters)]
        t0 = time.perf_counter()
        code, _ = cli(*argv)
        took = time.perf_counter() - t0
        if code != 0:
            failures.append(f"n={n}: exit {code}")
            continue
        if took > SEARCH_BUDGET_S:
            failures.append(f"n={n}: {took:.1f}s > {SEARCH_BUDGET_S}s")
        code, _ = cli("verify", str(path))
        if code != 0:
            failures.append(f"n={n}: found certificate fails verify")
    code, _ = cli("search", "-n", "6", "--targets", "3,3", "--seed", "7", "--max-iters", "1000", "--restarts", "8", "-q")
    if code != 3:
        failures.append(f"n=6: exit {code}, expected 3")
    record(7, not failures, "; ".join(failures) or "n=5,13,17 found and re-verified; n=6 exit 3")


def _run(*argv: str) -> bytes:
    return subprocess.run([sys.executable, "-m", "ramseycert", *argv], capture_output=True, check=False).stdout


def test_8_determinism():
    a = _run("verify", "--builtin", "r5_14")
    b = _run("verify", "--builtin", "r5_14")
    search_args = ("search", "-n", "16", "--targets", "3,5", "--seed", "9", "--max-iters", "400", "--restarts", "3", "--workers", "1")
    s1, s2 = _run(*search_args), _run(*search_args)
    ok = a == b and s1 == s2 and a.startswith(b"certificate: r5_14") and b"result=" in s1
    record(8, ok, "verify r5_14 and search logs byte-identical across runs" if ok else "outputs differ between runs")


def summary_lines() -> list[str]:
    names = {
        1: "paper reproduction",
        2: "tamper sensitivity",
        3: "oracle equivalence",
        4: "transitivity double-count",
        5: "classical sanity",
        6: "multiplier invariance",
        7: "search soundness",
        8: "determinism",
    }
    lines = []
    for num, title in names.items():
        if num in RESULTS:
            ok, detail = RESULTS[num]
            lines.append(f"[{'PASS' if ok else 'FAIL'}] criterion {num} {title}: {detail}")
    return lines


if __name__ == "__main__":
    import tempfile
    from pathlib import Path

    for num, fn in sorted((int(k.split("_")[1]), v) for k, v in dict(globals()).items() if k.startswith("test_")):
        try:
            if num == 7:
                with tempfile.TemporaryDirectory() as d:
                    fn(Path(d))
            else:
                fn()
        except AssertionError:
            pass
    print("\n".join(summary_lines()))
    sys.exit(0 if all(ok for ok, _ in RESULTS.values()) else 1)
