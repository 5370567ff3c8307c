"""Acceptance criteria, one test each.

Every test records a ``PASS``/``FAIL`` line that is printed in the pytest
terminal summary; ``python tests/test_acceptance.py`` runs them standalone.
All checks are exact integer comparisons.
"""
from __future__ import annotations

import json
import subprocess
import sys
import time
from contextlib import contextmanager
from math import gcd

from amsemigroup.classification import (
    N_EQUALS_2BETA0,
    N_EQUALS_BETA1,
    am11_check,
    am21_formula,
    build_extremal,
    classify_extremal,
    divisor_chains,
    enumerate_am_sequences,
)
from amsemigroup.conditions import (
    AmSequence,
    check_conditions,
    conductor_formula,
    delta_membership,
    delta_report,
    structural_constants,
)
from amsemigroup.semigroup import build_table, same_semigroup, semigroup_key
from conftest import ACCEPTANCE_LINES


@contextmanager
def criterion(number: int, title: str, budget: float | None = None):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        elapsed = time.perf_counter() - start
        _record(f"FAIL  criterion {number}: {title} ({elapsed:.2f}s)")
        raise
    elapsed = time.perf_counter() - start
    if budget is not None and elapsed >= budget:
        _record(f"FAIL  criterion {number}: {title} ({elapsed:.2f}s >= {budget}s budget)")
        raise AssertionError(f"criterion {number} took {elapsed:.2f}s, budget {budget}s")
    _record(f"PASS  criterion {number}: {title} ({elapsed:.2f}s)")


def _record(line: str) -> None:
    ACCEPTANCE_LINES.append(line)
    print(line)


def test_criterion_1_remark_reproduction():
    with criterion(1, "check --degree 6 2 17 reproduces the (6,2,17) example", budget=1.0):
        proc = subprocess.run(
            [sys.executable, "-m", "amsemigroup", "check", "--degree", "6", "2", "17", "--json"],
            capture_output=True, text=True,
        )
        assert proc.returncode == 0, proc.stderr
        r = json.loads(proc.stdout)
        assert r["sequence"] == [6, 2, 17]
        assert r["e"] == [6, 2, 1]
        assert r["delta"] == [6, 4, 1]
        assert r["is_am"] is True
        assert r["delta_membership"][1] is False
        assert delta_membership(AmSequence((6, 2, 17)), 2) is False


def test_criterion_2_theorem_exhaustive():
    with criterion(2, "conductor bound, identity and equality case for n = 2..12", budget=60.0):
        total = 0
        for n in range(2, 13):
            bound = (n - 1) * (n - 2)
            for seq in enumerate_am_sequences(n):
                b = seq.terms
                e = structural_constants(seq).e
                c = build_table(b).conductor
                assert c == conductor_formula(seq), b
                assert c <= bound, b
                assert delta_report(seq).gamma == bound - c, b
                closed = all(b[k] == n * n // e[k - 1] - e[k] for k in range(1, seq.h + 1))
                assert (c == bound) == closed, b
                total += 1
        assert total > 0


def test_criterion_3_property2():
    with criterion(3, "extremal AM semigroups = chain constructions, |.| = a(n), n = 2..12",
                   budget=60.0):
        sizes = {}
        for n in range(2, 13):
            bound = (n - 1) * (n - 2)
            extremal = {
                semigroup_key(s.terms)
                for s in enumerate_am_sequences(n)
                if build_table(s.terms).conductor == bound
            }
            chains = divisor_chains(n)
            built = {semigroup_key(build_extremal(c).generators) for c in chains}
            assert extremal == built, n
            assert len(built) == len(chains), n
            sizes[n] = len(built)
        assert (sizes[4], sizes[6], sizes[12]) == (2, 3, 8)


def test_criterion_4_property3():
    with criterion(4, "gcd(n, n') = n - n' and n' = n - e1 for every chain, n = 2..30",
                   budget=10.0):
        for n in range(2, 31):
            for record in classify_extremal(n):
                e1 = record.extremal.chain.chain[1]
                assert am11_check(record), record
                assert record.nprime == n - e1
                assert gcd(n, record.nprime) == n - record.nprime


def test_criterion_5_property4():
    with criterion(5, "exactly one of n = beta1, n = 2 beta0; rebuilt generators regenerate G",
                   budget=10.0):
        for n in range(2, 31):
            for record in classify_extremal(n):
                beta = record.minimal_system
                is_beta1 = len(beta) > 1 and beta[1] == n
                is_2beta0 = n == 2 * beta[0]
                assert is_beta1 != is_2beta0, record
                case = N_EQUALS_BETA1 if is_beta1 else N_EQUALS_2BETA0
                assert record.am21_case == case
                rebuilt = am21_formula(n, case, record.epsilon)
                assert same_semigroup(rebuilt, record.extremal.generators), (n, rebuilt)


def test_criterion_6_oracle_sanity():
    with criterion(6, "conductor(<a, b>) = (a-1)(b-1) for coprime 2 <= a < b <= 40", budget=5.0):
        count = 0
        for a in range(2, 41):
            for b in range(a + 1, 41):
                if gcd(a, b) == 1:
                    assert build_table((a, b)).conductor == (a - 1) * (b - 1), (a, b)
                    count += 1
        assert count > 0


def test_criterion_7_g3_reading():
    with criterion(7, "(6,2,17) passes default G3, fails literal; (6,5) literal undefined"):
        r = check_conditions(AmSequence((6, 2, 17)))
        assert r.g3 and r.is_am
        assert r.g3_literal_defined and not r.g3_literal
        assert 3 * 17 == 51 >= 36
        r = check_conditions(AmSequence((6, 5)))
        assert r.g3 and r.is_am
        assert not r.g3_literal_defined


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
