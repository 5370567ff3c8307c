"""Exhaustive invariant suites, one degree at a time.

Each suite returns a list of failure payloads; an empty list means every
check passed.  A payload always names the violated ``clause`` and carries the
inputs needed to reproduce it.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import gcd

from .classification import (
    N_EQUALS_2BETA0,
    N_EQUALS_BETA1,
    build_extremal,
    classify_extremal,
    divisor_chains,
    enumerate_am_sequences,
    semigroup_collisions,
    verify_property2,
)
from .conditions import (
    AmSequence,
    check_conditions,
    delta_membership,
    remark_properties,
    structural_constants,
    theorem_check,
)
from .semigroup import build_table, n_minimal_sequence

DEFAULT_MAX_DEGREE = 30
DEFAULT_MAX_ENUM_DEGREE = 12
DEFAULT_ORACLE_PAIRS = 40


@dataclass
class DegreeResult:
    degree: int
    checks: int = 0
    failures: list[dict] = field(default_factory=list)

    def expect(self, ok: bool, clause: str, **inputs) -> None:
        self.checks += 1
        if not ok:
            self.failures.append({"clause": clause, "degree": self.degree, **inputs})

    def as_dict(self) -> dict:
        return {"degree": self.degree, "checks": self.checks, "failures": self.failures}


def two_generator_suite(limit: int = DEFAULT_ORACLE_PAIRS) -> list[dict]:
    """conductor(<a, b>) == (a-1)(b-1) for coprime 2 <= a < b <= limit."""
    failures = []
    for a in range(2, limit + 1):
        for b in range(a + 1, limit + 1):
            if gcd(a, b) != 1:
                continue
            c = build_table((a, b)).conductor
            if c != (a - 1) * (b - 1):
                failures.append({"clause": "two_generator_conductor", "a": a, "b": b, "conductor": c})
    return failures


def enumeration_suite(n: int, result: DegreeResult | None = None) -> DegreeResult:
    """Theorem clauses, remark properties and the Property 2 set equality."""
    res = result or DegreeResult(n)
    bound = (n - 1) * (n - 2)
    seqs = enumerate_am_sequences(n)
    extremal_images = {build_extremal(c).generators for c in divisor_chains(n)}
    for seq in seqs:
        t = list(seq.terms)
        verdict = theorem_check(seq)
        res.expect(verdict.formula_matches_oracle, "conductor_formula_vs_oracle", sequence=t,
                   oracle=verdict.conductor_oracle, formula=verdict.deltas.conductor)
        res.expect(verdict.bound_holds, "conductor_bound", sequence=t,
                   conductor=verdict.conductor_oracle, bound=bound)
        res.expect(verdict.identity_holds, "gamma_identity", sequence=t,
                   gamma=verdict.deltas.gamma, conductor=verdict.conductor_oracle)
        res.expect(verdict.equality_case_holds, "equality_case", sequence=t)
        res.expect((verdict.conductor_oracle == bound) == (seq.terms in extremal_images),
                   "extremal_iff_chain_image", sequence=t)

        const = structural_constants(seq)
        prods = [const.e[k - 1] * seq.terms[k] for k in range(1, seq.h + 1)]
        res.expect(all(a < b for a, b in zip(prods, prods[1:])), "monotone_products",
                   sequence=t, products=prods)
        res.expect(prods[-1] < n * n, "last_product_below_n_squared", sequence=t)
        res.expect(
            (const.nratio[-1] * seq.terms[-1] < n * n)
            == (const.e[-2] * seq.terms[-1] < n * n),
            "g3_equivalence", sequence=t,
        )
        remark = remark_properties(seq)
        res.expect(remark.gcd_chain, "delta_gcd_chain", sequence=t)
        res.expect(remark.descent, "delta_descent", sequence=t)
        res.expect(n_minimal_sequence(seq.terms, n).terms == seq.terms,
                   "n_minimal_roundtrip", sequence=t)

    clashes = semigroup_collisions(seqs)
    res.expect(not clashes, "distinct_sequences_distinct_semigroups",
               collisions=[[list(a), list(b)] for a, b in clashes])

    p2 = verify_property2(n)
    res.expect(p2.ok, "property2", **(p2.counterexample or {}))
    return res


def classification_suite(n: int, result: DegreeResult | None = None) -> DegreeResult:
    """Chain constructions, Property 3 and Property 4 for every chain of ``n``."""
    res = result or DegreeResult(n)
    bound = (n - 1) * (n - 2)
    for record in classify_extremal(n):
        ext = record.extremal
        chain = list(ext.chain.chain)
        e = ext.chain.chain
        res.expect(ext.conductor == bound, "extremal_conductor", chain=chain,
                   conductor=ext.conductor, bound=bound)
        seq = AmSequence(ext.generators)
        res.expect(check_conditions(seq).is_am, "extremal_is_am", chain=chain)
        if check_conditions(seq).is_am:
            verdict = theorem_check(seq)
            res.expect(verdict.ok and verdict.deltas.gamma == 0, "extremal_gamma_zero",
                       chain=chain, gamma=verdict.deltas.gamma)
        res.expect(n_minimal_sequence(ext.generators, n).terms == ext.generators,
                   "extremal_n_minimal", chain=chain, generators=list(ext.generators))
        for v in record.violations:
            res.expect(False, v["clause"], **{k: x for k, x in v.items() if k != "clause"})
        res.expect(record.am11_ok, "property3", chain=chain, nprime=record.nprime)
        res.expect(record.nprime == n - e[1], "nprime_is_n_minus_e1", chain=chain,
                   nprime=record.nprime)
        res.expect(record.am21_case is not None and record.am21_regenerates,
                   "property4", chain=chain, case=record.am21_case)

        eps, beta, g = record.epsilon, record.minimal_system, len(record.epsilon) - 1
        if record.am21_case == N_EQUALS_BETA1:
            ok = beta[0] == n - e[1] and all(eps[k] == e[k] for k in range(1, g + 1))
        elif record.am21_case == N_EQUALS_2BETA0:
            ok = n == 2 * e[1] and all(eps[k] == e[k + 1] for k in range(0, g + 1))
        else:
            ok = False
        res.expect(ok, "epsilon_correspondence", chain=chain, epsilon=list(eps))
    return res


def remark_example_suite() -> list[dict]:
    """The (6, 2, 17) example: AM sequence, deltas (6, 4, 1), 2 not in <6, 4>."""
    failures = []
    seq = AmSequence((6, 2, 17))
    report = check_conditions(seq)
    lit = check_conditions(seq, literal_g3=True)
    verdict = theorem_check(seq)
    if not report.is_am or lit.is_am:
        failures.append({"clause": "remark_example_conditions", "sequence": [6, 2, 17]})
    if verdict.deltas.delta != (6, 4, 1):
        failures.append({"clause": "remark_example_delta", "delta": list(verdict.deltas.delta)})
    if delta_membership(seq, 2):
        failures.append({"clause": "remark_example_membership", "sequence": [6, 2, 17]})
    return failures


def verify_degree(n: int, max_enum_degree: int = DEFAULT_MAX_ENUM_DEGREE) -> DegreeResult:
    res = DegreeResult(n)
    classification_suite(n, res)
    if n <= max_enum_degree:
        enumeration_suite(n, res)
    return res


def _verify_degree_args(args: tuple[int, int]) -> DegreeResult:
    return verify_degree(*args)


def run_verification(
    max_degree: int = DEFAULT_MAX_DEGREE,
    max_enum_degree: int = DEFAULT_MAX_ENUM_DEGREE,
    oracle_pairs: int = DEFAULT_ORACLE_PAIRS,
    jobs: int = 1,
) -> dict:
    """Run every suite for degrees ``2..max_degree``; results in ascending degree."""
    work = [(n, max_enum_degree) for n in range(2, max_degree + 1)]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            degrees = list(pool.map(_verify_degree_args, work))
    else:
        degrees = [verify_degree(*w) for w in work]
    degrees.sort(key=lambda r: r.degree)
    general = two_generator_suite(oracle_pairs)
    if max_degree >= 6:
        general += remark_example_suite()
    failures = general + [f for r in degrees for f in r.failures]
    return {
        "max_degree": max_degree,
        "max_enum_degree": min(max_enum_degree, max_degree),
        "oracle_pairs": oracle_pairs,
        "degrees": [r.as_dict() for r in degrees],
        "general_failures": general,
        "checks": sum(r.checks for r in degrees),
        "ok": not failures,
        "counterexample": failures[0] if failures else None,
    }
