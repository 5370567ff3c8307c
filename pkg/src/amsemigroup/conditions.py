"""Abhyankar-Moh conditions on a generator sequence ``n = b0, b1, ..., bh``.

``e_k`` is the gcd of the first ``k + 1`` terms and ``n_k = e_{k-1} / e_k``.
A sequence is an AM sequence of degree ``n`` when

* (G1) ``e_h = 1`` and every ``n_k > 1``,
* (G2) ``n_{k-1} * b_{k-1} < b_k`` for ``2 <= k <= h``,
* (G3) ``n_h * b_h < n**2``.

The printed form of (G3) indexes the ratio as ``n_{h-1}``; that reading is
available with ``literal_g3=True`` but rejects sequences such as (6, 2, 17)
that are AM sequences by every other account, and has no value when h = 1.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from math import gcd

from .errors import PreconditionError, SemigroupError, checked_mul
from .semigroup import build_table, membership


@dataclass(frozen=True)
class AmSequence:
    terms: tuple[int, ...]

    def __post_init__(self) -> None:
        terms = tuple(self.terms)
        object.__setattr__(self, "terms", terms)
        if len(terms) < 2:
            raise SemigroupError(f"an AM sequence needs at least two terms, got {terms}")
        if any(not isinstance(t, int) or isinstance(t, bool) for t in terms):
            raise SemigroupError(f"terms must be integers: {terms!r}")
        if terms[0] <= 1:
            raise SemigroupError(f"degree must exceed 1, got {terms[0]}")
        if min(terms) < 1:
            raise SemigroupError(f"terms must be positive: {terms}")
        checked_mul(terms[0], terms[0])
        for t in terms:
            checked_mul(t, terms[0])

    @property
    def degree(self) -> int:
        return self.terms[0]

    @property
    def h(self) -> int:
        return len(self.terms) - 1


@dataclass(frozen=True)
class StructuralConstants:
    e: tuple[int, ...]
    nratio: tuple[int, ...]


@dataclass(frozen=True)
class AmCheckReport:
    g1: bool
    g2: bool
    g3: bool
    g3_literal: bool
    g3_literal_defined: bool
    is_am: bool
    literal_g3: bool = False

    @property
    def g1_g2(self) -> bool:
        return self.g1 and self.g2


@dataclass(frozen=True)
class DeltaReport:
    delta: tuple[int, ...]
    gamma: int
    conductor: int
    bound: int
    extremal: bool


@dataclass(frozen=True)
class TheoremVerdict:
    """Outcome of the conductor-bound theorem on one AM sequence.

    ``counterexample`` is ``None`` unless some clause failed.
    """

    sequence: tuple[int, ...]
    constants: StructuralConstants
    deltas: DeltaReport
    conductor_oracle: int
    bound_holds: bool
    identity_holds: bool
    equality_case_holds: bool
    formula_matches_oracle: bool
    counterexample: dict | None = field(default=None)

    @property
    def ok(self) -> bool:
        return self.counterexample is None

    @property
    def extremal(self) -> bool:
        return self.deltas.extremal


@dataclass(frozen=True)
class RemarkReport:
    gcd_chain: bool
    descent: bool
    delta_membership: tuple[bool, ...]

    @property
    def ok(self) -> bool:
        return self.gcd_chain and self.descent


def structural_constants(seq: AmSequence) -> StructuralConstants:
    e = [seq.terms[0]]
    for b in seq.terms[1:]:
        e.append(gcd(e[-1], b))
    nratio = tuple(e[k - 1] // e[k] for k in range(1, len(e)))
    return StructuralConstants(e=tuple(e), nratio=nratio)


def check_conditions(seq: AmSequence, literal_g3: bool = False) -> AmCheckReport:
    b, n, h = seq.terms, seq.degree, seq.h
    const = structural_constants(seq)
    e, nr = const.e, const.nratio  # nr[k - 1] is n_k
    nsq = n * n
    g1 = e[h] == 1 and all(x > 1 for x in nr)
    g2 = all(checked_mul(nr[k - 2], b[k - 1]) < b[k] for k in range(2, h + 1))
    g3 = checked_mul(nr[h - 1], b[h]) < nsq
    if h >= 2:
        g3_lit, lit_defined = checked_mul(nr[h - 2], b[h]) < nsq, True
    else:
        g3_lit, lit_defined = False, False
        if literal_g3:
            warnings.warn(
                "literal (G3) refers to n_{h-1}, which does not exist for h = 1",
                stacklevel=2,
            )
    chosen = g3_lit if literal_g3 else g3
    return AmCheckReport(
        g1=g1,
        g2=g2,
        g3=g3,
        g3_literal=g3_lit,
        g3_literal_defined=lit_defined,
        is_am=g1 and g2 and chosen,
        literal_g3=literal_g3,
    )


def conductor_formula(seq: AmSequence) -> int:
    """``sum((n_k - 1) * b_k) - b0 + 1``; valid for sequences passing G1 and G2."""
    report = check_conditions(seq)
    if not report.g1_g2:
        raise PreconditionError(f"{seq.terms} fails G1/G2; conductor formula does not apply")
    nr = structural_constants(seq).nratio
    total = sum(checked_mul(nr[k - 1] - 1, seq.terms[k]) for k in range(1, seq.h + 1))
    return total - seq.terms[0] + 1


def _require_am(seq: AmSequence) -> None:
    if not check_conditions(seq).is_am:
        raise PreconditionError(f"{seq.terms} is not an AM sequence")


def _deltas(seq: AmSequence, e: tuple[int, ...]) -> tuple[int, ...]:
    n = seq.degree
    nsq = n * n
    return (n,) + tuple(nsq // e[k - 1] - seq.terms[k] for k in range(1, seq.h + 1))


def delta_report(seq: AmSequence) -> DeltaReport:
    _require_am(seq)
    const = structural_constants(seq)
    delta = _deltas(seq, const.e)
    if min(delta) <= 0:
        raise PreconditionError(f"nonpositive delta {delta}: G3 violated upstream")
    gamma = sum((nk - 1) * d for nk, d in zip(const.nratio, delta[1:])) - delta[0] + 1
    n = seq.degree
    bound = (n - 1) * (n - 2)
    return DeltaReport(
        delta=delta,
        gamma=gamma,
        conductor=conductor_formula(seq),
        bound=bound,
        extremal=gamma == 0,
    )


def theorem_check(seq: AmSequence) -> TheoremVerdict:
    """Check the bound ``c <= (n-1)(n-2)``, the identity ``gamma = (n-1)(n-2) - c``
    and the equality characterization, all against the brute-force conductor.
    """
    const = structural_constants(seq)
    report = delta_report(seq)
    n, e, b = seq.degree, const.e, seq.terms
    c = build_table(b).conductor
    formula_ok = c == report.conductor
    bound_ok = c <= report.bound
    identity_ok = report.gamma == report.bound - c
    closed_form = all(b[k] == n * n // e[k - 1] - e[k] for k in range(1, seq.h + 1))
    delta_is_e = all(d == ek for d, ek in zip(report.delta, e))
    equality_ok = (c == report.bound) == closed_form == delta_is_e == (report.gamma == 0)
    counterexample = None
    if not (formula_ok and bound_ok and identity_ok and equality_ok):
        failed = [
            name
            for name, ok in (
                ("conductor_formula", formula_ok),
                ("bound", bound_ok),
                ("identity", identity_ok),
                ("equality_case", equality_ok),
            )
            if not ok
        ]
        counterexample = {
            "clauses": failed,
            "sequence": list(b),
            "e": list(e),
            "nratio": list(const.nratio),
            "delta": list(report.delta),
            "gamma": report.gamma,
            "conductor_oracle": c,
            "conductor_formula": report.conductor,
            "bound": report.bound,
        }
    return TheoremVerdict(
        sequence=b,
        constants=const,
        deltas=report,
        conductor_oracle=c,
        bound_holds=bound_ok,
        identity_holds=identity_ok,
        equality_case_holds=equality_ok,
        formula_matches_oracle=formula_ok,
        counterexample=counterexample,
    )


def delta_membership(seq: AmSequence, k: int) -> bool:
    """Whether ``n_k * delta_k`` lies in the monoid generated by ``delta_0..delta_{k-1}``."""
    if not 1 <= k <= seq.h:
        raise IndexError(f"k must be in 1..{seq.h}, got {k}")
    report = delta_report(seq)
    nk = structural_constants(seq).nratio[k - 1]
    return membership(report.delta[:k], nk * report.delta[k])


def remark_properties(seq: AmSequence) -> RemarkReport:
    """gcd chain ``gcd(delta_0..delta_k) = e_k``, the descent
    ``delta_1 < delta_0``, ``delta_k < n_{k-1} delta_{k-1}``, and the (not
    guaranteed) membership of each ``n_k delta_k``.
    """
    const = structural_constants(seq)
    delta = delta_report(seq).delta
    running, chain_ok = delta[0], delta[0] == const.e[0]
    for k in range(1, seq.h + 1):
        running = gcd(running, delta[k])
        chain_ok = chain_ok and running == const.e[k]
    descent = delta[1] < delta[0] and all(
        delta[k] < const.nratio[k - 2] * delta[k - 1] for k in range(2, seq.h + 1)
    )
    return RemarkReport(
        gcd_chain=chain_ok,
        descent=descent,
        delta_membership=tuple(delta_membership(seq, k) for k in range(1, seq.h + 1)),
    )
