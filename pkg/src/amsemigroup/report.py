"""Plain-dict reports shared by the CLI and the verification suites.

Every value is an int, bool, str, list or None, so reports serialize to JSON
without floats and round-trip exactly.
"""
from __future__ import annotations

import json

from .classification import ClassificationRecord, divisor_chains
from .conditions import (
    AmSequence,
    check_conditions,
    conductor_formula,
    delta_membership,
    structural_constants,
    theorem_check,
)
from .semigroup import build_table, n_minimal_sequence, normalize_generators


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def sequence_report(terms: tuple[int, ...], literal_g3: bool = False) -> dict:
    """Conditions, conductors, deltas and theorem verdict for one sequence.

    Delta quantities need the default (G3) reading; they are ``None`` when it
    fails, whichever reading decides ``is_am``.
    """
    seq = AmSequence(terms)
    n = seq.degree
    const = structural_constants(seq)
    checks = check_conditions(seq, literal_g3=literal_g3)
    default_am = check_conditions(seq).is_am
    out = {
        "degree": n,
        "sequence": list(seq.terms),
        "e": list(const.e),
        "nratio": list(const.nratio),
        "g1": checks.g1,
        "g2": checks.g2,
        "g3": checks.g3,
        "g3_literal": checks.g3_literal if checks.g3_literal_defined else None,
        "g3_mode": "literal" if literal_g3 else "default",
        "is_am": checks.is_am,
        "conductor_oracle": build_table(seq.terms).conductor,
        "conductor_formula": conductor_formula(seq) if checks.g1_g2 else None,
        "bound": (n - 1) * (n - 2),
        "delta": None,
        "gamma": None,
        "extremal": None,
        "delta_membership": None,
        "theorem": None,
    }
    if default_am:
        verdict = theorem_check(seq)
        out.update(
            delta=list(verdict.deltas.delta),
            gamma=verdict.deltas.gamma,
            extremal=verdict.extremal,
            delta_membership=[delta_membership(seq, k) for k in range(1, seq.h + 1)],
            theorem={
                "bound_holds": verdict.bound_holds,
                "identity_holds": verdict.identity_holds,
                "equality_case_holds": verdict.equality_case_holds,
                "formula_matches_oracle": verdict.formula_matches_oracle,
                "ok": verdict.ok,
            },
        )
    return out


def check_report(degree: int, raw_gens: list[int], literal_g3: bool = False) -> dict:
    gens = normalize_generators(raw_gens, require_coprime=True)
    seq = n_minimal_sequence(gens, degree)
    out = sequence_report(seq.terms, literal_g3=literal_g3)
    out["generators"] = list(gens)
    return out


def chains_report(n: int) -> dict:
    chains = [list(c.chain) for c in divisor_chains(n)]
    return {"degree": n, "chains": chains, "count": len(chains)}


def classification_report(record: ClassificationRecord) -> dict:
    ext = record.extremal
    out = sequence_report(ext.generators)
    out.update(
        chain=list(ext.chain.chain),
        generators=list(ext.generators),
        minimal_system=list(record.minimal_system),
        epsilon=list(record.epsilon),
        am21_case=record.am21_case,
        am21_generators=list(record.am21_generators),
        am21_regenerates=record.am21_regenerates,
        am21_printed_generators=(
            list(record.am21_printed_generators)
            if record.am21_printed_generators is not None
            else None
        ),
        nprime=record.nprime,
        am11_ok=record.am11_ok,
        violations=list(record.violations),
    )
    return out
