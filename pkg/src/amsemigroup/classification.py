"""Divisor chains, maximal-conductor AM semigroups and their classification."""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from math import gcd

from .conditions import (
    AmSequence,
    check_conditions,
    structural_constants,
    theorem_check,
)
from .errors import SemigroupError, checked_mul
from .semigroup import (
    build_table,
    minimal_generators,
    n_minimal_sequence,
    same_semigroup,
    semigroup_key,
)

N_EQUALS_BETA1 = "n_equals_beta1"
N_EQUALS_2BETA0 = "n_equals_2beta0"


def _require_degree(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n <= 1:
        raise SemigroupError(f"degree must be an integer > 1, got {n!r}")
    checked_mul(n, n)


@dataclass(frozen=True)
class DivisorChain:
    """``n = e0 > e1 > ... > eh = 1`` with each term dividing the previous one."""

    chain: tuple[int, ...]

    def __post_init__(self) -> None:
        c = tuple(self.chain)
        object.__setattr__(self, "chain", c)
        if len(c) < 2 or c[0] <= 1 or c[-1] != 1:
            raise SemigroupError(f"not a divisor chain from n > 1 down to 1: {c}")
        for a, b in zip(c, c[1:]):
            if b >= a or a % b:
                raise SemigroupError(f"not a divisor chain: {b} after {a}")

    @property
    def degree(self) -> int:
        return self.chain[0]


@dataclass(frozen=True)
class ExtremalSemigroup:
    degree: int
    chain: DivisorChain
    generators: tuple[int, ...]
    conductor: int


@dataclass(frozen=True)
class ClassificationRecord:
    extremal: ExtremalSemigroup
    minimal_system: tuple[int, ...]
    epsilon: tuple[int, ...]
    am21_case: str | None
    nprime: int
    am11_ok: bool
    am21_generators: tuple[int, ...]
    am21_regenerates: bool
    am21_printed_generators: tuple[int, ...] | None = None
    violations: tuple[dict, ...] = field(default=())

    @property
    def degree(self) -> int:
        return self.extremal.degree


@dataclass(frozen=True)
class Property2Verdict:
    degree: int
    enumerated: tuple[tuple[int, ...], ...]
    constructed: tuple[tuple[int, ...], ...]
    chain_count: int
    sets_equal: bool
    cardinality_ok: bool
    counterexample: dict | None = None

    @property
    def ok(self) -> bool:
        return self.counterexample is None


def _proper_divisors(m: int) -> list[int]:
    return [d for d in range(1, m) if m % d == 0]


def divisor_chains(n: int) -> list[DivisorChain]:
    """All divisor chains from ``n`` to 1, in lexicographic order."""
    _require_degree(n)
    out: list[tuple[int, ...]] = []

    def extend(prefix: tuple[int, ...]) -> None:
        last = prefix[-1]
        if last == 1:
            out.append(prefix)
            return
        for d in _proper_divisors(last):
            extend(prefix + (d,))

    extend((n,))
    return [DivisorChain(c) for c in sorted(out)]


def extremal_generators(chain: DivisorChain) -> tuple[int, ...]:
    """``(n, n^2/e0 - e1, ..., n^2/e_{h-1} - e_h)``."""
    e = chain.chain
    n = e[0]
    nsq = n * n
    return (n,) + tuple(nsq // e[k - 1] - e[k] for k in range(1, len(e)))


def build_extremal(chain: DivisorChain) -> ExtremalSemigroup:
    gens = extremal_generators(chain)
    return ExtremalSemigroup(
        degree=chain.degree,
        chain=chain,
        generators=gens,
        conductor=build_table(gens).conductor,
    )


def enumerate_am_sequences(
    n: int, *, literal_g3: bool = False, validate: bool = True
) -> list[AmSequence]:
    """Every AM sequence of degree ``n``, lexicographically ordered.

    For each divisor chain of ``n`` (the prospective gcds), ``b_k`` runs over
    integers with ``gcd(e_{k-1}, b_k) = e_k``, ``b_k > n_{k-1} b_{k-1}`` and
    ``e_{k-1} b_k < n^2``.  With ``validate`` each hit is confirmed to be the
    n-minimal sequence of the semigroup it generates.

    ``literal_g3`` enumerates under the printed (G3) instead; only the last
    term is then constrained by ``n^2``, so every ``b_k < n^2`` is searched.
    """
    _require_degree(n)
    nsq = n * n
    found: list[tuple[int, ...]] = []

    def extend(e: tuple[int, ...], terms: list[int]) -> None:
        k = len(terms)
        if k == len(e):
            found.append(tuple(terms))
            return
        prev_e, cur_e = e[k - 1], e[k]
        low = 1 if k == 1 else (e[k - 2] // prev_e) * terms[-1] + 1
        high = nsq if literal_g3 else nsq // prev_e  # exclusive
        for b in range(low, high):
            if gcd(prev_e, b) == cur_e:
                terms.append(b)
                extend(e, terms)
                terms.pop()

    for chain in divisor_chains(n):
        if literal_g3 and len(chain.chain) == 2:
            continue  # literal (G3) has no value when h = 1
        extend(chain.chain, [n])

    seqs = []
    for terms in sorted(found):
        seq = AmSequence(terms)
        report = check_conditions(seq, literal_g3=literal_g3)
        if literal_g3:
            if not report.is_am:
                continue
        elif not report.is_am:
            raise AssertionError(f"search produced non-AM sequence {terms}")
        if validate and n_minimal_sequence(terms, n).terms != terms:
            raise AssertionError(f"{terms} is not the {n}-minimal sequence of its semigroup")
        seqs.append(seq)
    return seqs


def semigroup_collisions(seqs: list[AmSequence]) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Pairs of distinct sequences that generate the same semigroup."""
    seen: dict[tuple[int, bytes], tuple[int, ...]] = {}
    clashes = []
    for seq in seqs:
        key = semigroup_key(seq.terms)
        if key in seen:
            clashes.append((seen[key], seq.terms))
        else:
            seen[key] = seq.terms
    return clashes


def _prefix_gcds(values: tuple[int, ...]) -> tuple[int, ...]:
    out = [values[0]]
    for v in values[1:]:
        out.append(gcd(out[-1], v))
    return tuple(out)


def am21_formula(n: int, case: str, epsilon: tuple[int, ...]) -> tuple[int, ...]:
    """Generators rebuilt from ``n`` and the gcd chain of the minimal system.

    Both cases use the pattern ``n^2 / eps_{k-1} - eps_k``.
    """
    g = len(epsilon) - 1
    nsq = n * n
    if case == N_EQUALS_BETA1:
        head = (n - epsilon[1], n)
        return head + tuple(nsq // epsilon[k - 1] - epsilon[k] for k in range(2, g + 1))
    if case == N_EQUALS_2BETA0:
        return (n - epsilon[0],) + tuple(nsq // epsilon[k - 1] - epsilon[k] for k in range(1, g + 1))
    raise ValueError(f"unknown case {case!r}")


def am21_printed_formula(n: int, case: str, epsilon: tuple[int, ...]) -> tuple[int, ...]:
    """As printed for the ``n = beta_1`` case: third generator ``n^2/eps_1 - eps_1``."""
    gens = am21_formula(n, case, epsilon)
    if case == N_EQUALS_BETA1 and len(epsilon) > 2:
        gens = gens[:2] + (n * n // epsilon[1] - epsilon[1],) + gens[3:]
    return gens


def am11_check(record: ClassificationRecord) -> bool:
    """``gcd(n, n') = n - n'`` and ``(n - n') | n``, with ``n' = b1 = n - e1``."""
    ext = record.extremal
    n, nprime = ext.degree, record.nprime
    diff = n - nprime
    if diff <= 0:
        return False
    e1 = ext.chain.chain[1]
    return (
        gcd(n, nprime) == diff
        and n % diff == 0
        and nprime == ext.generators[1] == n - e1
    )


def classify_chain(chain: DivisorChain) -> ClassificationRecord:
    ext = build_extremal(chain)
    n = ext.degree
    beta = minimal_generators(ext.generators).elements
    eps = _prefix_gcds(beta)
    violations: list[dict] = []

    is_beta1 = len(beta) > 1 and beta[1] == n
    is_2beta0 = n == 2 * beta[0]
    if is_beta1 == is_2beta0:
        case = None
        violations.append({
            "clause": "am21_exactly_one_case",
            "chain": list(chain.chain),
            "minimal_system": list(beta),
            "n_equals_beta1": is_beta1,
            "n_equals_2beta0": is_2beta0,
        })
        rebuilt: tuple[int, ...] = ()
        regenerates = False
        printed = None
    else:
        case = N_EQUALS_BETA1 if is_beta1 else N_EQUALS_2BETA0
        rebuilt = am21_formula(n, case, eps)
        regenerates = min(rebuilt) > 0 and same_semigroup(rebuilt, ext.generators)
        if not regenerates:
            violations.append({
                "clause": "am21_regeneration",
                "chain": list(chain.chain),
                "epsilon": list(eps),
                "rebuilt": list(rebuilt),
            })
        lit = am21_printed_formula(n, case, eps)
        printed = lit if lit != rebuilt else None

    record = ClassificationRecord(
        extremal=ext,
        minimal_system=beta,
        epsilon=eps,
        am21_case=case,
        nprime=beta[0],
        am11_ok=False,
        am21_generators=rebuilt,
        am21_regenerates=regenerates,
        am21_printed_generators=printed,
    )
    ok = am11_check(record)
    if not ok:
        violations.append({
            "clause": "am11",
            "chain": list(chain.chain),
            "nprime": record.nprime,
            "degree": n,
        })
    return replace(record, am11_ok=ok, violations=tuple(violations))


def classify_extremal(n: int) -> list[ClassificationRecord]:
    """One record per divisor chain of ``n``."""
    _require_degree(n)
    return [classify_chain(c) for c in divisor_chains(n)]


def verify_property2(n: int) -> Property2Verdict:
    """Extremal AM semigroups of degree ``n`` are exactly the chain constructions."""
    _require_degree(n)
    bound = (n - 1) * (n - 2)
    enumerated = [
        s.terms for s in enumerate_am_sequences(n) if theorem_check(s).conductor_oracle == bound
    ]
    chains = divisor_chains(n)
    constructed = [build_extremal(c).generators for c in chains]

    keys_a = {semigroup_key(t): t for t in enumerated}
    keys_b = {semigroup_key(t): t for t in constructed}
    sets_equal = keys_a.keys() == keys_b.keys()
    cardinality_ok = len(keys_b) == len(chains) == len(constructed)
    counterexample = None
    if not (sets_equal and cardinality_ok):
        counterexample = {
            "clause": "property2",
            "degree": n,
            "only_enumerated": sorted(list(keys_a[k]) for k in keys_a.keys() - keys_b.keys()),
            "only_constructed": sorted(list(keys_b[k]) for k in keys_b.keys() - keys_a.keys()),
            "distinct_constructed": len(keys_b),
            "chains": len(chains),
        }
    return Property2Verdict(
        degree=n,
        enumerated=tuple(enumerated),
        constructed=tuple(constructed),
        chain_count=len(chains),
        sets_equal=sets_equal,
        cardinality_ok=cardinality_ok,
        counterexample=counterexample,
    )
