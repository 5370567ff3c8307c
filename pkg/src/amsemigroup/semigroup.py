"""Exact numerical-semigroup engine.

Everything here is decided by brute-force dynamic programming over
membership tables, so the formulas elsewhere in the package can be
checked against it.
"""
from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from functools import lru_cache, reduce
from math import gcd

from . import kernels
from .errors import (
    INT_LIMIT,
    MAX_TABLE_BOUND,
    NotNumericalError,
    OverflowGuardError,
    SemigroupError,
)


@dataclass(frozen=True)
class GeneratorSet:
    """Sorted, duplicate-free positive generators of a submonoid of N."""

    elements: tuple[int, ...]

    def __post_init__(self) -> None:
        els = self.elements
        if not els:
            raise SemigroupError("generator set is empty")
        if any(not isinstance(x, int) or isinstance(x, bool) for x in els):
            raise SemigroupError(f"generators must be integers: {els!r}")
        if els[0] < 1:
            raise SemigroupError(f"generators must be positive: {els!r}")
        if any(a >= b for a, b in zip(els, els[1:])):
            raise SemigroupError(f"generators must be strictly ascending: {els!r}")
        if els[-1] > INT_LIMIT:
            raise OverflowGuardError(f"generator {els[-1]} exceeds the 64-bit range")

    @property
    def gcd(self) -> int:
        return reduce(gcd, self.elements)

    @property
    def smallest(self) -> int:
        return self.elements[0]

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class MembershipTable:
    """Membership flags for ``0 .. bound-1`` plus the conductor, if known."""

    bound: int
    member: bytes
    conductor: int | None = None

    def __contains__(self, x: int) -> bool:
        if x < 0:
            return False
        if x < self.bound:
            return bool(self.member[x])
        if self.conductor is not None:
            return True
        raise IndexError(f"{x} is beyond the table bound {self.bound}")

    def members(self, stop: int | None = None) -> list[int]:
        stop = self.bound if stop is None else min(stop, self.bound)
        return [x for x in range(stop) if self.member[x]]


@dataclass(frozen=True)
class NMinimalSequence:
    """The greedy generator sequence of a semigroup started at ``degree``."""

    degree: int
    terms: tuple[int, ...]

    @property
    def h(self) -> int:
        return len(self.terms) - 1


def normalize_generators(raw: Iterable[int], require_coprime: bool = False) -> GeneratorSet:
    values = sorted(set(raw))
    if not values:
        raise SemigroupError("no generators given")
    gens = GeneratorSet(tuple(values))
    if require_coprime and gens.gcd != 1:
        raise NotNumericalError(
            f"gcd of {list(gens)} is {gens.gcd}; not a numerical semigroup"
        )
    return gens


def _as_gens(gens: GeneratorSet | Iterable[int]) -> GeneratorSet:
    if isinstance(gens, GeneratorSet):
        return gens
    return normalize_generators(gens)


def _require_coprime(gens: GeneratorSet) -> None:
    if gens.gcd != 1:
        raise NotNumericalError(
            f"gcd of {list(gens)} is {gens.gcd}; no conductor exists"
        )


def membership(gens: GeneratorSet | Iterable[int], x: int) -> bool:
    """True iff ``x`` is a nonnegative integer combination of ``gens``.

    Works for any gcd, which the delta-sequence checks rely on.
    """
    gens = _as_gens(gens)
    if x < 0:
        return False
    if x % gens.gcd:
        return False
    if gens.gcd == 1:
        table = build_table(gens)
        if x >= table.bound:
            return True
        return bool(table.member[x])
    if x + 1 > MAX_TABLE_BOUND:
        raise OverflowGuardError(f"membership of {x} needs a table past {MAX_TABLE_BOUND}")
    return bool(kernels.fill_table(gens.elements, x + 1)[x])


@lru_cache(maxsize=4096)
def _build_table(gens: GeneratorSet) -> MembershipTable:
    conductor, table = kernels.scan_conductor(gens.elements, MAX_TABLE_BOUND)
    return MembershipTable(bound=len(table), member=bytes(table), conductor=conductor)


def build_table(gens: GeneratorSet | Iterable[int]) -> MembershipTable:
    """Membership table reaching at least ``conductor + min(gens)``."""
    gens = _as_gens(gens)
    _require_coprime(gens)
    try:
        return _build_table(gens)
    except OverflowError as exc:
        raise OverflowGuardError(str(exc)) from exc


def conductor(gens: GeneratorSet | Iterable[int]) -> int:
    return build_table(gens).conductor


def frobenius_number(gens: GeneratorSet | Iterable[int]) -> int:
    return conductor(gens) - 1


def gaps(gens: GeneratorSet | Iterable[int]) -> list[int]:
    table = build_table(gens)
    return [x for x in range(1, table.conductor) if not table.member[x]]


def genus(gens: GeneratorSet | Iterable[int]) -> int:
    return len(gaps(gens))


def _is_decomposable(table: MembershipTable, x: int) -> bool:
    # x = y + (x - y) with both parts nonzero members; needs x < table.bound
    member = table.member
    return any(member[y] and member[x - y] for y in range(1, x // 2 + 1))


def minimal_generators(gens: GeneratorSet | Iterable[int]) -> GeneratorSet:
    """The minimal system of generators, ascending."""
    gens = _as_gens(gens)
    table = build_table(gens)
    # every minimal generator lies in any generating set
    keep = []
    for x in gens:
        if x >= table.bound and x != gens.smallest:
            # x - min(gens) >= conductor, so x is a sum of two nonzero members
            continue
        if not _is_decomposable(table, x):
            keep.append(x)
    return GeneratorSet(tuple(keep))


def n_minimal_sequence(gens: GeneratorSet | Iterable[int], n: int) -> NMinimalSequence:
    """Greedy sequence ``n, b1, b2, ...``: each term is the least element of the
    semigroup not yet generated by the earlier terms.
    """
    gens = _as_gens(gens)
    table = build_table(gens)
    if n < 1:
        raise SemigroupError(f"degree must be positive, got {n}")
    if n not in table:
        raise SemigroupError(f"{n} is not a member of <{', '.join(map(str, gens))}>")
    # minimal generators are all at most conductor - 1 + min(gens), or 1 for N
    bound = max(table.bound, 2)
    terms = [n]
    while True:
        partial = kernels.fill_table(terms, bound)
        nxt = next(
            (x for x in range(1, bound) if x in table and not partial[x]),
            None,
        )
        if nxt is None:
            return NMinimalSequence(degree=n, terms=tuple(terms))
        terms.append(nxt)


def semigroup_key(gens: GeneratorSet | Iterable[int]) -> tuple[int, bytes]:
    """Canonical fingerprint: conductor and membership below it."""
    table = build_table(gens)
    return table.conductor, table.member[: table.conductor]


def same_semigroup(a: GeneratorSet | Iterable[int], b: GeneratorSet | Iterable[int]) -> bool:
    return semigroup_key(a) == semigroup_key(b)
