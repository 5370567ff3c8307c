"""Independent brute-force oracles.

None of these touch the package's DP kernels: membership is decided by
explicit coefficient enumeration or by set saturation.
"""
from __future__ import annotations

from functools import reduce
from math import gcd


def combination_member(gens, x):
    """x == sum(c_i * g_i) for some c_i >= 0, by recursive coefficient search."""
    gens = sorted(set(gens), reverse=True)

    def rec(i, rest):
        if rest == 0:
            return True
        if i == len(gens):
            return False
        g = gens[i]
        return any(rec(i + 1, rest - c * g) for c in range(rest // g + 1))

    return rec(0, x)


def saturated_set(gens, limit):
    """All members <= limit, by repeatedly adding generators to a set."""
    members = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for m in frontier:
            for g in gens:
                y = m + g
                if y <= limit and y not in members:
                    members.add(y)
                    nxt.append(y)
        frontier = nxt
    return members


def schur_limit(gens):
    """Upper bound on the conductor of a gcd-1 set: (min - 1)(max - 1)."""
    gs = sorted(set(gens))
    return (gs[0] - 1) * (gs[-1] - 1)


def brute_conductor(gens):
    assert reduce(gcd, gens) == 1
    limit = schur_limit(gens) + max(gens)
    members = saturated_set(gens, limit)
    missing = [x for x in range(limit + 1) if x not in members]
    return missing[-1] + 1 if missing else 0


def brute_minimal_generators(gens):
    """Nonzero members that are not a sum of two nonzero members."""
    top = max(gens)
    members = saturated_set(gens, top)
    return sorted(
        x for x in members
        if x > 0 and not any(y in members and (x - y) in members for y in range(1, x))
    )


def ordered_factorizations(n, _cache={1: 1}):
    """a(n) = sum over proper divisors d of a(d), a(1) = 1."""
    if n not in _cache:
        _cache[n] = sum(ordered_factorizations(d) for d in range(1, n) if n % d == 0)
    return _cache[n]


def brute_am_sequences(n):
    """AM sequences of degree n by scanning every tuple with terms < n^2 whose
    prefix gcds strictly drop, then testing G1-G3 directly."""
    nsq = n * n
    out = []

    def rec(terms, g):
        if g == 1:
            if _is_am(terms, n):
                out.append(tuple(terms))
            return
        for b in range(1, nsq):
            ng = gcd(g, b)
            if ng < g:
                rec(terms + [b], ng)

    rec([n], n)
    return sorted(out)


def _is_am(terms, n):
    e = [terms[0]]
    for b in terms[1:]:
        e.append(gcd(e[-1], b))
    h = len(terms) - 1
    ratio = [None] + [e[k - 1] // e[k] for k in range(1, h + 1)]
    if e[h] != 1 or any(ratio[k] <= 1 for k in range(1, h + 1)):
        return False
    if any(ratio[k - 1] * terms[k - 1] >= terms[k] for k in range(2, h + 1)):
        return False
    return e[h - 1] * terms[h] < n * n
