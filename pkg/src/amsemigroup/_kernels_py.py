"""Pure-Python membership kernels.

Same signatures and results as the compiled ``_kernels`` module; used when
the extension is not built or ``AMSEMIGROUP_PURE_PYTHON`` is set.
"""
from __future__ import annotations

from collections.abc import Sequence


def fill_table(gens: Sequence[int], bound: int) -> bytearray:
    """Membership flags for ``0 .. bound-1`` of the monoid generated by ``gens``."""
    if bound <= 0:
        return bytearray()
    table = bytearray(bound)
    table[0] = 1
    _extend(table, sorted(set(gens)), 1)
    return table


def _extend(table: bytearray, gens: list[int], start: int) -> None:
    for x in range(start, len(table)):
        for g in gens:
            if g > x:
                break
            if table[x - g]:
                table[x] = 1
                break


def scan_conductor(gens: Sequence[int], max_bound: int) -> tuple[int, bytearray]:
    """Grow the table in blocks of ``max(gens)`` until ``min(gens)`` consecutive
    members appear; return ``(conductor, table)``.

    The caller guarantees ``gcd(gens) == 1``.  Raises ``OverflowError`` if the
    table would pass ``max_bound`` entries.
    """
    gs = sorted(set(gens))
    smallest, block = gs[0], gs[-1]
    table = bytearray(b"\x01")
    run_start, run = 0, 1
    while run < smallest:
        if len(table) + block > max_bound:
            raise OverflowError(f"membership table would exceed {max_bound} entries")
        old = len(table)
        table.extend(bytes(block))
        _extend(table, gs, old)
        for x in range(old, len(table)):
            if table[x]:
                if run == 0:
                    run_start = x
                run += 1
                if run >= smallest:
                    break
            else:
                run = 0
    return run_start, table
