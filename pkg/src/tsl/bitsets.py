"""Subsets of {0..n-1} encoded as int bitmasks.

Every set-valued argument and result in the core modules is a bitmask; the
helpers here convert between masks and explicit index lists (the JSON wire
format uses sorted index lists).
"""

from __future__ import annotations

from typing import Iterable, Iterator


def full_mask(n: int) -> int:
    return (1 << n) - 1


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bit_list(mask: int) -> list[int]:
    return list(iter_bits(mask))


def subsets(mask: int) -> Iterator[int]:
    """All submasks of ``mask`` including 0, in ascending numeric order."""
    sub = 0
    while True:
        yield sub
        if sub == mask:
            return
        sub = (sub - mask) & mask


def popcount(mask: int) -> int:
    return mask.bit_count()
