"""Small helpers for vertex sets stored as Python int bitmasks."""

from __future__ import annotations

from typing import Iterable, Iterator

__all__ = ["iter_bits", "bit_indices", "from_indices"]


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bit_indices(mask: int) -> list[int]:
    return list(iter_bits(mask))


def from_indices(indices: Iterable[int]) -> int:
    mask = 0
    for v in indices:
        mask |= 1 << v
    return mask
