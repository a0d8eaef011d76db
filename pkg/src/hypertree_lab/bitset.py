"""Small helpers for vertex sets stored as int bitmasks."""

from typing import Iterable, Iterator


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def pair_mask(u: int, v: int) -> int:
    return (1 << u) | (1 << v)


def set_repr(mask: int, labels) -> str:
    """Render a mask as ``{a,b,c}`` using the given label table."""
    return "{" + ",".join(labels[i] for i in iter_bits(mask)) + "}"
