"""Element sets as int bitmasks: label ``e`` lives in bit ``e - 1``."""

from typing import Iterable, Iterator

MAX_ELEMENTS = 16


def bit(e: int) -> int:
    return 1 << (e - 1)


def to_mask(elements: Iterable[int]) -> int:
    mask = 0
    for e in elements:
        mask |= 1 << (e - 1)
    return mask


def full_mask(n: int) -> int:
    return (1 << n) - 1


def elements(mask: int) -> Iterator[int]:
    """Yield the labels in ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length()
        mask ^= low


def to_tuple(mask: int) -> tuple:
    return tuple(elements(mask))


def to_set(mask: int) -> frozenset:
    return frozenset(elements(mask))


popcount = int.bit_count


def submasks(mask: int) -> Iterator[int]:
    """All subsets of ``mask``, including 0 and ``mask`` itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def compress(mask: int, ground: int) -> int:
    """Re-index ``mask`` so that the elements of ``ground`` become 1..|ground|."""
    out = 0
    pos = 0
    for e in elements(ground):
        if mask & (1 << (e - 1)):
            out |= 1 << pos
        pos += 1
    return out
