"""Vectorized mixed-radix counters shared by the enumeration code paths.

Two digit orders are needed: exponent-vector scans count with the *first*
digit fastest (index 1 -> (1,0,...,0)), while computational-basis labels
follow the Kronecker-product convention where site 1 is the *most*
significant digit.
"""

from functools import lru_cache

import numpy as np


def digit_block(length: int, base: int, start: int, stop: int,
                first_digit_fastest: bool = True) -> np.ndarray:
    """Decode indices [start, stop) into digit rows of the given base.

    Returns an int64 array of shape (stop - start, length). Row i holds the
    digits of index start + i; the digit order is controlled by
    ``first_digit_fastest``.
    """
    idx = np.arange(start, stop, dtype=np.int64)
    digits = np.empty((stop - start, length), dtype=np.int64)
    positions = range(length) if first_digit_fastest else range(length - 1, -1, -1)
    for pos in positions:
        digits[:, pos] = idx % base
        idx //= base
    return digits


@lru_cache(maxsize=8)
def digit_block_cached(length: int, base: int, start: int, stop: int,
                       first_digit_fastest: bool = True) -> np.ndarray:
    """Cached, read-only variant for blocks reused across many calls."""
    block = digit_block(length, base, start, stop, first_digit_fastest)
    block.flags.writeable = False
    return block


def digits_of(index: int, length: int, base: int) -> tuple[int, ...]:
    """Digits of a single index, first digit fastest."""
    out = []
    for _ in range(length):
        out.append(index % base)
        index //= base
    return tuple(out)
