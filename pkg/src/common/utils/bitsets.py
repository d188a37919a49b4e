"""
Bitsets - Sets of small non-negative ints stored as Python ints.
"""

from typing import Iterable, List

import numpy as np


def positions_to_mask(positions: Iterable[int]) -> int:
    mask = 0
    for p in positions:
        mask |= 1 << int(p)
    return mask


def mask_to_positions(mask: int) -> List[int]:
    """Set bits in ascending order."""
    positions = []
    while mask:
        low = mask & -mask
        positions.append(low.bit_length() - 1)
        mask ^= low
    return positions


def bools_to_mask(flags: np.ndarray) -> int:
    """Pack a boolean array into an int bitset (bit p = flags[p])."""
    return int.from_bytes(np.packbits(flags, bitorder="little").tobytes(), "little")
