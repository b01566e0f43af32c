"""
Coalition bit patterns

A coalition is an integer whose bit ``i`` is set when player ``i`` belongs to it.
Tables indexed by coalition have length ``2 ** n`` and are built by doubling:
the entries for the first ``k`` players are extended with player ``k`` by
appending a shifted copy.
"""
import numpy as np


def full_mask(n: int) -> int:
    """Coalition holding every player"""
    return (1 << n) - 1


def members(mask: int) -> list[int]:
    """Player indices in a coalition, ascending"""
    result = []
    index = 0
    while mask:
        if mask & 1:
            result.append(index)
        mask >>= 1
        index += 1
    return result


def submasks(mask: int) -> np.ndarray:
    """Every subset of ``mask``, the empty one included, in ascending order"""
    subsets = np.zeros(1, dtype=np.int64)
    for player in members(mask):
        subsets = np.concatenate((subsets, subsets | (1 << player)))
    return subsets


def coalition_sizes(n: int) -> np.ndarray:
    """Cardinality of every coalition over ``n`` players"""
    sizes = np.zeros(1, dtype=np.int64)
    for _ in range(n):
        sizes = np.concatenate((sizes, sizes + 1))
    return sizes


def subset_sums(weights) -> np.ndarray:
    """Total weight of every coalition"""
    sums = np.zeros(1, dtype=np.int64)
    for weight in weights:
        sums = np.concatenate((sums, sums + int(weight)))
    return sums


def swap_bits(masks: np.ndarray, i: int, j: int) -> np.ndarray:
    """Image of each coalition under the transposition of players ``i`` and ``j``"""
    masks = np.asarray(masks, dtype=np.int64)
    bit_i = (masks >> i) & 1
    bit_j = (masks >> j) & 1
    cleared = masks & ~((1 << i) | (1 << j))
    return cleared | (bit_i << j) | (bit_j << i)


def format_coalition(mask: int, labels) -> str:
    """Render a coalition as ``{a,b,c}``"""
    return "{" + ",".join(labels[index] for index in members(mask)) + "}"
