"""
Random and exhaustive sources of power relations

Everything random here takes a ``numpy.random.Generator`` so callers control
reproducibility; ``derive_seed`` turns a tuple of identifiers into an
independent 64-bit seed.
"""
import hashlib
import itertools
from typing import Iterator, Optional

import numpy as np

from socialrank.coalitions import swap_bits
from socialrank.models import PlayerSet, PowerRelation, power_relation_from_table, power_relation_from_levels


def derive_seed(*parts) -> int:
    """64-bit seed from any sequence of identifiers"""
    digest = hashlib.blake2b("/".join(str(part) for part in parts).encode("utf-8"), digest_size=8).digest()
    return int.from_bytes(digest, "little")


def random_levels(players: PlayerSet, rng: np.random.Generator, max_classes: Optional[int] = None) -> np.ndarray:
    """One random integer level per coalition"""
    coalitions = (1 << players.n) - 1
    cap = min(max_classes or coalitions, coalitions)
    count = int(rng.integers(1, cap + 1))
    return rng.integers(0, count, size=1 << players.n)


def random_power_relation(
    players: PlayerSet, rng: np.random.Generator, max_classes: Optional[int] = None
) -> PowerRelation:
    """A random total preorder with at most ``max_classes`` classes"""
    return power_relation_from_levels(players, random_levels(players, rng, max_classes))


def symmetric_levels(levels: np.ndarray, i: int, j: int) -> np.ndarray:
    """Copy of ``levels`` made invariant under exchanging players ``i`` and ``j``"""
    masks = np.arange(len(levels), dtype=np.int64)
    return np.asarray(levels)[np.minimum(masks, swap_bits(masks, i, j))]


def symmetric_power_relation(
    players: PlayerSet, i: int, j: int, rng: np.random.Generator, max_classes: Optional[int] = None
) -> PowerRelation:
    """A random relation in which ``i`` and ``j`` are interchangeable"""
    return power_relation_from_levels(players, symmetric_levels(random_levels(players, rng, max_classes), i, j))


def _set_partitions(count: int) -> Iterator[tuple[list[int], int]]:
    """Restricted growth strings: block label per element"""
    labels = [0] * count

    def extend(position: int, blocks: int):
        if position == count:
            yield labels[:], blocks
            return
        for label in range(blocks + 1):
            labels[position] = label
            yield from extend(position + 1, max(blocks, label + 1))

    for assignment, blocks in extend(0, 0):
        yield assignment, blocks


def enumerate_power_relations(players: PlayerSet) -> Iterator[PowerRelation]:
    """Every total preorder on the nonempty coalitions (ordered set partitions)"""
    coalitions = (1 << players.n) - 1
    for assignment, blocks in _set_partitions(coalitions):
        assignment = np.asarray(assignment)
        for order in itertools.permutations(range(1, blocks + 1)):
            class_of = np.zeros(coalitions + 1, dtype=np.int32)
            class_of[1:] = np.asarray(order)[assignment]
            yield power_relation_from_table(players, class_of)
