"""
Social ranking solutions

Each solution maps a PowerRelation to a PairwiseRelation:

* ``cp_majority``: more ceteris paribus wins than losses against the other player
* ``lexcel``: occurrence counts per class, best class first, more is better
* ``dual_lex``: occurrence counts per class, worst class first, fewer is better
* ``l1``: size-by-class counts, best class first and small sizes first, more is better
* ``l1_star``: size-by-class counts, worst class first and small sizes first, fewer is better
"""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Callable

import numpy as np

from socialrank.coalitions import coalition_sizes, submasks
from socialrank.models import (
    PairwiseRelation,
    PowerRelation,
    SamePlayer,
    SizeOutOfRange,
)

logger = logging.getLogger("socialrank")


######################################################################
# Statistics
######################################################################
@dataclass(frozen=True)
class CPCounts:
    """Ceteris paribus comparisons of ``S + i`` against ``S + j``"""

    d_ij: int
    d_ji: int
    e_ij: int


@dataclass(frozen=True)
class ThetaVector:
    """How many coalitions of each class contain the player"""

    counts: tuple[int, ...]

    @property
    def total(self) -> int:
        """Coalitions containing the player"""
        return sum(self.counts)


@dataclass(frozen=True)
class L1Matrix:
    """``m[s - 1][k - 1]`` coalitions of size ``s`` in class ``k`` containing the player"""

    m: np.ndarray

    def row_sums(self) -> np.ndarray:
        """Coalitions of each size containing the player"""
        return self.m.sum(axis=1)

    def column_sums(self) -> np.ndarray:
        """Equal to the player's ThetaVector"""
        return self.m.sum(axis=0)


@dataclass(frozen=True)
class PlayerStatistics:
    """ThetaVectors (n x l) and L1 matrices (n x n x l) of every player"""

    theta: np.ndarray
    matrices: np.ndarray


def _check_pair(pr: PowerRelation, i: int, j: int):
    pr.players.check_index(i)
    pr.players.check_index(j)
    if i == j:
        raise SamePlayer(f"Cannot compare player {pr.players.names[i]} with itself")


def context_classes(pr: PowerRelation, i: int, j: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Contexts S avoiding i and j, with the classes of S + i and S + j"""
    contexts = submasks(pr.players.full_mask & ~((1 << i) | (1 << j)))
    return contexts, pr.class_of[contexts | (1 << i)], pr.class_of[contexts | (1 << j)]


def cp_counts(pr: PowerRelation, i: int, j: int) -> CPCounts:
    """Counts of contexts where ``S + i`` wins, loses and ties against ``S + j``"""
    _check_pair(pr, i, j)
    _, with_i, with_j = context_classes(pr, i, j)
    d_ij = int(np.count_nonzero(with_i < with_j))
    d_ji = int(np.count_nonzero(with_j < with_i))
    return CPCounts(d_ij, d_ji, len(with_i) - d_ij - d_ji)


def cp_matrix(pr: PowerRelation) -> np.ndarray:
    """Matrix of ``d_ij`` over all ordered pairs, zero diagonal"""
    n = pr.n
    counts = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        for j in range(i + 1, n):
            pair = cp_counts(pr, i, j)
            counts[i, j] = pair.d_ij
            counts[j, i] = pair.d_ji
    return counts


def player_statistics(pr: PowerRelation) -> PlayerStatistics:
    """ThetaVectors and L1 matrices of every player in one pass over the coalitions"""
    n, classes = pr.n, pr.class_count
    masks = np.arange(1, 1 << n, dtype=np.int64)
    class_index = pr.class_of[1:].astype(np.int64) - 1
    size_index = coalition_sizes(n)[1:] - 1
    theta = np.empty((n, classes), dtype=np.int64)
    matrices = np.empty((n, n, classes), dtype=np.int64)
    for player in range(n):
        holds = (masks >> player) & 1 == 1
        theta[player] = np.bincount(class_index[holds], minlength=classes)
        cells = size_index[holds] * classes + class_index[holds]
        matrices[player] = np.bincount(cells, minlength=n * classes).reshape(n, classes)
    return PlayerStatistics(theta, matrices)


def theta(pr: PowerRelation, i: int) -> ThetaVector:
    """Occurrences of player ``i`` in each class"""
    pr.players.check_index(i)
    return ThetaVector(tuple(int(count) for count in player_statistics(pr).theta[i]))


def l1_matrix(pr: PowerRelation, i: int) -> L1Matrix:
    """Occurrences of player ``i`` by coalition size and class"""
    pr.players.check_index(i)
    return L1Matrix(player_statistics(pr).matrices[i])


######################################################################
# Solutions
######################################################################
def lex_compare(first, second) -> int:
    """Sign of the first nonzero entry of ``first - second``"""
    difference = np.asarray(first, dtype=np.int64) - np.asarray(second, dtype=np.int64)
    nonzero = np.flatnonzero(difference)
    if nonzero.size == 0:
        return 0
    return 1 if difference[nonzero[0]] > 0 else -1


def cp_majority(pr: PowerRelation) -> PairwiseRelation:
    """i above j when S + i beats S + j in more contexts than the reverse"""
    counts = cp_matrix(pr)
    return PairwiseRelation(pr.players, np.sign(counts - counts.T))


def lexcel(pr: PowerRelation) -> PairwiseRelation:
    """Lexicographic excellence"""
    stats = player_statistics(pr)
    return PairwiseRelation.from_comparator(pr.players, lambda i, j: lex_compare(stats.theta[i], stats.theta[j]))


def dual_lex(pr: PowerRelation) -> PairwiseRelation:
    """Dual lexicographic excellence: scan from the worst class, fewer wins"""
    stats = player_statistics(pr)
    return PairwiseRelation.from_comparator(
        pr.players, lambda i, j: lex_compare(stats.theta[j][::-1], stats.theta[i][::-1])
    )


def l1_keys(stats: PlayerStatistics) -> np.ndarray:
    """Per player, classes 1..l-1 in order with sizes ascending inside each class"""
    head = stats.matrices[:, :, :-1]
    players, sizes, columns = head.shape
    return head.transpose(0, 2, 1).reshape(players, sizes * columns)


def l1_star_keys(stats: PlayerStatistics) -> np.ndarray:
    """Per player, classes l..2 in order with sizes ascending inside each class"""
    tail = stats.matrices[:, :, 1:][:, :, ::-1]
    players, sizes, columns = tail.shape
    return tail.transpose(0, 2, 1).reshape(players, sizes * columns)


def l1(pr: PowerRelation) -> PairwiseRelation:
    """Lexicographic comparison of size-by-class matrices, more wins"""
    keys = l1_keys(player_statistics(pr))
    return PairwiseRelation.from_comparator(pr.players, lambda i, j: lex_compare(keys[i], keys[j]))


def l1_star(pr: PowerRelation) -> PairwiseRelation:
    """Dual of ``l1``: worst class first, fewer wins"""
    keys = l1_star_keys(player_statistics(pr))
    return PairwiseRelation.from_comparator(pr.players, lambda i, j: lex_compare(keys[j], keys[i]))


######################################################################
# Dominance
######################################################################
class KDominanceCell(Enum):
    """Relation between two players over the contexts of one size"""

    STRICT_FOR_I = "strict_for_i"
    STRICT_FOR_J = "strict_for_j"
    INDIFFERENT = "indifferent"
    # Weak dominance without a strict comparison only arises for partial
    # preorders; total preorders never produce these two
    WEAK_FOR_I = "weak_for_i"
    WEAK_FOR_J = "weak_for_j"
    INCOMPARABLE = "incomparable"

    def mirror(self) -> "KDominanceCell":
        """The same cell read from the other player's side"""
        return _MIRRORED.get(self, self)


_MIRRORED = {
    KDominanceCell.STRICT_FOR_I: KDominanceCell.STRICT_FOR_J,
    KDominanceCell.STRICT_FOR_J: KDominanceCell.STRICT_FOR_I,
    KDominanceCell.WEAK_FOR_I: KDominanceCell.WEAK_FOR_J,
    KDominanceCell.WEAK_FOR_J: KDominanceCell.WEAK_FOR_I,
}


@dataclass(frozen=True)
class KDominanceProfile:
    """Context sizes grouped by the dominance between two players"""

    strict_i: tuple[int, ...]
    strict_j: tuple[int, ...]
    indifferent: tuple[int, ...]
    incomparable: tuple[int, ...]


def k_dominance(pr: PowerRelation, i: int, j: int, k: int) -> KDominanceCell:
    """Compare ``S + i`` with ``S + j`` over every context ``S`` of size ``k``"""
    _check_pair(pr, i, j)
    if not 0 <= k <= pr.n - 2:
        raise SizeOutOfRange(f"Context size {k} is outside 0..{pr.n - 2}")
    contexts, with_i, with_j = context_classes(pr, i, j)
    of_size = coalition_sizes(pr.n)[contexts] == k
    wins_i = bool(np.any(with_i[of_size] < with_j[of_size]))
    wins_j = bool(np.any(with_j[of_size] < with_i[of_size]))
    if wins_i and wins_j:
        return KDominanceCell.INCOMPARABLE
    if wins_i:
        return KDominanceCell.STRICT_FOR_I
    if wins_j:
        return KDominanceCell.STRICT_FOR_J
    return KDominanceCell.INDIFFERENT


def k_dominance_sets(pr: PowerRelation, i: int, j: int) -> KDominanceProfile:
    """Context sizes where i strictly dominates, j strictly dominates, they tie, or conflict"""
    cells = [k_dominance(pr, i, j, k) for k in range(pr.n - 1)]

    def sizes(wanted):
        return tuple(k for k, cell in enumerate(cells) if cell is wanted)

    return KDominanceProfile(
        sizes(KDominanceCell.STRICT_FOR_I),
        sizes(KDominanceCell.STRICT_FOR_J),
        sizes(KDominanceCell.INDIFFERENT),
        sizes(KDominanceCell.INCOMPARABLE),
    )


def sdes_premise(pr: PowerRelation, i: int, j: int) -> bool:
    """S + i is never weaker than S + j and stronger at least once"""
    counts = cp_counts(pr, i, j)
    return counts.d_ji == 0 and counts.d_ij > 0


SOLUTIONS: dict[str, Callable[[PowerRelation], PairwiseRelation]] = {
    "cp": cp_majority,
    "lexcel": lexcel,
    "duallex": dual_lex,
    "l1": l1,
    "l1star": l1_star,
}
