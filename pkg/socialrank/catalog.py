"""
Catalog of social ranking solutions

Holds the five main solutions together with purpose-built solutions, each
aimed at one axiom, used to show the axioms are logically independent. Some of
them break further axioms as well.
"""
import logging
from enum import Enum
from typing import Callable

import numpy as np

from socialrank.models import DataValidationError, PairwiseRelation, PlayerSet, PowerRelation
from socialrank.solutions import (
    context_classes,
    cp_majority,
    dual_lex,
    l1,
    l1_star,
    lex_compare,
    lexcel,
    player_statistics,
)

logger = logging.getLogger("socialrank")


class SolutionRef(str, Enum):
    """Every solution the toolkit can run by name"""

    CP = "CP"
    LEXCEL = "LexCel"
    DUAL_LEX = "DualLex"
    L1 = "L1"
    L1_STAR = "L1Star"
    ID = "Id"
    N_INDEX = "N_Index"
    EC_EMPTY = "EC_Empty"
    CAT_PER_CLASS = "CAT_PerClass"
    SD_REVERSED = "SD_Reversed"
    S_INDEX = "S_Index"
    CA_LARGEST_SET = "CA_LargestSet"
    IW_SHIFTED_THETA = "IW_ShiftedTheta"
    KD_REVERSED = "KD_Reversed"
    PCA_MIN_PARTNER = "PCA_MinPartner"
    CI_MINIMAL_THETA = "CI_MinimalTheta"
    S_INDEX_L1 = "S_IndexL1"
    IW_SHIFTED_MATRIX = "IW_ShiftedMatrix"

    @classmethod
    def parse(cls, text: str) -> "SolutionRef":
        """Case-insensitive lookup by name"""
        wanted = text.strip().lower()
        for ref in cls:
            if ref.value.lower() == wanted:
                return ref
        raise DataValidationError(f"Unknown solution {text!r}")


MAIN_SOLUTIONS = (
    SolutionRef.CP,
    SolutionRef.LEXCEL,
    SolutionRef.DUAL_LEX,
    SolutionRef.L1,
    SolutionRef.L1_STAR,
)


######################################################################
# Counterexample solutions
######################################################################
def index_order(players: PlayerSet) -> PairwiseRelation:
    """Players ranked by their position, first player on top"""
    positions = np.arange(players.n)
    return PairwiseRelation(players, np.sign(positions[None, :] - positions[:, None]))


def _identity(pr: PowerRelation) -> PairwiseRelation:
    return PairwiseRelation.indifferent(pr.players)


def _ties_by_index(base: Callable[[PowerRelation], PairwiseRelation]) -> Callable[[PowerRelation], PairwiseRelation]:
    """Keep every strict cell of ``base`` and break its ties by player position"""

    def solution(pr: PowerRelation) -> PairwiseRelation:
        cells = base(pr).cells
        return PairwiseRelation(pr.players, np.where(cells != 0, cells, index_order(pr.players).cells))

    solution.__name__ = f"{base.__name__}_or_index"
    return solution


def _ec_empty(pr: PowerRelation) -> PairwiseRelation:
    cp = cp_majority(pr)

    # A strict comparison of the singletons decides the pair, otherwise CP-majority does
    def compare(i: int, j: int) -> int:
        singletons = pr.compare(1 << i, 1 << j)
        if singletons:
            return singletons
        return int(cp.cells[i, j])

    return PairwiseRelation.from_comparator(pr.players, compare)


def _cat_per_class(pr: PowerRelation) -> PairwiseRelation:
    classes = pr.class_count

    def wins(first: np.ndarray, second: np.ndarray) -> np.ndarray:
        won = first[first < second] - 1
        return np.bincount(won, minlength=classes)[: classes - 1]

    def compare(i: int, j: int) -> int:
        _, with_i, with_j = context_classes(pr, i, j)
        return lex_compare(wins(with_i, with_j), wins(with_j, with_i))

    return PairwiseRelation.from_comparator(pr.players, compare)


def _sd_reversed(pr: PowerRelation) -> PairwiseRelation:
    return lexcel(pr).mirror()


def _ca_largest_set(pr: PowerRelation) -> PairwiseRelation:
    stats = player_statistics(pr)
    base = lexcel(pr)

    def largest_size(player: int, column: int) -> int:
        return int(np.flatnonzero(stats.matrices[player][:, column]).max())

    def compare(i: int, j: int) -> int:
        if base.cells[i, j]:
            return int(base.cells[i, j])
        first = int(np.flatnonzero(stats.theta[i])[0])
        return int(np.sign(largest_size(i, first) - largest_size(j, first)))

    return PairwiseRelation.from_comparator(pr.players, compare)


def _iw_shifted_theta(pr: PowerRelation) -> PairwiseRelation:
    stats = player_statistics(pr)
    shifted = stats.theta.copy()
    shifted[:, :-1] += stats.theta[:, 1:]
    return PairwiseRelation.from_comparator(pr.players, lambda i, j: lex_compare(shifted[i], shifted[j]))


def _iw_shifted_matrix(pr: PowerRelation) -> PairwiseRelation:
    stats = player_statistics(pr)
    shifted = stats.matrices.copy()
    shifted[:, :, :-1] += stats.matrices[:, :, 1:]
    players, sizes, columns = shifted.shape
    keys = shifted.transpose(0, 2, 1).reshape(players, sizes * columns)
    return PairwiseRelation.from_comparator(pr.players, lambda i, j: lex_compare(keys[i], keys[j]))


def _kd_reversed(pr: PowerRelation) -> PairwiseRelation:
    stats = player_statistics(pr)
    head = stats.matrices[:, ::-1, :-1]
    players, sizes, columns = head.shape
    keys = head.transpose(0, 2, 1).reshape(players, sizes * columns)
    return PairwiseRelation.from_comparator(pr.players, lambda i, j: lex_compare(keys[j], keys[i]))


def _partner_minima(pr: PowerRelation, player: int, rival: int) -> np.ndarray:
    """Per class, the smallest partner index other than ``rival`` forming a pair with ``player`` in that class"""
    minima = np.full(pr.class_count, np.inf)
    for partner in range(pr.n):
        if partner in (player, rival):
            continue
        column = int(pr.class_of[(1 << player) | (1 << partner)]) - 1
        minima[column] = min(minima[column], partner)
    return minima


def _pca_min_partner(pr: PowerRelation) -> PairwiseRelation:
    base = l1(pr)

    def compare(i: int, j: int) -> int:
        if base.cells[i, j]:
            return int(base.cells[i, j])
        minima_i, minima_j = _partner_minima(pr, i, j), _partner_minima(pr, j, i)
        differs = np.flatnonzero(minima_i != minima_j)
        if differs.size == 0:
            return 0
        column = differs[0]
        return 1 if minima_i[column] < minima_j[column] else -1

    return PairwiseRelation.from_comparator(pr.players, compare)


def _ci_minimal_theta(pr: PowerRelation) -> PairwiseRelation:
    base = l1(pr)
    # The fallback applies to every pair as soon as one pair is tied
    if base.is_total_order():
        return base
    stats = player_statistics(pr)
    minimal = np.zeros_like(stats.theta)
    for player in range(pr.n):
        for column in range(pr.class_count):
            counts = stats.matrices[player][:, column]
            nonzero = np.flatnonzero(counts)
            if nonzero.size:
                minimal[player, column] = counts[nonzero[0]]
    return PairwiseRelation.from_comparator(pr.players, lambda i, j: lex_compare(minimal[i], minimal[j]))


_RESOLVERS: dict[SolutionRef, Callable[[PowerRelation], PairwiseRelation]] = {
    SolutionRef.CP: cp_majority,
    SolutionRef.LEXCEL: lexcel,
    SolutionRef.DUAL_LEX: dual_lex,
    SolutionRef.L1: l1,
    SolutionRef.L1_STAR: l1_star,
    SolutionRef.ID: _identity,
    SolutionRef.N_INDEX: _ties_by_index(cp_majority),
    SolutionRef.EC_EMPTY: _ec_empty,
    SolutionRef.CAT_PER_CLASS: _cat_per_class,
    SolutionRef.SD_REVERSED: _sd_reversed,
    SolutionRef.S_INDEX: _ties_by_index(lexcel),
    SolutionRef.CA_LARGEST_SET: _ca_largest_set,
    SolutionRef.IW_SHIFTED_THETA: _iw_shifted_theta,
    SolutionRef.KD_REVERSED: _kd_reversed,
    SolutionRef.PCA_MIN_PARTNER: _pca_min_partner,
    SolutionRef.CI_MINIMAL_THETA: _ci_minimal_theta,
    SolutionRef.S_INDEX_L1: _ties_by_index(l1),
    SolutionRef.IW_SHIFTED_MATRIX: _iw_shifted_matrix,
}


def resolve(ref: SolutionRef) -> Callable[[PowerRelation], PairwiseRelation]:
    """The function computing a catalogued solution"""
    return _RESOLVERS[SolutionRef(ref)]


def counterexample_solution(ref: SolutionRef, pr: PowerRelation) -> PairwiseRelation:
    """Run a catalogued solution on a power relation"""
    logger.debug("Running %s on %r", SolutionRef(ref).value, pr)
    return resolve(ref)(pr)
