"""Domain models for coalitional rankings and the social rankings derived from them."""

import logging
import re
from dataclasses import dataclass, field
from enum import IntEnum
from typing import Callable, Iterable, Optional, Union

import numpy as np

from socialrank import config
from socialrank.coalitions import format_coalition, full_mask, swap_bits

logger = logging.getLogger("socialrank")

LABEL_PATTERN = re.compile(r"[A-Za-z0-9_.-]+")


######################################################################
# Errors
######################################################################
class DataValidationError(Exception):
    """Used for any data validation errors"""


class DuplicateCoalition(DataValidationError):
    """A coalition is ranked more than once"""


class MissingCoalition(DataValidationError):
    """The classes do not cover every nonempty coalition"""


class EmptyClass(DataValidationError):
    """An equivalence class holds no coalition"""


class EmptyCoalitionListed(DataValidationError):
    """The empty coalition was given a rank"""


class UnknownPlayer(DataValidationError):
    """A label or index outside the player set"""


class SamePlayer(DataValidationError):
    """A pairwise operation was asked to compare a player with itself"""


class SizeOutOfRange(DataValidationError):
    """A size or player count outside the supported range"""


class DimensionMismatch(DataValidationError):
    """A table or list does not have the length the player set requires"""


class NonPositiveQuota(DataValidationError):
    """A house quota is zero or negative"""


class ParseError(DataValidationError):
    """Malformed input text, annotated with its position"""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class ExpectationMismatch(Exception):
    """Computed values differ from the expected reference values"""


######################################################################
# P L A Y E R S
######################################################################
@dataclass(frozen=True)
class PlayerSet:
    """Ordered, distinct player labels; the position of a label is its bit"""

    names: tuple[str, ...]

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if not names:
            raise DataValidationError("A player set needs at least one player")
        if len(names) > config.MAX_PLAYERS:
            raise SizeOutOfRange(f"{len(names)} players exceeds the limit of {config.MAX_PLAYERS}")
        for name in names:
            if not LABEL_PATTERN.fullmatch(name):
                raise DataValidationError(f"Invalid player label: {name!r}")
        if len(set(names)) != len(names):
            raise DataValidationError("Player labels must be unique")

    @classmethod
    def of_size(cls, n: int) -> "PlayerSet":
        """Players labelled 1..n"""
        return cls(tuple(str(k + 1) for k in range(n)))

    @property
    def n(self) -> int:
        """Number of players"""
        return len(self.names)

    @property
    def full_mask(self) -> int:
        """The grand coalition"""
        return full_mask(self.n)

    def index(self, label: str) -> int:
        """Position of a label"""
        try:
            return self.names.index(label)
        except ValueError as error:
            raise UnknownPlayer(f"Unknown player: {label!r}") from error

    def check_index(self, index: int) -> int:
        """Validate a player position"""
        if not 0 <= index < self.n:
            raise UnknownPlayer(f"Player index {index} is outside 0..{self.n - 1}")
        return index

    def mask_of(self, labels: Iterable[str]) -> int:
        """Coalition made of the given labels"""
        mask = 0
        for label in labels:
            mask |= 1 << self.index(label)
        return mask

    def format(self, mask: int) -> str:
        """Coalition as ``{a,b}``"""
        return format_coalition(mask, self.names)

    def __len__(self):
        return len(self.names)

    def __iter__(self):
        return iter(self.names)


######################################################################
# P O W E R   R E L A T I O N S
######################################################################
@dataclass(frozen=True, eq=False)
class PowerRelation:
    """
    A total preorder on the nonempty coalitions, stored as its quotient order

    ``classes[k - 1]`` lists the coalitions of class ``k`` in ascending bit order,
    class 1 being the strongest. ``class_of[mask]`` is the class index of a
    coalition; ``class_of[0]`` is 0 because the empty coalition is never ranked.
    """

    players: PlayerSet
    classes: tuple[tuple[int, ...], ...]
    class_of: np.ndarray = field(repr=False)

    @property
    def n(self) -> int:
        """Number of players"""
        return self.players.n

    @property
    def class_count(self) -> int:
        """Number of equivalence classes"""
        return len(self.classes)

    def compare(self, first: int, second: int) -> int:
        """+1 if ``first`` is stronger than ``second``, -1 if weaker, 0 if tied"""
        return int(np.sign(int(self.class_of[second]) - int(self.class_of[first])))

    def __eq__(self, other):
        if not isinstance(other, PowerRelation):
            return NotImplemented
        return self.players == other.players and self.classes == other.classes

    def __hash__(self):
        return hash((self.players, self.classes))

    def __repr__(self):
        return f"<PowerRelation n={self.n} classes={self.class_count}>"


def power_relation_from_table(players: PlayerSet, class_of: np.ndarray) -> PowerRelation:
    """Wrap an already dense class table"""
    class_of = np.asarray(class_of, dtype=np.int32).copy()
    count = int(class_of.max(initial=0))
    classes = tuple(tuple(np.flatnonzero(class_of == k).tolist()) for k in range(1, count + 1))
    class_of.setflags(write=False)
    return PowerRelation(players, classes, class_of)


def build_power_relation(players: PlayerSet, classes: Iterable[Iterable[int]]) -> PowerRelation:
    """
    Validates an ordered list of coalition sets and builds its PowerRelation

    Args:
        players (PlayerSet): the players the coalitions are drawn from
        classes (list): coalition bit patterns per class, strongest class first
    """
    size = 1 << players.n
    class_of = np.zeros(size, dtype=np.int32)
    ordered = []
    for k, coalitions in enumerate(classes, start=1):
        coalitions = [int(mask) for mask in coalitions]
        if not coalitions:
            raise EmptyClass(f"Class {k} is empty")
        for mask in coalitions:
            if mask == 0:
                raise EmptyCoalitionListed("The empty coalition cannot be ranked")
            if not 0 < mask < size:
                raise UnknownPlayer(f"Coalition {mask:#x} refers to players outside the player set")
            if class_of[mask]:
                raise DuplicateCoalition(f"Coalition {players.format(mask)} is listed more than once")
            class_of[mask] = k
        ordered.append(tuple(sorted(coalitions)))

    missing = np.flatnonzero(class_of[1:] == 0) + 1
    if missing.size:
        raise MissingCoalition(f"{missing.size} coalitions are not ranked, e.g. {players.format(int(missing[0]))}")

    class_of.setflags(write=False)
    logger.debug("Built power relation with %d classes over %d players", len(ordered), players.n)
    return PowerRelation(players, tuple(ordered), class_of)


def power_relation_from_levels(players: PlayerSet, levels) -> PowerRelation:
    """
    Dense-ranks a level per coalition into a PowerRelation

    ``levels`` has one entry per coalition (entry 0 is ignored); a smaller level
    is a stronger coalition and equal levels are tied.
    """
    levels = np.asarray(levels)
    if levels.shape != (1 << players.n,):
        raise DimensionMismatch(f"Expected {1 << players.n} levels, got {levels.shape}")
    class_of = np.zeros(1 << players.n, dtype=np.int32)
    if players.n:
        _, dense = np.unique(levels[1:], return_inverse=True)
        class_of[1:] = dense.reshape(-1) + 1
    return power_relation_from_table(players, class_of)


def reverse(pr: PowerRelation) -> PowerRelation:
    """The same classes in the opposite order"""
    class_of = np.where(pr.class_of > 0, pr.class_count + 1 - pr.class_of, 0)
    return power_relation_from_table(pr.players, class_of)


def swap_players(pr: PowerRelation, i: int, j: int) -> PowerRelation:
    """Image of ``pr`` when players ``i`` and ``j`` exchange places in every coalition"""
    pr.players.check_index(i)
    pr.players.check_index(j)
    masks = np.arange(1 << pr.n, dtype=np.int64)
    return power_relation_from_table(pr.players, pr.class_of[swap_bits(masks, i, j)])


def refine_class(pr: PowerRelation, index: int, blocks: Iterable[Iterable[int]]) -> PowerRelation:
    """Replace class ``index`` (1-based) by the given ordered blocks, which must partition it"""
    if not 1 <= index <= pr.class_count:
        raise SizeOutOfRange(f"Class {index} is outside 1..{pr.class_count}")
    blocks = [tuple(block) for block in blocks]
    if sorted(mask for block in blocks for mask in block) != list(pr.classes[index - 1]):
        raise DataValidationError(f"The blocks do not partition class {index}")
    classes = list(pr.classes[: index - 1]) + blocks + list(pr.classes[index:])
    return build_power_relation(pr.players, classes)


def split_class(pr: PowerRelation, omega: Iterable[int]) -> PowerRelation:
    """Break the ties between ``omega`` and the rest of its class, ranking ``omega`` below"""
    omega = sorted(set(int(mask) for mask in omega))
    if not omega:
        raise DataValidationError("Nothing to split off")
    index = int(pr.class_of[omega[0]])
    shared = set(pr.classes[index - 1])
    if not shared.issuperset(omega) or len(omega) == len(shared):
        raise DataValidationError("The split must be a nonempty proper subset of one class")
    return refine_class(pr, index, [sorted(shared.difference(omega)), omega])


def merge_tail(pr: PowerRelation, lifted: Iterable[int]) -> tuple[PowerRelation, PowerRelation]:
    """
    Lift coalitions of the last class and collapse the head

    Returns the relation where ``lifted`` joins the second-to-last class and the
    dichotomous relation where every class but the last, plus ``lifted``, forms
    the winning class.
    """
    lifted = sorted(set(int(mask) for mask in lifted))
    last = set(pr.classes[-1])
    if pr.class_count < 2:
        raise SizeOutOfRange("At least two classes are needed")
    if not last.issuperset(lifted) or len(lifted) == len(last):
        raise DataValidationError("The lifted coalitions must be a proper subset of the last class")
    rest = sorted(last.difference(lifted))
    head = list(pr.classes[:-2]) + [sorted(set(pr.classes[-2]).union(lifted))]
    lifted_relation = build_power_relation(pr.players, head + [rest])
    winning = sorted(mask for block in head for mask in block)
    return lifted_relation, build_power_relation(pr.players, [winning, rest])


######################################################################
# P A I R W I S E   R E L A T I O N S
######################################################################
class Cell(IntEnum):
    """Outcome of comparing two players"""

    STRICTLY_BELOW = -1
    INDIFFERENT = 0
    STRICTLY_ABOVE = 1


@dataclass(frozen=True, eq=False)
class PairwiseRelation:
    """A total binary relation on players as an antisymmetric matrix of cells"""

    players: PlayerSet
    cells: np.ndarray = field(repr=False)

    def __post_init__(self):
        cells = np.array(self.cells, dtype=np.int8)
        n = self.players.n
        if cells.shape != (n, n):
            raise DimensionMismatch(f"Expected a {n}x{n} matrix, got {cells.shape}")
        if np.any(np.abs(cells) > 1) or np.any(np.diag(cells) != 0) or not np.array_equal(cells, -cells.T):
            raise DataValidationError("Cells must be antisymmetric with an indifferent diagonal")
        cells.setflags(write=False)
        object.__setattr__(self, "cells", cells)

    @classmethod
    def from_comparator(cls, players: PlayerSet, compare: Callable[[int, int], int]) -> "PairwiseRelation":
        """
        Build from ``compare(i, j)``, whose sign is the cell of ``i`` against ``j``

        Only pairs with ``i < j`` are evaluated; the other half is their mirror.
        """
        n = players.n
        cells = np.zeros((n, n), dtype=np.int8)
        for i in range(n):
            for j in range(i + 1, n):
                sign = int(np.sign(compare(i, j)))
                cells[i, j] = sign
                cells[j, i] = -sign
        return cls(players, cells)

    @classmethod
    def indifferent(cls, players: PlayerSet) -> "PairwiseRelation":
        """Every player tied with every other"""
        return cls(players, np.zeros((players.n, players.n), dtype=np.int8))

    def cell(self, i: int, j: int) -> Cell:
        """Relation of ``i`` towards ``j``"""
        return Cell(int(self.cells[i, j]))

    def weakly_prefers(self, i: int, j: int) -> bool:
        """``i`` is at least as relevant as ``j``"""
        return bool(self.cells[i, j] >= 0)

    def mirror(self) -> "PairwiseRelation":
        """Swap every strict cell"""
        return PairwiseRelation(self.players, -self.cells)

    def intransitivity_witness(self) -> Optional[tuple[int, int, int]]:
        """First triple with i R j and j R k but not i R k, if any"""
        weak = self.cells >= 0
        for i in range(self.players.n):
            violations = weak[i][:, None] & weak & ~weak[i][None, :]
            hits = np.argwhere(violations)
            if hits.size:
                return i, int(hits[0][0]), int(hits[0][1])
        return None

    def is_transitive(self) -> bool:
        """No intransitive triple exists"""
        return self.intransitivity_witness() is None

    def is_total_order(self) -> bool:
        """Transitive with no tie between distinct players"""
        off_diagonal = ~np.eye(self.players.n, dtype=bool)
        return bool(np.all(self.cells[off_diagonal] != 0)) and self.is_transitive()

    def __eq__(self, other):
        if not isinstance(other, PairwiseRelation):
            return NotImplemented
        return self.players == other.players and np.array_equal(self.cells, other.cells)

    def __hash__(self):
        return hash((self.players, self.cells.tobytes()))


@dataclass(frozen=True)
class RankingOutput:
    """Standard competition ranks ("1224"), one per player"""

    players: PlayerSet
    ranks: tuple[int, ...]

    def rank_of(self, label: str) -> int:
        """Rank of a labelled player"""
        return self.ranks[self.players.index(label)]


@dataclass(frozen=True)
class IntransitivityReport:
    """A relation that admits no ranking, with one violating triple"""

    relation: PairwiseRelation
    witness: tuple[int, int, int]

    def describe(self) -> str:
        """Human readable form of the witness"""
        a, b, c = (self.relation.players.names[k] for k in self.witness)
        return f"{a} R {b} and {b} R {c} but not {a} R {c}"


def ranks_from_pairwise(rel: PairwiseRelation) -> Union[RankingOutput, IntransitivityReport]:
    """Competition ranks of a transitive relation, or a witness of intransitivity"""
    witness = rel.intransitivity_witness()
    if witness is not None:
        report = IntransitivityReport(rel, witness)
        logger.warning("Relation is not transitive: %s", report.describe())
        return report
    above = np.count_nonzero(rel.cells == Cell.STRICTLY_BELOW, axis=1)
    return RankingOutput(rel.players, tuple(int(count) + 1 for count in above))
