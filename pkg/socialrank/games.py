"""
Multicameral weighted voting games

A coalition's value is the number of consecutive houses, starting from the
first, whose quota it meets. With two houses this is the three-valued game
``2`` (both houses), ``1`` (first house only), ``0`` otherwise.
"""
import logging
from dataclasses import dataclass

import numpy as np

from socialrank.coalitions import subset_sums
from socialrank.models import (
    DataValidationError,
    DimensionMismatch,
    EmptyCoalitionListed,
    NonPositiveQuota,
    PlayerSet,
    PowerRelation,
    power_relation_from_levels,
)

logger = logging.getLogger("socialrank")


@dataclass(frozen=True)
class House:
    """Seat counts per player and the quota needed to pass"""

    weights: tuple[int, ...]
    quota: int

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(weight) for weight in self.weights))
        if self.quota <= 0:
            raise NonPositiveQuota(f"Quota must be positive, got {self.quota}")
        if any(weight < 0 for weight in self.weights):
            raise DataValidationError("Weights must be non-negative")

    @property
    def total(self) -> int:
        """Seats in the house"""
        return sum(self.weights)


@dataclass(frozen=True)
class MulticameralGame:
    """Players voting in a sequence of weighted houses"""

    players: PlayerSet
    houses: tuple[House, ...]

    def __post_init__(self):
        object.__setattr__(self, "houses", tuple(self.houses))
        if not self.houses:
            raise DimensionMismatch("A game needs at least one house")
        for number, house in enumerate(self.houses, start=1):
            if len(house.weights) != self.players.n:
                raise DimensionMismatch(f"House {number} has {len(house.weights)} weights for {self.players.n} players")
            if house.quota > house.total:
                logger.warning(
                    "House %d quota %d exceeds its %d seats: no coalition passes it", number, house.quota, house.total
                )


def game_value(game: MulticameralGame, coalition: int) -> int:
    """Number of leading houses whose quota the coalition meets"""
    if coalition == 0:
        raise EmptyCoalitionListed("The empty coalition has no value")
    value = 0
    for house in game.houses:
        seats = sum(weight for index, weight in enumerate(house.weights) if coalition >> index & 1)
        if seats < house.quota:
            break
        value += 1
    return value


def game_values(game: MulticameralGame) -> np.ndarray:
    """Value of every coalition, indexed by bit pattern; entry 0 is 0"""
    passes = np.stack([subset_sums(house.weights) >= house.quota for house in game.houses])
    values = np.cumprod(passes, axis=0).sum(axis=0)
    values[0] = 0
    return values


def game_to_power_relation(game: MulticameralGame) -> PowerRelation:
    """Coalitions ranked by value, one class per attained value, highest first"""
    values = game_values(game)
    pr = power_relation_from_levels(game.players, -values)
    logger.info(
        "Game with %d players and %d houses induces %d classes: sizes %s",
        game.players.n,
        len(game.houses),
        pr.class_count,
        [len(block) for block in pr.classes],
    )
    return pr
