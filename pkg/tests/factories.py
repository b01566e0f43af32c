"""Factories to create power relations and games for testing."""

import factory
import numpy as np

from socialrank.games import House, MulticameralGame
from socialrank.models import PlayerSet, PowerRelation
from socialrank.sampling import random_power_relation


class PowerRelationFactory(factory.Factory):
    """Create seeded random power relations"""

    class Meta:  # pylint: disable=too-few-public-methods
        """Factory metadata mapping this class to the model."""

        model = PowerRelation

    n = 4
    seed = factory.Sequence(lambda k: k)
    max_classes = None

    @classmethod
    def _build(cls, model_class, *args, **kwargs):
        rng = np.random.default_rng(kwargs["seed"])
        return random_power_relation(PlayerSet.of_size(kwargs["n"]), rng, kwargs["max_classes"])

    @classmethod
    def _create(cls, model_class, *args, **kwargs):
        return cls._build(model_class, *args, **kwargs)


class MulticameralGameFactory(factory.Factory):
    """Create seeded random games with strict majority quotas"""

    class Meta:  # pylint: disable=too-few-public-methods
        """Factory metadata mapping this class to the model."""

        model = MulticameralGame

    n = 4
    houses = 2
    seed = factory.Sequence(lambda k: k + 1000)

    @classmethod
    def _build(cls, model_class, *args, **kwargs):
        rng = np.random.default_rng(kwargs["seed"])
        weights = rng.integers(0, 6, size=(kwargs["houses"], kwargs["n"]))
        houses = tuple(House(tuple(row.tolist()), max(1, int(row.sum()) // 2 + 1)) for row in weights)
        return model_class(PlayerSet.of_size(kwargs["n"]), houses)

    @classmethod
    def _create(cls, model_class, *args, **kwargs):
        return cls._build(model_class, *args, **kwargs)
