"""
Axiom predicates

Every axiom is an implication: a hypothesis on one or two power relations plus
an axiom-specific datum, and a conclusion on what a solution must output for
the pair of players ``(i, j)``. ``check_axiom`` evaluates one concrete instance
and reports whether the hypothesis failed, the conclusion held, or the
solution violated the axiom.
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Optional, Union

import numpy as np

from socialrank.catalog import SolutionRef, resolve
from socialrank.coalitions import coalition_sizes, submasks
from socialrank.models import (
    DataValidationError,
    PairwiseRelation,
    PowerRelation,
    SamePlayer,
    merge_tail,
    refine_class,
    split_class,
    swap_players,
)
from socialrank.solutions import cp_counts, k_dominance_sets, sdes_premise

logger = logging.getLogger("socialrank")

Solution = Union[SolutionRef, Callable[[PowerRelation], PairwiseRelation]]


class MalformedWitness(DataValidationError):
    """Used when a witness datum does not have the shape its axiom requires"""


class UnsatisfiableAtSize(DataValidationError):
    """Used when no witness for an axiom exists with the requested number of players"""


class Axiom(str, Enum):
    """Properties a social ranking solution may satisfy"""

    SDES = "SDes"
    SYM = "Sym"
    NEU = "Neu"
    EC = "EC"
    CA = "CA"
    PCA = "PCA"
    CAT = "CAT"
    IWS = "IWS"
    IBS = "IBS"
    KDD = "k-DD"
    CI = "CI"
    M = "M"

    @classmethod
    def parse(cls, text: str) -> "Axiom":
        """Case-insensitive lookup by name"""
        wanted = text.strip().lower()
        for axiom in cls:
            if axiom.value.lower() == wanted:
                return axiom
        raise DataValidationError(f"Unknown axiom {text!r}")


@dataclass(frozen=True)
class AxiomWitness:
    """
    One instance of an axiom's quantifiers

    ``bijection`` maps contexts (coalitions avoiding both players) to contexts
    for EC, CA and PCA. ``coalitions`` is the tie set split off for CAT and the
    lifted set for CI. ``partition`` holds the ordered blocks replacing the
    worst (IWS) or best (IBS) class.
    """

    axiom: Axiom
    relation: PowerRelation
    pair: tuple[int, int]
    other: Optional[PowerRelation] = None
    bijection: Optional[dict[int, int]] = field(default=None, hash=False)
    coalitions: tuple[int, ...] = ()
    partition: tuple[tuple[int, ...], ...] = ()


class Outcome(Enum):
    """Result of evaluating one axiom instance"""

    HYPOTHESIS_FAILS = "hypothesis_fails"
    HOLDS = "holds"
    VIOLATED = "violated"


@dataclass(frozen=True)
class Verdict:
    """Outcome of an axiom check together with the instance that produced it"""

    outcome: Outcome
    witness: AxiomWitness
    detail: str = ""

    @property
    def violated(self) -> bool:
        """The solution breaks the axiom on this instance"""
        return self.outcome is Outcome.VIOLATED


######################################################################
# Helpers
######################################################################
def _solver(solution: Solution) -> Callable[[PowerRelation], PairwiseRelation]:
    if isinstance(solution, SolutionRef):
        return resolve(solution)
    return solution


def _contexts(pr: PowerRelation, i: int, j: int) -> np.ndarray:
    return submasks(pr.players.full_mask & ~((1 << i) | (1 << j)))


def _other(witness: AxiomWitness) -> PowerRelation:
    if witness.other is None:
        raise MalformedWitness(f"{witness.axiom.value} needs a second power relation")
    if witness.other.players != witness.relation.players:
        raise MalformedWitness("Both power relations must share the player set")
    return witness.other


def _bijection_images(witness: AxiomWitness, contexts: np.ndarray) -> np.ndarray:
    """Image of every context, aligned with ``contexts``"""
    if witness.bijection is None:
        raise MalformedWitness(f"{witness.axiom.value} needs a bijection on the contexts")
    expected = set(contexts.tolist())
    mapping = {int(source): int(image) for source, image in witness.bijection.items()}
    if set(mapping) != expected or set(mapping.values()) != expected:
        raise MalformedWitness("The map must be a bijection on the coalitions avoiding both players")
    return np.array([mapping[int(source)] for source in contexts], dtype=np.int64)


def _signs(class_of: np.ndarray, first: np.ndarray, second: np.ndarray) -> np.ndarray:
    """Pairwise strength signs: entry [a, b] is +1 when ``first[a]`` beats ``second[b]``"""
    return np.sign(class_of[second][None, :].astype(np.int64) - class_of[first][:, None].astype(np.int64))


def _verdict(witness: AxiomWitness, holds: bool, detail: str) -> Verdict:
    outcome = Outcome.HOLDS if holds else Outcome.VIOLATED
    return Verdict(outcome, witness, "" if holds else detail)


def _hypothesis_fails(witness: AxiomWitness, reason: str) -> Verdict:
    return Verdict(Outcome.HYPOTHESIS_FAILS, witness, reason)


def _label(pr: PowerRelation, i: int) -> str:
    return pr.players.names[i]


######################################################################
# One predicate per axiom
######################################################################
def _check_sdes(solve, witness: AxiomWitness) -> Verdict:
    pr, (i, j) = witness.relation, witness.pair
    if not sdes_premise(pr, i, j):
        return _hypothesis_fails(witness, "the first player is not strictly desirable over the second")
    cell = solve(pr).cells[i, j]
    return _verdict(witness, cell == 1, f"{_label(pr, i)} is strictly desirable over {_label(pr, j)} but not ranked above")


def _check_sym(solve, witness: AxiomWitness) -> Verdict:
    pr, (i, j) = witness.relation, witness.pair
    counts = cp_counts(pr, i, j)
    if counts.d_ij or counts.d_ji:
        return _hypothesis_fails(witness, "the players are not symmetric")
    cell = solve(pr).cells[i, j]
    return _verdict(witness, cell == 0, f"symmetric players {_label(pr, i)} and {_label(pr, j)} are not tied")


def _check_neu(solve, witness: AxiomWitness) -> Verdict:
    pr, (i, j) = witness.relation, witness.pair
    other = _other(witness)
    # Only the exchange of the pair itself is checked, not arbitrary relabellings of the players
    if other != swap_players(pr, i, j):
        return _hypothesis_fails(witness, "the second relation is not the image under exchanging the players")
    before, after = solve(pr).cells[i, j], solve(other).cells[j, i]
    return _verdict(witness, before == after, "exchanging the players does not exchange their ranking")


def _check_ec(solve, witness: AxiomWitness) -> Verdict:
    pr, (i, j) = witness.relation, witness.pair
    other = _other(witness)
    contexts = _contexts(pr, i, j)
    images = _bijection_images(witness, contexts)
    bit_i, bit_j = 1 << i, 1 << j
    before = np.sign(pr.class_of[contexts | bit_j].astype(np.int64) - pr.class_of[contexts | bit_i])
    after = np.sign(other.class_of[images | bit_j].astype(np.int64) - other.class_of[images | bit_i])
    if not np.array_equal(before, after):
        return _hypothesis_fails(witness, "the map does not preserve the ceteris paribus comparisons")
    first, second = solve(pr).cells[i, j], solve(other).cells[i, j]
    return _verdict(witness, first == second, "equal ceteris paribus comparisons but different rankings")


def _check_anonymity(solve, witness: AxiomWitness, per_size: bool) -> Verdict:
    pr, (i, j) = witness.relation, witness.pair
    other = _other(witness)
    contexts = _contexts(pr, i, j)
    images = _bijection_images(witness, contexts)
    sizes = coalition_sizes(pr.n)
    if per_size and not np.array_equal(sizes[contexts], sizes[images]):
        raise MalformedWitness("The map must preserve coalition sizes")
    bit_i, bit_j = 1 << i, 1 << j
    before = _signs(pr.class_of, contexts | bit_i, contexts | bit_j)
    after = _signs(other.class_of, images | bit_i, contexts | bit_j)
    compared = np.ones(before.shape, dtype=bool)
    if per_size:
        compared = sizes[contexts][:, None] == sizes[contexts][None, :]
    if not np.array_equal(before[compared], after[compared]):
        return _hypothesis_fails(witness, "the map does not preserve the comparisons between the players' coalitions")
    first, second = solve(pr).cells[i, j], solve(other).cells[i, j]
    return _verdict(witness, first == second, "anonymous relabelling of coalitions changes the ranking")


def _check_cat(solve, witness: AxiomWitness) -> Verdict:
    pr, (i, j) = witness.relation, witness.pair
    other = _other(witness)
    omega = sorted(set(witness.coalitions))
    if not omega or 0 in omega:
        raise MalformedWitness("The split set must list nonempty coalitions")
    shared = pr.classes[int(pr.class_of[omega[0]]) - 1]
    if not set(shared).issuperset(omega) or len(omega) == len(shared):
        raise MalformedWitness("The split set must be a proper subset of one class")
    if other.classes[int(other.class_of[omega[0]]) - 1] != shared:
        raise MalformedWitness("Only ties inside a class common to both relations may be broken")
    solved, solved_other = solve(pr), solve(other)
    if solved.cells[i, j] != 0 or solved_other.cells[i, j] != 0:
        return _hypothesis_fails(witness, "the players are not tied in both relations")
    first = solve(split_class(pr, omega)).cells[i, j]
    second = solve(split_class(other, omega)).cells[i, j]
    return _verdict(witness, first == second, "breaking the same ties yields different rankings")


def _check_extreme_class(solve, witness: AxiomWitness, worst: bool) -> Verdict:
    pr, (i, j) = witness.relation, witness.pair
    index = pr.class_count if worst else 1
    blocks = [tuple(sorted(block)) for block in witness.partition]
    covered = sorted(mask for block in blocks for mask in block)
    if any(not block for block in blocks) or covered != list(pr.classes[index - 1]):
        raise MalformedWitness(f"The blocks must partition class {index}")
    if pr.class_count < 2:
        return _hypothesis_fails(witness, "a single class has no extreme class to refine")
    cell = solve(pr).cells[i, j]
    if cell == 0:
        return _hypothesis_fails(witness, "the players are tied")
    refined = solve(refine_class(pr, index, blocks)).cells[i, j]
    side = "worst" if worst else "best"
    return _verdict(witness, refined == cell, f"refining the {side} class reverses a strict ranking")


def _check_kdd(solve, witness: AxiomWitness) -> Verdict:
    pr, (i, j) = witness.relation, witness.pair
    if pr.class_count != 2:
        return _hypothesis_fails(witness, "the relation is not dichotomous")
    profile = k_dominance_sets(pr, i, j)
    if profile.incomparable or not profile.strict_i or not profile.strict_j:
        return _hypothesis_fails(witness, "dominance is not decided size by size in both directions")
    expected = 1 if min(profile.strict_i) < min(profile.strict_j) else -1
    cell = solve(pr).cells[i, j]
    return _verdict(witness, cell == expected, "the player dominating at the smaller size is not ranked above")


def _check_ci(solve, witness: AxiomWitness) -> Verdict:
    pr, (i, j) = witness.relation, witness.pair
    lifted = sorted(set(witness.coalitions))
    if pr.class_count < 2:
        return _hypothesis_fails(witness, "a single class has nothing to merge")
    last = set(pr.classes[-1])
    if not last.issuperset(lifted) or len(lifted) == len(last):
        raise MalformedWitness("The lifted set must be a proper subset of the last class")
    if solve(pr).cells[i, j] != 0:
        return _hypothesis_fails(witness, "the players are not tied")
    merged, dichotomous = merge_tail(pr, lifted)
    first, second = solve(merged).cells[i, j], solve(dichotomous).cells[i, j]
    return _verdict(witness, first == second, "the merged and dichotomous relations rank the players differently")


def _check_m(solve, witness: AxiomWitness) -> Verdict:
    pr, (i, j) = witness.relation, witness.pair
    other = _other(witness)
    masks = np.arange(1, 1 << pr.n, dtype=np.int64)
    improving = ((masks >> i) & 1 == 1) & ((masks >> j) & 1 == 0)
    before = _signs(pr.class_of, masks, masks)
    after = _signs(other.class_of, masks, masks)
    fixed = ~improving[:, None] & ~improving[None, :]
    among = improving[:, None] & improving[None, :]
    against = improving[:, None] & ~improving[None, :]
    if (
        not np.array_equal(before[fixed], after[fixed])
        or not np.array_equal(before[among], after[among])
        or np.any(after[against] < before[against])
        or not np.any(after[against] > before[against])
    ):
        return _hypothesis_fails(witness, "the second relation is not a strict improvement of the first player's coalitions")
    if solve(pr).cells[i, j] != 0:
        return _hypothesis_fails(witness, "the players are not tied before the improvement")
    cell = solve(other).cells[i, j]
    return _verdict(witness, cell == 1, f"improving {_label(pr, i)}'s coalitions does not rank it above {_label(pr, j)}")


_PREDICATES = {
    Axiom.SDES: _check_sdes,
    Axiom.SYM: _check_sym,
    Axiom.NEU: _check_neu,
    Axiom.EC: _check_ec,
    Axiom.CA: lambda solve, witness: _check_anonymity(solve, witness, per_size=False),
    Axiom.PCA: lambda solve, witness: _check_anonymity(solve, witness, per_size=True),
    Axiom.CAT: _check_cat,
    Axiom.IWS: lambda solve, witness: _check_extreme_class(solve, witness, worst=True),
    Axiom.IBS: lambda solve, witness: _check_extreme_class(solve, witness, worst=False),
    Axiom.KDD: _check_kdd,
    Axiom.CI: _check_ci,
    Axiom.M: _check_m,
}


def check_axiom(axiom: Axiom, solution: Solution, witness: AxiomWitness) -> Verdict:
    """
    Evaluates one axiom instance against a solution

    Args:
        axiom (Axiom): the property to check
        solution: a catalogued SolutionRef or any PowerRelation -> PairwiseRelation function
        witness (AxiomWitness): the relations, players and datum of the instance

    Raises:
        MalformedWitness: when the datum does not fit the axiom
        SamePlayer: when both players of the pair coincide
    """
    axiom = Axiom(axiom)
    if witness.axiom is not axiom:
        raise MalformedWitness(f"A {witness.axiom.value} witness cannot instantiate {axiom.value}")
    i, j = witness.pair
    witness.relation.players.check_index(i)
    witness.relation.players.check_index(j)
    if i == j:
        raise SamePlayer("An axiom instance needs two distinct players")
    verdict = _PREDICATES[axiom](_solver(solution), witness)
    logger.debug("%s on %r: %s", axiom.value, witness.relation, verdict.outcome.value)
    return verdict


def lift_sym_to_neu(witness: AxiomWitness) -> AxiomWitness:
    """Neutrality instance exchanging the pair of a symmetry instance"""
    if witness.axiom is not Axiom.SYM:
        raise MalformedWitness("Only symmetry instances can be lifted")
    i, j = witness.pair
    return AxiomWitness(Axiom.NEU, witness.relation, witness.pair, other=swap_players(witness.relation, i, j))
