"""
Axiom witnesses

``generate_witness`` builds a random instance of an axiom whose hypothesis
holds by construction: the second relation is derived from the first and the
sampled datum instead of being drawn independently. Hypotheses that mention
the solution's own output (ties or strict rankings) are met by rejection
sampling when a solution is supplied and by a symmetric or strictly desirable
construction otherwise.

``fixtures()`` holds hand-built instances known to refute specific solutions;
the grid evaluates them before any random trial.
"""
import logging
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional

import numpy as np

from socialrank import config
from socialrank.axioms import Axiom, AxiomWitness, MalformedWitness, Outcome, Solution, UnsatisfiableAtSize, check_axiom
from socialrank.catalog import SolutionRef
from socialrank.coalitions import coalition_sizes, submasks, swap_bits
from socialrank.formats import parse_power_relation, serialize_power_relation
from socialrank.models import (
    IntransitivityReport,
    ParseError,
    PlayerSet,
    PowerRelation,
    SizeOutOfRange,
    power_relation_from_levels,
    swap_players,
)
from socialrank.sampling import random_levels, random_power_relation, symmetric_levels, symmetric_power_relation
from socialrank.solutions import cp_majority

logger = logging.getLogger("socialrank")

MIN_PLAYERS = 2
MAX_PLAYERS = 6

# Small class counts make ties between players likely
CANDIDATE_MAX_CLASSES = 3


######################################################################
# Random construction helpers
######################################################################
def _contexts(players: PlayerSet, i: int, j: int) -> np.ndarray:
    return submasks(players.full_mask & ~((1 << i) | (1 << j)))


def _orbits(masks, i: int, j: int) -> list[tuple[int, ...]]:
    """Group coalitions into the orbits of exchanging players i and j"""
    seen = set()
    orbits = []
    for mask in masks:
        mask = int(mask)
        if mask in seen:
            continue
        image = int(swap_bits(np.array([mask]), i, j)[0])
        orbit = tuple(sorted({mask, image}))
        seen.update(orbit)
        orbits.append(orbit)
    return orbits


def _random_bijection(contexts: np.ndarray, rng: np.random.Generator, per_size: bool) -> dict[int, int]:
    if not per_size:
        return dict(zip(contexts.tolist(), rng.permutation(contexts).tolist()))
    sizes = coalition_sizes(int(contexts.max()).bit_length())[contexts]
    mapping = {}
    for size in np.unique(sizes):
        group = contexts[sizes == size]
        mapping.update(zip(group.tolist(), rng.permutation(group).tolist()))
    return mapping


def _random_partition(members, rng: np.random.Generator) -> tuple[tuple[int, ...], ...]:
    """Ordered blocks covering ``members``, none empty"""
    members = list(members)
    count = int(rng.integers(1, len(members) + 1))
    labels = rng.integers(0, count, size=len(members))
    blocks = [tuple(sorted(m for m, label in zip(members, labels) if label == b)) for b in range(count)]
    return tuple(block for block in blocks if block)


def _strictly_desirable(players: PlayerSet, i: int, j: int, rng: np.random.Generator) -> PowerRelation:
    """S + i at least as strong as S + j for every context, strictly for one"""
    levels = random_levels(players, rng).astype(float)
    contexts = _contexts(players, i, j)
    with_i, with_j = contexts | (1 << i), contexts | (1 << j)
    levels[with_i] = np.minimum(levels[with_i], levels[with_j])
    decisive = int(rng.choice(contexts))
    levels[decisive | (1 << i)] = levels[decisive | (1 << j)] - 0.5
    return power_relation_from_levels(players, levels)


def _candidates(players: PlayerSet, rng: np.random.Generator, solution: Optional[Solution]) -> Iterator[PowerRelation]:
    """Random relations to try against a solution-dependent hypothesis"""
    if solution is None:
        return
    for _ in range(config.WITNESS_ATTEMPTS):
        yield random_power_relation(players, rng, CANDIDATE_MAX_CLASSES)


def _accepts(axiom: Axiom, solution: Optional[Solution], witness: AxiomWitness) -> bool:
    try:
        return check_axiom(axiom, solution, witness).outcome is not Outcome.HYPOTHESIS_FAILS
    except MalformedWitness:
        return False


######################################################################
# Generators
######################################################################
def _sdes(players, i, j, rng, _solution):
    return AxiomWitness(Axiom.SDES, _strictly_desirable(players, i, j, rng), (i, j))


def _sym(players, i, j, rng, _solution):
    return AxiomWitness(Axiom.SYM, symmetric_power_relation(players, i, j, rng), (i, j))


def _neu(players, i, j, rng, _solution):
    pr = random_power_relation(players, rng)
    return AxiomWitness(Axiom.NEU, pr, (i, j), other=swap_players(pr, i, j))


def _ec(players, i, j, rng, _solution):
    pr = random_power_relation(players, rng)
    contexts = _contexts(players, i, j)
    bijection = _random_bijection(contexts, rng, per_size=False)
    images = np.array([bijection[int(context)] for context in contexts], dtype=np.int64)
    signs = np.sign(pr.class_of[contexts | (1 << j)].astype(np.int64) - pr.class_of[contexts | (1 << i)])
    levels = random_levels(players, rng).astype(float)
    levels[images | (1 << i)] = levels[images | (1 << j)] - 0.5 * signs
    other = power_relation_from_levels(players, levels)
    return AxiomWitness(Axiom.EC, pr, (i, j), other=other, bijection=bijection)


def _anonymity(axiom: Axiom, per_size: bool):
    def generate(players, i, j, rng, _solution):
        pr = random_power_relation(players, rng)
        contexts = _contexts(players, i, j)
        bijection = _random_bijection(contexts, rng, per_size)
        images = np.array([bijection[int(context)] for context in contexts], dtype=np.int64)
        levels = pr.class_of.astype(float)
        levels[images | (1 << i)] = pr.class_of[contexts | (1 << i)]
        other = power_relation_from_levels(players, levels)
        return AxiomWitness(axiom, pr, (i, j), other=other, bijection=bijection)

    return generate


def _cat_witness(pr: PowerRelation, i: int, j: int, rng: np.random.Generator, symmetric: bool) -> Optional[AxiomWitness]:
    shared = [block for block in pr.classes if len(block) >= 2]
    if not shared:
        return None
    block = shared[int(rng.integers(len(shared)))]
    chosen = rng.random(len(block)) < 0.5
    if chosen.all() or not chosen.any():
        chosen[:] = False
        chosen[int(rng.integers(len(block)))] = True
    omega = tuple(mask for mask, keep in zip(block, chosen) if keep)
    levels = random_levels(pr.players, rng, pr.class_count + 1).astype(float)
    if symmetric:
        levels = symmetric_levels(levels, i, j)
    levels[list(block)] = int(rng.integers(-1, int(levels.max()) + 1)) + 0.5
    other = power_relation_from_levels(pr.players, levels)
    return AxiomWitness(Axiom.CAT, pr, (i, j), other=other, coalitions=omega)


def _cat(players, i, j, rng, solution):
    for pr in _candidates(players, rng, solution):
        witness = _cat_witness(pr, i, j, rng, symmetric=False)
        if witness is not None and _accepts(Axiom.CAT, solution, witness):
            return witness
    return _cat_witness(symmetric_power_relation(players, i, j, rng), i, j, rng, symmetric=True)


def _extreme_class(axiom: Axiom, worst: bool):
    def with_partition(pr: PowerRelation, i: int, j: int, rng) -> AxiomWitness:
        block = pr.classes[-1] if worst else pr.classes[0]
        return AxiomWitness(axiom, pr, (i, j), partition=_random_partition(block, rng))

    def generate(players, i, j, rng, solution):
        for pr in _candidates(players, rng, solution):
            witness = with_partition(pr, i, j, rng)
            if pr.class_count >= 2 and _accepts(axiom, solution, witness):
                return witness
        return with_partition(_strictly_desirable(players, i, j, rng), i, j, rng)

    return generate


def _kdd(players, i, j, rng, _solution):
    n = players.n
    if n < 3:
        raise UnsatisfiableAtSize(f"k-DD needs dominance in both directions, impossible with {n} players")
    first, second = sorted(rng.choice(n - 1, 2, replace=False).tolist())
    states = {}
    for size in range(n - 1):
        if size == first:
            states[size] = "i"
        elif size == second:
            states[size] = "j"
        elif size < first:
            states[size] = "tie"
        elif size < second:
            states[size] = ["i", "tie"][int(rng.integers(2))]
        else:
            states[size] = ["i", "j", "tie"][int(rng.integers(3))]

    levels = rng.integers(0, 2, size=1 << n)
    contexts = _contexts(players, i, j)
    sizes = coalition_sizes(n)[contexts]
    for size, state in states.items():
        group = contexts[sizes == size]
        with_i, with_j = group | (1 << i), group | (1 << j)
        if state == "tie":
            levels[with_i] = levels[with_j]
            continue
        winner, loser = (with_i, with_j) if state == "i" else (with_j, with_i)
        levels[winner] = np.minimum(levels[winner], levels[loser])
        decisive = int(rng.integers(len(group)))
        levels[winner[decisive]], levels[loser[decisive]] = 0, 1
    return AxiomWitness(Axiom.KDD, power_relation_from_levels(players, levels), (i, j))


def _ci(players, i, j, rng, solution):
    for pr in _candidates(players, rng, solution):
        if pr.class_count < 2:
            continue
        last = pr.classes[-1]
        lifted = tuple(mask for mask in last if rng.random() < 0.5)
        if len(lifted) == len(last):
            lifted = lifted[1:]
        witness = AxiomWitness(Axiom.CI, pr, (i, j), coalitions=lifted)
        if _accepts(Axiom.CI, solution, witness):
            return witness

    levels = symmetric_levels(random_levels(players, rng), i, j)
    if np.unique(levels[1:]).size < 2:
        levels[players.full_mask] = levels.min() - 1
    pr = power_relation_from_levels(players, levels)
    orbits = _orbits(pr.classes[-1], i, j)
    keep = rng.random(len(orbits)) < 0.5
    keep[int(rng.integers(len(orbits)))] = False
    lifted = tuple(sorted(mask for orbit, chosen in zip(orbits, keep) if chosen for mask in orbit))
    return AxiomWitness(Axiom.CI, pr, (i, j), coalitions=lifted)


def _improve(pr: PowerRelation, i: int, j: int, rng: np.random.Generator) -> Optional[AxiomWitness]:
    """Raise the only coalition of its class containing i but not j just above that class"""
    lonely = []
    for k, block in enumerate(pr.classes, start=1):
        own = [mask for mask in block if mask >> i & 1 and not mask >> j & 1]
        if len(own) == 1:
            lonely.append((k, own[0]))
    if not lonely:
        return None
    k, mask = lonely[int(rng.integers(len(lonely)))]
    levels = pr.class_of.astype(float)
    levels[mask] = k - 0.5
    other = power_relation_from_levels(pr.players, levels)
    return AxiomWitness(Axiom.M, pr, (i, j), other=other)


def _monotonicity(players, i, j, rng, solution):
    for pr in _candidates(players, rng, solution):
        witness = _improve(pr, i, j, rng)
        if witness is not None and _accepts(Axiom.M, solution, witness):
            return witness
    low = np.zeros(1 << players.n)
    low[[1 << i, 1 << j]] = 1
    return _improve(power_relation_from_levels(players, low), i, j, rng)


_GENERATORS = {
    Axiom.SDES: _sdes,
    Axiom.SYM: _sym,
    Axiom.NEU: _neu,
    Axiom.EC: _ec,
    Axiom.CA: _anonymity(Axiom.CA, per_size=False),
    Axiom.PCA: _anonymity(Axiom.PCA, per_size=True),
    Axiom.CAT: _cat,
    Axiom.IWS: _extreme_class(Axiom.IWS, worst=True),
    Axiom.IBS: _extreme_class(Axiom.IBS, worst=False),
    Axiom.KDD: _kdd,
    Axiom.CI: _ci,
    Axiom.M: _monotonicity,
}


def generate_witness(axiom: Axiom, n: int, seed: int, solution: Optional[Solution] = None) -> AxiomWitness:
    """
    Random instance of an axiom whose hypothesis holds

    Args:
        axiom (Axiom): the property to instantiate
        n (int): number of players, 2..6
        seed (int): makes the instance reproducible
        solution: when given, random relations are tried against solution-dependent
            hypotheses before falling back to a construction that every main solution accepts

    Raises:
        SizeOutOfRange: when n is outside 2..6
        UnsatisfiableAtSize: when no instance exists with n players
    """
    axiom = Axiom(axiom)
    if not MIN_PLAYERS <= n <= MAX_PLAYERS:
        raise SizeOutOfRange(f"Witnesses need {MIN_PLAYERS}..{MAX_PLAYERS} players, got {n}")
    rng = np.random.default_rng(seed)
    players = PlayerSet.of_size(n)
    i, j = (int(player) for player in rng.choice(n, 2, replace=False))
    return _GENERATORS[axiom](players, i, j, rng, solution)


def find_cp_intransitivity(n: int, seed: int, limit: int) -> Optional[tuple[PowerRelation, IntransitivityReport]]:
    """Search random relations for one whose CP-majority is not transitive"""
    rng = np.random.default_rng(seed)
    players = PlayerSet.of_size(n)
    for attempt in range(limit):
        pr = random_power_relation(players, rng)
        relation = cp_majority(pr)
        triple = relation.intransitivity_witness()
        if triple is not None:
            logger.info("Intransitive CP-majority found after %d relations", attempt + 1)
            return pr, IntransitivityReport(relation, triple)
    logger.info("No intransitive CP-majority among %d relations", limit)
    return None


######################################################################
# Fixtures
######################################################################
@dataclass(frozen=True)
class Fixture:
    """Hand-built axiom instance and the solutions it refutes"""

    name: str
    witness: AxiomWitness
    refutes: tuple[SolutionRef, ...]


def _relation(labels: str, ranking: str) -> PowerRelation:
    return parse_power_relation(f"players: {labels}\nranking: {ranking}")


def _swap_contexts(pr: PowerRelation, pairs: dict[str, str]) -> dict[int, int]:
    """Bijection on contexts of players i and j given by label pairs, identity elsewhere"""
    players = pr.players
    contexts = _contexts(players, players.index("i"), players.index("j"))
    mapping = {int(context): int(context) for context in contexts}
    for source, image in pairs.items():
        mapping[players.mask_of(source)] = players.mask_of(image)
    return mapping


def _masks(pr: PowerRelation, *coalitions: str) -> tuple[int, ...]:
    return tuple(pr.players.mask_of(coalition) for coalition in coalitions)


@lru_cache(maxsize=None)
def fixtures() -> dict[Axiom, tuple[Fixture, ...]]:
    """Hand-built instances per axiom, each with the solutions it refutes"""
    collected: dict[Axiom, list[Fixture]] = {axiom: [] for axiom in Axiom}

    def add(name, witness, *refutes):
        collected[witness.axiom].append(Fixture(name, witness, refutes))

    example = _relation("1 2 3", "{1,3} ~ {1,2,3} > {1,2} ~ {2,3} > {1} ~ {2} ~ {3}")
    add(
        "strictly-desirable-pair",
        AxiomWitness(Axiom.SDES, example, (0, 1)),
        SolutionRef.ID,
        SolutionRef.SD_REVERSED,
        SolutionRef.IW_SHIFTED_THETA,
        SolutionRef.IW_SHIFTED_MATRIX,
        SolutionRef.CI_MINIMAL_THETA,
    )

    # Index tie-breaking ranks the first player above the second on a single class
    by_index = (SolutionRef.N_INDEX, SolutionRef.S_INDEX, SolutionRef.S_INDEX_L1)
    single = _relation("i j", "*")
    add("single-class-exchange", AxiomWitness(Axiom.NEU, single, (0, 1), other=single), *by_index)
    add("single-class-symmetry", AxiomWitness(Axiom.SYM, single, (0, 1)), *by_index)

    pr = _relation("i j k", "{i,k} > {j,k} > {j} > {i} > *")
    other = _relation("i j k", "{j} > {i} > {i,k} > {j,k} > *")
    add(
        "equal-comparisons-different-classes",
        AxiomWitness(Axiom.EC, pr, (0, 1), other=other, bijection=_swap_contexts(pr, {})),
        SolutionRef.LEXCEL,
        SolutionRef.DUAL_LEX,
        SolutionRef.L1,
        SolutionRef.L1_STAR,
        SolutionRef.CAT_PER_CLASS,
    )
    pr = _relation("i j k", "{i} > {j,k} > *")
    other = _relation("i j k", "{j} > {i,k} > *")
    swap = _swap_contexts(pr, {"": "k", "k": ""})
    add("singletons-first", AxiomWitness(Axiom.EC, pr, (0, 1), other=other, bijection=swap), SolutionRef.EC_EMPTY)

    pr = _relation("i j k", "{i} ~ {j,k} > {j} ~ {k} ~ {i,j} ~ {i,k} ~ {i,j,k}")
    other = _relation("i j k", "{j} ~ {i,k} > {i} ~ {j,k} > {k} ~ {i,j} ~ {i,j,k}")
    add(
        "tie-broken-by-class",
        AxiomWitness(Axiom.CAT, pr, (0, 1), other=other, coalitions=_masks(pr, "i")),
        SolutionRef.CAT_PER_CLASS,
    )

    pr = _relation("i j k", "{j} > {i,k} > {j,k} ~ {i} > *")
    other = _relation("i j k", "{j} > {i} > {j,k} ~ {i,k} > *")
    add("relabelled-contexts", AxiomWitness(Axiom.CA, pr, (0, 1), other=other, bijection=swap), SolutionRef.CP)
    pr = _relation("i j k", "{i,k} ~ {j} > *")
    other = _relation("i j k", "{i} ~ {j} > *")
    add(
        "relabelled-sizes",
        AxiomWitness(Axiom.CA, pr, (0, 1), other=other, bijection=swap),
        SolutionRef.L1,
        SolutionRef.L1_STAR,
    )
    pr = _relation("i j k", "{i,k} ~ {j,k} > *")
    other = _relation("i j k", "{i} ~ {j,k} > *")
    add("relabelled-largest", AxiomWitness(Axiom.CA, pr, (0, 1), other=other, bijection=swap), SolutionRef.CA_LARGEST_SET)

    swap_kl = {"k": "l", "l": "k"}
    pr = _relation("i j k l", "{j,l} > {i,k} > {j,k} ~ {i,l} > *")
    other = _relation("i j k l", "{j,l} > {i,l} > {j,k} ~ {i,k} > *")
    add(
        "same-size-relabelling",
        AxiomWitness(Axiom.PCA, pr, (0, 1), other=other, bijection=_swap_contexts(pr, swap_kl)),
        SolutionRef.CP,
    )
    pr = _relation("i j k l", "{i,k} ~ {j,l} > *")
    other = _relation("i j k l", "{i,l} ~ {j,l} > *")
    add(
        "same-size-partners",
        AxiomWitness(Axiom.PCA, pr, (0, 1), other=other, bijection=_swap_contexts(pr, swap_kl)),
        SolutionRef.PCA_MIN_PARTNER,
    )

    pr = _relation("i j k", "{i} > *")
    worst = (_masks(pr, "jk", "ij", "ijk", "j", "k"), _masks(pr, "ik"))
    add(
        "worst-class-split",
        AxiomWitness(Axiom.IWS, pr, (0, 1), partition=worst),
        SolutionRef.CP,
        SolutionRef.DUAL_LEX,
        SolutionRef.L1_STAR,
    )
    shifted = (_masks(pr, "ik", "ij", "ijk"), _masks(pr, "j", "k", "jk"))
    add(
        "worst-class-shift",
        AxiomWitness(Axiom.IWS, pr, (0, 1), partition=shifted),
        SolutionRef.IW_SHIFTED_THETA,
        SolutionRef.IW_SHIFTED_MATRIX,
    )

    # Tied on every statistic but the pair partners, then {j} is lifted out of the worst class
    pr = _relation("i j k l", "{i,k} ~ {j,l} > *")
    lifted = _masks(pr, "j")
    rest = tuple(mask for mask in pr.classes[-1] if mask not in lifted)
    add(
        "tie-break-refined",
        AxiomWitness(Axiom.IWS, pr, (0, 1), partition=(lifted, rest)),
        SolutionRef.PCA_MIN_PARTNER,
        *by_index,
    )

    pr = _relation("i j k", "{i} ~ {k} ~ {i,j} ~ {i,k} ~ {j,k} ~ {i,j,k} > {j}")
    best = (_masks(pr, "jk"), _masks(pr, "i", "k", "ij", "ik", "ijk"))
    add(
        "best-class-split",
        AxiomWitness(Axiom.IBS, pr, (0, 1), partition=best),
        SolutionRef.CP,
        SolutionRef.LEXCEL,
        SolutionRef.L1,
    )

    dominance = (SolutionRef.CP, SolutionRef.LEXCEL, SolutionRef.DUAL_LEX)
    pr = _relation("i j k l", "{i} ~ {j,k} ~ {j,l} > *")
    add("singleton-against-pairs", AxiomWitness(Axiom.KDD, pr, (0, 1)), *dominance)
    pr = _relation("1 2 3", "{1,2,3} ~ {1,2} ~ {2,3} ~ {1} > {1,3} ~ {2} ~ {3}")
    add("dominance-by-size", AxiomWitness(Axiom.KDD, pr, (0, 1)), *dominance)
    pr = _relation("i j k l", "{i} ~ {j,k} ~ {j,l} ~ {i,k,l} > *")
    add("dominance-at-both-ends", AxiomWitness(Axiom.KDD, pr, (0, 1)), SolutionRef.KD_REVERSED, *dominance)

    pr = _relation("i j k l", "{j,k} ~ {j,l} > {i,k} ~ {i,l} ~ {i} ~ {i,k,l} > *")
    add("lift-singleton", AxiomWitness(Axiom.CI, pr, (0, 1), coalitions=_masks(pr, "j")), SolutionRef.CP)
    pr = _relation("i j k l", "{i} ~ {j} > {i,k,l} ~ {j,k,l} > *")
    add(
        "lift-pairs-to-triples",
        AxiomWitness(Axiom.CI, pr, (0, 1), coalitions=_masks(pr, "ik", "il")),
        SolutionRef.CI_MINIMAL_THETA,
    )

    return {axiom: tuple(entries) for axiom, entries in collected.items()}


######################################################################
# Witness files
######################################################################
COALITION = re.compile(r"\{([^}]*)\}")


def serialize_witness(witness: AxiomWitness) -> str:
    """Witness as text: header comments, relation sections and the datum"""
    pr = witness.relation
    players = pr.players
    i, j = witness.pair
    lines = [
        f"# axiom: {witness.axiom.value}",
        f"# pair: {players.names[i]} {players.names[j]}",
        "[relation]",
        serialize_power_relation(pr),
    ]
    if witness.other is not None:
        lines += ["[other]", serialize_power_relation(witness.other)]
    lines.append("[datum]")
    if witness.bijection is not None:
        for source, image in sorted(witness.bijection.items()):
            lines.append(f"map: {players.format(source)} -> {players.format(image)}")
    if witness.coalitions:
        lines.append("coalitions: " + " ".join(players.format(mask) for mask in witness.coalitions))
    for block in witness.partition:
        lines.append("block: " + " ".join(players.format(mask) for mask in block))
    return "\n".join(lines) + "\n"


def _coalitions(players: PlayerSet, text: str) -> tuple[int, ...]:
    return tuple(players.mask_of(filter(None, body.split(","))) for body in COALITION.findall(text))


def parse_witness(text: str) -> AxiomWitness:
    """Reads back a witness written by ``serialize_witness``"""
    header = {}
    sections: dict[str, list[str]] = {}
    current = None
    for number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if stripped.startswith("#") and ":" in stripped and current is None:
            key, value = stripped[1:].split(":", 1)
            header[key.strip()] = value.split()
        elif stripped.startswith("[") and stripped.endswith("]"):
            current = stripped[1:-1]
            sections[current] = []
        elif stripped:
            if current is None:
                raise ParseError("content before the first section", number, 1)
            sections[current].append(line)

    if "axiom" not in header or "pair" not in header or "relation" not in sections:
        raise ParseError("a witness needs '# axiom', '# pair' and a [relation] section", 1, 1)
    pr = parse_power_relation("\n".join(sections["relation"]))
    other = parse_power_relation("\n".join(sections["other"])) if "other" in sections else None
    first, second = header["pair"]
    bijection, coalitions, partition = None, (), []
    for line in sections.get("datum", []):
        key, _, rest = line.partition(":")
        key = key.strip()
        if key == "map":
            source, image = _coalitions(pr.players, rest)
            if bijection is None:
                bijection = {}
            bijection[source] = image
        elif key == "coalitions":
            coalitions = _coalitions(pr.players, rest)
        elif key == "block":
            partition.append(_coalitions(pr.players, rest))
    return AxiomWitness(
        Axiom.parse(header["axiom"][0]),
        pr,
        (pr.players.index(first), pr.players.index(second)),
        other=other,
        bijection=bijection,
        coalitions=coalitions,
        partition=tuple(partition),
    )
