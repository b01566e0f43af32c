"""
The States General of the Netherlands

Seventeen parties voting in a Lower House of 150 seats and an Upper House of
75, each passing with a strict majority. The coalitional ranking induced by
the bicameral game is ranked by every solution and checked against the
reference values embedded below.
"""
import logging
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from socialrank.games import House, MulticameralGame, game_to_power_relation
from socialrank.models import PlayerSet, RankingOutput, ranks_from_pairwise
from socialrank.solutions import SOLUTIONS, cp_matrix, player_statistics

logger = logging.getLogger("socialrank")

# label, lower house seats, upper house seats
PARTIES = (
    ("VVD", 40, 13),
    ("PvdA", 36, 8),
    ("SP", 15, 9),
    ("CDA", 13, 12),
    ("D66", 12, 10),
    ("PVV", 12, 9),
    ("CU", 5, 3),
    ("GL", 4, 4),
    ("SGP", 3, 2),
    ("PvdD", 2, 2),
    ("GrKO", 2, 0),
    ("GrBvK", 2, 0),
    ("50PLUS", 1, 2),
    ("Houwers", 1, 0),
    ("Klein", 1, 0),
    ("VanVliet", 1, 0),
    ("OSF", 0, 1),
)
QUOTAS = (76, 38)

# Methods with published reference ranks, then the dual methods
REFERENCE_METHODS = ("lexcel", "l1", "cp")
DUAL_METHODS = ("duallex", "l1star")

EXPECTED_RANKS = {
    "lexcel": (1, 2, 4, 3, 5, 6, 8, 7, 9, 10, 12, 12, 11, 15, 15, 15, 14),
    "l1": (1, 2, 4, 3, 5, 6, 8, 7, 9, 10, 13, 13, 11, 15, 15, 15, 12),
    "cp": (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 12, 11, 14, 14, 14, 17),
}

EXPECTED_THETA = {
    "GrKO": (28838, 4442, 32256),
    "OSF": (28747, 3517, 33272),
}

# Rows for coalition sizes 1..7, then the grand coalition row
EXPECTED_MATRIX_ROWS = {
    "GrKO": ((0, 0, 1), (0, 0, 16), (0, 1, 119), (0, 14, 546), (12, 86, 1722), (161, 307, 3900), (910, 696, 6402)),
    "OSF": ((0, 0, 1), (0, 0, 16), (0, 1, 119), (0, 14, 546), (13, 84, 1723), (159, 284, 3925), (886, 581, 6541)),
}
EXPECTED_LAST_ROW = (1, 0, 0)

CP_PLAYERS = ("GrKO", "VanVliet", "OSF")
EXPECTED_CP_SUBMATRIX = ((0, 512, 1016), (0, 0, 504), (405, 437, 0))


def case_study_game() -> MulticameralGame:
    """The embedded bicameral game"""
    players = PlayerSet(tuple(label for label, _, _ in PARTIES))
    houses = tuple(House(tuple(party[h + 1] for party in PARTIES), QUOTAS[h]) for h in range(len(QUOTAS)))
    return MulticameralGame(players, houses)


@dataclass
class CaseStudyReport:
    """Computed values of the case study next to their references"""

    players: PlayerSet
    rankings: dict = field(default_factory=dict)
    theta: dict = field(default_factory=dict)
    matrices: dict = field(default_factory=dict)
    cp_submatrix: Optional[np.ndarray] = None

    def mismatches(self) -> list[str]:
        """One message per computed value that differs from its reference"""
        problems = []
        for method in REFERENCE_METHODS:
            ranking = self.rankings[method]
            if not isinstance(ranking, RankingOutput):
                problems.append(f"{method}: relation is not transitive")
                continue
            for label, expected, actual in zip(self.players.names, EXPECTED_RANKS[method], ranking.ranks):
                if expected != actual:
                    problems.append(f"{method} rank of {label}: expected {expected}, got {actual}")
        for label, expected in EXPECTED_THETA.items():
            if tuple(self.theta[label]) != expected:
                problems.append(f"theta of {label}: expected {expected}, got {tuple(self.theta[label])}")
        for label, rows in EXPECTED_MATRIX_ROWS.items():
            matrix = self.matrices[label]
            for size, expected in enumerate(rows, start=1):
                if tuple(matrix[size - 1]) != expected:
                    problems.append(f"matrix of {label}, size {size}: expected {expected}, got {tuple(matrix[size - 1])}")
            if tuple(matrix[-1]) != EXPECTED_LAST_ROW:
                problems.append(f"matrix of {label}, last row: expected {EXPECTED_LAST_ROW}, got {tuple(matrix[-1])}")
        if not np.array_equal(self.cp_submatrix, np.array(EXPECTED_CP_SUBMATRIX)):
            problems.append(f"CP submatrix: expected {EXPECTED_CP_SUBMATRIX}, got {self.cp_submatrix.tolist()}")
        return problems

    def render(self) -> str:
        """Aligned text report"""
        lines = ["Ranks"]
        methods = REFERENCE_METHODS + DUAL_METHODS
        lines.append(f"{'party':<10}" + "".join(f"{method:>10}" for method in methods))
        for index, label in enumerate(self.players.names):
            cells = []
            for method in methods:
                ranking = self.rankings[method]
                cells.append(f"{ranking.ranks[index] if isinstance(ranking, RankingOutput) else '-':>10}")
            lines.append(f"{label:<10}" + "".join(cells))
        lines.append(f"({', '.join(DUAL_METHODS)}: no published reference)")
        lines.append("")
        lines.append("Theta")
        for label, counts in self.theta.items():
            lines.append(f"{label:<10}" + " ".join(str(count) for count in counts))
        for label, matrix in self.matrices.items():
            lines.append("")
            lines.append(f"L1 matrix of {label}")
            for size, row in enumerate(matrix, start=1):
                lines.append(f"{size:>3}: " + " ".join(f"{count:>6}" for count in row))
        lines.append("")
        lines.append("CP comparisons")
        lines.append(f"{'':<10}" + "".join(f"{label:>10}" for label in CP_PLAYERS))
        for label, row in zip(CP_PLAYERS, self.cp_submatrix):
            lines.append(f"{label:<10}" + "".join(f"{count:>10}" for count in row))
        return "\n".join(lines)


def run_case_study() -> CaseStudyReport:
    """Computes every value the case study reports"""
    game = case_study_game()
    pr = game_to_power_relation(game)
    players = pr.players
    report = CaseStudyReport(players)
    for method in REFERENCE_METHODS + DUAL_METHODS:
        report.rankings[method] = ranks_from_pairwise(SOLUTIONS[method](pr))

    stats = player_statistics(pr)
    for label in EXPECTED_THETA:
        index = players.index(label)
        report.theta[label] = stats.theta[index].tolist()
        report.matrices[label] = stats.matrices[index].tolist()

    indices = [players.index(label) for label in CP_PLAYERS]
    report.cp_submatrix = cp_matrix(pr)[np.ix_(indices, indices)]
    logger.info("Case study computed for %d parties", players.n)
    return report
