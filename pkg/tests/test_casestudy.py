"""
Test cases for the parliamentary case study
"""

from dataclasses import replace
from unittest import TestCase

from socialrank.casestudy import (
    DUAL_METHODS,
    EXPECTED_CP_SUBMATRIX,
    EXPECTED_RANKS,
    EXPECTED_THETA,
    PARTIES,
    QUOTAS,
    case_study_game,
    run_case_study,
)
from socialrank.games import game_to_power_relation
from socialrank.models import RankingOutput


class TestCaseStudy(TestCase):
    """The bicameral game of seventeen parties"""

    @classmethod
    def setUpClass(cls):
        cls.report = run_case_study()

    def test_game(self):
        """It should hold both houses with their quotas"""
        game = case_study_game()
        self.assertEqual(game.players.n, len(PARTIES))
        self.assertEqual([house.total for house in game.houses], [150, 75])
        self.assertEqual([house.quota for house in game.houses], list(QUOTAS))
        self.assertEqual(game_to_power_relation(game).class_count, 3)

    def test_matches_references(self):
        """It should reproduce every reference value"""
        self.assertEqual(self.report.mismatches(), [])

    def test_rankings(self):
        """It should rank the largest party first under every method"""
        for method, ranks in EXPECTED_RANKS.items():
            self.assertEqual(self.report.rankings[method].ranks, ranks)
        for method in DUAL_METHODS:
            ranking = self.report.rankings[method]
            self.assertIsInstance(ranking, RankingOutput)
            self.assertEqual(ranking.rank_of("VVD"), 1)

    def test_statistics(self):
        """It should count occurrences of the small parties"""
        self.assertEqual(tuple(self.report.theta["GrKO"]), EXPECTED_THETA["GrKO"])
        self.assertEqual(sum(self.report.theta["OSF"]), 2**16)
        self.assertEqual(self.report.cp_submatrix.tolist(), [list(row) for row in EXPECTED_CP_SUBMATRIX])

    def test_reports_differences(self):
        """It should name every value that differs from its reference"""
        altered = replace(self.report, theta={**self.report.theta, "GrKO": [0, 0, 0]})
        problems = altered.mismatches()
        self.assertEqual(len(problems), 1)
        self.assertIn("theta of GrKO", problems[0])

    def test_render(self):
        """It should print ranks, statistics and CP comparisons"""
        text = self.report.render()
        self.assertTrue(text.startswith("Ranks\n"))
        self.assertIn("(duallex, l1star: no published reference)", text)
        self.assertIn("L1 matrix of OSF", text)
        self.assertIn("CP comparisons", text)
