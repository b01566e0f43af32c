"""
Test cases for the solution catalog
"""

from unittest import TestCase

from socialrank.catalog import MAIN_SOLUTIONS, SolutionRef, counterexample_solution, index_order, resolve
from socialrank.models import DataValidationError, PairwiseRelation, PlayerSet, build_power_relation, ranks_from_pairwise
from socialrank.solutions import SOLUTIONS, cp_majority, lexcel
from .factories import PowerRelationFactory

THREE = PlayerSet.of_size(3)

# {1,3} ~ {1,2,3} > {1,2} ~ {2,3} > {1} ~ {2} ~ {3}
EXAMPLE = build_power_relation(THREE, [[5, 7], [3, 6], [1, 2, 4]])

# {1} > {2} > {3} > {1,2} > {1,3} > {2,3} > {1,2,3}
STRICT = build_power_relation(THREE, [[1], [2], [4], [3], [5], [6], [7]])


class TestSolutionRef(TestCase):
    """Solution names"""

    def test_parse(self):
        """It should look names up regardless of case"""
        self.assertIs(SolutionRef.parse("lexcel"), SolutionRef.LEXCEL)
        self.assertIs(SolutionRef.parse(" ci_minimaltheta "), SolutionRef.CI_MINIMAL_THETA)
        with self.assertRaises(DataValidationError):
            SolutionRef.parse("borda")

    def test_main_solutions(self):
        """It should resolve the main solutions to the ranking functions"""
        self.assertEqual(len(MAIN_SOLUTIONS), len(SOLUTIONS))
        self.assertIs(resolve(SolutionRef.CP), cp_majority)
        self.assertIs(resolve("LexCel"), lexcel)

    def test_every_solution_runs(self):
        """It should produce a relation on the same players for every catalogued solution"""
        for seed in range(5):
            pr = PowerRelationFactory(n=4, seed=seed)
            for ref in SolutionRef:
                with self.subTest(solution=ref.value, seed=seed):
                    relation = counterexample_solution(ref, pr)
                    self.assertIsInstance(relation, PairwiseRelation)
                    self.assertEqual(relation.players, pr.players)


class TestCounterexampleSolutions(TestCase):
    """Purpose-built solutions"""

    def test_index_order(self):
        """It should rank players by position"""
        self.assertEqual(index_order(THREE).cells.tolist(), [[0, 1, 1], [-1, 0, 1], [-1, -1, 0]])

    def test_identity(self):
        """It should tie every pair"""
        self.assertEqual(counterexample_solution(SolutionRef.ID, EXAMPLE), PairwiseRelation.indifferent(THREE))

    def test_index_fallback(self):
        """It should break only the tied pairs by player position"""
        # every base ranks 1 and 3 above 2 and ties 1 with 3
        expected = [[0, 1, 1], [-1, 0, -1], [-1, 1, 0]]
        for ref in (SolutionRef.N_INDEX, SolutionRef.S_INDEX, SolutionRef.S_INDEX_L1):
            with self.subTest(solution=ref.value):
                self.assertEqual(counterexample_solution(ref, EXAMPLE).cells.tolist(), expected)
        self.assertEqual(counterexample_solution(SolutionRef.N_INDEX, STRICT), cp_majority(STRICT))
        self.assertEqual(counterexample_solution(SolutionRef.S_INDEX, STRICT), lexcel(STRICT))

    def test_reversed_lexcel(self):
        """It should rank the lexcel order upside down"""
        ranking = ranks_from_pairwise(counterexample_solution(SolutionRef.SD_REVERSED, EXAMPLE))
        self.assertEqual(ranking.ranks, (2, 1, 2))

    def test_ec_empty(self):
        """It should keep CP-majority when the singletons are tied"""
        self.assertEqual(counterexample_solution(SolutionRef.EC_EMPTY, EXAMPLE), cp_majority(EXAMPLE))

    def test_ec_empty_singletons_first(self):
        """It should let the singletons decide before the contexts"""
        # {1} > {2,3} > the rest: CP-majority ties every pair
        pr = build_power_relation(THREE, [[1], [6], [2, 3, 4, 5, 7]])
        cp = cp_majority(pr)
        self.assertFalse(cp.is_total_order())
        relation = counterexample_solution(SolutionRef.EC_EMPTY, pr)
        self.assertEqual(relation.cell(0, 1), 1)
        self.assertEqual(relation.cell(1, 2), cp.cell(1, 2))

    def test_shifted_theta(self):
        """It should add each class count to the one above it"""
        # shifted counts: 1 -> (3, 2, 1), 2 -> (3, 3, 1), 3 -> (3, 2, 1)
        ranking = ranks_from_pairwise(counterexample_solution(SolutionRef.IW_SHIFTED_THETA, EXAMPLE))
        self.assertEqual(ranking.ranks, (2, 1, 2))

    def test_partner_minima_skip_the_rival(self):
        """It should ignore the pair formed by the two compared players"""
        players = PlayerSet(("i", "j"))
        single = build_power_relation(players, [[1, 2, 3]])
        self.assertEqual(counterexample_solution(SolutionRef.PCA_MIN_PARTNER, single), PairwiseRelation.indifferent(players))

    def test_partner_minima_break_ties(self):
        """It should rank higher the player whose best pair has the smaller partner"""
        players = PlayerSet(("i", "j", "k", "l"))
        # {i,k} ~ {j,l} > the rest: L1 ties i and j
        pr = build_power_relation(players, [[5, 10], [m for m in range(1, 16) if m not in (5, 10)]])
        relation = counterexample_solution(SolutionRef.PCA_MIN_PARTNER, pr)
        self.assertEqual(relation.cell(0, 1), 1)

    def test_minimal_theta_fallback_is_global(self):
        """It should compare minimal-size counts once any pair is tied by L1"""
        # L1 ties 1 and 3, so 2 wins on its two smallest coalitions in the middle class
        ranking = ranks_from_pairwise(counterexample_solution(SolutionRef.CI_MINIMAL_THETA, EXAMPLE))
        self.assertEqual(ranking.ranks, (2, 1, 2))
