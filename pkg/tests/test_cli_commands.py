######################################################################
# Copyright 2016, 2024 John J. Rofrano. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
######################################################################

"""
CLI Command Tests
"""

# pylint: disable=duplicate-code
import logging
import os
from unittest import TestCase
from unittest.mock import patch

from click.testing import CliRunner

from main import cli
from socialrank import config
from socialrank.axioms import Axiom
from socialrank.catalog import SolutionRef
from socialrank.common import status
from socialrank.grid import TABLE_ONE

EXAMPLE = """\
players: 1 2 3
ranking: {1,3} ~ {1,2,3} > {1,2} ~ {2,3} > *
"""

CP_CYCLE = (
    "players: 1 2 3 4\n"
    "ranking: {1} ~ {1,3} ~ {1,2,3} ~ {4} ~ {2,4} ~ {1,2,4} ~ {1,3,4} ~ {2,3,4} ~ {1,2,3,4} > {2} ~ {2,3} ~ {3,4} > *\n"
)

GAME = """\
houses: 2
quota: 4 4
player a 3 2
player b 2 3
player c 1 1
"""


class TestSocialRankCLI(TestCase):
    """Command line tests"""

    def setUp(self):
        self.runner = CliRunner()

    def tearDown(self):
        logging.getLogger("socialrank").setLevel(config.LOGGING_LEVEL)

    def invoke(self, *args, files=None):
        """Run the command line in a scratch directory holding the given files"""
        with self.runner.isolated_filesystem():
            for name, text in (files or {}).items():
                with open(name, "w", encoding="utf-8") as handle:
                    handle.write(text)
            return self.runner.invoke(cli, list(args))

    ######################################################################
    # rank
    ######################################################################
    def test_rank_text(self):
        """It should print an aligned table of ranks"""
        result = self.invoke("rank", "--input", "example.pr", files={"example.pr": EXAMPLE})
        self.assertEqual(result.exit_code, status.EXIT_0_SUCCESS)
        lines = result.output.splitlines()
        self.assertEqual(lines[0].split(), ["player", "cp", "lexcel", "duallex", "l1", "l1star"])
        self.assertEqual(lines[2].split(), ["2", "3", "3", "3", "3", "3"])

    def test_rank_csv(self):
        """It should print one row per player and method"""
        result = self.invoke(
            "rank", "--input", "example.pr", "--methods", "lexcel,CP", "--format", "csv", files={"example.pr": EXAMPLE}
        )
        self.assertEqual(result.exit_code, status.EXIT_0_SUCCESS)
        self.assertEqual(
            result.output.splitlines(),
            ["player,method,rank", "1,lexcel,1", "2,lexcel,3", "3,lexcel,1", "1,cp,1", "2,cp,3", "3,cp,1"],
        )

    def test_rank_intransitive(self):
        """It should report a cyclic relation instead of ranks"""
        result = self.invoke("rank", "--input", "cycle.pr", "--methods", "cp", "--format", "csv", files={"cycle.pr": CP_CYCLE})
        self.assertEqual(result.exit_code, status.EXIT_0_SUCCESS)
        self.assertIn("1,cp,-", result.output)
        self.assertIn("cp is not transitive: ", result.output)

    def test_rank_game(self):
        """It should rank the players of a game"""
        result = self.invoke(
            "rank", "--input", "house.game", "--methods", "lexcel", "--format", "csv",
            files={"house.game": GAME},
        )
        self.assertEqual(result.exit_code, status.EXIT_0_SUCCESS)
        self.assertIn("a,lexcel,1", result.output.splitlines())

    def test_rank_errors(self):
        """It should exit with the input error code on bad methods, files and text"""
        result = self.invoke("rank", "--input", "example.pr", "--methods", "borda", files={"example.pr": EXAMPLE})
        self.assertEqual(result.exit_code, status.EXIT_1_INPUT_ERROR)
        self.assertIn("error: Unknown methods: borda", result.output)

        result = self.invoke("rank", "--input", "missing.pr")
        self.assertEqual(result.exit_code, status.EXIT_1_INPUT_ERROR)
        self.assertIn("error: missing.pr: ", result.output)

        result = self.invoke("rank", "--input", "bad.pr", files={"bad.pr": "players: 1 2\nranking: {1 > *\n"})
        self.assertEqual(result.exit_code, status.EXIT_1_INPUT_ERROR)
        self.assertIn("error: line 2, column", result.output)

    ######################################################################
    # statistics
    ######################################################################
    def test_cp_matrix(self):
        """It should print the win counts of the selected players"""
        result = self.invoke(
            "cp-matrix", "--input", "example.pr", "--players", "1,2", "--format", "csv", files={"example.pr": EXAMPLE}
        )
        self.assertEqual(result.exit_code, status.EXIT_0_SUCCESS)
        self.assertEqual(result.output.splitlines(), ["player,1,2", "1,0,1", "2,0,0"])

    def test_cp_matrix_unknown_player(self):
        """It should reject unknown players"""
        result = self.invoke("cp-matrix", "--input", "example.pr", "--players", "1,9", files={"example.pr": EXAMPLE})
        self.assertEqual(result.exit_code, status.EXIT_1_INPUT_ERROR)

    def test_theta(self):
        """It should print the occurrences per class"""
        result = self.invoke("theta", "--input", "example.pr", "--player", "1", files={"example.pr": EXAMPLE})
        self.assertEqual(result.exit_code, status.EXIT_0_SUCCESS)
        self.assertEqual(result.output.strip(), "1: 2 1 1")
        result = self.invoke(
            "theta", "--input", "example.pr", "--player", "1", "--format", "csv", files={"example.pr": EXAMPLE}
        )
        self.assertEqual(result.output.splitlines(), ["class,count", "1,2", "2,1", "3,1"])

    def test_l1_matrix(self):
        """It should print occurrences by size and class"""
        result = self.invoke(
            "l1-matrix", "--input", "example.pr", "--player", "2", "--format", "csv", files={"example.pr": EXAMPLE}
        )
        self.assertEqual(result.exit_code, status.EXIT_0_SUCCESS)
        self.assertEqual(result.output.splitlines(), ["size,class_1,class_2,class_3", "1,0,0,1", "2,0,2,0", "3,1,0,0"])

    ######################################################################
    # gen
    ######################################################################
    def test_gen(self):
        """It should print the ranking a game induces"""
        result = self.invoke("gen", "--input", "house.game", files={"house.game": GAME})
        self.assertEqual(result.exit_code, status.EXIT_0_SUCCESS)
        self.assertEqual(
            result.output.splitlines(),
            ["players: a b c", "ranking: {a,b} ~ {a,b,c} > {a,c} > {a} ~ {b} ~ {c} ~ {b,c}"],
        )

    def test_gen_summary(self):
        """It should summarise class sizes above the listing limit"""
        with patch.object(config, "FULL_LISTING_MAX_PLAYERS", 2):
            result = self.invoke("gen", "--input", "house.game", files={"house.game": GAME})
        self.assertEqual(result.exit_code, status.EXIT_0_SUCCESS)
        self.assertEqual(result.output.splitlines(), ["class,count", "1,2", "2,1", "3,4"])

    ######################################################################
    # axioms
    ######################################################################
    def test_axioms(self):
        """It should print the grid and write witness files"""
        result = self.invoke(
            "axioms", "-n", "3", "--trials", "2", "--solutions", "CP,LexCel", "--axioms", "Sym,EC",
            "--expect-paper", "--witness-dir", "witnesses",
        )
        self.assertEqual(result.exit_code, status.EXIT_0_SUCCESS)
        lines = result.output.splitlines()
        self.assertEqual(lines[0], "solution,axiom,verdict,trials,witness_file")
        self.assertEqual(len(lines), 5)
        self.assertTrue(lines[1].startswith("CP,Sym,satisfied,"))
        self.assertTrue(lines[4].startswith("LexCel,EC,refuted,1,"))
        self.assertTrue(lines[4].endswith(os.path.join("witnesses", "LexCel_EC.witness")))

    def test_axioms_mismatch(self):
        """It should exit with the mismatch code when a cell differs from the table"""
        with patch.dict(TABLE_ONE, {(SolutionRef.CP, Axiom.SYM): False}):
            result = self.invoke(
                "axioms", "-n", "3", "--trials", "1", "--solutions", "CP", "--axioms", "Sym", "--expect-paper"
            )
        self.assertEqual(result.exit_code, status.EXIT_3_EXPECTATION_MISMATCH)
        self.assertIn("error: 1 cells differ from the reference table: CP/Sym=satisfied", result.output)

    def test_axioms_errors(self):
        """It should reject sizes, solutions and axioms it does not know"""
        for args in (["-n", "6"], ["--solutions", "Borda"], ["--axioms", "Anonymity"], ["--solutions", ","]):
            with self.subTest(args=args):
                result = self.invoke("axioms", "--trials", "1", *args)
                self.assertEqual(result.exit_code, status.EXIT_1_INPUT_ERROR)

    def test_usage_errors_keep_their_own_code(self):
        """It should tell a bad option apart from an expectation mismatch"""
        result = self.invoke("axioms", "--no-such-option")
        self.assertEqual(result.exit_code, status.EXIT_2_USAGE_ERROR)
        self.assertNotEqual(status.EXIT_2_USAGE_ERROR, status.EXIT_3_EXPECTATION_MISMATCH)

    ######################################################################
    # casestudy
    ######################################################################
    def test_casestudy_dump(self):
        """It should print the embedded game"""
        result = self.invoke("casestudy", "--dump-game")
        self.assertEqual(result.exit_code, status.EXIT_0_SUCCESS)
        self.assertTrue(result.output.startswith("houses: 2\nquota: 76 38\nplayer VVD 40 13\n"))

    def test_casestudy(self):
        """It should print the report and match every reference value"""
        result = self.invoke("casestudy")
        self.assertEqual(result.exit_code, status.EXIT_0_SUCCESS)
        self.assertIn("CP comparisons", result.output)

    def test_log_level(self):
        """It should accept a log level override"""
        result = self.invoke(
            "--log-level", "error", "theta", "--input", "example.pr", "--player", "3", files={"example.pr": EXAMPLE}
        )
        self.assertEqual(result.exit_code, status.EXIT_0_SUCCESS)
        self.assertEqual(logging.getLogger("socialrank").level, logging.ERROR)
