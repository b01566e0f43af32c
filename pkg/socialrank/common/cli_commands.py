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
Command Line Interface

Usage:
  socialrank rank --input FILE [--methods cp,lexcel,...] [--format text|csv]
  socialrank cp-matrix --input FILE [--players a,b,c]
  socialrank theta --input FILE --player LABEL
  socialrank l1-matrix --input FILE --player LABEL
  socialrank gen --input FILE.game
  socialrank axioms [-n 4] [--trials 1000] [--seed 7] [--expect-paper]
  socialrank casestudy [--dump-game]

Inputs ending in ``.game`` are read as multicameral games and converted to
their coalitional ranking; anything else is read as a ``.pr`` power relation.
"""
import csv
import io
import logging
from typing import Optional

import click
import numpy as np

from socialrank import config
from socialrank.axioms import Axiom
from socialrank.casestudy import case_study_game, run_case_study
from socialrank.catalog import MAIN_SOLUTIONS, SolutionRef
from socialrank.common import error_handlers
from socialrank.formats import parse_game, parse_power_relation, serialize_game, serialize_power_relation
from socialrank.games import game_to_power_relation, game_values
from socialrank.grid import TABLE_AXIOMS, run_grid
from socialrank.models import DataValidationError, ExpectationMismatch, PowerRelation, RankingOutput, ranks_from_pairwise
from socialrank.solutions import SOLUTIONS, cp_matrix, l1_matrix, theta

logger = logging.getLogger("socialrank")

GRID_PLAYER_RANGE = (3, 5)


class SocialRankGroup(click.Group):
    """Click group that routes escaping exceptions through the error handlers"""

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except (click.exceptions.Exit, click.ClickException, click.Abort):
            raise
        except Exception as error:  # pylint: disable=broad-except
            payload, code = error_handlers.handle(error)
            click.echo(f"error: {payload['message']}", err=True)
            ctx.exit(code)


######################################################################
# Helpers
######################################################################
def _read(path: str) -> str:
    with open(path, encoding="utf-8") as handle:
        return handle.read()


def _load_relation(path: str) -> PowerRelation:
    """A power relation read directly or induced by a game"""
    text = _read(path)
    if path.endswith(".game"):
        return game_to_power_relation(parse_game(text))
    return parse_power_relation(text)


def _split(text: Optional[str]) -> list[str]:
    if text is None:
        return []
    return [item.strip() for item in text.split(",") if item.strip()]


def _csv(rows) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerows(rows)
    return buffer.getvalue().rstrip("\n")


def _aligned(rows) -> str:
    rows = [[str(cell) for cell in row] for row in rows]
    widths = [max(len(row[k]) for row in rows) for k in range(len(rows[0]))]
    return "\n".join("  ".join(cell.rjust(width) for cell, width in zip(row, widths)).rstrip() for row in rows)


def _render(rows, output_format: str) -> str:
    return _csv(rows) if output_format == "csv" else _aligned(rows)


FORMAT_OPTION = click.option(
    "--format", "output_format", type=click.Choice(["text", "csv"]), default="text", show_default=True, help="Output format"
)
INPUT_OPTION = click.option("--input", "input_path", required=True, help="A .pr power relation or a .game file")


######################################################################
# Commands
######################################################################
@click.group(cls=SocialRankGroup)
@click.option(
    "--log-level",
    type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
    default=None,
    help="Overrides LOG_LEVEL",
)
def cli(log_level):
    """Social rankings of players from rankings of their coalitions"""
    if log_level:
        logger.setLevel(log_level.upper())


@cli.command("rank")
@INPUT_OPTION
@click.option("--methods", default=",".join(SOLUTIONS), show_default=True, help="Comma separated solutions")
@FORMAT_OPTION
def rank(input_path, methods, output_format):
    """Competition ranks of every player under each method"""
    names = [method.lower() for method in _split(methods)]
    if not names:
        raise DataValidationError("At least one method is required")
    unknown = [name for name in names if name not in SOLUTIONS]
    if unknown:
        raise DataValidationError(f"Unknown methods: {', '.join(unknown)}; choose from {', '.join(SOLUTIONS)}")

    pr = _load_relation(input_path)
    results = {name: ranks_from_pairwise(SOLUTIONS[name](pr)) for name in names}

    def rank_of(name, index):
        result = results[name]
        return result.ranks[index] if isinstance(result, RankingOutput) else "-"

    if output_format == "csv":
        rows = [("player", "method", "rank")]
        rows += [(label, name, rank_of(name, index)) for name in names for index, label in enumerate(pr.players.names)]
        click.echo(_csv(rows))
    else:
        rows = [["player"] + names]
        rows += [[label] + [rank_of(name, index) for name in names] for index, label in enumerate(pr.players.names)]
        click.echo(_aligned(rows))

    for name, result in results.items():
        if isinstance(result, RankingOutput):
            continue
        click.echo(f"\n{name} is not transitive: {result.describe()}")
        matrix = [[""] + list(pr.players.names)]
        matrix += [[label] + result.relation.cells[index].tolist() for index, label in enumerate(pr.players.names)]
        click.echo(_render(matrix, output_format))


@cli.command("cp-matrix")
@INPUT_OPTION
@click.option("--players", "subset", default=None, help="Comma separated players to keep, in order")
@FORMAT_OPTION
def cp_matrix_command(input_path, subset, output_format):
    """Ceteris paribus win counts d_ij of every row player against every column player"""
    pr = _load_relation(input_path)
    labels = _split(subset) or list(pr.players.names)
    indices = [pr.players.index(label) for label in labels]
    counts = cp_matrix(pr)[np.ix_(indices, indices)]
    rows = [["player"] + labels] + [[label] + row.tolist() for label, row in zip(labels, counts)]
    click.echo(_render(rows, output_format))


@cli.command("theta")
@INPUT_OPTION
@click.option("--player", required=True, help="Player label")
@FORMAT_OPTION
def theta_command(input_path, player, output_format):
    """Occurrences of a player in each class"""
    pr = _load_relation(input_path)
    counts = theta(pr, pr.players.index(player)).counts
    if output_format == "csv":
        click.echo(_csv([("class", "count")] + [(k, count) for k, count in enumerate(counts, start=1)]))
    else:
        click.echo(f"{player}: " + " ".join(str(count) for count in counts))


@cli.command("l1-matrix")
@INPUT_OPTION
@click.option("--player", required=True, help="Player label")
@FORMAT_OPTION
def l1_matrix_command(input_path, player, output_format):
    """Occurrences of a player by coalition size (rows) and class (columns)"""
    pr = _load_relation(input_path)
    matrix = l1_matrix(pr, pr.players.index(player)).m
    header = ["size"] + [f"class_{k}" for k in range(1, pr.class_count + 1)]
    rows = [header] + [[size] + row.tolist() for size, row in enumerate(matrix, start=1)]
    click.echo(_render(rows, output_format))


@cli.command("gen")
@INPUT_OPTION
def gen(input_path):
    """Coalitional ranking induced by a game: full listing for small games, class sizes otherwise"""
    game = parse_game(_read(input_path))
    if game.players.n <= config.FULL_LISTING_MAX_PLAYERS:
        click.echo(serialize_power_relation(game_to_power_relation(game)))
        return
    values = game_values(game)[1:]
    attained = sorted(set(values.tolist()), reverse=True)
    rows = [("class", "count")] + [(k, int(np.count_nonzero(values == value))) for k, value in enumerate(attained, start=1)]
    click.echo(_csv(rows))


@cli.command("axioms")
@click.option("-n", "players", type=int, default=config.DEFAULT_GRID_PLAYERS, show_default=True, help="Players per witness")
@click.option("--trials", type=click.IntRange(min=0), default=config.DEFAULT_TRIALS, show_default=True)
@click.option("--seed", type=click.IntRange(0, 2**64 - 1), default=config.DEFAULT_SEED, show_default=True)
@click.option("--solutions", default=",".join(ref.value for ref in MAIN_SOLUTIONS), show_default=True)
@click.option("--axioms", "axiom_names", default=",".join(axiom.value for axiom in TABLE_AXIOMS), show_default=True)
@click.option("--expect-paper", is_flag=True, help="Exit with code 2 unless the grid matches the reference table")
@click.option("--workers", type=click.IntRange(min=1), default=config.DEFAULT_WORKERS, show_default=True)
@click.option("--witness-dir", default=None, help="Directory for replayable witness files")
def axioms_command(players, trials, seed, solutions, axiom_names, expect_paper, workers, witness_dir):
    """Check solutions against axioms and print the verdict grid as CSV"""
    low, high = GRID_PLAYER_RANGE
    if not low <= players <= high:
        raise DataValidationError(f"-n must be between {low} and {high}, got {players}")
    refs = [SolutionRef.parse(name) for name in _split(solutions)]
    axioms = [Axiom.parse(name) for name in _split(axiom_names)]
    if not refs or not axioms:
        raise DataValidationError("At least one solution and one axiom are required")

    report = run_grid(refs, axioms, n=players, trials=trials, seed=seed, workers=workers)
    witness_files = report.write_witnesses(witness_dir) if witness_dir else {}
    click.echo(report.to_csv(witness_files), nl=False)

    if expect_paper:
        wrong = report.mismatches()
        if wrong:
            cells = ", ".join(f"{cell.solution.value}/{cell.axiom.value}={cell.verdict.value}" for cell in wrong)
            raise ExpectationMismatch(f"{len(wrong)} cells differ from the reference table: {cells}")


@cli.command("casestudy")
@click.option("--dump-game", is_flag=True, help="Print the embedded game as .game text and stop")
def casestudy(dump_game):
    """Rankings of the Dutch parliamentary parties"""
    if dump_game:
        click.echo(serialize_game(case_study_game()))
        return
    report = run_case_study()
    click.echo(report.render())
    problems = report.mismatches()
    if problems:
        raise ExpectationMismatch(f"{len(problems)} values differ from their references: " + "; ".join(problems))

