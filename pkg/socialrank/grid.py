"""
Independence and characterization grid

Every (solution, axiom) cell is checked first against the hand-built fixtures
and then against seeded random witnesses. A single violation refutes the cell.
Trial seeds depend only on the master seed and the cell, so a parallel run
reproduces the serial report exactly.
"""
import csv
import io
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from socialrank import config
from socialrank.axioms import Axiom, AxiomWitness, UnsatisfiableAtSize, check_axiom
from socialrank.catalog import MAIN_SOLUTIONS, SolutionRef
from socialrank.sampling import derive_seed
from socialrank.witnesses import fixtures, generate_witness, serialize_witness

logger = logging.getLogger("socialrank")

CSV_HEADER = ("solution", "axiom", "verdict", "trials", "witness_file")

TABLE_AXIOMS = (
    Axiom.SDES,
    Axiom.NEU,
    Axiom.CAT,
    Axiom.SYM,
    Axiom.EC,
    Axiom.CA,
    Axiom.IWS,
    Axiom.IBS,
    Axiom.KDD,
    Axiom.PCA,
    Axiom.CI,
)

_SATISFIED_BY = {
    Axiom.SDES: MAIN_SOLUTIONS,
    Axiom.NEU: MAIN_SOLUTIONS,
    Axiom.CAT: MAIN_SOLUTIONS,
    Axiom.SYM: MAIN_SOLUTIONS,
    Axiom.EC: (SolutionRef.CP,),
    Axiom.CA: (SolutionRef.LEXCEL, SolutionRef.DUAL_LEX),
    Axiom.IWS: (SolutionRef.LEXCEL, SolutionRef.L1),
    Axiom.IBS: (SolutionRef.DUAL_LEX, SolutionRef.L1_STAR),
    Axiom.KDD: (SolutionRef.L1, SolutionRef.L1_STAR),
    Axiom.PCA: (SolutionRef.LEXCEL, SolutionRef.DUAL_LEX, SolutionRef.L1, SolutionRef.L1_STAR),
    Axiom.CI: (SolutionRef.LEXCEL, SolutionRef.DUAL_LEX, SolutionRef.L1, SolutionRef.L1_STAR),
}

# Expected outcome of every main solution on every tabulated axiom: True when satisfied
TABLE_ONE: dict[tuple[SolutionRef, Axiom], bool] = {
    (solution, axiom): solution in _SATISFIED_BY[axiom] for axiom in TABLE_AXIOMS for solution in MAIN_SOLUTIONS
}


class GridVerdict(str, Enum):
    """Outcome of one grid cell"""

    SATISFIED = "satisfied"
    REFUTED = "refuted"
    UNSATISFIABLE = "unsatisfiable"


@dataclass(frozen=True)
class GridCell:
    """Verdict of one solution on one axiom, with the refuting instance if any"""

    solution: SolutionRef
    axiom: Axiom
    verdict: GridVerdict
    trials: int
    witness: Optional[AxiomWitness] = None
    source: str = ""

    @property
    def file_name(self) -> str:
        """Name of the witness file for a refuted cell"""
        return f"{self.solution.value}_{self.axiom.value}.witness"


@dataclass(frozen=True)
class GridReport:
    """All cells of a grid run in solution-major order"""

    cells: tuple[GridCell, ...]

    def cell(self, solution: SolutionRef, axiom: Axiom) -> GridCell:
        """The cell of one solution and axiom"""
        for cell in self.cells:
            if cell.solution is solution and cell.axiom is axiom:
                return cell
        raise KeyError((solution, axiom))

    def mismatches(self, expected: Optional[dict] = None) -> list[GridCell]:
        """Cells whose verdict disagrees with the expected satisfied/refuted pattern"""
        expected = TABLE_ONE if expected is None else expected
        wrong = []
        for cell in self.cells:
            key = (cell.solution, cell.axiom)
            if key in expected and expected[key] != (cell.verdict is GridVerdict.SATISFIED):
                wrong.append(cell)
        return wrong

    def write_witnesses(self, directory: str) -> dict[tuple[SolutionRef, Axiom], str]:
        """Writes one file per refuted cell and returns the paths by cell"""
        os.makedirs(directory, exist_ok=True)
        written = {}
        for cell in self.cells:
            if cell.witness is None:
                continue
            path = os.path.join(directory, cell.file_name)
            with open(path, "w", encoding="utf-8") as handle:
                handle.write(f"# source: {cell.source}\n")
                handle.write(serialize_witness(cell.witness))
            written[(cell.solution, cell.axiom)] = path
        logger.info("Wrote %d witness files to %s", len(written), directory)
        return written

    def to_csv(self, witness_files: Optional[dict] = None) -> str:
        """CSV text with one row per cell"""
        witness_files = witness_files or {}
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for cell in self.cells:
            path = witness_files.get((cell.solution, cell.axiom), "")
            writer.writerow((cell.solution.value, cell.axiom.value, cell.verdict.value, cell.trials, path))
        return buffer.getvalue()


def evaluate_cell(solution: SolutionRef, axiom: Axiom, n: int, trials: int, seed: int) -> GridCell:
    """Fixtures first, then ``trials`` random witnesses; stops at the first violation"""
    evaluated = 0
    for fixture in fixtures()[axiom]:
        evaluated += 1
        verdict = check_axiom(axiom, solution, fixture.witness)
        if verdict.violated:
            logger.debug("%s refutes %s on %s", fixture.name, solution.value, axiom.value)
            return GridCell(solution, axiom, GridVerdict.REFUTED, evaluated, fixture.witness, fixture.name)

    for trial in range(trials):
        try:
            witness = generate_witness(axiom, n, derive_seed(seed, axiom.value, solution.value, trial), solution)
        except UnsatisfiableAtSize as error:
            logger.info("%s on %s: %s", solution.value, axiom.value, error)
            return GridCell(solution, axiom, GridVerdict.UNSATISFIABLE, evaluated)
        evaluated += 1
        verdict = check_axiom(axiom, solution, witness)
        if verdict.violated:
            return GridCell(solution, axiom, GridVerdict.REFUTED, evaluated, witness, f"trial {trial}")
    return GridCell(solution, axiom, GridVerdict.SATISFIED, evaluated)


def _evaluate(job: tuple) -> GridCell:
    return evaluate_cell(*job)


def run_grid(
    solutions,
    axioms,
    n: int = config.DEFAULT_GRID_PLAYERS,
    trials: int = config.DEFAULT_TRIALS,
    seed: int = config.DEFAULT_SEED,
    workers: int = config.DEFAULT_WORKERS,
) -> GridReport:
    """
    Checks every solution against every axiom

    Args:
        solutions (list): SolutionRefs to evaluate
        axioms (list): Axioms to evaluate
        n (int): players in random witnesses
        trials (int): random witnesses per cell after the fixtures
        seed (int): master seed
        workers (int): processes; the report does not depend on it
    """
    jobs = [(SolutionRef(solution), Axiom(axiom), n, trials, seed) for solution in solutions for axiom in axioms]
    logger.info("Running %d grid cells with %d players and %d trials each", len(jobs), n, trials)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            cells = tuple(executor.map(_evaluate, jobs))
    else:
        cells = tuple(_evaluate(job) for job in jobs)
    for cell in cells:
        logger.info("%s / %s: %s after %d witnesses", cell.solution.value, cell.axiom.value, cell.verdict.value, cell.trials)
    return GridReport(cells)
