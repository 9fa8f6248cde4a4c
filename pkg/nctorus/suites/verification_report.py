import math
from dataclasses import dataclass
from typing import List, Tuple


@dataclass(frozen=True)
class VerificationCase:
    """
    One checked identity: its id, the formula it anchors to (or "plumbing"), the largest residual seen and
    the tolerance it was held to.
    """
    identity: str
    anchor: str
    residual: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return math.isfinite(self.residual) and self.residual <= self.tolerance

    def row(self) -> Tuple[str, float, float, bool]:
        return self.identity, self.residual, self.tolerance, self.passed


class VerificationReport:
    """
    Class for holding the outcome of a verification run.

    Attributes:
        name (str): name of the suite or of the whole run.
        cases (list): VerificationCase objects in the order they were checked.
        wall_time (float): seconds spent, filled in by the runner.

    Methods:
        add_case()
        extend()
        table()
        print_report()
        to_dict()
    """
    wall_time: float = 0.0

    def __init__(self, name: str) -> None:
        """
        Initialize an empty report.

        :param name: name of the suite or of the whole run.
        :return: None
        """
        self.name = name
        self.cases: List[VerificationCase] = []

    def add_case(self, identity: str, anchor: str, residual: float, tolerance: float) -> VerificationCase:
        """
        Record one identity check.

        :param identity: dotted id, unique inside the report.
        :param anchor: formula the identity comes from, or "plumbing".
        :param residual: largest residual observed.
        :param tolerance: largest admissible residual.
        :return: the recorded VerificationCase.
        """
        case = VerificationCase(identity=identity, anchor=anchor or 'plumbing', residual=float(residual),
                                tolerance=float(tolerance))
        self.cases.append(case)
        return case

    def extend(self, other: 'VerificationReport') -> None:
        self.cases.extend(other.cases)

    @property
    def passed(self) -> bool:
        return all(case.passed for case in self.cases)

    @property
    def failures(self) -> List[VerificationCase]:
        return [case for case in self.cases if not case.passed]

    def table(self) -> List[Tuple[str, float, float, bool]]:
        """
        Deterministic rows (identity, residual, tolerance, passed); wall time is left out.
        """
        return [case.row() for case in self.cases]

    def to_dict(self) -> dict:
        return {'name': self.name, 'passed': self.passed, 'wall_time': self.wall_time,
                'cases': [{'identity': case.identity, 'anchor': case.anchor, 'residual': case.residual,
                           'tolerance': case.tolerance, 'passed': case.passed} for case in self.cases]}

    def print_report(self) -> None:
        """
        Method for print the residual table.
        :return: None
        """
        print('|' + '=' * 85 + '|')
        print(f'Verification: {self.name}')
        print(f'\tcases: {len(self.cases)}, failed: {len(self.failures)}, wall time: {self.wall_time:.2f} s')
        for case in self.cases:
            status = 'ok  ' if case.passed else 'FAIL'
            print(f'\t{status} {case.identity:<40} residual {case.residual:.3e} <= {case.tolerance:.1e}')
        print(f'Overall: {"passed" if self.passed else "failed"}')
