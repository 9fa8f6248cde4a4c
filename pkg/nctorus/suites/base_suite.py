import logging
import warnings
from abc import ABC, abstractmethod
from typing import Optional
import numpy as np
from nctorus.global_settings import settings
from .verification_report import VerificationReport

logger = logging.getLogger(__name__)

OVER_TIGHT_TOLERANCE = 1e-16


class BaseSuite(ABC):
    """
    Abstract class for a group of identity checks appended to a VerificationReport.
    """
    name: str = 'base'

    def __init__(self, seed: Optional[int] = None, tol: Optional[float] = None) -> None:
        """
        :param seed: seed of every random input of the suite, settings.rnd_seed when None.
        :param tol: tolerance applied to every case instead of the per-case defaults.
        :return: None
        """
        if tol is not None and tol < OVER_TIGHT_TOLERANCE:
            warnings.warn(f'Tolerance {tol} is below double precision rounding, expect failures', UserWarning)
        self.seed = settings.rnd_seed if seed is None else seed
        self.tol = tol

    def rng(self, stream: int = 0) -> np.random.Generator:
        """
        Independent generator per stream so that adding a case does not shift the inputs of the others.
        """
        return np.random.default_rng([self.seed, stream])

    def sub_seed(self, stream: int) -> int:
        return int(self.rng(stream).integers(0, 2 ** 31 - 1))

    def check(self, report: VerificationReport, identity: str, anchor: str, residual: float,
              tolerance: Optional[float] = None) -> None:
        """
        Append a case; the override tolerance wins over the case tolerance.
        """
        if self.tol is not None:
            tolerance = self.tol
        elif tolerance is None:
            tolerance = settings.default_tolerance
        case = report.add_case(f'{self.name}.{identity}', anchor, residual, tolerance)
        if not case.passed:
            logger.info('%s failed: residual %.3e above %.1e', case.identity, case.residual, case.tolerance)

    @abstractmethod
    def execute(self, report: VerificationReport) -> None:
        """
        Run every check of the suite.

        :param report: VerificationReport receiving the cases.
        :return: None
        """
