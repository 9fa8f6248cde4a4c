import logging
import time
from typing import Sequence
from .base_suite import BaseSuite
from .verification_report import VerificationReport

logger = logging.getLogger(__name__)


class CollectorSuite:
    """
    Class for collection of verification suites run as one pipeline.
    report: VerificationReport filled by the last execute() call.
    """
    report: VerificationReport = None

    def __init__(self, suites: Sequence[BaseSuite], name: str = 'verify-all',
                 storage=VerificationReport) -> None:
        """
        Initialization CollectorSuite with next parameters:
        :param suites: initialized subclasses of BaseSuite, run in the given order;
        :param name: name of the merged report;
        :param storage: class of the report, VerificationReport or a subclass;
        """
        self.suites = list(suites)
        self.name = name
        self.storage = storage

    def execute(self) -> VerificationReport:
        """
        Main method of CollectorSuite().
        :return: merged VerificationReport.
        """
        self.report = self.storage(self.name)
        start = time.perf_counter()
        for suite in self.suites:
            suite_start = time.perf_counter()
            before = len(self.report.cases)
            suite.execute(self.report)
            failed = sum(not case.passed for case in self.report.cases[before:])
            logger.info('suite %s: %d cases, %d failed, %.2f s', suite.name, len(self.report.cases) - before,
                        failed, time.perf_counter() - suite_start)
        self.report.wall_time = time.perf_counter() - start
        return self.report
