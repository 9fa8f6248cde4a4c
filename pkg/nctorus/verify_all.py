from typing import Optional
from nctorus.suites import (BigradedSuite, CliffordSuite, CollectorSuite, CoveringSuite, DiracSuite, MoyalSuite,
                            OracleSuite, TorusSuite, TowerSuite, VerificationReport)


def default_suites(seed: Optional[int] = None, tol: Optional[float] = None) -> list:
    """
    Every suite at its default scale, in reporting order.
    """
    return [suite(seed=seed, tol=tol) for suite in (TorusSuite, OracleSuite, CliffordSuite, DiracSuite,
                                                    CoveringSuite, TowerSuite, MoyalSuite, BigradedSuite)]


def verify_all(seed: Optional[int] = None, tol: Optional[float] = None) -> VerificationReport:
    """
    Run every identity suite.

    :param seed: seed of all random inputs, settings.rnd_seed when None.
    :param tol: tolerance applied to every case instead of the per-case defaults.
    :return: merged VerificationReport.
    """
    return CollectorSuite(default_suites(seed, tol)).execute()
