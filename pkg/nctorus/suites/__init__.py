from .verification_report import VerificationCase, VerificationReport
from .base_suite import BaseSuite
from .torus_suite import TorusSuite
from .oracle_suite import OracleSuite
from .clifford_suite import CliffordSuite
from .dirac_suite import DiracSuite
from .covering_suite import CoveringSuite, CoveringSpecSuite, LiftSuite
from .tower_suite import TowerSuite
from .moyal_suite import MoyalSuite
from .bigraded_suite import BigradedSuite
from .collector_suite import CollectorSuite
