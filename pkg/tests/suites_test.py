import pytest
from nctorus.algebra import SkewMatrix, standard_theta
from nctorus.coverings import make_covering
from nctorus.suites import (BaseSuite, BigradedSuite, CliffordSuite, CollectorSuite, CoveringSpecSuite, CoveringSuite,
                            DiracSuite, LiftSuite, MoyalSuite, OracleSuite, TorusSuite, TowerSuite, VerificationReport)
from nctorus.verify_all import default_suites, verify_all


def small_suites(seed=None, tol=None):
    return [TorusSuite(seed=seed, tol=tol, dims=(2, 3), triples=3),
            OracleSuite(seed=seed, tol=tol, pairs=5),
            CliffordSuite(seed=seed, tol=tol, max_dim=4),
            DiracSuite(seed=seed, tol=tol, max_radius=2, commutator_radius=6),
            CoveringSuite(seed=seed, tol=tol, samples=3, window_radius=6),
            TowerSuite(seed=seed, tol=tol, primes=(2, 3), samples=2),
            MoyalSuite(seed=seed, tol=tol, size=16),
            BigradedSuite(seed=seed, tol=tol, triples=2)]


@pytest.mark.parametrize('suite', small_suites(seed=3), ids=lambda suite: suite.name)
def test_suite_passes(suite):
    report = VerificationReport(suite.name)
    suite.execute(report)
    assert report.cases
    assert report.passed, [case.row() for case in report.failures]
    assert all(case.identity.startswith(suite.name + '.') for case in report.cases)
    assert all(case.anchor for case in report.cases)


def test_case_ids_are_unique():
    report = CollectorSuite(small_suites(seed=1)).execute()
    identities = [case.identity for case in report.cases]
    assert len(identities) == len(set(identities))


def test_table_is_deterministic_for_a_seed():
    first = CollectorSuite(small_suites(seed=7)).execute()
    second = CollectorSuite(small_suites(seed=7)).execute()
    assert first.table() == second.table()
    assert first.wall_time > 0


def test_over_tight_tolerance_warns_and_fails():
    with pytest.warns(UserWarning):
        suite = TorusSuite(seed=0, tol=1e-20, dims=(2,), triples=2)
    report = VerificationReport('tight')
    suite.execute(report)
    assert not report.passed
    assert all(case.tolerance == 1e-20 for case in report.cases)
    assert 'torus.star.associativity' in [case.identity for case in report.failures]


def test_tolerance_override_applies_to_exact_cases():
    report = VerificationReport('loose')
    MoyalSuite(seed=0, tol=1e-3, size=8).execute(report)
    assert report.passed
    assert {case.tolerance for case in report.cases} == {1e-3}


def test_report_dict_and_failures():
    report = VerificationReport('manual')
    report.add_case('x.ok', 'a = a', 0.0, 0.0)
    report.add_case('x.bad', '', float('nan'), 1.0)
    data = report.to_dict()
    assert data['name'] == 'manual' and data['passed'] is False
    assert [case['identity'] for case in data['cases']] == ['x.ok', 'x.bad']
    assert data['cases'][1]['anchor'] == 'plumbing'
    assert [case.identity for case in report.failures] == ['x.bad']


def test_print_report(capsys):
    report = VerificationReport('printed')
    report.add_case('x.ok', 'a = a', 0.0, 1e-12)
    report.print_report()
    captured = capsys.readouterr().out
    assert 'x.ok' in captured and 'Overall: passed' in captured


def test_covering_spec_and_lift_suites():
    spec = make_covering(standard_theta(0.5), (2, 3))
    report = CollectorSuite([CoveringSpecSuite(spec, seed=2), LiftSuite(spec, seed=2)], name='cover').execute()
    assert report.passed, [case.row() for case in report.failures]
    assert {case.identity.split('.')[0] for case in report.cases} == {'cover', 'lift'}


def test_covering_spec_suite_in_three_dimensions():
    spec = make_covering(SkewMatrix.from_upper(3, {(0, 1): 0.2, (1, 2): 0.4}), (2, 1, 2))
    report = VerificationReport('cover')
    CoveringSpecSuite(spec, seed=5).execute(report)
    assert report.passed, [case.row() for case in report.failures]


def test_collector_uses_storage_class():
    class Storage(VerificationReport):
        pass

    report = CollectorSuite(small_suites(seed=0)[2:3], name='custom', storage=Storage).execute()
    assert isinstance(report, Storage) and report.name == 'custom'


def test_base_suite_is_abstract():
    with pytest.raises(TypeError):
        BaseSuite()


def test_default_suites_cover_every_group():
    names = [suite.name for suite in default_suites(seed=0)]
    assert names == ['torus', 'oracle', 'clifford', 'dirac', 'covering', 'tower', 'moyal', 'bigraded']


def test_verify_all_passes():
    report = verify_all(seed=0)
    assert report.passed, [case.row() for case in report.failures]
    assert report.name == 'verify-all'
