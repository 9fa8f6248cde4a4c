import argparse
import json
import logging
import sys
from typing import List, Optional, Sequence
from nctorus.algebra import SkewMatrix, TruncationWindow, standard_theta, star_product
from nctorus.coverings import make_covering, tower_build
from nctorus.dirac import dirac_spectrum, spinor_dimension
from nctorus.exceptions import (ConsistencyError, DimensionMismatchError, InvalidParameterError, ParseError,
                                SizeCapError, ThetaMismatchError)
from nctorus.global_settings import settings
from nctorus.moyal import norm_pair, seminorm_rk
from nctorus.oracles import dense_star_oracle
from nctorus.serialization import (covering_from_dict, element_from_dict, element_to_dict, moyal_from_dict,
                                   read_json, spectrum_to_csv, spectrum_to_dict, theta_from_dict, tower_to_dict,
                                   write_json)
from nctorus.suites import CollectorSuite, CoveringSpecSuite, LiftSuite, VerificationReport
from nctorus.verify_all import verify_all

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_PARSE_ERROR = 2
EXIT_INVALID_PARAMETERS = 3
EXIT_SIZE_CAP = 4


def _int_list(text: str) -> List[int]:
    try:
        return [int(v) for v in text.split(',')]
    except ValueError as error:
        raise ParseError(f'Expected a comma separated list of integers, but was given: {text}') from error


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, 'w', encoding='utf-8') as f:
            f.write(text)


def _emit_json(data, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(json.dumps(data, indent=2) + '\n')
    else:
        write_json(data, out)


def check_operator_size(window: TruncationWindow) -> None:
    """
    (2R+1)^n · m against settings.operator_size_cap.
    """
    dim = window.size * spinor_dimension(window.n)
    if dim > settings.operator_size_cap:
        raise SizeCapError(f'Truncated operator of dimension {dim} exceeds the cap {settings.operator_size_cap}')


def cmd_star(args: argparse.Namespace) -> int:
    a = element_from_dict(read_json(args.left))
    b = element_from_dict(read_json(args.right))
    product = star_product(a, b)
    _emit_json(element_to_dict(product), args.out)
    if args.oracle:
        residual = product.max_distance(dense_star_oracle(a, b))
        print(f'oracle residual: {residual:.3e}', file=sys.stderr if args.out is None else sys.stdout)
    return EXIT_OK


def cmd_spectrum(args: argparse.Namespace) -> int:
    theta = theta_from_dict(read_json(args.theta))
    if args.window < 1:
        raise InvalidParameterError(f'Window radius must be >= 1, but was given: {args.window}')
    window = TruncationWindow(n=theta.n, radius=args.window)
    check_operator_size(window)
    report = dirac_spectrum(theta, window)
    if args.format == 'csv':
        _emit(spectrum_to_csv(report), args.out)
    else:
        _emit_json(spectrum_to_dict(report), args.out)
    return EXIT_OK


def _covering_from_args(args: argparse.Namespace):
    if args.spec is not None:
        return covering_from_dict(read_json(args.spec))
    if args.k is None:
        raise InvalidParameterError('cover needs either --spec or --k')
    k = _int_list(args.k)
    upper = {(0, 1): args.theta12} if len(k) >= 2 else {}
    return make_covering(SkewMatrix.from_upper(len(k), upper), k)


def _run_suite(suite, out: Optional[str]) -> int:
    report = CollectorSuite([suite], name=suite.name).execute()
    report.print_report()
    if out is not None:
        write_json(report.to_dict(), out)
    return EXIT_OK if report.passed else EXIT_VERIFICATION_FAILED


def cmd_cover(args: argparse.Namespace) -> int:
    if args.action == 'tower':
        if args.primes is None:
            raise InvalidParameterError('cover tower needs --primes')
        specs = tower_build(standard_theta(args.theta, args.n), _int_list(args.primes))
        data = tower_to_dict(specs)
        _emit_json(data, args.out)
        return EXIT_OK if data['exact'] else EXIT_VERIFICATION_FAILED
    spec = _covering_from_args(args)
    if args.action == 'verify':
        return _run_suite(CoveringSpecSuite(spec, seed=args.seed, tol=args.tol), args.out)
    check_operator_size(TruncationWindow(n=spec.n, radius=max(spec.k)))
    return _run_suite(LiftSuite(spec, seed=args.seed, tol=args.tol), args.out)


def cmd_moyal(args: argparse.Namespace) -> int:
    x = moyal_from_dict(read_json(args.file))
    if args.level < 0:
        raise InvalidParameterError(f'Seminorm level must be >= 0, but was given: {args.level}')
    frobenius, spectral = norm_pair(x)
    data = {'seminorms': [seminorm_rk(x, k) for k in range(args.level + 1)],
            'frobenius': frobenius, 'spectral': spectral}
    _emit_json(data, args.out)
    return EXIT_OK


def cmd_verify_all(args: argparse.Namespace) -> int:
    report: VerificationReport = verify_all(seed=args.seed, tol=args.tol)
    report.print_report()
    if args.out is not None:
        write_json(report.to_dict(), args.out)
    return EXIT_OK if report.passed else EXIT_VERIFICATION_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='nctorus', description='Noncommutative torus spectral triples, their '
                                                                 'finite coverings and the Moyal matrix calculus.')
    parser.add_argument('-v', '--verbose', action='count', default=0, help='-v for INFO, -vv for DEBUG logging.')
    commands = parser.add_subparsers(dest='command', required=True)

    star = commands.add_parser('star', help='Star product of two element files.')
    star.add_argument('left')
    star.add_argument('right')
    star.add_argument('--out', default=None, help='Output element JSON, stdout when omitted.')
    star.add_argument('--oracle', action='store_true', help='Also compare against the dense double-loop oracle.')
    star.set_defaults(handler=cmd_star)

    spectrum = commands.add_parser('spectrum', help='Spectrum of the truncated Dirac operator.')
    spectrum.add_argument('theta', help='JSON file with a "theta" matrix, element files are accepted.')
    spectrum.add_argument('--window', type=int, default=1, help='Truncation radius R >= 1.')
    spectrum.add_argument('--format', choices=['json', 'csv'], default='json')
    spectrum.add_argument('--out', default=None)
    spectrum.set_defaults(handler=cmd_spectrum)

    cover = commands.add_parser('cover', help='Finite coverings: verify, lift or build a tower.')
    cover.add_argument('action', choices=['verify', 'lift', 'tower'])
    cover.add_argument('--spec', default=None, help='CoveringSpec JSON file.')
    cover.add_argument('--k', default=None, help='Comma separated multiplicities, e.g. 2,3.')
    cover.add_argument('--theta12', type=float, default=0.0, help='θ_12 of the base torus used with --k.')
    cover.add_argument('--primes', default=None, help='Comma separated tower factors, e.g. 2,3.')
    cover.add_argument('--theta', type=float, default=0.3, help='θ of the tower base Θ = θJ.')
    cover.add_argument('--n', type=int, default=2, help='Dimension of the tower base.')
    cover.add_argument('--seed', type=int, default=None)
    cover.add_argument('--tol', type=float, default=None)
    cover.add_argument('--out', default=None)
    cover.set_defaults(handler=cmd_cover)

    moyal = commands.add_parser('moyal', help='Seminorms and norms of a Moyal matrix file.')
    moyal.add_argument('file')
    moyal.add_argument('--level', type=int, default=1, help='Largest seminorm level k.')
    moyal.add_argument('--out', default=None)
    moyal.set_defaults(handler=cmd_moyal)

    verify = commands.add_parser('verify-all', help='Run every identity suite.')
    verify.add_argument('--seed', type=int, default=None)
    verify.add_argument('--tol', type=float, default=None)
    verify.add_argument('--out', default=None)
    verify.set_defaults(handler=cmd_verify_all)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Entry point of the nctorus command.

    :param argv: arguments without the program name, sys.argv[1:] when None.
    :return: exit code, 0 success, 1 failed verification, 2 parse error, 3 invalid parameters, 4 size cap.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as error:
        return EXIT_PARSE_ERROR if error.code else EXIT_OK
    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(level=level, format='%(asctime)s %(levelname)s %(name)s: %(message)s')
    try:
        return args.handler(args)
    except ParseError as error:
        logger.error('parse error: %s', error)
        print(f'error: {error}', file=sys.stderr)
        return EXIT_PARSE_ERROR
    except (ThetaMismatchError, InvalidParameterError, DimensionMismatchError) as error:
        logger.error('invalid parameters: %s', error)
        print(f'error: {error}', file=sys.stderr)
        return EXIT_INVALID_PARAMETERS
    except SizeCapError as error:
        logger.error('size cap: %s', error)
        print(f'error: {error}', file=sys.stderr)
        return EXIT_SIZE_CAP
    except ConsistencyError as error:
        logger.error('consistency check failed: %s', error)
        print(f'error: {error}', file=sys.stderr)
        return EXIT_VERIFICATION_FAILED


if __name__ == '__main__':
    sys.exit(main())
