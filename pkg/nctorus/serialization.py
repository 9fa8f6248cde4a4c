import csv
import io
import json
from pathlib import Path
from typing import Any, Dict, Sequence, Union
import numpy as np
from nctorus.algebra import SkewMatrix, TorusElement
from nctorus.coverings import CoveringSpec, TowerReport, tower_report
from nctorus.dirac import SpectrumReport, TruncatedOperator
from nctorus.exceptions import NcTorusError, ParseError
from nctorus.moyal import MoyalMatrix

PathLike = Union[str, Path]


def _require(data: Dict[str, Any], key: str, kind: str) -> Any:
    if not isinstance(data, dict) or key not in data:
        raise ParseError(f'{kind} JSON is missing the field "{key}"')
    return data[key]


def _parse_theta(rows: Any, kind: str) -> SkewMatrix:
    try:
        return SkewMatrix.from_array(rows)
    except (TypeError, ValueError) as error:
        if isinstance(error, NcTorusError):
            raise
        raise ParseError(f'{kind} JSON carries a malformed theta matrix: {error}') from error


def _theta_rows(theta: SkewMatrix) -> list:
    return [list(row) for row in theta.entries]


def read_json(path: PathLike) -> Any:
    """
    Load a JSON document, malformed text and unreadable files become ParseError.
    """
    try:
        with open(path, 'r', encoding='utf-8') as f:
            return json.load(f)
    except OSError as error:
        raise ParseError(f'Cannot read {path}: {error}') from error
    except json.JSONDecodeError as error:
        raise ParseError(f'{path} is not valid JSON: {error}') from error
    except UnicodeDecodeError as error:
        raise ParseError(f'{path} is not UTF-8 text: {error}') from error


def write_json(data: Any, path: PathLike) -> None:
    with open(path, 'w', encoding='utf-8') as f:
        json.dump(data, f, indent=2)
        f.write('\n')


def element_to_dict(a: TorusElement) -> dict:
    """
    {"n", "theta", "coeffs": [{"k", "re", "im"}]} with coefficients in lexicographic order.
    """
    return {'n': a.n, 'theta': _theta_rows(a.theta),
            'coeffs': [{'k': list(k), 're': v.real, 'im': v.imag} for k, v in a.sorted_items()]}


def element_from_dict(data: dict) -> TorusElement:
    """
    Inverse of element_to_dict. Input order of the coefficients is irrelevant, keys must be unique.

    :param data: parsed JSON object.
    :return: TorusElement.
    """
    n = _require(data, 'n', 'Element')
    theta = _parse_theta(_require(data, 'theta', 'Element'), 'Element')
    if theta.n != n:
        raise ParseError(f'Element JSON declares n = {n}, but theta is {theta.n}x{theta.n}')
    coeffs = {}
    for entry in _require(data, 'coeffs', 'Element'):
        try:
            k = tuple(int(v) for v in entry['k'])
            value = complex(float(entry['re']), float(entry['im']))
        except (KeyError, TypeError, ValueError) as error:
            raise ParseError(f'Malformed coefficient entry {entry}: {error}') from error
        if k in coeffs:
            raise ParseError(f'Duplicate coefficient index {k}')
        coeffs[k] = value
    return TorusElement(theta=theta, coeffs=coeffs)


def operator_to_dict(operator: TruncatedOperator) -> dict:
    return {'dim': operator.dim,
            'rows': [[[float(v.real), float(v.imag)] for v in row] for row in operator.matrix]}


def operator_matrix_from_dict(data: dict) -> np.ndarray:
    """
    Dense complex matrix of an operator dump.
    """
    dim = _require(data, 'dim', 'Operator')
    try:
        matrix = np.array([[complex(re, im) for re, im in row] for row in _require(data, 'rows', 'Operator')],
                          dtype=complex).reshape(dim, dim)
    except (TypeError, ValueError) as error:
        raise ParseError(f'Malformed operator rows: {error}') from error
    return matrix


def spectrum_to_dict(report: SpectrumReport) -> dict:
    return {'eigenvalues': list(report.eigenvalues), 'window': report.window.radius, 'n': report.window.n}


def spectrum_to_csv(report: SpectrumReport) -> str:
    """
    One eigenvalue per line.
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    for value in report.eigenvalues:
        writer.writerow([repr(value)])
    return buffer.getvalue()


def theta_from_dict(data: Any) -> SkewMatrix:
    """
    Accepts either {"theta": [[...]]} or an element file, whose Θ is used.
    """
    return _parse_theta(_require(data, 'theta', 'Theta'), 'Theta')


def covering_to_dict(spec: CoveringSpec) -> dict:
    return {'k': list(spec.k), 'base_theta': _theta_rows(spec.base_theta),
            'cover_theta': _theta_rows(spec.cover_theta)}


def covering_from_dict(data: dict) -> CoveringSpec:
    """
    Validated CoveringSpec, incompatible angles raise InvalidParameterError.
    """
    k = _require(data, 'k', 'Covering')
    base = _parse_theta(_require(data, 'base_theta', 'Covering'), 'Covering')
    cover = _parse_theta(_require(data, 'cover_theta', 'Covering'), 'Covering')
    try:
        k = tuple(int(v) for v in k)
    except (TypeError, ValueError) as error:
        raise ParseError(f'Covering multiplicities must be integers, but was given: {k}') from error
    return CoveringSpec(k=k, base_theta=base, cover_theta=cover)


def tower_to_dict(specs: Sequence[CoveringSpec], report: TowerReport = None) -> dict:
    """
    Steps of the tower followed by the group-order table and its exactness rows.
    """
    report = tower_report(specs) if report is None else report
    return {'specs': [covering_to_dict(spec) for spec in specs],
            'moduli': list(report.moduli),
            'orders': [{'upper': j, 'lower': i, 'order': order} for (j, i), order in sorted(report.orders.items())],
            'exactness': [{'m': m, 'l': l, 'k': k, 'ok': ok} for m, l, k, ok in report.exactness],
            'kernel_sizes': list(report.kernel_sizes),
            'exact': report.exact}


def moyal_to_dict(x: MoyalMatrix) -> dict:
    return {'theta': x.theta, 'M': x.size, 'N': x.N,
            'factors': [[[[float(v.real), float(v.imag)] for v in row] for row in c] for c in x.factors]}


def moyal_from_dict(data: dict) -> MoyalMatrix:
    """
    MoyalMatrix from {"theta", "M", "N", "factors"}; every factor must be M x M and there must be N of them.
    """
    theta = _require(data, 'theta', 'Moyal')
    size = _require(data, 'M', 'Moyal')
    count = _require(data, 'N', 'Moyal')
    try:
        factors = [np.array([[complex(re, im) for re, im in row] for row in c], dtype=complex)
                   for c in _require(data, 'factors', 'Moyal')]
    except (TypeError, ValueError) as error:
        raise ParseError(f'Malformed Moyal factors: {error}') from error
    if len(factors) != count or any(c.shape != (size, size) for c in factors):
        raise ParseError(f'Moyal JSON declares N = {count}, M = {size}, but carries factors of shapes '
                         f'{[c.shape for c in factors]}')
    return MoyalMatrix(theta=float(theta), factors=tuple(factors))
