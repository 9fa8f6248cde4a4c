from typing import Optional
import numpy as np
from nctorus.exceptions import DimensionMismatchError, InvalidParameterError
from nctorus.global_settings import settings
from .skew_matrix import SkewMatrix
from .torus_element import TorusElement
from .truncation_window import TruncationWindow


def random_element(window: TruncationWindow, decay: float, seed: Optional[int] = None,
                   theta: Optional[SkewMatrix] = None, support_size: Optional[int] = None) -> TorusElement:
    """
    Seeded random element supported in the window with |â(k)| <= (1 + ‖k‖)^(-decay).

    :param window: TruncationWindow holding the support.
    :param decay: positive decay exponent.
    :param seed: seed of the generator, settings.rnd_seed when None.
    :param theta: deformation matrix, the zero matrix of the window dimension when None.
    :param support_size: number of window points drawn without replacement, the whole window when None.
    :return: TorusElement.
    """
    if decay <= 0:
        raise InvalidParameterError(f'Decay exponent must be > 0, but was given: {decay}')
    if theta is None:
        theta = SkewMatrix.zero(window.n)
    elif theta.n != window.n:
        raise DimensionMismatchError(f'Window dimension {window.n} differs from Θ dimension {theta.n}')
    rng = np.random.default_rng(settings.rnd_seed if seed is None else seed)
    points = window.points()
    if support_size is not None and support_size < len(points):
        chosen = np.sort(rng.choice(len(points), size=support_size, replace=False))
        points = points[chosen]
    bound = (1.0 + np.linalg.norm(points, axis=1)) ** (-decay)
    magnitude = bound * rng.random(len(points))
    phase = np.exp(2j * np.pi * rng.random(len(points)))
    return TorusElement.from_arrays(theta, points, magnitude * phase)
