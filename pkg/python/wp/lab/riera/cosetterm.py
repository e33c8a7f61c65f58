from dataclasses import dataclass
import numpy as np

from ..laberror import DomainError
from ..hplane import MoebiusMap, CROSSING, DISJOINT

# Above this u the summand is evaluated from its power series in 1/u
SERIES_THRESHOLD = 10.0
SERIES_TERMS = 16


def f_term(u):
    """
    Summand u ln((u + 1) / (u - 1)) - 2 of disjoint axes at cosh-distance u > 1.
    Written as 2u artanh(1/u) - 2 = 2 sum_k u^(-2k) / (2k + 1), which behaves
    like 2 / (3u^2) for large u.
    """

    u = np.asarray(u, dtype=float)
    if np.any(u <= 1):
        raise DomainError(f'The summand is defined for u > 1, got {np.min(u)}.')

    with np.errstate(divide='ignore', invalid='ignore'):
        direct = 2 * u * np.arctanh(1 / u) - 2
        w = 1 / np.maximum(u, SERIES_THRESHOLD)**2
        series = sum(2 * w**k / (2 * k + 1) for k in range(1, SERIES_TERMS + 1))
    value = np.where(u > SERIES_THRESHOLD, series, direct)
    return float(value) if value.ndim == 0 else value


def f_derivative(u):
    """Derivative of `f_term` with respect to u, negative for u > 1."""

    u = np.asarray(u, dtype=float)
    with np.errstate(divide='ignore', invalid='ignore'):
        direct = 2 * np.arctanh(1 / u) - 2 * u / (u**2 - 1)
        w = 1 / np.maximum(u, SERIES_THRESHOLD)
        series = -sum(4 * k / (2 * k + 1) * w**(2 * k + 1) for k in range(1, SERIES_TERMS + 1))
    value = np.where(u > SERIES_THRESHOLD, series, direct)
    return float(value) if value.ndim == 0 else value


def crossing_term(u):
    """Summand u ln|(u + 1) / (u - 1)| - 2 of axes crossing at angle arccos(u)."""

    u = np.asarray(u, dtype=float)
    if np.any((u < 0) | (u >= 1)):
        raise DomainError(f'Crossing summand is defined for 0 <= u < 1, got {u}.')
    value = u * np.log((1 + u) / (1 - u)) - 2
    return float(value) if value.ndim == 0 else value


def riera_term(tag, u):
    return f_term(u) if tag == DISJOINT else crossing_term(u)


@dataclass(frozen=True)
class CosetTerm():
    """
    One double coset of the sum. The representative is normalized so that the
    foot of the common perpendicular (or the crossing point) on the axis of
    alpha has radial coordinate in [1, e^l) in the frame where that axis is
    the imaginary axis.
    """

    representative: MoebiusMap
    tag: str
    u: float
    distance: float
    term_value: float
    radial: float = 1.0
    near_tangent: bool = False

    def __get_crossing(self):
        return self.tag == CROSSING

    crossing = property(__get_crossing)
