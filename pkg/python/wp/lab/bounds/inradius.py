import numpy as np

from ..laberror import DomainError
from .systolebounds import sys_floor, sys_lower, sys_upper, sys_upper_closed


def inradius_bounds(g, n, U, K):
    """
    Bounds on the inradius of moduli space in the genus direction. The upper
    bound sqrt(32 pi ln g) holds for every n; the lower bound is the square
    root of the systole lower bound divided by the Lipschitz constant K.

    Returns
    -------
    (lower, upper): tuple of float
    """

    if g < 2:
        raise DomainError(f'Inradius bounds need genus at least 2, got {g}.')
    if K <= 0:
        raise DomainError(f'Lipschitz constant must be positive, got {K}.')

    lower = np.sqrt(sys_lower(g, n, U)) / K
    upper = np.sqrt(32 * np.pi * np.log(g))
    return float(lower), float(upper)


def inradius_upper_closed(g):
    """Intermediate upper bound sqrt(2 pi * 4 arccosh(4g)), before the logarithmic estimate."""
    return float(np.sqrt(2 * np.pi * sys_upper_closed(g)))


def inradius_n_bounds(g, n, K, c_hat=None):
    """
    Bounds on the inradius in the puncture direction, where it stays
    comparable to 1. The lower end is the larger of sqrt(2 arcsinh 1) / K and,
    when the gradient bound `c_hat` of the square root length is known,
    1 / sqrt(c_hat). The upper end is sqrt(2 pi sys_upper(g, n)).
    """

    if K <= 0:
        raise DomainError(f'Lipschitz constant must be positive, got {K}.')
    if c_hat is not None and c_hat <= 0:
        raise DomainError(f'Gradient bound must be positive, got {c_hat}.')

    lower = np.sqrt(sys_floor()) / K
    if c_hat is not None:
        lower = max(lower, 1 / np.sqrt(c_hat))
    upper = np.sqrt(2 * np.pi * sys_upper(g, n))
    return float(lower), float(upper)


def leaf_distance_bounds(s, t, K):
    """
    Bounds on the Weil-Petersson distance between the boundaries of the
    s-thick and t-thick parts, (sqrt(s) - sqrt(t)) / K' and K' (sqrt(s) - sqrt(t))
    with K' = max(sqrt(2 pi), 1 / K).
    """

    if not s > t >= 0:
        raise DomainError(f'Need s > t >= 0, got s = {s}, t = {t}.')
    if K <= 0:
        raise DomainError(f'Lipschitz constant must be positive, got {K}.')

    kp = max(np.sqrt(2 * np.pi), 1 / K)
    d = np.sqrt(s) - np.sqrt(t)
    return float(d / kp), float(kp * d)
