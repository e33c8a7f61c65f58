import numpy as np
from scipy import integrate, special

from ..constants import Constants
from ..setup_logger import logger
from ..laberror import DomainError
from .boundreport import BoundReport

SPHERE_FACTORS = ['6g7', '6g6']

# Beyond this many units of the rescaled integrand the remainder is below exp(-200)
INTEGRAL_CUTOFF = 200.0


def _log_sinhc(x):
    """log(sinh(x) / x) without cancellation or overflow."""
    if x < 1e-4:
        return x**2 / 6 - x**4 / 180
    elif x < 20:
        return float(np.log(np.sinh(x) / x))
    else:
        return float(x - np.log(2 * x) + np.log1p(-np.exp(-2 * x)))


def _x_coth(x):
    if x < 1e-8:
        return 1 + x**2 / 3
    return float(x / np.tanh(x))


def ball_dimension(g):
    return 6 * g - 7


def log_sphere_factor(g, sphere_factor='6g7'):
    """
    Logarithm of 2 pi^a / Gamma(a) with a = (6g - 7) / 2 for `6g7` and
    a = (6g - 6) / 2 for `6g6`.
    """

    if sphere_factor == '6g7':
        a = (6 * g - 7) / 2
    elif sphere_factor == '6g6':
        a = (6 * g - 6) / 2
    else:
        raise DomainError(f'Unknown sphere factor `{sphere_factor}`, use one of {SPHERE_FACTORS}.')
    return float(np.log(2) + a * np.log(np.pi) - special.gammaln(a))


def _check_volume_args(g, r, c_prime):
    if g < 2:
        raise DomainError(f'Volume bound needs genus at least 2, got {g}.')
    if r <= 0 or c_prime <= 0:
        raise DomainError(f'Radius and curvature constant must be positive, got r = {r}, C\' = {c_prime}.')


def log_ball_integral(m, k, r):
    """
    Logarithm of the comparison integral of (sinh(k t) / k)^m over [0, r].

    With phi(t) = m log(sinh(k t) / k), the integral equals
    exp(phi(r)) / phi'(r) times the integral of exp(phi(r - s / phi'(r)) - phi(r))
    over s in [0, r phi'(r)]. The rescaled integrand is at most exp(-s) since
    phi is concave, and it is evaluated through log1p so that genera far
    beyond the direct range stay accurate.
    """

    a = k * r
    phi = m * (np.log(r) + _log_sinhc(a))
    dphi = m / r * _x_coth(a)
    coth = _x_coth(a) / a

    def integrand(s):
        b = k * s / dphi
        x = 2 * np.sinh(b / 2)**2 - coth * np.sinh(b)
        if x <= -1:
            return 0.0
        return float(np.exp(m * np.log1p(x)))

    upper = min(r * dphi, INTEGRAL_CUTOFF)
    j, _ = integrate.quad(integrand, 0, upper, epsabs=0, epsrel=1e-12, limit=200)
    return float(phi - np.log(dphi) + np.log(j))


def log_volume_upper(g, r, c_prime, sphere_factor='6g7'):
    """
    Logarithm of the comparison bound on the volume of the Weil-Petersson ball
    of radius `r` in the thick part of moduli space of genus `g`, where the
    Ricci curvature is at least -c_prime.
    """

    _check_volume_args(g, r, c_prime)
    m = float(ball_dimension(g))
    k = np.sqrt(c_prime / m)
    return log_sphere_factor(g, sphere_factor) + log_ball_integral(m, k, r)


def volume_upper(g, r, c_prime, sphere_factor='6g7'):
    """The volume bound itself; overflows to inf or underflows to 0 for large genus."""
    with np.errstate(over='ignore', under='ignore'):
        return float(np.exp(log_volume_upper(g, r, c_prime, sphere_factor=sphere_factor)))


def volume_upper_direct(g, r, c_prime, sphere_factor='6g7'):
    """Volume bound by direct quadrature, usable for small genus only."""

    _check_volume_args(g, r, c_prime)
    m = ball_dimension(g)
    k = np.sqrt(c_prime / m)
    v, _ = integrate.quad(lambda t: (np.sinh(k * t) / k)**m, 0, r, epsabs=0, epsrel=1e-12, limit=200)
    return float(np.exp(log_sphere_factor(g, sphere_factor)) * v)


def inradius_radius(g):
    """Default radius rule sqrt(32 pi ln g), the upper bound on the inradius."""
    return float(np.sqrt(32 * np.pi * np.log(float(g))))


def log_decay_ratio(g, r, c_prime, epsilon, sphere_factor='6g7'):
    """log(volume_upper / (1/g)^((3 - epsilon) g))"""
    return log_volume_upper(g, r, c_prime, sphere_factor) + (3 - epsilon) * g * np.log(float(g))


def _tail_start(values):
    """First index from which the values decrease strictly to the end."""
    i = len(values) - 1
    while i > 0 and values[i] < values[i - 1]:
        i -= 1
    return i


def decay_certificate(g_grid, r_rule=None, c_prime=10.0, epsilon=0.5, sphere_factor='6g7'):
    """
    Log-ratios of the volume bound to (1/g)^((3 - epsilon) g) over a grid of
    genera. The verdict holds when the log-ratio decreases strictly on a tail
    of the grid with at least two points; `tail_start` is the first genus of
    that tail.
    """

    if not 0 < epsilon < 3:
        raise DomainError(f'Exponent slack must be in (0, 3), got {epsilon}.')
    if c_prime <= 0:
        raise DomainError(f'Curvature constant must be positive, got {c_prime}.')
    r_rule = r_rule if r_rule is not None else inradius_radius

    g_grid = sorted(int(g) for g in g_grid)
    table = []
    for g in g_grid:
        r = r_rule(g)
        if r > inradius_radius(g) * (1 + 1e-12):
            raise DomainError(f'Radius {r} at genus {g} exceeds the inradius bound {inradius_radius(g)}.')
        log_v = log_volume_upper(g, r, c_prime, sphere_factor)
        table.append(dict(g=g, r=r, log_volume=log_v, log_ratio=log_v + (3 - epsilon) * g * np.log(float(g))))

    ratios = [row['log_ratio'] for row in table]
    start = _tail_start(ratios)
    verdict = len(ratios) - start >= 2
    if not verdict:
        logger.warning(f'Log-ratio is not decreasing at the end of the grid {g_grid[0]}..{g_grid[-1]}.')

    return BoundReport(name='decay_certificate',
                       inputs=dict(g_grid=g_grid, C_prime=c_prime,
                                   epsilon=epsilon, sphere_factor=sphere_factor),
                       formula_id=Constants.ANCHOR_DECAY,
                       extra=dict(table=table, verdict=bool(verdict),
                                  tail_start=g_grid[start] if verdict else None))


def decay_onset(r_rule=None, c_prime=10.0, epsilon=0.5, sphere_factor='6g7', k_max=200):
    """
    Smallest power of two genus from which the log-ratio decreases strictly
    up to genus 2^k_max, or None if it does not decrease at the end of that
    range.
    """

    report = decay_certificate([2**k for k in range(1, k_max + 1)], r_rule=r_rule, c_prime=c_prime,
                               epsilon=epsilon, sphere_factor=sphere_factor)
    return report.extra['tail_start']
