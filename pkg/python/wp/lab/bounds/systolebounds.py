import numpy as np

from ..laberror import DomainError


def sys_floor():
    """Universal lower bound 2 arcsinh(1) for the maximal systole."""
    return float(2 * np.arcsinh(1.0))


def sys_lower(g, n, U):
    """
    Lower bound min(U ln g, 2 arccosh(2(g - 1) / n + 1)) for the maximal
    systole, U ln g alone for closed surfaces.
    """

    if g < 2:
        raise DomainError(f'Systole lower bound needs genus at least 2, got {g}.')
    if n < 0 or U <= 0:
        raise DomainError(f'Invalid puncture count {n} or constant U = {U}.')

    value = U * np.log(g)
    if n > 0:
        value = min(value, 2 * np.arccosh(2 * (g - 1) / n + 1))
    return float(value)


def sys_upper(g, n):
    """
    Upper bound min(4 arccosh(3(g + 1)), 4 arccosh((6g - 6 + 3n) / n)) for the
    maximal systole, the first branch alone for closed surfaces.
    """

    if g < 0 or n < 0 or 3 * g + n - 3 <= 0:
        raise DomainError(f'Surface type ({g}, {n}) has no Teichmueller space.')

    value = 4 * np.arccosh(3 * (g + 1))
    if n > 0:
        value = min(value, 4 * np.arccosh((6 * g - 6 + 3 * n) / n))
    return float(value)


def sys_upper_closed(g):
    """Weaker form 4 arccosh(4g) of the upper bound used for the inradius."""
    if g < 2:
        raise DomainError(f'Genus must be at least 2, got {g}.')
    return float(4 * np.arccosh(4 * g))


def sys_upper_n_direction(n, a):
    """Upper bound 4 arccosh((6 n^a - 6 + 3n) / n) with genus n^a, bounded as n grows."""
    if not 0 < a < 1 or n < 1:
        raise DomainError(f'Need n >= 1 and a in (0, 1), got n = {n}, a = {a}.')
    return float(4 * np.arccosh((6 * n**a - 6 + 3 * n) / n))


def two_curve_lower(K):
    """
    Lower bound 2 sqrt(2 arcsinh 1) / K on the length of a Weil-Petersson path
    joining the strata of a filling pair of curves, for the once-punctured
    torus and the four-punctured sphere.
    """
    if K <= 0:
        raise DomainError(f'Lipschitz constant must be positive, got {K}.')
    return float(2 * np.sqrt(2 * np.arcsinh(1.0)) / K)


def thick_part_floor(r0):
    """Points at distance at least r0 from the boundary have systole at least r0^2 / (4 pi^2)."""
    if r0 <= 0:
        raise DomainError(f'Radius must be positive, got {r0}.')
    return float(r0**2 / (4 * np.pi**2))


def radius_margin(R):
    return float(R + 1)


def ricci_constant_estimate(eps0):
    """Rough size 2 / (pi eps0^2) of the Ricci lower bound constant on the eps0-thick part."""
    if eps0 <= 0:
        raise DomainError(f'Thick part threshold must be positive, got {eps0}.')
    return float(2 / (np.pi * eps0**2))
