import numpy as np

from ..setup_logger import logger
from ..laberror import BudgetExceeded, TailNotConvergent
from ..config import RieraConfig
from ..fuchsian import GeodesicClass, SurfaceGroup
from .cosets import compute_lifts
from .pairingresult import PairingResult, scale_interval
from .tailestimate import estimate_tail


def initial_radius(alpha: GeodesicClass):
    return 2 * alpha.length + 2


def next_radius(radius, width, tolerance, max_radius):
    """
    Double the radius, or less when the exponential decay of the tail predicts
    that a smaller step reaches the tolerance.
    """

    predicted = radius + np.log(max(width, tolerance) / tolerance) + 0.5
    return float(min(max_radius, 2 * radius, max(radius + 0.5, predicted)))


def evaluate_pairing(grp: SurfaceGroup, alpha: GeodesicClass, beta: GeodesicClass, radius,
                     config: RieraConfig = None, budget=None) -> PairingResult:
    """Truncated sum at a fixed radius, with its tail estimate."""

    config = config if config is not None else RieraConfig()
    lifts = compute_lifts(grp, alpha, beta, radius, config=config, budget=budget)
    if not lifts.complete:
        raise BudgetExceeded(
            f'Element budget exhausted at truncation radius {radius:.3f}.', partial=lifts.terms)

    terms = lifts.terms
    diagonal = alpha.length if lifts.coincident else 0.0
    partial = float(np.sum([t.term_value for t in terms])) if terms else 0.0
    tail = estimate_tail(config.tail_model, terms, radius, alpha.length, config, beta_length=beta.length)

    lo = 2 / np.pi * (diagonal + partial)
    hi = lo + 2 / np.pi * tail.value

    warnings = []
    near = [t for t in terms if t.near_tangent]
    if near:
        widen = 2 / np.pi * float(np.sum([abs(t.term_value) for t in near]))
        lo, hi = lo - widen, hi + widen
        message = f'{len(near)} near-tangent crossing terms, interval widened by {widen:.3e}.'
        logger.warning(message)
        warnings.append(message)

    constants = dict(tail.constants)
    constants['tail_model'] = tail.model
    return PairingResult(alpha=alpha.word, beta=beta.word,
                         partial_sum=partial, tail_estimate=tail.value, lo=lo, hi=hi,
                         terms_used=len(terms), truncation_radius=radius, diagonal=diagonal,
                         fitted_constants=constants, warnings=warnings,
                         history=[(float(radius), partial, tail.value)])


def grad_pairing(grp: SurfaceGroup, alpha: GeodesicClass, beta: GeodesicClass, radius=None,
                 config: RieraConfig = None, budget=None) -> PairingResult:
    """
    Weil-Petersson pairing of the length gradients of alpha and beta.

    With a fixed `radius` the truncated sum at that radius is returned.
    Otherwise the radius starts at 2 l_alpha + 2 and grows until the scaled
    tail drops below the configured tolerance. Upper ends are clipped so that
    the intervals of successive radii are nested. The returned result keeps
    the (radius, partial sum, tail) of every step in `history`.
    """

    config = config if config is not None else RieraConfig()
    if radius is not None:
        return evaluate_pairing(grp, alpha, beta, radius, config=config, budget=budget)

    radius = min(initial_radius(alpha), config.max_radius)
    best = None
    history = []
    while True:
        try:
            result = evaluate_pairing(grp, alpha, beta, radius, config=config, budget=budget)
        except BudgetExceeded as ex:
            raise BudgetExceeded(f'Element budget exhausted at truncation radius {radius:.3f} before the tail '  # noqa: E501
                                 f'reached {config.tolerance:.1e}.', partial=best) from ex

        if best is not None and result.hi > best.hi:
            message = f'Tail estimate at radius {radius:.3f} clipped to the previous upper end.'
            logger.warning(message)
            result.hi = max(best.hi, result.lo)
            result.tail_estimate = np.pi / 2 * (result.hi - result.lo)
            result.warnings.append(message)
        history.append((float(radius), result.partial_sum, result.tail_estimate))
        result.history = list(history)
        best = result

        width = result.hi - result.lo
        logger.debug(f'Pairing `{alpha.word}`, `{beta.word}` at radius {radius:.3f}: '
                     f'[{result.lo:.9f}, {result.hi:.9f}], {result.terms_used} terms.')
        if width <= config.tolerance:
            return result
        if radius >= config.max_radius:
            raise TailNotConvergent(f'Tail of the pairing `{alpha.word}`, `{beta.word}` is {width:.3e} at the '  # noqa: E501
                                    f'largest radius {radius:.3f}, requested {config.tolerance:.1e}.', partial=result)  # noqa: E501

        radius = next_radius(radius, width, config.tolerance, config.max_radius)


def grad_norm_sq(grp: SurfaceGroup, alpha: GeodesicClass, radius=None,
                 config: RieraConfig = None, budget=None) -> PairingResult:
    """Squared norm of the length gradient of alpha, bounded below by 2 l / pi."""
    return grad_pairing(grp, alpha, alpha, radius=radius, config=config, budget=budget)


def grad_sqrt_norm(grp: SurfaceGroup, alpha: GeodesicClass, radius=None,
                   config: RieraConfig = None, budget=None) -> PairingResult:
    """Norm of the gradient of sqrt(l_alpha), which is |grad l_alpha| / (2 sqrt(l_alpha))."""

    sq = grad_norm_sq(grp, alpha, radius=radius, config=config, budget=budget)
    factor = 1 / (2 * np.sqrt(alpha.length))
    lo, hi = scale_interval(sq.lo, sq.hi, factor)
    return PairingResult(alpha=sq.alpha, beta=sq.beta,
                         partial_sum=sq.partial_sum, tail_estimate=sq.tail_estimate, lo=lo, hi=hi,
                         terms_used=sq.terms_used, truncation_radius=sq.truncation_radius, diagonal=sq.diagonal,  # noqa: E501
                         fitted_constants=dict(sq.fitted_constants), warnings=list(sq.warnings),
                         history=list(sq.history))


def min_lift_separation(grp: SurfaceGroup, alpha: GeodesicClass, radius, config: RieraConfig = None, budget=None):  # noqa: E501
    """Smallest distance from the axis of alpha to its other lifts within `radius`."""

    lifts = compute_lifts(grp, alpha, alpha, radius, config=config, budget=budget)
    if not lifts.terms:
        return np.inf
    return float(min(t.distance for t in lifts.terms))


def lower_bound_ratio(result: PairingResult, length):
    """Ratio of the squared gradient norm to the length, reported against 1."""
    return float(result.midpoint / length)


def short_curve_ratio(result: PairingResult, length):
    """Squared gradient norm over l + l^2 e^(l/2), bounded by a universal constant for l <= 1."""
    return float(result.midpoint / (length + length**2 * np.exp(length / 2)))
