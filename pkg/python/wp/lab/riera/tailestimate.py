from functools import lru_cache
import numpy as np
from scipy import integrate, optimize

from ..setup_logger import logger
from ..hplane import fit_mean_value_constant, dist_to_imaginary_axis_xy
from .cosetterm import f_term, f_derivative

TAIL_MODELS = ['area', 'counting']
MAX_BALL_RADIUS = 1.0               # Default cap on the mean-value ball radius


def fit_c2(terms, u_min):
    """
    Fitted constant C2 with f(u) <= C2 u^-2 for all u >= u_min: the supremum of
    f(u) u^2, which decreases towards 2/3, taken at u_min and checked against
    the observed terms.
    """

    c2 = max(2.0 / 3.0, f_term(u_min) * u_min**2)
    for t in terms:
        if not t.crossing and t.u >= u_min:
            c2 = max(c2, t.term_value * t.u**2)
    return float(c2)


def collar_half_width(length):
    """Width arcsinh(1 / sinh(l / 2)) of the embedded collar around a simple closed geodesic of length l."""
    return float(np.arcsinh(1 / np.sinh(length / 2)))


@lru_cache(maxsize=32)
def mean_value_constant(r, seed=0, count=100, samples=4000, min_distance=None):
    """Fitted mean-value constant c(r), cached per radius and sampling region."""
    return fit_mean_value_constant(r, np.random.default_rng(seed), count=count, samples=samples,
                                   min_distance=min_distance)


def fit_counting_constant(distances, radius):
    """
    Smallest kappa with N(d) <= kappa e^d at every observed distance beyond
    half the radius, where N(d) counts the disjoint lifts within d.
    """

    d = np.sort(np.asarray(distances, dtype=float))
    n = np.arange(1, d.size + 1)
    kappa = (d.size + 1) * np.exp(-radius)
    far = d >= radius / 2
    if np.any(far):
        kappa = max(kappa, float(np.max(n[far] * np.exp(-d[far]))))
    return float(kappa)


def counting_tail(radius, kappa):
    """
    Bound on the sum of f(cosh d) over lifts beyond `radius` when
    N(t) <= kappa e^t, from integration by parts:
    int_R^inf kappa e^t (-d/dt f(cosh t)) dt.
    """

    def integrand(t):
        if t > 300:
            return 0.0
        return -kappa * np.exp(t) * f_derivative(np.cosh(t)) * np.sinh(t)

    value, _ = integrate.quad(integrand, radius, np.inf, limit=200)
    return float(value)


def area_tail(radius, length, c2, c_r, r):
    """
    Mean-value chain for the tail. Every lift beyond `radius` with its foot on
    one period of the axis contributes f(u) <= C2 u^-2 <= 4 C2 e^-2d at the
    foot, and e^-2d there is at most c(r) times its integral over the ball of
    radius r around the foot. The balls are disjoint and stay within r of the
    period at distance beyond radius - r, where the integral is closed form.
    """

    if radius <= r:
        return np.inf
    return float(4 * c2 * c_r * area_tail_integral(radius - r, length + 2 * r))


def area_tail_integral(depth, length):
    """
    Integral of exp(-2 dist(z, axis)) dA over the points beyond `depth` from
    the imaginary axis with log|z| in [0, length], on both sides. In Fermi
    coordinates dA = cosh(d) dt dd, which gives l (e^-depth + e^-3depth / 3).
    """
    return float(length * (np.exp(-depth) + np.exp(-3 * depth) / 3))


def area_tail_integral_numeric(depth, length):
    """Same integral as `area_tail_integral` by quadrature in polar coordinates, for checks."""

    # Polar angle at which the distance to the axis drops to `depth`
    theta_max = optimize.brentq(lambda t: dist_to_imaginary_axis_xy(
        np.cos(t), np.sin(t)) - depth, 1e-300, np.pi / 2)

    def integrand(theta, rho):
        # Area element drho dtheta / (rho sin^2 theta)
        weight = np.exp(-2 * dist_to_imaginary_axis_xy(rho * np.cos(theta), rho * np.sin(theta)))
        return weight / (rho * np.sin(theta)**2)

    value, _ = integrate.dblquad(integrand, 1.0, np.exp(length), 0.0, theta_max)
    return 2 * float(value)


def gl_qi_constant(eps0, c2=None, c_r=None):
    """
    Constant D(eps0) = (2 / pi)(1 + C2 c(r) 3 pi) bounding the squared gradient
    norm by D l on the thick part, with r = eps0 / 8. Fitted where not given.
    """

    c2 = c2 if c2 is not None else fit_c2([], np.cosh(eps0 / 4))
    c_r = c_r if c_r is not None else mean_value_constant(eps0 / 8)
    return float(2 / np.pi * (1 + c2 * c_r * 3 * np.pi))


def lipschitz_constant(d):
    """Lipschitz constant sqrt(D) / 2 of sqrt(systole) from the gradient bound D."""
    return float(np.sqrt(d) / 2)


class TailEstimate():
    """Tail bound of a truncated sum together with the constants it was fitted with."""

    def __init__(self, model, value, constants):
        self.model = model
        self.value = value
        self.constants = constants


def estimate_tail(model, terms, radius, length, config, beta_length=None):
    """
    Tail bound beyond `radius` for lifts of a curve of length `beta_length`
    around an axis of period `length`. The area model takes its ball radius
    from the collar of beta, at most MAX_BALL_RADIUS, unless
    `config.ball_radius` is set.
    """

    if model == 'counting':
        distances = [t.distance for t in terms if not t.crossing]
        kappa = fit_counting_constant(distances, radius)
        return TailEstimate(model, counting_tail(radius, kappa), {'kappa': kappa, 'fitted': True})
    elif model == 'area':
        beta_length = beta_length if beta_length is not None else length
        if config.ball_radius is not None:
            r = config.ball_radius
        else:
            r = min(collar_half_width(beta_length), MAX_BALL_RADIUS)
        r = min(r, radius / 2)
        c2 = config.c2 if config.c2 is not None else fit_c2([], np.cosh(radius))
        c_r = mean_value_constant(r, min_distance=min(1.0, radius))
        return TailEstimate(model, area_tail(radius, length, c2, c_r, r),
                            {'C2': c2, 'c_r': c_r, 'r': r, 'fitted': True})
    else:
        logger.error(f'Unknown tail model `{model}`.')
        raise ValueError(f'Unknown tail model `{model}`, expected one of {TAIL_MODELS}.')
