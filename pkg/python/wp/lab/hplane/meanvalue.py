import numpy as np

from .uhpoint import UHPoint
from .geometry import dist_to_imaginary_axis_xy


def axis_eigenfunction(theta):
    """
    u(theta) = 1 - theta cot(theta), a function of the polar angle only that
    satisfies Delta u = 2u for the hyperbolic Laplacian y^2 (d_xx + d_yy).
    """
    theta = np.asarray(theta, dtype=float)
    return 1 - theta / np.tan(theta)


def hyperbolic_laplacian(f, x, y, h=1e-4):
    """Five-point finite-difference hyperbolic Laplacian of f(x, y)."""
    lap = (f(x + h, y) + f(x - h, y) + f(x, y + h) + f(x, y - h) - 4 * f(x, y)) / h**2
    return y**2 * lap


def ball_area(r):
    return 4 * np.pi * np.sinh(r / 2)**2


def sample_ball(p: UHPoint, r, n, rng):
    """
    Sample `n` points uniformly with respect to the hyperbolic area dx dy / y^2
    from the ball of radius `r` around `p`. The ball is the Euclidean disk with
    center x + i y cosh r and radius y sinh r; points are drawn from its bounding
    box and accepted with probability (y_min / y)^2.
    """

    xc, yc, rho = p.x, p.y * np.cosh(r), p.y * np.sinh(r)
    y_min = yc - rho

    xs, ys = [], []
    count = 0
    while count < n:
        m = 2 * (n - count) + 16
        x = rng.uniform(xc - rho, xc + rho, size=m)
        y = rng.uniform(y_min, yc + rho, size=m)
        inside = (x - xc)**2 + (y - yc)**2 <= rho**2
        accept = rng.uniform(size=m) <= (y_min / y)**2
        mask = inside & accept
        xs.append(x[mask])
        ys.append(y[mask])
        count += int(mask.sum())

    return np.concatenate(xs)[:n], np.concatenate(ys)[:n]


def axis_weight_integral(p: UHPoint, r, n, rng):
    """Monte-Carlo estimate of the integral of exp(-2 dist(z, axis)) over B(p, r)."""

    x, y = sample_ball(p, r, n, rng)
    w = np.exp(-2 * dist_to_imaginary_axis_xy(x, y))
    return ball_area(r) * float(np.mean(w))


def random_points(count, rng, theta_margin=0.05, log_r_range=(-2.0, 2.0), min_distance=None):
    """
    Random centers in polar coordinates. With `min_distance` the distance to
    the imaginary axis is drawn from [min_distance, min_distance + 2] instead
    of bounding the angle away from the axis.
    """

    if min_distance is None:
        theta = rng.uniform(theta_margin, np.pi - theta_margin, size=count)
    else:
        d = rng.uniform(min_distance, min_distance + 2.0, size=count)
        theta = np.arcsin(1 / np.cosh(d))
        theta = np.where(rng.uniform(size=count) < 0.5, theta, np.pi - theta)
    r = np.exp(rng.uniform(*log_r_range, size=count))
    return [UHPoint.from_polar(ri, ti) for ri, ti in zip(r, theta)]


def mean_value_ratios(r, points, rng, samples=4000):
    """
    Ratio exp(-2 dist(p, axis)) / integral over B(p, r) for every point; the
    mean-value constant c(r) bounds these ratios from above.
    """

    ratios = np.empty(len(points))
    for i, p in enumerate(points):
        lhs = float(np.exp(-2 * dist_to_imaginary_axis_xy(p.x, p.y)))
        ratios[i] = lhs / axis_weight_integral(p, r, samples, rng)
    return ratios


def fit_mean_value_constant(r, rng, count=100, samples=4000, min_distance=None):
    """
    Fitted stand-in for the mean-value constant c(r): the largest ratio over a
    random sample of centers. Makes no optimality claim.
    """

    points = random_points(count, rng, min_distance=min_distance)
    return float(np.max(mean_value_ratios(r, points, rng, samples=samples)))
