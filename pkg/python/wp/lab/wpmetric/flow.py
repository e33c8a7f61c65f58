import numpy as np

from ..setup_logger import logger
from ..laberror import DomainError, StepTooLarge, LeftThickPart
from ..fuchsian import FNCoordinates
from .curvebasis import CurveBasis
from .fnpath import FNPath, PathSample
from .metric import MetricContext


def flow_direction(fn: FNCoordinates, k, basis: CurveBasis, context: MetricContext):
    """
    Coordinate velocity of the unit speed flow along -grad l_k. In length
    coordinates the gradient of l_k has components G e_k and squared norm
    G_kk; the length Jacobian maps the coordinate velocity to them.
    """

    gram = context.gram(fn, basis)
    g = gram.matrix
    dl = -g[:, k] / np.sqrt(g[k, k])
    jac = basis.jacobian_at(fn, context.flow, context.enumeration)
    v, *_ = np.linalg.lstsq(jac, dl, rcond=None)
    return v, gram


def pinch_flow(fn: FNCoordinates, alpha, target, step=None, basis: CurveBasis = None,
               context: MetricContext = None) -> FNPath:
    """
    Discrete unit speed flow shrinking the curve `alpha`, a word of the basis,
    until its length is at most `target`. Each step moves `step` in
    Weil-Petersson length; a step that does not shorten alpha is halved, and
    the last step is shortened to land on the target. The path parameter is
    the flow time divided by the total.
    """

    context = context if context is not None else MetricContext()
    flow = context.flow
    step = step if step is not None else flow.step
    basis = basis if basis is not None else CurveBasis.standard(fn, flow, context.enumeration)
    if alpha not in basis.words:
        raise DomainError(f'Curve `{alpha}` is not in the basis {basis.words}.')

    k = basis.index(alpha)
    others = [i for i in range(basis.size) if i != k]
    lengths = context.lengths(fn, basis.words)
    s = lengths[k]
    if target <= 0 or target > s:
        raise DomainError(f'Target length {target} must be in (0, {s}].')

    times, points, speeds = [0.0], [fn], [1.0]

    def partial_path():
        return _make_path(times, points, speeds)

    x = fn
    while lengths[k] > target:
        v, gram = flow_direction(x, k, basis, context)

        h = step
        for _ in range(flow.max_bisections + 1):
            y = FNCoordinates.from_vector(x.topology, x.as_vector() + h * v)
            new = context.lengths(y, basis.words)
            if new[k] < lengths[k]:
                break
            h /= 2
        else:
            raise StepTooLarge(f'Length of `{alpha}` did not decrease after {flow.max_bisections} step halvings.',  # noqa: E501
                               partial=partial_path())

        if new[k] < target:
            # Land on the target, the length is nearly linear over one step
            h *= (lengths[k] - target) / (lengths[k] - new[k])
            y = FNCoordinates.from_vector(x.topology, x.as_vector() + h * v)
            new = context.lengths(y, basis.words)

        if others and np.min(new[others]) < flow.thick_floor:
            i = others[int(np.argmin(new[others]))]
            raise LeftThickPart(f'Curve `{basis.words[i]}` shrank to {new[i]:.4f} below the floor '
                                f'{flow.thick_floor}.', partial=partial_path())

        # Measured speed over the step
        d = (new - lengths) / h
        speed = float(np.sqrt(max(gram.inverse_form(d), 0.0)))

        times.append(times[-1] + h)
        points.append(y)
        speeds.append(speed)
        x, lengths = y, new

        logger.debug(f'Flow step {len(times) - 1}: l = {lengths[k]:.6f}, speed {speed:.4f}.')

    path = _make_path(times, points, speeds)
    logger.info(f'Pinched `{alpha}` from {s:.4f} to {lengths[k]:.4f} in {len(times) - 1} steps, '
                f'WP length {path.accumulated_length:.6f}.')
    return path


def _make_path(times, points, speeds):
    total = times[-1]
    if total == 0:
        path = FNPath([(0.0, points[0]), (1.0, points[0])], duration=0.0)
        path.samples = [PathSample(t=0.0, fn=points[0], speed=0.0)]
        return path

    ts = [t / total for t in times]
    path = FNPath(list(zip(ts, points)), duration=total)
    # Speeds with respect to the normalized parameter
    path.samples = [PathSample(t=t, fn=p, speed=v * total) for t, p, v in zip(ts, points, speeds)]
    path.samples[0].speed = path.samples[1].speed if len(path.samples) > 1 else 0.0
    return path
