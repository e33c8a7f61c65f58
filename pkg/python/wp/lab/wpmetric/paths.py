from dataclasses import dataclass
import numpy as np

from ..setup_logger import logger
from ..laberror import NonConvergentRefinement
from ..fuchsian import systole, is_conjugate
from ..riera import grad_sqrt_norm
from .curvebasis import CurveBasis
from .fnpath import FNPath, PathSample
from .metric import MetricContext, tangent_norm


def _speeds(path: FNPath, ts, basis, context):
    """
    Speeds at both ends of every grid interval, taking the velocity of the
    linear piece the interval belongs to.
    """

    cache = {}

    def speed(t, v):
        key = (t, tuple(v))
        if key not in cache:
            cache[key] = tangent_norm(path.at(t), v, basis, context=context)
        return cache[key]

    left, right = np.empty(ts.size - 1), np.empty(ts.size - 1)
    for j in range(ts.size - 1):
        v = path.velocity(0.5 * (ts[j] + ts[j + 1]))
        left[j] = speed(ts[j], v)
        right[j] = speed(ts[j + 1], v)
    return left, right


def _trapezoid(ts, left, right):
    return float(np.sum(0.5 * (left + right) * np.diff(ts)))


def path_length(path: FNPath, basis: CurveBasis, context: MetricContext = None):
    """
    Weil-Petersson length of a coordinate path by the trapezoid rule, doubling
    the grid until two successive values agree within the refinement
    tolerance. The samples of the final grid are stored on the path.
    """

    context = context if context is not None else MetricContext()
    flow = context.flow

    n = flow.samples
    ts = path.grid(n)
    left, right = _speeds(path, ts, basis, context)
    length = _trapezoid(ts, left, right)

    for _ in range(flow.max_refinements):
        n = 2 * n - 1
        ts_fine = path.grid(n)
        left_fine, right_fine = _speeds(path, ts_fine, basis, context)
        refined = _trapezoid(ts_fine, left_fine, right_fine)

        change = abs(refined - length)
        logger.debug(f'Path length {refined:.9f} on {ts_fine.size} samples, change {change:.3e}.')
        ts, left, right, length = ts_fine, left_fine, right_fine, refined
        if change <= flow.refine_tolerance * abs(refined):
            break
    else:
        raise NonConvergentRefinement(f'Path length did not settle within {flow.refine_tolerance} after '
                                      f'{flow.max_refinements} refinements, last value {length:.6f}.')

    speeds = np.concatenate([left[:1], 0.5 * (left[1:] + right[:-1]), right[-1:]])
    path.samples = [PathSample(t=float(t), fn=path.at(t), speed=float(v)) for t, v in zip(ts, speeds)]
    return length


@dataclass
class SystoleTrace():
    """Systoles sampled along a path and the parameters where the systolic set changes."""

    samples: list
    switches: list


def _same_systolic_set(grp_next, words, classes_next, config):
    for w in words:
        g = grp_next.evaluate(w)
        if not any(is_conjugate(grp_next, g, c.matrix, config=config) for c in classes_next):
            return False
    return True


def systole_trace(path: FNPath, context: MetricContext = None, ts=None):
    """
    Systole and systolic classes at the path samples, or on the given grid.
    A switch is reported between consecutive samples whose systolic sets
    differ, the classes being compared through their words in the later group.
    """

    context = context if context is not None else MetricContext()
    if ts is None:
        ts = [s.t for s in path.samples] if path.samples else path.grid(context.flow.samples)

    samples, groups, classes = [], [], []
    for t in ts:
        fn = path.at(t)
        grp = context.group(fn)
        length, systolic = systole(fn, config=context.enumeration, grp=grp)
        samples.append(PathSample(t=float(t), fn=fn, systole=length,
                       systolic_words=[c.word for c in systolic]))
        groups.append(grp)
        classes.append(systolic)

    switches = []
    for i in range(1, len(samples)):
        forward = _same_systolic_set(groups[i], samples[i - 1].systolic_words,
                                     classes[i], context.enumeration)
        backward = _same_systolic_set(groups[i - 1], samples[i].systolic_words,
                                      classes[i - 1], context.enumeration)
        if not (forward and backward):
            switches.append(0.5 * (samples[i - 1].t + samples[i].t))
            logger.info(
                f'Systolic set changes between t = {samples[i - 1].t:.4f} and t = {samples[i].t:.4f}.')

    return SystoleTrace(samples, switches)


@dataclass
class LipschitzReport():
    delta: float            # |sqrt(sys(start)) - sqrt(sys(end))|
    length: float           # Weil-Petersson length of the path
    k_hat: float            # Largest upper end of |grad sqrt(l)| over the systolic classes at the samples
    slack: float
    verdict: bool

    def to_dict(self):
        return dict(delta=self.delta, length=self.length, K_hat=self.k_hat, slack=self.slack,
                    verdict=bool(self.verdict), fitted=True)


def lipschitz_check(path: FNPath, basis: CurveBasis, context: MetricContext = None, slack=0.01):
    """
    Check |sqrt(sys(start)) - sqrt(sys(end))| <= K L (1 + slack), where L is the
    path length, an upper bound on the Weil-Petersson distance, and K is
    estimated from the gradients of the systolic classes along the path.
    """

    context = context if context is not None else MetricContext()
    length = path_length(path, basis, context)

    k_hat = 0.0
    ts = [s.t for s in path.samples]
    trace = systole_trace(path, context, ts=ts)
    for s in trace.samples:
        grp = context.group(s.fn)
        for w in s.systolic_words:
            r = grad_sqrt_norm(grp, grp.geodesic_class(w), config=context.riera, budget=context.budget)
            k_hat = max(k_hat, r.hi)

    delta = abs(np.sqrt(trace.samples[0].systole) - np.sqrt(trace.samples[-1].systole))
    verdict = delta <= k_hat * length * (1 + slack) or delta == 0
    logger.info(f'Lipschitz check: delta {delta:.6e}, length {length:.6e}, K {k_hat:.6f}, verdict {verdict}.')

    return LipschitzReport(delta=float(delta), length=length, k_hat=k_hat, slack=slack, verdict=bool(verdict))
