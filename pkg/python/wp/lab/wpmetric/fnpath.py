from dataclasses import dataclass, field
import numpy as np
import pandas as pd

from ..laberror import DomainError
from ..fuchsian import FNCoordinates


@dataclass
class PathSample():
    t: float
    fn: FNCoordinates
    speed: float = np.nan
    systole: float = np.nan
    systolic_words: list = field(default_factory=list)


class FNPath():
    """
    Piecewise linear path in Fenchel-Nielsen coordinates through the knots
    (t_i, fn_i), together with the samples at which quantities along the path
    have been evaluated. The parameter runs over [0, 1].
    """

    def __init__(self, knots, samples=None, duration=1.0):
        ts = np.array([t for t, _ in knots], dtype=float)
        if ts.size < 1:
            raise DomainError('A path needs at least one knot.')
        if np.any(np.diff(ts) <= 0):
            raise DomainError('Path parameters must be strictly increasing.')

        self.__knots = [(float(t), fn) for t, fn in knots]
        self.__topology = knots[0][1].topology
        self.__samples = samples if samples is not None else []
        self.__duration = duration                  # Flow time covered by the unit parameter interval

    @staticmethod
    def segment(start: FNCoordinates, end: FNCoordinates):
        return FNPath([(0.0, start), (1.0, end)])

    @staticmethod
    def constant(fn: FNCoordinates):
        return FNPath([(0.0, fn), (1.0, fn)])

    @staticmethod
    def through(points):
        """Path through the given coordinates at equally spaced parameters."""
        n = len(points)
        if n == 1:
            return FNPath.constant(points[0])
        return FNPath([(i / (n - 1), p) for i, p in enumerate(points)])

    def __get_knots(self):
        return self.__knots

    knots = property(__get_knots)

    def __get_topology(self):
        return self.__topology

    topology = property(__get_topology)

    def __get_duration(self):
        return self.__duration

    duration = property(__get_duration)

    def __get_samples(self):
        return self.__samples

    def __set_samples(self, value):
        self.__samples = value

    samples = property(__get_samples, __set_samples)

    def __get_start(self):
        return self.__knots[0][1]

    start = property(__get_start)

    def __get_end(self):
        return self.__knots[-1][1]

    end = property(__get_end)

    def __get_accumulated_length(self):
        """Trapezoid sum of the sampled speeds."""
        if len(self.__samples) < 2:
            return 0.0
        t = np.array([s.t for s in self.__samples])
        v = np.array([s.speed for s in self.__samples])
        return float(np.sum(0.5 * (v[1:] + v[:-1]) * np.diff(t)))

    accumulated_length = property(__get_accumulated_length)

    def __piece(self, t):
        ts = [k[0] for k in self.__knots]
        i = int(np.clip(np.searchsorted(ts, t, side='right') - 1, 0, max(0, len(ts) - 2)))
        return i

    def at(self, t) -> FNCoordinates:
        if len(self.__knots) == 1:
            return self.__knots[0][1]
        i = self.__piece(t)
        (t0, a), (t1, b) = self.__knots[i], self.__knots[i + 1]
        w = (t - t0) / (t1 - t0)
        x = (1 - w) * a.as_vector() + w * b.as_vector()
        return FNCoordinates.from_vector(self.__topology, x)

    def velocity(self, t):
        """Derivative of the coordinate vector, from the linear piece containing `t`."""
        if len(self.__knots) == 1:
            return np.zeros(2 * self.__topology.curve_count)
        i = self.__piece(t)
        (t0, a), (t1, b) = self.__knots[i], self.__knots[i + 1]
        return (b.as_vector() - a.as_vector()) / (t1 - t0)

    def grid(self, n):
        """Uniform grid of `n` parameters that also contains every knot."""
        ts = set(np.linspace(0.0, 1.0, n).tolist())
        ts.update(k[0] for k in self.__knots)
        return np.array(sorted(ts))

    def reversed(self):
        knots = [(1.0 - t, fn) for t, fn in reversed(self.__knots)]
        return FNPath(knots)

    def concatenate(self, other):
        """This path followed by `other`, reparametrized onto [0, 1]."""
        knots = [(0.5 * t, fn) for t, fn in self.__knots]
        knots += [(0.5 + 0.5 * t, fn) for t, fn in other.knots if t > 0]
        return FNPath(knots)

    def to_dataframe(self):
        n = self.__topology.curve_count
        rows = []
        cum = 0.0
        for i, s in enumerate(self.__samples):
            if i > 0:
                p = self.__samples[i - 1]
                cum += 0.5 * (s.speed + p.speed) * (s.t - p.t)
            row = {'t': s.t}
            row.update({f'length_{j}': s.fn.lengths[j] for j in range(n)})
            row.update({f'twist_{j}': s.fn.twists[j] for j in range(n)})
            row['systole'] = s.systole
            row['realizing_words'] = ' '.join(s.systolic_words)
            row['speed'] = s.speed
            row['cum_length'] = cum
            rows.append(row)
        return pd.DataFrame(rows)
