from dataclasses import dataclass
import numpy as np

from ..constants import Constants
from ..laberror import DomainError


@dataclass(frozen=True, eq=False)
class MoebiusMap():
    """
    Real Moebius map z -> (az + b) / (cz + d) normalized to unit determinant.
    A map and its negation represent the same element of PSL(2, R).
    """

    a: float
    b: float
    c: float
    d: float

    def __post_init__(self):
        det = self.a * self.d - self.b * self.c
        if not np.isfinite(det) or det <= 0:
            raise DomainError(f'Moebius map must have positive determinant, got {det}.')
        if abs(det - 1.0) > Constants.DETERMINANT_TOLERANCE:
            s = 1.0 / np.sqrt(det)
            object.__setattr__(self, 'a', float(self.a * s))
            object.__setattr__(self, 'b', float(self.b * s))
            object.__setattr__(self, 'c', float(self.c * s))
            object.__setattr__(self, 'd', float(self.d * s))
        else:
            object.__setattr__(self, 'a', float(self.a))
            object.__setattr__(self, 'b', float(self.b))
            object.__setattr__(self, 'c', float(self.c))
            object.__setattr__(self, 'd', float(self.d))

    @classmethod
    def from_matrix(cls, m):
        m = np.asarray(m, dtype=float)
        return cls(m[0, 0], m[0, 1], m[1, 0], m[1, 1])

    @classmethod
    def identity(cls):
        return cls(1.0, 0.0, 0.0, 1.0)

    @classmethod
    def scaling(cls, length):
        """Translation by `length` along the imaginary axis, z -> e^length z."""
        return cls(np.exp(length / 2), 0.0, 0.0, np.exp(-length / 2))

    @classmethod
    def unit_circle_translation(cls, length):
        """Translation by `length` along the unit semicircle, moving i towards 1."""
        return cls(np.cosh(length / 2), np.sinh(length / 2), np.sinh(length / 2), np.cosh(length / 2))

    def __get_matrix(self):
        return np.array([[self.a, self.b], [self.c, self.d]])

    matrix = property(__get_matrix)

    def __get_trace(self):
        return self.a + self.d

    trace = property(__get_trace)

    def __get_abs_trace(self):
        return abs(self.a + self.d)

    abs_trace = property(__get_abs_trace)

    def __matmul__(self, other):
        return MoebiusMap.from_matrix(self.matrix @ other.matrix)

    def inverse(self):
        return MoebiusMap(self.d, -self.b, -self.c, self.a)

    def conjugate(self, by):
        """Return by * self * by^-1."""
        return by @ self @ by.inverse()

    def power(self, k):
        m = np.linalg.matrix_power(self.matrix, abs(k))
        p = MoebiusMap.from_matrix(m)
        return p if k >= 0 else p.inverse()

    def boundary_image(self, x):
        """Image of a point of the ideal boundary, with `np.inf` standing for infinity."""

        if np.isinf(x):
            return np.inf if self.c == 0 else self.a / self.c
        den = self.c * x + self.d
        if den == 0:
            return np.inf
        return (self.a * x + self.b) / den

    def distance(self, other):
        """Max-norm distance in PSL(2, R), minimized over the sign."""
        m, n = self.matrix, other.matrix
        return float(min(np.max(np.abs(m - n)), np.max(np.abs(m + n))))

    def equals(self, other, tol=Constants.DEDUP_TOLERANCE):
        scale = max(1.0, np.max(np.abs(self.matrix)))
        return self.distance(other) <= tol * scale
