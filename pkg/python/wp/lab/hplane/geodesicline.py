from dataclasses import dataclass
import numpy as np

from ..constants import Constants
from ..laberror import DomainError


@dataclass(frozen=True)
class GeodesicLine():
    """
    Complete geodesic of the upper half-plane given by its two ideal endpoints.
    Finite endpoints are stored in increasing order, a vertical line is stored
    as (p, inf).
    """

    p: float
    q: float

    def __post_init__(self):
        p, q = float(self.p), float(self.q)
        if np.isnan(p) or np.isnan(q):
            raise DomainError('Geodesic endpoints must not be NaN.')
        if np.isinf(p) and np.isinf(q):
            raise DomainError('At most one endpoint can be at infinity.')
        if np.isinf(p):
            p, q = q, np.inf
        elif not np.isinf(q) and q < p:
            p, q = q, p
        if not np.isinf(q) and abs(q - p) <= Constants.ENDPOINT_TOLERANCE * max(1.0, abs(p), abs(q)):
            raise DomainError(f'Geodesic endpoints {p} and {q} coincide.')
        object.__setattr__(self, 'p', p)
        object.__setattr__(self, 'q', q)

    @classmethod
    def imaginary_axis(cls):
        return cls(0.0, np.inf)

    def __get_is_vertical(self):
        return np.isinf(self.q)

    is_vertical = property(__get_is_vertical)

    def __get_endpoints(self):
        return (self.p, self.q)

    endpoints = property(__get_endpoints)

    def image(self, m):
        """Image of the line under a Moebius map."""
        return GeodesicLine(m.boundary_image(self.p), m.boundary_image(self.q))
