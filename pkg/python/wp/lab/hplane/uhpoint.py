from dataclasses import dataclass
import numpy as np

from ..laberror import DomainError


@dataclass(frozen=True)
class UHPoint():
    """
    Point of the upper half-plane, x + iy with y > 0.
    """

    x: float
    y: float

    def __post_init__(self):
        if not np.isfinite(self.x) or not np.isfinite(self.y) or self.y <= 0:
            raise DomainError(f'Point ({self.x}, {self.y}) is not in the upper half-plane.')

    @classmethod
    def from_complex(cls, z):
        return cls(float(np.real(z)), float(np.imag(z)))

    @classmethod
    def from_polar(cls, r, theta):
        if r <= 0 or not 0 < theta < np.pi:
            raise DomainError(f'Polar coordinates ({r}, {theta}) are out of range.')
        return cls(r * np.cos(theta), r * np.sin(theta))

    def __get_z(self):
        return complex(self.x, self.y)

    z = property(__get_z)

    def __get_r(self):
        return float(np.hypot(self.x, self.y))

    r = property(__get_r)

    def __get_theta(self):
        return float(np.arctan2(self.y, self.x))

    theta = property(__get_theta)
