from dataclasses import dataclass, field
import numpy as np


@dataclass
class PairingResult():
    """
    Enclosure of a Weil-Petersson pairing of length gradients obtained from the
    truncated double coset sum. `lo` is the scaled partial sum, `hi` adds the
    scaled tail estimate.
    """

    alpha: str
    beta: str
    partial_sum: float
    tail_estimate: float
    lo: float
    hi: float
    terms_used: int
    truncation_radius: float
    diagonal: float = 0.0                                   # l_alpha if alpha and beta are the same class
    fitted_constants: dict = field(default_factory=dict)
    warnings: list = field(default_factory=list)
    history: list = field(default_factory=list)             # (radius, partial_sum, tail_estimate) per step

    def __get_value_interval(self):
        return (self.lo, self.hi)

    value_interval = property(__get_value_interval)

    def __get_width(self):
        return self.hi - self.lo

    width = property(__get_width)

    def __get_midpoint(self):
        return 0.5 * (self.lo + self.hi)

    midpoint = property(__get_midpoint)

    def to_dict(self):
        return {
            'alpha': self.alpha,
            'beta': self.beta,
            'R': self.truncation_radius,
            'lo': self.lo,
            'hi': self.hi,
            'partial_sum': self.partial_sum,
            'tail_estimate': self.tail_estimate,
            'terms': self.terms_used,
            'fitted_constants': dict(self.fitted_constants),
            'warnings': list(self.warnings),
        }


def scale_interval(lo, hi, factor):
    """Image of [lo, hi] under x -> factor * sqrt(x), clamped at zero."""
    return factor * np.sqrt(max(lo, 0.0)), factor * np.sqrt(max(hi, 0.0))
