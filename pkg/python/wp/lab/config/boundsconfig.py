from ..constants import Constants
from .config import Config


class BoundsConfig(Config):
    """
    Constants and grids of the closed-form bounds.

    Parameters
    ----------
    U: float
        Constant of the logarithmic systole lower bound.
    K: float
        Lipschitz constant of the square root of the systole function.
    C_prime: float
        Lower bound on the Ricci curvature in the thick part, with sign flipped.
    epsilon: float
        Exponent slack of the volume decay certificate, in (0, 3).
    g_max, n_max: int
        Extent of the (g, n) grid of the bounds table.
    decay_grid: list of int
        Genera of the decay certificate.
    sphere_factor: str
        `6g7` uses the exponent (6g-7)/2 in the sphere factor, `6g6` uses (6g-6)/2.
    """

    def __init__(self):
        self.U = Constants.U_DEFAULT
        self.K = 1.0
        self.C_prime = 10.0
        self.epsilon = 0.5
        self.g_max = 100
        self.n_max = 100
        self.decay_grid = [2**k for k in range(6, 15)]
        self.sphere_factor = '6g7'

        super().__init__()
