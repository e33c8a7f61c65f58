from .config import Config


class RieraConfig(Config):
    """
    Configuration of the double coset sums.

    Parameters
    ----------
    tolerance: float
        Requested width of the pairing interval.
    max_radius: float
        Largest truncation radius of the R schedule.
    tail_model: str
        `area` follows the mean-value area chain over the collar balls of beta,
        `counting` fits the growth of the coset count.
    eps0: float
        Thick-part threshold used for the fitted constants.
    c2: float
        Constant of the u^-2 decay of the summand. Fitted when None.
    ball_radius: float
        Radius of the disjoint balls of the area model. The collar half-width
        of beta, at most 1, when None, which assumes beta is simple.
    near_tangency: float
        Crossing terms with 1 - u below this value are flagged.
    """

    def __init__(self):
        self.tolerance = 1e-3
        self.max_radius = 12.0
        self.tail_model = 'area'
        self.eps0 = 0.5
        self.c2 = None
        self.ball_radius = None
        self.near_tangency = 1e-6

        super().__init__()
