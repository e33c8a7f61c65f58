from ..constants import Constants
from .config import Config


class EnumerationConfig(Config):
    """
    Configuration of surface group construction and word enumeration.

    Parameters
    ----------
    tie_tolerance: float
        Classes within this distance of the minimum length are systolic.
    hyperbolic_tolerance: float
        Elements with |tr| <= 2 + tol are treated as parabolic or elliptic.
    dedup_tolerance: float
        Quantum used when bucketing group elements and axis endpoints.
    residual_tolerance: float
        Largest accepted relation residual of a constructed group.
    cusp_cutoff: float
        Depth at which ideal vertices of the Dirichlet domain are truncated.
    max_domain_rounds: int
        Number of times the Dirichlet domain search radius may be doubled.
    """

    def __init__(self):
        self.tie_tolerance = Constants.TIE_TOLERANCE
        self.hyperbolic_tolerance = Constants.HYPERBOLIC_TOLERANCE
        self.dedup_tolerance = Constants.DEDUP_TOLERANCE
        self.residual_tolerance = Constants.RESIDUAL_TOLERANCE
        self.cusp_cutoff = Constants.CUSP_CUTOFF
        self.max_domain_rounds = 6

        super().__init__()
