from .uhpoint import UHPoint  # noqa: F401
from .moebiusmap import MoebiusMap  # noqa: F401
from .geodesicline import GeodesicLine  # noqa: F401
from .geometry import *  # noqa: F401,F403
from .meanvalue import axis_eigenfunction, fit_mean_value_constant, mean_value_ratios  # noqa: F401
