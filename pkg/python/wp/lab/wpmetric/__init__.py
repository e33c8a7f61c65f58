from .curvebasis import CurveBasis, length_jacobian, word_lengths, independence_score  # noqa: F401
from .grammatrix import GramMatrix, gram_matrix  # noqa: F401
from .fnpath import FNPath, PathSample  # noqa: F401
from .metric import MetricContext, tangent_norm, length_differential, dist_to_stratum_bound  # noqa: F401
from .paths import path_length, systole_trace, lipschitz_check, SystoleTrace, LipschitzReport  # noqa: F401
from .flow import pinch_flow, flow_direction  # noqa: F401
