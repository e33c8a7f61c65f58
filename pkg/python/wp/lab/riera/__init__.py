from .cosetterm import CosetTerm, f_term, f_derivative, crossing_term, riera_term  # noqa: F401
from .pairingresult import PairingResult  # noqa: F401
from .cosets import double_cosets, compute_lifts, lifts_through_domain, LiftSet  # noqa: F401
from .tailestimate import fit_c2, gl_qi_constant, lipschitz_constant, mean_value_constant, \
    counting_tail, area_tail, area_tail_integral, area_tail_integral_numeric, collar_half_width, TAIL_MODELS  # noqa: E501,F401
from .rierasum import grad_pairing, grad_norm_sq, grad_sqrt_norm, min_lift_separation, \
    lower_bound_ratio, short_curve_ratio, evaluate_pairing, initial_radius  # noqa: F401
