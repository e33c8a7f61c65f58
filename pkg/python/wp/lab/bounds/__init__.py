from .boundreport import BoundReport  # noqa: F401
from .systolebounds import sys_floor, sys_lower, sys_upper, sys_upper_closed, sys_upper_n_direction, \
    two_curve_lower, thick_part_floor, radius_margin, ricci_constant_estimate  # noqa: F401
from .inradius import inradius_bounds, inradius_upper_closed, inradius_n_bounds, leaf_distance_bounds  # noqa: E501,F401
from .volume import SPHERE_FACTORS, log_sphere_factor, log_ball_integral, log_volume_upper, volume_upper, \
    volume_upper_direct, inradius_radius, log_decay_ratio, decay_certificate, decay_onset  # noqa: F401
from .tables import bounds_table, inversions  # noqa: F401
