from .words import free_reduce, cyclic_reduce, invert_word  # noqa: F401
from .topology import Topology, PUNCTURE  # noqa: F401
from .fncoordinates import FNCoordinates, dehn_twist  # noqa: F401
from .geodesicclass import GeodesicClass  # noqa: F401
from .elementset import ElementSet, enumerate_elements  # noqa: F401
from .dirichletdomain import DirichletDomain  # noqa: F401
from .surfacegroup import SurfaceGroup  # noqa: F401
from .groupbuilder import build_group, torus_piece, commutator, DEFAULT_BUDGET  # noqa: F401
from .classenumerator import enumerate_classes, systole, is_conjugate, pants_curve_index  # noqa: F401
from .sampling import random_fn, random_thick_fn  # noqa: F401
from .wordoracle import reduced_words, canonical_cyclic_word, naive_systole, same_axis_class, axis_angles  # noqa: E501,F401
