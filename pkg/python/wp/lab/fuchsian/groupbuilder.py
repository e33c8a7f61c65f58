import numpy as np

from ..setup_logger import logger
from ..laberror import UnsupportedTopology, RelationResidualTooLarge, BudgetExceeded
from ..config import EnumerationConfig
from ..hplane import MoebiusMap, axis_and_length, perpendicular_frame
from .fncoordinates import FNCoordinates
from .surfacegroup import SurfaceGroup
from .elementset import enumerate_elements
from .dirichletdomain import DirichletDomain

DEFAULT_BUDGET = 2_000_000


def commutator(x: MoebiusMap, y: MoebiusMap):
    return x @ y @ x.inverse() @ y.inverse()


def torus_piece(length, twist, boundary_length):
    """
    Generators A, B of a one-holed torus whose pants curve, the axis of A along
    the imaginary axis, has the given length and twist, and whose boundary
    [A, B] has the given length (zero for a puncture).

    B translates along the unit circle by the seam length m of the pants
    (l, l, L), cosh m = (cosh^2(l/2) + cosh(L/2)) / sinh^2(l/2), followed by
    the twist along the imaginary axis. Then tr [A, B] = -2 cosh(L/2).
    """

    m = 2 * np.arcsinh(np.cosh(boundary_length / 4) / np.sinh(length / 2))
    a = MoebiusMap.scaling(length)
    b = MoebiusMap.scaling(twist) @ MoebiusMap.unit_circle_translation(m)
    return a, b


def relator_residual(m: MoebiusMap):
    """Max-norm distance from the identity, up to sign."""
    return m.distance(MoebiusMap.identity())


def build_group(fn: FNCoordinates, config: EnumerationConfig = None, budget=DEFAULT_BUDGET,
                with_domain=True) -> SurfaceGroup:
    """
    Surface group of the given Fenchel-Nielsen coordinates. Without the
    Dirichlet domain the group can only evaluate words, which is all that
    length differentials need.
    """

    config = config if config is not None else EnumerationConfig()
    topology = fn.topology

    if (topology.genus, topology.punctures) == (2, 0):
        grp = _build_genus2(fn)
    elif (topology.genus, topology.punctures) == (1, 1):
        grp = _build_punctured_torus(fn)
    else:
        raise UnsupportedTopology(f'Surface type ({topology.genus}, {topology.punctures}) is not supported.')

    grp.budget = budget
    _check_group(grp, config)
    if not with_domain:
        return grp
    grp.domain = find_dirichlet_domain(grp, config, budget)

    logger.debug(f'Built surface group for lengths {fn.lengths} and twists {fn.twists}, '
                 f'residual {grp.relation_residual:.3e}, domain radius {grp.base_domain_radius:.4f}.')

    return grp


def _build_genus2(fn):
    l1, l2, lg = fn.lengths
    t1, t2, tg = fn.twists

    a1, b1 = torus_piece(l1, t1, lg)
    a2, b2 = torus_piece(l2, t2, lg)
    k1 = commutator(a1, b1)
    k2 = commutator(a2, b2)

    # Glue the second torus along the axis of k1 with opposite orientation, so
    # that [a, b][c, d] = 1, then twist along the separating curve
    g1 = perpendicular_frame(k1.inverse(), axis_and_length(a1)[0])
    g2 = perpendicular_frame(k2, axis_and_length(a2)[0])
    m = g1 @ MoebiusMap.scaling(tg) @ g2.inverse()

    # Move the basepoint onto the separating curve, between the two tori
    center = g1.inverse()
    generators = {
        'a': a1.conjugate(center),
        'b': b1.conjugate(center),
        'c': a2.conjugate(center @ m),
        'd': b2.conjugate(center @ m),
    }
    relator = commutator(generators['a'], generators['b']) @ commutator(generators['c'], generators['d'])
    residual = relator_residual(relator)

    return SurfaceGroup(fn, generators, {0: 'a', 1: 'c', 2: 'abAB'}, residual)


def _build_punctured_torus(fn):
    a, b = torus_piece(fn.lengths[0], fn.twists[0], 0.0)

    # No relation, the commutator must be parabolic around the puncture
    residual = abs(commutator(a, b).trace + 2)

    return SurfaceGroup(fn, {'a': a, 'b': b}, {0: 'a'}, residual)


def _check_group(grp, config):
    if grp.relation_residual > config.residual_tolerance:
        raise RelationResidualTooLarge(f'Relation residual {grp.relation_residual:.3e} exceeds '
                                       f'{config.residual_tolerance:.1e}.')

    for i, word in grp.pants_curve_words.items():
        expected = 2 * np.cosh(grp.fn.lengths[i] / 2)
        error = abs(grp.pants_curve(i).abs_trace - expected)
        if error > config.residual_tolerance * max(1.0, expected):
            raise RelationResidualTooLarge(f'Trace of pants curve {i} is off by {error:.3e}.')


def find_dirichlet_domain(grp, config, budget):
    """
    Grow the set of elements around the basepoint until the clipped polygon
    passes the area and side pairing checks.
    """

    radius = grp.max_generator_displacement() + 0.5
    domain = None
    for round in range(config.max_domain_rounds):
        try:
            elements = enumerate_elements(grp.standard_generators(), radius, budget)
        except BudgetExceeded as ex:
            elements = ex.partial
            logger.warning(
                f'Element budget exhausted while searching the Dirichlet domain at radius {radius:.3f}.')

        domain = DirichletDomain(elements, grp.topology.area, config.cusp_cutoff)
        if domain.is_complete():
            logger.debug(f'Dirichlet domain found in round {round} at search radius {radius:.3f}, '
                         f'{len(set(domain.labels))} sides, radius {domain.radius:.4f}.')
            return domain

        if np.isfinite(domain.radius):
            radius = min(2 * radius, max(radius + 0.5, 2 * domain.radius + 0.1))
        else:
            radius = 2 * radius

    logger.warning(f'Dirichlet domain check did not pass after {config.max_domain_rounds} rounds, '
                   f'using an over-estimated radius {domain.radius:.4f}.')
    return domain
