import numpy as np

from ..setup_logger import logger
from ..laberror import BudgetExceeded, NumericalError
from ..config import RieraConfig
from ..hplane import MoebiusMap, UHPoint, CROSSING, DISJOINT, axis_frame
from ..fuchsian import GeodesicClass, SurfaceGroup
from ..fuchsian.elementset import element_keys
from ..fuchsian.classenumerator import axis_cosh2_distance, conjugates
from .cosetterm import CosetTerm, f_term, crossing_term

COINCIDENCE_TOLERANCE = 1e-8
MERGE_TOLERANCE = 1e-7


class LiftSet():
    """
    Lifts of the axis of beta around the axis of alpha, one per double coset,
    in the frame where the axis of alpha is the imaginary axis. `coincident`
    is set when one of the lifts is the axis of alpha itself, which is the
    identity coset when beta is alpha.
    """

    def __init__(self, terms, coincident, radius, complete=True):
        self.terms = terms
        self.coincident = coincident
        self.radius = radius
        self.complete = complete


def lifts_through_domain(grp: SurfaceGroup, beta: GeodesicClass, budget=None):
    """
    Elements h, one per lift of the axis of beta meeting the ball of the domain
    radius around i, chosen among the h B^n so that h^-1 i projects onto the
    axis of beta within half a period of the foot of i. Returns the elements
    and the conjugates h b h^-1.
    """

    reach = grp.base_domain_radius
    s = float(np.arccosh(np.sqrt(axis_cosh2_distance(beta.matrix.matrix))))
    cover = reach + beta.length / 2 + s + 1e-6
    elements = grp.enumerate_elements(cover, budget=budget)

    h = elements.mats[elements.within(cover)]
    c = conjugates(h, beta.matrix.matrix)
    near = axis_cosh2_distance(c) <= np.cosh(reach + 1e-6)**2
    h, c = h[near], c[near]

    # h and h B^n give the same lift
    _, first = np.unique(np.array(element_keys(c)), return_index=True)
    first = np.sort(first)
    return h[first], c[first]


def compute_lifts(grp: SurfaceGroup, alpha: GeodesicClass, beta: GeodesicClass, radius,
                  config: RieraConfig = None, budget=None) -> LiftSet:
    """
    Every lift within `radius` of the axis of alpha has a translate by a power
    of alpha whose foot, or crossing point, lies on one period of the axis. The
    point of the lift closest to that period sits in some domain translate k D,
    so the lift is k h times the axis of beta where the axis of h b h^-1 meets
    D. The translates come from `enumerate_slab`, the h from
    `lifts_through_domain`.
    """

    config = config if config is not None else RieraConfig()
    frame = axis_frame(alpha.matrix, through=UHPoint(0.0, 1.0))
    f, fi = frame.matrix, frame.inverse().matrix
    period = alpha.length
    same_length = abs(alpha.length - beta.length) <= COINCIDENCE_TOLERANCE * max(1.0, alpha.length)

    complete = True
    try:
        tiles = grp.enumerate_slab(period, radius, frame, budget=budget)
    except BudgetExceeded as ex:
        tiles = ex.partial
        complete = False
    k = tiles.mats

    h, hc = lifts_through_domain(grp, beta, budget=budget)
    hf = np.einsum('ij,njk,kl->nil', fi, h, f)
    hc = np.einsum('ij,njk,kl->nil', fi, hc, f)

    coincident = False
    found = []
    for j in range(hc.shape[0]):
        c = conjugates(k, hc[j])
        ca, cb, cc, cd = c[:, 0, 0], c[:, 0, 1], c[:, 1, 0], c[:, 1, 1]

        # u = |p + q| / |p - q| for the endpoints p, q of c z^2 + (d - a) z - b = 0
        disc = np.sqrt(np.maximum((ca + cd)**2 - 4, 0.0))
        u = np.abs(ca - cd) / disc
        crossing = cb * cc > 0

        # u = 1 only for a lift sharing an endpoint with the axis, which in a
        # discrete group is the axis itself
        near = np.abs(u - 1) <= COINCIDENCE_TOLERANCE
        if same_length:
            coincident = coincident or bool(np.any(near))
            keep = ~near
        else:
            shared = near & ~crossing
            if np.any(shared):
                raise NumericalError(f'A lift of `{beta.word}` shares an endpoint with the axis of `{alpha.word}` '  # noqa: E501
                                     f'at working precision, u - 1 = {float(np.min(np.abs(u[shared] - 1))):.1e}.')  # noqa: E501
            keep = np.ones_like(near)

        distance = np.where(crossing, 0.0, np.arccosh(np.maximum(u, 1.0)))
        keep &= distance <= radius
        idx = np.nonzero(keep)[0]
        found.append((np.full(idx.size, j), idx, u[idx], crossing[idx], distance[idx],
                      np.sign((ca[idx] - cd[idx]) / cc[idx]), 0.5 * np.log(np.abs(cb[idx] / cc[idx]))))

    j, i, u, crossing, distance, side, log_height = [np.concatenate(x) for x in zip(*found)]

    # Normalize the foot into one period of alpha by a power of its scaling
    shift = np.floor(log_height / period)
    log_height = log_height - shift * period
    log_height[log_height >= period * (1 - 1e-12)] = 0.0

    unique = _merge(u, crossing, side, log_height, period)

    terms = []
    for n in unique:
        if crossing[n]:
            tag, value = CROSSING, float(min(u[n], 1.0))
            near = 1 - value < config.near_tangency
            term = crossing_term(min(value, 1 - config.near_tangency)) if near else crossing_term(value)
        else:
            tag, value = DISJOINT, float(max(u[n], 1.0 + 1e-15))
            near = False
            term = f_term(value)

        m = shift[n]
        local = np.diag([np.exp(-m * period / 2), np.exp(m * period / 2)]) @ k[i[n]] @ hf[j[n]]
        rep = MoebiusMap.from_matrix(f @ local @ fi)
        terms.append(CosetTerm(representative=rep, tag=tag, u=value, distance=float(distance[n]),
                               term_value=term, radial=float(np.exp(log_height[n])), near_tangent=near))

    terms.sort(key=lambda t: (t.distance, t.radial))
    logger.debug(f'Found {len(terms)} double cosets of `{alpha.word}`, `{beta.word}` within {radius:.3f} '
                 f'from {tiles.count} domain translates and {hc.shape[0]} lifts through the domain.')

    return LiftSet(terms, coincident, radius, complete=complete)


def _merge(u, crossing, side, log_height, period):
    """
    Indices of distinct lifts. A lift is fixed by its side of the axis, its
    foot and its u, so lifts agreeing in all three within tolerance are the
    same double coset.
    """

    order = np.argsort(u, kind='stable')
    kept = []
    for i in order:
        duplicate = False
        for j in reversed(kept):
            if u[i] - u[j] > MERGE_TOLERANCE * max(1.0, u[i]):
                break
            if crossing[i] != crossing[j] or side[i] != side[j]:
                continue
            dh = abs(log_height[i] - log_height[j])
            if min(dh, period - dh) <= MERGE_TOLERANCE * max(1.0, period):
                duplicate = True
                break
        if not duplicate:
            kept.append(i)
    return kept


def double_cosets(grp: SurfaceGroup, alpha: GeodesicClass, radius, beta: GeodesicClass = None,
                  config: RieraConfig = None, budget=None):
    """
    One term per nontrivial double coset <A> g <B> whose lift of the axis of
    beta lies within `radius` of the axis of alpha. Beta defaults to alpha.
    """

    beta = beta if beta is not None else alpha
    lifts = compute_lifts(grp, alpha, beta, radius, config=config, budget=budget)
    if not lifts.complete:
        raise BudgetExceeded(f'Element budget exhausted while enumerating double cosets within {radius:.3f}.',
                             partial=lifts.terms)
    return lifts.terms
