import numpy as np

from ..setup_logger import logger
from ..laberror import BudgetExceeded
from ..config import EnumerationConfig
from ..hplane import MoebiusMap, axis_and_length
from .fncoordinates import FNCoordinates
from .geodesicclass import GeodesicClass
from .elementset import ElementSet
from .groupbuilder import build_group, DEFAULT_BUDGET


def adjugate(mats):
    """Inverse of unit determinant matrices."""
    out = np.empty_like(mats)
    out[..., 0, 0] = mats[..., 1, 1]
    out[..., 0, 1] = -mats[..., 0, 1]
    out[..., 1, 0] = -mats[..., 1, 0]
    out[..., 1, 1] = mats[..., 0, 0]
    return out


def axis_cosh2_distance(mats):
    """
    cosh^2 of the distance from i to the axes of hyperbolic matrices,
    (a^2 + b^2 + c^2 + d^2 - 2) / (tr^2 - 4).
    """
    tr = mats[..., 0, 0] + mats[..., 1, 1]
    s = np.sum(mats**2, axis=(-2, -1))
    return np.maximum((s - 2) / (tr**2 - 4), 1.0)


def conjugates(mats, g):
    """K g K^-1 for every K in `mats`."""
    return np.einsum('nij,jk,nkl->nil', mats, g, adjugate(mats))


def matches(candidates, h, tol):
    """True if any of the candidates equals h or h^-1 up to sign."""
    hi = adjugate(h)
    for x in (h, -h, hi, -hi):
        if np.any(np.max(np.abs(candidates - x), axis=(-2, -1)) <= tol):
            return True
    return False


class _Class():
    """Working record of a class while candidates are being classified."""

    def __init__(self, index, word, length, axis_distance, conjugates):
        self.index = index
        self.word = word
        self.length = length
        self.axis_distance = axis_distance
        self.conjugates = conjugates
        self.primitive = True


def _classify(elements: ElementSet, radius, l_max, domain_radius, config):
    mats = elements.mats
    disp_ok = elements.within(radius)
    traces = np.abs(elements.traces[disp_ok])
    hyp = traces > 2 + config.hyperbolic_tolerance
    idx = disp_ok[hyp]

    lengths = 2 * np.arccosh(np.abs(elements.traces[idx]) / 2)
    keep = lengths <= l_max + config.tie_tolerance
    idx, lengths = idx[keep], lengths[keep]

    axis_dist = np.arccosh(np.sqrt(axis_cosh2_distance(mats[idx])))
    keep = axis_dist <= domain_radius + 1e-9
    idx, lengths, axis_dist = idx[keep], lengths[keep], axis_dist[keep]

    order = np.lexsort((axis_dist, lengths))
    idx, lengths, axis_dist = idx[order], lengths[order], axis_dist[order]

    classes = []
    for i, l, d in zip(idx, lengths, axis_dist):
        h = mats[i]
        scale = max(1.0, float(np.max(np.abs(h))))
        tol = config.dedup_tolerance * scale
        word = elements.word(i)

        found = None
        for c in classes:
            if abs(c.length - l) <= config.dedup_tolerance * max(1.0, l) and matches(c.conjugates, h, tol):
                found = c
                break

        if found is None:
            # Conjugators move i by at most d(i, axis g) + d(i, axis h) + l / 2
            k = elements.within(d + domain_radius + l / 2 + 1e-6)
            classes.append(_Class(i, word, l, d, conjugates(mats[k], h)))
        elif (len(word), word) < (len(found.word), found.word):
            found.index, found.word, found.axis_distance = i, word, d

    _mark_powers(classes, mats, config)
    return classes


def _mark_powers(classes, mats, config):
    """
    A class is not primitive if a shorter class has a k-th power equal to it.
    The root shares the axis, so it is enough to test the powers of the class
    representatives against the conjugates of the longer class.
    """

    for c in classes:
        for r in classes:
            if r is c or r.length >= c.length:
                continue
            k = int(round(c.length / r.length))
            if k < 2 or abs(k * r.length - c.length) > config.dedup_tolerance * max(1.0, c.length):
                continue
            p = np.linalg.matrix_power(mats[r.index], k)
            tol = config.dedup_tolerance * max(1.0, float(np.max(np.abs(p))))
            if matches(c.conjugates, p, tol):
                c.primitive = False
                break


def enumerate_classes(grp, l_max, config: EnumerationConfig = None, budget=None):
    """
    One representative per unoriented conjugacy class of hyperbolic elements
    with translation length at most `l_max`.

    Every class has a representative whose axis meets the Dirichlet domain at
    i, hence passes within the domain radius D of i and moves i by at most
    l_max + 2D. All elements within that displacement are enumerated, the
    candidates are sorted by length and classified by an explicit conjugator
    search. The representative with the shortest word is kept.
    """

    config = config if config is not None else EnumerationConfig()
    if l_max <= 0:
        return []

    domain_radius = grp.base_domain_radius
    cutoff = l_max + 2 * domain_radius

    incomplete = None
    try:
        elements = grp.enumerate_elements(cutoff, budget=budget)
    except BudgetExceeded as ex:
        elements = ex.partial
        incomplete = ex

    classes = [_to_geodesic_class(elements, c)
               for c in _classify(elements, cutoff, l_max, domain_radius, config)]
    classes = [c for c in classes if c.length <= l_max + config.tie_tolerance]

    if incomplete is not None:
        raise BudgetExceeded(f'Element budget exhausted before certifying classes up to length {l_max:.6f}, '
                             f'{len(classes)} classes found.', partial=classes)

    logger.debug(f'Found {len(classes)} classes up to length {l_max:.6f} among {elements.count} elements '
                 f'within {cutoff:.3f}.')

    return classes


def _to_geodesic_class(elements, c):
    m = elements.matrix(c.index)
    axis, length = axis_and_length(m)
    return GeodesicClass(word=c.word, matrix=m, length=length, axis=axis,
                         primitive=c.primitive, axis_distance=float(c.axis_distance))


def systole(fn: FNCoordinates, config: EnumerationConfig = None, budget=None, grp=None):
    """
    Length of the shortest closed geodesic and the classes within the tie
    tolerance of it. The pants curves bound the systole from above, so only
    classes up to the shortest pants length are enumerated.
    """

    config = config if config is not None else EnumerationConfig()
    budget = budget if budget is not None else DEFAULT_BUDGET
    if grp is None:
        grp = build_group(fn, config=config, budget=budget)

    l_max = min(fn.lengths) + config.tie_tolerance
    classes = enumerate_classes(grp, l_max, config=config, budget=budget)
    shortest = min(c.length for c in classes)
    systolic = [c for c in classes if c.length <= shortest + config.tie_tolerance]

    return shortest, systolic


def is_conjugate(grp, g: MoebiusMap, h: MoebiusMap, config: EnumerationConfig = None):
    """
    True if g is conjugate in the group to h or to h^-1. Both must be
    hyperbolic elements of the group.
    """

    config = config if config is not None else EnumerationConfig()
    _, gl = axis_and_length(g)
    _, hl = axis_and_length(h)
    if abs(gl - hl) > config.dedup_tolerance * max(1.0, gl):
        return False

    dg = np.arccosh(np.sqrt(axis_cosh2_distance(g.matrix)))
    dh = np.arccosh(np.sqrt(axis_cosh2_distance(h.matrix)))
    elements = grp.enumerate_elements(dg + dh + gl / 2 + 1e-6)
    k = elements.within(dg + dh + gl / 2 + 1e-6)
    tol = config.dedup_tolerance * max(1.0, float(np.max(np.abs(h.matrix))))
    return matches(conjugates(elements.mats[k], g.matrix), h.matrix, tol)


def pants_curve_index(grp, cls: GeodesicClass, config: EnumerationConfig = None):
    """Index of the pants curve whose class is `cls`, or None."""

    for i in sorted(grp.pants_curve_words):
        if is_conjugate(grp, grp.pants_curve(i), cls.matrix, config=config):
            return i
    return None
