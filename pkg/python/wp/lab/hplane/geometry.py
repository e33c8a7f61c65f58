from collections import namedtuple
import numpy as np

from ..constants import Constants
from ..laberror import DomainError, NotHyperbolic, SharedEndpoint
from .uhpoint import UHPoint
from .moebiusmap import MoebiusMap
from .geodesicline import GeodesicLine

__all__ = [
    'CROSSING', 'DISJOINT', 'GeodesicU', 'apply', 'dist', 'dist_to_imaginary_axis', 'dist_to_imaginary_axis_xy',  # noqa: E501
    'dist_to_axis_slab_xy',
    'cross_ratio', 'geodesic_u', 'line_distance', 'is_hyperbolic', 'translation_length', 'fixed_points',
    'axis_and_length', 'frame_map', 'axis_frame', 'perpendicular_frame', 'dist_to_geodesic', 'displacement', 'moebius_to_axis',  # noqa: E501
]

CROSSING = 'crossing'
DISJOINT = 'disjoint'

GeodesicU = namedtuple('GeodesicU', ['tag', 'value'])


def apply(m: MoebiusMap, z: UHPoint) -> UHPoint:
    w = (m.a * z.z + m.b) / (m.c * z.z + m.d)
    return UHPoint.from_complex(w)


def dist(z: UHPoint, w: UHPoint) -> float:
    # 2 arcsinh form of cosh d = 1 + |z - w|^2 / (2 Im z Im w), accurate for close points
    return float(2 * np.arcsinh(abs(z.z - w.z) / (2 * np.sqrt(z.y * w.y))))


def dist_to_imaginary_axis(z: UHPoint) -> float:
    """
    Distance from the imaginary axis, ln|csc theta + |cot theta||, evaluated as
    ln((|z| + |x|) / y) to avoid cancellation near the axis.
    """
    return float(np.log((np.hypot(z.x, z.y) + abs(z.x)) / z.y))


def dist_to_imaginary_axis_xy(x, y):
    """Vectorized form of `dist_to_imaginary_axis` on coordinate arrays."""
    x, y = np.asarray(x, dtype=float), np.asarray(y, dtype=float)
    return np.log((np.hypot(x, y) + np.abs(x)) / y)


def dist_to_axis_slab_xy(x, y, length, depth):
    """
    Lower bound of the distance from x + iy to the points within `depth` of the
    imaginary axis whose projection onto the axis lies between i and
    e^length i. The bound is the largest of the distances to the three convex
    pieces: the depth neighbourhood and the half-planes outside |z| = 1 and
    inside |z| = e^length. It vanishes on the slab.
    """

    x, y = np.asarray(x, dtype=float), np.asarray(y, dtype=float)
    r2 = x**2 + y**2
    s = np.exp(-length)
    # sinh d(z, {|w| = 1}) = ||z|^2 - 1| / (2 Im z)
    below = np.arcsinh(np.maximum(1 - r2, 0.0) / (2 * y))
    above = np.arcsinh(np.maximum(r2 * s * s - 1, 0.0) / (2 * y * s))
    outside = np.maximum(dist_to_imaginary_axis_xy(x, y) - depth, 0.0)
    return np.maximum(outside, np.maximum(below, above))


def cross_ratio(a, b, c, d):
    """
    Cross ratio (a - c)(b - d) / ((a - d)(b - c)) of four boundary points, any of
    which may be infinite. For the line (a, b) against (c, d) it is negative
    exactly when the endpoints interleave.
    """

    if np.isinf(a):
        return (b - d) / (b - c)
    elif np.isinf(b):
        return (a - c) / (a - d)
    elif np.isinf(c):
        return (b - d) / (a - d)
    elif np.isinf(d):
        return (a - c) / (b - c)
    else:
        return (a - c) * (b - d) / ((a - d) * (b - c))


def _same_endpoint(x, y):
    if np.isinf(x) or np.isinf(y):
        return np.isinf(x) and np.isinf(y)
    return abs(x - y) <= Constants.ENDPOINT_TOLERANCE * max(1.0, abs(x), abs(y))


def geodesic_u(g1: GeodesicLine, g2: GeodesicLine) -> GeodesicU:
    """
    Cosine of the intersection angle of crossing lines, or the hyperbolic cosine
    of the distance between disjoint lines, from the cross ratio of the endpoints.
    """

    for x in g1.endpoints:
        for y in g2.endpoints:
            if _same_endpoint(x, y):
                raise SharedEndpoint(f'Geodesics {g1} and {g2} share the ideal endpoint {x}.')

    cr = cross_ratio(g1.p, g1.q, g2.p, g2.q)
    u = abs((1 + cr) / (1 - cr))
    if cr < 0:
        return GeodesicU(CROSSING, float(min(u, 1.0)))
    else:
        return GeodesicU(DISJOINT, float(max(u, 1.0)))


def line_distance(g1: GeodesicLine, g2: GeodesicLine) -> float:
    tag, u = geodesic_u(g1, g2)
    return 0.0 if tag == CROSSING else float(np.arccosh(u))


def is_hyperbolic(m: MoebiusMap, tol=Constants.HYPERBOLIC_TOLERANCE):
    return m.abs_trace > 2 + tol


def translation_length(m: MoebiusMap) -> float:
    if not is_hyperbolic(m):
        raise NotHyperbolic(f'Moebius map with trace {m.trace} is not hyperbolic.')
    return float(2 * np.arccosh(m.abs_trace / 2))


def fixed_points(m: MoebiusMap):
    """
    Repelling and attracting fixed points of a hyperbolic map, with `np.inf`
    for infinity.
    """

    if not is_hyperbolic(m):
        raise NotHyperbolic(f'Moebius map with trace {m.trace} is not hyperbolic.')

    a, b, c, d = m.a, m.b, m.c, m.d
    scale = max(abs(a), abs(b), abs(c), abs(d))
    if abs(c) <= 1e-15 * scale:
        x = b / (d - a)
        if abs(a) > abs(d):
            return x, np.inf
        else:
            return np.inf, x

    s = np.sqrt((a + d)**2 - 4)
    z1 = (a - d + s) / (2 * c)
    z2 = (a - d - s) / (2 * c)

    # A fixed point is attracting where the derivative 1 / (cz + d)^2 is below one
    if abs(c * z1 + d) > 1:
        return z2, z1
    else:
        return z1, z2


def axis_and_length(m: MoebiusMap):
    rep, att = fixed_points(m)
    return GeodesicLine(rep, att), translation_length(m)


def _boundary_vector(x):
    return np.array([1.0, 0.0]) if np.isinf(x) else np.array([x, 1.0])


def frame_map(source, target, through: UHPoint = None) -> MoebiusMap:
    """
    Moebius map sending 0 to `source` and infinity to `target`, so that the
    imaginary axis oriented upwards goes to the line oriented from `source` to
    `target`. When `through` is given, i is sent to the foot of the
    perpendicular dropped from `through` to that line.
    """

    v_t = _boundary_vector(target)
    v_s = _boundary_vector(source)
    det = v_t[0] * v_s[1] - v_s[0] * v_t[1]
    if det < 0:
        v_s = -v_s
        det = -det
    n = MoebiusMap(v_t[0], v_s[0], v_t[1], v_s[1])

    if through is not None:
        w = apply(n.inverse(), through)
        s = w.r
        n = n @ MoebiusMap(np.sqrt(s), 0.0, 0.0, 1 / np.sqrt(s))

    return n


def axis_frame(m: MoebiusMap, through: UHPoint = None) -> MoebiusMap:
    """Frame map of the oriented axis of a hyperbolic map, see `frame_map`."""
    rep, att = fixed_points(m)
    return frame_map(rep, att, through=through)


def dist_to_geodesic(z: UHPoint, line: GeodesicLine) -> float:
    n = frame_map(line.p, line.q)
    return dist_to_imaginary_axis(apply(n.inverse(), z))


def displacement(m: MoebiusMap, z: UHPoint = None) -> float:
    z = z if z is not None else UHPoint(0.0, 1.0)
    return dist(z, apply(m, z))


def perpendicular_frame(m: MoebiusMap, line: GeodesicLine) -> MoebiusMap:
    """
    Frame map of the oriented axis of `m` sending i to the foot of the common
    perpendicular with the disjoint line `line`.
    """

    n = axis_frame(m)
    image = line.image(n.inverse())
    if image.is_vertical:
        raise SharedEndpoint(f'Line {line} shares an endpoint with the axis.')
    if image.p * image.q <= 0:
        raise DomainError(f'Line {line} crosses the axis.')
    s = np.sqrt(image.p * image.q)
    return n @ MoebiusMap(np.sqrt(s), 0.0, 0.0, 1 / np.sqrt(s))


def moebius_to_axis(line: GeodesicLine) -> MoebiusMap:
    """Moebius map sending the imaginary axis onto `line`."""
    return frame_map(line.p, line.q)
