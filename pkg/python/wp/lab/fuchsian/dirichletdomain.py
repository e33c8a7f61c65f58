import numpy as np

from ..setup_logger import logger

IDEAL_TOLERANCE = 1e-6
MERGE_TOLERANCE = 1e-10
BOX_LABEL = -1


def klein_points(mats):
    """
    Images of the basepoint i under the given elements, in the Klein model
    centered at i. The Cayley map sends z to (z - i) / (z + i) in the Poincare
    disk, and a Poincare point w goes to 2w / (1 + |w|^2).
    """

    a, b, c, d = mats[:, 0, 0], mats[:, 0, 1], mats[:, 1, 0], mats[:, 1, 1]
    z = (a * 1j + b) / (c * 1j + d)
    w = (z - 1j) / (z + 1j)
    k = 2 * w / (1 + np.abs(w)**2)
    return np.stack([k.real, k.imag], axis=-1)


def klein_to_poincare(k):
    k = np.asarray(k)
    r2 = np.sum(k**2, axis=-1)
    return (k[..., 0] + 1j * k[..., 1]) / (1 + np.sqrt(np.maximum(0.0, 1 - r2)))


def bisector(k):
    """
    Half-plane {x : n.x <= h} of the Klein disk closer to the center than to the
    point `k` in the hyperbolic metric. Bisectors are straight lines here.
    """
    return k, 1 - np.sqrt(max(0.0, 1 - float(np.dot(k, k))))


def clip(polygon, normal, h, label):
    """
    Clip a convex polygon, a list of (vertex, label of the edge leaving the
    vertex), by the half-plane normal.x <= h.
    """

    out = []
    n = len(polygon)
    for i in range(n):
        p, lp = polygon[i]
        q, _ = polygon[(i + 1) % n]
        sp = np.dot(normal, p) - h
        sq = np.dot(normal, q) - h
        if sp <= 0 and sq <= 0:
            out.append((p, lp))
        elif sp <= 0 < sq:
            out.append((p, lp))
            x = p + (q - p) * (sp / (sp - sq))
            out.append((x, label))
        elif sq <= 0 < sp:
            x = p + (q - p) * (sp / (sp - sq))
            out.append((x, lp))
    return out


def interior_angle(v, prev, next):
    """Hyperbolic angle at the Poincare point v between the geodesics to prev and next."""
    phi = lambda z: (z - v) / (1 - np.conj(v) * z)  # noqa: E731
    a = np.angle(phi(prev))
    b = np.angle(phi(next))
    t = abs(a - b) % (2 * np.pi)
    return min(t, 2 * np.pi - t)


class DirichletDomain():
    """
    Dirichlet polygon of a set of group elements at the basepoint i, computed by
    clipping in the Klein model. The polygon contains the true Dirichlet domain of
    the group; when its area matches the Gauss-Bonnet area of the surface the two
    coincide and the sides are the side pairings.
    """

    def __init__(self, elements, area, cusp_cutoff):
        self.__elements = elements
        self.__expected_area = area
        self.__cusp_cutoff = cusp_cutoff

        self.__vertices = None
        self.__labels = None
        self.__radius = None
        self.__area = None
        self.__ideal_vertices = 0
        self.__bounded = False

        self.__compute()

    def __get_vertices(self):
        return self.__vertices

    vertices = property(__get_vertices)

    def __get_labels(self):
        return self.__labels

    labels = property(__get_labels)

    def __get_radius(self):
        return self.__radius

    radius = property(__get_radius)

    def __get_area(self):
        return self.__area

    area = property(__get_area)

    def __get_ideal_vertices(self):
        return self.__ideal_vertices

    ideal_vertices = property(__get_ideal_vertices)

    def __get_cusp_truncated(self):
        return self.__ideal_vertices > 0

    cusp_truncated = property(__get_cusp_truncated)

    def __compute(self):
        e = self.__elements
        order = np.argsort(e.cosh_disp)
        order = order[e.cosh_disp[order] > 1 + 1e-12]
        ks = klein_points(e.mats[order])

        polygon = [(np.array(v, dtype=float), BOX_LABEL)
                   for v in [(-1.5, -1.5), (1.5, -1.5), (1.5, 1.5), (-1.5, 1.5)]]
        for i, k in zip(order, ks):
            normal, h = bisector(k)
            # Skip half-planes that contain the whole polygon
            if max(np.dot(normal, p) for p, _ in polygon) <= h:
                continue
            polygon = clip(polygon, normal, h, int(i))

        polygon = self.__merge_vertices(polygon)
        self.__vertices = np.array([p for p, _ in polygon])
        self.__labels = [l for _, l in polygon]

        norms = np.sqrt(np.sum(self.__vertices**2, axis=-1))
        self.__bounded = BOX_LABEL not in self.__labels and bool(np.all(norms <= 1 + IDEAL_TOLERANCE))
        ideal = norms >= 1 - IDEAL_TOLERANCE
        self.__ideal_vertices = int(np.sum(ideal))

        if not self.__bounded:
            self.__radius = np.inf
            self.__area = np.inf
            return

        finite = norms[~ideal]
        radius = float(np.max(np.arctanh(finite))) if finite.size > 0 else 0.0
        if self.__ideal_vertices > 0:
            radius = max(radius, self.__cusp_cutoff)
        self.__radius = radius

        # Gauss-Bonnet, ideal vertices have zero angle
        pts = klein_to_poincare(self.__vertices)
        n = len(pts)
        angles = 0.0
        for i in range(n):
            if not ideal[i]:
                angles += interior_angle(pts[i], pts[i - 1], pts[(i + 1) % n])
        self.__area = (n - 2) * np.pi - angles

    @staticmethod
    def __merge_vertices(polygon):
        out = []
        for p, l in polygon:
            if out and np.linalg.norm(out[-1][0] - p) <= MERGE_TOLERANCE:
                # Zero length edge, keep the label of the edge that continues
                out[-1] = (out[-1][0], l)
            else:
                out.append((p, l))
        while len(out) > 1 and np.linalg.norm(out[-1][0] - out[0][0]) <= MERGE_TOLERANCE:
            out.pop()
        return out

    def is_complete(self, tol=1e-6):
        """
        The polygon is the Dirichlet domain of the group when it is bounded, its
        area matches Gauss-Bonnet and its sides are paired by inverse elements.
        """

        if not self.__bounded:
            return False
        if abs(self.__area - self.__expected_area) > tol * self.__expected_area:
            logger.debug(f'Dirichlet polygon area {self.__area:.9f} differs from {self.__expected_area:.9f}.')
            return False

        labels = set(self.__labels)
        for l in labels:  # noqa: E741
            j = self.__elements.find(np.linalg.inv(self.__elements.mats[l]))
            if j is None or j not in labels:
                logger.debug(f'Side of element {l} is not paired.')
                return False
        return True

    def side_pairings(self):
        """(matrix, word) pairs of the side elements, closed under inversion."""
        return [(self.__elements.mats[l], self.__elements.word(l)) for l in sorted(set(self.__labels))]  # noqa: E501,E741
